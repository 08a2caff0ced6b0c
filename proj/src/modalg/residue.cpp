#include "ybk/modalg/residue.hpp"

#include <cstdlib>
#include <string>

#include "ybk/common/error.hpp"

namespace ybk::modalg {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  x = x0;
  y = y0;
  return a;
}

namespace {
std::int64_t checked_modulus(std::int64_t m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2, got " + std::to_string(m));
  return m;
}

void same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorKind::ModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
}
}  // namespace

Residue::Residue(std::int64_t value, std::int64_t modulus)
    : value_(reduce(value, checked_modulus(modulus))), modulus_(modulus) {}

Residue operator+(const Residue& a, const Residue& b) {
  same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  same_modulus(a, b);
  return Residue(static_cast<std::int64_t>(static_cast<__int128>(a.value_) * b.value_ % a.modulus_),
                 a.modulus_);
}

Residue mod_inverse(const Residue& a) {
  std::int64_t x = 0, y = 0;
  std::int64_t g = ext_gcd(a.value(), a.modulus(), x, y);
  if (g != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(a.value()) + " mod " +
                                         std::to_string(a.modulus()) + " (gcd " +
                                         std::to_string(g) + ")");
  }
  return Residue(x, a.modulus());
}

}  // namespace ybk::modalg
