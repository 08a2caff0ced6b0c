#pragma once

#include <cstdint>
#include <compare>

namespace ybk::modalg {

/// Canonical representative mod m. Reduce negatives on construction.
inline std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Extended Euclid on non-negative inputs: returns g and sets x, y with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

class Residue {
 public:
  /// Throws InvalidArgument for modulus < 2.
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_unit() const noexcept { return gcd(value_, modulus_) == 1; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a) { return Residue(-a.value_, a.modulus_); }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// b with a*b == 1 (mod m). Throws NotAUnit when gcd(a, m) != 1.
Residue mod_inverse(const Residue& a);

}  // namespace ybk::modalg
