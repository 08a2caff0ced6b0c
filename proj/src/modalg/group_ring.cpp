#include "ybk/modalg/group_ring.hpp"

#include <limits>
#include <sstream>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::modalg {

namespace {
void same_modulus(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorKind::ModulusMismatch,
                "group ring Z[Z_" + std::to_string(a.modulus()) + "] vs Z[Z_" +
                    std::to_string(b.modulus()) + "]");
  }
}
}  // namespace

GroupRingElement::GroupRingElement(std::int64_t modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidArgument, "group ring modulus must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(modulus), BigInt(0));
}

GroupRingElement::GroupRingElement(std::int64_t modulus, std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (modulus < 1 || coeffs_.size() != static_cast<std::size_t>(modulus)) {
    throw Error(ErrorKind::InvalidArgument, "coefficient count must equal the modulus");
  }
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

BigInt GroupRingElement::augmentation() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void GroupRingElement::add_term(const BigInt& c, std::int64_t e) {
  coeffs_[static_cast<std::size_t>(reduce(e, modulus()))] += c;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
  same_modulus(a, b);
  GroupRingElement out = a;
  for (std::int64_t j = 0; j < b.modulus(); ++j) out.add_term(b[j], j);
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  same_modulus(a, b);
  GroupRingElement out(a.modulus());
  for (std::int64_t i = 0; i < a.modulus(); ++i) {
    if (a[i] == 0) continue;
    for (std::int64_t j = 0; j < b.modulus(); ++j) {
      if (b[j] != 0) out.add_term(a[i] * b[j], i + j);
    }
  }
  return out;
}

GroupRingElement gr_term(const BigInt& coefficient, std::int64_t exponent, std::int64_t modulus) {
  GroupRingElement out(modulus);
  out.add_term(coefficient, exponent);
  return out;
}

std::string render(const GroupRingElement& g) {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t j = 0; j < g.modulus(); ++j) {
    const BigInt& c = g[j];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag;
    if (j == 1) os << "*x";
    else if (j > 1) os << "*x^" << j;
    first = false;
  }
  return first ? "0" : os.str();
}

nlohmann::json to_json(const GroupRingElement& g) {
  nlohmann::json coeffs = nlohmann::json::array();
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : g.coefficients()) {
    if (c >= lo && c <= hi) coeffs.push_back(c.convert_to<std::int64_t>());
    else coeffs.push_back(c.str());
  }
  return {{"modulus", g.modulus()}, {"coefficients", coeffs}};
}

GroupRingElement group_ring_from_json(const nlohmann::json& j) {
  try {
    const auto m = j.at("modulus").get<std::int64_t>();
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coefficients")) {
      coeffs.push_back(c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()));
    }
    return GroupRingElement(m, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("group ring json: ") + e.what());
  }
}

}  // namespace ybk::modalg
