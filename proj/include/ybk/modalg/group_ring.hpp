#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybk/modalg/matrix.hpp"

namespace ybk::modalg {

/// Element of Z[Z_m]: coefficient of xi^j at index j. Coefficients are unbounded.
class GroupRingElement {
 public:
  /// Zero element.
  explicit GroupRingElement(std::int64_t modulus);
  GroupRingElement(std::int64_t modulus, std::vector<BigInt> coefficients);

  std::int64_t modulus() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& operator[](std::int64_t exponent) const { return coeffs_.at(exponent); }

  bool is_zero() const;
  BigInt augmentation() const;  // sum of coefficients

  /// Adds c * xi^e in place, e taken mod m.
  void add_term(const BigInt& c, std::int64_t e);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_term(const BigInt& coefficient, std::int64_t exponent, std::int64_t modulus);

inline GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) { return gr_add(a, b); }
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return gr_mul(a, b); }

/// `c0 + c1*x + c2*x^2 + ...`, zero terms omitted, `0` for the zero element.
std::string render(const GroupRingElement& g);

/// {"modulus": m, "coefficients": [...]}; coefficients beyond int64 are emitted as decimal strings.
nlohmann::json to_json(const GroupRingElement& g);
GroupRingElement group_ring_from_json(const nlohmann::json& j);

}  // namespace ybk::modalg
