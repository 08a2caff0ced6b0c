#pragma once

#include <cstdint>
#include <vector>

#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybcore {

/// alpha = a0 + sum_{i=1}^{h-1} a_i a^i + sum_{j=1}^{k-1} b_j b^j in
/// Z_q[a, b] / (ab, a^h, b^k), where a = 1 - s and b = 1 - t.
struct OmegaElement {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> a_coeffs;  // coefficients of a^1 .. a^{h-1}
  std::vector<std::int64_t> b_coeffs;  // coefficients of b^1 .. b^{k-1}

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
};

/// The truncated ring carrying the affine YB structure. Elements are encoded
/// as base-q digits (a0, a_1..a_{h-1}, b_1..b_{k-1}), a0 most significant.
class OmegaRing {
 public:
  OmegaRing(std::int64_t q, std::int64_t h, std::int64_t k);

  std::int64_t q() const noexcept { return q_; }
  std::int64_t h() const noexcept { return h_; }
  std::int64_t k() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }  // q^{h+k-1}

  Elem encode(const OmegaElement& e) const;
  OmegaElement decode(Elem e) const;

  /// Coefficient of a^i (i = 0 is the constant term), 0 beyond the truncation.
  std::int64_t a_coeff(const OmegaElement& e, std::int64_t i) const;
  std::int64_t b_coeff(const OmegaElement& e, std::int64_t j) const;

  OmegaElement add(const OmegaElement& x, const OmegaElement& y) const;
  OmegaElement sub(const OmegaElement& x, const OmegaElement& y) const;
  OmegaElement mul(const OmegaElement& x, const OmegaElement& y) const;
  OmegaElement times_a(const OmegaElement& x) const;
  OmegaElement times_b(const OmegaElement& x) const;
  OmegaElement one() const;
  OmegaElement gen_a() const;
  OmegaElement gen_b() const;

  /// R(alpha, beta) = (beta + a(alpha - beta), alpha + b(beta - alpha)).
  std::pair<OmegaElement, OmegaElement> braid(const OmegaElement& x, const OmegaElement& y) const;

 private:
  OmegaElement normalized(OmegaElement e) const;

  std::int64_t q_, h_, k_;
  std::uint32_t size_;
};

/// YB set on the Omega_q^{(h,k)} carrier.
FiniteYBSet make_omega(std::int64_t q, std::int64_t h, std::int64_t k);

/// True iff S on Omega_q^{(h+1,k+1)} coincides with the extension of
/// Omega_q^{(h,k)} by A = Z_q x Z_q with
///   psi1(a, b) = (a_{h-1} - b_{h-1}, 0),  psi2(a, b) = (0, b'_{k-1} - a'_{k-1})
/// under alpha -> ((alpha_h, alpha'_k), alpha-bar).
bool omega_extension_check(std::int64_t q, std::int64_t h, std::int64_t k);

}  // namespace ybk::ybcore
