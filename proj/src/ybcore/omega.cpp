#include "ybk/ybcore/omega.hpp"

#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"
#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybcore/extension.hpp"

namespace ybk::ybcore {

using modalg::reduce;

OmegaRing::OmegaRing(std::int64_t q, std::int64_t h, std::int64_t k) : q_(q), h_(h), k_(k) {
  if (q < 2 || h < 1 || k < 1) {
    throw Error(ErrorKind::InvalidArgument, "Omega ring needs q >= 2, h >= 1, k >= 1");
  }
  std::uint64_t n = 1;
  for (std::int64_t i = 0; i < h + k - 1; ++i) {
    n *= static_cast<std::uint64_t>(q);
    if (n > 46340) throw Error(ErrorKind::ResourceBound, "Omega ring too large for table storage");
  }
  size_ = static_cast<std::uint32_t>(n);
}

OmegaElement OmegaRing::normalized(OmegaElement e) const {
  e.a0 = reduce(e.a0, q_);
  e.a_coeffs.resize(static_cast<std::size_t>(h_ - 1), 0);
  e.b_coeffs.resize(static_cast<std::size_t>(k_ - 1), 0);
  for (auto& c : e.a_coeffs) c = reduce(c, q_);
  for (auto& c : e.b_coeffs) c = reduce(c, q_);
  return e;
}

Elem OmegaRing::encode(const OmegaElement& raw) const {
  const OmegaElement e = normalized(raw);
  std::uint64_t idx = static_cast<std::uint64_t>(e.a0);
  for (auto c : e.a_coeffs) idx = idx * q_ + c;
  for (auto c : e.b_coeffs) idx = idx * q_ + c;
  return static_cast<Elem>(idx);
}

OmegaElement OmegaRing::decode(Elem code) const {
  OmegaElement e;
  e.a_coeffs.resize(static_cast<std::size_t>(h_ - 1));
  e.b_coeffs.resize(static_cast<std::size_t>(k_ - 1));
  std::uint64_t idx = code;
  for (auto it = e.b_coeffs.rbegin(); it != e.b_coeffs.rend(); ++it) {
    *it = static_cast<std::int64_t>(idx % q_);
    idx /= q_;
  }
  for (auto it = e.a_coeffs.rbegin(); it != e.a_coeffs.rend(); ++it) {
    *it = static_cast<std::int64_t>(idx % q_);
    idx /= q_;
  }
  e.a0 = static_cast<std::int64_t>(idx);
  return e;
}

std::int64_t OmegaRing::a_coeff(const OmegaElement& e, std::int64_t i) const {
  if (i == 0) return e.a0;
  if (i < 1 || i >= h_) return 0;
  return e.a_coeffs[static_cast<std::size_t>(i - 1)];
}

std::int64_t OmegaRing::b_coeff(const OmegaElement& e, std::int64_t j) const {
  if (j == 0) return e.a0;
  if (j < 1 || j >= k_) return 0;
  return e.b_coeffs[static_cast<std::size_t>(j - 1)];
}

OmegaElement OmegaRing::add(const OmegaElement& x, const OmegaElement& y) const {
  OmegaElement a = normalized(x), b = normalized(y);
  a.a0 += b.a0;
  for (std::size_t i = 0; i < a.a_coeffs.size(); ++i) a.a_coeffs[i] += b.a_coeffs[i];
  for (std::size_t j = 0; j < a.b_coeffs.size(); ++j) a.b_coeffs[j] += b.b_coeffs[j];
  return normalized(std::move(a));
}

OmegaElement OmegaRing::sub(const OmegaElement& x, const OmegaElement& y) const {
  OmegaElement a = normalized(x), b = normalized(y);
  a.a0 -= b.a0;
  for (std::size_t i = 0; i < a.a_coeffs.size(); ++i) a.a_coeffs[i] -= b.a_coeffs[i];
  for (std::size_t j = 0; j < a.b_coeffs.size(); ++j) a.b_coeffs[j] -= b.b_coeffs[j];
  return normalized(std::move(a));
}

OmegaElement OmegaRing::mul(const OmegaElement& x, const OmegaElement& y) const {
  OmegaElement out;
  out.a_coeffs.assign(static_cast<std::size_t>(h_ - 1), 0);
  out.b_coeffs.assign(static_cast<std::size_t>(k_ - 1), 0);
  out.a0 = a_coeff(x, 0) * a_coeff(y, 0);
  // ab = 0, so only pure a-powers and pure b-powers survive.
  for (std::int64_t i = 0; i < h_; ++i) {
    for (std::int64_t j = 0; i + j < h_; ++j) {
      if (i + j == 0) continue;
      out.a_coeffs[static_cast<std::size_t>(i + j - 1)] += a_coeff(x, i) * a_coeff(y, j) % q_;
    }
  }
  for (std::int64_t i = 0; i < k_; ++i) {
    for (std::int64_t j = 0; i + j < k_; ++j) {
      if (i + j == 0) continue;
      out.b_coeffs[static_cast<std::size_t>(i + j - 1)] += b_coeff(x, i) * b_coeff(y, j) % q_;
    }
  }
  return normalized(std::move(out));
}

OmegaElement OmegaRing::times_a(const OmegaElement& x) const { return mul(gen_a(), x); }
OmegaElement OmegaRing::times_b(const OmegaElement& x) const { return mul(gen_b(), x); }

OmegaElement OmegaRing::one() const { return normalized(OmegaElement{1, {}, {}}); }

OmegaElement OmegaRing::gen_a() const {
  OmegaElement e = normalized({});
  if (h_ > 1) e.a_coeffs[0] = 1;
  return e;
}

OmegaElement OmegaRing::gen_b() const {
  OmegaElement e = normalized({});
  if (k_ > 1) e.b_coeffs[0] = 1;
  return e;
}

std::pair<OmegaElement, OmegaElement> OmegaRing::braid(const OmegaElement& x, const OmegaElement& y) const {
  return {add(y, times_a(sub(x, y))), add(x, times_b(sub(y, x)))};
}

FiniteYBSet make_omega(std::int64_t q, std::int64_t h, std::int64_t k) {
  const OmegaRing ring(q, h, k);
  const std::uint32_t n = ring.size();
  std::vector<OmegaElement> elems(n);
  for (Elem e = 0; e < n; ++e) elems[e] = ring.decode(e);
  std::vector<Elem> r1(static_cast<std::size_t>(n) * n), r2(r1.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      auto [s1, s2] = ring.braid(elems[x], elems[y]);
      const std::size_t idx = static_cast<std::size_t>(x) * n + y;
      r1[idx] = ring.encode(s1);
      r2[idx] = ring.encode(s2);
    }
  }
  return finalize(FiniteYBSet(n, std::move(r1), std::move(r2)));
}

bool omega_extension_check(std::int64_t q, std::int64_t h, std::int64_t k) {
  const OmegaRing small(q, h, k), big(q, h + 1, k + 1);
  const FiniteYBSet base = make_omega(q, h, k);
  const std::uint32_t n = base.size();

  // A = Z_q x Z_q realized as two nested single-modulus extensions:
  // inner by the b-component, outer by the a-component.
  CochainTable psi1_a(2, n, q), psi2_a(2, n, q), psi1_b(2, n, q), psi2_b(2, n, q);
  for (Elem x = 0; x < n; ++x) {
    const OmegaElement ex = small.decode(x);
    for (Elem y = 0; y < n; ++y) {
      const OmegaElement ey = small.decode(y);
      const std::array<Elem, 2> t{x, y};
      psi1_a.set(t, small.a_coeff(ex, h - 1) - small.a_coeff(ey, h - 1));
      psi2_b.set(t, small.b_coeff(ey, k - 1) - small.b_coeff(ex, k - 1));
    }
  }
  const FiniteYBSet inner = extend(base, q, psi1_b, psi2_b);
  const auto proj = extension_projection(n, q);
  const FiniteYBSet outer = extend(inner, q, pullback(psi1_a, proj), pullback(psi2_a, proj));

  auto identify = [&](const OmegaElement& alpha) {
    OmegaElement bar = alpha;
    bar.a_coeffs.resize(static_cast<std::size_t>(h - 1));
    bar.b_coeffs.resize(static_cast<std::size_t>(k - 1));
    const Elem x = small.encode(bar);
    const Elem v1 = extension_encode(n, big.b_coeff(alpha, k), x);
    return extension_encode(inner.size(), big.a_coeff(alpha, h), v1);
  };

  const std::uint32_t vn = big.size();
  if (vn != outer.size()) return false;
  std::vector<OmegaElement> elems(vn);
  std::vector<Elem> image(vn);
  for (Elem e = 0; e < vn; ++e) {
    elems[e] = big.decode(e);
    image[e] = identify(elems[e]);
  }
  for (Elem a = 0; a < vn; ++a) {
    for (Elem b = 0; b < vn; ++b) {
      auto [s1, s2] = big.braid(elems[a], elems[b]);
      if (outer.r1(image[a], image[b]) != identify(s1)) return false;
      if (outer.r2(image[a], image[b]) != identify(s2)) return false;
    }
  }
  return true;
}

}  // namespace ybk::ybcore
