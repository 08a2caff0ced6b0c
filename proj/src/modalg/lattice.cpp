#include "ybk/modalg/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::modalg {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

void check_modulus(std::int64_t m) {
  if (m < 2 || m >= kMaxModulus) {
    throw Error(ErrorKind::InvalidArgument, "modulus out of range: " + std::to_string(m));
  }
}

inline std::int64_t mulsub(std::int64_t x, std::int64_t q, std::int64_t y, std::int64_t m) {
  return reduce(x - q * y % m, m);
}

class ModDiagonalizer {
 public:
  ModDiagonalizer(ModMatrix a, std::int64_t m, bool want_u, bool want_v)
      : a_(std::move(a)), m_(m) {
    if (want_u) u_ = ModMatrix::identity(a_.rows());
    if (want_v) v_ = ModMatrix::identity(a_.cols());
  }

  ModDiagonalization run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    ModDiagonalization out;
    out.modulus = m_;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!pivot_smallest(t)) break;
      for (;;) {
        bool clear = true;
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
          if (a_(r, t) == 0) continue;
          row_sub(r, t, a_(r, t) / a_(t, t));
          if (a_(r, t) != 0) clear = false;
        }
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
          if (a_(t, c) == 0) continue;
          col_sub(c, t, a_(t, c) / a_(t, t));
          if (a_(t, c) != 0) clear = false;
        }
        if (clear) break;
        pivot_on_cross(t);
      }
      out.diag.push_back(a_(t, t));
      out.rank = t + 1;
    }
    if (u_) out.U = std::move(*u_);
    if (v_) out.V = std::move(*v_);
    return out;
  }

 private:
  // row r -= q * row t
  void row_sub(std::size_t r, std::size_t t, std::int64_t q) {
    if (q == 0) return;
    auto dst = a_.row(r);
    auto src = a_.row(t);
    for (std::size_t c = t; c < a_.cols(); ++c) {
      if (src[c] != 0) dst[c] = mulsub(dst[c], q, src[c], m_);
    }
    if (u_) {
      auto ud = u_->row(r);
      auto us = u_->row(t);
      for (std::size_t c = 0; c < ud.size(); ++c) {
        if (us[c] != 0) ud[c] = mulsub(ud[c], q, us[c], m_);
      }
    }
  }

  // col c -= q * col t
  void col_sub(std::size_t c, std::size_t t, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      if (a_(r, t) != 0) a_(r, c) = mulsub(a_(r, c), q, a_(r, t), m_);
    }
    if (v_) {
      for (std::size_t r = 0; r < v_->rows(); ++r) {
        if ((*v_)(r, t) != 0) (*v_)(r, c) = mulsub((*v_)(r, c), q, (*v_)(r, t), m_);
      }
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a_.swap_rows(x, y);
    if (u_) u_->swap_rows(x, y);
  }

  void swap_cols(std::size_t x, std::size_t y) {
    a_.swap_cols(x, y);
    if (v_) v_->swap_cols(x, y);
  }

  bool pivot_smallest(std::size_t t) {
    std::size_t br = 0, bc = 0;
    std::int64_t best = 0;
    for (std::size_t r = t; r < a_.rows() && best != 1; ++r) {
      auto row = a_.row(r);
      for (std::size_t c = t; c < a_.cols(); ++c) {
        if (row[c] != 0 && (best == 0 || row[c] < best)) {
          best = row[c];
          br = r;
          bc = c;
          if (best == 1) break;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void pivot_on_cross(std::size_t t) {
    std::size_t br = t, bc = t;
    std::int64_t best = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (a_(r, t) != 0 && a_(r, t) < best) {
        best = a_(r, t);
        br = r;
        bc = t;
      }
    }
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (a_(t, c) != 0 && a_(t, c) < best) {
        best = a_(t, c);
        br = t;
        bc = c;
      }
    }
    swap_rows(t, br);
    swap_cols(t, bc);
  }

  ModMatrix a_;
  std::int64_t m_;
  std::optional<ModMatrix> u_;
  std::optional<ModMatrix> v_;
};

// Drop zero rows and repeated rows; the solution set of A x == 0 is unchanged.
ModMatrix distinct_nonzero_rows(const ModMatrix& a) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    if (std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; })) continue;
    if (seen.emplace(row.begin(), row.end()).second) keep.push_back(r);
  }
  ModMatrix out(keep.size(), a.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto src = a.row(keep[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace

ModDiagonalization diagonalize_mod(ModMatrix a, std::int64_t m, bool want_u, bool want_v) {
  check_modulus(m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (auto& x : a.row(r)) x = reduce(x, m);
  }
  return ModDiagonalizer(std::move(a), m, want_u, want_v).run();
}

ModMatrix reduce_mod(const IntegerMatrix& a, std::int64_t m) {
  check_modulus(m);
  ModMatrix out(a.rows(), a.cols());
  const BigInt bm = m;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      BigInt x = a(r, c) % bm;
      if (x < 0) x += bm;
      out(r, c) = x.convert_to<std::int64_t>();
    }
  }
  return out;
}

std::vector<ModVector> kernel_mod(const ModMatrix& a, std::int64_t m) {
  check_modulus(m);
  const std::size_t n = a.cols();
  ModMatrix reduced = a;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    for (auto& x : reduced.row(r)) x = reduce(x, m);
  }
  auto d = diagonalize_mod(distinct_nonzero_rows(reduced), m, false, true);
  const ModMatrix& v = *d.V;

  std::vector<ModVector> gens;
  for (std::size_t t = 0; t < n; ++t) {
    std::int64_t scale = 1;
    if (t < d.rank) scale = m / gcd(d.diag[t], m);
    if (scale == m) continue;
    ModVector g(n);
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) {
      g[r] = reduce(v(r, t) * scale, m);
      nonzero = nonzero || g[r] != 0;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<ModVector> kernel_mod(const IntegerMatrix& a, std::int64_t m) {
  return kernel_mod(reduce_mod(a, m), m);
}

namespace {

// Solves A x == b given U A V == W (mod m).
std::optional<ModVector> solve_diagonalized(const ModDiagonalization& d, std::size_t rows, std::size_t cols,
                                            const ModVector& b, std::int64_t m) {
  const ModMatrix& u = *d.U;
  const ModMatrix& v = *d.V;

  // c = U b
  ModVector c(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t acc = 0;
    auto ur = u.row(r);
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (ur[k] != 0 && b[k] != 0) acc = reduce(acc + ur[k] * reduce(b[k], m) % m, m);
    }
    c[r] = acc;
  }
  for (std::size_t r = d.rank; r < rows; ++r) {
    if (c[r] != 0) return std::nullopt;
  }

  ModVector z(cols, 0);
  for (std::size_t t = 0; t < d.rank; ++t) {
    const std::int64_t g = gcd(d.diag[t], m);
    if (c[t] % g != 0) return std::nullopt;
    const std::int64_t mg = m / g;
    if (mg == 1) continue;
    const std::int64_t inv = mod_inverse(Residue(d.diag[t] / g, mg)).value();
    z[t] = reduce((c[t] / g) % mg * inv, mg);
  }

  ModVector x(cols, 0);
  for (std::size_t r = 0; r < cols; ++r) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < cols; ++t) {
      if (z[t] != 0) acc = reduce(acc + v(r, t) * z[t] % m, m);
    }
    x[r] = acc;
  }
  return x;
}

}  // namespace

std::optional<ModVector> solve_mod(const ModMatrix& a, const ModVector& b, std::int64_t m) {
  check_modulus(m);
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "solve_mod: rhs length mismatch");
  return solve_diagonalized(diagonalize_mod(a, m, true, true), a.rows(), a.cols(), b, m);
}

std::vector<std::int64_t> normalize_cyclic_orders(std::vector<std::int64_t> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      const std::int64_t g = gcd(orders[i], orders[j]);
      const std::int64_t l = lcm(orders[i], orders[j]);
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::vector<std::int64_t> out;
  for (auto o : orders) {
    if (o > 1) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> quotient_invariant_factors(const std::vector<ModVector>& kernel_gens,
                                                     const std::vector<ModVector>& image_gens,
                                                     std::int64_t m) {
  check_modulus(m);
  std::size_t n = 0;
  if (!kernel_gens.empty()) n = kernel_gens.front().size();
  else if (!image_gens.empty()) n = image_gens.front().size();
  for (const auto* list : {&kernel_gens, &image_gens}) {
    for (const auto& g : *list) {
      if (g.size() != n) throw Error(ErrorKind::InvalidArgument, "generator length mismatch");
    }
  }

  // Present span(K) as Z^k / R with one generator per kernel vector:
  // R = {c : sum c_i K_i == 0} plus the coordinates of every image vector.
  const std::size_t k = kernel_gens.size();
  ModMatrix kmat(n, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < n; ++r) kmat(r, i) = reduce(kernel_gens[i][r], m);
  }

  std::vector<ModVector> rel = k == 0 ? std::vector<ModVector>{} : kernel_mod(kmat, m);
  if (!image_gens.empty()) {
    const auto d = diagonalize_mod(kmat, m, true, true);
    for (std::size_t i = 0; i < image_gens.size(); ++i) {
      auto c = k == 0 ? std::nullopt : solve_diagonalized(d, n, k, image_gens[i], m);
      if (!c) {
        const bool zero = std::all_of(image_gens[i].begin(), image_gens[i].end(),
                                      [m](std::int64_t x) { return reduce(x, m) == 0; });
        if (zero) continue;
        throw Error(ErrorKind::ImageNotContained, "image generator " + std::to_string(i));
      }
      rel.push_back(std::move(*c));
    }
  }
  if (k == 0) return {};

  ModMatrix c(rel.size(), k);
  for (std::size_t r = 0; r < rel.size(); ++r) std::copy(rel[r].begin(), rel[r].end(), c.row(r).begin());
  const auto d = diagonalize_mod(std::move(c), m, false, false);
  std::vector<std::int64_t> orders;
  for (std::size_t t = 0; t < k; ++t) orders.push_back(t < d.rank ? gcd(d.diag[t], m) : m);
  return normalize_cyclic_orders(std::move(orders));
}

}  // namespace ybk::modalg
