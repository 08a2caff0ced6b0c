#include "ybk/modalg/smith.hpp"

#include <optional>
#include <utility>

namespace ybk::modalg {

namespace {

struct Work {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;

  // row(dst) += k * row(src), mirrored on U.
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += k * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += k * u(src, c);
  }
  // col(dst) += k * col(src), mirrored on V.
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += k * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += k * v(r, src);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(const IntegerMatrix& a,
                                                                     std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      const BigInt& x = a(r, c);
      if (x == 0) continue;
      BigInt ax = abs(x);
      if (!best || ax < best_abs) {
        best = {r, c};
        best_abs = ax;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

// Smallest non-zero |entry| on the pivot cross (column t below, row t right).
std::optional<std::pair<std::size_t, std::size_t>> smallest_on_cross(const IntegerMatrix& a,
                                                                     std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs = abs(a(t, t));
  for (std::size_t r = t + 1; r < a.rows(); ++r) {
    if (a(r, t) != 0 && abs(a(r, t)) < best_abs) {
      best = {r, t};
      best_abs = abs(a(r, t));
    }
  }
  for (std::size_t c = t + 1; c < a.cols(); ++c) {
    if (a(t, c) != 0 && abs(a(t, c)) < best_abs) {
      best = {t, c};
      best_abs = abs(a(t, c));
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  Work w{input, IntegerMatrix::identity(input.rows()), IntegerMatrix::identity(input.cols())};
  const std::size_t limit = std::min(input.rows(), input.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto pos = smallest_in_block(w.a, t);
    if (!pos) break;
    w.swap_rows(t, pos->first);
    w.swap_cols(t, pos->second);

    for (;;) {
      bool cross_clear = true;
      for (std::size_t r = t + 1; r < w.a.rows(); ++r) {
        if (w.a(r, t) == 0) continue;
        BigInt q = w.a(r, t) / w.a(t, t);
        if (q != 0) w.add_row(r, t, -q);
        if (w.a(r, t) != 0) cross_clear = false;
      }
      for (std::size_t c = t + 1; c < w.a.cols(); ++c) {
        if (w.a(t, c) == 0) continue;
        BigInt q = w.a(t, c) / w.a(t, t);
        if (q != 0) w.add_col(c, t, -q);
        if (w.a(t, c) != 0) cross_clear = false;
      }
      if (!cross_clear) {
        if (auto smaller = smallest_on_cross(w.a, t)) {
          if (smaller->first != t) w.swap_rows(t, smaller->first);
          if (smaller->second != t) w.swap_cols(t, smaller->second);
        }
        continue;
      }
      // Divisibility: fold a non-multiple back into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < w.a.rows() && !offending; ++r) {
        for (std::size_t c = t + 1; c < w.a.cols(); ++c) {
          if (w.a(r, c) % w.a(t, t) != 0) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) break;
      w.add_row(t, *offending, 1);
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  SmithForm out{std::move(w.u), std::move(w.a), std::move(w.v), {}};
  for (std::size_t t = 0; t < limit; ++t) {
    if (out.D(t, t) != 0) out.invariant_factors.push_back(out.D(t, t));
  }
  return out;
}

}  // namespace ybk::modalg
