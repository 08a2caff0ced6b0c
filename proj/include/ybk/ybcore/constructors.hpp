#pragma once

#include <cstdint>

#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybcore {

/// R(x, y) = ((1-s)x + u s y, u^-1 t x + (1-t) y) on Z_q. Values are reduced mod q.
struct AffineParams {
  std::int64_t q;
  std::int64_t s;
  std::int64_t t;
  std::int64_t u = 1;
};

/// Throws NotAUnit when s, t or u is not invertible mod q, ProductNotZero
/// when (1-s)(1-t) != 0 mod q.
FiniteYBSet make_affine(const AffineParams& p);

/// X = Z_q^2 with element (x1, x2) encoded as x1 * q + x2, and
/// R(x, y) = ((E-Y)x + Y y, Z x + (E-Z) y), Y = [[1,s],[0,1]], Z = [[1,t],[0,1]].
FiniteYBSet make_block(std::int64_t q, std::int64_t s, std::int64_t t);

/// Encoding helpers for the block carrier Z_q^2.
inline Elem block_encode(std::int64_t q, std::int64_t x1, std::int64_t x2) {
  return static_cast<Elem>(x1 * q + x2);
}
inline std::int64_t block_first(std::int64_t q, Elem e) { return e / q; }
inline std::int64_t block_second(std::int64_t q, Elem e) { return e % q; }

}  // namespace ybk::ybcore
