#pragma once

#include <cstdint>

#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybcore {

/// Element (a, x) of Z_m x X is encoded as a * |X| + x.
inline Elem extension_encode(std::uint32_t base_size, std::int64_t a, Elem x) {
  return static_cast<Elem>(a * base_size + x);
}

/// S((a1,x1),(a2,x2)) = ((a2 + psi1(x1,x2), R1(x1,x2)), (a1 + psi2(x1,x2), R2(x1,x2)))
/// on V = Z_m x X. The result is finalized (flags report whether S is YB);
/// when it is, psi1 + psi2 is a 2-cocycle of X.
/// Throws ArityMismatch when psi1/psi2 are not 2-cochains on X with modulus m.
FiniteYBSet extend(const FiniteYBSet& x, std::int64_t m, const CochainTable& psi1,
                   const CochainTable& psi2);

/// The projection V = Z_m x X -> X as an index map.
std::vector<Elem> extension_projection(std::uint32_t base_size, std::int64_t m);

}  // namespace ybk::ybcore
