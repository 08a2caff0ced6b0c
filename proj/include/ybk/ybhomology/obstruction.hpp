#pragma once

#include <cstdint>

#include "ybk/ybhomology/cohomology.hpp"

namespace ybk::ybhomology {

/// Obstruction to lifting f in Z^n(X; Z_p) along 0 -> Z_p -> Z_{p^2} -> Z_p -> 0
/// with section s(a) = a: psi(w) = (sum of signed s(f(face)))/p mod p, an
/// (n+1)-cochain. Throws NotACocycle, or NotDivisible if the sum is not a multiple of p.
CochainTable obstruction_cocycle(const FiniteYBSet& x, const CochainTable& f);

}  // namespace ybk::ybhomology
