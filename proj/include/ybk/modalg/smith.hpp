#pragma once

#include <vector>

#include "ybk/modalg/matrix.hpp"

namespace ybk::modalg {

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::vector<BigInt> invariant_factors;  // non-zero diagonal of D
};

/// Exact Smith normal form over Z. Pivot: smallest non-zero |entry| (first in
/// row-major order on ties); each round clears the pivot column, then the pivot row.
SmithForm smith_normal_form(const IntegerMatrix& a);

}  // namespace ybk::modalg
