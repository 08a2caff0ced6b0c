#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybk/modalg/matrix.hpp"

namespace ybk::modalg {

using ModVector = std::vector<std::int64_t>;
using ModMatrix = Matrix<std::int64_t>;

/// Diagonalization of a matrix over Z with all arithmetic reduced mod m:
/// U * A * V == W (mod m), U and V unimodular over Z, W zero off the diagonal.
/// `diag` holds W(t,t) for t < rank, each in [1, m).
struct ModDiagonalization {
  std::int64_t modulus = 0;
  std::size_t rank = 0;
  std::vector<std::int64_t> diag;
  std::optional<ModMatrix> U;
  std::optional<ModMatrix> V;
};

ModDiagonalization diagonalize_mod(ModMatrix a, std::int64_t m, bool want_u, bool want_v);

/// Reduce entries of an integer matrix to [0, m).
ModMatrix reduce_mod(const IntegerMatrix& a, std::int64_t m);

/// Generating set of {x : A x == 0 (mod m)}. Zero generators are dropped, so the
/// trivial solution space yields an empty list.
std::vector<ModVector> kernel_mod(const ModMatrix& a, std::int64_t m);
std::vector<ModVector> kernel_mod(const IntegerMatrix& a, std::int64_t m);

/// Some x with A x == b (mod m), or nullopt.
std::optional<ModVector> solve_mod(const ModMatrix& a, const ModVector& b, std::int64_t m);

/// Invariant factors f1 | f2 | ... (all > 1) of span(kernel) / span(image) as Z_m-modules.
/// Throws ImageNotContained when some image generator is outside span(kernel).
std::vector<std::int64_t> quotient_invariant_factors(const std::vector<ModVector>& kernel_gens,
                                                     const std::vector<ModVector>& image_gens,
                                                     std::int64_t m);

/// Normalize a list of cyclic orders into a divisibility chain, dropping 1s.
std::vector<std::int64_t> normalize_cyclic_orders(std::vector<std::int64_t> orders);

}  // namespace ybk::modalg
