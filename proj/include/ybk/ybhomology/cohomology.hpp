#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ybk/modalg/lattice.hpp"
#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybhomology/cube.hpp"

namespace ybk::ybhomology {

using ybcore::CochainTable;

/// (delta f)(w) for w in X^(n+1), f of arity n. Throws ArityMismatch.
std::int64_t coboundary(const FiniteYBSet& x, const CochainTable& f, std::span<const Elem> w);

/// delta f as an (n+1)-cochain.
CochainTable coboundary(const FiniteYBSet& x, const CochainTable& f);

/// Rows X^(n+1), columns X^n, signed multiplicities (not reduced).
modalg::ModMatrix integer_coboundary_matrix(const FiniteYBSet& x, std::uint32_t n);
/// Same, reduced to [0, m).
modalg::ModMatrix coboundary_matrix(const FiniteYBSet& x, std::uint32_t n, std::int64_t m);

/// Row cap for coboundary matrices: YBK_MAX_CELLS if set, otherwise 200000.
std::uint64_t default_max_cells();

/// Generators of Z^n(X; Z_m). With type_one (n = 2 only) the extra constraints
/// f(x_a, a) = 0 = f(a, y_a) are imposed; throws NotBiquandle when X has no witness.
std::vector<CochainTable> cocycle_space(const FiniteYBSet& x, std::uint32_t n, std::int64_t m,
                                        bool type_one = false, std::uint64_t max_cells = 0);

bool is_cocycle(const FiniteYBSet& x, const CochainTable& f);

/// f(x_a, a) = 0 and f(a, y_a) = 0 for every a.
bool is_type_one(const FiniteYBSet& x, const CochainTable& f);

/// Some g with delta g = f, or nullopt. For arity 1, B^1 = 0 and the witness is
/// the zero 0-cochain.
std::optional<CochainTable> is_coboundary(const FiniteYBSet& x, const CochainTable& f,
                                          std::uint64_t max_cells = 0);

struct CohomologyReport {
  std::uint32_t dimension = 0;
  std::int64_t modulus = 0;
  std::vector<CochainTable> cocycle_generators;
  std::vector<std::int64_t> invariant_factors;  // of H^n; empty = trivial
  std::vector<std::int64_t> cocycle_factors;    // of Z^n
  std::vector<std::int64_t> coboundary_factors; // of B^n
};

/// H^n = ker delta^n / im delta^(n-1) over Z_m, n >= 1. Throws ResourceBound
/// when |X|^(n+1) exceeds max_cells (0 = default_max_cells()).
CohomologyReport cohomology_group(const FiniteYBSet& x, std::uint32_t n, std::int64_t m,
                                  std::uint64_t max_cells = 0);

nlohmann::json to_json(const CohomologyReport& r);

}  // namespace ybk::ybhomology
