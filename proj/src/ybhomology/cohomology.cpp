#include "ybk/ybhomology/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"
#include "ybk/ybcore/io.hpp"

namespace ybk::ybhomology {

using modalg::ModMatrix;
using modalg::ModVector;
using modalg::reduce;
using ybcore::tuple_at;
using ybcore::tuple_count;
using ybcore::tuple_index;

namespace {

void check_matrix_size(std::uint32_t set_size, std::uint32_t n, std::uint64_t max_cells) {
  if (max_cells == 0) max_cells = default_max_cells();
  const std::uint64_t rows = tuple_count(set_size, n + 1);
  if (rows > max_cells) {
    throw Error(ErrorKind::ResourceBound, std::to_string(set_size) + "^" + std::to_string(n + 1) + " = " +
                                              std::to_string(rows) + " rows exceeds the cap of " +
                                              std::to_string(max_cells));
  }
  // Dense storage guard, independent of the configurable cap.
  if (rows * tuple_count(set_size, n) > (std::uint64_t{1} << 25)) {
    throw Error(ErrorKind::ResourceBound, "coboundary matrix too large for dense storage");
  }
}

CochainTable from_vector(std::uint32_t arity, std::uint32_t set_size, std::int64_t m, const ModVector& v) {
  return CochainTable(arity, set_size, m, std::vector<std::int64_t>(v.begin(), v.end()));
}

}  // namespace

std::uint64_t default_max_cells() {
  if (const char* env = std::getenv("YBK_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 200000;
}

std::int64_t coboundary(const FiniteYBSet& x, const CochainTable& f, std::span<const Elem> w) {
  const std::uint32_t n = f.arity();
  if (w.size() != n + 1 || f.set_size() != x.size()) {
    throw Error(ErrorKind::ArityMismatch, "coboundary of an " + std::to_string(n) + "-cochain needs an (n+1)-tuple on X");
  }
  const CubeColoring c = color_cube(x, w);
  std::int64_t acc = 0;
  for (std::uint32_t k = 1; k <= n + 1; ++k) {
    for (std::uint32_t side = 0; side < 2; ++side) acc += face_sign(n + 1, k, side) * f.at(face_tuple(c, k, side));
  }
  return reduce(acc, f.modulus());
}

CochainTable coboundary(const FiniteYBSet& x, const CochainTable& f) {
  const std::uint32_t n = f.arity();
  CochainTable out(n + 1, x.size(), f.modulus());
  const std::uint64_t total = tuple_count(x.size(), n + 1);
  for (std::uint64_t i = 0; i < total; ++i) out.set(i, coboundary(x, f, tuple_at(i, x.size(), n + 1)));
  return out;
}

ModMatrix integer_coboundary_matrix(const FiniteYBSet& x, std::uint32_t n) {
  const std::uint32_t q = x.size();
  const std::uint64_t rows = tuple_count(q, n + 1), cols = tuple_count(q, n);
  ModMatrix a(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    const Tuple w = tuple_at(r, q, n + 1);
    const CubeColoring c = color_cube(x, w);
    for (std::uint32_t k = 1; k <= n + 1; ++k) {
      for (std::uint32_t side = 0; side < 2; ++side) {
        a(r, tuple_index(face_tuple(c, k, side), q)) += face_sign(n + 1, k, side);
      }
    }
  }
  return a;
}

ModMatrix coboundary_matrix(const FiniteYBSet& x, std::uint32_t n, std::int64_t m) {
  ModMatrix a = integer_coboundary_matrix(x, n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (auto& v : a.row(r)) v = reduce(v, m);
  }
  return a;
}

bool is_type_one(const FiniteYBSet& x, const CochainTable& f) {
  if (f.arity() != 2 || f.set_size() != x.size()) throw Error(ErrorKind::ArityMismatch, "type-I check needs a 2-cochain on X");
  const auto w = ybcore::biquandle_witness(x);
  for (Elem a = 0; a < x.size(); ++a) {
    if (f(w.x_of[a], a) != 0 || f(a, w.y_of[a]) != 0) return false;
  }
  return true;
}

std::vector<CochainTable> cocycle_space(const FiniteYBSet& x, std::uint32_t n, std::int64_t m, bool type_one,
                                        std::uint64_t max_cells) {
  if (type_one && n != 2) throw Error(ErrorKind::InvalidArgument, "type-I constraints apply to 2-cochains only");
  check_matrix_size(x.size(), n, max_cells);
  ModMatrix a = coboundary_matrix(x, n, m);
  if (type_one) {
    const auto w = ybcore::biquandle_witness(x);
    const std::uint32_t q = x.size();
    ModMatrix b(a.rows() + 2 * q, a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      auto src = a.row(r);
      std::copy(src.begin(), src.end(), b.row(r).begin());
    }
    for (Elem e = 0; e < q; ++e) {
      b(a.rows() + 2 * e, x.pair(w.x_of[e], e)) = 1;
      b(a.rows() + 2 * e + 1, x.pair(e, w.y_of[e])) = 1;
    }
    a = std::move(b);
  }
  std::vector<CochainTable> out;
  for (const auto& g : modalg::kernel_mod(a, m)) out.push_back(from_vector(n, x.size(), m, g));
  return out;
}

bool is_cocycle(const FiniteYBSet& x, const CochainTable& f) {
  const std::uint32_t n = f.arity();
  if (f.set_size() != x.size()) throw Error(ErrorKind::ArityMismatch, "cochain lives on a different set");
  const std::uint64_t total = tuple_count(x.size(), n + 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (coboundary(x, f, tuple_at(i, x.size(), n + 1)) != 0) return false;
  }
  return true;
}

std::optional<CochainTable> is_coboundary(const FiniteYBSet& x, const CochainTable& f, std::uint64_t max_cells) {
  const std::uint32_t n = f.arity();
  if (f.set_size() != x.size()) throw Error(ErrorKind::ArityMismatch, "cochain lives on a different set");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "0-cochains are never coboundaries");
  if (n == 1) {
    if (f.is_zero()) return CochainTable(0, x.size(), f.modulus());
    return std::nullopt;
  }
  check_matrix_size(x.size(), n - 1, max_cells);
  const ModMatrix a = coboundary_matrix(x, n - 1, f.modulus());
  auto sol = modalg::solve_mod(a, f.values(), f.modulus());
  if (!sol) return std::nullopt;
  return from_vector(n - 1, x.size(), f.modulus(), *sol);
}

CohomologyReport cohomology_group(const FiniteYBSet& x, std::uint32_t n, std::int64_t m, std::uint64_t max_cells) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cohomology needs n >= 1");
  check_matrix_size(x.size(), n, max_cells);
  CohomologyReport rep;
  rep.dimension = n;
  rep.modulus = m;
  const ModMatrix a = coboundary_matrix(x, n, m);
  const auto kernel = modalg::kernel_mod(a, m);
  for (const auto& g : kernel) rep.cocycle_generators.push_back(from_vector(n, x.size(), m, g));

  // B^1 = 0; otherwise B^n is spanned by the columns of delta^(n-1).
  std::vector<ModVector> image;
  if (n >= 2) {
    const ModMatrix b = coboundary_matrix(x, n - 1, m);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      ModVector col(b.rows());
      bool nonzero = false;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        col[r] = b(r, c);
        nonzero = nonzero || col[r] != 0;
      }
      if (nonzero) image.push_back(std::move(col));
    }
  }
  rep.invariant_factors = modalg::quotient_invariant_factors(kernel, image, m);
  rep.cocycle_factors = modalg::quotient_invariant_factors(kernel, {}, m);
  rep.coboundary_factors = image.empty() ? std::vector<std::int64_t>{}
                                         : modalg::quotient_invariant_factors(image, {}, m);
  return rep;
}

nlohmann::json to_json(const CohomologyReport& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.cocycle_generators) gens.push_back(ybcore::to_json(g));
  return {{"dimension", r.dimension},
          {"modulus", r.modulus},
          {"invariant_factors", r.invariant_factors},
          {"cocycle_factors", r.cocycle_factors},
          {"coboundary_factors", r.coboundary_factors},
          {"cocycle_generators", std::move(gens)}};
}

}  // namespace ybk::ybhomology
