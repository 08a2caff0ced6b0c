#include "ybk/ybhomology/obstruction.hpp"

#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::ybhomology {

CochainTable obstruction_cocycle(const FiniteYBSet& x, const CochainTable& f) {
  const std::uint32_t n = f.arity();
  const std::int64_t p = f.modulus();
  if (f.set_size() != x.size()) throw Error(ErrorKind::ArityMismatch, "cochain lives on a different set");
  if (!is_cocycle(x, f)) throw Error(ErrorKind::NotACocycle, "obstruction needs a cocycle");

  CochainTable psi(n + 1, x.size(), p);
  const std::uint64_t total = ybcore::tuple_count(x.size(), n + 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Tuple w = ybcore::tuple_at(i, x.size(), n + 1);
    const CubeColoring c = color_cube(x, w);
    // f values are already the section representatives in [0, p).
    std::int64_t lifted = 0;
    for (std::uint32_t k = 1; k <= n + 1; ++k) {
      for (std::uint32_t side = 0; side < 2; ++side) lifted += face_sign(n + 1, k, side) * f.at(face_tuple(c, k, side));
    }
    if (lifted % p != 0) {
      throw Error(ErrorKind::NotDivisible, "signed lift sum " + std::to_string(lifted) + " at tuple index " +
                                               std::to_string(i) + " is not a multiple of " + std::to_string(p));
    }
    psi.set(i, lifted / p);
  }
  return psi;
}

}  // namespace ybk::ybhomology
