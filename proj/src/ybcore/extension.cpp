#include "ybk/ybcore/extension.hpp"

#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::ybcore {

FiniteYBSet extend(const FiniteYBSet& x, std::int64_t m, const CochainTable& psi1,
                   const CochainTable& psi2) {
  const std::uint32_t n = x.size();
  for (const CochainTable* psi : {&psi1, &psi2}) {
    if (psi->arity() != 2 || psi->set_size() != n || psi->modulus() != m) {
      throw Error(ErrorKind::ArityMismatch,
                  "extension cochains must be 2-cochains on |X| = " + std::to_string(n) +
                      " with modulus " + std::to_string(m));
    }
  }
  const std::uint64_t big = static_cast<std::uint64_t>(m) * n;
  if (big > 46340) throw Error(ErrorKind::ResourceBound, "extension carrier too large");
  const auto vn = static_cast<std::uint32_t>(big);

  std::vector<Elem> s1(static_cast<std::size_t>(vn) * vn), s2(s1.size());
  for (std::int64_t a1 = 0; a1 < m; ++a1) {
    for (Elem x1 = 0; x1 < n; ++x1) {
      const Elem v1 = extension_encode(n, a1, x1);
      for (std::int64_t a2 = 0; a2 < m; ++a2) {
        for (Elem x2 = 0; x2 < n; ++x2) {
          const Elem v2 = extension_encode(n, a2, x2);
          const std::size_t idx = static_cast<std::size_t>(v1) * vn + v2;
          s1[idx] = extension_encode(n, modalg::reduce(a2 + psi1(x1, x2), m), x.r1(x1, x2));
          s2[idx] = extension_encode(n, modalg::reduce(a1 + psi2(x1, x2), m), x.r2(x1, x2));
        }
      }
    }
  }
  return finalize(FiniteYBSet(vn, std::move(s1), std::move(s2)));
}

std::vector<Elem> extension_projection(std::uint32_t base_size, std::int64_t m) {
  std::vector<Elem> proj(static_cast<std::size_t>(m) * base_size);
  for (std::size_t v = 0; v < proj.size(); ++v) proj[v] = static_cast<Elem>(v % base_size);
  return proj;
}

}  // namespace ybk::ybcore
