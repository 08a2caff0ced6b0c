#include "ybk/ybcore/constructors.hpp"

#include <string>
#include <vector>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::ybcore {

using modalg::reduce;
using modalg::Residue;

namespace {
void check_table_size(std::int64_t n) {
  if (n < 1 || n > 46340) throw Error(ErrorKind::InvalidArgument, "carrier size out of range: " + std::to_string(n));
}
}  // namespace

FiniteYBSet make_affine(const AffineParams& p) {
  const std::int64_t q = p.q;
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  check_table_size(q);
  const Residue s(p.s, q), t(p.t, q), u(p.u, q);
  for (const auto& [name, r] : {std::pair{"s", s}, std::pair{"t", t}, std::pair{"u", u}}) {
    if (!r.is_unit()) {
      throw Error(ErrorKind::NotAUnit, std::string(name) + " = " + std::to_string(r.value()) +
                                           " is not invertible mod " + std::to_string(q));
    }
  }
  const Residue one(1, q);
  if ((one - s) * (one - t) != Residue(0, q)) {
    throw Error(ErrorKind::ProductNotZero, "(1-s)(1-t) != 0 mod " + std::to_string(q));
  }
  const Residue u_inv = modalg::mod_inverse(u);
  const std::int64_t a11 = (one - s).value(), a12 = (u * s).value();
  const std::int64_t a21 = (u_inv * t).value(), a22 = (one - t).value();

  const auto n = static_cast<std::uint32_t>(q);
  std::vector<Elem> r1(static_cast<std::size_t>(n) * n), r2(r1.size());
  for (std::int64_t x = 0; x < q; ++x) {
    for (std::int64_t y = 0; y < q; ++y) {
      const std::size_t idx = static_cast<std::size_t>(x * q + y);
      r1[idx] = static_cast<Elem>(reduce(a11 * x + a12 * y, q));
      r2[idx] = static_cast<Elem>(reduce(a21 * x + a22 * y, q));
    }
  }
  return finalize(FiniteYBSet(n, std::move(r1), std::move(r2)));
}

FiniteYBSet make_block(std::int64_t q, std::int64_t s, std::int64_t t) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  check_table_size(q * q);
  s = reduce(s, q);
  t = reduce(t, q);
  const auto n = static_cast<std::uint32_t>(q * q);
  std::vector<Elem> r1(static_cast<std::size_t>(n) * n), r2(r1.size());
  for (Elem xe = 0; xe < n; ++xe) {
    const std::int64_t x1 = block_first(q, xe), x2 = block_second(q, xe);
    for (Elem ye = 0; ye < n; ++ye) {
      const std::int64_t y1 = block_first(q, ye), y2 = block_second(q, ye);
      // (E-Y) x + Y y with E-Y = [[0,-s],[0,0]]
      const std::int64_t a1 = -s * x2 + y1 + s * y2;
      const std::int64_t a2 = y2;
      // Z x + (E-Z) y with E-Z = [[0,-t],[0,0]]
      const std::int64_t b1 = x1 + t * x2 - t * y2;
      const std::int64_t b2 = x2;
      const std::size_t idx = static_cast<std::size_t>(xe) * n + ye;
      r1[idx] = block_encode(q, reduce(a1, q), reduce(a2, q));
      r2[idx] = block_encode(q, reduce(b1, q), reduce(b2, q));
    }
  }
  return finalize(FiniteYBSet(n, std::move(r1), std::move(r2)));
}

}  // namespace ybk::ybcore
