#include <vector>

#include "ybk/simd/kernels.hpp"

namespace ybk::simd {

ClosureResult closure_scan_scalar(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                                  bool collect) {
  ClosureResult out;
  out.histogram.assign(p.modulus, 0);
  if (begin >= end) return out;

  const std::uint32_t n = p.set_size;
  const std::uint32_t k = p.strands;
  const bool weighted = !p.pos_weight.empty();

  // Odometer over X^k starting at `begin`; digit k-1 varies fastest.
  std::vector<std::uint32_t> digits(k);
  {
    std::uint64_t rest = begin;
    for (std::uint32_t i = k; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
  }
  std::vector<std::uint32_t> state(k);

  for (std::uint64_t index = begin; index < end; ++index) {
    state = digits;
    std::uint64_t acc = 0;
    for (const CrossingOp& op : p.ops) {
      std::uint32_t& a = state[op.pos];
      std::uint32_t& b = state[op.pos + 1];
      if (op.kind == CrossingOp::Virtual) {
        std::swap(a, b);
        continue;
      }
      const std::uint32_t pair = a * n + b;
      if (op.kind == CrossingOp::Positive) {
        if (weighted) acc += p.pos_weight[pair];
        a = p.r1[pair];
        b = p.r2[pair];
      } else {
        if (weighted) acc += p.neg_weight[pair];
        a = p.rb1[pair];
        b = p.rb2[pair];
      }
    }
    if (state == digits) {
      ++out.histogram[acc % p.modulus];
      if (collect) out.fixed.push_back(index);
    }
    for (std::uint32_t i = k; i-- > 0;) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::optional<Triple> first_ybe_failure_scalar(std::uint32_t n, std::span<const std::uint32_t> r1,
                                               std::span<const std::uint32_t> r2,
                                               std::uint32_t x_begin, std::uint32_t x_end) {
  for (std::uint32_t x = x_begin; x < x_end; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xy = x * n + y;
      const std::uint32_t a = r1[xy], b = r2[xy];
      for (std::uint32_t z = 0; z < n; ++z) {
        // (R x 1) then (1 x R) then (R x 1)
        const std::uint32_t bz = b * n + z;
        const std::uint32_t b1 = r1[bz], c1 = r2[bz];
        const std::uint32_t ab = a * n + b1;
        const std::uint32_t l0 = r1[ab], l1 = r2[ab], l2 = c1;
        // (1 x R) then (R x 1) then (1 x R)
        const std::uint32_t yz = y * n + z;
        const std::uint32_t d = r1[yz], e = r2[yz];
        const std::uint32_t xd = x * n + d;
        const std::uint32_t f0 = r1[xd], f1 = r2[xd];
        const std::uint32_t fe = f1 * n + e;
        const std::uint32_t g0 = f0, g1 = r1[fe], g2 = r2[fe];
        if (l0 != g0 || l1 != g1 || l2 != g2) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ybk::simd
