// AVX2 variants of the enumeration kernels. Compiled with -mavx2; only called
// after the runtime CPU check in dispatch.cpp.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "ybk/simd/kernels.hpp"

namespace ybk::simd {

namespace {

constexpr int kLanes = 8;

// Wrapper so the register type can live in a std::vector without dropping its attributes.
struct Reg {
  __m256i v;
};

inline __m256i gather(std::span<const std::uint32_t> table, __m256i idx) {
  return _mm256_i32gather_epi32(reinterpret_cast<const int*>(table.data()), idx, 4);
}

inline __m256i pair_index(__m256i a, __m256i b, __m256i n) {
  return _mm256_add_epi32(_mm256_mullo_epi32(a, n), b);
}

}  // namespace

ClosureResult closure_scan_avx2(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                                bool collect) {
  // Lane accumulators are 32-bit; long weighted words take the scalar path.
  const bool weighted = !p.pos_weight.empty();
  if (weighted && static_cast<std::uint64_t>(p.ops.size()) * p.modulus >= (std::uint64_t{1} << 31)) {
    return closure_scan_scalar(p, begin, end, collect);
  }

  ClosureResult out;
  out.histogram.assign(p.modulus, 0);
  if (begin >= end) return out;

  const std::uint32_t n = p.set_size;
  const std::uint32_t k = p.strands;
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));

  std::vector<std::uint32_t> digits(k);
  {
    std::uint64_t rest = begin;
    for (std::uint32_t i = k; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
  }

  std::vector<std::uint32_t> lanes(static_cast<std::size_t>(k) * kLanes);
  std::vector<Reg> init(k), state(k);
  alignas(32) std::uint32_t acc_out[kLanes];

  for (std::uint64_t base = begin; base < end; base += kLanes) {
    const int live = static_cast<int>(std::min<std::uint64_t>(kLanes, end - base));
    for (int lane = 0; lane < kLanes; ++lane) {
      for (std::uint32_t i = 0; i < k; ++i) lanes[i * kLanes + lane] = digits[i];
      if (lane < live) {
        for (std::uint32_t i = k; i-- > 0;) {
          if (++digits[i] < n) break;
          digits[i] = 0;
        }
      }
    }
    for (std::uint32_t i = 0; i < k; ++i) {
      init[i].v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&lanes[i * kLanes]));
      state[i] = init[i];
    }

    __m256i acc = _mm256_setzero_si256();
    for (const CrossingOp& op : p.ops) {
      __m256i& a = state[op.pos].v;
      __m256i& b = state[op.pos + 1].v;
      if (op.kind == CrossingOp::Virtual) {
        std::swap(a, b);
        continue;
      }
      const __m256i idx = pair_index(a, b, vn);
      if (op.kind == CrossingOp::Positive) {
        if (weighted) acc = _mm256_add_epi32(acc, gather(p.pos_weight, idx));
        a = gather(p.r1, idx);
        b = gather(p.r2, idx);
      } else {
        if (weighted) acc = _mm256_add_epi32(acc, gather(p.neg_weight, idx));
        a = gather(p.rb1, idx);
        b = gather(p.rb2, idx);
      }
    }

    __m256i eq = _mm256_set1_epi32(-1);
    for (std::uint32_t i = 0; i < k; ++i) eq = _mm256_and_si256(eq, _mm256_cmpeq_epi32(state[i].v, init[i].v));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq)) & ((1 << live) - 1);
    if (mask == 0) continue;

    _mm256_store_si256(reinterpret_cast<__m256i*>(acc_out), acc);
    for (int lane = 0; lane < live; ++lane) {
      if ((mask >> lane) & 1) {
        ++out.histogram[acc_out[lane] % p.modulus];
        if (collect) out.fixed.push_back(base + static_cast<std::uint64_t>(lane));
      }
    }
  }
  return out;
}

std::optional<Triple> first_ybe_failure_avx2(std::uint32_t n, std::span<const std::uint32_t> r1,
                                             std::span<const std::uint32_t> r2,
                                             std::uint32_t x_begin, std::uint32_t x_end) {
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  for (std::uint32_t x = x_begin; x < x_end; ++x) {
    const __m256i vx = _mm256_set1_epi32(static_cast<int>(x));
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xy = x * n + y;
      const __m256i va = _mm256_set1_epi32(static_cast<int>(r1[xy]));
      const __m256i vb = _mm256_set1_epi32(static_cast<int>(r2[xy]));
      const __m256i vy = _mm256_set1_epi32(static_cast<int>(y));
      for (std::uint32_t z0 = 0; z0 < n; z0 += kLanes) {
        const int live = static_cast<int>(std::min<std::uint32_t>(kLanes, n - z0));
        // Dead lanes are clamped to z = n - 1 so every gather stays in bounds.
        __m256i vz = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(z0)), step);
        vz = _mm256_min_epi32(vz, _mm256_set1_epi32(static_cast<int>(n - 1)));

        const __m256i bz = pair_index(vb, vz, vn);
        const __m256i b1 = gather(r1, bz), c1 = gather(r2, bz);
        const __m256i ab = pair_index(va, b1, vn);
        const __m256i l0 = gather(r1, ab), l1 = gather(r2, ab);

        const __m256i yz = pair_index(vy, vz, vn);
        const __m256i d = gather(r1, yz), e = gather(r2, yz);
        const __m256i xd = pair_index(vx, d, vn);
        const __m256i f0 = gather(r1, xd), f1 = gather(r2, xd);
        const __m256i fe = pair_index(f1, e, vn);
        const __m256i g1 = gather(r1, fe), g2 = gather(r2, fe);

        __m256i eq = _mm256_and_si256(_mm256_cmpeq_epi32(l0, f0), _mm256_cmpeq_epi32(l1, g1));
        eq = _mm256_and_si256(eq, _mm256_cmpeq_epi32(c1, g2));
        const int bad = ~_mm256_movemask_ps(_mm256_castsi256_ps(eq)) & ((1 << live) - 1);
        if (bad != 0) return Triple{x, y, z0 + static_cast<std::uint32_t>(__builtin_ctz(bad))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ybk::simd
