#pragma once

// Exhaustive enumeration kernels. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant; `active_isa()` picks one at
// runtime. Both variants must produce identical results.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ybk::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();

/// detected_isa() unless overridden by set_isa_override() or YBK_ISA=scalar|avx2.
Isa active_isa();

/// Force an ISA (tests, benchmarking); nullopt restores detection. Requesting an
/// unsupported ISA falls back to Scalar.
void set_isa_override(std::optional<Isa> isa);

/// One crossing of a braid word acting on positions (pos, pos + 1), 0-based.
struct CrossingOp {
  enum Kind : std::uint8_t { Positive, Negative, Virtual };
  Kind kind;
  std::uint32_t pos;
};

/// Tables are indexed by the incoming pair x * set_size + y.
struct ClosureProblem {
  std::uint32_t set_size = 0;
  std::uint32_t strands = 0;
  std::span<const CrossingOp> ops;
  std::span<const std::uint32_t> r1, r2;    // R
  std::span<const std::uint32_t> rb1, rb2;  // R inverse
  // Weight added at a positive / negative crossing for the incoming pair, in
  // [0, modulus). Empty when only counting.
  std::span<const std::uint32_t> pos_weight, neg_weight;
  std::uint32_t modulus = 1;
};

/// histogram[e] = number of fixed tuples whose accumulated weight is e (mod modulus).
/// fixed = lexicographic tuple indices of fixed tuples (only when collecting).
struct ClosureResult {
  std::vector<std::uint64_t> histogram;
  std::vector<std::uint64_t> fixed;
};

/// Scans tuple indices [begin, end) of X^strands (first coordinate most
/// significant), keeping tuples fixed by the word.
ClosureResult closure_scan(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                           bool collect, Isa isa);
ClosureResult closure_scan_scalar(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                                  bool collect);
#if defined(YBK_HAVE_AVX2_KERNELS)
ClosureResult closure_scan_avx2(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                                bool collect);
#endif

using Triple = std::array<std::uint32_t, 3>;

/// Lexicographically first (x, y, z) with x in [x_begin, x_end) where
/// (R x 1)(1 x R)(R x 1) and (1 x R)(R x 1)(1 x R) disagree.
std::optional<Triple> first_ybe_failure(std::uint32_t set_size, std::span<const std::uint32_t> r1,
                                        std::span<const std::uint32_t> r2, std::uint32_t x_begin,
                                        std::uint32_t x_end, Isa isa);
std::optional<Triple> first_ybe_failure_scalar(std::uint32_t set_size, std::span<const std::uint32_t> r1,
                                               std::span<const std::uint32_t> r2,
                                               std::uint32_t x_begin, std::uint32_t x_end);
#if defined(YBK_HAVE_AVX2_KERNELS)
std::optional<Triple> first_ybe_failure_avx2(std::uint32_t set_size, std::span<const std::uint32_t> r1,
                                             std::span<const std::uint32_t> r2,
                                             std::uint32_t x_begin, std::uint32_t x_end);
#endif

}  // namespace ybk::simd
