#include <atomic>
#include <cstdlib>
#include <string>

#include "ybk/simd/kernels.hpp"

namespace ybk::simd {

namespace {

// -1: no override; otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(YBK_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa clamp(Isa isa) { return isa == Isa::Avx2 && !cpu_has_avx2() ? Isa::Scalar : isa; }

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return clamp(static_cast<Isa>(o));
  if (const char* env = std::getenv("YBK_ISA")) {
    const std::string v = env;
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2") return clamp(Isa::Avx2);
  }
  return detected_isa();
}

void set_isa_override(std::optional<Isa> isa) {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

ClosureResult closure_scan(const ClosureProblem& p, std::uint64_t begin, std::uint64_t end,
                           bool collect, Isa isa) {
#if defined(YBK_HAVE_AVX2_KERNELS)
  if (clamp(isa) == Isa::Avx2) return closure_scan_avx2(p, begin, end, collect);
#endif
  (void)isa;
  return closure_scan_scalar(p, begin, end, collect);
}

std::optional<Triple> first_ybe_failure(std::uint32_t set_size, std::span<const std::uint32_t> r1,
                                        std::span<const std::uint32_t> r2, std::uint32_t x_begin,
                                        std::uint32_t x_end, Isa isa) {
#if defined(YBK_HAVE_AVX2_KERNELS)
  if (clamp(isa) == Isa::Avx2) return first_ybe_failure_avx2(set_size, r1, r2, x_begin, x_end);
#endif
  (void)isa;
  return first_ybe_failure_scalar(set_size, r1, r2, x_begin, x_end);
}

}  // namespace ybk::simd
