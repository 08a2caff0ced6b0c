#include "ybk/vknots/coloring.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <thread>

#include "ybk/common/error.hpp"

namespace ybk::vknots {

namespace {

bool has_negative(const BraidWord& w) {
  for (const auto& g : w.generators) {
    if (g.kind == BraidGenerator::Negative) return true;
  }
  return false;
}

void check_word(const FiniteYBSet& x, const BraidWord& w) {
  validate(w);
  if (has_negative(w) && !x.has_inverse()) {
    throw Error(ErrorKind::InvalidArgument, "negative crossings need an invertible R");
  }
}

std::vector<simd::CrossingOp> lower(const BraidWord& w) {
  std::vector<simd::CrossingOp> ops;
  ops.reserve(w.generators.size());
  for (const auto& g : w.generators) {
    const auto kind = g.kind == BraidGenerator::Positive   ? simd::CrossingOp::Positive
                      : g.kind == BraidGenerator::Negative ? simd::CrossingOp::Negative
                                                           : simd::CrossingOp::Virtual;
    ops.push_back({kind, g.index - 1});
  }
  return ops;
}

// Splits [0, total) into contiguous chunks, scans them in parallel and merges
// in chunk order, so the result does not depend on the thread count.
simd::ClosureResult scan(const simd::ClosureProblem& p, std::uint64_t total, bool collect, const ScanOptions& opt) {
  const unsigned workers = std::max(1u, opt.threads);
  if (workers == 1 || total < 4096) return simd::closure_scan(p, 0, total, collect, opt.isa);
  std::vector<simd::ClosureResult> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t b = total * t / workers, e = total * (t + 1) / workers;
      pool.emplace_back([&, t, b, e] { parts[t] = simd::closure_scan(p, b, e, collect, opt.isa); });
    }
  }
  simd::ClosureResult out;
  out.histogram.assign(p.modulus, 0);
  for (auto& part : parts) {
    for (std::size_t i = 0; i < out.histogram.size(); ++i) out.histogram[i] += part.histogram[i];
    out.fixed.insert(out.fixed.end(), part.fixed.begin(), part.fixed.end());
  }
  return out;
}

simd::ClosureProblem problem(const FiniteYBSet& x, const BraidWord& w, const std::vector<simd::CrossingOp>& ops) {
  simd::ClosureProblem p;
  p.set_size = x.size();
  p.strands = w.strands;
  p.ops = ops;
  p.r1 = x.r1_table();
  p.r2 = x.r2_table();
  p.rb1 = x.rbar1_table();
  p.rb2 = x.rbar2_table();
  return p;
}

}  // namespace

Tuple apply_word(const FiniteYBSet& x, const BraidWord& w, std::span<const Elem> t) {
  check_word(x, w);
  if (t.size() != w.strands) throw Error(ErrorKind::ArityMismatch, "tuple length != strand count");
  Tuple s(t.begin(), t.end());
  for (const auto& g : w.generators) {
    Elem& a = s[g.index - 1];
    Elem& b = s[g.index];
    switch (g.kind) {
      case BraidGenerator::Positive: std::tie(a, b) = x.apply(a, b); break;
      case BraidGenerator::Negative: std::tie(a, b) = x.apply_inverse(a, b); break;
      case BraidGenerator::Virtual: std::swap(a, b); break;
    }
  }
  return s;
}

ColoringSet colorings(const FiniteYBSet& x, const BraidWord& w, const ScanOptions& opt) {
  check_word(x, w);
  const auto ops = lower(w);
  const std::uint64_t total = ybcore::tuple_count(x.size(), w.strands);
  const auto res = scan(problem(x, w, ops), total, true, opt);
  ColoringSet out{w, {}};
  out.fixed.reserve(res.fixed.size());
  for (std::uint64_t idx : res.fixed) out.fixed.push_back(ybcore::tuple_at(idx, x.size(), w.strands));
  return out;
}

std::uint64_t count_colorings(const FiniteYBSet& x, const BraidWord& w, const ScanOptions& opt) {
  check_word(x, w);
  const auto ops = lower(w);
  const std::uint64_t total = ybcore::tuple_count(x.size(), w.strands);
  return scan(problem(x, w, ops), total, false, opt).histogram[0];
}

modalg::GroupRingElement state_sum(const FiniteYBSet& x, const ybcore::CochainTable& psi, const BraidWord& w,
                                   const ScanOptions& opt) {
  check_word(x, w);
  if (psi.arity() != 2 || psi.set_size() != x.size()) {
    throw Error(ErrorKind::ArityMismatch, "state sum needs a 2-cochain on X");
  }
  const std::int64_t m = psi.modulus();
  if (m > (std::int64_t{1} << 20)) throw Error(ErrorKind::ModulusMismatch, "state sum modulus too large");
  const std::uint32_t n = x.size();
  std::vector<std::uint32_t> pos(static_cast<std::size_t>(n) * n), neg(pos.size(), 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const std::size_t pr = x.pair(a, b);
      pos[pr] = static_cast<std::uint32_t>(psi(a, b));
      if (x.has_inverse()) {
        auto [c, d] = x.apply_inverse(a, b);
        neg[pr] = static_cast<std::uint32_t>((m - psi(c, d)) % m);
      }
    }
  }
  const auto ops = lower(w);
  auto p = problem(x, w, ops);
  p.pos_weight = pos;
  p.neg_weight = neg;
  p.modulus = static_cast<std::uint32_t>(m);
  const auto res = scan(p, ybcore::tuple_count(n, w.strands), false, opt);
  std::vector<modalg::BigInt> coeffs(res.histogram.begin(), res.histogram.end());
  return modalg::GroupRingElement(m, std::move(coeffs));
}

}  // namespace ybk::vknots
