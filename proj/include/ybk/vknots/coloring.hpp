#pragma once

#include <cstdint>
#include <vector>

#include "ybk/modalg/group_ring.hpp"
#include "ybk/simd/kernels.hpp"
#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybcore/yb_set.hpp"
#include "ybk/vknots/braid.hpp"

namespace ybk::vknots {

using ybcore::Elem;
using ybcore::FiniteYBSet;
using ybcore::Tuple;

/// Colors pass left to right: sigma_i maps positions (i, i+1) through R,
/// its inverse through Rbar, v_i swaps them. Needs inverse tables for sigma^-1.
Tuple apply_word(const FiniteYBSet& x, const BraidWord& w, std::span<const Elem> t);

/// Tuples of X^k fixed by the word, in lexicographic order.
struct ColoringSet {
  BraidWord word;
  std::vector<Tuple> fixed;
};

struct ScanOptions {
  unsigned threads = 1;
  simd::Isa isa = simd::active_isa();
};

ColoringSet colorings(const FiniteYBSet& x, const BraidWord& w, const ScanOptions& opt = {});
std::uint64_t count_colorings(const FiniteYBSet& x, const BraidWord& w, const ScanOptions& opt = {});

/// Sum over colorings of xi^(accumulated weight): +psi(x, y) at a positive
/// crossing with incoming (x, y), -psi(Rbar(x, y)) at a negative one.
modalg::GroupRingElement state_sum(const FiniteYBSet& x, const ybcore::CochainTable& psi, const BraidWord& w,
                                   const ScanOptions& opt = {});

}  // namespace ybk::vknots
