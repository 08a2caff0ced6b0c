#pragma once

#include <vector>

#include "ybk/vknots/braid.hpp"

namespace ybk::vknots {

/// One application of each move at each position: far commutation, braid
/// relation (both directions, both signs), v_i v_i = 1, the virtual braid and
/// mixed relations, insertion/removal of sigma sigma^-1 and v v, cyclic
/// rotation, conjugation, and right/left (de)stabilization with sigma^+-1 and v.
/// The closures of all returned words are equivalent to the closure of `w`.
/// Deterministic order, duplicates and `w` itself removed.
std::vector<BraidWord> equivalent_words(const BraidWord& w);

/// Everything above except the stabilization moves.
std::vector<BraidWord> equivalent_words_without_stabilization(const BraidWord& w);

/// Only the stabilization/destabilization moves.
std::vector<BraidWord> stabilizations(const BraidWord& w);

}  // namespace ybk::vknots
