#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ybk::vknots {

struct BraidGenerator {
  enum Kind : std::uint8_t { Positive, Negative, Virtual };
  Kind kind;
  std::uint32_t index;  // 1-based: acts on strands index, index+1

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
  friend auto operator<=>(const BraidGenerator&, const BraidGenerator&) = default;
};

struct BraidWord {
  std::uint32_t strands = 1;
  std::vector<BraidGenerator> generators;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
};

/// Grammar: whitespace separated tokens ('s'|'v') INDEX ('^' SIGNED_INT)?.
/// s1^-1 is the inverse generator, v1^e is |e| copies of v1. Strand count
/// defaults to 1 + max index. Throws SyntaxError (with the byte offset) or
/// IndexOutOfRange when an explicit strand count is too small.
BraidWord parse_braid(std::string_view text, std::optional<std::uint32_t> strands = std::nullopt);

/// Canonical text, one token per generator: "s1 s2^-1 v1". Empty word -> "".
std::string to_string(const BraidWord& w);

/// Throws IndexOutOfRange when a generator index is not in [1, strands).
void validate(const BraidWord& w);

/// Word read backwards with every crossing inverted.
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace ybk::vknots
