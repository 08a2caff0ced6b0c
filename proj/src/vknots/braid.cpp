#include "ybk/vknots/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ybk/common/error.hpp"

namespace ybk::vknots {

namespace {

[[noreturn]] void syntax(std::size_t pos, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos) + ": " + msg);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<std::uint32_t> strands) {
  BraidWord w;
  std::uint32_t max_index = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char head = text[i];
    if (head != 's' && head != 'v') syntax(i, "expected 's' or 'v'");
    ++i;
    std::uint32_t index = 0;
    {
      const auto* first = text.data() + i;
      const auto* last = text.data() + text.size();
      if (i >= text.size() || !is_digit(text[i])) syntax(i, "expected a generator index");
      auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec != std::errc()) syntax(i, "generator index out of range");
      i += static_cast<std::size_t>(ptr - first);
      if (index == 0) syntax(start + 1, "generator indices start at 1");
    }
    long long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const auto* first = text.data() + i;
      const auto* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first) syntax(i, "expected a signed integer exponent");
      i += static_cast<std::size_t>(ptr - first);
    }
    if (i < text.size() && !is_space(text[i])) syntax(i, std::string("unexpected character '") + text[i] + "'");
    if (exponent > 100000 || exponent < -100000) syntax(start, "exponent too large");

    BraidGenerator::Kind kind = BraidGenerator::Virtual;
    if (head == 's') kind = exponent < 0 ? BraidGenerator::Negative : BraidGenerator::Positive;
    const auto copies = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
    w.generators.insert(w.generators.end(), copies, BraidGenerator{kind, index});
    max_index = std::max(max_index, index);
  }
  w.strands = strands.value_or(max_index + 1);
  validate(w);
  return w;
}

void validate(const BraidWord& w) {
  if (w.strands < 1) throw Error(ErrorKind::IndexOutOfRange, "a braid needs at least one strand");
  for (const auto& g : w.generators) {
    if (g.index < 1 || g.index >= w.strands) {
      throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(g.index) + " needs more than " +
                                                  std::to_string(w.strands) + " strands");
    }
  }
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.generators) {
    if (!out.empty()) out += ' ';
    out += g.kind == BraidGenerator::Virtual ? 'v' : 's';
    out += std::to_string(g.index);
    if (g.kind == BraidGenerator::Negative) out += "^-1";
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
    BraidGenerator g = *it;
    if (g.kind == BraidGenerator::Positive) g.kind = BraidGenerator::Negative;
    else if (g.kind == BraidGenerator::Negative) g.kind = BraidGenerator::Positive;
    out.generators.push_back(g);
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out{std::max(a.strands, b.strands), a.generators};
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

}  // namespace ybk::vknots
