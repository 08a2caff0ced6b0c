#include "ybk/vknots/equivalence.hpp"

#include <set>

namespace ybk::vknots {

namespace {

using G = BraidGenerator;
using Gens = std::vector<G>;

G sigma(std::uint32_t i, int sign) { return {sign > 0 ? G::Positive : G::Negative, i}; }
G virt(std::uint32_t i) { return {G::Virtual, i}; }

bool inverse_pair(const G& a, const G& b) {
  return a.index == b.index && ((a.kind == G::Positive && b.kind == G::Negative) ||
                                (a.kind == G::Negative && b.kind == G::Positive) ||
                                (a.kind == G::Virtual && b.kind == G::Virtual));
}

int sign_of(const G& g) { return g.kind == G::Positive ? 1 : -1; }

class Collector {
 public:
  explicit Collector(const BraidWord& w) : origin_(w) { seen_.insert(w); }

  void add(std::uint32_t strands, Gens gens) {
    BraidWord w{strands, std::move(gens)};
    if (seen_.insert(w).second) out_.push_back(std::move(w));
  }
  // Replace gens[pos, pos+len) by `repl`.
  void splice(std::size_t pos, std::size_t len, const Gens& repl) {
    Gens g(origin_.generators.begin(), origin_.generators.begin() + static_cast<std::ptrdiff_t>(pos));
    g.insert(g.end(), repl.begin(), repl.end());
    g.insert(g.end(), origin_.generators.begin() + static_cast<std::ptrdiff_t>(pos + len), origin_.generators.end());
    add(origin_.strands, std::move(g));
  }

  std::vector<BraidWord> take() { return std::move(out_); }

 private:
  const BraidWord& origin_;
  std::set<BraidWord> seen_;
  std::vector<BraidWord> out_;
};

void local_moves(const BraidWord& w, Collector& c) {
  const Gens& g = w.generators;
  const std::size_t len = g.size();
  const std::uint32_t k = w.strands;

  for (std::size_t p = 0; p + 1 < len; ++p) {
    const G a = g[p], b = g[p + 1];
    const std::uint32_t d = a.index > b.index ? a.index - b.index : b.index - a.index;
    if (d >= 2) c.splice(p, 2, {b, a});
    if (inverse_pair(a, b)) c.splice(p, 2, {});
  }

  for (std::size_t p = 0; p + 2 < len; ++p) {
    const G a = g[p], b = g[p + 1], e = g[p + 2];
    const bool same_kind = a.kind == b.kind && b.kind == e.kind;
    // s_i s_j s_i = s_j s_i s_j for |i - j| = 1, equal signs; same for v.
    if (same_kind && a.index == e.index && (b.index == a.index + 1 || a.index == b.index + 1)) {
      c.splice(p, 3, {b, a, b});
    }
    // s_i^e v_{i+1} v_i = v_{i+1} v_i s_{i+1}^e
    if (a.kind != G::Virtual && b.kind == G::Virtual && e.kind == G::Virtual && b.index == a.index + 1 &&
        e.index == a.index) {
      c.splice(p, 3, {b, e, sigma(a.index + 1, sign_of(a))});
    }
    if (a.kind == G::Virtual && b.kind == G::Virtual && e.kind != G::Virtual && b.index + 1 == a.index &&
        e.index == a.index) {
      c.splice(p, 3, {sigma(b.index, sign_of(e)), a, b});
    }
  }

  for (std::size_t p = 0; p <= len; ++p) {
    for (std::uint32_t i = 1; i < k; ++i) {
      c.splice(p, 0, {sigma(i, 1), sigma(i, -1)});
      c.splice(p, 0, {sigma(i, -1), sigma(i, 1)});
      c.splice(p, 0, {virt(i), virt(i)});
    }
  }

  for (std::size_t r = 1; r < len; ++r) {
    Gens rot(g.begin() + static_cast<std::ptrdiff_t>(r), g.end());
    rot.insert(rot.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(r));
    c.add(k, std::move(rot));
  }

  for (std::uint32_t i = 1; i < k; ++i) {
    for (const auto& [head, tail] : {std::pair{sigma(i, 1), sigma(i, -1)}, std::pair{sigma(i, -1), sigma(i, 1)},
                                     std::pair{virt(i), virt(i)}}) {
      Gens conj{head};
      conj.insert(conj.end(), g.begin(), g.end());
      conj.push_back(tail);
      c.add(k, std::move(conj));
    }
  }
}

void stabilization_moves(const BraidWord& w, Collector& c) {
  const Gens& g = w.generators;
  const std::uint32_t k = w.strands;

  for (const G extra : {sigma(k, 1), sigma(k, -1), virt(k)}) {
    Gens right = g;
    right.push_back(extra);
    c.add(k + 1, std::move(right));
  }
  for (const G extra : {sigma(1, 1), sigma(1, -1), virt(1)}) {
    Gens left{extra};
    for (G x : g) left.push_back({x.kind, x.index + 1});
    c.add(k + 1, std::move(left));
  }

  // Destabilize when the last generator is the only one touching the last strand.
  if (!g.empty() && k >= 2 && g.back().index == k - 1) {
    bool alone = true;
    for (std::size_t p = 0; p + 1 < g.size(); ++p) alone = alone && g[p].index != k - 1;
    if (alone) c.add(k - 1, Gens(g.begin(), g.end() - 1));
  }
}

}  // namespace

std::vector<BraidWord> equivalent_words(const BraidWord& w) {
  Collector c(w);
  local_moves(w, c);
  stabilization_moves(w, c);
  return c.take();
}

std::vector<BraidWord> equivalent_words_without_stabilization(const BraidWord& w) {
  Collector c(w);
  local_moves(w, c);
  return c.take();
}

std::vector<BraidWord> stabilizations(const BraidWord& w) {
  Collector c(w);
  stabilization_moves(w, c);
  return c.take();
}

}  // namespace ybk::vknots
