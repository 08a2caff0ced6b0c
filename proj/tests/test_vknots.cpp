#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ybk/ybcore/constructors.hpp"
#include "ybk/ybhomology/cohomology.hpp"
#include "ybk/ybhomology/obstruction.hpp"
#include "ybk/vknots/braid.hpp"
#include "ybk/vknots/coloring.hpp"
#include "ybk/vknots/equivalence.hpp"

using namespace ybk;
using namespace ybk::vknots;
using fixture::kind_of;
using modalg::GroupRingElement;
using ybcore::make_affine;

namespace {

std::vector<oracle::Gen> gens(const BraidWord& w) {
  std::vector<oracle::Gen> out;
  for (const auto& g : w.generators)
    out.push_back({g.kind == BraidGenerator::Positive ? 's' : g.kind == BraidGenerator::Negative ? 'S' : 'v',
                   int(g.index)});
  return out;
}

GroupRingElement oracle_sum(const FiniteYBSet& x, const ybcore::CochainTable& psi, const BraidWord& w) {
  const auto h = oracle::state_histogram(
      x, gens(w), int(w.strands), [&](Elem a, Elem b) { return long(psi(a, b)); }, psi.modulus());
  return fixture::poly(psi.modulus(), h);
}

BraidWord random_word(std::mt19937& rng, std::uint32_t strands, int len) {
  BraidWord w{strands, {}};
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::uint32_t> idx(1, strands - 1);
  for (int i = 0; i < len; ++i) w.generators.push_back({BraidGenerator::Kind(kind(rng)), idx(rng)});
  return w;
}

std::vector<BraidWord> corpus() {
  std::vector<BraidWord> out;
  for (const auto& k : fixture::kishino) out.push_back(parse_braid(k));
  for (const char* w : {"s1", "s1^2", "s1^4", "s1^-3", "s1 v1", "s1 v1 s1 v1", "s1^-1 s2 s1^-1 s2 s1^-1 s2", "v1",
                        "s1^2 v1", "s1 s2^-1 v2 s1", ""})
    out.push_back(parse_braid(w, 3));
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  const auto k1 = parse_braid(fixture::kishino[0]);
  CHECK(k1.strands == 3);
  CHECK(k1.generators.size() == 8);
  CHECK(k1.generators[0] == BraidGenerator{BraidGenerator::Positive, 1});
  CHECK(k1.generators[1] == BraidGenerator{BraidGenerator::Virtual, 1});
  CHECK(k1.generators[2] == BraidGenerator{BraidGenerator::Negative, 1});
  CHECK(k1.generators[7] == BraidGenerator{BraidGenerator::Negative, 2});
  CHECK(to_string(k1) == fixture::kishino[0]);

  const auto c = parse_braid("s1^3");
  CHECK(c.strands == 2);
  CHECK(c.generators == std::vector<BraidGenerator>(3, {BraidGenerator::Positive, 1}));
  CHECK(parse_braid("s1^-2").generators == std::vector<BraidGenerator>(2, {BraidGenerator::Negative, 1}));
  CHECK(parse_braid("v2^-2").generators == std::vector<BraidGenerator>(2, {BraidGenerator::Virtual, 2}));
  CHECK(parse_braid("  s1   v1 ").generators.size() == 2);
  CHECK(parse_braid("").generators.empty());
  CHECK(parse_braid("").strands == 1);
  CHECK(parse_braid("s1", 4).strands == 4);
  CHECK(parse_braid("s1^0").generators.empty());

  CHECK(kind_of([] { parse_braid("x2"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_braid("s"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_braid("s1^"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_braid("s0"); }));
  CHECK(kind_of([] { parse_braid("s3", 3); }) == ErrorKind::IndexOutOfRange);
  try {
    parse_braid("s1 s2 q");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }

  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 4, i % 9);
    auto back = parse_braid(to_string(w), 4);
    CHECK(back == w);
    CHECK(inverse(inverse(w)) == w);
    CHECK(concat(w, inverse(w)).generators.size() == 2 * w.generators.size());
  }
}

TEST_CASE("apply_word") {
  const auto sw = ybcore::make_swap(3);
  const auto w = parse_braid("s1 v2 s1^-1 s2");
  const std::array<Elem, 3> t{0, 1, 2};
  // each generator transposes
  CHECK(apply_word(sw, w, t) == Tuple{2, 0, 1});

  const auto x = make_affine({4, 1, -1, -1});
  const std::array<Elem, 2> p{1, 3};
  CHECK(apply_word(x, parse_braid("s1"), p) == Tuple{1, 3});

  std::mt19937 rng(4);
  for (const auto& y : {x, make_affine({3, 1, 2, 2}), make_affine({5, 2, 1, 3})}) {
    const auto inv = oracle::inverse_table(y);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_word(rng, 3, trial % 7);
      const auto b = random_word(rng, 3, trial % 5);
      Tuple u(3);
      for (auto& e : u) e = std::uniform_int_distribution<Elem>(0, y.size() - 1)(rng);
      CHECK(apply_word(y, concat(a, b), u) == apply_word(y, b, apply_word(y, a, u)));
      CHECK(apply_word(y, concat(a, inverse(a)), u) == u);
      // oracle trace
      Tuple s = u;
      for (const auto& g : a.generators) {
        Elem &l = s[g.index - 1], &r = s[g.index];
        if (g.kind == BraidGenerator::Virtual) std::swap(l, r);
        else if (g.kind == BraidGenerator::Positive) std::tie(l, r) = oracle::R(y, l, r);
        else std::tie(l, r) = inv[std::size_t(l) * y.size() + r];
      }
      CHECK(apply_word(y, a, u) == s);
    }
  }
}

TEST_CASE("coloring counts") {
  CHECK(count_colorings(make_affine({4, 1, -1, -1}), parse_braid("", 2)) == 16);
  CHECK(count_colorings(make_affine({4, 1, -1, -1}), parse_braid("s1")) == 4);
  for (const auto& row : fixture::table1) {
    const auto x = make_affine({15, 4, 11, row[0]});
    for (int k = 0; k < 6; ++k) CHECK(count_colorings(x, parse_braid(fixture::kishino[k])) == std::uint64_t(row[k + 1]));
  }
  for (const auto& x : {make_affine({3, 1, 2, 2}), make_affine({4, 1, -1, -1}), make_affine({5, 2, 1, 3}),
                        ybcore::make_block(2, 1, 1)}) {
    for (const auto& w : corpus()) {
      const auto n = count_colorings(x, w);
      CHECK(n == std::uint64_t(oracle::count_fixed(x, gens(w), int(w.strands))));
      const auto cs = colorings(x, w);
      CHECK(cs.fixed.size() == n);
      CHECK(std::is_sorted(cs.fixed.begin(), cs.fixed.end()));
      for (const auto& t : cs.fixed) CHECK(apply_word(x, w, t) == t);
    }
  }
}

TEST_CASE("state sums") {
  const auto x4 = make_affine({4, 1, -1, -1});
  const auto f4 = fixture::z4();
  CHECK(state_sum(x4, f4, parse_braid("s1^4")) == fixture::poly(4, {8, 0, 0, 8}));
  CHECK(state_sum(x4, f4, parse_braid("s1^-4")) == fixture::poly(4, {8, 8}));
  CHECK(state_sum(x4, f4, parse_braid("s1^-1 s2 s1^-1 s2 s1^-1 s2")) == fixture::poly(4, {16, 0, 48}));
  CHECK(state_sum(x4, f4, parse_braid("")) == fixture::poly(4, {4}));
  for (int n = -20; n <= 20; ++n) {
    const auto w = parse_braid(n ? "s1^" + std::to_string(n) : "", 2);
    CHECK(state_sum(x4, f4, w) == fixture::torus(n));
  }
  for (int n = 1; n <= 8; ++n) {
    std::string w;
    for (int i = 0; i < n; ++i) w += "s1 v1 ";
    CHECK(state_sum(x4, f4, parse_braid(w)) == fixture::virtual_family(n));
  }
  const auto x3 = make_affine({3, 1, 2, 2});
  CHECK(state_sum(x3, fixture::z3(1, 0, 0), parse_braid("s1 v1")) == fixture::poly(3, {1, 1, 1}));
  for (int n = 0; n <= 9; ++n) {
    const auto w = parse_braid((n ? "s1^" + std::to_string(n) + " " : "") + "v1");
    for (long q1 = 0; q1 < 3; ++q1) {
      const auto v = state_sum(x3, fixture::z3(q1, 2, 1), w);
      auto expect = fixture::poly(3, {3});
      if (n % 3) {
        expect = fixture::poly(3, {1});
        expect.add_term(1, q1);
        expect.add_term(1, (3 - q1) % 3);
      }
      CHECK(v == expect);
    }
  }

  std::mt19937 rng(8);
  for (const auto& x : {x3, x4, make_affine({5, 2, 1, 3})}) {
    ybcore::CochainTable psi(2, x.size(), 5);
    for (std::uint64_t i = 0; i < psi.values().size(); ++i) psi.set(i, std::uniform_int_distribution<int>(0, 4)(rng));
    for (const auto& w : corpus()) {
      const auto v = state_sum(x, psi, w);
      CHECK(v == oracle_sum(x, psi, w));
      CHECK(v.augmentation() == count_colorings(x, w));
      CHECK(state_sum(x, psi, w, {4, simd::active_isa()}) == v);
      CHECK(state_sum(x, psi, w, {1, simd::Isa::Scalar}) == v);
    }
  }
  CHECK(kind_of([&] { state_sum(x4, fixture::z3(1, 0, 0), parse_braid("s1")); }));
}

TEST_CASE("equivalent words: examples") {
  auto has = [](const std::vector<BraidWord>& ws, const BraidWord& w) {
    return std::find(ws.begin(), ws.end(), w) != ws.end();
  };
  const auto e1 = equivalent_words(parse_braid("s1"));
  CHECK(has(e1, parse_braid("s1 s2", 3)));
  CHECK(has(e1, parse_braid("s1 s2^-1", 3)));
  CHECK(has(e1, parse_braid("s1 v2", 3)));
  CHECK(has(e1, parse_braid("s1 s1 s1^-1")));
  CHECK(has(equivalent_words(parse_braid("s1 s2 s1")), parse_braid("s2 s1 s2")));
  CHECK(has(equivalent_words(parse_braid("v1 v1")), parse_braid("", 2)));
  CHECK(has(equivalent_words(parse_braid("v1 v2 v1")), parse_braid("v2 v1 v2")));
  CHECK(has(equivalent_words(parse_braid("s1 v2 v1")), parse_braid("v2 v1 s2")));
  CHECK(has(equivalent_words(parse_braid("s1 s3")), parse_braid("s3 s1")));
  CHECK(has(equivalent_words(parse_braid("s1 s2 v1")), parse_braid("s2 v1 s1")));
  const auto w = parse_braid("s1 s2^-1 v1");
  CHECK(!has(equivalent_words(w), w));
  CHECK(equivalent_words(w) == equivalent_words(w));
  for (const auto& u : equivalent_words_without_stabilization(w)) CHECK(u.strands == w.strands);
  for (const auto& u : stabilizations(w)) CHECK(u.strands != w.strands);
}

TEST_CASE("coloring counts and type-one state sums are invariant") {
  struct Case {
    FiniteYBSet x;
    std::vector<ybcore::CochainTable> psis;
  };
  const auto x3 = make_affine({3, 1, 2, 2});
  std::vector<Case> cases{{x3, {fixture::z3(1, 0, 0), fixture::z3(2, 1, 1)}},
                          {make_affine({4, 1, -1, -1}), {fixture::z4()}},
                          {make_affine({5, 2, 1, 3}), {}}};
  std::mt19937 rng(21);
  std::vector<BraidWord> words;
  for (int i = 0; i < 4; ++i) words.push_back(parse_braid(fixture::kishino[i]));
  for (int i = 0; i < 12; ++i) words.push_back(random_word(rng, 2 + i % 2, 2 + i % 6));
  for (auto& c : cases) {
    for (const auto& w : words) {
      const auto n = count_colorings(c.x, w);
      std::vector<GroupRingElement> base;
      for (const auto& p : c.psis) base.push_back(state_sum(c.x, p, w));
      for (const auto& u : equivalent_words(w)) {
        if (u.strands > 5) continue;
        REQUIRE(count_colorings(c.x, u) == n);
        for (std::size_t i = 0; i < c.psis.size(); ++i) REQUIRE(state_sum(c.x, c.psis[i], u) == base[i]);
      }
    }
  }
}

TEST_CASE("stabilization separates a cocycle that is not type one") {
  const auto x = make_affine({3, 1, 2, 2});
  const auto all = ybhomology::cocycle_space(x, 2, 3);
  bool differs = false;
  int non_type_one = 0;
  for (const auto& f : all) {
    if (ybhomology::is_type_one(x, f)) continue;
    ++non_type_one;
    for (const auto& w : {parse_braid("s1"), parse_braid("s1 s2"), parse_braid("", 1)})
      for (const auto& u : stabilizations(w))
        if (state_sum(x, f, u) != state_sum(x, f, w)) differs = true;
  }
  CHECK(non_type_one > 0);
  CHECK(differs);
}

TEST_CASE("obstruction cocycles give trivial state sums") {
  for (const auto& x : {make_affine({3, 1, 2, 2}), make_affine({4, 1, -1, -1})}) {
    const std::int64_t p = x.size();
    // all 1-cocycles by enumeration
    std::uint64_t total = 1;
    for (Elem i = 0; i < x.size(); ++i) total *= p;
    int used = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      ybcore::CochainTable f(1, x.size(), p);
      std::uint64_t r = code;
      for (Elem i = 0; i < x.size(); ++i) f.set(std::uint64_t(i), std::int64_t(r % p)), r /= p;
      if (!ybhomology::is_cocycle(x, f)) continue;
      ++used;
      const auto psi = ybhomology::obstruction_cocycle(x, f);
      for (const auto& w : corpus()) {
        const auto n = count_colorings(x, w);
        CHECK(state_sum(x, psi, w) == fixture::poly(p, {long(n)}));
      }
    }
    CHECK(used > 1);
  }
}
