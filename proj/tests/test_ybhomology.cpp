#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ybk/modalg/lattice.hpp"
#include "ybk/ybcore/constructors.hpp"
#include "ybk/ybcore/omega.hpp"
#include "ybk/ybhomology/chain.hpp"
#include "ybk/ybhomology/cohomology.hpp"
#include "ybk/ybhomology/cube.hpp"
#include "ybk/ybhomology/obstruction.hpp"

using namespace ybk;
using namespace ybk::ybhomology;
using fixture::kind_of;
using ybcore::make_affine;

namespace {

std::vector<FiniteYBSet> small_sets() {
  return {ybcore::make_swap(1),          ybcore::make_swap(3),          make_affine({3, 1, 2, 2}),
          make_affine({4, 1, -1, -1}),   make_affine({5, 2, 1, 3}),     make_affine({4, 3, 3, 1}),
          ybcore::make_block(2, 1, 1),   ybcore::make_omega(2, 2, 1)};
}

oracle::Chain as_oracle(const FormalChain& c) {
  oracle::Chain out;
  for (const auto& [t, k] : c.terms()) out[oracle::Tup(t.begin(), t.end())] = k;
  return out;
}

template <class F>
void each_tuple(std::uint32_t n, std::uint32_t len, F&& f) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < len; ++i) total *= n;
  Tuple t(len);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = int(len) - 1; i >= 0; --i) t[i] = Elem(r % n), r /= n;
    f(t);
  }
}

// f(c) for a chain c, f read through the integers in [0, m)
long evaluate(const CochainTable& f, const oracle::Chain& c) {
  long s = 0;
  for (const auto& [t, k] : c) s += k * f.at(std::span<const Elem>(t));
  return s;
}

std::uint64_t group_order(const std::vector<std::int64_t>& factors) {
  std::uint64_t o = 1;
  for (auto f : factors) o *= std::uint64_t(f);
  return o;
}

std::vector<oracle::Vec> as_vecs(const std::vector<CochainTable>& gens) {
  std::vector<oracle::Vec> out;
  for (const auto& g : gens) out.emplace_back(g.values().begin(), g.values().end());
  return out;
}

}  // namespace

TEST_CASE("edge ids") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::uint32_t id = 0; id < edge_count(n); ++id) {
      const auto e = edge_at(n, id);
      CHECK(e.direction < n);
      CHECK((e.corner >> e.direction & 1u) == 0);
      CHECK(e.corner < (1u << n));
      CHECK(edge_id(n, e) == id);
      seen.insert({e.direction, e.corner});
    }
    CHECK(seen.size() == edge_count(n));
  }
}

TEST_CASE("2-cube is R") {
  const auto x = make_affine({4, 1, -1, -1});
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      const std::array<Elem, 2> init{a, b};
      const auto c = color_cube(x, init);
      CHECK(c.color(0, 0) == a);
      CHECK(c.color(1, 1) == b);
      CHECK(c.color(1, 0) == x.r1(a, b));
      CHECK(c.color(0, 2) == x.r2(a, b));
      CHECK(face_tuple(c, 1, 1) == Tuple{b});
      CHECK(face_tuple(c, 2, 0) == Tuple{a});
      CHECK(face_tuple(c, 1, 0) == Tuple{x.r1(a, b)});
      CHECK(face_tuple(c, 2, 1) == Tuple{x.r2(a, b)});
    }
}

TEST_CASE("3-cube faces") {
  const auto x = make_affine({3, 1, 2, 2});
  const std::array<Elem, 3> init{1, 2, 0};
  const auto c = color_cube(x, init);
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(c.color(i, (1u << i) - 1) == init[i]);
  const auto R1 = [&](Elem a, Elem b) { return x.r1(a, b); };
  const auto R2 = [&](Elem a, Elem b) { return x.r2(a, b); };
  CHECK(face_tuple(c, 3, 0) == Tuple{1, 2});
  CHECK(face_tuple(c, 1, 1) == Tuple{2, 0});
  CHECK(face_tuple(c, 2, 0) == Tuple{1, R1(2, 0)});
  CHECK(face_tuple(c, 3, 1) == Tuple{R2(1, R1(2, 0)), R2(2, 0)});
  CHECK(face_tuple(c, 1, 0) == Tuple{R1(1, 2), R1(R2(1, 2), 0)});
  CHECK(face_tuple(c, 2, 1) == Tuple{R2(1, 2), 0});
}

TEST_CASE("a non-YB table cannot color the 3-cube consistently") {
  // R(x, y) = (y + 1, x) on Z_3 with one entry changed
  std::vector<Elem> r1(9), r2(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) r1[a * 3 + b] = (b + 1) % 3, r2[a * 3 + b] = a;
  r1[4] = 0;
  const FiniteYBSet bad(3, r1, r2);
  REQUIRE(!oracle::ybe_holds(bad));
  const auto fail = ybcore::verify_ybe(bad).first_failure;
  REQUIRE(fail);
  const std::array<Elem, 3> init{std::get<0>(*fail), std::get<1>(*fail), std::get<2>(*fail)};
  CHECK(kind_of([&] { color_cube(bad, init); }) == ErrorKind::Inconsistent);
  int inconsistent = 0;
  each_tuple(3, 3, [&](const Tuple& t) {
    if (kind_of([&] { color_cube(bad, t); })) ++inconsistent;
  });
  CHECK(inconsistent > 0);
  const std::array<Elem, 1> one{0};
  CHECK(color_cube(bad, one).colors().size() == 1);
}

TEST_CASE("boundary agrees with the explicit low-dimensional formulas") {
  for (const auto& x : small_sets()) {
    if (x.size() > 5) continue;
    const auto n = x.size();
    each_tuple(n, 2, [&](const Tuple& t) { REQUIRE(as_oracle(boundary(x, t)) == oracle::d2(x, t[0], t[1])); });
    each_tuple(n, 3, [&](const Tuple& t) { REQUIRE(as_oracle(boundary(x, t)) == oracle::d3(x, t[0], t[1], t[2])); });
    each_tuple(n, 4, [&](const Tuple& t) {
      REQUIRE(as_oracle(boundary(x, t)) == oracle::d4(x, t[0], t[1], t[2], t[3]));
    });
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  std::mt19937 rng(5);
  for (const auto& x : small_sets()) {
    for (std::uint32_t len = 2; len <= 6; ++len) {
      std::uniform_int_distribution<Elem> pick(0, x.size() - 1);
      for (int trial = 0; trial < 40; ++trial) {
        Tuple t(len);
        for (auto& e : t) e = pick(rng);
        const auto d = boundary(x, t);
        CHECK(d.arity() == len - 1);
        if (len >= 3) CHECK(boundary(x, d).is_zero());
      }
    }
  }
}

TEST_CASE("coboundary matrices compose to zero") {
  for (const auto& x : small_sets()) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      std::uint64_t rows = 1;
      for (std::uint32_t i = 0; i < n + 2; ++i) rows *= x.size();
      if (rows > 5000) continue;
      const auto a = integer_coboundary_matrix(x, n);
      const auto b = integer_coboundary_matrix(x, n + 1);
      REQUIRE(b.cols() == a.rows());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < a.rows(); ++k) s += b(i, k) * a(k, j);
          REQUIRE(s == 0);
        }
    }
  }
}

TEST_CASE("coboundary is f evaluated on the boundary") {
  std::mt19937 rng(9);
  for (const auto& x : small_sets()) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      CochainTable f(n, x.size(), 7);
      std::uniform_int_distribution<int> v(0, 6);
      for (std::uint64_t i = 0; i < f.values().size(); ++i) f.set(i, v(rng));
      const auto df = coboundary(x, f);
      CHECK(df.arity() == n + 1);
      for (int trial = 0; trial < 30; ++trial) {
        Tuple w(n + 1);
        for (auto& e : w) e = std::uniform_int_distribution<Elem>(0, x.size() - 1)(rng);
        const long expect = oracle::md(evaluate(f, as_oracle(boundary(x, w))), 7);
        CHECK(df.at(std::span<const Elem>(w)) == expect);
        CHECK(oracle::md(coboundary(x, f, w), 7) == expect);
      }
    }
  }
}

TEST_CASE("reference cocycles") {
  const auto x4 = make_affine({4, 1, -1, -1});
  const auto f4 = fixture::z4();
  CHECK(is_cocycle(x4, f4));
  CHECK(is_type_one(x4, f4));
  CHECK(!is_coboundary(x4, f4));
  const auto x3 = make_affine({3, 1, 2, 2});
  for (long q1 = 0; q1 < 3; ++q1)
    for (long q2 = 0; q2 < 3; ++q2)
      for (long q3 = 0; q3 < 3; ++q3) {
        const auto f = fixture::z3(q1, q2, q3);
        CHECK(is_cocycle(x3, f));
        CHECK(is_type_one(x3, f));
      }
  // the cocycle space contains them
  for (auto [x, f] : {std::pair{x4, f4}, std::pair{x3, fixture::z3(1, 2, 1)}}) {
    const auto gens = cocycle_space(x, 2, f.modulus(), true);
    const auto sp = oracle::span(as_vecs(gens), f.values().size(), f.modulus());
    CHECK(sp.count(oracle::Vec(f.values().begin(), f.values().end())) == 1);
    for (const auto& g : gens) CHECK(is_cocycle(x, g));
  }
}

TEST_CASE("cocycle spaces against exhaustive search") {
  struct Case {
    FiniteYBSet x;
    std::int64_t m;
  };
  for (const auto& [x, m] : std::vector<Case>{{make_affine({3, 1, 2, 2}), 3},
                                              {ybcore::make_swap(2), 2},
                                              {ybcore::make_swap(2), 4},
                                              {ybcore::make_swap(3), 2},
                                              {make_affine({4, 1, -1, -1}), 2},
                                              {make_affine({2, 1, 1, 1}), 4}}) {
    const auto n = x.size();
    const std::uint64_t cells = n * n;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < cells; ++i) total *= std::uint64_t(m);
    if (total > 300000) continue;
    std::vector<oracle::Chain> bds;
    each_tuple(n, 3, [&](const Tuple& t) { bds.push_back(oracle::d3(x, t[0], t[1], t[2])); });
    const auto w = ybcore::biquandle_witness(x);
    std::uint64_t z = 0, z1 = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      CochainTable f(2, n, m);
      std::uint64_t r = code;
      for (std::uint64_t i = 0; i < cells; ++i) f.set(i, std::int64_t(r % m)), r /= m;
      bool ok = true;
      for (const auto& c : bds)
        if (oracle::md(evaluate(f, c), m) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++z;
      bool t1 = true;
      for (Elem a = 0; a < n; ++a) t1 = t1 && f(w.x_of[a], a) == 0 && f(a, w.y_of[a]) == 0;
      z1 += t1;
    }
    CHECK(oracle::span(as_vecs(cocycle_space(x, 2, m)), cells, m).size() == z);
    CHECK(oracle::span(as_vecs(cocycle_space(x, 2, m, true)), cells, m).size() == z1);
    const auto rep = cohomology_group(x, 2, m);
    CHECK(group_order(rep.cocycle_factors) == z);
    CHECK(group_order(rep.invariant_factors) * group_order(rep.coboundary_factors) == z);
  }
}

TEST_CASE("cohomology groups match a brute-force quotient") {
  struct Case {
    FiniteYBSet x;
    std::uint32_t dim;
    std::int64_t m;
  };
  for (const auto& [x, dim, m] : std::vector<Case>{{make_affine({3, 1, 2, 2}), 2, 3},
                                                   {make_affine({3, 1, 2, 2}), 1, 3},
                                                   {make_affine({4, 1, -1, -1}), 2, 4},
                                                   {make_affine({4, 1, -1, -1}), 1, 4},
                                                   {ybcore::make_swap(2), 2, 4},
                                                   {ybcore::make_swap(2), 3, 2},
                                                   {ybcore::make_swap(1), 1, 6},
                                                   {ybcore::make_swap(1), 2, 6},
                                                   {ybcore::make_swap(1), 3, 6},
                                                   {make_affine({2, 1, 1, 1}), 3, 2}}) {
    const auto rep = cohomology_group(x, dim, m);
    CHECK(rep.dimension == dim);
    CHECK(rep.modulus == m);
    std::uint64_t cells = 1;
    for (std::uint32_t i = 0; i < dim; ++i) cells *= x.size();
    std::vector<oracle::Vec> img;
    if (dim >= 2) {
      // delta of indicator (dim-1)-cochains
      std::uint64_t lower = cells / x.size();
      for (std::uint64_t i = 0; i < lower; ++i) {
        CochainTable g(dim - 1, x.size(), m);
        g.set(i, 1);
        const auto dg = coboundary(x, g);
        img.emplace_back(dg.values().begin(), dg.values().end());
      }
    }
    const auto k = as_vecs(rep.cocycle_generators);
    CHECK(oracle::torsion_profile(k, img, cells, m) == oracle::torsion_profile(rep.invariant_factors, m));
    CHECK(group_order(rep.invariant_factors) * group_order(rep.coboundary_factors) ==
          group_order(rep.cocycle_factors));
    for (auto f : rep.invariant_factors) CHECK((f > 1 && m % f == 0));
  }
}

TEST_CASE("cohomology examples") {
  const auto h = cohomology_group(make_affine({3, 1, 2, 2}), 2, 3);
  CHECK(h.invariant_factors == std::vector<std::int64_t>{3, 3, 3});
  const auto h4 = cohomology_group(make_affine({4, 1, -1, -1}), 2, 4);
  CHECK(oracle::torsion_profile(h4.invariant_factors, 4) ==
        oracle::torsion_profile(std::vector<std::int64_t>{2, 2, 2, 2, 4, 4, 4, 4}, 4));
  const auto single = cohomology_group(ybcore::make_swap(1), 2, 5);
  CHECK(group_order(single.cocycle_factors) * 1 == group_order(single.invariant_factors) *
                                                       group_order(single.coboundary_factors));
  const auto j = to_json(h);
  CHECK(j.at("invariant_factors") == nlohmann::json{3, 3, 3});
  CHECK(kind_of([] { cohomology_group(make_affine({5, 2, 1, 3}), 5, 5, 1000); }) == ErrorKind::ResourceBound);
}

TEST_CASE("coboundaries") {
  std::mt19937 rng(11);
  for (const auto& x : small_sets()) {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      CochainTable g(n, x.size(), 4);
      for (std::uint64_t i = 0; i < g.values().size(); ++i) g.set(i, std::uniform_int_distribution<int>(0, 3)(rng));
      const auto f = coboundary(x, g);
      CHECK(is_cocycle(x, f));
      const auto w = is_coboundary(x, f);
      REQUIRE(w);
      CHECK(coboundary(x, *w) == f);
    }
    CochainTable one(1, x.size(), 3);
    CHECK(is_coboundary(x, one));
    if (x.size() > 1) {
      one.set(std::uint64_t(0), 1);
      CHECK(!is_coboundary(x, one));
    }
  }
}

TEST_CASE("type-one constraints need a biquandle") {
  std::vector<Elem> r1{0, 0, 1, 1}, r2{0, 1, 0, 1};  // identity map
  const FiniteYBSet id(2, r1, r2);
  CHECK(kind_of([&] { cocycle_space(id, 2, 2, true); }) == ErrorKind::NotBiquandle);
  CHECK(!cocycle_space(id, 2, 2).empty());
}

TEST_CASE("obstruction cocycles") {
  for (const auto& x : small_sets()) {
    if (x.size() > 5) continue;
    for (std::int64_t p : {2, 3}) {
      auto gens = cocycle_space(x, 2, p);
      if (gens.size() > 1) gens.push_back(gens[0] + gens[1]);
      for (const auto& f : gens) {
        const auto psi = obstruction_cocycle(x, f);
        CHECK(psi.arity() == 3);
        CHECK(psi.modulus() == p);
        CHECK(is_cocycle(x, psi));
        each_tuple(x.size(), 3, [&](const Tuple& t) {
          const long s = evaluate(f, oracle::d3(x, t[0], t[1], t[2]));
          REQUIRE(oracle::md(s, p) == 0);
          REQUIRE(psi.at(std::span<const Elem>(t)) == oracle::md(s / p, p));
        });
      }
    }
  }
  const auto x = make_affine({3, 1, 2, 2});
  CochainTable bad(2, 3, 3);
  bad.set(std::uint64_t(1), 1);
  REQUIRE(!is_cocycle(x, bad));
  CHECK(kind_of([&] { obstruction_cocycle(x, bad); }) == ErrorKind::NotACocycle);
}

TEST_CASE("chain rendering") {
  FormalChain c(2);
  CHECK(render(c) == "0");
  c.add({2, 2}, -1);
  c.add({0, 1}, 1);
  CHECK(render(c) == "+1·(0,1) -1·(2,2)");
  c.add({0, 1}, -1);
  CHECK(c.terms().size() == 1);
  CHECK(c.coefficient({0, 1}) == 0);
  const auto j = to_json(c);
  CHECK(j.at("arity") == 2);
  CHECK(j.at("terms").size() == 1);
  CHECK(j.at("terms")[0].at("coefficient") == -1);
}
