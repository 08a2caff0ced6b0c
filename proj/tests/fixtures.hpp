#pragma once

// Reference cocycle tables, typed in independently of the library copies.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybk/common/error.hpp"
#include "ybk/modalg/group_ring.hpp"
#include "ybk/ybcore/cochain.hpp"

namespace fixture {

using ybk::ybcore::CochainTable;
using ybk::ybcore::Elem;

// on affine(4, 1, -1, -1)
inline CochainTable z4() {
  CochainTable f(2, 4, 4);
  for (auto [a, b] : {std::pair{0, 1}, {1, 1}, {1, 2}, {3, 3}}) f.set(std::array<Elem, 2>{Elem(a), Elem(b)}, 1);
  f.set(std::array<Elem, 2>{0, 2}, 2);
  for (auto [a, b] : {std::pair{1, 0}, {2, 1}, {3, 0}, {3, 2}}) f.set(std::array<Elem, 2>{Elem(a), Elem(b)}, 3);
  return f;
}

// on affine(3, 1, 2, 2)
inline CochainTable z3(long q1, long q2, long q3) {
  CochainTable f(2, 3, 3);
  auto put = [&](Elem a, Elem b, long v) { f.set(std::array<Elem, 2>{a, b}, v); };
  put(1, 0, q1);
  put(2, 2, q2);
  put(1, 1, q3);
  put(2, 0, -q1);
  put(0, 2, q1 - q3);
  put(0, 1, -q1 - q2);
  return f;
}

inline const std::array<std::string, 6> kishino = {
    "s1 v1 s1^-1 s2 s1 v1 s1^-1 s2^-1",
    "s1 v1 s1^-1 s2 s1^-1 v1 s1 s2^-1",
    "s1^-1 v1 s1 s2 s1^-1 v1 s1 s2^-1",
    "s1 s1 v1 s1^-1 s1^-1 s2 s1 s1 v1 s1^-1 s1^-1 s2^-1",
    "s1 s1 v1 s1^-1 s1^-1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
    "s1^-1 s1^-1 v1 s1 s1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
};

// u, then counts for K1..K6 on affine(15, 4, 11, u)
inline const std::vector<std::array<int, 7>> table1 = {
    {2, 225, 15, 75, 15, 15, 45},  {4, 15, 15, 45, 45, 15, 75},   {7, 75, 15, 225, 45, 15, 15},
    {8, 45, 15, 15, 75, 15, 225},  {11, 45, 15, 15, 75, 15, 45},  {13, 15, 15, 45, 225, 15, 75},
    {14, 45, 15, 15, 15, 15, 225},
};

inline ybk::modalg::GroupRingElement poly(std::int64_t m, std::vector<long> c) {
  std::vector<ybk::modalg::BigInt> v(m, 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return {m, v};
}

// cl(s1^n), z4 data
inline ybk::modalg::GroupRingElement torus(long n) {
  const long r = ((n % 16) + 16) % 16;
  if (r % 2) return poly(4, {4});
  if (r % 4 == 2) return poly(4, {4, 0, 4});
  if (r == 4) return poly(4, {8, 0, 0, 8});
  if (r == 8) return poly(4, {8, 0, 8});
  if (r == 12) return poly(4, {8, 8});
  return poly(4, {16});
}

// cl((s1 v1)^n), z4 data
inline ybk::modalg::GroupRingElement virtual_family(long n) {
  if (n % 4 == 1) return poly(4, {3, 1, 1, 3});
  if (n % 4 == 2) return poly(4, {6, 2, 6, 2});
  if (n % 4 == 3) return poly(4, {3, 3, 1, 1});
  if (n % 8 == 4) return poly(4, {12, 0, 4});
  return poly(4, {16});
}

/// Kind of the library error thrown by f, or nullopt if none.
inline std::optional<ybk::ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ybk::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace fixture
