#include "ybk/ybhomology/cube.hpp"

#include <string>

#include "ybk/common/error.hpp"

namespace ybk::ybhomology {

namespace {

constexpr Elem kUncolored = ~Elem{0};

// Drop bit d from a corner: the low bits stay, the high bits shift down.
std::uint32_t squeeze(std::uint32_t corner, std::uint32_t d) {
  const std::uint32_t low = corner & ((1u << d) - 1);
  return low | ((corner >> (d + 1)) << d);
}

std::uint32_t unsqueeze(std::uint32_t packed, std::uint32_t d) {
  const std::uint32_t low = packed & ((1u << d) - 1);
  return low | ((packed >> d) << (d + 1));
}

}  // namespace

std::uint32_t edge_id(std::uint32_t n, CubeEdge e) {
  return (e.direction << (n - 1)) | squeeze(e.corner, e.direction);
}

CubeEdge edge_at(std::uint32_t n, std::uint32_t id) {
  const std::uint32_t d = id >> (n - 1);
  return {d, unsqueeze(id & ((1u << (n - 1)) - 1), d)};
}

CubeColoring color_cube(const FiniteYBSet& x, std::span<const Elem> initial) {
  const auto n = static_cast<std::uint32_t>(initial.size());
  if (n == 0 || n > kMaxCubeDim) {
    throw Error(ErrorKind::InvalidArgument, "cube dimension must be in [1, " + std::to_string(kMaxCubeDim) + "]");
  }
  for (Elem e : initial) {
    if (e >= x.size()) throw Error(ErrorKind::IndexOutOfRange, "tuple entry outside the YB set");
  }
  std::vector<Elem> col(edge_count(n), kUncolored);
  for (std::uint32_t i = 0; i < n; ++i) col[edge_id(n, {i, (1u << i) - 1})] = initial[i];

  auto put = [&](CubeEdge e, Elem v) -> bool {
    Elem& slot = col[edge_id(n, e)];
    if (slot == kUncolored) {
      slot = v;
      return true;
    }
    if (slot != v) {
      throw Error(ErrorKind::Inconsistent, "edge (" + std::to_string(e.direction + 1) + ", corner " +
                                               std::to_string(e.corner) + ") received two colors");
    }
    return false;
  };

  // Sweep all faces until nothing changes; each face fires once both inputs are known.
  const std::uint32_t corners = 1u << n;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        const std::uint32_t bi = 1u << i, bj = 1u << j;
        for (std::uint32_t eps = 0; eps < corners; ++eps) {
          if (eps & (bi | bj)) continue;
          const Elem a = col[edge_id(n, {i, eps})];
          const Elem b = col[edge_id(n, {j, eps | bi})];
          if (a == kUncolored || b == kUncolored) continue;
          changed |= put({j, eps}, x.r1(a, b));
          changed |= put({i, eps | bj}, x.r2(a, b));
        }
      }
    }
  }
  for (std::uint32_t id = 0; id < col.size(); ++id) {
    if (col[id] == kUncolored) {
      const CubeEdge e = edge_at(n, id);
      throw Error(ErrorKind::Incomplete, "edge (" + std::to_string(e.direction + 1) + ", corner " +
                                             std::to_string(e.corner) + ") left uncolored");
    }
  }
  return CubeColoring(n, std::move(col));
}

Tuple face_tuple(const CubeColoring& c, std::uint32_t axis, std::uint32_t side) {
  const std::uint32_t n = c.dimension();
  if (axis < 1 || axis > n || side > 1) throw Error(ErrorKind::IndexOutOfRange, "bad face");
  const std::uint32_t k = axis - 1;
  Tuple out;
  out.reserve(n - 1);
  std::uint32_t before = 0;  // remaining directions already passed, set to 1
  for (std::uint32_t d = 0; d < n; ++d) {
    if (d == k) continue;
    out.push_back(c.color(d, before | (side << k)));
    before |= 1u << d;
  }
  return out;
}

}  // namespace ybk::ybhomology
