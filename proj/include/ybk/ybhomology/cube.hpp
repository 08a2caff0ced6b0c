#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybhomology {

using ybcore::Elem;
using ybcore::FiniteYBSet;
using ybcore::Tuple;

inline constexpr std::uint32_t kMaxCubeDim = 12;

/// Edge of the n-cube: `direction` is 0-based, `corner` holds the fixed
/// coordinates as bits (bit `direction` is always 0).
struct CubeEdge {
  std::uint32_t direction;
  std::uint32_t corner;
};

/// Packed edge id: direction-major, then the corner with the direction bit removed.
std::uint32_t edge_id(std::uint32_t n, CubeEdge e);
CubeEdge edge_at(std::uint32_t n, std::uint32_t id);
inline std::uint32_t edge_count(std::uint32_t n) { return n << (n - 1); }

class CubeColoring {
 public:
  CubeColoring(std::uint32_t dimension, std::vector<Elem> colors)
      : dim_(dimension), colors_(std::move(colors)) {}

  std::uint32_t dimension() const noexcept { return dim_; }
  Elem color(CubeEdge e) const { return colors_[edge_id(dim_, e)]; }
  Elem color(std::uint32_t direction, std::uint32_t corner) const { return color({direction, corner}); }
  const std::vector<Elem>& colors() const noexcept { return colors_; }

 private:
  std::uint32_t dim_;
  std::vector<Elem> colors_;
};

/// Seeds the initial path with `initial` and propagates forward across 2-faces
/// to a fixpoint. Inconsistent / Incomplete can only come from a non-YB table.
CubeColoring color_cube(const FiniteYBSet& x, std::span<const Elem> initial);

/// Initial path of the face where coordinate `axis` (1-based) is frozen at `side`.
Tuple face_tuple(const CubeColoring& c, std::uint32_t axis, std::uint32_t side);

/// Orientation sign of face (axis, side) in dimension n, axis 1-based.
inline int face_sign(std::uint32_t n, std::uint32_t axis, std::uint32_t side) {
  const int s = ((n - axis) % 2 == 0) ? 1 : -1;
  return side == 0 ? s : -s;
}

}  // namespace ybk::ybhomology
