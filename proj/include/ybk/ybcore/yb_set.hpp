#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ybk::ybcore {

/// Elements of a finite YB set are the integers [0, size).
using Elem = std::uint32_t;
using Triple = std::array<Elem, 3>;

struct VerifiedFlags {
  bool ybe = false;
  bool birack = false;
  bool biquandle = false;
};

struct YbeReport {
  bool holds = false;
  std::optional<Triple> first_failure;  // lexicographically first
};

struct BirackReport {
  bool invertible = false;
  bool left_invertible = false;   // y -> R1(x, y) bijective for every x
  bool right_invertible = false;  // x -> R2(x, y) bijective for every y
  // Populated only when invertible; indexed like R1/R2.
  std::vector<Elem> rbar1, rbar2;
};

/// A finite set X with R = (R1, R2): X x X -> X x X given by lookup tables
/// (row index = first argument). Immutable once built; `finalize` is the only
/// way to attach inverse tables and verification flags.
class FiniteYBSet {
 public:
  /// Throws Format when the tables are not size*size or have entries >= size.
  FiniteYBSet(std::uint32_t size, std::vector<Elem> r1, std::vector<Elem> r2);

  std::uint32_t size() const noexcept { return size_; }
  std::size_t pair(Elem x, Elem y) const noexcept { return static_cast<std::size_t>(x) * size_ + y; }

  Elem r1(Elem x, Elem y) const { return r1_[pair(x, y)]; }
  Elem r2(Elem x, Elem y) const { return r2_[pair(x, y)]; }
  std::pair<Elem, Elem> apply(Elem x, Elem y) const { return {r1(x, y), r2(x, y)}; }

  bool has_inverse() const noexcept { return !rbar1_.empty(); }
  /// R inverse; requires has_inverse().
  std::pair<Elem, Elem> apply_inverse(Elem x, Elem y) const { return {rbar1_[pair(x, y)], rbar2_[pair(x, y)]}; }

  std::span<const Elem> r1_table() const noexcept { return r1_; }
  std::span<const Elem> r2_table() const noexcept { return r2_; }
  std::span<const Elem> rbar1_table() const noexcept { return rbar1_; }
  std::span<const Elem> rbar2_table() const noexcept { return rbar2_; }

  const VerifiedFlags& verified() const noexcept { return flags_; }

  friend FiniteYBSet finalize(FiniteYBSet x, unsigned threads);

 private:
  std::uint32_t size_;
  std::vector<Elem> r1_, r2_;
  std::vector<Elem> rbar1_, rbar2_;
  VerifiedFlags flags_;
};

/// Exhaustive check over all size^3 triples; partitioned over `threads` workers
/// by first coordinate, the lexicographically first witness is kept.
YbeReport verify_ybe(const FiniteYBSet& x, unsigned threads = 1);

BirackReport verify_birack(const FiniteYBSet& x);

/// Runs verify_ybe, verify_birack and the biquandle witness search, attaching
/// inverse tables and flags. All constructors return finalized sets.
FiniteYBSet finalize(FiniteYBSet x, unsigned threads = 1);

/// The swap R(x, y) = (y, x).
FiniteYBSet make_swap(std::uint32_t size);

/// x_of[a]: unique x with R(x, a) = (x, a); y_of[a]: unique y with R(a, y) = (a, y).
struct BiquandleWitness {
  std::vector<Elem> x_of;
  std::vector<Elem> y_of;
};

/// Exhaustive search for both witness maps. Throws NotBiquandle naming the
/// first element without a unique solution.
BiquandleWitness biquandle_witness(const FiniteYBSet& x);

}  // namespace ybk::ybcore
