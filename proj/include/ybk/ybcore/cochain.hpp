#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybcore {

using Tuple = std::vector<Elem>;

/// Number of tuples in X^arity; throws ResourceBound past 2^40.
std::uint64_t tuple_count(std::uint32_t set_size, std::uint32_t arity);

/// Lexicographic index, first coordinate most significant.
std::uint64_t tuple_index(std::span<const Elem> t, std::uint32_t set_size);
Tuple tuple_at(std::uint64_t index, std::uint32_t set_size, std::uint32_t arity);

/// A function X^arity -> Z_m stored densely in lexicographic tuple order.
class CochainTable {
 public:
  /// The zero cochain.
  CochainTable(std::uint32_t arity, std::uint32_t set_size, std::int64_t modulus);
  /// Values are reduced mod m; throws Format on a length mismatch.
  CochainTable(std::uint32_t arity, std::uint32_t set_size, std::int64_t modulus,
               std::vector<std::int64_t> values);

  std::uint32_t arity() const noexcept { return arity_; }
  std::uint32_t set_size() const noexcept { return set_size_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  std::int64_t at(std::span<const Elem> t) const { return values_[tuple_index(t, set_size_)]; }
  std::int64_t at(std::uint64_t index) const { return values_[index]; }
  std::int64_t operator()(Elem x, Elem y) const { return values_[static_cast<std::size_t>(x) * set_size_ + y]; }
  void set(std::span<const Elem> t, std::int64_t v);
  void set(std::uint64_t index, std::int64_t v);

  bool is_zero() const;

  friend bool operator==(const CochainTable&, const CochainTable&) = default;

 private:
  std::uint32_t arity_;
  std::uint32_t set_size_;
  std::int64_t modulus_;
  std::vector<std::int64_t> values_;
};

/// Pointwise sum; throws ArityMismatch / ModulusMismatch.
CochainTable operator+(const CochainTable& a, const CochainTable& b);
CochainTable operator*(std::int64_t c, const CochainTable& a);

/// f o (proj x ... x proj) on a set of size `new_size`, proj: [0,new_size) -> [0, f.set_size()).
CochainTable pullback(const CochainTable& f, std::span<const Elem> proj);

}  // namespace ybk::ybcore
