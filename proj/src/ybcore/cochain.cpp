#include "ybk/ybcore/cochain.hpp"

#include <algorithm>
#include <string>

#include "ybk/common/error.hpp"
#include "ybk/modalg/residue.hpp"

namespace ybk::ybcore {

std::uint64_t tuple_count(std::uint32_t set_size, std::uint32_t arity) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < arity; ++i) {
    n *= set_size;
    if (n > (std::uint64_t{1} << 40)) {
      throw Error(ErrorKind::ResourceBound, std::to_string(set_size) + "^" + std::to_string(arity) +
                                                " tuples exceed the enumeration limit");
    }
  }
  return n;
}

std::uint64_t tuple_index(std::span<const Elem> t, std::uint32_t set_size) {
  std::uint64_t idx = 0;
  for (Elem e : t) idx = idx * set_size + e;
  return idx;
}

Tuple tuple_at(std::uint64_t index, std::uint32_t set_size, std::uint32_t arity) {
  Tuple t(arity);
  for (std::uint32_t i = arity; i-- > 0;) {
    t[i] = static_cast<Elem>(index % set_size);
    index /= set_size;
  }
  return t;
}

CochainTable::CochainTable(std::uint32_t arity, std::uint32_t set_size, std::int64_t modulus)
    : arity_(arity), set_size_(set_size), modulus_(modulus) {
  if (modulus < 2) throw Error(ErrorKind::InvalidArgument, "cochain modulus must be >= 2");
  values_.assign(tuple_count(set_size, arity), 0);
}

CochainTable::CochainTable(std::uint32_t arity, std::uint32_t set_size, std::int64_t modulus,
                           std::vector<std::int64_t> values)
    : CochainTable(arity, set_size, modulus) {
  if (values.size() != values_.size()) {
    throw Error(ErrorKind::Format, "cochain needs " + std::to_string(values_.size()) + " values, got " +
                                       std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) values_[i] = modalg::reduce(values[i], modulus_);
}

void CochainTable::set(std::span<const Elem> t, std::int64_t v) {
  if (t.size() != arity_) throw Error(ErrorKind::ArityMismatch, "tuple length != cochain arity");
  values_[tuple_index(t, set_size_)] = modalg::reduce(v, modulus_);
}

void CochainTable::set(std::uint64_t index, std::int64_t v) { values_.at(index) = modalg::reduce(v, modulus_); }

bool CochainTable::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

CochainTable operator+(const CochainTable& a, const CochainTable& b) {
  if (a.arity() != b.arity() || a.set_size() != b.set_size()) {
    throw Error(ErrorKind::ArityMismatch, "cochain shapes differ");
  }
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::ModulusMismatch, "cochain moduli differ");
  std::vector<std::int64_t> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] + b.values()[i];
  return CochainTable(a.arity(), a.set_size(), a.modulus(), std::move(v));
}

CochainTable operator*(std::int64_t c, const CochainTable& a) {
  std::vector<std::int64_t> v(a.values().size());
  const std::int64_t cr = modalg::reduce(c, a.modulus());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cr * a.values()[i] % a.modulus();
  return CochainTable(a.arity(), a.set_size(), a.modulus(), std::move(v));
}

CochainTable pullback(const CochainTable& f, std::span<const Elem> proj) {
  const auto new_size = static_cast<std::uint32_t>(proj.size());
  CochainTable out(f.arity(), new_size, f.modulus());
  Tuple image(f.arity());
  const std::uint64_t count = tuple_count(new_size, f.arity());
  for (std::uint64_t i = 0; i < count; ++i) {
    Tuple t = tuple_at(i, new_size, f.arity());
    for (std::size_t c = 0; c < t.size(); ++c) image[c] = proj[t[c]];
    out.set(i, f.at(image));
  }
  return out;
}

}  // namespace ybk::ybcore
