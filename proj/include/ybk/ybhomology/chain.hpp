#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "ybk/ybhomology/cube.hpp"

namespace ybk::ybhomology {

/// Integer combination of n-tuples; zero coefficients are never stored.
class FormalChain {
 public:
  explicit FormalChain(std::uint32_t arity) : arity_(arity) {}

  std::uint32_t arity() const noexcept { return arity_; }
  const std::map<Tuple, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(const Tuple& t) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Tuple& t, std::int64_t c);
  FormalChain& operator+=(const FormalChain& other);

  friend bool operator==(const FormalChain&, const FormalChain&) = default;

 private:
  std::uint32_t arity_;
  std::map<Tuple, std::int64_t> terms_;
};

/// Sum over the 2n faces of the colored cube, signed by face_sign. n >= 2.
FormalChain boundary(const FiniteYBSet& x, std::span<const Elem> t);

/// Linear extension of `boundary`.
FormalChain boundary(const FiniteYBSet& x, const FormalChain& c);

/// `+1·(0,1) -1·(2,2)`, terms in tuple order; `0` for the zero chain.
std::string render(const FormalChain& c);
/// {"arity": n, "terms": [{"tuple": [...], "coefficient": c}, ...]}
nlohmann::json to_json(const FormalChain& c);

}  // namespace ybk::ybhomology
