#include "ybk/ybhomology/chain.hpp"

#include "ybk/common/error.hpp"

namespace ybk::ybhomology {

std::int64_t FormalChain::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void FormalChain::add(const Tuple& t, std::int64_t c) {
  if (t.size() != arity_) throw Error(ErrorKind::ArityMismatch, "tuple length != chain arity");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalChain& FormalChain::operator+=(const FormalChain& other) {
  if (other.arity_ != arity_) throw Error(ErrorKind::ArityMismatch, "adding chains of different arity");
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

FormalChain boundary(const FiniteYBSet& x, std::span<const Elem> t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "boundary needs n >= 2");
  const CubeColoring c = color_cube(x, t);
  FormalChain out(n - 1);
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t side = 0; side < 2; ++side) out.add(face_tuple(c, k, side), face_sign(n, k, side));
  }
  return out;
}

FormalChain boundary(const FiniteYBSet& x, const FormalChain& c) {
  if (c.arity() < 2) throw Error(ErrorKind::InvalidArgument, "boundary needs n >= 2");
  FormalChain out(c.arity() - 1);
  for (const auto& [t, coef] : c.terms()) {
    const FormalChain d = boundary(x, t);
    for (const auto& [f, s] : d.terms()) out.add(f, coef * s);
  }
  return out;
}

std::string render(const FormalChain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [t, coef] : c.terms()) {
    if (!out.empty()) out += ' ';
    out += (coef > 0 ? "+" : "") + std::to_string(coef) + "·(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(t[i]);
    }
    out += ')';
  }
  return out;
}

nlohmann::json to_json(const FormalChain& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, coef] : c.terms()) terms.push_back({{"tuple", t}, {"coefficient", coef}});
  return {{"arity", c.arity()}, {"terms", std::move(terms)}};
}

}  // namespace ybk::ybhomology
