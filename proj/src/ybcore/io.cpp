#include "ybk/ybcore/io.hpp"

#include <fstream>

#include "ybk/common/error.hpp"

namespace ybk::ybcore {

using nlohmann::json;

json to_json(const FiniteYBSet& x) {
  const std::uint32_t n = x.size();
  json r1 = json::array(), r2 = json::array();
  for (Elem a = 0; a < n; ++a) {
    json row1 = json::array(), row2 = json::array();
    for (Elem b = 0; b < n; ++b) {
      row1.push_back(x.r1(a, b));
      row2.push_back(x.r2(a, b));
    }
    r1.push_back(std::move(row1));
    r2.push_back(std::move(row2));
  }
  return {{"size", n}, {"R1", std::move(r1)}, {"R2", std::move(r2)}};
}

FiniteYBSet yb_set_from_json(const json& j) {
  try {
    const auto n = j.at("size").get<std::uint32_t>();
    auto read_table = [&](const char* key) {
      const json& src = j.at(key);
      if (!src.is_array() || src.size() != n) throw Error(ErrorKind::Format, std::string(key) + " must have `size` rows");
      std::vector<Elem> out;
      out.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : src) {
        if (!row.is_array() || row.size() != n) throw Error(ErrorKind::Format, std::string(key) + " rows must have `size` entries");
        for (const auto& v : row) out.push_back(v.get<Elem>());
      }
      return out;
    };
    std::vector<Elem> r1 = read_table("R1"), r2 = read_table("R2");
    return finalize(FiniteYBSet(n, std::move(r1), std::move(r2)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("YB set json: ") + e.what());
  }
}

json to_json(const CochainTable& f) {
  return {{"arity", f.arity()}, {"set_size", f.set_size()}, {"modulus", f.modulus()}, {"values", f.values()}};
}

CochainTable cochain_from_json(const json& j) {
  try {
    return CochainTable(j.at("arity").get<std::uint32_t>(), j.at("set_size").get<std::uint32_t>(),
                        j.at("modulus").get<std::int64_t>(), j.at("values").get<std::vector<std::int64_t>>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("cochain json: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, path + ": " + e.what());
  }
}

}  // namespace ybk::ybcore
