#pragma once

#include <string>

#include <json.hpp>

#include "ybk/ybcore/cochain.hpp"
#include "ybk/ybcore/yb_set.hpp"

namespace ybk::ybcore {

// YB set:   {"size": n, "R1": [[...]], "R2": [[...]]}, row index = first argument.
// Cochain:  {"arity": n, "set_size": N, "modulus": m, "values": [...]}, lexicographic.

nlohmann::json to_json(const FiniteYBSet& x);
FiniteYBSet yb_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CochainTable& f);
CochainTable cochain_from_json(const nlohmann::json& j);

/// Parse a file; throws Format with the path on any I/O or schema error.
nlohmann::json read_json_file(const std::string& path);

}  // namespace ybk::ybcore
