#pragma once

// JSON forms of quivers and representations. Vertices are 1-based on the
// wire; rationals are "p/q" strings. Every reader throws InputError on a
// schema violation.
//
//   quiver: {"vertices": n, "arrows": [[u, v], ...]}
//   rep:    {"quiver": ..., "dims": [...], "maps": [[["p/q", ...], ...], ...]}

#include <string>

#include "json.hpp"
#include "kronlab/repcat.hpp"
#include "kronlab/roots.hpp"

namespace kronlab {

nlohmann::json to_json(const Quiver& q);
nlohmann::json to_json(const DimVector& d);
nlohmann::json to_json(const Rep& x);

Quiver quiver_from_json(const nlohmann::json& j);
DimVector dims_from_json(const nlohmann::json& j);
Rep rep_from_json(const nlohmann::json& j);

/// Parse errors become InputError.
nlohmann::json parse_json(const std::string& text);
/// Unreadable files become InputError.
nlohmann::json read_json_file(const std::string& path);

}  // namespace kronlab
