#include "kronlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kronlab/errors.hpp"

namespace kronlab {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t nonneg_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw InputError(std::string(what) + ": expected a non-negative integer");
  return v;
}

void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InputError(std::string(what) + ": unknown key \"" + it.key() + "\"");
  }
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<std::int64_t>()));
  throw InputError("matrix entry: expected a \"p/q\" string");
}

}  // namespace

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  return {{"arrows", arrows}, {"vertices", q.vertex_count()}};
}

nlohmann::json to_json(const DimVector& d) { return d.entries(); }

nlohmann::json to_json(const Rep& x) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : x.maps()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& e : m.row(r)) row.push_back(to_string(e));
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  return {{"dims", to_json(x.dims())}, {"maps", maps}, {"quiver", to_json(x.quiver())}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
  const auto n = nonneg_int(field(j, "vertices", "quiver"), "quiver.vertices");
  only_keys(j, {"vertices", "arrows"}, "quiver");
  const auto& arr = field(j, "arrows", "quiver");
  if (!arr.is_array()) throw InputError("quiver.arrows: expected an array");
  std::vector<Arrow> arrows;
  for (const auto& a : arr) {
    if (!a.is_array() || a.size() != 2) throw InputError("quiver.arrows: each arrow is a pair [u, v]");
    const auto u = nonneg_int(a[0], "arrow source"), v = nonneg_int(a[1], "arrow target");
    if (u < 1 || u > n || v < 1 || v > n)
      throw InputError("quiver.arrows: vertex out of range in [" + std::to_string(u) + "," + std::to_string(v) + "]");
    arrows.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)});
  }
  return Quiver(static_cast<std::size_t>(n), std::move(arrows));
}

DimVector dims_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("dims: expected an integer array");
  std::vector<std::int64_t> out;
  for (const auto& e : j) out.push_back(nonneg_int(e, "dims entry"));
  return DimVector(std::move(out));
}

Rep rep_from_json(const nlohmann::json& j) {
  Quiver q = quiver_from_json(field(j, "quiver", "rep"));
  only_keys(j, {"quiver", "dims", "maps"}, "rep");
  DimVector d = dims_from_json(field(j, "dims", "rep"));
  if (d.size() != q.vertex_count()) throw InputError("rep.dims: length differs from the vertex count");
  const auto& maps = field(j, "maps", "rep");
  if (!maps.is_array() || maps.size() != q.arrows().size())
    throw InputError("rep.maps: expected one matrix per arrow");
  std::vector<RatMatrix> mats;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto rows = static_cast<std::size_t>(d[q.arrow(a).source]);
    const auto cols = static_cast<std::size_t>(d[q.arrow(a).target]);
    const auto& mj = maps[a];
    const std::string where = "rep.maps[" + std::to_string(a + 1) + "]";
    if (!mj.is_array() || mj.size() != rows)
      throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!mj[r].is_array() || mj[r].size() != cols)
        throw InputError(where + ": expected rows of length " + std::to_string(cols));
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(mj[r][c]);
    }
    mats.push_back(std::move(m));
  }
  return Rep(std::move(q), std::move(d), std::move(mats));
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace kronlab
