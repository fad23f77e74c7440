#pragma once

// Region interchange format, the single source of truth across all tools:
//
//   {"a": 2, "b": 3, "c": 4, "holes": [[3, -1, 0, "R"], [3, -1, 4, "L"]]}
//
// Hole entries carry doubled line labels [2l, 2l', 2l'', "L"|"R"]. Counts are
// serialized as decimal strings because they overflow fixed-width integers
// quickly.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holeyhex/counting.hpp"
#include "holeyhex/lattice.hpp"

namespace holeyhex {

inline Region region_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::parse_error, "region: expected a JSON object");
  for (const char* key : {"a", "b", "c"}) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
      fail(Errc::parse_error, std::string("region: missing or non-integer field '") + key + "'");
  }
  std::vector<TriTriple> holes;
  if (j.contains("holes")) {
    const auto& arr = j.at("holes");
    if (!arr.is_array()) fail(Errc::parse_error, "region: field 'holes' must be an array");
    for (std::size_t idx = 0; idx < arr.size(); ++idx) {
      const auto& h = arr[idx];
      if (!h.is_array() || h.size() != 4 || !h[0].is_number_integer() ||
          !h[1].is_number_integer() || !h[2].is_number_integer() || !h[3].is_string())
        fail(Errc::parse_error, "region: holes[" + std::to_string(idx) +
                                    "] must be [2l, 2l', 2l'', \"L\"|\"R\"]");
      const std::string o = h[3].get<std::string>();
      if (o != "L" && o != "R")
        fail(Errc::parse_error,
             "region: holes[" + std::to_string(idx) + "] orientation must be \"L\" or \"R\"");
      holes.push_back(TriTriple{h[0].get<int>(), h[1].get<int>(), h[2].get<int>(),
                                o == "L" ? Orient::left : Orient::right});
    }
  }
  return build_region(j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>(), holes);
}

inline Region parse_region(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, std::string("region: ") + e.what());
  }
  return region_from_json(j);
}

inline Region parse_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open region file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_region(buf.str());
}

inline nlohmann::json region_to_json(const Region& region) {
  nlohmann::json j;
  j["a"] = region.dims().a;
  j["b"] = region.dims().b;
  j["c"] = region.dims().c;
  j["holes"] = nlohmann::json::array();
  for (const TriTriple& t : region.holes())
    j["holes"].push_back({t.l2, t.lp2, t.lpp2, std::string(1, orient_char(t.orient))});
  return j;
}

inline nlohmann::json count_result_to_json(const CountResult& r) {
  nlohmann::json j;
  j["count"] = r.count.str();
  j["route"] = route_name(r.route);
  if (r.epsilon)
    j["epsilon"] = *r.epsilon;
  else
    j["epsilon"] = nullptr;
  return j;
}

}  // namespace holeyhex
