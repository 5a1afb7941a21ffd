// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats.
//
//   set system:   {"ground":n,"feasible":[[1,2],...]}       1-based elements
//   ribbon graph: {"edges":[{"twisted":b},...],"vertices":[[h,...],...]}
//                 0-based half-edges, edge i owns 2i and 2i+1
//   trace:        {"sequence":[..],"widths":[..],"max_twist_width":w,
//                  "feasible_final":b}                       1-based elements
//
// Serializers emit a single compact line followed by a newline, with family
// members in canonical order, so canonical files round-trip byte for byte.

#ifndef TWISTWIDTH_IO_HPP_
#define TWISTWIDTH_IO_HPP_

#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twistwidth/error.hpp"
#include "twistwidth/monotone.hpp"
#include "twistwidth/ribbon.hpp"
#include "twistwidth/set_system.hpp"

namespace twistwidth {

using Json = nlohmann::ordered_json;

namespace detail {

inline Error parse_error(const std::string& where, const std::string& what) {
  return Error(Errc::kParseError, where + ": " + what);
}

inline Json parse_json(std::string_view text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(where, e.what());
  }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw parse_error(where, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw parse_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw parse_error(where, "expected an integer");
  const auto v = value.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) throw parse_error(where, "integer out of range");
  return static_cast<int>(v);
}

inline std::vector<int> as_int_list(const Json& value, const std::string& where) {
  if (!value.is_array()) throw parse_error(where, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_int(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<int> labels_of(std::span<const Element> elements) {
  std::vector<int> out(elements.begin(), elements.end());
  for (int& e : out) ++e;
  return out;
}

}  // namespace detail

inline Json to_json(Subset s) { return Json(s.labels()); }

inline Json to_json(const SetSystem& d) {
  Json family = Json::array();
  for (Subset x : d.family()) family.push_back(to_json(x));
  return Json{{"ground", d.ground_size()}, {"feasible", std::move(family)}};
}

inline Json to_json(const RibbonGraph& g) {
  Json edges = Json::array();
  for (bool t : g.twist_flags()) edges.push_back(Json{{"twisted", t}});
  return Json{{"edges", std::move(edges)}, {"vertices", g.rotations()}};
}

inline Json trace_to_json(const SetSystem& d, const WidthTrace& trace) {
  return Json{{"sequence", detail::labels_of(trace.sequence)},
              {"widths", trace.widths},
              {"max_twist_width", max_twist_width(d)},
              {"feasible_final", d.contains(trace.final_set)}};
}

inline std::string serialize(const SetSystem& d) { return to_json(d).dump() + "\n"; }
inline std::string serialize(const RibbonGraph& g) { return to_json(g).dump() + "\n"; }

inline SetSystem set_system_from_json(const Json& doc, const std::string& where) {
  const Json& ground = detail::field(doc, "ground", where);
  const int n = detail::as_int(ground, where + ".ground");
  if (n < 0) throw detail::parse_error(where + ".ground", "must be non-negative");
  const Json& feasible = detail::field(doc, "feasible", where);
  if (!feasible.is_array()) throw detail::parse_error(where + ".feasible", "expected an array");
  std::vector<std::vector<int>> subsets;
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    subsets.push_back(
        detail::as_int_list(feasible[i], where + ".feasible[" + std::to_string(i) + "]"));
  }
  return make_set_system(n, subsets);
}

inline RibbonGraph ribbon_graph_from_json(const Json& doc, const std::string& where) {
  const Json& edges = detail::field(doc, "edges", where);
  if (!edges.is_array()) throw detail::parse_error(where + ".edges", "expected an array");
  std::vector<bool> twisted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    const Json& t = detail::field(edges[i], "twisted", at);
    if (!t.is_boolean()) throw detail::parse_error(at + ".twisted", "expected a boolean");
    twisted.push_back(t.get<bool>());
  }
  const Json& vertices = detail::field(doc, "vertices", where);
  if (!vertices.is_array()) throw detail::parse_error(where + ".vertices", "expected an array");
  std::vector<std::vector<int>> rotations;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    rotations.push_back(
        detail::as_int_list(vertices[i], where + ".vertices[" + std::to_string(i) + "]"));
  }
  return RibbonGraph(std::move(twisted), std::move(rotations));
}

inline SetSystem parse_set_system(std::string_view text, const std::string& where = "input") {
  return set_system_from_json(detail::parse_json(text, where), where);
}

inline RibbonGraph parse_ribbon_graph(std::string_view text, const std::string& where = "input") {
  return ribbon_graph_from_json(detail::parse_json(text, where), where);
}

inline SetSystem parse_set_system_file(const std::string& path) {
  return parse_set_system(detail::read_file(path), path);
}

inline RibbonGraph parse_ribbon_graph_file(const std::string& path) {
  return parse_ribbon_graph(detail::read_file(path), path);
}

// Script files for the scripted strategy:
//   {"initial":[1,2],"choices":[{"X":[2,3],"x":1},...]}   ("initial" optional)
inline ChoiceStrategy parse_script(std::string_view text, const std::string& where = "script") {
  const Json doc = detail::parse_json(text, where);
  std::optional<Subset> initial;
  if (doc.is_object() && doc.contains("initial")) {
    initial = Subset::from_labels(detail::as_int_list(doc["initial"], where + ".initial"));
  }
  const Json& choices = detail::field(doc, "choices", where);
  if (!choices.is_array()) throw detail::parse_error(where + ".choices", "expected an array");
  std::vector<ScriptedChoice> out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const std::string at = where + ".choices[" + std::to_string(i) + "]";
    const Subset chosen = Subset::from_labels(detail::as_int_list(detail::field(choices[i], "X", at), at + ".X"));
    const int label = detail::as_int(detail::field(choices[i], "x", at), at + ".x");
    if (label < 1 || label > kMaxGroundSize) {
      throw Error(Errc::kOutOfRangeElement, at + ".x: element " + std::to_string(label) + " out of range");
    }
    out.push_back({chosen, label - 1});
  }
  return ChoiceStrategy::scripted(std::move(out), initial);
}

inline ChoiceStrategy parse_script_file(const std::string& path) {
  return parse_script(detail::read_file(path), path);
}

}  // namespace twistwidth

#endif  // TWISTWIDTH_IO_HPP_
