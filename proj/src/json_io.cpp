// Copyright 2026 The diagram-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diagram_ops/json_io.hpp"

#include "diagram_ops/errors.hpp"

namespace diagram_ops {

Json to_json(const PPoly& f) {
  Json doc;
  doc["bound"] = f.bound() ? Json(*f.bound()) : Json(nullptr);
  doc["terms"] = Json::array();
  for (const auto& [mono, c] : f.terms())
    doc["terms"].push_back({{"mono", mono.parts()}, {"coef", to_string(c)}});
  return doc;
}

PPoly ppoly_from_json(const nlohmann::json& doc) {
  try {
    std::optional<int> bound;
    if (!doc.at("bound").is_null()) bound = doc.at("bound").get<int>();
    PPoly f = PPoly().truncated(bound);
    for (const auto& t : doc.at("terms")) {
      Partition mono(t.at("mono").get<std::vector<int>>());
      f.add_term(mono, parse_rational(t.at("coef").get<std::string>()));
    }
    return f;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  }
}

Json to_json(const DiagramSum& sum) {
  Json doc;
  doc["terms"] = Json::array();
  for (const auto& [d, c] : sum.terms())
    doc["terms"].push_back({{"diagram", d.parts()}, {"coef", to_string(c)}});
  return doc;
}

Json to_json(const CharacterTable& table) {
  Json doc;
  doc["n"] = table.n();
  doc["order"] = Json::array();
  for (const Partition& d : table.order()) doc["order"].push_back(to_string(d));
  doc["rows"] = Json::object();
  for (std::size_t r = 0; r < table.size(); ++r) {
    auto row = Json::array();
    for (std::int64_t v : table.row(r)) row.push_back(std::to_string(v));
    doc["rows"][to_string(table.order()[r])] = std::move(row);
  }
  return doc;
}

Json to_json(const HurwitzSeries& series) {
  Json doc;
  doc["p_bound"] = series.p_bound;
  doc["order"] = series.order;
  doc["terms"] = Json::array();
  for (const auto& [index, poly] : series.coefficients) {
    Json beta = Json::object();
    for (std::size_t d = 0; d < index.size(); ++d)
      if (index[d] != 0) beta[to_string(series.directions[d])] = index[d];
    for (const auto& [mono, c] : poly.terms())
      doc["terms"].push_back({{"beta", beta}, {"mono", mono.parts()}, {"coef", to_string(c)}});
  }
  return doc;
}

}  // namespace diagram_ops
