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

#ifndef DIAGRAM_OPS_JSON_IO_HPP_
#define DIAGRAM_OPS_JSON_IO_HPP_

#include "json.hpp"

#include "diagram_ops/characters.hpp"
#include "diagram_ops/diagram_sum.hpp"
#include "diagram_ops/hurwitz.hpp"
#include "diagram_ops/ppoly.hpp"

namespace diagram_ops {

using Json = nlohmann::ordered_json;

// {"bound": N|null, "terms": [{"mono": [parts], "coef": "a/b"}]}
Json to_json(const PPoly& f);
// Throws ParseError on malformed documents.
PPoly ppoly_from_json(const nlohmann::json& doc);

// {"terms": [{"diagram": [parts], "coef": "a/b"}]}
Json to_json(const DiagramSum& sum);

// {"n": n, "order": ["[3]", ...], "rows": {"[3]": ["1", ...], ...}}
Json to_json(const CharacterTable& table);

// {"p_bound": N, "order": M, "terms": [{"beta": {"[2]": k}, "mono": [...], "coef": "a/b"}]}
// coef is the coefficient of prod beta^k / k! on the power-sum monomial p_mono.
Json to_json(const HurwitzSeries& series);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_JSON_IO_HPP_
