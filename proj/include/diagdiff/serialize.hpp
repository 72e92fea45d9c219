// Copyright 2026 The diagdiff Authors
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

#pragma once

#include <string>

#include "json.hpp"

#include "diagdiff/autodiff.hpp"
#include "diagdiff/diagram.hpp"
#include "diagdiff/phase.hpp"
#include "diagdiff/polynomial.hpp"
#include "diagdiff/tensor.hpp"
#include "diagdiff/truth_table.hpp"

/**
 * JSON encoding of the IR.
 *
 *   phase    {"const": r, "coeffs": {"0": c0, ...}}
 *   complex  [re, im]
 *   diagram  {"dom": [..], "cod": [..], "layers": [{"offset": k, "box": {..}}]}
 *   sum      {"dom": [..], "cod": [..], "terms": [{"coeff": [re, im], "diagram": {..}}]}
 *   box      {"kind": .., "name": .., "dom": [..], "cod": [..], ...payload}
 *   tensor   {"dom_dims": [..], "cod_dims": [..], "data": [[re, im], ...]}
 *
 * Decoding errors throw ParseError; ill-typed diagrams throw TypeCheckError.
 */
namespace diagdiff::json {

using Json = nlohmann::ordered_json;

Json to_json(const PhaseExpr& e);
Json to_json(const Polynomial& p);
Json to_json(const Ty& t);
Json to_json(const Box& b);
Json to_json(const Diagram& d);
Json to_json(const FormalSum& s);
Json to_json(const ComplexTensor& t);
Json to_json(const TruthTableFn& f);
Json to_json(const GradientRuleSet& rules);
Json to_json(const GradcheckReport& r);

PhaseExpr phase_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Ty ty_from_json(const Json& j);
Box box_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);
/// Accepts a sum or a bare diagram (read as a one-term sum).
FormalSum sum_from_json(const Json& j);
ComplexTensor tensor_from_json(const Json& j);
TruthTableFn truth_table_from_json(const Json& j);
/// Kinds absent from the file have no rule. Custom rules cannot be encoded.
GradientRuleSet rules_from_json(const Json& j);

/// Parses text, turning syntax errors into ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace diagdiff::json
