/*
 * Copyright 2026 The cliffbundle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"

#include "cliffbundle/clifford.hpp"
#include "cliffbundle/forms.hpp"
#include "cliffbundle/repcheck.hpp"
#include "cliffbundle/scalar.hpp"
#include "cliffbundle/tensor.hpp"

namespace cliffbundle {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "cliff-bundle/1";

/// Fallbacks for payloads that omit "field" or "dim". A payload value that
/// disagrees with a given default is a ParseError.
struct ParseDefaults {
  std::optional<FieldSpec> field;
  std::optional<std::size_t> dim;
};

// All parse functions throw ParseError on malformed input. Indices in JSON
// are 1-based and scalars are strings.

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);

/// Reads "field" and "dim" of an object, falling back to `defaults`.
AlgebraContext context_from_json(const Json& j, const ParseDefaults& defaults);

Json to_json(const BilinearForm& f);
BilinearForm bilinear_from_json(const Json& j, const ParseDefaults& defaults);

/// {"diag": [...], "polar_upper": [[...]]}; the matrix is written n x n.
Json to_json(const QuadraticForm& q);
QuadraticForm quadratic_from_json(const Json& j, const AlgebraContext& ctx);

Json to_json(const TensorElt& u);
TensorElt tensor_from_json(const Json& j, const AlgebraContext& ctx);

/// {"dim": n, "field": "...", "quadratic": {...}}.
Json to_json(const CliffordContext& cctx);
CliffordContext clifford_context_from_json(const Json& j, const ParseDefaults& defaults);

/// Blades are strictly increasing index lists.
Json to_json(const CliffElt& w);
CliffElt cliff_from_json(const Json& j, const CliffordContext& cctx);

/// {"terms": [{"blade": [i, j], "coeff": "..."}]} with i < j.
Json to_json(const DualTwoForm& astar);
DualTwoForm dual_two_form_from_json(const Json& j, const AlgebraContext& ctx);

Json to_json(const Matrix& m);
Json to_json(const EquivalenceReport& report);
Json to_json(const ProbeReport& report);

}  // namespace cliffbundle
