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

#include "cliffbundle/serialize.hpp"

#include <set>

#include "cliffbundle/error.hpp"

namespace cliffbundle {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

std::size_t index_from_json(const Json& j, std::size_t dim) {
  if (!j.is_number_integer()) throw ParseError("indices must be integers");
  const auto k = j.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > dim) {
    throw ParseError("index " + std::to_string(k) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(k - 1);
}

std::size_t dim_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError("\"dim\" must be a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

Json vec_to_json(const ScalarVec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

ScalarVec vec_from_json(const Json& j, const FieldSpec& field, std::size_t size) {
  if (!j.is_array() || j.size() != size) throw ParseError("expected an array of " + std::to_string(size) + " scalars");
  ScalarVec out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, field));
  return out;
}

Matrix square_from_json(const Json& j, const FieldSpec& field, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected " + std::to_string(n) + " matrix rows");
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ScalarVec row = vec_from_json(j[i], field, n);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return m;
}

Blade blade_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("\"blade\" must be an array of indices");
  Blade b = 0;
  long previous = -1;
  for (const auto& x : j) {
    const auto k = static_cast<long>(index_from_json(x, dim));
    if (k <= previous) throw ParseError("blade indices must be strictly increasing");
    previous = k;
    b |= Blade{1} << k;
  }
  return b;
}

Json blade_to_json(Blade b) {
  Json out = Json::array();
  for (auto i : blade_indices(b)) out.push_back(i + 1);
  return out;
}

template <typename Fn>
void for_terms(const Json& j, Fn&& fn) {
  for (const auto& term : array_member(j, "terms")) {
    if (!term.is_object()) throw ParseError("each term must be an object");
    fn(term);
  }
}

}  // namespace

Json to_json(const FieldSpec& field) { return field.to_string(); }

FieldSpec field_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("\"field\" must be a string");
  try {
    return FieldSpec::parse(j.get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_string()) throw ParseError("scalars must be JSON strings");
  return Scalar::parse(j.get<std::string>(), field);
}

AlgebraContext context_from_json(const Json& j, const ParseDefaults& defaults) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  std::optional<FieldSpec> field = defaults.field;
  if (j.contains("field")) {
    const FieldSpec given = field_from_json(j["field"]);
    if (field && !(*field == given)) throw ParseError("payload field disagrees with --field");
    field = given;
  }
  std::optional<std::size_t> dim = defaults.dim;
  if (j.contains("dim")) {
    const std::size_t given = dim_from_json(j["dim"]);
    if (dim && *dim != given) throw ParseError("payload dim disagrees with --dim");
    dim = given;
  }
  if (!dim) throw ParseError("missing \"dim\"");
  try {
    return AlgebraContext(*dim, field.value_or(FieldSpec::rationals()));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BilinearForm& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.ctx().dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < f.ctx().dim; ++k) row.push_back(to_json(f(i, k)));
    rows.push_back(row);
  }
  return Json{{"dim", f.ctx().dim}, {"field", to_json(f.ctx().field)}, {"entries", rows}};
}

BilinearForm bilinear_from_json(const Json& j, const ParseDefaults& defaults) {
  ParseDefaults local = defaults;
  if (!local.dim && j.is_object() && !j.contains("dim") && j.contains("entries") && j["entries"].is_array()) {
    local.dim = j["entries"].size();
  }
  const AlgebraContext ctx = context_from_json(j, local);
  return BilinearForm(ctx, square_from_json(member(j, "entries"), ctx.field, ctx.dim));
}

Json to_json(const QuadraticForm& q) {
  const std::size_t n = q.ctx().dim;
  Json upper = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(to_json(q.polar_upper()(i, k)));
    upper.push_back(row);
  }
  return Json{{"diag", vec_to_json(q.diag())}, {"polar_upper", upper}};
}

QuadraticForm quadratic_from_json(const Json& j, const AlgebraContext& ctx) {
  const std::size_t n = ctx.dim;
  ScalarVec diag = vec_from_json(member(j, "diag"), ctx.field, n);
  Matrix upper(ctx.field, n, n);
  if (j.contains("polar_upper")) {
    const Json& rows = array_member(j, "polar_upper");
    if (rows.size() != n) throw ParseError("\"polar_upper\" must have " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const Json& row = rows[i];
      if (!row.is_array()) throw ParseError("\"polar_upper\" rows must be arrays");
      if (row.size() == n) {
        for (std::size_t k = 0; k < n; ++k) upper(i, k) = scalar_from_json(row[k], ctx.field);
      } else if (row.size() == n - 1 - i) {
        for (std::size_t k = 0; k < row.size(); ++k) upper(i, i + 1 + k) = scalar_from_json(row[k], ctx.field);
      } else {
        throw ParseError("\"polar_upper\" row " + std::to_string(i + 1) + " has the wrong length");
      }
    }
  }
  try {
    return QuadraticForm(ctx, std::move(diag), std::move(upper));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const TensorElt& u) {
  Json terms = Json::array();
  for (const auto& [w, c] : u.terms()) {
    Json word = Json::array();
    for (auto letter : w) word.push_back(letter + 1);
    terms.push_back(Json{{"word", word}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", terms}};
}

TensorElt tensor_from_json(const Json& j, const AlgebraContext& ctx) {
  TensorElt u(ctx);
  for_terms(j, [&](const Json& term) {
    const Json& word = array_member(term, "word");
    Word w;
    for (const auto& x : word) w.push_back(static_cast<std::uint8_t>(index_from_json(x, ctx.dim)));
    if (w.size() > ctx.max_grade) throw ParseError("word longer than the grade cap");
    u.add_term(w, scalar_from_json(member(term, "coeff"), ctx.field));
  });
  return u;
}

Json to_json(const CliffordContext& cctx) {
  return Json{{"dim", cctx.dim()}, {"field", to_json(cctx.base().field)}, {"quadratic", to_json(cctx.quadratic())}};
}

CliffordContext clifford_context_from_json(const Json& j, const ParseDefaults& defaults) {
  ParseDefaults local = defaults;
  if (!local.dim && j.is_object() && !j.contains("dim") && j.contains("quadratic") && j["quadratic"].contains("diag") &&
      j["quadratic"]["diag"].is_array()) {
    local.dim = j["quadratic"]["diag"].size();
  }
  const AlgebraContext ctx = context_from_json(j, local);
  if (!j.contains("quadratic")) return CliffordContext::exterior(ctx);
  return CliffordContext(quadratic_from_json(j["quadratic"], ctx));
}

Json to_json(const CliffElt& w) {
  Json terms = Json::array();
  for (const auto& [b, c] : w.terms()) terms.push_back(Json{{"blade", blade_to_json(b)}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

CliffElt cliff_from_json(const Json& j, const CliffordContext& cctx) {
  CliffElt w(cctx);
  for_terms(j, [&](const Json& term) {
    w.add_term(blade_from_json(member(term, "blade"), cctx.dim()),
               scalar_from_json(member(term, "coeff"), cctx.base().field));
  });
  return w;
}

Json to_json(const DualTwoForm& astar) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < astar.ctx.dim; ++i) {
    for (std::size_t k = i + 1; k < astar.ctx.dim; ++k) {
      if (astar.coeffs(i, k).is_zero()) continue;
      terms.push_back(Json{{"blade", Json::array({i + 1, k + 1})}, {"coeff", to_json(astar.coeffs(i, k))}});
    }
  }
  return Json{{"terms", terms}};
}

DualTwoForm dual_two_form_from_json(const Json& j, const AlgebraContext& ctx) {
  Matrix upper(ctx.field, ctx.dim, ctx.dim);
  for_terms(j, [&](const Json& term) {
    const Blade b = blade_from_json(member(term, "blade"), ctx.dim);
    if (blade_grade(b) != 2) throw ParseError("two-form terms need exactly two indices");
    const auto idx = blade_indices(b);
    upper(idx[0], idx[1]) += scalar_from_json(member(term, "coeff"), ctx.field);
  });
  return DualTwoForm(ctx, std::move(upper));
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const EquivalenceReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"sample", f.sample},
                            {"row", f.row},
                            {"col", f.col},
                            {"lhs", to_json(f.lhs)},
                            {"rhs", to_json(f.rhs)}});
  }
  Json out{{"identity", report.identity}, {"samples", report.samples}, {"failures", failures}};
  out["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  return out;
}

Json to_json(const ProbeReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json basis = Json::array();
    for (const auto& v : w.basis) basis.push_back(vec_to_json(v));
    witnesses.push_back(Json{{"dim", w.dim}, {"method", w.method}, {"basis", basis}});
  }
  return Json{{"seed", report.seed},
              {"module_dim", report.module_dim},
              {"dims", report.dims},
              {"witnesses", witnesses},
              {"certifies_irreducibility", false}};
}

}  // namespace cliffbundle
