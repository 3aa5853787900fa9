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

#include "cliffbundle/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cliffbundle/checks.hpp"
#include "cliffbundle/error.hpp"
#include "cliffbundle/serialize.hpp"

namespace cliffbundle::cli {

namespace {

struct Options {
  std::string field;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::string input;
  std::string suite;
  bool list = false;
};

ParseDefaults defaults_of(const Options& opts) {
  ParseDefaults d;
  if (!opts.field.empty()) d.field = field_from_json(Json(opts.field));
  if (opts.dim > 0) d.dim = opts.dim;
  return d;
}

const Json& need(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key)) throw ParseError(std::string("request is missing \"") + key + "\"");
  return req[key];
}

// The algebra named by "context", or the exterior algebra when absent.
CliffordContext context_or_exterior(const Json& req, const ParseDefaults& d, const AlgebraContext* base) {
  if (req.contains("context")) return clifford_context_from_json(req["context"], d);
  if (base) return CliffordContext::exterior(*base);
  return CliffordContext::exterior(context_from_json(Json::object(), d));
}

Json element_response(const CliffElt& w) {
  Json out;
  out["context"] = to_json(w.cctx());
  out["result"] = to_json(w);
  return out;
}

Json product(const Json& req, const ParseDefaults& d) {
  const auto cctx = context_or_exterior(req, d, nullptr);
  return element_response(cl_mul(cliff_from_json(need(req, "u"), cctx), cliff_from_json(need(req, "v"), cctx)));
}

Json deform(const Json& req, const ParseDefaults& d) {
  const BilinearForm f = bilinear_from_json(need(req, "F"), d);
  if (req.contains("tensor")) {
    const TensorElt image = lambda_map(f, tensor_from_json(req["tensor"], f.ctx()));
    Json out;
    out["result"] = to_json(image);
    return out;
  }
  const CliffordContext source = req.contains("context") ? clifford_context_from_json(req["context"], d)
                                                         : CliffordContext(quad_of_bilinear(f));
  return element_response(bl_map(f, cliff_from_json(need(req, "w"), source)));
}

Json pfaffian_cmd(const Json& req, const ParseDefaults& d) {
  const Json& a = req.contains("A") ? req["A"] : req;
  const Scalar pf = pfaffian(bilinear_from_json(a, d));
  Json out;
  out["result"] = to_json(pf);
  return out;
}

Json symbol_cmd(const Json& req, const ParseDefaults& d) {
  const auto cctx = clifford_context_from_json(need(req, "context"), d);
  return element_response(symbol(cliff_from_json(need(req, "w"), cctx)));
}

Json quantize_cmd(const Json& req, const ParseDefaults& d) {
  const auto cctx = clifford_context_from_json(need(req, "context"), d);
  const auto ext = CliffordContext::exterior(cctx.base());
  return element_response(quantize(cctx, cliff_from_json(need(req, "w"), ext)));
}

Json twist(const Json& req, const ParseDefaults& d) {
  const BilinearForm f = bilinear_from_json(need(req, "F"), d);
  const auto cctx = context_or_exterior(req, d, &f.ctx());
  return element_response(twisted_mul(f, cliff_from_json(need(req, "u"), cctx), cliff_from_json(need(req, "v"), cctx)));
}

Json exp_contract_cmd(const Json& req, const ParseDefaults& d) {
  std::optional<DualTwoForm> astar;
  if (req.contains("Astar")) {
    astar = dual_two_form_from_json(req["Astar"], context_from_json(req["Astar"], d));
  } else {
    astar = dual_two_form(bilinear_from_json(need(req, "A"), d));
  }
  const auto cctx = context_or_exterior(req, d, &astar->ctx);
  return element_response(exp_contract(*astar, cliff_from_json(need(req, "w"), cctx)));
}

Json rho_cmd(const Json& req, const ParseDefaults& d) {
  const BilinearForm f = bilinear_from_json(need(req, "F"), d);
  const CliffordContext source(quad_of_bilinear(f));
  const CliffElt u = cliff_from_json(need(req, "u"), source);
  const EndoMatrix m = rho_matrix(f, u);
  Json out;
  out["index_order"] = "bitmask";
  out["matrix"] = to_json(m.entries);
  if (req.contains("A")) {
    const std::vector<CliffElt> samples{u};
    const EquivalenceReport report = check_equivalence(f, bilinear_from_json(req["A"], d), samples);
    out["equivalence"] = to_json(report);
  }
  return out;
}

Json check_cmd(const Options& opts, const ParseDefaults& d) {
  if (opts.list) {
    Json suites = Json::array();
    for (const auto& s : list_suites()) {
      Json fields = Json::array();
      for (const auto& f : s.default_fields) fields.push_back(to_json(f));
      suites.push_back(Json{{"id", s.id}, {"description", s.description}, {"fields", fields}});
    }
    return Json{{"suites", suites}};
  }
  if (opts.suite.empty()) throw ParseError("check needs a suite id (or --list)");
  SuiteOptions so;
  so.seed = opts.seed;
  so.samples = opts.samples;
  so.field = d.field;
  so.dim = d.dim;
  const SuiteResult r = run_suite(opts.suite, so);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"sample", f.sample}, {"field", f.field}, {"dim", f.dim}, {"detail", f.detail}});
  }
  return Json{{"identity", r.id},
              {"seed", r.seed},
              {"samples", r.samples},
              {"passed", r.passed},
              {"failed", r.failed},
              {"failures", failures}};
}

Json read_request(const Options& opts, std::istream& in) {
  std::string text;
  if (!opts.input.empty()) {
    std::ifstream file(opts.input);
    if (!file) throw ParseError("cannot read input file " + opts.input);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int fail(std::ostream& out, std::ostream& err, const std::string& command, const char* kind, const std::string& message,
         int code) {
  Json body{{"schema", kSchemaVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  out << body.dump() << '\n';
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Clifford algebras of arbitrary bilinear forms", "cliffbundle"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--field", opts.field, "Q or Fp:<p>");
  app.add_option("--dim", opts.dim, "dimension of V")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "random seed");
  app.add_option("--samples", opts.samples, "sample count");
  app.add_option("--input", opts.input, "request file (default standard input)");

  using Handler = Json (*)(const Json&, const ParseDefaults&);
  const std::vector<std::pair<std::string, Handler>> handlers = {
      {"product", product},     {"deform", deform},     {"pfaffian", pfaffian_cmd},
      {"symbol", symbol_cmd},   {"quantize", quantize_cmd}, {"twist", twist},
      {"exp-contract", exp_contract_cmd}, {"rho", rho_cmd},
  };
  const std::vector<std::pair<std::string, std::string>> help = {
      {"product", "Clifford product u v"},
      {"deform", "bl_F on a Clifford element, or lambda_F on a tensor"},
      {"pfaffian", "Pfaffian of an alternating form"},
      {"symbol", "symbol map Cl(Q) -> exterior algebra"},
      {"quantize", "quantization map exterior algebra -> Cl(Q)"},
      {"twist", "twisted product u o_F v"},
      {"exp-contract", "exp of the contraction by a dual two-form"},
      {"rho", "matrix of rho_F(u) on the exterior algebra"},
  };
  for (const auto& [name, text] : help) app.add_subcommand(name, text)->fallthrough();
  auto* check = app.add_subcommand("check", "run a named identity suite")->fallthrough();
  check->add_option("id", opts.suite, "suite id");
  check->add_flag("--list", opts.list, "list suite ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, "", "malformed", e.what(), kExitMalformed);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const ParseDefaults d = defaults_of(opts);
    Json body;
    if (command == "check") {
      body = check_cmd(opts, d);
    } else {
      const Json req = read_request(opts, in);
      if (!req.is_object()) throw ParseError("request must be a JSON object");
      for (const auto& [name, handler] : handlers) {
        if (name == command) body = handler(req, d);
      }
    }
    body["schema"] = kSchemaVersion;
    body["command"] = command;
    out << body.dump() << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    return fail(out, err, command, "malformed", e.what(), kExitMalformed);
  } catch (const Json::exception& e) {
    return fail(out, err, command, "malformed", e.what(), kExitMalformed);
  } catch (const DomainError& e) {
    return fail(out, err, command, "domain", e.what(), kExitDomain);
  }
}

}  // namespace cliffbundle::cli
