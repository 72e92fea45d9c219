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

#include "diagdiff/serialize.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace diagdiff::json {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& child(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  try {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex number: ") + e.what());
  }
  throw ParseError("complex numbers are [re, im] pairs, got " + j.dump());
}

template <class T>
T guarded(const char* what, const std::function<T()>& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

// Encoding -------------------------------------------------------------------

Json to_json(const PhaseExpr& e) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : e.coeffs()) coeffs[std::to_string(i)] = c;
  return Json{{"const", e.constant()}, {"coeffs", coeffs}};
}

Json to_json(const Polynomial& p) {
  Json monomials = Json::array();
  for (const auto& [exps, coeff] : p.monomials()) {
    monomials.push_back(Json{{"exps", exps}, {"coeff", complex_to_json(coeff)}});
  }
  return Json{{"monomials", monomials}};
}

Json to_json(const Ty& t) { return Json(t.objects()); }

Json to_json(const Box& b) {
  Json j{{"kind", b.kind()}, {"name", b.name()}, {"dom", to_json(b.dom())},
         {"cod", to_json(b.cod())}};
  if (const auto* p = b.as<PlainBox>()) {
    if (!p->entries.empty()) {
      Json entries = Json::array();
      for (const auto& e : p->entries) entries.push_back(to_json(e));
      j["entries"] = entries;
    }
  } else if (const auto* p = b.as<ZSpiderBox>()) {
    j["m"] = p->legs_in;
    j["n"] = p->legs_out;
    j["phase"] = to_json(p->phase);
  } else if (const auto* p = b.as<GreenBox>()) {
    j["m"] = p->legs_in;
    j["n"] = p->legs_out;
    j["label"] = to_json(p->label);
  } else if (const auto* p = b.as<ScalarBox>()) {
    j["value"] = complex_to_json(p->value);
  } else if (const auto* p = b.as<DoubledBox>()) {
    j["inner"] = to_json(*p->inner);
  } else if (const auto* p = b.as<BubbleBox>()) {
    j["colour"] = p->colour;
    j["inner"] = to_json(*p->inner);
  } else if (const auto* p = b.as<BubbleJvpBox>()) {
    j["colour"] = p->colour;
    j["inner"] = to_json(*p->inner);
    j["tangent"] = to_json(*p->tangent);
  }
  return j;
}

Json to_json(const Diagram& d) {
  Json layers = Json::array();
  for (const auto& l : d.layers()) {
    layers.push_back(Json{{"offset", l.offset}, {"box", to_json(l.box)}});
  }
  return Json{{"dom", to_json(d.dom())}, {"cod", to_json(d.cod())}, {"layers", layers}};
}

Json to_json(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(Json{{"coeff", complex_to_json(t.coeff)}, {"diagram", to_json(t.diagram)}});
  }
  return Json{{"dom", to_json(s.dom())}, {"cod", to_json(s.cod())}, {"terms", terms}};
}

Json to_json(const ComplexTensor& t) {
  Json data = Json::array();
  for (const auto& v : t.data()) data.push_back(complex_to_json(v));
  return Json{{"dom_dims", t.dom_dims()}, {"cod_dims", t.cod_dims()}, {"data", data}};
}

Json to_json(const TruthTableFn& f) {
  return Json{{"arity", f.arity()},
              {"coarity", f.coarity()},
              {"rig", f.rig() == BitRig::f2 ? "f2" : "boolean"},
              {"rows", f.rows()}};
}

Json to_json(const GradientRuleSet& rules) {
  Json j = Json::object();
  for (const auto& [kind, rule] : rules.rules()) {
    Json r{{"rule", rule_name(rule)}};
    if (const auto* s = std::get_if<SpiderRule>(&rule)) r["r"] = s->r;
    if (const auto* s = std::get_if<ShiftRuleEntry>(&rule)) {
      r["r"] = s->rule.r();
      r["s"] = s->rule.s();
    }
    j[kind] = r;
  }
  return j;
}

Json to_json(const GradcheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"point", e.point},
                           {"param", e.param},
                           {"theta", e.theta},
                           {"exact_dev", e.exact_dev},
                           {"fd_dev", e.fd_dev},
                           {"pass", e.pass}});
  }
  return Json{{"pass", r.pass},
              {"num_params", r.num_params},
              {"exact_tol", r.options.exact_tol},
              {"fd_tol", r.options.fd_tol},
              {"h", r.options.h},
              {"max_exact_dev", r.max_exact_dev},
              {"max_fd_dev", r.max_fd_dev},
              {"entries", entries}};
}

// Decoding -------------------------------------------------------------------

PhaseExpr phase_from_json(const Json& j) {
  if (j.is_number()) return PhaseExpr(j.get<double>());
  if (!j.is_object()) throw ParseError("phase must be a number or object");
  const double c = j.contains("const") ? field<double>(j, "const") : 0.0;
  std::map<std::size_t, double> coeffs;
  if (j.contains("coeffs")) {
    const auto& cs = j.at("coeffs");
    if (!cs.is_object()) throw ParseError("phase coeffs must be an object");
    for (const auto& [key, value] : cs.items()) {
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("phase coefficient key '" + key + "' is not an index");
      }
      if (!value.is_number()) throw ParseError("phase coefficient must be a number");
      coeffs[index] = value.get<double>();
    }
  }
  return PhaseExpr(c, std::move(coeffs));
}

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_number() || j.is_array()) {
    Polynomial p;
    p.add_monomial({}, complex_from_json(j));
    return p;
  }
  Polynomial p;
  for (const auto& m : child(j, "monomials")) {
    p.add_monomial(field<Polynomial::Exponents>(m, "exps"),
                   complex_from_json(child(m, "coeff")));
  }
  return p;
}

Ty ty_from_json(const Json& j) {
  return guarded<Ty>("type", [&] { return Ty(j.get<std::vector<std::string>>()); });
}

Box box_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("box must be an object");
  const auto kind = field<std::string>(j, "kind");
  const auto opt_ty = [&](const char* key) -> std::optional<Ty> {
    if (!j.contains(key)) return std::nullopt;
    return ty_from_json(j.at(key));
  };
  const auto dom = opt_ty("dom"), cod = opt_ty("cod");
  const auto wire = [&]() -> std::string {
    if (j.contains("wire")) return field<std::string>(j, "wire");
    if (dom && !dom->empty()) return (*dom)[0];
    if (cod && !cod->empty()) return (*cod)[0];
    return kQubitWire;
  };

  const auto legs = [&](const char* key, const char* alias) {
    return field<std::size_t>(j, j.contains(key) ? key : alias);
  };

  auto build = [&]() -> Box {
    if (kind == "plain") {
      if (!dom || !cod) throw ParseError("plain boxes need dom and cod");
      std::vector<PhaseExpr> entries;
      if (j.contains("entries")) {
        for (const auto& e : j.at("entries")) entries.push_back(phase_from_json(e));
      }
      return Box::plain(field<std::string>(j, "name"), *dom, *cod, std::move(entries));
    }
    if (kind == "zspider") {
      return Box::zspider(legs("m", "legs_in"), legs("n", "legs_out"),
                          phase_from_json(child(j, "phase")), wire());
    }
    if (kind == "h") return Box::hadamard(wire());
    if (kind == "swap") {
      if (dom) {
        if (dom->size() != 2) throw TypeCheckError("swap needs two wires");
        return Box::swap((*dom)[0], (*dom)[1]);
      }
      return Box::swap();
    }
    if (kind == "green") {
      return Box::green(legs("m", "legs_in"), legs("n", "legs_out"),
                        polynomial_from_json(child(j, "label")), wire());
    }
    if (kind == "scalar") return Box::scalar(complex_from_json(child(j, "value")));
    if (kind == "measure") return Box::measure();
    if (kind == "encode") return Box::encode();
    if (kind == "doubled") return Box::doubled(box_from_json(child(j, "inner")));
    if (kind == "bubble" || kind == "bubble_jvp") {
      const auto inner = sum_from_json(child(j, "inner"));
      const auto colour = field<std::string>(j, "colour");
      const Ty d = dom ? *dom : inner.dom();
      const Ty c = cod ? *cod : inner.cod();
      if (kind == "bubble") return Box::bubble(colour, d, c, inner);
      return Box::bubble_jvp(colour, d, c, inner, sum_from_json(child(j, "tangent")));
    }
    throw ParseError("unknown box kind '" + kind + "'");
  };
  Box box = build();
  if ((dom && *dom != box.dom()) || (cod && *cod != box.cod())) {
    throw TypeCheckError("box '" + box.name() + "' declares type " +
                         (dom ? dom->to_string() : box.dom().to_string()) + " → " +
                         (cod ? cod->to_string() : box.cod().to_string()) +
                         " but its payload gives " + box.dom().to_string() + " → " +
                         box.cod().to_string());
  }
  return box;
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("diagram must be an object");
  const auto dom = ty_from_json(child(j, "dom"));
  const auto cod = ty_from_json(child(j, "cod"));
  std::vector<Layer> layers;
  if (j.contains("layers")) {
    const auto& ls = j.at("layers");
    if (!ls.is_array()) throw ParseError("layers must be an array");
    for (const auto& l : ls) {
      layers.push_back(Layer{field<std::size_t>(l, "offset"), box_from_json(child(l, "box"))});
    }
  }
  return Diagram(dom, cod, std::move(layers));
}

FormalSum sum_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sum must be an object");
  if (!j.contains("terms")) return FormalSum(diagram_from_json(j));
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::optional<Ty> dom, cod;
  if (j.contains("dom")) dom = ty_from_json(j.at("dom"));
  if (j.contains("cod")) cod = ty_from_json(j.at("cod"));
  std::vector<std::pair<Complex, Diagram>> parsed;
  for (const auto& t : terms) {
    parsed.emplace_back(complex_from_json(child(t, "coeff")),
                        diagram_from_json(child(t, "diagram")));
  }
  if (!dom || !cod) {
    if (parsed.empty()) throw ParseError("an empty sum needs dom and cod");
    dom = dom ? *dom : parsed.front().second.dom();
    cod = cod ? *cod : parsed.front().second.cod();
  }
  FormalSum out(*dom, *cod);
  for (auto& [c, d] : parsed) out.add_term(c, std::move(d));
  return out;
}

ComplexTensor tensor_from_json(const Json& j) {
  const auto dom = field<Dims>(j, "dom_dims");
  const auto cod = field<Dims>(j, "cod_dims");
  std::vector<Complex> data;
  for (const auto& v : child(j, "data")) data.push_back(complex_from_json(v));
  return ComplexTensor(dom, cod, std::move(data));
}

TruthTableFn truth_table_from_json(const Json& j) {
  const auto rig = field<std::string>(j, "rig");
  if (rig != "f2" && rig != "boolean") throw ParseError("unknown bit rig '" + rig + "'");
  return TruthTableFn(field<unsigned>(j, "arity"), field<unsigned>(j, "coarity"),
                      rig == "f2" ? BitRig::f2 : BitRig::boolean,
                      field<std::vector<std::uint32_t>>(j, "rows"));
}

GradientRuleSet rules_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("rule file must be an object");
  GradientRuleSet rules;
  for (const auto& [kind, r] : j.items()) {
    const auto name = r.is_string() ? r.get<std::string>() : field<std::string>(r, "rule");
    if (name == "spider") {
      rules.set(kind, SpiderRule{r.is_object() && r.contains("r") ? field<double>(r, "r") : 0.5});
    } else if (name == "algebraic") {
      rules.set(kind, AlgebraicRule{});
    } else if (name == "shift") {
      const double rr = r.is_object() && r.contains("r") ? field<double>(r, "r") : 0.5;
      const double s = r.is_object() && r.contains("s") ? field<double>(r, "s")
                                                        : cq::ShiftRule::for_eigenvalue(rr).s();
      rules.set(kind, ShiftRuleEntry{cq::ShiftRule(rr, s)});
    } else if (name == "zero") {
      rules.set(kind, ZeroRule{});
    } else if (name == "entries") {
      rules.set(kind, EntriesRule{});
    } else if (name == "chain") {
      rules.set(kind, ChainRule{});
    } else {
      throw ParseError("unknown rule '" + name + "' for kind '" + kind + "'");
    }
  }
  return rules;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace diagdiff::json
