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

#include "diagdiff/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diagdiff/autodiff.hpp"
#include "diagdiff/interpret.hpp"
#include "diagdiff/serialize.hpp"

namespace diagdiff::cli {

namespace {

using json::Json;

std::vector<double> theta_vector(const RunConfig& config, std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = config.theta.find(i);
    if (it == config.theta.end()) {
      throw ParseError("--theta does not assign parameter " + std::to_string(i) +
                       " (the input has " + std::to_string(n) + " parameters)");
    }
    out[i] = it->second;
  }
  return out;
}

GradientRuleSet load_rules(const RunConfig& config) {
  if (config.rules.empty()) return GradientRuleSet::standard();
  return json::rules_from_json(json::read_file(config.rules));
}

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string tensor_csv(const ComplexTensor& t) {
  std::string out = "row,col,re,im\n";
  for (std::size_t r = 0; r < t.cod_size(); ++r) {
    for (std::size_t c = 0; c < t.dom_size(); ++c) {
      const auto v = t.at(r, c);
      out += std::to_string(r) + "," + std::to_string(c) + "," + csv_number(v.real()) +
             "," + csv_number(v.imag()) + "\n";
    }
  }
  return out;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw Error("cannot write '" + config.output + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParseError(std::string(name) + " must be positive");
  }
}

int cmd_eval(const RunConfig& config, const FormalSum& s, std::ostream& out) {
  const auto theta = theta_vector(config, s.num_params());
  const auto t = interpret(s, theta);
  emit(config, config.format == Format::json ? dump(json::to_json(t)) : tensor_csv(t), out);
  return kOk;
}

int cmd_grad(const RunConfig& config, const FormalSum& s, std::ostream& out) {
  const auto rules = load_rules(config);
  const auto theta = theta_vector(config, s.num_params());
  const auto ds = diagram_derivative(s, config.param, rules);
  const auto t = interpret(ds, theta, rules.colours());
  if (config.format == Format::csv) {
    emit(config, tensor_csv(t), out);
  } else {
    emit(config,
         dump(Json{{"param", config.param},
                   {"gradient", json::to_json(ds)},
                   {"value", json::to_json(t)}}),
         out);
  }
  return kOk;
}

int cmd_gradcheck(const RunConfig& config, const FormalSum& s, std::ostream& out) {
  const auto rules = load_rules(config);
  GradcheckOptions options;
  options.h = config.h;
  options.exact_tol = config.exact_tol;
  options.fd_tol = config.tol.value_or(1e-6);
  check_positive(options.fd_tol, "--tol");
  const auto n = s.num_params();
  const auto grid = config.theta.empty()
                        ? default_grid(n)
                        : std::vector<std::vector<double>>{theta_vector(config, n)};
  const auto report = gradcheck(s, grid, rules, options);
  if (config.format == Format::csv) {
    std::string text = "point,param,theta,exact_dev,fd_dev,pass\n";
    for (const auto& e : report.entries) {
      text += std::to_string(e.point) + "," + std::to_string(e.param) + "," +
              csv_number(e.theta[e.param]) + "," + csv_number(e.exact_dev) + "," +
              csv_number(e.fd_dev) + "," + (e.pass ? "1" : "0") + "\n";
    }
    emit(config, text, out);
  } else {
    emit(config, dump(json::to_json(report)), out);
  }
  return report.pass ? kOk : kCheckFailed;
}

int cmd_stone(const RunConfig& config, const FormalSum& s, std::ostream& out) {
  const double tol = config.tol.value_or(1e-10);
  check_positive(tol, "--tol");
  if (s.num_params() > 1) {
    throw ValueError("stone needs a diagram with at most one parameter, got " +
                     std::to_string(s.num_params()));
  }
  if (s.dom() != s.cod()) {
    throw TypeCheckError("stone needs an endomorphism, got " + s.dom().to_string() +
                         " → " + s.cod().to_string());
  }
  const auto rules = load_rules(config);
  const std::vector<double> zero{0.0};
  const auto u0 = interpret(s, zero, rules.colours());
  const auto du0 = interpret(diagram_derivative(s, 0, rules), zero, rules.colours());
  const auto generator = scale(Complex{0.0, -1.0}, du0);

  const double identity_dev = max_abs_diff(u0, ComplexTensor::identity(u0.dom_dims()));
  const double adjoint_dev = max_abs_diff(generator, dagger(generator));
  Json grid = Json::array();
  std::string csv = "t,dev\n";
  double exp_dev = 0.0;
  for (int k = 0; k < 9; ++k) {
    const double t = -2.0 + 0.5 * k;
    const std::vector<double> th{t};
    const double dev =
        max_abs_diff(interpret(s, th, rules.colours()), matrix_exp(generator, t));
    exp_dev = std::max(exp_dev, dev);
    grid.push_back(Json{{"t", t}, {"dev", dev}});
    csv += csv_number(t) + "," + csv_number(dev) + "\n";
  }
  const bool pass = identity_dev <= tol && adjoint_dev <= tol && exp_dev <= tol;
  if (config.format == Format::csv) {
    emit(config, csv, out);
  } else {
    emit(config,
         dump(Json{{"pass", pass},
                   {"tol", tol},
                   {"generator", json::to_json(generator)},
                   {"identity_at_zero_dev", identity_dev},
                   {"self_adjoint_dev", adjoint_dev},
                   {"exponential_dev", exp_dev},
                   {"grid", grid}}),
         out);
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

std::map<std::size_t, double> parse_theta(const std::string& text) {
  std::map<std::size_t, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--theta item '" + item + "' is not i=v");
    try {
      std::size_t used = 0;
      const auto key = item.substr(0, eq);
      const auto index = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
      const auto value_text = item.substr(eq + 1);
      const double value = std::stod(value_text, &used);
      if (used != value_text.size()) throw std::invalid_argument(value_text);
      if (!out.emplace(index, value).second) {
        throw ParseError("--theta assigns parameter " + key + " twice");
      }
    } catch (const std::logic_error&) {
      throw ParseError("--theta item '" + item + "' is not i=v");
    }
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_positive(config.h, "--h");
    check_positive(config.exact_tol, "--exact-tol");
    const auto s = json::sum_from_json(json::read_file(config.input));
    if (config.command == "eval") return cmd_eval(config, s, out);
    if (config.command == "grad") return cmd_grad(config, s, out);
    if (config.command == "gradcheck") return cmd_gradcheck(config, s, out);
    if (config.command == "stone") return cmd_stone(config, s, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kParseError;
  } catch (const MissingRuleError& e) {
    err << "error: " << e.what() << '\n';
    return kMissingRule;
  } catch (const TypeCheckError& e) {
    err << "type error: " << e.what() << '\n';
    return kTypeError;
  } catch (const DimensionError& e) {
    err << "type error: " << e.what() << '\n';
    return kTypeError;
  } catch (const InterpretError& e) {
    err << "type error: " << e.what() << '\n';
    return kTypeError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differentiate string diagrams."};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig config;
  std::string theta, format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Diagram or sum JSON file")->required();
    sub->add_option("--theta", theta, "Parameter values i=v[,j=v...]");
    sub->add_option("--output", config.output, "Output file (default: stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--rules", config.rules, "Gradient rule file");
  };
  auto* eval = app.add_subcommand("eval", "Interpret a diagram at θ");
  add_common(eval);
  auto* grad = app.add_subcommand("grad", "Differentiate a diagram");
  add_common(grad);
  grad->add_option("--param", config.param, "Parameter index");
  auto* check = app.add_subcommand("gradcheck", "Compare the three gradients");
  add_common(check);
  check->add_option("--h", config.h, "Finite-difference step");
  check->add_option("--tol", config.tol, "Tolerance against finite differences");
  check->add_option("--exact-tol", config.exact_tol,
                    "Tolerance between the diagrammatic and dual-number gradients");
  auto* stone = app.add_subcommand("stone", "Extract and check a unitary generator");
  add_common(stone);
  stone->add_option("--tol", config.tol, "Tolerance for all checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? Format::csv : Format::json;
  try {
    config.theta = parse_theta(theta);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return run(config, out, err);
}

}  // namespace diagdiff::cli
