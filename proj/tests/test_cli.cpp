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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

#include "diagdiff/cli.hpp"
#include "diagdiff/corpus.hpp"
#include "diagdiff/cqmap.hpp"
#include "diagdiff/interpret.hpp"
#include "diagdiff/serialize.hpp"

using namespace diagdiff;
using namespace diagdiff::testing;
using diagdiff::json::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "diagdiff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("diagdiff_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string write(const std::string& name, const Json& j) const { return write(name, j.dump()); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string corpus_file(const std::string& name) {
  return (std::filesystem::path(DIAGDIFF_CORPUS_DIR) / (name + ".json")).string();
}

}  // namespace

TEST_CASE("parse_theta", "[cli]") {
  CHECK(cli::parse_theta("0=0.5,2=-1e-3") == std::map<std::size_t, double>{{0, 0.5}, {2, -1e-3}});
  CHECK(cli::parse_theta("").empty());
  CHECK_THROWS_AS(cli::parse_theta("0=1,0=2"), ParseError);
  CHECK_THROWS_AS(cli::parse_theta("a=1"), ParseError);
  CHECK_THROWS_AS(cli::parse_theta("0=1x"), ParseError);
  CHECK_THROWS_AS(cli::parse_theta("0"), ParseError);
}

TEST_CASE("eval", "[cli]") {
  auto r = run_cli({"eval", "--input", corpus_file("hadamard")});
  REQUIRE(r.code == cli::kOk);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(close(json::tensor_from_json(json::parse(r.out)),
              ComplexTensor({2}, {2}, {s, s, s, -s}), 1e-15));

  r = run_cli({"eval", "--input", corpus_file("empty")});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::tensor_from_json(json::parse(r.out)) == ComplexTensor::scalar(1.0));

  r = run_cli({"eval", "--input", corpus_file("bell"), "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "row,col,re,im");
  std::vector<double> re;
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 4);
    re.push_back(std::stod(cells[2]));
  }
  // (|00⟩ + |11⟩) up to the normalisation of the corpus entry.
  REQUIRE(re.size() == 4);
  CHECK(re[1] == 0.0);
  CHECK(re[2] == 0.0);
  CHECK(re[0] == Catch::Approx(re[3]));
  CHECK(re[0] != 0.0);
}

TEST_CASE("eval writes files that round-trip", "[cli]") {
  TempDir dir;
  const auto& e = corpus::get("cq-euler");
  const auto out = dir.file("value.json");
  const auto r = run_cli({"eval", "--input", corpus_file(e.name), "--theta", "0=0.1,1=0.2,2=0.3",
                          "--output", out});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  const std::vector<double> theta{0.1, 0.2, 0.3};
  CHECK(json::tensor_from_json(json::read_file(out)) == interpret(e.diagram, theta));
}

TEST_CASE("grad", "[cli]") {
  TempDir dir;
  const auto z = dir.write("z.json", json::to_json(zx::z(1, 1, PhaseExpr::parameter(0))));
  auto r = run_cli({"grad", "--input", z, "--theta", "0=0.4", "--param", "0"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["param"] == 0);
  const auto ds = json::sum_from_json(j["gradient"]);
  REQUIRE(ds.size() == 1);
  CHECK(ds.terms()[0].coeff == Complex{0.5, 0.0});
  const std::vector<double> theta{0.4};
  CHECK(close(json::tensor_from_json(j["value"]),
              finite_difference(FormalSum(zx::z(1, 1, PhaseExpr::parameter(0))), 0, theta), 1e-9));

  // A parameter the diagram does not use.
  r = run_cli({"grad", "--input", z, "--theta", "0=0.4", "--param", "3"});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::sum_from_json(json::parse(r.out)["gradient"]).is_zero());

  // The doubled rotation uses the shift rule.
  const auto rz = dir.write("rz.json", json::to_json(Diagram::from_box(
                                          Box::doubled(Box::zspider(1, 1, PhaseExpr::parameter(0))))));
  r = run_cli({"grad", "--input", rz, "--theta", "0=0.3"});
  REQUIRE(r.code == cli::kOk);
  const auto shift = json::sum_from_json(json::parse(r.out)["gradient"]);
  REQUIRE(shift.size() == 2);
  std::vector<double> coeffs;
  for (const auto& t : shift.terms()) coeffs.push_back(t.coeff.real());
  std::sort(coeffs.begin(), coeffs.end());
  CHECK(coeffs == std::vector<double>{-0.5, 0.5});
}

TEST_CASE("gradcheck", "[cli]") {
  TempDir dir;
  auto r = run_cli({"gradcheck", "--input", corpus_file("zx-rz-rx-rz")});
  CHECK(r.code == cli::kOk);
  const auto report = json::parse(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["entries"].size() == 5 * report["num_params"].get<std::size_t>());

  // Zero parameters pass vacuously.
  r = run_cli({"gradcheck", "--input", corpus_file("hadamard")});
  CHECK(r.code == cli::kOk);

  // A wrong spider rule is caught.
  auto rules = GradientRuleSet::standard();
  rules.set("zspider", SpiderRule{1.0});
  const auto bad = dir.write("bad_rules.json", json::to_json(rules));
  r = run_cli({"gradcheck", "--input", corpus_file("zx-rz-rx-rz"), "--rules", bad});
  CHECK(r.code == cli::kCheckFailed);
  CHECK(json::parse(r.out)["pass"] == false);

  r = run_cli({"gradcheck", "--input", corpus_file("zx-rz-rx-rz"), "--theta", "0=0.1,1=0.2,2=0.3",
               "--format", "csv"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("point,param,theta,exact_dev,fd_dev,pass\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("stone", "[cli]") {
  const std::map<std::string, ComplexTensor> expected{
      {"stone-rz-rx",
       scale(Complex{-0.5},
             kron(ComplexTensor({2}, {2}, {1, 0, 0, -1}), ComplexTensor::identity({2})) +
                 kron(ComplexTensor::identity({2}), ComplexTensor({2}, {2}, {0, 1, 1, 0})))},
      {"stone-pauli-zx",
       scale(Complex{-0.5}, kron(ComplexTensor({2}, {2}, {1, 0, 0, -1}),
                                 ComplexTensor({2}, {2}, {0, 1, 1, 0})))},
  };
  for (const auto& [name, generator] : expected) {
    INFO(name);
    const auto r = run_cli({"stone", "--input", corpus_file(name)});
    REQUIRE(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["tol"] == 1e-10);
    CHECK(j["grid"].size() == 9);
    CHECK(close(json::tensor_from_json(j["generator"]), generator, 1e-10));
  }
  CHECK(run_cli({"stone", "--input", corpus_file("identity")}).code == cli::kOk);
  CHECK(run_cli({"stone", "--input", corpus_file("cq-euler")}).code == cli::kParseError);
  CHECK(run_cli({"stone", "--input", corpus_file("bell")}).code == cli::kTypeError);
  // A non-unitary family fails the checks.
  CHECK(run_cli({"stone", "--input", corpus_file("hadamard")}).code == cli::kCheckFailed);
}

TEST_CASE("Exit codes for bad input", "[cli]") {
  TempDir dir;
  const auto z = corpus_file("zx-rz-rx-rz");
  CHECK(run_cli({}).code == cli::kParseError);
  CHECK(run_cli({"teleport", "--input", z}).code == cli::kParseError);
  CHECK(run_cli({"eval"}).code == cli::kParseError);
  CHECK(run_cli({"eval", "--input", dir.file("missing.json")}).code == cli::kParseError);
  CHECK(run_cli({"eval", "--input", dir.write("broken.json", std::string("{\"dom\": ["))}).code ==
        cli::kParseError);
  CHECK(run_cli({"eval", "--input", z}).code == cli::kParseError);
  CHECK(run_cli({"eval", "--input", z, "--theta", "0=1,1=x"}).code == cli::kParseError);
  CHECK(run_cli({"eval", "--input", z, "--format", "xml"}).code == cli::kParseError);
  CHECK(run_cli({"gradcheck", "--input", z, "--h", "-1"}).code == cli::kParseError);
  CHECK(run_cli({"--help"}).code == cli::kOk);

  const auto ill_typed = dir.write(
      "ill.json",
      std::string(R"({"dom": ["x"], "cod": ["x"], "layers": [{"offset": 1, "box": {"kind": "h"}}]})"));
  auto r = run_cli({"eval", "--input", ill_typed});
  CHECK(r.code == cli::kTypeError);
  CHECK_FALSE(r.err.empty());
  const auto abstract = dir.write("abstract.json", json::to_json(Diagram::from_box(Box::plain("f", Ty{"a"}, Ty{"a"}))));
  CHECK(run_cli({"eval", "--input", abstract}).code == cli::kTypeError);

  GradientRuleSet rules = GradientRuleSet::standard();
  rules.remove("zspider");
  const auto partial = dir.write("partial.json", json::to_json(rules));
  CHECK(run_cli({"grad", "--input", z, "--theta", "0=1,1=2,2=3", "--rules", partial}).code ==
        cli::kMissingRule);
  CHECK(run_cli({"grad", "--input", z, "--theta", "0=1,1=2,2=3", "--rules",
                 dir.write("unknown.json", std::string(R"({"zspider": "magic"})"))})
            .code == cli::kParseError);
}

TEST_CASE("Output is deterministic", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gradcheck", "--input", corpus_file("nn-two-layer")},
           {"grad", "--input", corpus_file("cq-gadget"), "--theta", "0=0.3,1=-0.7", "--param", "1"},
           {"stone", "--input", corpus_file("stone-pauli-zx"), "--format", "csv"}}) {
    const auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
