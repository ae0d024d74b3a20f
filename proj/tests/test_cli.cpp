/*
 * Copyright 2026 The iocg Authors
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
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iocg/cli.hpp"
#include "iocg/json_io.hpp"

using namespace iocg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "iocg");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), {"--output", "json"});
  const Run r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("json round trips") {
  const GraphSpec spec(8, {{1, Sign::plus}, {2, Sign::minus}});
  const Json j = to_json(spec);
  CHECK(j.dump() == R"({"n":8,"divisors":[{"d":1,"sign":1},{"d":2,"sign":-1}]})");
  CHECK(graph_spec_from_json(j) == spec);
  CHECK(to_json(build_symbol(spec)).dump() == R"({"n":8,"symbol":[1,5,6]})");
  CHECK(to_json(eigenvalues_closed(spec)).dump() == R"({"n":8,"eigenvalues":[0,2,-4,-2,0,2,4,-2]})");
  CHECK(spectrum_from_json(to_json(eigenvalues_closed(spec))) == eigenvalues_closed(spec));

  const auto record = enumerate(16, TransferKind::mst);
  const Json rj = to_json(record);
  const auto back = census_from_json(Json::parse(rj.dump()));
  CHECK(back.specs == record.specs);
  CHECK(to_json(back).dump() == rj.dump());

  for (const auto& s : all_specs(24)) {
    const Json sym = to_json(build_symbol(s));
    const SymbolSet loaded = symbol_set_from_json(Json::parse(sym.dump()));
    REQUIRE(to_json(classify_symbol(loaded.order(), loaded.elements())).dump() == to_json(s).dump());
  }

  CHECK_THROWS_AS(graph_spec_from_json(Json::parse(R"({"n":8,"divisors":[{"d":1,"sign":2}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_spec_from_json(Json::parse(R"({"divisors":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_spec_from_json(Json::parse(R"({"n":8,"divisors":[{"d":3,"sign":1}]})")),
                  std::invalid_argument);

  TransferCertificate c{2, 0, RationalTime(3, 8), {1.0, 0.0}, 1.0, Criterion::exact_search};
  const Json cj = to_json(c);
  CHECK(cj["p"] == 3);
  CHECK(cj["q"] == 8);
  CHECK(cj["criterion"] == "exact-search");
  CHECK(cj["t"].get<double>() == doctest::Approx(3.0 * 3.14159265358979 / 4.0));
}

TEST_CASE("cli inspect") {
  auto j = run_json({"inspect", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1"});
  CHECK(j["symbol"] == Json::array({1, 5, 6}));
  CHECK(j["partition"]["2"] == Json::array({2}));
  CHECK(j["partition"]["3"] == Json::array({1}));

  const Run bad = run({"inspect", "--n", "5", "--symbol", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not integral") != std::string::npos);

  const Run empty = run({"inspect", "--n", "8"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("integral: yes") != std::string::npos);

  j = run_json({"inspect", "--n", "8", "--symbol", "1,5,6"});
  CHECK(j["divisors"].size() == 2);

  CHECK(run({"inspect", "--n", "8", "--divisor", "3:+1"}).code == 2);
  CHECK(run({"inspect", "--n", "8", "--divisor", "1:+2"}).code == 2);
  CHECK(run({"inspect", "--n", "8", "--symbol", "1,7"}).code == 2);
  CHECK(run({"inspect"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("cli spectrum") {
  auto j = run_json({"spectrum", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1", "--verify"});
  CHECK(j["eigenvalues"] == Json::array({0, 2, -4, -2, 0, 2, 4, -2}));
  j = run_json({"spectrum", "--n", "4", "--divisor", "1:+1"});
  CHECK(j["eigenvalues"] == Json::array({0, -2, 0, 2}));
  j = run_json({"spectrum", "--n", "12"});
  CHECK(j["eigenvalues"] == Json(std::vector<int>(12, 0)));

  const Run table = run({"spectrum", "--n", "4", "--divisor", "1:+1"});
  CHECK(table.out == "j\tmu_j\n0\t0\n1\t-2\n2\t0\n3\t2\n");
}

TEST_CASE("cli check") {
  auto j = run_json({"check", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1", "--mode", "mst"});
  CHECK(j["decision"] == "positive");
  REQUIRE(j["certificates"].size() == 3);
  CHECK(j["certificates"][0]["a"] == 2);
  CHECK(j["certificates"][0]["p"] == 3);
  CHECK(j["certificates"][0]["q"] == 8);
  CHECK(j["certificates"][1]["a"] == 4);
  CHECK(j["certificates"][1]["p"] == 1);
  CHECK(j["certificates"][1]["q"] == 4);
  CHECK(j["certificates"][2]["a"] == 6);
  CHECK(j["certificates"][2]["p"] == 1);
  CHECK(j["certificates"][2]["q"] == 8);
  for (const auto& c : j["certificates"]) CHECK(c["fidelity"].get<double>() >= 1.0 - 1e-9);

  j = run_json({"check", "--n", "8", "--divisor", "2:+1", "--mode", "pst"});
  CHECK(j["decision"] == "positive");
  CHECK(j["certificates"][0]["a"] == 4);
  CHECK(j["certificates"][0]["p"] == 1);
  CHECK(j["certificates"][0]["q"] == 4);
  CHECK(j["certificates"][1]["criterion"] == "divisor-criterion");
  CHECK(j["certificates"][2]["criterion"] == "valuation-test");

  j = run_json({"check", "--n", "8", "--divisor", "2:+1", "--mode", "mst"}, 1);
  CHECK(j["decision"] == "negative");
  CHECK(j["certificates"].empty());

  j = run_json({"check", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1", "--mode", "ust"}, 1);
  CHECK(j["decision"] == "negative");
  CHECK(run({"check", "--n", "1", "--mode", "ust"}).code == 1);

  const Run empty = run({"check", "--n", "8", "--mode", "pst"});
  CHECK(empty.code == 1);
  CHECK(empty.out.find("valuation k=1: inf") != std::string::npos);

  CHECK(run({"check", "--n", "8", "--divisor", "4:+1"}).code == 2);
  CHECK(run({"check", "--n", "8", "--mode", "xst"}).code == 2);
}

TEST_CASE("cli census") {
  auto j = run_json({"census", "--n", "8", "--kind", "pst"});
  CHECK(j["formula_count"] == 6);
  CHECK(j["enumerated_count"] == 6);
  CHECK(j["specs"].size() == 6);
  j = run_json({"census", "--n", "16", "--kind", "mst"});
  CHECK(j["formula_count"] == 12);
  CHECK(j["enumerated_count"] == 12);
  j = run_json({"census", "--n", "6", "--kind", "pst"});
  CHECK(j["formula_count"] == 0);
  CHECK(j["enumerated_count"] == 0);

  const Run table = run({"census", "--n", "8", "--kind", "pst", "--list"});
  CHECK(table.code == 0);
  CHECK(table.out.find("6 == 6") != std::string::npos);
  CHECK(table.out.find("{1:+1, 2:-1}") != std::string::npos);

  CHECK(run({"census", "--n", "2048", "--kind", "pst"}).code == 2);
  CHECK(run({"--cap", "16", "census", "--n", "32"}).code == 2);
  CHECK(run({"census", "--n", "32", "--cap", "16"}).code == 2);
  CHECK(run({"--cap", "2", "census", "--n", "8"}).code == 2);
}

TEST_CASE("cli export") {
  Run r = run({"export", "--n", "4", "--divisor", "1:+1", "--format", "dot"});
  CHECK(r.code == 0);
  for (const char* arc : {"0 -> 1;", "1 -> 2;", "2 -> 3;", "3 -> 0;"}) CHECK(r.out.find(arc) != std::string::npos);
  std::size_t arcs = 0;
  for (std::size_t pos = r.out.find("->"); pos != std::string::npos; pos = r.out.find("->", pos + 1)) ++arcs;
  CHECK(arcs == 4);

  r = run({"export", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1", "--format", "csv"});
  CHECK(r.out.substr(0, r.out.find('\n')) == "0,1,-1,-1,0,1,1,-1");

  r = run({"export", "--n", "3", "--format", "csv"});
  CHECK(r.out == "0,0,0\n0,0,0\n0,0,0\n");

  r = run({"export", "--n", "8", "--divisor", "1:+1", "--divisor", "2:-1", "--format", "json"});
  CHECK(Json::parse(r.out) == Json::parse(R"({"n":8,"symbol":[1,5,6]})"));

  const auto path = temp_path("iocg_export_test.csv");
  r = run({"export", "--n", "4", "--divisor", "1:-1", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "0,-1,0,1");
  std::filesystem::remove(path);

  CHECK(run({"export", "--n", "4", "--format", "csv", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("cli reads spec files") {
  const auto path = temp_path("iocg_spec_test.json");
  {
    std::ofstream f(path);
    f << R"({"n": 8, "divisors": [{"d": 2, "sign": 1}]})";
  }
  auto j = run_json({"check", "--spec-file", path.string(), "--mode", "pst"});
  CHECK(j["decision"] == "positive");
  {
    std::ofstream f(path);
    f << R"({"n": 8, "symbol": [1, 5, 6]})";
  }
  j = run_json({"inspect", "--spec-file", path.string()});
  CHECK(j["divisors"] == Json::parse(R"([{"d":1,"sign":1},{"d":2,"sign":-1}])"));
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(run({"inspect", "--spec-file", path.string()}).code == 2);
  std::filesystem::remove(path);
}
