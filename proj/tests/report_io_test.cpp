#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "cgt/builders.hpp"
#include "cgt/report.hpp"
#include "cgt/spec_io.hpp"

using namespace cgt;
using nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& stem,
                                 const std::string& text) {
  const auto path =
      std::filesystem::temp_directory_path() / ("cgt_test_" + stem + ".json");
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("group spec files load") {
  const auto path = write_temp("s3",
                               R"({"name": "s3-file", "degree": 3,
                                   "generators": [[1,0,2],[1,2,0]]})");
  const GroupSpec spec = load_group_spec(path.string());
  CHECK(spec.name == "s3-file");
  CHECK(Group::enumerate(spec).order() == 6);
}

TEST_CASE("group spec diagnostics name the offending field") {
  auto expect_message = [](const std::string& text, const std::string& needle) {
    const auto path = write_temp("bad", text);
    try {
      load_group_spec(path.string());
      FAIL("expected a rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_message(R"({"degree": 3, "generators": [[0,1,2]]})", "name");
  expect_message(R"({"name": "g", "generators": [[0,1,2]]})", "degree");
  expect_message(R"({"name": "g", "degree": 3, "generators": []})",
                 "generators");
  expect_message(
      R"({"name": "g", "degree": 3, "generators": [[0,1,2],[0,0,1]]})",
      "generators[1]");
  expect_message(
      R"({"name": "g", "degree": 3, "generators": [[0,1]]})",
      "does not match degree");
  expect_message(
      R"({"name": "g", "degree": 3, "generators": [[0,1,7]]})",
      "generators[0][2]");
}

TEST_CASE("missing or malformed files are invalid input") {
  CHECK_THROWS_AS(load_group_spec("/nonexistent/path.json"),
                  std::invalid_argument);
  const auto path = write_temp("notjson", "{[");
  CHECK_THROWS_AS(load_group_spec(path.string()), std::invalid_argument);
}

TEST_CASE("analyze report for the quaternion group") {
  const GraphReport rep = analyze_group(Group::enumerate(quaternion8_spec()));
  CHECK(rep.group == "q8");
  CHECK(rep.order == 8);
  CHECK(rep.classes == 5);
  CHECK(rep.components == 1);
  CHECK(rep.diameter == 2);
  CHECK(rep.verdict == Verdict::Neither);
  CHECK_FALSE(rep.witness.has_value());

  const OrderedJson j = report_json(rep);
  CHECK(j["group"] == "q8");
  CHECK(j["diameter"] == 2);
  CHECK(j["verdict"] == "NEITHER");
  const std::vector<std::string> keys = {"group",   "order",         "classes",
                                         "components", "diameter",   "verdict",
                                         "skipped_pairs", "millis"};
  size_t at = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++at) {
    REQUIRE(at < keys.size());
    CHECK(it.key() == keys[at]);
  }
}

TEST_CASE("infinite diameter serializes as the string \"inf\"") {
  const GraphReport rep =
      analyze_group(Group::enumerate(parse_entry("s3").spec));
  CHECK(rep.diameter == kInfDist);
  const OrderedJson j = report_json(rep);
  CHECK(j["diameter"] == "inf");
  CHECK(j["verdict"] == "DIAM_GT4");
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("witness serialization") {
  GraphReport rep;
  rep.group = "demo";
  rep.order = 10;
  rep.verdict = Verdict::Balanced;
  BalancedWitness w;
  w.x = 3;
  w.y = 7;
  w.dists = {4, 5, kInfDist, 4, 6};
  rep.witness = w;
  const OrderedJson j = report_json(rep);
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"]["x"] == 3);
  CHECK(j["witness"]["y"] == 7);
  REQUIRE(j["witness"]["distances"].size() == 5);
  CHECK(j["witness"]["distances"][0] == 4);
  CHECK(j["witness"]["distances"][2] == "inf");

  const std::string row = report_csv_row(rep);
  CHECK(row.find(",BALANCED,3,7,") != std::string::npos);
}

TEST_CASE("CSV header and rows") {
  CHECK(report_csv_header() ==
        "name,order,classes,components,diameter,verdict,witness_x,witness_y,millis");
  GraphReport rep = analyze_group(Group::enumerate(quaternion8_spec()));
  rep.millis = 0;  // timing is not part of the format contract
  CHECK(report_csv_row(rep) == "q8,8,5,1,2,NEITHER,,,0");

  GraphReport s3 = analyze_group(Group::enumerate(parse_entry("s3").spec));
  s3.millis = 0;
  CHECK(report_csv_row(s3) == "s3,6,3,4,inf,DIAM_GT4,,,0");
}

TEST_CASE("uhyp aggregate schema") {
  const auto checks = run_all_checks(10, 5, 20);
  const OrderedJson j = checks_json(checks, 10, 5, 20);
  CHECK(j["seed"] == 5);
  CHECK(j["samples"] == 10);
  CHECK(j["bound"] == 20);
  CHECK(j["failures_total"] == 0);
  REQUIRE(j["checks"].is_array());
  REQUIRE(j["checks"].size() == 15);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("lemma"));
    CHECK(c.contains("samples"));
    CHECK(c.contains("failures"));
    CHECK(c.contains("seed"));
  }
}

TEST_CASE("oracle diff serialization") {
  const Group g = Group::enumerate(parse_entry("s3").spec);
  const OracleDiff diff = oracle_diff(g);
  const OrderedJson j = oracle_diff_json(g.name(), g.order(), diff, 1);
  CHECK(j["ok"] == true);
  CHECK(j["mismatch_count"] == 0);
  CHECK(j["pairs_checked"] == 25);
  CHECK(j["diameter_fast"] == "inf");
  CHECK(j["diameter_brute"] == "inf");
  CHECK(j["components_fast"] == 4);
}

TEST_CASE("distance formatting") {
  CHECK(dist_string(3) == "3");
  CHECK(dist_string(kInfDist) == "inf");
  CHECK(dist_json(kInfDist) == "inf");
  CHECK(dist_json(0) == 0);
}
