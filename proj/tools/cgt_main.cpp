// cgt: commuting graphs of finite permutation groups (distances, diameter,
// components, balanced pairs) plus a samplewise checker for the valuation
// axioms of the rational quaternions under w = v2(nrd).
//
// Exit codes: 0 success, 2 invalid input, 3 cap exceeded, 4 check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/brute_force.hpp"
#include "cgt/builders.hpp"
#include "cgt/checks.hpp"
#include "cgt/comm_graph.hpp"
#include "cgt/group.hpp"
#include "cgt/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitCheckFailure = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument(out_path + ": cannot open for writing");
  out << text << "\n";
}

cgt::Group build_entry(const std::string& name, uint64_t max_order) {
  cgt::BuiltEntry entry = cgt::parse_entry(name);
  entry.spec.max_order = max_order;
  cgt::Group g = cgt::Group::enumerate(entry.spec);
  if (entry.expected_order && g.order() != *entry.expected_order)
    throw std::logic_error("builder for '" + name + "' produced order " +
                           std::to_string(g.order()) + ", expected " +
                           std::to_string(*entry.expected_order));
  return g;
}

uint64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

int run_analyze(const std::string& entry, uint64_t max_order,
                const std::string& out_path) {
  const cgt::Group g = build_entry(entry, max_order);
  const cgt::GraphReport rep = cgt::analyze_group(g);
  emit(cgt::report_json(rep).dump(2), out_path);
  return kExitOk;
}

int run_diam(const std::string& entry, uint64_t max_order,
             const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const cgt::Group g = build_entry(entry, max_order);
  const cgt::CommGraph graph(g);
  cgt::OrderedJson j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["components"] = graph.components().count;
  j["diameter"] = cgt::dist_json(graph.diameter());
  j["millis"] = elapsed_ms(t0);
  emit(j.dump(2), out_path);
  return kExitOk;
}

int run_balanced(const std::string& entry, uint64_t max_order,
                 const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const cgt::Group g = build_entry(entry, max_order);
  const cgt::CommGraph graph(g);
  uint64_t skipped = 0;
  const auto witness = graph.find_balanced_pair(&skipped);
  cgt::OrderedJson j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["found"] = witness.has_value();
  if (witness) j["witness"] = cgt::witness_json(*witness);
  j["skipped_pairs"] = skipped;
  j["millis"] = elapsed_ms(t0);
  emit(j.dump(2), out_path);
  return kExitOk;
}

int run_oracle_diff(const std::string& entry, uint64_t max_order,
                    uint32_t oracle_cap, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const cgt::Group g = build_entry(entry, max_order);
  const cgt::OracleDiff diff = cgt::oracle_diff(g, oracle_cap);
  emit(cgt::oracle_diff_json(g.name(), g.order(), diff, elapsed_ms(t0)).dump(2),
       out_path);
  return diff.empty() ? kExitOk : kExitCheckFailure;
}

int run_uhyp(uint64_t samples, uint64_t seed, int64_t bound,
             const std::string& out_path) {
  if (samples < 1) throw std::invalid_argument("uhyp: --samples must be >= 1");
  const auto checks = cgt::run_all_checks(samples, seed, bound);
  emit(cgt::checks_json(checks, samples, seed, bound).dump(2), out_path);
  for (const auto& c : checks)
    if (!c.ok()) return kExitCheckFailure;
  return kExitOk;
}

int run_corpus(const std::string& path, uint64_t max_order,
               const std::string& out_path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!j.is_array())
    throw std::invalid_argument(path + ": expected a JSON array of entries");

  std::string csv = cgt::report_csv_header();
  size_t idx = 0;
  for (const auto& item : j) {
    std::string entry;
    std::optional<uint64_t> expected;
    if (item.is_string()) {
      entry = item.get<std::string>();
    } else if (item.is_object() && item.contains("entry") &&
               item["entry"].is_string()) {
      entry = item["entry"].get<std::string>();
      if (item.contains("expected_order"))
        expected = item["expected_order"].get<uint64_t>();
    } else {
      throw std::invalid_argument(path + ": entries[" + std::to_string(idx) +
                                  "]: expected a string or an object with "
                                  "an \"entry\" field");
    }
    const cgt::Group g = build_entry(entry, max_order);
    if (expected && g.order() != *expected)
      throw std::invalid_argument(path + ": entries[" + std::to_string(idx) +
                                  "]: group '" + entry + "' has order " +
                                  std::to_string(g.order()) + ", expected " +
                                  std::to_string(*expected));
    csv += "\n" + cgt::report_csv_row(cgt::analyze_group(g));
    ++idx;
  }
  emit(csv, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cgt: commuting graphs of finite groups, an oracle-validated distance "
      "engine, and a seeded checker for quaternion valuation axioms"};
  app.require_subcommand(1);

  std::string entry, path, out_path;
  uint64_t max_order = cgt::kDefaultMaxOrder;
  uint32_t oracle_cap = cgt::kOracleOrderCap;
  uint64_t samples = 10000, seed = 42;
  int64_t bound = 1000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", max_order,
                    "enumeration cap (default 2000000)");
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "components, diameter and hypothesis verdict for one group");
  analyze->add_option("entry", entry, "group entry, e.g. a5, s6, d12, q8, psl2_7, file:<path>")
      ->required();
  add_common(analyze);

  CLI::App* diam = app.add_subcommand("diam", "components and diameter only");
  diam->add_option("entry", entry)->required();
  add_common(diam);

  CLI::App* balanced =
      app.add_subcommand("balanced", "search for a balanced pair");
  balanced->add_option("entry", entry)->required();
  add_common(balanced);

  CLI::App* odiff = app.add_subcommand(
      "oracle-diff",
      "exhaustively compare the fast distance engine against brute-force BFS");
  odiff->add_option("entry", entry)->required();
  odiff->add_option("--oracle", oracle_cap,
                    "raise the oracle order cap (default 2000)");
  add_common(odiff);

  CLI::App* uhyp = app.add_subcommand(
      "uhyp", "run every valuation-axiom checker on seeded random quaternions");
  uhyp->add_option("--samples", samples, "samples per check (default 10000)");
  uhyp->add_option("--seed", seed, "master RNG seed (default 42)");
  uhyp->add_option("--bound", bound,
                   "bound on rational component magnitudes (default 1000)");
  uhyp->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* corpus = app.add_subcommand(
      "corpus", "analyze every entry of a JSON corpus file; CSV summary output");
  corpus->add_option("file", path, "JSON array of entry names or {entry, expected_order}")
      ->required();
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (analyze->parsed()) return run_analyze(entry, max_order, out_path);
    if (diam->parsed()) return run_diam(entry, max_order, out_path);
    if (balanced->parsed()) return run_balanced(entry, max_order, out_path);
    if (odiff->parsed())
      return run_oracle_diff(entry, max_order, oracle_cap, out_path);
    if (uhyp->parsed()) return run_uhyp(samples, seed, bound, out_path);
    if (corpus->parsed()) return run_corpus(path, max_order, out_path);
  } catch (const cgt::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalidInput;
}
