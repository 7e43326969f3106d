#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cgt/brute_force.hpp"
#include "cgt/checks.hpp"
#include "cgt/comm_graph.hpp"
#include "cgt/group.hpp"

namespace cgt {

using OrderedJson = nlohmann::ordered_json;

// Infinite distances are serialized as the string "inf", never as -1.
inline OrderedJson dist_json(Dist d) {
  if (d == kInfDist) return OrderedJson("inf");
  return OrderedJson(d);
}

inline std::string dist_string(Dist d) {
  return d == kInfDist ? "inf" : std::to_string(d);
}

struct GraphReport {
  std::string group;
  uint64_t order = 0;
  uint32_t classes = 0;
  uint32_t components = 0;
  Dist diameter = 0;
  Verdict verdict = Verdict::Neither;
  std::optional<BalancedWitness> witness;
  uint64_t skipped_pairs = 0;
  uint64_t millis = 0;
};

// Full pipeline: commuting graph, components, diameter, hypothesis verdict.
inline GraphReport analyze_group(const Group& g) {
  const auto t0 = std::chrono::steady_clock::now();
  GraphReport rep;
  rep.group = g.name();
  rep.order = g.order();
  rep.classes = g.class_count();
  const CommGraph graph(g);
  rep.components = graph.components().count;
  rep.diameter = graph.diameter();
  HypothesisResult hyp = graph.hypothesis_check();
  rep.verdict = hyp.verdict;
  rep.witness = hyp.witness;
  rep.skipped_pairs = hyp.skipped_pairs;
  rep.millis = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return rep;
}

inline OrderedJson witness_json(const BalancedWitness& w) {
  OrderedJson jw;
  jw["x"] = w.x;
  jw["y"] = w.y;
  OrderedJson dists = OrderedJson::array();
  for (Dist d : w.dists) dists.push_back(dist_json(d));
  jw["distances"] = std::move(dists);
  return jw;
}

inline OrderedJson report_json(const GraphReport& r) {
  OrderedJson j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["classes"] = r.classes;
  j["components"] = r.components;
  j["diameter"] = dist_json(r.diameter);
  j["verdict"] = verdict_name(r.verdict);
  if (r.witness) j["witness"] = witness_json(*r.witness);
  j["skipped_pairs"] = r.skipped_pairs;
  j["millis"] = r.millis;
  return j;
}

// Fixed CSV column order for corpus runs.
inline std::string report_csv_header() {
  return "name,order,classes,components,diameter,verdict,witness_x,witness_y,millis";
}

inline std::string report_csv_row(const GraphReport& r) {
  std::string row = r.group + "," + std::to_string(r.order) + "," +
                    std::to_string(r.classes) + "," +
                    std::to_string(r.components) + "," +
                    dist_string(r.diameter) + "," + verdict_name(r.verdict) +
                    ",";
  if (r.witness) row += std::to_string(r.witness->x);
  row += ",";
  if (r.witness) row += std::to_string(r.witness->y);
  row += "," + std::to_string(r.millis);
  return row;
}

inline OrderedJson check_report_json(const CheckReport& r) {
  OrderedJson j;
  j["lemma"] = r.lemma;
  j["samples"] = r.samples;
  OrderedJson fails = OrderedJson::array();
  for (const CheckFailure& f : r.failures) {
    OrderedJson jf;
    jf["index"] = f.index;
    jf["detail"] = f.detail;
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  j["seed"] = r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// Aggregate for the uhyp command. Contains no timing, so a rerun with the
// same flags is byte-identical.
inline OrderedJson checks_json(const std::vector<CheckReport>& checks,
                               uint64_t samples, uint64_t seed, int64_t bound) {
  OrderedJson j;
  j["seed"] = seed;
  j["samples"] = samples;
  j["bound"] = bound;
  uint64_t total = 0;
  for (const CheckReport& r : checks) total += r.failures.size();
  j["failures_total"] = total;
  OrderedJson arr = OrderedJson::array();
  for (const CheckReport& r : checks) arr.push_back(check_report_json(r));
  j["checks"] = std::move(arr);
  return j;
}

inline OrderedJson oracle_diff_json(const std::string& name,
                                    uint64_t order,
                                    const OracleDiff& diff, uint64_t millis) {
  OrderedJson j;
  j["group"] = name;
  j["order"] = order;
  j["pairs_checked"] = diff.pairs_checked;
  j["mismatch_count"] = diff.mismatch_count;
  OrderedJson arr = OrderedJson::array();
  for (const OracleMismatch& m : diff.mismatches) {
    OrderedJson jm;
    jm["x"] = m.x;
    jm["y"] = m.y;
    jm["fast"] = dist_json(m.fast);
    jm["brute"] = dist_json(m.brute);
    arr.push_back(std::move(jm));
  }
  j["mismatches"] = std::move(arr);
  j["diameter_fast"] = dist_json(diff.diameter_fast);
  j["diameter_brute"] = dist_json(diff.diameter_brute);
  j["components_fast"] = diff.components_fast;
  j["components_brute"] = diff.components_brute;
  j["ok"] = diff.empty();
  j["millis"] = millis;
  return j;
}

}  // namespace cgt
