#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/comm_graph.hpp"
#include "cgt/group.hpp"

namespace cgt {

// Plain, unclever commuting-graph engine used as the validation oracle for
// CommGraph. It shares only the element carrier with the fast path: adjacency
// comes from pairwise commuting tests on the permutations themselves (no
// centralizer transport, no conjugacy shortcuts) and every distance is a
// fresh breadth-first search.
class BruteGraph {
 public:
  explicit BruteGraph(const Group& g) : group_(&g) {
    const uint32_t n = g.order();
    adj_.resize(n);
    for (uint32_t x = 1; x < n; ++x) {
      for (uint32_t y = x + 1; y < n; ++y) {
        if (commutes(g.element(x), g.element(y))) {
          adj_[x].push_back(y);
          adj_[y].push_back(x);
        }
      }
    }
  }

  const Group& group() const { return *group_; }

  DistanceRow bfs(uint32_t x) const {
    DistanceRow row;
    row.source = x;
    row.dist.assign(group_->order(), kInfDist);
    row.dist[x] = 0;
    std::vector<uint32_t> frontier{x}, next;
    Dist d = 0;
    while (!frontier.empty()) {
      ++d;
      next.clear();
      for (uint32_t v : frontier) {
        for (uint32_t m : adj_[v]) {
          if (row.dist[m] != kInfDist) continue;
          row.dist[m] = d;
          next.push_back(m);
        }
      }
      frontier.swap(next);
    }
    return row;
  }

  // Full APSP table (row per vertex). Quadratic memory; callers gate on order.
  std::vector<DistanceRow> all_pairs() const {
    std::vector<DistanceRow> rows;
    rows.reserve(group_->order());
    rows.emplace_back();  // identity slot, unused
    for (uint32_t x = 1; x < group_->order(); ++x) rows.push_back(bfs(x));
    return rows;
  }

  uint32_t component_count() const {
    const uint32_t n = group_->order();
    std::vector<char> seen(n, 0);
    uint32_t count = 0;
    std::vector<uint32_t> stack;
    for (uint32_t start = 1; start < n; ++start) {
      if (seen[start]) continue;
      ++count;
      seen[start] = 1;
      stack.push_back(start);
      while (!stack.empty()) {
        const uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t m : adj_[v]) {
          if (!seen[m]) {
            seen[m] = 1;
            stack.push_back(m);
          }
        }
      }
    }
    return count;
  }

  Dist diameter() const {
    const uint32_t n = group_->order();
    if (n <= 1)
      throw std::invalid_argument("diameter: graph has no vertices");
    Dist best = 0;
    for (uint32_t x = 1; x < n; ++x) {
      const DistanceRow row = bfs(x);
      for (uint32_t y = 1; y < n; ++y) {
        if (row.dist[y] == kInfDist) return kInfDist;
        best = std::max(best, row.dist[y]);
      }
    }
    return best;
  }

  // Exhaustive balanced-pair search over all ordered pairs, first hit in
  // (x, y) order. The oracle counterpart of CommGraph::find_balanced_pair.
  std::optional<BalancedWitness> find_balanced_pair(
      uint64_t* skipped_out = nullptr) const {
    const uint32_t n = group_->order();
    const std::vector<DistanceRow> rows = all_pairs();
    uint64_t skipped = 0;
    std::optional<BalancedWitness> found;
    for (uint32_t x = 1; x < n && !found; ++x) {
      const uint32_t xinv = group_->inv(x);
      for (uint32_t y = 1; y < n; ++y) {
        const uint32_t xy = group_->mul(x, y);
        const uint32_t xiy = group_->mul(xinv, y);
        if (xy == 0 || xiy == 0) {
          ++skipped;
          continue;
        }
        BalancedWitness w;
        w.x = x;
        w.y = y;
        w.dists = {rows[x].dist[y], rows[x].dist[xy], rows[y].dist[xy],
                   rows[x].dist[xiy], rows[y].dist[xiy]};
        if (w.balanced()) {
          found = w;
          break;
        }
      }
    }
    if (skipped_out) *skipped_out = skipped;
    return found;
  }

  Verdict hypothesis_verdict() const {
    if (diameter() > 4) return Verdict::DiamGt4;
    return find_balanced_pair() ? Verdict::Balanced : Verdict::Neither;
  }

  // Recomputes a witness's five distances with fresh searches and checks the
  // recorded values, including that every one exceeds 3.
  bool verify_witness(const BalancedWitness& w) const {
    const uint32_t xy = group_->mul(w.x, w.y);
    const uint32_t xiy = group_->mul(group_->inv(w.x), w.y);
    if (xy == 0 || xiy == 0) return false;
    const DistanceRow rx = bfs(w.x);
    const DistanceRow ry = bfs(w.y);
    const std::array<Dist, 5> fresh = {rx.dist[w.y], rx.dist[xy], ry.dist[xy],
                                       rx.dist[xiy], ry.dist[xiy]};
    if (fresh != w.dists) return false;
    for (Dist d : fresh)
      if (d <= 3) return false;
    return true;
  }

 private:
  const Group* group_;
  std::vector<std::vector<uint32_t>> adj_;
};

inline constexpr uint32_t kOracleOrderCap = 2000;

struct OracleMismatch {
  uint32_t x = 0, y = 0;
  Dist fast = 0, brute = 0;
};

struct OracleDiff {
  uint64_t pairs_checked = 0;
  std::vector<OracleMismatch> mismatches;  // capped at 32 entries
  Dist diameter_fast = 0, diameter_brute = 0;
  uint32_t components_fast = 0, components_brute = 0;
  uint64_t mismatch_count = 0;

  bool empty() const {
    return mismatch_count == 0 && diameter_fast == diameter_brute &&
           components_fast == components_brute;
  }
};

// Exhaustive comparison of the conjugation-reduced engine against the brute
// oracle: every ordered pair's distance, plus diameter and component count.
inline OracleDiff oracle_diff(const Group& g, uint32_t order_cap = kOracleOrderCap) {
  if (g.order() > order_cap)
    throw CapExceeded("oracle-diff: order " + std::to_string(g.order()) +
                      " exceeds oracle cap " + std::to_string(order_cap));
  if (g.order() <= 1)
    throw std::invalid_argument("oracle-diff: group has no vertices");
  const CommGraph fast(g);
  const BruteGraph brute(g);
  OracleDiff diff;
  for (uint32_t x = 1; x < g.order(); ++x) {
    const DistanceRow row = brute.bfs(x);
    for (uint32_t y = 1; y < g.order(); ++y) {
      ++diff.pairs_checked;
      const Dist df = fast.distance(x, y);
      if (df != row.dist[y]) {
        ++diff.mismatch_count;
        if (diff.mismatches.size() < 32)
          diff.mismatches.push_back({x, y, df, row.dist[y]});
      }
    }
  }
  diff.diameter_fast = fast.diameter();
  diff.diameter_brute = brute.diameter();
  diff.components_fast = fast.components().count;
  diff.components_brute = brute.component_count();
  return diff;
}

}  // namespace cgt
