#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

// Distances use int32_t with a saturating infinity. Picking the maximum value
// as the sentinel makes "infinite exceeds every strict lower bound" fall out
// of ordinary comparisons.
using Dist = int32_t;
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

struct DistanceRow {
  uint32_t source = 0;
  // Indexed by element index; slot 0 (the identity, not a vertex) stays
  // infinite. dist[y] is finite iff y lies in the source's component.
  std::vector<Dist> dist;
};

struct DegeneratePair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Certificate for the balanced relation on a pair (x, y): the five distances
// d(x,y), d(x,xy), d(y,xy), d(x,x^-1 y), d(y,x^-1 y).
struct BalancedWitness {
  uint32_t x = 0, y = 0;
  std::array<Dist, 5> dists{};

  bool balanced() const {
    for (Dist d : dists)
      if (d <= 3) return false;
    return true;
  }
};

enum class Verdict { DiamGt4, Balanced, Neither };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DiamGt4: return "DIAM_GT4";
    case Verdict::Balanced: return "BALANCED";
    case Verdict::Neither: return "NEITHER";
  }
  return "?";
}

struct HypothesisResult {
  Verdict verdict = Verdict::Neither;
  std::optional<BalancedWitness> witness;
  uint64_t skipped_pairs = 0;  // degenerate pairs skipped by the search
};

struct Components {
  std::vector<int32_t> label;  // per element index; -1 for the identity slot
  uint32_t count = 0;
};

// The commuting graph of a finite group: vertices are the non-identity
// elements, edges join distinct commuting elements. Adjacency is implicit,
// neighbors(x) = centralizer(x) \ {identity, x}, so no edge list is ever
// materialized (centralizers can make the edge count quadratic).
//
// The distance engine exploits that conjugation is a graph automorphism:
// BFS rows are computed once per conjugacy class from the class
// representative, and d(x, y) = d(rep(x), y^g) with g the stored conjugator
// witness of x. Centralizers themselves are computed by scan only for the
// representatives and transported to the rest of each class by conjugation.
//
// Everything is computed up front; after construction all queries are
// read-only and safe to issue from many threads.
class CommGraph {
 public:
  explicit CommGraph(const Group& g) : group_(&g) {
    const uint32_t n = g.order();
    cent_.resize(n);
    for (uint32_t c = 0; c < g.class_count(); ++c) {
      const uint32_t rep = g.class_reps()[c];
      cent_[rep] = centralizer(g, rep);
    }
    for (uint32_t x = 0; x < n; ++x) {
      const uint32_t rep = g.class_reps()[g.class_of(x)];
      if (x == rep) continue;
      // x^t = rep with t = conjugator(x), so C(x) = t C(rep) t^-1.
      const uint32_t t = g.conjugator(x);
      const uint32_t ti = g.inv(t);
      const std::vector<uint32_t>& base = cent_[rep];
      std::vector<uint32_t>& out = cent_[x];
      out.reserve(base.size());
      for (uint32_t m : base) out.push_back(g.mul(g.mul(t, m), ti));
      std::sort(out.begin(), out.end());
    }
    rows_.resize(g.class_count());
    for (uint32_t c = 0; c < g.class_count(); ++c) {
      const uint32_t rep = g.class_reps()[c];
      if (rep == 0) continue;  // identity class has no vertex
      rows_[c] = bfs_from(rep);
    }
  }

  const Group& group() const { return *group_; }
  uint32_t vertex_count() const { return group_->order() - 1; }

  // centralizer(x) minus the identity and x itself.
  std::vector<uint32_t> neighbors(uint32_t x) const {
    require_vertex(x);
    std::vector<uint32_t> out;
    out.reserve(cent_[x].size());
    for (uint32_t m : cent_[x])
      if (m != 0 && m != x) out.push_back(m);
    return out;
  }

  uint32_t centralizer_size(uint32_t x) const {
    return static_cast<uint32_t>(cent_[x].size());
  }

  DistanceRow bfs_from(uint32_t x) const {
    require_vertex(x);
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
        for (uint32_t m : cent_[v]) {
          if (m == 0 || row.dist[m] != kInfDist) continue;
          row.dist[m] = d;
          next.push_back(m);
        }
      }
      frontier.swap(next);
    }
    return row;
  }

  // Cached-row distance: reduce x to its class representative and conjugate
  // y along. Oracle-tested equal to a direct BFS.
  Dist distance(uint32_t x, uint32_t y) const {
    require_vertex(x);
    require_vertex(y);
    if (x == y) return 0;
    const uint32_t cls = group_->class_of(x);
    const uint32_t t = group_->conjugator(x);
    return rows_[cls].dist[group_->conjugate(y, t)];
  }

  const DistanceRow& representative_row(uint32_t cls) const {
    return rows_[cls];
  }

  Components components() const {
    const uint32_t n = group_->order();
    Components comp;
    comp.label.assign(n, -1);
    std::vector<uint32_t> stack;
    for (uint32_t start = 1; start < n; ++start) {
      if (comp.label[start] != -1) continue;
      const int32_t id = static_cast<int32_t>(comp.count++);
      comp.label[start] = id;
      stack.push_back(start);
      while (!stack.empty()) {
        const uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t m : cent_[v]) {
          if (m == 0 || m == v || comp.label[m] != -1) continue;
          comp.label[m] = id;
          stack.push_back(m);
        }
      }
    }
    return comp;
  }

  // Max eccentricity. Eccentricity is constant on conjugacy classes
  // (conjugation is a graph automorphism), so only representative rows are
  // inspected; any unreached vertex in any row means the graph is
  // disconnected and the diameter is infinite.
  Dist diameter() const {
    const uint32_t n = group_->order();
    if (n <= 1)
      throw std::invalid_argument("diameter: graph has no vertices");
    if (n == 2) return 0;  // a single vertex
    Dist best = 0;
    for (uint32_t c = 0; c < group_->class_count(); ++c) {
      if (group_->class_reps()[c] == 0) continue;
      const DistanceRow& row = rows_[c];
      for (uint32_t y = 1; y < n; ++y) {
        if (row.dist[y] == kInfDist) return kInfDist;
        best = std::max(best, row.dist[y]);
      }
    }
    return best;
  }

  // The five-distance certificate for (x, y). Throws DegeneratePair when
  // xy or x^-1 y is the identity, where the tuple is undefined.
  BalancedWitness is_balanced_pair(uint32_t x, uint32_t y) const {
    require_vertex(x);
    require_vertex(y);
    const uint32_t xy = group_->mul(x, y);
    const uint32_t xiy = group_->mul(group_->inv(x), y);
    if (xy == 0 || xiy == 0)
      throw DegeneratePair("is_balanced_pair: DEGENERATE_PAIR (xy or x^-1*y is the identity)");
    return witness_for(x, y, xy, xiy);
  }

  // First balanced pair in (representative index, y index) order, if any.
  // Scanning x over class representatives only is sound because the balanced
  // relation is conjugation-invariant. Degenerate pairs are skipped and
  // counted.
  std::optional<BalancedWitness> find_balanced_pair(
      uint64_t* skipped_out = nullptr) const {
    const uint32_t n = group_->order();
    uint64_t skipped = 0;
    std::optional<BalancedWitness> found;
    for (uint32_t c = 0; c < group_->class_count() && !found; ++c) {
      const uint32_t x = group_->class_reps()[c];
      if (x == 0) continue;
      const uint32_t xinv = group_->inv(x);
      for (uint32_t y = 1; y < n; ++y) {
        const uint32_t xy = group_->mul(x, y);
        const uint32_t xiy = group_->mul(xinv, y);
        if (xy == 0 || xiy == 0) {
          ++skipped;
          continue;
        }
        BalancedWitness w = witness_for(x, y, xy, xiy);
        if (w.balanced()) {
          found = w;
          break;
        }
      }
    }
    if (skipped_out) *skipped_out = skipped;
    return found;
  }

  // DIAM_GT4 when the diameter exceeds 4 (infinite included); otherwise
  // BALANCED with a witness when one exists; otherwise NEITHER.
  HypothesisResult hypothesis_check() const {
    HypothesisResult res;
    if (diameter() > 4) {
      res.verdict = Verdict::DiamGt4;
      return res;
    }
    res.witness = find_balanced_pair(&res.skipped_pairs);
    res.verdict = res.witness ? Verdict::Balanced : Verdict::Neither;
    return res;
  }

 private:
  void require_vertex(uint32_t x) const {
    if (x == 0)
      throw std::invalid_argument("commuting graph: the identity is not a vertex");
    if (x >= group_->order())
      throw std::invalid_argument("commuting graph: element index out of range");
  }

  BalancedWitness witness_for(uint32_t x, uint32_t y, uint32_t xy,
                              uint32_t xiy) const {
    BalancedWitness w;
    w.x = x;
    w.y = y;
    w.dists = {distance(x, y), distance(x, xy), distance(y, xy),
               distance(x, xiy), distance(y, xiy)};
    return w;
  }

  const Group* group_;
  std::vector<std::vector<uint32_t>> cent_;
  std::vector<DistanceRow> rows_;
};

}  // namespace cgt
