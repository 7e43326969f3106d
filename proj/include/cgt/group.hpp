#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/permutation.hpp"

namespace cgt {

inline constexpr uint64_t kDefaultMaxOrder = 2'000'000;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  std::string name;
  std::vector<Permutation> generators;
  uint64_t max_order = kDefaultMaxOrder;
};

// A finite permutation group, fully enumerated.
//
// Elements are held in a canonical order: identity at index 0, the rest
// sorted lexicographically by image arrays. All downstream structures
// (inverses, conjugacy data, graph distances) speak in these dense indices.
// The identity's lexicographic minimality makes the whole ordering one plain
// sort. A Group is immutable once enumerate() returns; every query below is
// read-only and safe to call concurrently.
class Group {
 public:
  // Breadth-first closure of the generators under composition, then canonical
  // reordering and table building (inverses, conjugacy classes with
  // per-element conjugator witnesses). Deterministic: the same spec yields
  // bit-identical element order. Throws CapExceeded when the closure passes
  // spec.max_order, std::invalid_argument on malformed generators.
  static Group enumerate(const GroupSpec& spec) {
    if (spec.generators.empty())
      throw std::invalid_argument("enumerate: empty generator list");
    const uint32_t degree = spec.generators.front().degree();
    if (degree == 0) throw std::invalid_argument("enumerate: degree 0");
    for (size_t gi = 0; gi < spec.generators.size(); ++gi) {
      const Permutation& g = spec.generators[gi];
      if (g.degree() != degree)
        throw std::invalid_argument("enumerate: generator " +
                                    std::to_string(gi) + " has degree " +
                                    std::to_string(g.degree()) + ", expected " +
                                    std::to_string(degree));
      if (!is_bijection(g.images))
        throw std::invalid_argument("enumerate: generator " +
                                    std::to_string(gi) + " is not a bijection");
    }

    Group g;
    g.name_ = spec.name;
    g.degree_ = degree;

    // Closure.
    std::unordered_map<Permutation, uint32_t, PermutationHash> seen;
    std::vector<Permutation> pool;
    std::deque<uint32_t> todo;
    auto add = [&](Permutation p) -> bool {
      auto [it, fresh] = seen.emplace(std::move(p), static_cast<uint32_t>(pool.size()));
      if (!fresh) return false;
      if (pool.size() + 1 > spec.max_order)
        throw CapExceeded("enumerate: order of '" + spec.name +
                          "' exceeds cap " + std::to_string(spec.max_order));
      pool.push_back(it->first);
      todo.push_back(it->second);
      return true;
    };
    add(Permutation::identity(degree));
    while (!todo.empty()) {
      const uint32_t cur = todo.front();
      todo.pop_front();
      for (const Permutation& gen : spec.generators) {
        Permutation next = compose(pool[cur], gen);
        add(std::move(next));
      }
    }

    // Canonical order; the identity sorts first on its own.
    std::sort(pool.begin(), pool.end());
    g.elements_ = std::move(pool);
    g.index_.reserve(g.elements_.size() * 2);
    for (uint32_t i = 0; i < g.order(); ++i) g.index_.emplace(g.elements_[i], i);

    g.generator_indices_.reserve(spec.generators.size());
    for (const Permutation& gen : spec.generators)
      g.generator_indices_.push_back(g.index_.at(gen));

    g.inverse_.resize(g.order());
    for (uint32_t i = 0; i < g.order(); ++i)
      g.inverse_[i] = g.index_.at(invert(g.elements_[i]));

    g.build_conjugacy();
    return g;
  }

  const std::string& name() const { return name_; }
  uint32_t degree() const { return degree_; }
  uint32_t order() const { return static_cast<uint32_t>(elements_.size()); }

  const Permutation& element(uint32_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  uint32_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw std::invalid_argument("index_of: permutation not in group");
    return it->second;
  }

  uint32_t mul(uint32_t i, uint32_t j) const {
    return index_.find(compose(elements_[i], elements_[j]))->second;
  }

  uint32_t inv(uint32_t i) const { return inverse_[i]; }

  // g^-1 * x * g.
  uint32_t conjugate(uint32_t x, uint32_t g) const {
    return mul(mul(inverse_[g], x), g);
  }

  const std::vector<uint32_t>& generator_indices() const {
    return generator_indices_;
  }

  uint32_t class_count() const { return static_cast<uint32_t>(class_reps_.size()); }
  uint32_t class_of(uint32_t i) const { return class_of_[i]; }
  const std::vector<uint32_t>& class_reps() const { return class_reps_; }
  const std::vector<std::vector<uint32_t>>& class_members() const {
    return class_members_;
  }

  // Witness with element^conjugator(element) == its class representative.
  uint32_t conjugator(uint32_t i) const { return conjugator_[i]; }

 private:
  Group() = default;

  // Orbit partition under conjugation by the generators; the conjugator
  // witness is folded from the generator chain as the orbit is explored, so
  // it costs one element per group member.
  void build_conjugacy() {
    const uint32_t n = order();
    class_of_.assign(n, UINT32_MAX);
    conjugator_.assign(n, 0);
    for (uint32_t start = 0; start < n; ++start) {
      if (class_of_[start] != UINT32_MAX) continue;
      const uint32_t cls = static_cast<uint32_t>(class_reps_.size());
      class_reps_.push_back(start);
      class_members_.emplace_back();
      std::deque<uint32_t> orbit;
      class_of_[start] = cls;
      conjugator_[start] = 0;  // identity already carries the rep to itself
      orbit.push_back(start);
      while (!orbit.empty()) {
        const uint32_t cur = orbit.front();
        orbit.pop_front();
        class_members_[cls].push_back(cur);
        for (uint32_t gen : generator_indices_) {
          const uint32_t next = conjugate(cur, gen);
          if (class_of_[next] != UINT32_MAX) continue;
          class_of_[next] = cls;
          // next = cur^gen, so next^(gen^-1 * conjugator_[cur]) = rep.
          conjugator_[next] = mul(inverse_[gen], conjugator_[cur]);
          orbit.push_back(next);
        }
      }
      std::sort(class_members_[cls].begin(), class_members_[cls].end());
    }
  }

  std::string name_;
  uint32_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, uint32_t, PermutationHash> index_;
  std::vector<uint32_t> generator_indices_;
  std::vector<uint32_t> inverse_;
  std::vector<uint32_t> class_of_;
  std::vector<uint32_t> class_reps_;
  std::vector<uint32_t> conjugator_;
  std::vector<std::vector<uint32_t>> class_members_;
};

// All g with gx = xg; a subgroup containing <x> and the center. Sorted.
inline std::vector<uint32_t> centralizer(const Group& g, uint32_t x) {
  std::vector<uint32_t> out;
  const Permutation& px = g.element(x);
  for (uint32_t i = 0; i < g.order(); ++i)
    if (commutes(g.element(i), px)) out.push_back(i);
  return out;
}

// Elements commuting with every generator (equivalently with everything).
inline std::vector<uint32_t> center(const Group& g) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < g.order(); ++i) {
    bool central = true;
    for (uint32_t gen : g.generator_indices()) {
      if (!commutes(g.element(i), g.element(gen))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

// For a nonempty proper conjugation-closed subset A, the set
// X = { x : xA ⊆ A }, which is always a proper normal subgroup; in a simple
// group it is trivial. The preconditions on A are checked, not assumed.
inline std::vector<uint32_t> normal_subset_stabilizer(
    const Group& g, const std::vector<uint32_t>& subset) {
  if (subset.empty())
    throw std::invalid_argument("normal_subset_stabilizer: empty subset");
  std::vector<char> in_subset(g.order(), 0);
  for (uint32_t a : subset) {
    if (a >= g.order())
      throw std::invalid_argument("normal_subset_stabilizer: index out of range");
    in_subset[a] = 1;
  }
  uint32_t distinct = 0;
  for (char c : in_subset) distinct += c;
  if (distinct == g.order())
    throw std::invalid_argument(
        "normal_subset_stabilizer: subset is the whole group");
  // Conjugation-closure under the generators implies closure under all of G.
  for (uint32_t a : subset) {
    for (uint32_t gen : g.generator_indices()) {
      if (!in_subset[g.conjugate(a, gen)])
        throw std::invalid_argument(
            "normal_subset_stabilizer: subset not closed under conjugation");
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool keeps = true;
    for (uint32_t a : subset) {
      if (!in_subset[g.mul(x, a)]) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.push_back(x);
  }
  return out;
}

}  // namespace cgt
