#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

// A permutation of {0, ..., degree-1} stored as its image array.
struct Permutation {
  std::vector<uint32_t> images;

  Permutation() = default;
  explicit Permutation(std::vector<uint32_t> im) : images(std::move(im)) {}

  static Permutation identity(uint32_t degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0u);
    return p;
  }

  uint32_t degree() const { return static_cast<uint32_t>(images.size()); }
  uint32_t operator()(uint32_t point) const { return images[point]; }

  bool is_identity() const {
    for (uint32_t i = 0; i < degree(); ++i)
      if (images[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images <=> b.images;  // lexicographic on image arrays
  }
};

inline bool is_bijection(const std::vector<uint32_t>& images) {
  std::vector<bool> seen(images.size(), false);
  for (uint32_t v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Apply p first, then q: result(x) = q(p(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  Permutation r;
  r.images.resize(p.degree());
  for (uint32_t x = 0; x < p.degree(); ++x) r.images[x] = q.images[p.images[x]];
  return r;
}

inline Permutation invert(const Permutation& p) {
  Permutation r;
  r.images.resize(p.degree());
  for (uint32_t x = 0; x < p.degree(); ++x) r.images[p.images[x]] = x;
  return r;
}

// pq = qp, tested pointwise without allocating the products.
inline bool commutes(const Permutation& p, const Permutation& q) {
  for (uint32_t x = 0; x < p.degree(); ++x)
    if (q.images[p.images[x]] != p.images[q.images[x]]) return false;
  return true;
}

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over the image words
    for (uint32_t v : p.images) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Cycle notation with fixed points omitted; "()" for the identity.
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.images[start] == start) continue;
    out += "(";
    uint32_t x = start;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(x);
      seen[x] = true;
      x = p.images[x];
      first = false;
    } while (x != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace cgt
