#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/permutation.hpp"
#include "cgt/spec_io.hpp"

namespace cgt {

namespace detail {

// Arithmetic tables for GF(q), q <= 19. Elements are polynomials over the
// prime field packed base p: e = c0 + c1*p + ... + c_{k-1}*p^(k-1).
struct GfTable {
  uint32_t p = 0, k = 0, q = 0;
  std::vector<uint32_t> add, mul;  // q*q, row-major
  std::vector<uint32_t> neg, inv;  // q (inv[0] unused)

  uint32_t add_at(uint32_t a, uint32_t b) const { return add[a * q + b]; }
  uint32_t mul_at(uint32_t a, uint32_t b) const { return mul[a * q + b]; }
};

// x^k reduced modulo the defining irreducible polynomial, as coefficients of
// 1, x, ..., x^(k-1).
inline std::vector<uint32_t> gf_reduction_poly(uint32_t q) {
  switch (q) {
    case 4: return {1, 1};        // x^2 = x + 1 over GF(2)
    case 8: return {1, 1, 0};     // x^3 = x + 1 over GF(2)
    case 9: return {2, 0};        // x^2 = -1 over GF(3)
    case 16: return {1, 1, 0, 0}; // x^4 = x + 1 over GF(2)
    default: return {};
  }
}

inline GfTable build_gf(uint32_t q) {
  GfTable f;
  f.q = q;
  switch (q) {
    case 5: case 7: case 11: case 13: case 17: case 19:
      f.p = q; f.k = 1; break;
    case 4: f.p = 2; f.k = 2; break;
    case 8: f.p = 2; f.k = 3; break;
    case 9: f.p = 3; f.k = 2; break;
    case 16: f.p = 2; f.k = 4; break;
    default:
      throw std::invalid_argument(
          "psl2: q must be a prime power in {4,5,7,8,9,11,13,16,17,19}, got " +
          std::to_string(q));
  }
  const std::vector<uint32_t> red = gf_reduction_poly(q);

  auto to_poly = [&](uint32_t e) {
    std::vector<uint32_t> c(f.k);
    for (uint32_t i = 0; i < f.k; ++i) {
      c[i] = e % f.p;
      e /= f.p;
    }
    return c;
  };
  auto from_poly = [&](const std::vector<uint32_t>& c) {
    uint32_t e = 0;
    for (uint32_t i = f.k; i-- > 0;) e = e * f.p + c[i];
    return e;
  };

  f.add.resize(q * q);
  f.mul.resize(q * q);
  f.neg.resize(q);
  f.inv.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    const auto pa = to_poly(a);
    std::vector<uint32_t> nc(f.k);
    for (uint32_t i = 0; i < f.k; ++i) nc[i] = (f.p - pa[i]) % f.p;
    f.neg[a] = from_poly(nc);
    for (uint32_t b = 0; b < q; ++b) {
      const auto pb = to_poly(b);
      std::vector<uint32_t> sum(f.k);
      for (uint32_t i = 0; i < f.k; ++i) sum[i] = (pa[i] + pb[i]) % f.p;
      f.add[a * q + b] = from_poly(sum);

      std::vector<uint32_t> prod(2 * f.k - 1, 0);
      for (uint32_t i = 0; i < f.k; ++i)
        for (uint32_t j = 0; j < f.k; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % f.p;
      for (uint32_t d = 2 * f.k - 2; d >= f.k && d < prod.size(); --d) {
        const uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t j = 0; j < f.k; ++j)
          prod[d - f.k + j] = (prod[d - f.k + j] + c * red[j]) % f.p;
      }
      prod.resize(f.k);
      f.mul[a * q + b] = from_poly(prod);
    }
  }
  for (uint32_t a = 1; a < q; ++a)
    for (uint32_t b = 1; b < q; ++b)
      if (f.mul_at(a, b) == 1) f.inv[a] = b;
  return f;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Corpus builders. Each returns a GroupSpec whose enumeration is the named
// group; expected orders live in parse_entry for sanity checking.
// --------------------------------------------------------------------------

inline GroupSpec cyclic_spec(uint32_t n) {
  if (n < 1 || n > 2048)
    throw std::invalid_argument("cyclic: n must be in [1, 2048]");
  Permutation shift;
  shift.images.resize(n);
  for (uint32_t x = 0; x < n; ++x) shift.images[x] = (x + 1) % n;
  return {"z" + std::to_string(n), {shift}, kDefaultMaxOrder};
}

inline GroupSpec symmetric_spec(uint32_t n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("symmetric: n must be in [1, 9]");
  if (n == 1) return {"s1", {Permutation::identity(1)}, kDefaultMaxOrder};
  Permutation swap01 = Permutation::identity(n);
  swap01.images[0] = 1;
  swap01.images[1] = 0;
  Permutation cyc;
  cyc.images.resize(n);
  for (uint32_t x = 0; x < n; ++x) cyc.images[x] = (x + 1) % n;
  return {"s" + std::to_string(n), {swap01, cyc}, kDefaultMaxOrder};
}

inline GroupSpec alternating_spec(uint32_t n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("alternating: n must be in [1, 9]");
  if (n <= 2)
    return {"a" + std::to_string(n), {Permutation::identity(n)}, kDefaultMaxOrder};
  Permutation three = Permutation::identity(n);
  three.images[0] = 1;
  three.images[1] = 2;
  three.images[2] = 0;
  if (n == 3) return {"a3", {three}, kDefaultMaxOrder};
  Permutation cyc = Permutation::identity(n);
  if (n % 2 == 1) {
    for (uint32_t x = 0; x < n; ++x) cyc.images[x] = (x + 1) % n;
  } else {
    // n even: an n-cycle is odd, so cycle the points 1..n-1 instead.
    for (uint32_t x = 1; x < n; ++x) cyc.images[x] = 1 + (x % (n - 1));
  }
  return {"a" + std::to_string(n), {three, cyc}, kDefaultMaxOrder};
}

// Dihedral group of order 2m acting on the m-gon.
inline GroupSpec dihedral_spec(uint32_t m) {
  if (m < 3 || m > 2048)
    throw std::invalid_argument("dihedral: m must be in [3, 2048]");
  Permutation rot, refl;
  rot.images.resize(m);
  refl.images.resize(m);
  for (uint32_t x = 0; x < m; ++x) {
    rot.images[x] = (x + 1) % m;
    refl.images[x] = (m - x) % m;
  }
  return {"d" + std::to_string(2 * m), {rot, refl}, kDefaultMaxOrder};
}

// The eight unit quaternions in their right regular representation.
// Index table: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
inline uint32_t q8_mul(uint32_t a, uint32_t b) {
  static constexpr std::array<std::array<uint32_t, 4>, 4> axis = {
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {
      {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}}};
  const uint32_t ax_a = a / 2, ax_b = b / 2;
  int s = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * sign[ax_a][ax_b];
  return 2 * axis[ax_a][ax_b] + (s < 0 ? 1 : 0);
}

// Right translation x -> x*g; with left-to-right composition this embedding
// is a homomorphism.
inline Permutation q8_right_translation(uint32_t g) {
  Permutation p;
  p.images.resize(8);
  for (uint32_t x = 0; x < 8; ++x) p.images[x] = q8_mul(x, g);
  return p;
}

inline GroupSpec quaternion8_spec() {
  return {"q8", {q8_right_translation(2), q8_right_translation(4)},
          kDefaultMaxOrder};
}

// PSL(2, q) acting on the projective line over GF(q): points 0..q-1 are the
// field elements, point q is infinity. Generators are z -> z + beta for beta
// running over a prime-field basis of GF(q), plus z -> -1/z. For prime q the
// basis is just {1}; for prime powers the extra basis translations are needed
// to reach the whole unipotent subgroup (conjugating translations by the
// inversion then yields all transvections, which generate).
inline GroupSpec psl2_spec(uint32_t q) {
  const detail::GfTable f = detail::build_gf(q);
  const uint32_t degree = q + 1;
  const uint32_t infinity = q;
  std::vector<Permutation> gens;
  uint32_t beta = 1;  // encodings of 1, x, x^2, ... are 1, p, p^2, ...
  for (uint32_t i = 0; i < f.k; ++i) {
    Permutation t;
    t.images.resize(degree);
    for (uint32_t z = 0; z < q; ++z) t.images[z] = f.add_at(z, beta);
    t.images[infinity] = infinity;
    gens.push_back(std::move(t));
    beta *= f.p;
  }
  Permutation s;
  s.images.resize(degree);
  s.images[0] = infinity;
  s.images[infinity] = 0;
  for (uint32_t z = 1; z < q; ++z) s.images[z] = f.neg[f.inv[z]];
  gens.push_back(std::move(s));
  return {"psl2_" + std::to_string(q), std::move(gens), kDefaultMaxOrder};
}

inline uint64_t psl2_expected_order(uint64_t q) {
  return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
}

// --------------------------------------------------------------------------
// Entry names: a<n>, s<n>, d<order>, z<n>, q8, psl2_<q>, file:<path>.
// d<order> names the dihedral group BY ORDER (d12 has 12 elements).
// --------------------------------------------------------------------------

struct BuiltEntry {
  GroupSpec spec;
  std::optional<uint64_t> expected_order;
};

namespace detail {

inline std::optional<uint32_t> parse_uint(const std::string& s) {
  uint32_t v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

inline uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

inline BuiltEntry parse_entry(const std::string& name) {
  auto bad = [&name]() -> std::invalid_argument {
    return std::invalid_argument(
        "unknown group entry '" + name +
        "' (expected a<n>, s<n>, d<order>, z<n>, q8, psl2_<q>, or file:<path>)");
  };
  if (name == "q8") return {quaternion8_spec(), 8};
  if (name.rfind("file:", 0) == 0)
    return {load_group_spec(name.substr(5)), std::nullopt};
  if (name.rfind("psl2_", 0) == 0) {
    auto q = detail::parse_uint(name.substr(5));
    if (!q) throw bad();
    return {psl2_spec(*q), psl2_expected_order(*q)};
  }
  if (name.size() >= 2) {
    const char kind = name[0];
    auto n = detail::parse_uint(name.substr(1));
    if (n) {
      switch (kind) {
        case 'a':
          return {alternating_spec(*n),
                  *n <= 2 ? 1 : detail::factorial(*n) / 2};
        case 's':
          return {symmetric_spec(*n), detail::factorial(*n)};
        case 'z':
          return {cyclic_spec(*n), *n};
        case 'd': {
          if (*n % 2 != 0)
            throw std::invalid_argument(
                "dihedral entry '" + name + "' names the group by order, which must be even");
          return {dihedral_spec(*n / 2), *n};
        }
        default:
          throw bad();
      }
    }
  }
  throw bad();
}

}  // namespace cgt
