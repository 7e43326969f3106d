#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/quaternion.hpp"
#include "cgt/rational.hpp"
#include "cgt/sampler.hpp"
#include "cgt/valuation.hpp"

namespace cgt {

// One counterexample found by a checker. `detail` carries the exact inputs
// in rational-quaternion notation so the failure reproduces by hand.
struct CheckFailure {
  uint64_t index = 0;
  std::string detail;
};

// Result of one samplewise check. Reproducible: rerunning the same lemma id
// with the recorded seed and sample count yields the identical report.
struct CheckReport {
  std::string lemma;
  uint64_t samples = 0;
  std::vector<CheckFailure> failures;
  uint64_t seed = 0;
  std::string note;  // fixed witnesses and similar extras; empty for most checks

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Runs `round` n times with a sampler whose seed is derived from the master
// seed and the lemma id, so each check is independently reproducible.
inline CheckReport run_rounds(
    const std::string& lemma, uint64_t n, uint64_t master_seed, int64_t bound,
    const std::function<std::optional<std::string>(QuaternionSampler&)>& round) {
  CheckReport rep;
  rep.lemma = lemma;
  rep.samples = n;
  rep.seed = master_seed ^ fnv1a64(lemma);
  QuaternionSampler sampler(rep.seed, bound);
  for (uint64_t idx = 0; idx < n; ++idx) {
    if (auto fail = round(sampler)) rep.failures.push_back({idx, *fail});
  }
  return rep;
}

inline std::string cmp_str(long a, long b) {
  return a < b ? "<" : (a == b ? "=" : ">");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axioms of the lower subset L = Neg ∪ Unit = { w <= 0 }:
//   (U1) 1 and -1 lie in L.
//   (U2) L is closed under products (and every x in L is x * 1).
//   (U3) for every p with w(p) > 0, p + 1 lies in L and p - 1 is nonzero.
// ---------------------------------------------------------------------------
inline std::vector<CheckReport> check_axioms(uint64_t n, uint64_t seed,
                                             int64_t bound) {
  std::vector<CheckReport> out;

  CheckReport u1;
  u1.lemma = "U1";
  u1.samples = 2;
  u1.seed = seed ^ detail::fnv1a64("U1");
  if (!in_lower(Quaternion(1)))
    u1.failures.push_back({0, "1 not in lower subset"});
  if (!in_lower(Quaternion(-1)))
    u1.failures.push_back({1, "-1 not in lower subset"});
  out.push_back(std::move(u1));

  out.push_back(detail::run_rounds(
      "U2", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion x = s.next_lower();
        const Quaternion y = s.next_lower();
        const Quaternion p = x * y;
        if (p.is_zero() || !in_lower(p))
          return "product left lower subset: x=" + to_string(x) +
                 " y=" + to_string(y);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "U3", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion p = s.next_pos();
        const Quaternion shifted = p + Quaternion(1);
        if (shifted.is_zero() || !in_lower(shifted))
          return "p + 1 not in lower subset: p=" + to_string(p);
        if ((p - Quaternion(1)).is_zero())
          return "p - 1 vanished: p=" + to_string(p);
        return std::nullopt;
      }));

  return out;
}

// ---------------------------------------------------------------------------
// The unit cell as a normal subgroup and how the cells move under inverses,
// unit translation and multiplication:
//   * g U g^-1 = U for every nonzero g;
//   * p + u stays a unit for w(p) > 0, w(u) = 0, and p^-1 lands in L;
//   * s in Neg iff s^-1 in Pos;
//   * Pos * Pos ⊆ Pos, Neg * Neg ⊆ Neg, and units fix each cell both sides.
// ---------------------------------------------------------------------------
inline std::vector<CheckReport> check_unit_cells(uint64_t n, uint64_t seed,
                                                 int64_t bound) {
  std::vector<CheckReport> out;

  out.push_back(detail::run_rounds(
      "unit-normality", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion u = s.next_unit();
        const Quaternion g = s.next();
        if (classify(g * u * inverse(g)) != Cell::Unit)
          return "conjugate left unit cell: u=" + to_string(u) +
                 " g=" + to_string(g);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "unit-coset-shift", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion p = s.next_pos();
        const Quaternion u = s.next_unit();
        const Quaternion sum = p + u;
        if (sum.is_zero() || classify(sum) != Cell::Unit)
          return "p + u not a unit: p=" + to_string(p) + " u=" + to_string(u);
        if (!in_lower(inverse(p)))
          return "p^-1 escaped the lower subset: p=" + to_string(p);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "cell-inverses", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion m = s.next_neg();
        const Quaternion p = s.next_pos();
        if (classify(inverse(m)) != Cell::Pos)
          return "inverse of neg not pos: m=" + to_string(m);
        if (classify(inverse(p)) != Cell::Neg)
          return "inverse of pos not neg: p=" + to_string(p);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "cell-products", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion p1 = s.next_pos(), p2 = s.next_pos();
        const Quaternion m1 = s.next_neg(), m2 = s.next_neg();
        const Quaternion u1 = s.next_unit(), u2 = s.next_unit();
        if (classify(p1 * p2) != Cell::Pos)
          return "pos*pos left pos: " + to_string(p1) + " " + to_string(p2);
        if (classify(m1 * m2) != Cell::Neg)
          return "neg*neg left neg: " + to_string(m1) + " " + to_string(m2);
        if (classify(u1 * m1 * u2) != Cell::Neg)
          return "unit translation moved neg cell: m=" + to_string(m1);
        if (classify(u1 * p1 * u2) != Cell::Pos)
          return "unit translation moved pos cell: p=" + to_string(p1);
        return std::nullopt;
      }));

  return out;
}

// ---------------------------------------------------------------------------
// The order that w induces on unit cosets (the value group is the integers):
//   * linear, independent of coset representatives, monotone under products;
//   * w(a + b) = min(w(a), w(b)) exactly when w(a) != w(b);
//   * w(x + y) >= w(x) when w(x) = w(y) and x + y != 0;
//   * a k-term sum with a unique strict minimum has the minimum's value.
// ---------------------------------------------------------------------------
inline std::vector<CheckReport> check_value_order(uint64_t n, uint64_t seed,
                                                  int64_t bound) {
  std::vector<CheckReport> out;

  out.push_back(detail::run_rounds(
      "order-linearity", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion a = s.next(), b = s.next();
        const long wa = w(a), wb = w(b);
        const int flags = (wa < wb) + (wa == wb) + (wa > wb);
        if (flags != 1) return "trichotomy failed: a=" + to_string(a);
        // Multiplying by units on either side must not change the comparison.
        const Quaternion u1 = s.next_unit(), u2 = s.next_unit();
        if (detail::cmp_str(w(u1 * a), w(b * u2)) != detail::cmp_str(wa, wb))
          return "order depends on coset representative: a=" + to_string(a) +
                 " b=" + to_string(b);
        // Monotone products: sort both pairs, then compare the products.
        Quaternion c = s.next(), d = s.next();
        const Quaternion lo1 = (w(a) <= w(c)) ? a : c;
        const Quaternion hi1 = (w(a) <= w(c)) ? c : a;
        const Quaternion lo2 = (w(b) <= w(d)) ? b : d;
        const Quaternion hi2 = (w(b) <= w(d)) ? d : b;
        if (w(lo1 * lo2) > w(hi1 * hi2))
          return "product order not monotone: " + to_string(a) + " " +
                 to_string(b) + " " + to_string(c) + " " + to_string(d);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "sum-min", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion a = s.next();
        Quaternion b = s.next();
        for (int tries = 0; w(b) == w(a) && tries < 1000; ++tries) b = s.next();
        if (w(b) == w(a)) return std::nullopt;  // sampler stalled; skip round
        const Quaternion sum = a + b;
        if (sum.is_zero())
          return "sum vanished with distinct valuations: a=" + to_string(a) +
                 " b=" + to_string(b);
        if (w(sum) != std::min(w(a), w(b)))
          return "w(a+b) != min: a=" + to_string(a) + " b=" + to_string(b) +
                 " w(a+b)=" + std::to_string(w(sum));
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "sum-same-value", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion x = s.next();
        Quaternion y = s.next_with_w(w(x));
        for (int tries = 0; (x + y).is_zero() && tries < 1000; ++tries)
          y = s.next_with_w(w(x));
        if ((x + y).is_zero()) return std::nullopt;
        if (w(x + y) < w(x))
          return "same-coset sum dropped below the coset: x=" + to_string(x) +
                 " y=" + to_string(y);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "sum-unique-min", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const int k = static_cast<int>(s.rng().uniform(2, 5));
        std::vector<Quaternion> terms;
        for (int t = 0; t < k; ++t) terms.push_back(s.next());
        long min_w = w(terms[0]);
        size_t min_at = 0;
        for (size_t t = 1; t < terms.size(); ++t)
          if (w(terms[t]) < min_w) { min_w = w(terms[t]); min_at = t; }
        int ties = 0;
        for (const auto& t : terms) ties += (w(t) == min_w);
        if (ties > 1) {
          // Force a unique strict minimum by pushing one term down, keeping
          // the parity its 2-power rescaling allows.
          const long cur = w(terms[min_at]);
          const long target = ((cur - (min_w - 1)) % 2 == 0) ? min_w - 1 : min_w - 2;
          terms[min_at] = pow2((target - cur) / 2) * terms[min_at];
          min_w = target;
        }
        Quaternion sum(0L);
        for (const auto& t : terms) sum = sum + t;
        if (sum.is_zero() || w(sum) != min_w) {
          std::string detail = "k-term sum missed the unique minimum:";
          for (const auto& t : terms) detail += " " + to_string(t);
          return detail;
        }
        return std::nullopt;
      }));

  return out;
}

// ---------------------------------------------------------------------------
// Every q with w(q) != 0 reaches Unit * Q^# with an exponent r <= 2: even w
// means q itself factors as unit times 2^(w/2); odd w means q^2 does.
// ---------------------------------------------------------------------------
inline std::vector<CheckReport> check_scalar_unit_power(uint64_t n,
                                                        uint64_t seed,
                                                        int64_t bound) {
  std::vector<CheckReport> out;
  out.push_back(detail::run_rounds(
      "scalar-unit-power", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion q = s.next_nonunit();
        const long v = w(q);
        int r;
        Quaternion power = q;
        if (v % 2 == 0) {
          r = 1;
        } else {
          if (in_scaled_units(q))
            return "odd valuation classified as scaled unit: q=" + to_string(q);
          r = 2;
          power = q * q;
        }
        if (!in_scaled_units(power))
          return "q^r not a scaled unit: q=" + to_string(q) +
                 " r=" + std::to_string(r);
        const Rational alpha = scaled_unit_scalar(power);
        const Quaternion unit_part = (Rational(1) / alpha) * power;
        if (classify(unit_part) != Cell::Unit)
          return "decomposition scalar wrong: q=" + to_string(q);
        if (r > 2) return "needed exponent above 2";
        return std::nullopt;
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Reduced-norm descent and centrality:
//   * v2(nrd(q)) = 0 forces q into the unit cell;
//   * every commutator g^-1 h^-1 g h is a unit (w is additive);
//   * the scalar 2 witnesses that nonzero rationals are not all units.
// ---------------------------------------------------------------------------
inline std::vector<CheckReport> check_norm_and_center(uint64_t n, uint64_t seed,
                                                      int64_t bound) {
  std::vector<CheckReport> out;

  out.push_back(detail::run_rounds(
      "norm-unit-descends", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion q = s.next();
        if (v2(nrd(q)) == 0 && classify(q) != Cell::Unit)
          return "norm unit but element not: q=" + to_string(q);
        const Quaternion u = s.next_unit();
        if (v2(nrd(u)) != 0 || classify(u) != Cell::Unit)
          return "unit-cell draw inconsistent: u=" + to_string(u);
        return std::nullopt;
      }));

  out.push_back(detail::run_rounds(
      "central-commutators", n, seed, bound,
      [](QuaternionSampler& s) -> std::optional<std::string> {
        const Quaternion g = s.next(), h = s.next();
        const Quaternion c = inverse(g) * inverse(h) * g * h;
        if (classify(c) != Cell::Unit)
          return "commutator not a unit: g=" + to_string(g) +
                 " h=" + to_string(h);
        return std::nullopt;
      }));

  CheckReport wit;
  wit.lemma = "scalars-escape-units";
  wit.samples = 1;
  wit.seed = seed ^ detail::fnv1a64("scalars-escape-units");
  wit.note = "witness: scalar 2 has w = 2";
  if (classify(Quaternion(2)) != Cell::Pos)
    wit.failures.push_back({0, "scalar 2 is not in the positive cell"});
  out.push_back(std::move(wit));

  return out;
}

// Every checker, in the fixed order the uhyp command reports them.
inline std::vector<CheckReport> run_all_checks(uint64_t n, uint64_t seed,
                                               int64_t bound) {
  std::vector<CheckReport> all;
  auto append = [&all](std::vector<CheckReport>&& part) {
    for (auto& r : part) all.push_back(std::move(r));
  };
  append(check_axioms(n, seed, bound));
  append(check_unit_cells(n, seed, bound));
  append(check_value_order(n, seed, bound));
  append(check_scalar_unit_power(n, seed, bound));
  append(check_norm_and_center(n, seed, bound));
  return all;
}

}  // namespace cgt
