#pragma once

#include <cstdint>
#include <stdexcept>

#include "cgt/quaternion.hpp"
#include "cgt/rational.hpp"
#include "cgt/rng.hpp"
#include "cgt/valuation.hpp"

namespace cgt {

// Seeded source of random nonzero quaternions. Components are p/q with p
// uniform in [-bound, bound] and q uniform in [1, bound].
//
// Conditioned draws (a prescribed valuation w) rejection-sample on the parity
// of w and then rescale by a power of 2; scaling by 2 shifts w by exactly 2,
// so parity is the only obstruction.
class QuaternionSampler {
 public:
  explicit QuaternionSampler(uint64_t seed, int64_t bound = 1000)
      : rng_(seed), bound_(bound) {
    if (bound < 1) throw std::invalid_argument("sampler bound must be >= 1");
  }

  Rng& rng() { return rng_; }

  Rational rational() {
    return Rational(rng_.uniform(-bound_, bound_), rng_.uniform(1, bound_));
  }

  Quaternion next() {
    for (;;) {
      Quaternion q{rational(), rational(), rational(), rational()};
      if (!q.is_zero()) return q;
    }
  }

  Quaternion next_with_w(long target) {
    for (int tries = 0; tries < 100000; ++tries) {
      Quaternion q = next();
      const long v = w(q);
      if (((target - v) % 2) != 0) continue;
      return pow2((target - v) / 2) * q;
    }
    throw std::logic_error("next_with_w: rejection sampling stalled");
  }

  Quaternion next_unit() { return next_with_w(0); }

  // w(q) in {1, 2}, keeping whichever parity the raw sample had.
  Quaternion next_pos() {
    Quaternion q = next();
    const long v = w(q);
    const long target = (v % 2 != 0) ? 1 : 2;
    return pow2((target - v) / 2) * q;
  }

  // w(q) in {-2, -1}.
  Quaternion next_neg() {
    Quaternion q = next();
    const long v = w(q);
    const long target = (v % 2 != 0) ? -1 : -2;
    return pow2((target - v) / 2) * q;
  }

  // w(q) in {-2, -1, 0}: a draw from the lower subset covering both cells.
  Quaternion next_lower() {
    Quaternion q = next();
    const long v = w(q);
    long target;
    if (v % 2 != 0)
      target = -1;
    else
      target = rng_.coin() ? 0 : -2;
    return pow2((target - v) / 2) * q;
  }

  // Nonzero w of either sign, |w| in {1, 2}.
  Quaternion next_nonunit() {
    Quaternion q = rng_.coin() ? next_pos() : next_neg();
    return q;
  }

 private:
  Rng rng_;
  int64_t bound_;
};

}  // namespace cgt
