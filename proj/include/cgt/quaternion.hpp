#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "cgt/rational.hpp"

namespace cgt {

// Quaternion a + b*i + c*j + d*k over the rationals, with i^2 = j^2 = -1 and
// k = ij. Arithmetic is exact; there are no tolerances in this module.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  explicit Quaternion(long scalar) : a(scalar), b(0), c(0), d(0) {}
  explicit Quaternion(Rational scalar) : a(std::move(scalar)), b(0), c(0), d(0) {}

  static Quaternion one() { return Quaternion(1); }
  static Quaternion i() { return Quaternion{0, 1, 0, 0}; }
  static Quaternion j() { return Quaternion{0, 0, 1, 0}; }
  static Quaternion k() { return Quaternion{0, 0, 0, 1}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_scalar() const { return b == 0 && c == 0 && d == 0; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}

inline Quaternion operator-(const Quaternion& q) {
  return {-q.a, -q.b, -q.c, -q.d};
}

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

inline Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

// Reduced norm: a^2 + b^2 + c^2 + d^2. Multiplicative, and zero only at zero,
// so nonzero quaternions form a group.
inline Rational nrd(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

inline Quaternion inverse(const Quaternion& q) {
  if (q.is_zero()) throw std::domain_error("inverse: zero quaternion");
  const Rational n = nrd(q);
  Quaternion qc = conj(q);
  return {qc.a / n, qc.b / n, qc.c / n, qc.d / n};
}

inline Quaternion operator*(const Rational& s, const Quaternion& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}

inline std::string to_string(const Quaternion& q) {
  return "(" + q.a.str() + ", " + q.b.str() + ", " + q.c.str() + ", " +
         q.d.str() + ")";
}

namespace detail {

inline std::array<Rational, 4> coords(const Quaternion& q) {
  return {q.a, q.b, q.c, q.d};
}

inline Quaternion from_coords(const std::array<Rational, 4>& v) {
  return {v[0], v[1], v[2], v[3]};
}

// First nonzero kernel vector of a 4x4 rational matrix, by row reduction with
// a deterministic pivot rule (first nonzero entry). Returns all-zero only if
// the matrix is invertible.
inline std::array<Rational, 4> kernel_vector(
    std::array<std::array<Rational, 4>, 4> m) {
  std::array<int, 4> pivot_row{-1, -1, -1, -1};  // per column
  size_t row = 0;
  for (size_t col = 0; col < 4 && row < 4; ++col) {
    size_t r = row;
    while (r < 4 && m[r][col] == 0) ++r;
    if (r == 4) continue;
    std::swap(m[row], m[r]);
    const Rational inv_piv = Rational(1) / m[row][col];
    for (size_t c = col; c < 4; ++c) m[row][c] *= inv_piv;
    for (size_t rr = 0; rr < 4; ++rr) {
      if (rr == row || m[rr][col] == 0) continue;
      const Rational f = m[rr][col];
      for (size_t c = col; c < 4; ++c) m[rr][c] -= f * m[row][c];
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  std::array<Rational, 4> g{Rational(0), Rational(0), Rational(0), Rational(0)};
  int free_col = -1;
  for (size_t col = 0; col < 4; ++col) {
    if (pivot_row[col] < 0) {
      free_col = static_cast<int>(col);
      break;
    }
  }
  if (free_col < 0) return g;
  g[static_cast<size_t>(free_col)] = 1;
  for (size_t col = 0; col < 4; ++col) {
    if (pivot_row[col] >= 0)
      g[col] = -m[static_cast<size_t>(pivot_row[col])][static_cast<size_t>(free_col)];
  }
  return g;
}

}  // namespace detail

// Finds g with g^-1 * q * g == conj(q), so that q * (g^-1 q g) == nrd(q)
// exhibits the reduced norm as a product of two conjugates of q. The witness
// is a nonzero solution of the homogeneous linear system q*g - g*conj(q) = 0,
// solved exactly; for noncentral q the solution space is the plane of pure
// quaternions orthogonal to the pure part of q. Scalar q degenerates to g = 1
// (then nrd(q) = q * q).
inline Quaternion wedderburn_conjugate(const Quaternion& q) {
  if (q.is_zero())
    throw std::domain_error("wedderburn_conjugate: zero quaternion");
  if (q.is_scalar()) return Quaternion::one();

  const Quaternion qc = conj(q);
  std::array<std::array<Rational, 4>, 4> m;
  const std::array<Quaternion, 4> basis = {Quaternion::one(), Quaternion::i(),
                                           Quaternion::j(), Quaternion::k()};
  for (size_t col = 0; col < 4; ++col) {
    const Quaternion t = q * basis[col] - basis[col] * qc;
    const auto v = detail::coords(t);
    for (size_t r = 0; r < 4; ++r) m[r][col] = v[r];
  }
  const Quaternion g = detail::from_coords(detail::kernel_vector(m));
  if (g.is_zero())
    throw std::logic_error("wedderburn_conjugate: no witness found");
  return g;
}

}  // namespace cgt
