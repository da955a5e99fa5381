#pragma once

#include "segre/matrix.hpp"
#include "segre/rational.hpp"

namespace segre {

/// Element a + b i + c j + d k of the split-quaternion algebra: the unique
/// 4-dimensional real associative algebra with indefinite multiplicative
/// norm, defined by i^2 = j^2 = 1 and k = ij = -ji (so k^2 = -1).
struct ParaQuaternion {
  Rational a, b, c, d;

  ParaQuaternion() : a(0), b(0), c(0), d(0) {}
  ParaQuaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static ParaQuaternion one() { return {1, 0, 0, 0}; }
  static ParaQuaternion i() { return {0, 1, 0, 0}; }
  static ParaQuaternion j() { return {0, 0, 1, 0}; }
  static ParaQuaternion k() { return {0, 0, 0, 1}; }

  bool operator==(const ParaQuaternion&) const = default;

  ParaQuaternion operator+(const ParaQuaternion& q) const {
    return {a + q.a, b + q.b, c + q.c, d + q.d};
  }
  ParaQuaternion operator-(const ParaQuaternion& q) const {
    return {a - q.a, b - q.b, c - q.c, d - q.d};
  }
  ParaQuaternion operator-() const { return {-a, -b, -c, -d}; }
  ParaQuaternion operator*(const Rational& s) const {
    return {a * s, b * s, c * s, d * s};
  }

  bool is_imaginary() const { return a == 0; }
};

ParaQuaternion mul(const ParaQuaternion& p, const ParaQuaternion& q);
ParaQuaternion conj(const ParaQuaternion& q);

/// |q|^2 = q qbar; multiplicative, of split signature (2,2) on the algebra.
Rational norm_sq(const ParaQuaternion& q);

/// Polar form <p,q> = Re(p qbar).
Rational inner(const ParaQuaternion& p, const ParaQuaternion& q);

/// The isomorphism onto 2x2 real matrices taking the norm to the
/// determinant: a+bi+cj+dk  |->  [[a+b, c+d], [c-d, a-b]].
Matrix to_matrix(const ParaQuaternion& q);
ParaQuaternion from_matrix(const Matrix& m);

/// p |-> u p ubar for a unit split quaternion u; preserves the real and
/// imaginary parts and the norm. Throws unless norm_sq(u) == 1.
ParaQuaternion unit_conjugation(const ParaQuaternion& u, const ParaQuaternion& p);

}  // namespace segre
