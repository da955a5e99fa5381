#include "segre/para_quaternion.hpp"

#include <stdexcept>

namespace segre {

ParaQuaternion mul(const ParaQuaternion& p, const ParaQuaternion& q) {
  // From i^2 = j^2 = 1, k^2 = -1, ij = -ji = k, ik = -ki = j, jk = -kj = -i.
  return {p.a * q.a + p.b * q.b + p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a - p.c * q.d + p.d * q.c,
          p.a * q.c + p.c * q.a + p.b * q.d - p.d * q.b,
          p.a * q.d + p.d * q.a + p.b * q.c - p.c * q.b};
}

ParaQuaternion conj(const ParaQuaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

Rational norm_sq(const ParaQuaternion& q) {
  return q.a * q.a - q.b * q.b - q.c * q.c + q.d * q.d;
}

Rational inner(const ParaQuaternion& p, const ParaQuaternion& q) {
  return mul(p, conj(q)).a;
}

Matrix to_matrix(const ParaQuaternion& q) {
  Matrix m(2, 2);
  m.at(0, 0) = q.a + q.b;
  m.at(0, 1) = q.c + q.d;
  m.at(1, 0) = q.c - q.d;
  m.at(1, 1) = q.a - q.b;
  return m;
}

ParaQuaternion from_matrix(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("from_matrix: expected a 2x2 matrix");
  const Rational half = rat(1, 2);
  return {(m.at(0, 0) + m.at(1, 1)) * half, (m.at(0, 0) - m.at(1, 1)) * half,
          (m.at(0, 1) + m.at(1, 0)) * half, (m.at(0, 1) - m.at(1, 0)) * half};
}

ParaQuaternion unit_conjugation(const ParaQuaternion& u, const ParaQuaternion& p) {
  if (norm_sq(u) != 1)
    throw std::invalid_argument("unit_conjugation: norm_sq(u) must be 1");
  return mul(mul(u, p), conj(u));
}

}  // namespace segre
