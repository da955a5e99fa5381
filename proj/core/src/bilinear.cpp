#include "segre/bilinear.hpp"

#include <stdexcept>

namespace segre {

BilinearMap BilinearMap::scalar(std::size_t n) {
  BilinearMap b;
  b.n_ = n;
  b.vector_valued_ = false;
  b.values_ = MultiArray({2 * n, 2 * n});
  return b;
}

BilinearMap BilinearMap::vector(std::size_t n) {
  BilinearMap b;
  b.n_ = n;
  b.vector_valued_ = true;
  b.values_ = MultiArray({2 * n, 2 * n, 2 * n});
  return b;
}

BilinearMap BilinearMap::from_gram(std::size_t n, const Matrix& gram) {
  if (gram.rows() != 2 * n || gram.cols() != 2 * n)
    throw std::invalid_argument("from_gram: gram must be 2n x 2n");
  BilinearMap b = scalar(n);
  for (std::size_t p = 0; p < 2 * n; ++p)
    for (std::size_t q = 0; q < 2 * n; ++q) b.scalar_at(p, q) = gram.at(p, q);
  return b;
}

BilinearMap BilinearMap::delta(std::size_t n) {
  if (n != 2) throw std::invalid_argument("delta: defined for n = 2 only");
  BilinearMap b = scalar(2);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      b.scalar_at(p, q) =
          delta_form(w_basis(2, p / 2, p % 2), w_basis(2, q / 2, q % 2));
  return b;
}

Rational& BilinearMap::scalar_at(std::size_t p, std::size_t q) {
  if (vector_valued_) throw std::logic_error("scalar_at on vector-valued map");
  return values_.at({p, q});
}
const Rational& BilinearMap::scalar_at(std::size_t p, std::size_t q) const {
  if (vector_valued_) throw std::logic_error("scalar_at on vector-valued map");
  return values_.at({p, q});
}
Rational& BilinearMap::vector_at(std::size_t p, std::size_t q, std::size_t k) {
  if (!vector_valued_) throw std::logic_error("vector_at on scalar map");
  return values_.at({p, q, k});
}
const Rational& BilinearMap::vector_at(std::size_t p, std::size_t q,
                                       std::size_t k) const {
  if (!vector_valued_) throw std::logic_error("vector_at on scalar map");
  return values_.at({p, q, k});
}

Matrix BilinearMap::value(std::size_t p, std::size_t q) const {
  if (!vector_valued_) {
    Matrix v(1, 1);
    v.at(0, 0) = scalar_at(p, q);
    return v;
  }
  Matrix v(dim(), 1);
  for (std::size_t k = 0; k < dim(); ++k) v.at(k, 0) = vector_at(p, q, k);
  return v;
}

void BilinearMap::set_value(std::size_t p, std::size_t q, const Matrix& v) {
  if (!vector_valued_) {
    scalar_at(p, q) = v.at(0, 0);
    return;
  }
  for (std::size_t k = 0; k < dim(); ++k) vector_at(p, q, k) = v.at(k, 0);
}

Matrix BilinearMap::eval_coords(const Matrix& xc, const Matrix& yc) const {
  Matrix acc(vector_valued_ ? dim() : 1, 1);
  for (std::size_t p = 0; p < dim(); ++p) {
    if (xc.at(p, 0) == 0) continue;
    for (std::size_t q = 0; q < dim(); ++q) {
      if (yc.at(q, 0) == 0) continue;
      acc = acc + value(p, q) * (xc.at(p, 0) * yc.at(q, 0));
    }
  }
  return acc;
}

bool BilinearMap::alternating_on_basis() const {
  for (std::size_t p = 0; p < dim(); ++p)
    for (std::size_t q = 0; q < dim(); ++q)
      if (!(value(p, q) == -value(q, p))) return false;
  return true;
}

bool BilinearMap::symmetric_on_basis() const {
  for (std::size_t p = 0; p < dim(); ++p)
    for (std::size_t q = p; q < dim(); ++q)
      if (!(value(p, q) == value(q, p))) return false;
  return true;
}

BilinearMap BilinearMap::operator+(const BilinearMap& o) const {
  if (n_ != o.n_ || vector_valued_ != o.vector_valued_)
    throw std::invalid_argument("bilinear +: shape mismatch");
  BilinearMap r = *this;
  r.values_ = values_ + o.values_;
  return r;
}

BilinearMap BilinearMap::operator-(const BilinearMap& o) const {
  if (n_ != o.n_ || vector_valued_ != o.vector_valued_)
    throw std::invalid_argument("bilinear -: shape mismatch");
  BilinearMap r = *this;
  r.values_ = values_ - o.values_;
  return r;
}

BilinearMap BilinearMap::operator*(const Rational& s) const {
  BilinearMap r = *this;
  r.values_ = values_ * s;
  return r;
}

BilinearMap compose_args(const BilinearMap& phi, const Matrix& ma, const Matrix& mb) {
  const std::size_t d = phi.dim();
  if (ma.rows() != d || ma.cols() != d || mb.rows() != d || mb.cols() != d)
    throw std::invalid_argument("compose_args: endomorphism size mismatch");
  BilinearMap out = phi.vector_valued() ? BilinearMap::vector(phi.n())
                                        : BilinearMap::scalar(phi.n());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Matrix acc(phi.vector_valued() ? d : 1, 1);
      for (std::size_t pp = 0; pp < d; ++pp) {
        if (ma.at(pp, p) == 0) continue;
        for (std::size_t qq = 0; qq < d; ++qq) {
          if (mb.at(qq, q) == 0) continue;
          acc = acc + phi.value(pp, qq) * (ma.at(pp, p) * mb.at(qq, q));
        }
      }
      out.set_value(p, q, acc);
    }
  return out;
}

BilinearMap post_apply(const BilinearMap& phi, const Matrix& m) {
  if (!phi.vector_valued())
    throw std::invalid_argument("post_apply: needs a W-valued map");
  const std::size_t d = phi.dim();
  BilinearMap out = BilinearMap::vector(phi.n());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) out.set_value(p, q, m * phi.value(p, q));
  return out;
}

BilinearMap swap_u(const BilinearMap& phi) {
  BilinearMap out = phi;
  const std::size_t n = phi.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < 2; ++b)
          out.set_value(w_index(i, a), w_index(j, b),
                        phi.value(w_index(i, b), w_index(j, a)));
  return out;
}

bool type_check(const BilinearMap& phi, const EpsilonStructure& a, PQType type) {
  const Matrix act = a.action(phi.n());
  const Matrix id = Matrix::identity(phi.dim());
  if (type == PQType::t11) {
    // phi(AX, AY) = |A|^2 phi(X, Y); meaningful for both arities.
    return compose_args(phi, act, act) == phi * a.norm_sq();
  }
  if (!phi.vector_valued())
    throw std::invalid_argument("type_check: (2,0)/(0,2) need a W-valued map");
  const BilinearMap left = compose_args(phi, act, id);
  const BilinearMap right = compose_args(phi, id, act);
  const BilinearMap post = post_apply(phi, act);
  if (type == PQType::t02) return left == right && left == post * Rational(-1);
  return left == right && left == post;  // (2,0)
}

PQParts pq_parts(const BilinearMap& phi, const EpsilonStructure& a) {
  const Rational nsq = a.norm_sq();
  if (nsq == 0) throw std::invalid_argument("pq_parts: epsilon must be nonzero");
  if (!phi.vector_valued())
    throw std::invalid_argument(
        "pq_parts: scalar maps have only the (1,1) projection; use pi11_single");
  const Matrix act = a.action(phi.n());
  const Matrix id = Matrix::identity(phi.dim());

  const BilinearMap phi_aa = compose_args(phi, act, act);
  const BilinearMap a_phi_ax = post_apply(compose_args(phi, act, id), act);
  const BilinearMap a_phi_xa = post_apply(compose_args(phi, id, act), act);
  const Rational f = 1 / (4 * nsq);
  PQParts parts{BilinearMap(), BilinearMap(), BilinearMap()};
  parts.p11 = (phi * nsq + phi_aa) * (1 / (2 * nsq));
  parts.p02 = (phi * nsq - phi_aa + a_phi_ax + a_phi_xa) * f;
  parts.p20 = (phi * nsq - phi_aa - a_phi_ax - a_phi_xa) * f;
  return parts;
}

BilinearMap pi11_single(const BilinearMap& phi, const EpsilonStructure& a) {
  const Rational nsq = a.norm_sq();
  if (nsq == 0)
    throw std::invalid_argument("pi11_single: epsilon must be nonzero");
  const Matrix act = a.action(phi.n());
  return (phi * nsq + compose_args(phi, act, act)) * (1 / (2 * nsq));
}

BilinearMap part02_nilpotent(const BilinearMap& phi, const EpsilonStructure& a) {
  if (a.epsilon() != 0 || a.block().is_zero())
    throw std::invalid_argument("part02_nilpotent: needs epsilon = 0, A nonzero");
  if (!phi.vector_valued())
    throw std::invalid_argument("part02_nilpotent: needs a W-valued map");
  const Matrix act = a.action(phi.n());
  const Matrix id = Matrix::identity(phi.dim());
  const BilinearMap phi_aa = compose_args(phi, act, act);
  const BilinearMap a_phi_ax = post_apply(compose_args(phi, act, id), act);
  const BilinearMap a_phi_xa = post_apply(compose_args(phi, id, act), act);
  return (phi_aa * Rational(-1) + a_phi_ax + a_phi_xa) * rat(1, 4);
}

BilinearMap part02(const BilinearMap& phi, const EpsilonStructure& a) {
  return (a.epsilon() == 0) ? part02_nilpotent(phi, a) : pq_parts(phi, a).p02;
}

BilinearMap pi11(const BilinearMap& phi, const StructureTriple& triple) {
  if (phi.vector_valued())
    throw std::invalid_argument("pi11: defined for scalar maps");
  if (!triple.valid()) throw std::invalid_argument("pi11: invalid triple");
  const std::size_t n = phi.n();
  const Matrix mi = triple.I.action(n), mj = triple.J.action(n),
               mk = triple.K.action(n);
  return (phi - compose_args(phi, mi, mi) - compose_args(phi, mj, mj) +
          compose_args(phi, mk, mk)) *
         rat(1, 4);
}

std::pair<BilinearMap, BilinearMap> lambda2_split(const BilinearMap& omega) {
  if (omega.vector_valued() || !omega.alternating_on_basis())
    throw std::invalid_argument("lambda2_split: needs an alternating scalar map");
  const BilinearMap s = swap_u(omega);
  const Rational half = rat(1, 2);
  return {(omega - s) * half, (omega + s) * half};
}

std::pair<BilinearMap, BilinearMap> sym_split(const BilinearMap& g) {
  if (g.vector_valued() || !g.symmetric_on_basis())
    throw std::invalid_argument("sym_split: needs a symmetric scalar map");
  const BilinearMap s = swap_u(g);
  const Rational half = rat(1, 2);
  return {(g - s) * half, (g + s) * half};
}

bool lemma_decomp_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lemma_decomp_check: n >= 2");
  const StructureTriple triple = StructureTriple::standard();
  const std::size_t d = 2 * n;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      BilinearMap f = BilinearMap::scalar(n);
      f.scalar_at(p, q) = 1;
      f.scalar_at(q, p) = -1;
      const auto [l2u_s2v, s2u_l2v] = lambda2_split(f);
      const BilinearMap proj = pi11(f, triple);
      if (!(l2u_s2v == proj)) return false;
      if (!(s2u_l2v == f - proj)) return false;
    }
  return true;
}

}  // namespace segre
