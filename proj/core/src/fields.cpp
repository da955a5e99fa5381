#include "segre/fields.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace segre {

namespace {

Eigen::Matrix2d quaternion_block(double b, double c, double d) {
  Eigen::Matrix2d m;
  m << b, c + d, c - d, -b;
  return m;
}

}  // namespace

StructureField StructureField::make(const std::string& family, int n,
                                    std::vector<double> params) {
  StructureField f;
  f.family_ = family;
  f.n_ = n;
  f.params_ = std::move(params);
  if (family == "flat") {
    if (n < 2) throw std::invalid_argument("flat: n >= 2");
    if (f.params_.empty()) f.params_ = {1.0, 0.0, 0.0};  // j+
    if (f.params_.size() != 3)
      throw std::invalid_argument("flat: params are (b, c, d)");
    const double det = -f.params_[0] * f.params_[0] - f.params_[1] * f.params_[1] +
                       f.params_[2] * f.params_[2];
    const double eps = -det;
    const double rounded = std::round(eps);
    if (std::abs(eps - rounded) > 1e-12 || std::abs(rounded) > 1.0)
      throw std::invalid_argument("flat: block must have eps in {-1, 0, 1}");
    f.eps_ = static_cast<int>(rounded);
  } else if (family == "tangent-shear") {
    if (n != 2) throw std::invalid_argument("tangent-shear: n = 2 only");
    if (f.params_.empty()) f.params_ = {1.0, 0.5, 0.25};
    if (f.params_.size() != 3)
      throw std::invalid_argument("tangent-shear: params are (p0, p1, p2)");
    f.eps_ = 0;
  } else if (family == "para-graph") {
    if (n != 2) throw std::invalid_argument("para-graph: n = 2 only");
    if (f.params_.empty()) f.params_ = {0.05, 0.0};
    if (f.params_.size() != 2)
      throw std::invalid_argument("para-graph: params are (s, c)");
    f.eps_ = 1;
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return f;
}

std::vector<std::string> StructureField::builtin_families() {
  return {"flat", "tangent-shear", "para-graph"};
}

Eigen::MatrixXd StructureField::evaluate(const Eigen::VectorXd& x) const {
  const int dim = dimension();
  if (x.size() != dim) throw std::invalid_argument("evaluate: wrong point size");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  if (family_ == "flat") {
    const Eigen::Matrix2d blk =
        quaternion_block(params_[0], params_[1], params_[2]);
    // Right multiplication in the E_{ia} basis: copies of blk^T.
    for (int i = 0; i < n_; ++i) a.block<2, 2>(2 * i, 2 * i) = blk.transpose();
  } else if (family_ == "tangent-shear") {
    // Coordinates (x1, x2, y1, y2); A dx_a = C_{ba}(y) dy_b, A dy = 0.
    const double y1 = x(2);
    a(2, 0) = 1.0;
    a(3, 1) = params_[0] + params_[1] * y1 + params_[2] * y1 * y1 * y1;
  } else {  // para-graph
    // B = Jacobian of psi_1 = s a1 a2^3 plus the curl term c a1; the cubic
    // keeps the finite-difference error visible at second order.
    const double s = params_[0], c = params_[1];
    const double a1 = x(0), a2 = x(1);
    Eigen::Matrix2d b;
    b << s * a2 * a2 * a2, 3.0 * s * a1 * a2 * a2 + c * a1, 0.0, 0.0;
    a.block<2, 2>(0, 0) = Eigen::Matrix2d::Identity();
    a.block<2, 2>(2, 2) = -Eigen::Matrix2d::Identity();
    a.block<2, 2>(2, 0) = 2.0 * b;
  }
  return a;
}

Eigen::VectorXd StructureField::nijenhuis_symbolic(const Eigen::VectorXd& x,
                                                   int i, int j) const {
  const int dim = dimension();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  if (family_ == "flat") return v;
  if (family_ == "tangent-shear") {
    // Only the (dx1, dx2) pair is nonzero: -(p1 + 3 p2 y1^2) dy_2.
    const double y1 = x(2);
    const double slope = params_[1] + 3.0 * params_[2] * y1 * y1;
    if (i == 0 && j == 1) v(3) = -slope;
    if (i == 1 && j == 0) v(3) = slope;
    return v;
  }
  // para-graph: N(da1, da2) = 4 (d2 B_{l1} - d1 B_{l2}) db_l = -4c db_1.
  const double c = params_[1];
  if (i == 0 && j == 1) v(2) = -4.0 * c;
  if (i == 1 && j == 0) v(2) = 4.0 * c;
  return v;
}

namespace {

// Jacobian of the vector field x |-> A(x) e_col by central differences.
Eigen::MatrixXd column_jacobian(const StructureField& field,
                                const Eigen::VectorXd& x, int col, double h) {
  const int dim = field.dimension();
  Eigen::MatrixXd jac(dim, dim);
  Eigen::VectorXd xp = x, xm = x;
  for (int k = 0; k < dim; ++k) {
    xp(k) += h;
    xm(k) -= h;
    jac.col(k) = (field.evaluate(xp).col(col) - field.evaluate(xm).col(col)) /
                 (2.0 * h);
    xp(k) = x(k);
    xm(k) = x(k);
  }
  return jac;
}

// Finite-difference bracket of two column fields of a matrix-valued map.
Eigen::VectorXd bracket_fd(const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& mat,
                           const Eigen::VectorXd& x, int ci, int cj, double h) {
  const int dim = static_cast<int>(x.size());
  Eigen::MatrixXd ji(dim, dim), jj(dim, dim);
  Eigen::VectorXd xp = x, xm = x;
  for (int k = 0; k < dim; ++k) {
    xp(k) += h;
    xm(k) -= h;
    const Eigen::MatrixXd mp = mat(xp), mm = mat(xm);
    ji.col(k) = (mp.col(ci) - mm.col(ci)) / (2.0 * h);
    jj.col(k) = (mp.col(cj) - mm.col(cj)) / (2.0 * h);
    xp(k) = x(k);
    xm(k) = x(k);
  }
  const Eigen::MatrixXd m0 = mat(x);
  return jj * m0.col(ci) - ji * m0.col(cj);
}

}  // namespace

NijenhuisResult nijenhuis_numeric(const StructureField& field,
                                  const Eigen::VectorXd& x, int i, int j,
                                  double h) {
  if (h <= 0) throw std::invalid_argument("nijenhuis_numeric: h > 0 required");
  const int dim = field.dimension();
  if (i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::invalid_argument("nijenhuis_numeric: frame index out of range");
  const Eigen::MatrixXd a0 = field.evaluate(x);
  const Eigen::MatrixXd ji = column_jacobian(field, x, i, h);
  const Eigen::MatrixXd jj = column_jacobian(field, x, j, h);

  // N = -[A d_i, A d_j] + A [A d_i, d_j] + A [d_i, A d_j]; the coordinate
  // bracket [d_i, d_j] vanishes. [V, d_j] = -dV/dx_j.
  const Eigen::VectorXd vi = a0.col(i), vj = a0.col(j);
  const Eigen::VectorXd lie_vi_vj = jj * vi - ji * vj;
  const Eigen::VectorXd value = -lie_vi_vj - a0 * (ji.col(j)) + a0 * (jj.col(i));

  NijenhuisResult r;
  r.point = x;
  r.i = i;
  r.j = j;
  r.value = value;
  r.max_abs = value.cwiseAbs().maxCoeff();
  return r;
}

double frobenius_residual(const StructureField& field, const Eigen::VectorXd& x,
                          double h) {
  if (field.epsilon() != 0 && field.epsilon() != 1)
    throw std::invalid_argument("frobenius_residual: needs eps in {0, 1}");
  const int dim = field.dimension();

  auto residual_for = [&](const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& span
                          ) {
    const Eigen::MatrixXd s0 = span(x);
    // Orthonormal basis of the column space for the projector.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(s0);
    qr.setThreshold(1e-8);
    const int r = static_cast<int>(qr.rank());
    const Eigen::MatrixXd q =
        Eigen::MatrixXd(qr.householderQ()).leftCols(r);
    const Eigen::MatrixXd proj_out =
        Eigen::MatrixXd::Identity(dim, dim) - q * q.transpose();
    double worst = 0.0;
    for (int ci = 0; ci < dim; ++ci)
      for (int cj = ci + 1; cj < dim; ++cj) {
        if (s0.col(ci).cwiseAbs().maxCoeff() < 1e-12 ||
            s0.col(cj).cwiseAbs().maxCoeff() < 1e-12)
          continue;
        const Eigen::VectorXd br = bracket_fd(span, x, ci, cj, h);
        worst = std::max(worst, (proj_out * br).cwiseAbs().maxCoeff());
      }
    return worst;
  };

  if (field.epsilon() == 0) {
    // Kernel = image of A; its columns span the distribution.
    return residual_for(
        [&](const Eigen::VectorXd& p) { return field.evaluate(p); });
  }
  const auto plus = [&](const Eigen::VectorXd& p) {
    const int d = field.dimension();
    return Eigen::MatrixXd(0.5 * (Eigen::MatrixXd::Identity(d, d) + field.evaluate(p)));
  };
  const auto minus = [&](const Eigen::VectorXd& p) {
    const int d = field.dimension();
    return Eigen::MatrixXd(0.5 * (Eigen::MatrixXd::Identity(d, d) - field.evaluate(p)));
  };
  return std::max(residual_for(plus), residual_for(minus));
}

SweepSummary sweep(const StructureField& field, const GridSpec& grid, double h) {
  const int dim = field.dimension();
  if (grid.steps < 1) throw std::invalid_argument("sweep: empty grid");
  if (static_cast<int>(grid.min.size()) != dim ||
      static_cast<int>(grid.max.size()) != dim)
    throw std::invalid_argument("sweep: grid bounds must match the dimension");

  SweepSummary s;
  s.per_pair_max.assign(dim * (dim - 1) / 2, 0.0);

  std::vector<int> idx(dim, 0);
  const bool has_frobenius = field.epsilon() == 0 || field.epsilon() == 1;
  bool done = false;
  while (!done) {
    Eigen::VectorXd x(dim);
    for (int k = 0; k < dim; ++k) {
      const double t = grid.steps == 1
                           ? 0.0
                           : static_cast<double>(idx[k]) / (grid.steps - 1);
      x(k) = grid.min[k] + t * (grid.max[k] - grid.min[k]);
    }
    ++s.points;
    std::size_t pair = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j, ++pair) {
        const NijenhuisResult r = nijenhuis_numeric(field, x, i, j, h);
        s.per_pair_max[pair] = std::max(s.per_pair_max[pair], r.max_abs);
        s.max_abs = std::max(s.max_abs, r.max_abs);
        const Eigen::VectorXd dev = r.value - field.nijenhuis_symbolic(x, i, j);
        s.max_oracle_deviation =
            std::max(s.max_oracle_deviation, dev.cwiseAbs().maxCoeff());
      }
    if (has_frobenius)
      s.max_frobenius = std::max(s.max_frobenius, frobenius_residual(field, x, h));

    done = true;
    for (int k = dim - 1; k >= 0; --k) {
      if (++idx[k] < grid.steps) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
  }
  return s;
}

FamilyTolerances tolerances() { return {}; }

}  // namespace segre
