#include "segre/epsilon.hpp"

#include <stdexcept>

#include "segre/para_quaternion.hpp"

namespace segre {

TensorW w_basis(std::size_t n, std::size_t i, std::size_t a) {
  TensorW x(n, 2);
  x.at(i, a) = 1;
  return x;
}

TensorW w_from_coords(std::size_t n, const Matrix& column) {
  if (column.cols() != 1 || column.rows() != 2 * n)
    throw std::invalid_argument("w_from_coords: expected a 2n-column");
  TensorW x(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) x.at(i, a) = column.at(w_index(i, a), 0);
  return x;
}

Matrix w_coords(const TensorW& x) {
  const std::size_t n = x.rows();
  Matrix c(2 * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) c.at(w_index(i, a), 0) = x.at(i, a);
  return c;
}

EpsilonStructure EpsilonStructure::make(const Matrix& block, bool allow_zero) {
  if (block.rows() != 2 || block.cols() != 2)
    throw std::invalid_argument("epsilon structure: block must be 2x2");
  if (block.trace() != 0)
    throw std::invalid_argument("epsilon structure: block must be trace-free");
  if (!allow_zero && block.is_zero())
    throw std::invalid_argument("epsilon structure: zero block (pass allow_zero)");
  return EpsilonStructure(block);
}

Rational EpsilonStructure::norm_sq() const { return det(block_); }
Rational EpsilonStructure::epsilon() const { return -det(block_); }

Matrix EpsilonStructure::action(std::size_t n) const {
  // (X A)[i,a] = sum_b X[i,b] A[b,a]: block-diagonal copies of A^T.
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        m.at(w_index(i, a), w_index(i, b)) = block_.at(b, a);
  return m;
}

EpsilonStructure j_minus() {
  return EpsilonStructure::make(Matrix::of({{0, 1}, {-1, 0}}));
}
EpsilonStructure j_zero() {
  return EpsilonStructure::make(Matrix::of({{0, 1}, {0, 0}}));
}
EpsilonStructure j_plus() {
  return EpsilonStructure::make(Matrix::of({{1, 0}, {0, -1}}));
}

EpsilonStructure j_for(int epsilon) {
  switch (epsilon) {
    case -1: return j_minus();
    case 0: return j_zero();
    case 1: return j_plus();
  }
  throw std::invalid_argument("j_for: epsilon must be -1, 0 or 1");
}

TensorW apply(const EpsilonStructure& a, const TensorW& x) {
  if (x.cols() != 2) throw std::invalid_argument("apply: X must be n x 2");
  return x * a.block();
}

StructureTriple StructureTriple::standard() {
  return make(j_plus(), EpsilonStructure::make(Matrix::of({{0, 1}, {1, 0}})));
}

StructureTriple StructureTriple::conjugated(const Matrix& g) {
  const auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("conjugated: g not invertible");
  const StructureTriple s = standard();
  return {EpsilonStructure::make(g * s.I.block() * *gi),
          EpsilonStructure::make(g * s.J.block() * *gi),
          EpsilonStructure::make(g * s.K.block() * *gi)};
}

StructureTriple StructureTriple::make(const EpsilonStructure& I,
                                      const EpsilonStructure& J) {
  // K = I o J as actions, i.e. block(K) = block(J) * block(I).
  StructureTriple t{I, J, EpsilonStructure::make(J.block() * I.block())};
  if (!t.valid()) throw std::invalid_argument("structure triple: relations fail");
  return t;
}

bool StructureTriple::valid() const {
  const Matrix id = Matrix::identity(2);
  if (!(I.block() * I.block() == id)) return false;
  if (!(J.block() * J.block() == id)) return false;
  if (!(K.block() == J.block() * I.block())) return false;
  if (!(J.block() * I.block() == -(I.block() * J.block()))) return false;
  return true;
}

TwistorSign twistor_sign(const EpsilonStructure& a) {
  if (a.block().is_zero()) throw std::invalid_argument("twistor_sign: zero input");
  TwistorSign out{sign_of(a.epsilon()), std::nullopt};
  if (out.sign < 0) {
    // Two-sheet fiber; the k-coefficient is the separating functional.
    const ParaQuaternion q = from_matrix(a.block());
    out.sheet = sign_of(q.d);
  }
  return out;
}

SegreResult segre_member(const TensorW& x) {
  if (x.is_zero()) return {false, true};
  return {rank(x) == 1, false};
}

EpsilonStructure para_complex_for(const TensorW& x) {
  if (rank(x) != 1) throw std::invalid_argument("para_complex_for: rank(X) != 1");
  const std::vector<Matrix> ker = null_space(x);  // one 2-vector
  const Matrix& k = ker.front();
  // First standard basis vector of R^2 outside the kernel line.
  std::size_t pick = (k.at(1, 0) == 0) ? 1 : 0;
  // If k is proportional to e_1, then e_1 is in the kernel: k = (k0, 0)
  // forces pick = 1; otherwise e_1 works.
  Matrix basis(2, 2);
  basis.at(pick, 0) = 1;              // +1 eigenvector
  basis.at(0, 1) = k.at(0, 0);        // -1 eigenvector
  basis.at(1, 1) = k.at(1, 0);
  const auto bi = inverse(basis);
  Matrix d(2, 2);
  d.at(0, 0) = 1;
  d.at(1, 1) = -1;
  return EpsilonStructure::make(basis * d * *bi);
}

std::vector<TensorW> beta_plane(std::size_t n, const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 1 || u.is_zero())
    throw std::invalid_argument("beta_plane: u must be a nonzero 2-vector");
  // X u = 0 row by row: each row of X lies in the line u-perp.
  Matrix perp(2, 1);
  perp.at(0, 0) = -u.at(1, 0);
  perp.at(1, 0) = u.at(0, 0);
  std::vector<TensorW> basis;
  for (std::size_t i = 0; i < n; ++i) {
    TensorW x(n, 2);
    x.at(i, 0) = perp.at(0, 0);
    x.at(i, 1) = perp.at(1, 0);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<TensorW> alpha_plane(const Matrix& v) {
  if (v.cols() != 1 || v.is_zero())
    throw std::invalid_argument("alpha_plane: v must be a nonzero column");
  const std::size_t n = v.rows();
  std::vector<TensorW> basis;
  for (std::size_t a = 0; a < 2; ++a) {
    TensorW x(n, 2);
    for (std::size_t i = 0; i < n; ++i) x.at(i, a) = v.at(i, 0);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {
std::vector<TensorW> to_tensors(std::size_t n, const std::vector<Matrix>& cols) {
  std::vector<TensorW> out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(w_from_coords(n, c));
  return out;
}
}  // namespace

std::pair<std::vector<TensorW>, std::vector<TensorW>> eigen_split(
    const EpsilonStructure& a, std::size_t n) {
  if (a.epsilon() != 1)
    throw std::invalid_argument("eigen_split: requires epsilon = 1");
  const Matrix act = a.action(n);
  const Matrix id = Matrix::identity(2 * n);
  return {to_tensors(n, null_space(act - id)), to_tensors(n, null_space(act + id))};
}

std::pair<std::vector<TensorW>, std::vector<TensorW>> kernel_image(
    const EpsilonStructure& a, std::size_t n) {
  if (a.epsilon() != 0 || a.block().is_zero())
    throw std::invalid_argument("kernel_image: requires epsilon = 0, A nonzero");
  const Matrix act = a.action(n);
  std::vector<TensorW> ker = to_tensors(n, null_space(act));
  // Image = column span; rank is n, so the kernel basis has the right size
  // and the image can be read off the nonzero columns of the action.
  std::vector<Matrix> img_cols;
  for (std::size_t c = 0; c < act.cols(); ++c) {
    Matrix col = act.columns(c, c + 1);
    if (!col.is_zero()) img_cols.push_back(std::move(col));
  }
  // Reduce to a basis.
  std::vector<Matrix> img_basis;
  for (const auto& c : img_cols)
    if (!in_span(img_basis, c)) img_basis.push_back(c);
  return {std::move(ker), to_tensors(n, img_basis)};
}

Rational SymBilinear::eval(const TensorW& x, const TensorW& y) const {
  const Matrix cx = w_coords(x), cy = w_coords(y);
  return (cx.transpose() * gram * cy).at(0, 0);
}

SymBilinear compatible_metric(const Matrix& omega_u, const Matrix& omega_v) {
  if (omega_u.rows() != 2 || omega_u.cols() != 2)
    throw std::invalid_argument("compatible_metric: omega_U must be 2x2");
  if (!omega_v.is_square())
    throw std::invalid_argument("compatible_metric: omega_V must be square");
  const std::size_t n = omega_v.rows();
  if (n % 2 != 0)
    throw std::invalid_argument("compatible_metric: n must be even");
  if (!(omega_u.transpose() == -omega_u) || !(omega_v.transpose() == -omega_v))
    throw std::invalid_argument("compatible_metric: forms must be skew");
  const auto ui = inverse(omega_u);
  if (!ui || det(omega_v) == 0)
    throw std::invalid_argument("compatible_metric: forms must be invertible");

  // g(E_{ia}, E_{jb}) = (omega_U^{-1})_{ab} (omega_V)_{ij}.
  SymBilinear g{n, Matrix(2 * n, 2 * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < 2; ++b)
          g.gram.at(w_index(i, a), w_index(j, b)) = ui->at(a, b) * omega_v.at(i, j);
  return g;
}

Rational delta_form(const TensorW& x, const TensorW& y) {
  if (x.rows() != 2 || y.rows() != 2 || x.cols() != 2 || y.cols() != 2)
    throw std::invalid_argument("delta_form: defined for n = 2 only");
  return (det(x + y) - det(x) - det(y)) * rat(1, 2);
}

namespace {

// Endomorphisms of W (n = 2) as 4x4 matrices over the E_{ia} basis.
Matrix left_mult_action(const Matrix& b) {
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t j = 0; j < 2; ++j)
        m.at(w_index(i, a), w_index(j, a)) = b.at(i, j);
  return m;
}

bool is_scalar_matrix(const Matrix& m) {
  const Rational lead = m.at(0, 0);
  Matrix id = Matrix::identity(m.rows());
  return m == id * lead;
}

}  // namespace

SkewSquareReport skew_square_scalar_set() {
  SkewSquareReport rep;
  const std::size_t n = 2;
  const Matrix delta_gram = [&] {
    Matrix g(4, 4);
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        g.at(p, q) = delta_form(w_basis(n, p / 2, p % 2), w_basis(n, q / 2, q % 2));
    return g;
  }();

  // delta(A X, Y) + delta(X, A Y) = 0 as a linear system on the 16 entries
  // of A: G A + A^T G = 0 entrywise.
  Matrix sys(16, 16);
  std::size_t row = 0;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q, ++row)
      for (std::size_t r = 0; r < 4; ++r) {
        sys.at(row, r * 4 + q) += delta_gram.at(p, r);   // (A e_q) against e_p
        sys.at(row, r * 4 + p) += delta_gram.at(r, q);   // A on the left slot
      }
  const std::vector<Matrix> skew = null_space(sys);
  rep.skew_dim = skew.size();

  auto unflatten = [](const Matrix& v) {
    Matrix m(4, 4);
    for (std::size_t k = 0; k < 16; ++k) m.at(k / 4, k % 4) = v.at(k, 0);
    return m;
  };

  // Right multiplications (the standard structure) and left multiplications.
  const Matrix tf[3] = {Matrix::of({{1, 0}, {0, -1}}), Matrix::of({{0, 1}, {0, 0}}),
                        Matrix::of({{0, 0}, {1, 0}})};
  std::vector<Matrix> right_ops, left_ops, skew_flat;
  for (const auto& b : tf) {
    right_ops.push_back(EpsilonStructure::make(b).action(n).flatten());
    left_ops.push_back(left_mult_action(b).flatten());
  }
  for (const auto& v : skew) skew_flat.push_back(v);

  auto scalar_square_closed = [&](const std::vector<Matrix>& ops) {
    // A |-> A^2 restricted to a span is controlled by squares and
    // anticommutators of the basis.
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i; j < ops.size(); ++j) {
        const Matrix a = unflatten(ops[i]), b = unflatten(ops[j]);
        if (!is_scalar_matrix(a * b + b * a)) return false;
      }
    return true;
  };

  bool right_in_skew = true, left_in_skew = true;
  for (const auto& v : right_ops) right_in_skew &= in_span(skew_flat, v);
  for (const auto& v : left_ops) left_in_skew &= in_span(skew_flat, v);

  rep.qstd_in_solution_set = right_in_skew && scalar_square_closed(right_ops);
  rep.left_in_solution_set = left_in_skew && scalar_square_closed(left_ops);
  rep.left_equals_qstd = same_span(left_ops, right_ops);

  std::vector<Matrix> joint = right_ops;
  joint.insert(joint.end(), left_ops.begin(), left_ops.end());
  rep.splits_left_right =
      span_dimension(joint) == 6 && rep.skew_dim == 6 && same_span(joint, skew_flat);

  // For A = L_B + R_C with B, C trace-free, A^2 is scalar iff L_B R_C = 0
  // (the operator has zero trace, so "scalar" forces zero), and the nine
  // products L_i R_j being linearly independent makes the coefficients
  // b_i c_j vanish, i.e. B = 0 or C = 0.
  std::vector<Matrix> products;
  bool traces_vanish = true, families_commute = true;
  for (const auto& lf : left_ops)
    for (const auto& rf : right_ops) {
      const Matrix prod = unflatten(lf) * unflatten(rf);
      traces_vanish &= (prod.trace() == 0);
      families_commute &= (prod == unflatten(rf) * unflatten(lf));
      products.push_back(prod.flatten());
    }
  rep.mixed_products_independent = traces_vanish && families_commute &&
                                   span_dimension(products) == products.size();

  rep.solution_is_union_l_r = rep.qstd_in_solution_set && rep.left_in_solution_set &&
                              rep.splits_left_right && rep.mixed_products_independent;
  rep.note =
      "delta-skew endomorphisms with scalar square form the union of left and "
      "right multiplications; the right multiplications alone are the standard "
      "structure, so skewness plus scalar square does not single it out";
  return rep;
}

}  // namespace segre
