#include "segre/matrix.hpp"

#include <stdexcept>

namespace segre {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("matrix: ragged rows");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix +: dimension mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix -: dimension mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) { return m * s; }

Matrix Matrix::columns(std::size_t first, std::size_t last) const {
  if (first > last || last > cols_) throw std::invalid_argument("columns: bad range");
  Matrix r(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) r.at(i, j - first) = at(i, j);
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::flatten() const {
  Matrix r(rows_ * cols_, 1);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.at(k, 0) = entries_[k];
  return r;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // First nonzero entry in this column at or below `row`.
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref_in_place(a).size();
}

std::vector<Matrix> null_space(const Matrix& m) {
  Matrix a = m;
  const std::vector<std::size_t> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.cols(), 1);
    v.at(free, 0) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v.at(pivots[r], 0) = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear_system(const Matrix& m,
                                                  const Matrix& rhs) {
  if (rhs.cols() != 1 || rhs.rows() != m.rows())
    throw std::invalid_argument("solve: rhs must be a single column matching m");
  Matrix aug = m.hstack(rhs);
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

  LinearSolution sol;
  sol.particular = Matrix(m.cols(), 1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.particular.at(pivots[r], 0) = aug.at(r, m.cols());
  sol.null_basis = null_space(m);
  return sol;
}

Inertia signature(const Matrix& sym) {
  if (!sym.is_symmetric())
    throw std::invalid_argument("signature: matrix not symmetric");
  Matrix a = sym;
  const std::size_t n = a.rows();
  Inertia out;

  auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += f * a.at(src, j);
    for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += f * a.at(i, src);
  };
  auto swap_row_col = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      // Prefer a nonzero diagonal entry further down.
      std::size_t d = k + 1;
      while (d < n && a.at(d, d) == 0) ++d;
      if (d < n) {
        swap_row_col(k, d);
      } else {
        // All trailing diagonal entries vanish; a[k][j] != 0 creates one.
        std::size_t j = k + 1;
        while (j < n && a.at(k, j) == 0) ++j;
        if (j == n) {
          ++out.zeros;
          continue;
        }
        add_row_col(k, j, Rational(1));  // a[k][k] becomes 2 a[k][j]
      }
    }
    const Rational pivot = a.at(k, k);
    if (sgn(pivot) > 0)
      ++out.positives;
    else
      ++out.negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      add_row_col(i, k, -a.at(i, k) / pivot);
    }
  }
  return out;
}

Rational det(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a.at(p, col) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    const Rational inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug = m.hstack(Matrix::identity(n));
  const auto pivots = rref_in_place(aug);
  // All pivots must sit in the left half; one in the right half means the
  // original matrix was singular.
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  return aug.columns(n, 2 * n);
}

std::size_t span_dimension(const std::vector<Matrix>& vectors) {
  if (vectors.empty()) return 0;
  Matrix stacked = vectors.front();
  for (std::size_t k = 1; k < vectors.size(); ++k)
    stacked = stacked.hstack(vectors[k]);
  return rank(stacked);
}

bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const std::size_t da = span_dimension(a), db = span_dimension(b);
  return da == db && span_dimension(joint) == da;
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& v) {
  std::vector<Matrix> joint = basis;
  joint.push_back(v);
  return span_dimension(joint) == span_dimension(basis);
}

}  // namespace segre
