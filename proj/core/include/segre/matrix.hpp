#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "segre/rational.hpp"

namespace segre {

/// Dense matrix of exact rationals, row-major. Dimensions stay small, so
/// there is no sparse machinery; pivoting is deterministic (first nonzero).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  /// Convenience for literals: rows of integers.
  static Matrix of(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix transpose() const;
  Rational trace() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& o) const = default;

  /// Columns [first, last) as a new matrix.
  Matrix columns(std::size_t first, std::size_t last) const;
  Matrix column(std::size_t c) const { return columns(c, c + 1); }

  /// Stacks o below (hstack: to the right).
  Matrix vstack(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;

  /// Flattens row-major into a column vector.
  Matrix flatten() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Rational& s, const Matrix& m);

/// Exact rank over the rationals.
std::size_t rank(const Matrix& m);

/// Exact basis of {v : m v = 0}, as column vectors; empty iff m injective.
std::vector<Matrix> null_space(const Matrix& m);

/// Reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref_in_place(Matrix& m);

struct LinearSolution {
  Matrix particular;                // one solution of m x = rhs
  std::vector<Matrix> null_basis;   // basis of the solution space direction
};

/// Exact solve of m x = rhs (rhs a single column). Empty optional when the
/// system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const Matrix& m,
                                                  const Matrix& rhs);

struct Inertia {
  std::size_t positives = 0, negatives = 0, zeros = 0;
  bool operator==(const Inertia&) const = default;
};

/// Inertia of a symmetric matrix, computed exactly by symmetric Gaussian
/// elimination with rational pivots. Throws on non-symmetric input.
Inertia signature(const Matrix& sym);

Rational det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Dimension of the span of the given column vectors.
std::size_t span_dimension(const std::vector<Matrix>& vectors);

/// True iff the two families of column vectors span the same subspace.
bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

/// True iff v lies in the span of the given column vectors.
bool in_span(const std::vector<Matrix>& basis, const Matrix& v);

}  // namespace segre
