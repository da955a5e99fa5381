#pragma once

#include <utility>

#include "segre/epsilon.hpp"
#include "segre/matrix.hpp"
#include "segre/multi_array.hpp"

namespace segre {

enum class PQType { t20, t11, t02 };

/// Bilinear map on W = Hom(R^2, R^n), either scalar-valued (a (2n, 2n)
/// array) or W-valued (a (2n, 2n, 2n) array), over the E_{ia} basis with
/// the flat index w_index(i, a).
class BilinearMap {
 public:
  BilinearMap() = default;
  static BilinearMap scalar(std::size_t n);
  static BilinearMap vector(std::size_t n);
  static BilinearMap from_gram(std::size_t n, const Matrix& gram);
  static BilinearMap delta(std::size_t n);  // polar form of det, n = 2

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  bool vector_valued() const { return vector_valued_; }

  Rational& scalar_at(std::size_t p, std::size_t q);
  const Rational& scalar_at(std::size_t p, std::size_t q) const;
  Rational& vector_at(std::size_t p, std::size_t q, std::size_t k);
  const Rational& vector_at(std::size_t p, std::size_t q, std::size_t k) const;

  /// Value on the basis pair (p, q) as a column of coordinates (W-valued)
  /// or a 1x1 matrix (scalar).
  Matrix value(std::size_t p, std::size_t q) const;
  void set_value(std::size_t p, std::size_t q, const Matrix& v);

  /// Bilinear evaluation on coordinate columns.
  Matrix eval_coords(const Matrix& xc, const Matrix& yc) const;

  bool alternating_on_basis() const;
  bool symmetric_on_basis() const;
  bool is_zero() const { return values_.is_zero(); }

  BilinearMap operator+(const BilinearMap& o) const;
  BilinearMap operator-(const BilinearMap& o) const;
  BilinearMap operator*(const Rational& s) const;
  bool operator==(const BilinearMap&) const = default;

  const MultiArray& values() const { return values_; }
  MultiArray& values() { return values_; }

 private:
  std::size_t n_ = 0;
  bool vector_valued_ = false;
  MultiArray values_;
};

/// phi(M_a X, M_b Y) for endomorphism matrices of W in the E basis.
BilinearMap compose_args(const BilinearMap& phi, const Matrix& ma, const Matrix& mb);

/// X, Y |-> M phi(X, Y); W-valued maps only.
BilinearMap post_apply(const BilinearMap& phi, const Matrix& m);

/// Swaps the R^2-slot of the two arguments: psi(E_{ia}, E_{jb}) =
/// phi(E_{ib}, E_{ja}). The symmetrizers built from it cut out the
/// tensor-symmetry summands of Lambda^2 W* and S^2 W*.
BilinearMap swap_u(const BilinearMap& phi);

/// Exact check of the defining type identities on all basis pairs.
/// Scalar-valued maps admit only the (1,1) check.
bool type_check(const BilinearMap& phi, const EpsilonStructure& a, PQType type);

struct PQParts {
  BilinearMap p20, p11, p02;
};

/// Unique decomposition of a W-valued map into (2,0) + (1,1) + (0,2) parts;
/// epsilon != 0.
PQParts pq_parts(const BilinearMap& phi, const EpsilonStructure& a);

/// (1,1)-projection of a map with respect to a single structure with
/// epsilon != 0; the piece of the decomposition that survives for scalar
/// maps.
BilinearMap pi11_single(const BilinearMap& phi, const EpsilonStructure& a);

/// The degenerate (0,2)-part for nilpotent A (epsilon = 0):
/// phi02(X,Y) = (-phi(AX,AY) + A phi(AX,Y) + A phi(X,AY)) / 4.
BilinearMap part02_nilpotent(const BilinearMap& phi, const EpsilonStructure& a);

/// The (0,2)-part per the convention that dispatches on epsilon.
BilinearMap part02(const BilinearMap& phi, const EpsilonStructure& a);

/// Projection of a scalar map onto type (1,1) with respect to the span of a
/// structure triple; independent of the choice of admissible triple.
BilinearMap pi11(const BilinearMap& phi, const StructureTriple& triple);

/// Splits an alternating scalar map into its Lambda^2 U (x) S^2 V* and
/// S^2 U (x) Lambda^2 V* components.
std::pair<BilinearMap, BilinearMap> lambda2_split(const BilinearMap& omega);

/// Splits a symmetric scalar map into its Lambda^2 U (x) Lambda^2 V* and
/// S^2 U (x) S^2 V* components.
std::pair<BilinearMap, BilinearMap> sym_split(const BilinearMap& g);

/// True iff on a spanning set of alternating forms the first tensor-symmetry
/// component agrees with the pi11 projection and the second with its kernel
/// component.
bool lemma_decomp_check(std::size_t n);

}  // namespace segre
