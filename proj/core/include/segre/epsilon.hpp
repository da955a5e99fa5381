#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segre/matrix.hpp"

namespace segre {

/// Elements of W = Hom(R^2, R^n) are n x 2 matrices; the column index runs
/// over the standard basis e_1, e_2 of R^2. A basis element E_{ia} of W is
/// the matrix unit with a 1 in row i, column a, and the flat index of
/// E_{ia} is 2*i + a throughout.
using TensorW = Matrix;

inline std::size_t w_index(std::size_t i, std::size_t a) { return 2 * i + a; }

TensorW w_basis(std::size_t n, std::size_t i, std::size_t a);
TensorW w_from_coords(std::size_t n, const Matrix& column);
Matrix w_coords(const TensorW& x);

/// An element of the standard split-quaternionic structure on W: a
/// trace-free 2x2 block A acting by right composition, X |-> X A. The
/// squared norm is det A and epsilon = -det A, so that the action squares
/// to epsilon * id (Cayley-Hamilton on the trace-free block).
class EpsilonStructure {
 public:
  static EpsilonStructure make(const Matrix& block, bool allow_zero = false);

  const Matrix& block() const { return block_; }
  Rational norm_sq() const;   // det of the block
  Rational epsilon() const;   // -det of the block

  /// The induced endomorphism of W as a 2n x 2n matrix in the E_{ia} basis.
  Matrix action(std::size_t n) const;

  bool operator==(const EpsilonStructure&) const = default;

 private:
  explicit EpsilonStructure(Matrix block) : block_(std::move(block)) {}
  Matrix block_;
};

/// Standard representatives: epsilon = -1, 0, +1 respectively.
EpsilonStructure j_minus();  // [[0,1],[-1,0]]
EpsilonStructure j_zero();   // [[0,1],[0,0]]
EpsilonStructure j_plus();   // [[1,0],[0,-1]]
EpsilonStructure j_for(int epsilon);

TensorW apply(const EpsilonStructure& a, const TensorW& x);

/// Local basis (I, J, K) with I.I = J.J = id and K = I.J = -J.I as actions
/// on W. Since actions compose through reversed block products, the block
/// of K is J.block * I.block.
struct StructureTriple {
  EpsilonStructure I, J, K;

  static StructureTriple standard();
  /// Conjugates the standard triple blockwise by an invertible g.
  static StructureTriple conjugated(const Matrix& g);
  static StructureTriple make(const EpsilonStructure& I, const EpsilonStructure& J);

  bool valid() const;
};

struct TwistorSign {
  int sign;                       // sign of epsilon
  std::optional<int> sheet;       // for epsilon < 0: which sheet of the fiber
};

/// Sign of epsilon; for epsilon < 0 the fiber {det = |A|^2 > 0} is a
/// hyperboloid of two sheets and the k-coefficient of the block separates
/// them.
TwistorSign twistor_sign(const EpsilonStructure& a);

struct SegreResult {
  bool member;      // rank(X) == 1
  bool zero_input;  // X == 0: reported separately, not an error
};

SegreResult segre_member(const TensorW& x);

/// For rank-one X, the para-complex structure fixing X: ker X is the
/// -1-eigenline and the first standard basis vector outside ker X spans the
/// +1-eigenline.
EpsilonStructure para_complex_for(const TensorW& x);

/// beta-plane of u: {X : X u = 0}, dimension n. alpha-plane of v:
/// {X : im X in span v}, dimension 2. Both consist of rank <= 1 maps.
std::vector<TensorW> beta_plane(std::size_t n, const Matrix& u);
std::vector<TensorW> alpha_plane(const Matrix& v);

/// For epsilon = +1: the +1/-1 eigenspaces of the action, each of dim n.
std::pair<std::vector<TensorW>, std::vector<TensorW>> eigen_split(
    const EpsilonStructure& a, std::size_t n);

/// For epsilon = 0: kernel and image of the action (they coincide).
std::pair<std::vector<TensorW>, std::vector<TensorW>> kernel_image(
    const EpsilonStructure& a, std::size_t n);

/// Symmetric bilinear form on W over the E_{ia} basis.
struct SymBilinear {
  std::size_t n = 0;
  Matrix gram;  // 2n x 2n, symmetric

  Rational eval(const TensorW& x, const TensorW& y) const;
};

/// g(X,Y) = sum_{a,b} (omega_U^{-1})_{ab} omega_V(X e_a, Y e_b) for skew
/// invertible omega_U (2x2) and omega_V (n x n, n even). Symmetric, of type
/// (1,1), null on the Segre cone, split signature (n, n).
SymBilinear compatible_metric(const Matrix& omega_u, const Matrix& omega_v);

/// n = 2 only: the polar form of det, delta(X,Y) = (det(X+Y)-det X-det Y)/2.
Rational delta_form(const TensorW& x, const TensorW& y);

/// Report on {A in End(W) : A delta-skew and A.A scalar} for n = 2. The
/// delta-skew endomorphisms split into left and right multiplications; the
/// scalar-square locus is their union, so the right multiplications
/// (= the standard structure) are a proper component of the solution set.
struct SkewSquareReport {
  std::size_t skew_dim = 0;            // expected 6 (so(2,2))
  bool qstd_in_solution_set = false;   // right multiplications qualify
  bool left_in_solution_set = false;   // left multiplications qualify too
  bool left_equals_qstd = true;        // expected false
  bool splits_left_right = false;      // skew space = L + R, direct
  bool mixed_products_independent = false;  // certifies solution set = L u R
  bool solution_is_union_l_r = false;
  std::string note;
};

SkewSquareReport skew_square_scalar_set();

}  // namespace segre
