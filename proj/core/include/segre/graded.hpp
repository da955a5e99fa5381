#pragma once

#include <map>
#include <string>
#include <vector>

#include "segre/matrix.hpp"

namespace segre {

/// The |1|-graded Lie algebra pgl(2+n, R), modeled as gl(2+n) modulo
/// scalars with trace-free canonical representatives. Block shape (2, n):
/// g_{-1} is the lower-left n x 2 block, g_1 the upper-right 2 x n block,
/// g_0 the block diagonal. Basis order: g_{-1} first as F_{ia} = E_{2+i,a}
/// with flat index 2i+a (matching the W basis of the linear modules), then
/// g_0 as [h, e, f, gl(n) off-diagonal, gl(n) diagonal differences, grading
/// element], then g_1 as Z_{ia} = E_{a,2+i}, the trace-dual of F_{ia}.
class GradedAlgebra {
 public:
  explicit GradedAlgebra(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return n_ + 2; }          // matrix side
  std::size_t dim() const { return basis_.size(); }    // (n+2)^2 - 1

  const std::vector<Matrix>& basis() const { return basis_; }
  int grade(std::size_t k) const { return grade_[k]; }

  std::size_t f_index(std::size_t i, std::size_t a) const { return 2 * i + a; }
  std::size_t g0_begin() const { return 2 * n_; }
  std::size_t g0_end() const { return 2 * n_ + n_ * n_ + 3; }
  std::size_t z_index(std::size_t i, std::size_t a) const {
    return g0_end() + 2 * i + a;
  }

  const Matrix& grading_element() const { return basis_[g0_end() - 1]; }

  /// Trace-free representative of the center coset.
  Matrix canonical(const Matrix& m) const;

  /// m n - n m; commutators are already trace-free.
  Matrix bracket(const Matrix& a, const Matrix& b) const;

  /// Coordinates in the graded basis (canonicalizes first).
  Matrix coords(const Matrix& m) const;
  Matrix from_coords(const Matrix& c) const;

  /// ad of a g_{-1} or g_1 basis element, as dim x dim coordinate matrices;
  /// precomputed for the homology machinery.
  const Matrix& ad_f(std::size_t p) const { return ad_f_[p]; }
  const Matrix& ad_z(std::size_t p) const { return ad_z_[p]; }

 private:
  std::size_t n_;
  std::vector<Matrix> basis_;
  std::vector<int> grade_;
  Matrix diag_solver_;  // maps a diagonal to [h, D_1.., grading] coefficients
  std::vector<Matrix> ad_f_, ad_z_;
};

struct Subalgebra {
  std::string name;
  std::vector<Matrix> basis;  // canonical representatives
};

/// p, p', q = p n p', g0, p+, and the twistor stabilizers r-, r0, r+. Each
/// r^eps is computed as the actual infinitesimal stabilizer of j^eps under
/// m |-> [upper-left block, m] and cross-checked against the closed block
/// form span{id, j^eps} + g_1 + gl(n).
std::map<std::string, Subalgebra> subalgebras(const GradedAlgebra& alg);

/// a m a^{-1}; the adjoint action of the Levi block on the standard
/// structure. Preserves det. Throws on singular a.
Matrix p_action_on_qstd(const Matrix& a, const Matrix& m);

/// Quotient of g by a subalgebra (plus the center, which the trace-free
/// model already removes) with a fixed complement of representatives.
class QuotientModule {
 public:
  QuotientModule(const GradedAlgebra& alg, std::vector<Matrix> sub_basis,
                 std::vector<Matrix> reps, std::string name);

  const GradedAlgebra& algebra() const { return *alg_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<Matrix>& reps() const { return reps_; }
  const std::vector<Matrix>& sub_basis() const { return sub_basis_; }

  /// Representative coordinates of x modulo the subalgebra.
  Matrix project(const Matrix& x) const;
  Matrix lift(const Matrix& rep_coords) const;

  /// Projected adjoint action of a on representative coordinates.
  Matrix projected_ad(const Matrix& a) const;

 private:
  const GradedAlgebra* alg_;
  std::string name_;
  std::vector<Matrix> sub_basis_, reps_;
  Matrix proj_rows_;  // dim(reps) x dim(g)
};

/// g/r^eps with the representative shapes of the stabilizer quotients: two
/// 2x2 complement directions followed by the g_{-1} block.
QuotientModule quotient_mod_r(const GradedAlgebra& alg, int eps);
QuotientModule quotient_mod_q(const GradedAlgebra& alg);
QuotientModule quotient_mod_p(const GradedAlgebra& alg);

/// The canonical structure on g/r^eps: right multiplication of
/// representatives by diag(j^eps, 0), reduced modulo r^eps.
struct TwistorStructure {
  int eps;
  QuotientModule quo;
  Matrix d_block;  // diag(j^eps, 0) in gl(2+n)
  Matrix j;        // action on representative coordinates
};

TwistorStructure j_eps(const GradedAlgebra& alg, int eps);

/// Right multiplication by diag(j^eps,0) maps r^eps + center into itself.
bool j_eps_well_defined(const GradedAlgebra& alg, int eps);

/// The projected adjoint action of every element of r^eps commutes with
/// J^eps.
bool invariance_check(const GradedAlgebra& alg, int eps);

struct InvariantStructureReport {
  std::size_t commutant_dim = 0;
  bool contains_identity = false;
  bool contains_j = false;
  bool commutant_is_id_j_span = false;  // enables the closed-form classification
  // eps = +-1: solutions of J.J = eps id in the commutant that are not
  // scalar multiples of the identity are exactly +-J^eps.
  bool unique_up_to_sign = false;
  // eps = 0: nonzero solutions of J.J = 0 are exactly the nonzero real
  // multiples of J^0.
  bool ray_family = false;
};

InvariantStructureReport invariant_structure_space(const GradedAlgebra& alg, int eps);

struct NijenhuisIdentityReport {
  bool s_vanishes = false;        // the combined bracket identity
  bool lift_independent = false;  // stable under shifting lifts by r^eps
  // The two one-sided identities checked separately; they fail on pairs
  // mixing the Levi and g_{-1} directions and only their sum vanishes.
  bool subidentities_separately = false;
  bool defects_cancel = false;    // A-defect + B-defect = 0 pairwise
};

NijenhuisIdentityReport nijenhuis_identities(const GradedAlgebra& alg, int eps);

struct InvariantComplementReport {
  bool r0_complement_unique = false;   // intertwiner solve has only 0
  bool equals_g_minus_image = false;
  bool j_invariant = false;
  std::size_t j_only_family_dim = 0;   // J-invariant complements are a family
};

InvariantComplementReport invariant_complement(const GradedAlgebra& alg, int eps);

/// Image of ker J^0 under g/r^0 -> g/q equals p'/q.
bool ker_j0_projects_to_v(const GradedAlgebra& alg);

struct StabilizerReport {
  bool kernel_is_r0 = false;
  bool character_nonzero = false;
};

/// Infinitesimal character of q on the 1-dimensional module p/q; its kernel
/// inside q is r^0.
StabilizerReport stabilizer_on_d(const GradedAlgebra& alg);

/// Solves B(E, A) = lambda'(A) over the center of g_0, with B the trace
/// form on trace-free representatives. lambda' is given by its values on
/// the g_0 part of the graded basis and must vanish on the semisimple part.
Matrix scaling_element(const GradedAlgebra& alg,
                       const std::vector<Rational>& lambda_on_g0);

/// lambda'(A) = B(grading element, A) on the g_0 basis; solving with it
/// recovers the grading element.
std::vector<Rational> grading_character(const GradedAlgebra& alg);

}  // namespace segre
