#pragma once

#include <vector>

#include "segre/bilinear.hpp"
#include "segre/graded.hpp"

namespace segre {

/// Degrees 1-3 of the complex of alternating maps on g_{-1} with values in
/// g, with the cohomology differential of the abelian algebra g_{-1} and
/// the homology boundary of p_+ transported through the trace-form duality
/// g_1 = (g_{-1})*. Cochain coordinates: flat over (ordered tuple of
/// g_{-1} indices, value coordinate in the graded basis).
class KostantComplex {
 public:
  explicit KostantComplex(const GradedAlgebra& alg);

  const GradedAlgebra& algebra() const { return *alg_; }
  std::size_t m() const { return 2 * alg_->n(); }  // dim g_{-1}
  std::size_t pairs() const { return pair_of_.size(); }
  std::size_t triples() const { return triple_of_.size(); }
  std::size_t pair_index(std::size_t a, std::size_t b) const;  // a < b

  /// Differential, degree 1 -> 2 and 2 -> 3 (value grade drops by one).
  Matrix d1() const;
  Matrix d2() const;
  /// Codifferential, degree 1 -> 0, 2 -> 1 and 3 -> 2 (value grade rises).
  Matrix c1() const;
  Matrix c2() const;
  Matrix c3() const;

  /// Basis of ker d2 n ker c2 among degree-2 cochains with values in the
  /// given grade (homogeneity = grade + 2), in restricted coordinates over
  /// (pair index, index within the grade).
  std::vector<Matrix> harmonic2(int value_grade) const;

  /// Indices of the graded basis lying in a grade.
  std::vector<std::size_t> grade_indices(int grade) const;

  /// Embeds restricted degree-2 coordinates into the full coordinate space.
  Matrix embed2(const Matrix& restricted, int value_grade) const;

  /// Degree-2 cochain with g_{-1} values as a W-valued bilinear map and
  /// back; the g_{-1} basis order matches the W basis order.
  BilinearMap to_bilinear(const Matrix& full_coords) const;
  Matrix from_bilinear(const BilinearMap& phi) const;

  /// Swaps the R^2-index of the two form slots on full degree-2 coordinates.
  Matrix form_swap_u(const Matrix& full_coords) const;

 private:
  const GradedAlgebra* alg_;
  std::vector<std::pair<std::size_t, std::size_t>> pair_of_;
  std::vector<std::size_t> pair_lookup_;  // m*m table
  std::vector<std::array<std::size_t, 3>> triple_of_;
};

struct HarmonicSummary {
  std::size_t hom1_dim = 0, hom2_dim = 0, hom3_dim = 0;
  bool d_squared_zero = false, c_squared_zero = false;
  bool hom1_u_symmetric = false;   // form factor in the S^2 R^2 summand
  bool hom1_traces_vanish = false;
  std::size_t hom1_oracle_dim = 0;  // product of trace-free factor dimensions
  // n = 2: the homogeneity-2 space splits into the two symmetry types
  // (S^2 E (x) L^2 F* (x) sl(E)) and (L^2 E (x) S^2 F* (x) sl(F)).
  std::size_t k1_dim = 0, k2_dim = 0;
  bool k_split_clean = false;
};

HarmonicSummary kostant_harmonics(const GradedAlgebra& alg);

struct PhiCounterexampleReport {
  bool in_harmonic = false;
  bool type02_wrt_jplus = false;
  bool part02_nonzero_wrt_jminus = false;  // [[0,-1],[1,0]]
  bool part02_nonzero_wrt_jzero = false;   // [[0,0],[1,0]]
};

/// The explicit harmonic homogeneity-1 element with nonvanishing degenerate
/// parts; needs n >= 3.
PhiCounterexampleReport phi_counterexample(const GradedAlgebra& alg);
BilinearMap phi_witness(const GradedAlgebra& alg);

struct TorsionReport {
  bool intersection_zero = false;  // no harmonic element has all (0,2)-parts zero
  bool stable = false;             // unchanged under extra random conjugates
  std::size_t family_size = 0;
};

/// Assembles the conditions "(0,2)-part with respect to A vanishes" over a
/// finite conjugate family of eps-structures and intersects them with the
/// harmonic homogeneity-1 space. Needs n >= 3.
TorsionReport no_invisible_torsion(const GradedAlgebra& alg, int eps,
                                   std::size_t extra_conjugates = 5);

}  // namespace segre
