#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace segre {

/// Builtin families of structure fields over coordinate charts, evaluated
/// pointwise in binary64. Every family carries a closed-form Nijenhuis
/// oracle so that each numeric claim has an independent reference.
///
///  - "flat": constant right-multiplication field on R^{2n};
///    params = (b, c, d), the block b*i + c*j + d*k; eps = b^2 + c^2 - d^2.
///  - "tangent-shear" (n = 2, eps = 0): coordinates (x1, x2, y1, y2),
///    A dx_1 = dy_1, A dx_2 = (p0 + p1 y1 + p2 y1^3) dy_2, A dy_b = 0;
///    params = (p0, p1, p2). The kernel distribution is constant, hence
///    involutive, while N_A(dx_1, dx_2) = -(p1 + 3 p2 y1^2) dy_2.
///  - "para-graph" (n = 2, eps = 1): coordinates (a1, a2, b1, b2),
///    A = [[I, 0], [2 B(a), -I]] with B the Jacobian of psi_1 = s a1 a2^3
///    plus a curl term: B11 = s a2^3, B12 = 3 s a1 a2^2 + c a1, B21 =
///    B22 = 0; params = (s, c). For c = 0 both eigendistributions are
///    involutive and N_A = 0; otherwise N_A(da_1, da_2) = -4c db_1.
class StructureField {
 public:
  static StructureField make(const std::string& family, int n,
                             std::vector<double> params);
  static std::vector<std::string> builtin_families();

  const std::string& family() const { return family_; }
  int n() const { return n_; }
  int dimension() const { return 2 * n_; }
  int epsilon() const { return eps_; }
  const std::vector<double>& params() const { return params_; }

  Eigen::MatrixXd evaluate(const Eigen::VectorXd& x) const;

  /// Closed-form N_A(d_i, d_j) at x.
  Eigen::VectorXd nijenhuis_symbolic(const Eigen::VectorXd& x, int i, int j) const;

 private:
  std::string family_;
  int n_ = 0;
  int eps_ = 0;
  std::vector<double> params_;
};

struct NijenhuisResult {
  Eigen::VectorXd point;
  int i = 0, j = 0;
  Eigen::VectorXd value;
  double max_abs = 0.0;
};

/// N_A(d_i, d_j) by central differences on the vector fields A d_i, A d_j;
/// the bracket of coordinate fields vanishes. Second order in h.
NijenhuisResult nijenhuis_numeric(const StructureField& field,
                                  const Eigen::VectorXd& x, int i, int j,
                                  double h);

/// Max over frame pairs of the component of the finite-difference bracket
/// outside the distribution (eigendistributions for eps = 1, the kernel
/// distribution for eps = 0), measured with a pointwise orthogonal
/// projector.
double frobenius_residual(const StructureField& field, const Eigen::VectorXd& x,
                          double h);

struct GridSpec {
  std::vector<double> min, max;
  int steps = 0;  // points per axis
};

struct SweepSummary {
  double max_abs = 0.0;                     // over grid and frame pairs
  std::vector<double> per_pair_max;         // indexed over i < j pairs
  double max_frobenius = 0.0;               // where the family defines one
  double max_oracle_deviation = 0.0;        // |numeric - symbolic|
  std::size_t points = 0;
};

SweepSummary sweep(const StructureField& field, const GridSpec& grid, double h);

/// Versioned per-family tolerance table (defaults at h = 1e-3).
struct FamilyTolerances {
  double nijenhuis_flat_max = 1e-10;
  double frobenius_zero_max = 1e-8;
  double shear_nijenhuis_min = 0.1;
  double graph_oracle_factor = 4.0;  // |N_fd - N_sym| <= factor * h^2
  double graph_integrable_max = 1e-6;
  double nonintegrable_min = 0.01;
};

FamilyTolerances tolerances();

}  // namespace segre
