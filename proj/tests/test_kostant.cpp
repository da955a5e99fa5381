#include <doctest.h>

#include "segre/kostant.hpp"

using namespace segre;

TEST_CASE("complexes compose to zero") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    const KostantComplex kc(alg);
    CHECK((kc.d2() * kc.d1()).is_zero());
    CHECK((kc.c1() * kc.c2()).is_zero());
    CHECK((kc.c2() * kc.c3()).is_zero());
  }
}

TEST_CASE("harmonic components for n = 2") {
  const GradedAlgebra alg(2);
  const HarmonicSummary s = kostant_harmonics(alg);
  CHECK(s.d_squared_zero);
  CHECK(s.c_squared_zero);
  CHECK(s.hom1_dim == 0);  // no torsion component in the lowest dimension
  CHECK(s.hom1_oracle_dim == 0);
  CHECK(s.hom2_dim == 10);
  CHECK(s.hom3_dim == 0);
  // Two five-dimensional components, separated by the form symmetry and the
  // value block.
  CHECK(s.k_split_clean);
  CHECK(s.k1_dim == 5);
  CHECK(s.k2_dim == 5);
}

TEST_CASE("harmonic components for n = 3") {
  const GradedAlgebra alg(3);
  const HarmonicSummary s = kostant_harmonics(alg);
  CHECK(s.d_squared_zero);
  CHECK(s.c_squared_zero);
  // Trace-kernel product: 4 * 6.
  CHECK(s.hom1_oracle_dim == 24);
  CHECK(s.hom1_dim == 24);
  CHECK(s.hom1_u_symmetric);
  CHECK(s.hom1_traces_vanish);
  // Homogeneity 2 is the Cartan component of L2 R^2 x S2 R^3* x sl(3):
  // dimension (1+1)(3+1)(1+3+2)/2 = 24.
  CHECK(s.hom2_dim == 24);
  CHECK(s.hom3_dim == 0);
}

TEST_CASE("explicit harmonic witness") {
  const GradedAlgebra alg(3);
  const PhiCounterexampleReport rep = phi_counterexample(alg);
  CHECK(rep.in_harmonic);
  CHECK(rep.type02_wrt_jplus);
  CHECK(rep.part02_nonzero_wrt_jminus);
  CHECK(rep.part02_nonzero_wrt_jzero);

  CHECK_THROWS_AS(phi_counterexample(GradedAlgebra(2)), std::invalid_argument);
}

TEST_CASE("no invisible torsion") {
  const GradedAlgebra alg(3);
  for (int eps = -1; eps <= 1; ++eps) {
    const TorsionReport rep = no_invisible_torsion(alg, eps, 5);
    CHECK(rep.intersection_zero);
    CHECK(rep.stable);
    CHECK(rep.family_size == 11);
  }
  CHECK_THROWS_AS(no_invisible_torsion(GradedAlgebra(2), 1, 0),
                  std::invalid_argument);
}

TEST_CASE("cochain round trips") {
  const GradedAlgebra alg(3);
  const KostantComplex kc(alg);
  const BilinearMap phi = phi_witness(alg);
  const Matrix coords = kc.from_bilinear(phi);
  CHECK(kc.to_bilinear(coords) == phi);
  // The swap of the R^2 slots is an involution.
  CHECK(kc.form_swap_u(kc.form_swap_u(coords)) == coords);
}
