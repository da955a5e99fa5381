#include <doctest.h>

#include "segre/epsilon.hpp"
#include "segre/graded.hpp"

using namespace segre;

namespace {

struct Lcg {
  unsigned long state = 31;
  long raw() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>(state >> 33);
  }
};

}  // namespace

TEST_CASE("graded basis and brackets") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    CHECK(alg.dim() == (n + 2) * (n + 2) - 1);

    // g_{-1} is abelian and the grading is respected.
    for (std::size_t x = 0; x < alg.dim(); ++x)
      for (std::size_t y = 0; y < alg.dim(); ++y) {
        const Matrix br = alg.bracket(alg.basis()[x], alg.basis()[y]);
        const int target = alg.grade(x) + alg.grade(y);
        if (alg.grade(x) == -1 && alg.grade(y) == -1) CHECK(br.is_zero());
        if (target < -1 || target > 1) {
          CHECK(br.is_zero());
          continue;
        }
        const Matrix c = alg.coords(br);
        for (std::size_t k = 0; k < alg.dim(); ++k)
          if (alg.grade(k) != target) CHECK(c.at(k, 0) == 0);
      }

    // The grading element acts on g_j by j; in particular by -1 on g_{-1}.
    const Matrix& e = alg.grading_element();
    for (std::size_t k = 0; k < alg.dim(); ++k)
      CHECK(alg.bracket(e, alg.basis()[k]) ==
            alg.basis()[k] * Rational(alg.grade(k)));

    // Round trip through coordinates.
    Lcg gen;
    Matrix m(alg.size(), alg.size());
    for (auto& v : m.entries()) v = Rational(gen.raw() % 9 - 4);
    const Matrix c = alg.coords(m);
    CHECK(alg.from_coords(c) == alg.canonical(m));
  }
}

TEST_CASE("jacobi identity on random triples") {
  const GradedAlgebra alg(3);
  Lcg gen;
  for (int t = 0; t < 200; ++t) {
    const Matrix& a = alg.basis()[gen.raw() % alg.dim()];
    const Matrix& b = alg.basis()[gen.raw() % alg.dim()];
    const Matrix& c = alg.basis()[gen.raw() % alg.dim()];
    CHECK((alg.bracket(alg.bracket(a, b), c) + alg.bracket(alg.bracket(b, c), a) +
           alg.bracket(alg.bracket(c, a), b))
              .is_zero());
  }
}

TEST_CASE("subalgebras and quotient dimensions") {
  for (std::size_t n : {2, 3, 4}) {
    const GradedAlgebra alg(n);
    auto subs = subalgebras(alg);
    auto flat = [&](const char* name) {
      std::vector<Matrix> v;
      for (const auto& m : subs.at(name).basis) v.push_back(alg.coords(m));
      return v;
    };
    const auto p = flat("p"), pp = flat("p'"), q = flat("q");
    CHECK(span_dimension(p) - span_dimension(q) == 1);
    CHECK(span_dimension(pp) - span_dimension(q) == n);

    std::vector<Matrix> uni = p;
    uni.insert(uni.end(), pp.begin(), pp.end());
    CHECK(span_dimension(p) + span_dimension(pp) - span_dimension(uni) ==
          span_dimension(q));

    for (const char* rn : {"r-", "r0", "r+"}) {
      const auto r = flat(rn);
      CHECK(alg.dim() - span_dimension(r) == 2 * n + 2);
      for (const auto& x : subs.at(rn).basis)
        for (const auto& y : subs.at(rn).basis)
          CHECK(in_span(r, alg.coords(alg.bracket(x, y))));
    }

    // The stabilizer quotient representatives for the rotation and the
    // nilpotent structure match the displayed block shapes.
    const QuotientModule qm = quotient_mod_r(alg, -1);
    CHECK(qm.reps()[0].at(0, 0) == 1);
    CHECK(qm.reps()[0].at(1, 1) == -1);
    CHECK(qm.reps()[1].at(0, 1) == 1);
    CHECK(qm.reps()[1].at(1, 0) == 1);
    const QuotientModule q0 = quotient_mod_r(alg, 0);
    CHECK(q0.reps()[0].at(0, 0) == 1);
    CHECK(q0.reps()[1].at(1, 0) == 1);
  }
}

TEST_CASE("levi action on the structure space") {
  CHECK(p_action_on_qstd(Matrix::identity(2), j_plus().block()) ==
        j_plus().block());
  CHECK(p_action_on_qstd(Matrix::of({{1, 1}, {0, 1}}), j_plus().block()) ==
        Matrix::of({{1, -2}, {0, -1}}));
  CHECK(det(Matrix::of({{1, -2}, {0, -1}})) == Rational(-1));

  // Orbit witness: a j+ = [[0,1],[1,0]] a with invertible a.
  const Matrix a = Matrix::of({{1, -1}, {1, 1}});
  CHECK(a * j_plus().block() == Matrix::of({{0, 1}, {1, 0}}) * a);
  CHECK(det(a) != 0);

  CHECK_THROWS_AS(p_action_on_qstd(Matrix::of({{1, 1}, {1, 1}}), j_plus().block()),
                  std::invalid_argument);
}

TEST_CASE("canonical structure on the stabilizer quotient") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    for (int eps = -1; eps <= 1; ++eps) {
      CHECK(j_eps_well_defined(alg, eps));
      const TwistorStructure tw = j_eps(alg, eps);
      CHECK(tw.quo.dim() == 2 * n + 2);
      CHECK(tw.j * tw.j == Matrix::identity(2 * n + 2) * Rational(eps));
      CHECK(invariance_check(alg, eps));
    }
    CHECK(null_space(j_eps(alg, 0).j).size() == n + 1);
    const Matrix jp = j_eps(alg, 1).j;
    const Matrix id = Matrix::identity(2 * n + 2);
    CHECK(null_space(jp - id).size() == n + 1);
    CHECK(null_space(jp + id).size() == n + 1);
  }
}

TEST_CASE("invariant structures are essentially unique") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    for (int eps = -1; eps <= 1; ++eps) {
      const InvariantStructureReport rep = invariant_structure_space(alg, eps);
      CHECK(rep.contains_identity);
      CHECK(rep.contains_j);
      CHECK(rep.commutant_dim == 2);
      CHECK(rep.commutant_is_id_j_span);
      if (eps != 0) CHECK(rep.unique_up_to_sign);
      if (eps == 0) CHECK(rep.ray_family);
    }
  }
}

TEST_CASE("bracket identity S = 0") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    for (int eps = -1; eps <= 1; ++eps) {
      const NijenhuisIdentityReport rep = nijenhuis_identities(alg, eps);
      CHECK(rep.s_vanishes);
      CHECK(rep.lift_independent);
      CHECK(rep.defects_cancel);
      // The two one-sided identities do not hold pair by pair; only their
      // sum vanishes. Pairs mixing a Levi representative with a g_{-1}
      // representative witness the failure.
      CHECK_FALSE(rep.subidentities_separately);
    }
  }
}

TEST_CASE("invariant complement") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    for (int eps = -1; eps <= 1; ++eps) {
      const InvariantComplementReport rep = invariant_complement(alg, eps);
      CHECK(rep.r0_complement_unique);
      CHECK(rep.equals_g_minus_image);
      CHECK(rep.j_invariant);
      // Complements invariant under J alone form a 2n-parameter family;
      // the stabilizer pins the horizontal one down, J by itself does not.
      CHECK(rep.j_only_family_dim == 2 * n);
    }
  }
}

TEST_CASE("kernel of J0 projects onto the distinguished subspace") {
  CHECK(ker_j0_projects_to_v(GradedAlgebra(2)));
  CHECK(ker_j0_projects_to_v(GradedAlgebra(3)));
}

TEST_CASE("stabilizer of the line module") {
  for (std::size_t n : {2, 3}) {
    const StabilizerReport rep = stabilizer_on_d(GradedAlgebra(n));
    CHECK(rep.kernel_is_r0);
    CHECK(rep.character_nonzero);
  }
}

TEST_CASE("scaling element") {
  for (std::size_t n : {2, 3}) {
    const GradedAlgebra alg(n);
    const std::size_t g0_dim = alg.g0_end() - alg.g0_begin();

    CHECK(scaling_element(alg, std::vector<Rational>(g0_dim, Rational(0)))
              .is_zero());

    const Matrix e = scaling_element(alg, grading_character(alg));
    CHECK(e == alg.grading_element());
    // Central in g_0, acts by +1 on g_1.
    for (std::size_t k = alg.g0_begin(); k < alg.g0_end(); ++k)
      CHECK(alg.bracket(e, alg.basis()[k]).is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < 2; ++a)
        CHECK(alg.bracket(e, alg.basis()[alg.z_index(i, a)]) ==
              alg.basis()[alg.z_index(i, a)]);

    // The trace form is nondegenerate on the center of g_0.
    CHECK((alg.grading_element() * alg.grading_element()).trace() != 0);

    std::vector<Rational> bad(g0_dim, Rational(0));
    bad[0] = 1;
    CHECK_THROWS_AS(scaling_element(alg, bad), std::invalid_argument);
  }
}
