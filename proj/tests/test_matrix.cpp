#include <doctest.h>

#include "segre/matrix.hpp"
#include "segre/multi_array.hpp"

using namespace segre;

namespace {

struct Lcg {
  unsigned long state = 99;
  long raw() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>(state >> 33);
  }
  Rational small() { return Rational(raw() % 9 - 4); }
};

Matrix random_matrix(Lcg& gen, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (auto& e : m.entries()) e = gen.small();
  return m;
}

}  // namespace

TEST_CASE("rational invariants") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(1, -2).get_den() == 2);  // denominator stays positive
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(to_string(rat(-3, 7)) == "-3/7");
  CHECK(rat_parse("22/7") == rat(22, 7));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("null space") {
  CHECK(null_space(Matrix::identity(2)).empty());

  const auto line = null_space(Matrix::of({{1, -1}}));
  REQUIRE(line.size() == 1);
  CHECK(line[0].at(0, 0) == line[0].at(1, 0));

  // Skew-symmetry constraints on 2x2 bilinear forms B: rows for every
  // ordered pair demand B_ab + B_ba = 0, plus the two diagonal rows again.
  // Unknown order: (B11, B12, B21, B22).
  const Matrix constraints = Matrix::of({{2, 0, 0, 0},
                                         {0, 1, 1, 0},
                                         {0, 1, 1, 0},
                                         {0, 0, 0, 2},
                                         {2, 0, 0, 0},
                                         {0, 0, 0, 2}});
  const auto skew = null_space(constraints);
  REQUIRE(skew.size() == 1);
  CHECK(skew[0].at(0, 0) == 0);
  CHECK(skew[0].at(3, 0) == 0);
  CHECK(skew[0].at(1, 0) == -skew[0].at(2, 0));
}

TEST_CASE("rank") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::of({{1, 0}, {2, 0}})) == 1);
  CHECK(rank(Matrix::identity(2)) == 2);
}

TEST_CASE("solve") {
  const auto sol = solve_linear_system(Matrix::identity(2), Matrix::of({{3}, {5}}));
  REQUIRE(sol.has_value());
  CHECK(sol->particular == Matrix::of({{3}, {5}}));
  CHECK(sol->null_basis.empty());

  const auto under = solve_linear_system(Matrix::of({{1, 1}}), Matrix::of({{2}}));
  REQUIRE(under.has_value());
  CHECK(under->particular.at(0, 0) + under->particular.at(1, 0) == 2);
  CHECK(under->null_basis.size() == 1);

  CHECK_FALSE(
      solve_linear_system(Matrix::of({{1}, {1}}), Matrix::of({{0}, {1}})));
  CHECK_THROWS_AS(solve_linear_system(Matrix::identity(2), Matrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("signature") {
  CHECK(signature(Matrix::of({{1, 0}, {0, -1}})) == Inertia{1, 1, 0});
  CHECK(signature(Matrix(2, 2)) == Inertia{0, 0, 2});

  // Gram matrix of the polar form of det on 2x2 matrices in the E_{ab}
  // basis: delta(E11,E22) = 1/2, delta(E12,E21) = -1/2, rest zero.
  Matrix gram(4, 4);
  gram.at(0, 3) = rat(1, 2);
  gram.at(3, 0) = rat(1, 2);
  gram.at(1, 2) = rat(-1, 2);
  gram.at(2, 1) = rat(-1, 2);
  CHECK(signature(gram) == Inertia{2, 2, 0});

  CHECK_THROWS_AS(signature(Matrix::of({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("rank-nullity and exactness") {
  Lcg gen;
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(gen, 3 + t % 3, 2 + t % 4);
    const auto ns = null_space(m);
    CHECK(rank(m) + ns.size() == m.cols());
    for (const auto& v : ns) CHECK((m * v).is_zero());
  }
}

TEST_CASE("signature congruence invariance") {
  Lcg gen;
  Matrix sym(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      sym.at(i, j) = gen.small();
      sym.at(j, i) = sym.at(i, j);
    }
  const Inertia base = signature(sym);
  int done = 0;
  while (done < 10) {
    const Matrix g = random_matrix(gen, 4, 4);
    if (det(g) == 0) continue;
    CHECK(signature(g.transpose() * sym * g) == base);
    ++done;
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(det(Matrix::of({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(det(Matrix::of({{1, 2}, {2, 4}})) == Rational(0));
  const auto inv = inverse(Matrix::of({{1, 2}, {3, 4}}));
  REQUIRE(inv.has_value());
  CHECK(*inv * Matrix::of({{1, 2}, {3, 4}}) == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::of({{1, 2}, {2, 4}})));
}

TEST_CASE("multi array indexing") {
  MultiArray a({2, 3, 4});
  CHECK(a.size() == 24);
  a.at({1, 2, 3}) = 7;
  CHECK(a.flat(23) == 7);  // last index fastest
  a.at({0, 1, 0}) = 5;
  CHECK(a.flat(4) == 5);
  CHECK_THROWS_AS(a.at({2, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(a.at({0, 0}), std::invalid_argument);
}
