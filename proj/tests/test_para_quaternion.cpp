#include <doctest.h>

#include "segre/para_quaternion.hpp"

using namespace segre;

namespace {

struct Lcg {
  unsigned long state = 7;
  long raw() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>(state >> 33);
  }
  Rational small() { return Rational(raw() % 9 - 4); }
};

ParaQuaternion random_q(Lcg& gen) {
  return {gen.small(), gen.small(), gen.small(), gen.small()};
}

}  // namespace

TEST_CASE("defining relations") {
  const auto one = ParaQuaternion::one(), i = ParaQuaternion::i(),
             j = ParaQuaternion::j(), k = ParaQuaternion::k();
  CHECK(mul(i, i) == one);
  CHECK(mul(j, j) == one);
  CHECK(mul(k, k) == -one);
  CHECK(mul(i, j) == k);
  CHECK(mul(j, i) == -k);
  CHECK(mul(i, k) == j);
  CHECK(mul(k, i) == -j);
  CHECK(mul(j, k) == -i);
  CHECK(mul(k, j) == i);

  Lcg gen;
  const ParaQuaternion q = random_q(gen);
  CHECK(mul(one, q) == q);
  CHECK(mul(q, one) == q);
}

TEST_CASE("associativity on all basis triples") {
  const ParaQuaternion b[4] = {ParaQuaternion::one(), ParaQuaternion::i(),
                               ParaQuaternion::j(), ParaQuaternion::k()};
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
}

TEST_CASE("norm and inner") {
  CHECK(norm_sq(ParaQuaternion::k()) == Rational(1));
  CHECK(norm_sq(ParaQuaternion::i()) == Rational(-1));
  CHECK(norm_sq(ParaQuaternion::j()) == Rational(-1));
  CHECK(norm_sq(ParaQuaternion{1, 1, 0, 0}) == Rational(0));  // (1+i)(1-i) = 0
  CHECK(inner(ParaQuaternion::i(), ParaQuaternion::j()) == Rational(0));

  Lcg gen;
  for (int t = 0; t < 50; ++t) {
    const ParaQuaternion p = random_q(gen), q = random_q(gen);
    CHECK(norm_sq(mul(p, q)) == norm_sq(p) * norm_sq(q));
    // norm_sq is the diagonal of the polar form and q qbar is real.
    const ParaQuaternion qc = mul(q, conj(q));
    CHECK(qc.b == 0);
    CHECK(qc.c == 0);
    CHECK(qc.d == 0);
    CHECK(qc.a == norm_sq(q));
    CHECK(mul(q, conj(q)) == mul(conj(q), q));
  }
}

TEST_CASE("matrix model") {
  CHECK(to_matrix(ParaQuaternion::one()) == Matrix::identity(2));
  CHECK(to_matrix(ParaQuaternion::i()) == Matrix::of({{1, 0}, {0, -1}}));
  CHECK(to_matrix(ParaQuaternion::j()) == Matrix::of({{0, 1}, {1, 0}}));
  CHECK(to_matrix(ParaQuaternion::k()) == Matrix::of({{0, 1}, {-1, 0}}));
  CHECK(from_matrix(Matrix::identity(2)) == ParaQuaternion::one());

  Lcg gen;
  for (int t = 0; t < 30; ++t) {
    const ParaQuaternion p = random_q(gen), q = random_q(gen);
    CHECK(to_matrix(mul(p, q)) == to_matrix(p) * to_matrix(q));
    CHECK(det(to_matrix(p)) == norm_sq(p));
    CHECK(from_matrix(to_matrix(p)) == p);
    Matrix m(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m.at(r, c) = gen.small();
    CHECK(to_matrix(from_matrix(m)) == m);
  }
  CHECK_THROWS_AS(from_matrix(Matrix::identity(3)), std::invalid_argument);
}

TEST_CASE("imaginary squares") {
  Lcg gen;
  for (int t = 0; t < 20; ++t) {
    ParaQuaternion q = random_q(gen);
    q.a = 0;
    CHECK(mul(q, q) == ParaQuaternion::one() * (-norm_sq(q)));
  }
}

TEST_CASE("unit conjugation") {
  const auto i = ParaQuaternion::i(), k = ParaQuaternion::k();
  CHECK(unit_conjugation(ParaQuaternion::one(), i) == i);
  CHECK(unit_conjugation(k, i) == -i);  // k i kbar in the matrix model
  CHECK(unit_conjugation(k, k) == k);
  CHECK_THROWS_AS(unit_conjugation(i, k), std::invalid_argument);  // |i|^2 = -1

  // Units generated by elements of norm one; conjugation preserves the
  // real/imaginary split, the norm and the inner product.
  const ParaQuaternion gens[4] = {{rat(5, 4), rat(3, 4), 0, 0},
                                  {rat(5, 3), 0, rat(4, 3), 0},
                                  {rat(3, 5), 0, 0, rat(4, 5)},
                                  ParaQuaternion::k()};
  Lcg gen;
  for (int t = 0; t < 20; ++t) {
    ParaQuaternion u = ParaQuaternion::one();
    for (int s = 0; s < 3; ++s) u = mul(u, gens[gen.raw() % 4]);
    REQUIRE(norm_sq(u) == Rational(1));
    const ParaQuaternion p = random_q(gen), q = random_q(gen);
    const ParaQuaternion cp = unit_conjugation(u, p);
    CHECK(cp.a == p.a);
    ParaQuaternion im = p;
    im.a = 0;
    CHECK(unit_conjugation(u, im).a == 0);  // Im H_s is invariant
    CHECK(norm_sq(cp) == norm_sq(p));
    CHECK(inner(cp, unit_conjugation(u, q)) == inner(p, q));
  }
}
