#include <doctest.h>

#include "segre/json_io.hpp"

using namespace segre;

namespace {

struct Lcg {
  unsigned long state = 47;
  long raw() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>(state >> 33);
  }
  Rational value() {
    const long num = raw() % 19 - 9;
    const long den = raw() % 7 + 1;
    return rat(num, den);
  }
};

}  // namespace

TEST_CASE("matrix round trip") {
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Matrix m(2 + t % 3, 1 + t % 4);
    for (auto& e : m.entries()) e = gen.value();
    CHECK(matrix_from_json(to_json(m)) == m);
  }
  // Integer-valued entries encode as JSON integers, fractions as strings.
  const std::string enc = to_json(Matrix::of({{2, 3}, {4, 5}}));
  CHECK(enc.find("\"entries\":[2,3,4,5]") != std::string::npos);
}

TEST_CASE("para-quaternion round trip") {
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    const ParaQuaternion q{gen.value(), gen.value(), gen.value(), gen.value()};
    CHECK(para_quaternion_from_json(to_json(q)) == q);
  }
}

TEST_CASE("tensor and structure round trips") {
  Lcg gen;
  TensorW x(3, 2);
  for (auto& e : x.entries()) e = gen.value();
  CHECK(tensor_w_from_json(tensor_w_to_json(x)) == x);

  const EpsilonStructure a = j_minus();
  CHECK(epsilon_structure_from_json(to_json(a)) == a);
}

TEST_CASE("bilinear round trip") {
  Lcg gen;
  for (bool vec : {false, true}) {
    BilinearMap phi = vec ? BilinearMap::vector(2) : BilinearMap::scalar(2);
    for (std::size_t k = 0; k < phi.values().size(); ++k)
      phi.values().flat(k) = gen.value();
    CHECK(bilinear_from_json(to_json(phi)) == phi);
  }
}

TEST_CASE("field config") {
  const FieldConfig cfg = field_config_from_json(
      R"({"family":"tangent-shear","n":2,"params":[1.0,0.5,0.25],
          "grid":{"min":[-1,-1,-1,-1],"max":[1,1,1,1],"steps":5},"h":1e-3})");
  CHECK(cfg.family == "tangent-shear");
  CHECK(cfg.n == 2);
  CHECK(cfg.params.size() == 3);
  CHECK(cfg.grid.steps == 5);
  CHECK(cfg.h == doctest::Approx(1e-3));

  // Defaults fill in the grid and step size.
  const FieldConfig defaults = field_config_from_json(R"({"family":"flat"})");
  CHECK(defaults.grid.steps == 5);
  CHECK(defaults.grid.min.size() == 4);
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(matrix_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows":2,"cols":2,"entries":[1,2,3]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows":1,"cols":1,"entries":[1.5]})"),
                  std::invalid_argument);  // floats are not exact rationals
  CHECK_THROWS_AS(bilinear_from_json(R"({"n":2,"arity":"boolean","values":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(field_config_from_json(R"({"n":2})"), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_structure_from_json(R"({"m":[[1,0]]})"),
                  std::invalid_argument);
}
