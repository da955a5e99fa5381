#pragma once

#include <string>

#include "segre/bilinear.hpp"
#include "segre/epsilon.hpp"
#include "segre/fields.hpp"
#include "segre/matrix.hpp"
#include "segre/para_quaternion.hpp"

namespace segre {

// JSON wire formats. Rationals encode as integers when the denominator is
// one and as "p/q" strings otherwise; exact values never render as floats.
// All parsers throw std::invalid_argument with a diagnostic on bad input.

std::string to_json(const Matrix& m);          // {"rows":r,"cols":c,"entries":[..]}
Matrix matrix_from_json(const std::string& text);

std::string to_json(const ParaQuaternion& q);  // {"a":..,"b":..,"c":..,"d":..}
ParaQuaternion para_quaternion_from_json(const std::string& text);

std::string tensor_w_to_json(const TensorW& x);  // {"n":n,"entries":[[..],..]}
TensorW tensor_w_from_json(const std::string& text);

std::string to_json(const EpsilonStructure& a);  // {"m":[[..],[..]]}
EpsilonStructure epsilon_structure_from_json(const std::string& text);

// {"n":n,"arity":"scalar"|"vector","values":[..]} flattened lexicographically
std::string to_json(const BilinearMap& phi);
BilinearMap bilinear_from_json(const std::string& text);

struct FieldConfig {
  std::string family;
  int n = 2;
  std::vector<double> params;  // empty = family defaults
  GridSpec grid;
  double h = 1e-3;
};

// {"family":..,"n":..,"params":[..],"grid":{"min":[..],"max":[..],"steps":k},
//  "h":..}; params, grid and h are optional.
FieldConfig field_config_from_json(const std::string& text);

}  // namespace segre
