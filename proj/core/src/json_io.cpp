#include "segre/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace segre {

namespace {

using nlohmann::json;

json rational_to_value(const Rational& r) {
  if (is_integer(r)) {
    if (r.get_num().fits_slong_p()) return json(r.get_num().get_si());
    return json(to_string(r));
  }
  return json(to_string(r));
}

Rational rational_from_value(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw std::invalid_argument("rational: expected integer or 'p/q' string");
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

}  // namespace

std::string to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (const Rational& e : m.entries()) entries.push_back(rational_to_value(e));
  j["entries"] = std::move(entries);
  return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix: need rows, cols, entries");
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    throw std::invalid_argument("matrix: entry count must be rows*cols");
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k)
    m.entries()[k] = rational_from_value(entries[k]);
  return m;
}

std::string to_json(const ParaQuaternion& q) {
  json j;
  j["a"] = rational_to_value(q.a);
  j["b"] = rational_to_value(q.b);
  j["c"] = rational_to_value(q.c);
  j["d"] = rational_to_value(q.d);
  return j.dump();
}

ParaQuaternion para_quaternion_from_json(const std::string& text) {
  const json j = parse(text);
  for (const char* key : {"a", "b", "c", "d"})
    if (!j.contains(key))
      throw std::invalid_argument("para-quaternion: need a, b, c, d");
  return {rational_from_value(j["a"]), rational_from_value(j["b"]),
          rational_from_value(j["c"]), rational_from_value(j["d"])};
}

std::string tensor_w_to_json(const TensorW& x) {
  json j;
  j["n"] = x.rows();
  json rows = json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (std::size_t a = 0; a < x.cols(); ++a)
      row.push_back(rational_to_value(x.at(i, a)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

TensorW tensor_w_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("tensor: need n and entries");
  const std::size_t n = j["n"].get<std::size_t>();
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("tensor: need n rows");
  TensorW x(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2)
      throw std::invalid_argument("tensor: each row has two entries");
    for (std::size_t a = 0; a < 2; ++a)
      x.at(i, a) = rational_from_value(rows[i][a]);
  }
  return x;
}

std::string to_json(const EpsilonStructure& a) {
  json j;
  json rows = json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < 2; ++c)
      row.push_back(rational_to_value(a.block().at(i, c)));
    rows.push_back(std::move(row));
  }
  j["m"] = std::move(rows);
  return j.dump();
}

EpsilonStructure epsilon_structure_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("m")) throw std::invalid_argument("structure: need m");
  const json& rows = j["m"];
  if (!rows.is_array() || rows.size() != 2)
    throw std::invalid_argument("structure: m must be 2x2");
  Matrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2)
      throw std::invalid_argument("structure: m must be 2x2");
    for (std::size_t c = 0; c < 2; ++c) m.at(i, c) = rational_from_value(rows[i][c]);
  }
  return EpsilonStructure::make(m, /*allow_zero=*/true);
}

std::string to_json(const BilinearMap& phi) {
  json j;
  j["n"] = phi.n();
  j["arity"] = phi.vector_valued() ? "vector" : "scalar";
  json values = json::array();
  for (std::size_t k = 0; k < phi.values().size(); ++k)
    values.push_back(rational_to_value(phi.values().flat(k)));
  j["values"] = std::move(values);
  return j.dump();
}

BilinearMap bilinear_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("n") || !j.contains("arity") || !j.contains("values"))
    throw std::invalid_argument("bilinear: need n, arity, values");
  const std::size_t n = j["n"].get<std::size_t>();
  const std::string arity = j["arity"].get<std::string>();
  if (arity != "scalar" && arity != "vector")
    throw std::invalid_argument("bilinear: arity must be scalar or vector");
  BilinearMap phi =
      arity == "scalar" ? BilinearMap::scalar(n) : BilinearMap::vector(n);
  const json& values = j["values"];
  if (!values.is_array() || values.size() != phi.values().size())
    throw std::invalid_argument("bilinear: wrong number of values");
  for (std::size_t k = 0; k < values.size(); ++k)
    phi.values().flat(k) = rational_from_value(values[k]);
  return phi;
}

FieldConfig field_config_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("family")) throw std::invalid_argument("config: need family");
  FieldConfig cfg;
  cfg.family = j["family"].get<std::string>();
  cfg.n = j.value("n", 2);
  if (j.contains("params")) cfg.params = j["params"].get<std::vector<double>>();
  cfg.h = j.value("h", 1e-3);
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.contains("min") || !g.contains("max") || !g.contains("steps"))
      throw std::invalid_argument("config: grid needs min, max, steps");
    cfg.grid.min = g["min"].get<std::vector<double>>();
    cfg.grid.max = g["max"].get<std::vector<double>>();
    cfg.grid.steps = g["steps"].get<int>();
  } else {
    cfg.grid.min.assign(2 * cfg.n, -1.0);
    cfg.grid.max.assign(2 * cfg.n, 1.0);
    cfg.grid.steps = 5;
  }
  return cfg;
}

}  // namespace segre
