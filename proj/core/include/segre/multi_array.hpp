#pragma once

#include <cstddef>
#include <vector>

#include "segre/rational.hpp"

namespace segre {

/// Dense multi-index array of rationals, entries in lexicographic index
/// order (last index fastest).
class MultiArray {
 public:
  MultiArray() = default;
  explicit MultiArray(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return entries_.size(); }

  Rational& at(const std::vector<std::size_t>& idx) { return entries_[offset(idx)]; }
  const Rational& at(const std::vector<std::size_t>& idx) const {
    return entries_[offset(idx)];
  }

  Rational& flat(std::size_t k) { return entries_[k]; }
  const Rational& flat(std::size_t k) const { return entries_[k]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool operator==(const MultiArray&) const = default;

  MultiArray operator+(const MultiArray& o) const;
  MultiArray operator-(const MultiArray& o) const;
  MultiArray operator*(const Rational& s) const;
  bool is_zero() const;

  std::size_t offset(const std::vector<std::size_t>& idx) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> entries_;
};

}  // namespace segre
