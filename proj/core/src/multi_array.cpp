#include "segre/multi_array.hpp"

#include <stdexcept>

namespace segre {

MultiArray::MultiArray(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::size_t total = 1;
  strides_.assign(shape_.size(), 1);
  for (std::size_t k = shape_.size(); k-- > 0;) {
    strides_[k] = total;
    total *= shape_[k];
  }
  entries_.assign(total, Rational(0));
}

std::size_t MultiArray::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape_.size())
    throw std::invalid_argument("multi_array: index arity mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= shape_[k]) throw std::out_of_range("multi_array: index out of range");
    off += idx[k] * strides_[k];
  }
  return off;
}

MultiArray MultiArray::operator+(const MultiArray& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("multi_array +: shape mismatch");
  MultiArray r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

MultiArray MultiArray::operator-(const MultiArray& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("multi_array -: shape mismatch");
  MultiArray r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

MultiArray MultiArray::operator*(const Rational& s) const {
  MultiArray r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

bool MultiArray::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

}  // namespace segre
