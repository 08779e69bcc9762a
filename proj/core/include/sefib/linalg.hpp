#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sefib/arith.hpp"

namespace sefib {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
[[nodiscard]] std::size_t exact_rank(const RationalMatrix& m);

/// Cofactor expansion of a 3x3 determinant.
[[nodiscard]] Rational det3(const std::array<std::array<Rational, 3>, 3>& m);

}  // namespace sefib
