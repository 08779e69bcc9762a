#include "sefib/linalg.hpp"

#include <utility>

namespace sefib {

std::size_t exact_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Scaling a row by a nonzero integer leaves the rank unchanged.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt den = 1;
    for (std::size_t j = 0; j < cols; ++j) den = lcm(den, m(i, j).den());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).num() * (den / m(i, j).den());
  }

  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);
    const BigInt pivot = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (pivot * a[i][j] - a[i][col] * a[rank][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace sefib
