#pragma once

// Test-only reference computations.  Nothing here calls into the product or
// normalizer code it is used to check.

#include <array>
#include <string>
#include <vector>

#include "xprod/scalar.hpp"

namespace oracle {

using xprod::Rational;
using Matrix = std::vector<std::vector<Rational>>;

/// Determinant by the Leibniz permutation sum.
Rational leibniz_det(const Matrix& m);

/// Formal-determinant product with every minor evaluated by leibniz_det.
std::vector<Rational> det_product(const Matrix& rows);

/// The 3x3 and 7x7 tables as printed, cell = sign * index.
extern const std::array<std::array<int, 3>, 3> kR3Table;
extern const std::array<std::array<int, 7>, 7> kR7Table;

/// Bilinear expansion over a printed table: sum over all i, j of
/// x_i y_j (e_i × e_j).
template <std::size_t N>
std::vector<Rational> expand(const std::array<std::array<int, N>, N>& table,
                             const std::vector<Rational>& x,
                             const std::vector<Rational>& y) {
  std::vector<Rational> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const int c = table[i][j];
      if (c > 0) out[c - 1] += x[i] * y[j];
      if (c < 0) out[-c - 1] -= x[i] * y[j];
    }
  }
  return out;
}

std::string read_file(const std::string& path);

}  // namespace oracle
