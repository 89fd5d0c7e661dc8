#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace oracle {

const std::array<std::array<int, 3>, 3> kR3Table{{
    {0, 3, -2},
    {-3, 0, 1},
    {2, -1, 0},
}};

const std::array<std::array<int, 7>, 7> kR7Table{{
    {0, 3, -2, 5, -4, -7, 6},
    {-3, 0, 1, 6, 7, -4, -5},
    {2, -1, 0, 7, -6, 5, -4},
    {-5, -6, -7, 0, 1, 2, 3},
    {4, -7, 6, -1, 0, -3, 2},
    {7, 4, -5, -2, 3, 0, -1},
    {-6, 5, 4, -3, -2, 1, 0},
}};

Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    Rational term = 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m[r][perm[r]];
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Rational> det_product(const Matrix& rows) {
  const std::size_t n = rows.front().size();
  std::vector<Rational> out;
  for (std::size_t m = 0; m < n; ++m) {
    Matrix minor;
    for (const auto& r : rows) {
      std::vector<Rational> reduced;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != m) reduced.push_back(r[c]);
      }
      minor.push_back(std::move(reduced));
    }
    Rational d = leibniz_det(minor);
    out.push_back(m % 2 == 0 ? d : Rational(-d));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace oracle
