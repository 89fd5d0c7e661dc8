#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xprod/error.hpp"
#include "xprod/products.hpp"
#include "xprod/verify.hpp"

using namespace xprod;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

Vector exact(const char* text) { return Vector::parse(text, ScalarMode::kExact); }

std::vector<Rational> coords(const Vector& v) {
  return {v.exact().begin(), v.exact().end()};
}

}  // namespace

TEST_CASE("cross3 follows the right-hand rule") {
  CHECK(cross3(e(3, 1), e(3, 2)) == e(3, 3));
  CHECK(cross3(e(3, 3), e(3, 2)) == -e(3, 1));
  CHECK(cross3(e(3, 2), e(3, 3)) == e(3, 1));
  CHECK(cross3(e(3, 1), e(3, 3)) == -e(3, 2));
  const auto u = exact("1,-2/3,5");
  CHECK(cross3(u, u).is_zero());
  CHECK(cross3(exact("1,2,3"), exact("4,5,6")) == exact("-3,6,-3"));
  CHECK_THROWS_AS(cross3(e(4, 1), e(4, 2)), DimensionError);
}

TEST_CASE("cross7 matches the printed table cells") {
  CHECK(cross7(e(7, 2), e(7, 4)) == e(7, 6));
  CHECK(cross7(e(7, 5), e(7, 6)) == -e(7, 3));
  CHECK(cross7(e(7, 4), e(7, 3)) == -e(7, 7));
  for (std::size_t i = 1; i <= 7; ++i) {
    for (std::size_t j = 1; j <= 7; ++j) {
      const int c = oracle::kR7Table[i - 1][j - 1];
      Vector expected = Vector::zeros(7);
      if (c > 0) expected = e(7, c);
      if (c < 0) expected = -e(7, -c);
      CHECK_MESSAGE(cross7(e(7, i), e(7, j)) == expected, "e", i, "×e", j);
    }
  }
  const auto u = exact("1,2,3,4,5,6,7");
  CHECK(cross7(u, u).is_zero());
  CHECK_THROWS_AS(cross7(e(3, 1), e(3, 2)), DimensionError);
}

TEST_CASE("cross7 equals the bilinear expansion of the printed table") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Sampler sampler(99, 0, s);
    const Vector u = sampler.vector(7);
    const Vector v = sampler.vector(7);
    CHECK(coords(cross7(u, v)) == oracle::expand(oracle::kR7Table, coords(u), coords(v)));
  }
}

TEST_CASE("cross3 and cross7 are antisymmetric") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Sampler sampler(5, 1, s);
    const Vector u3 = sampler.vector(3), v3 = sampler.vector(3);
    const Vector u7 = sampler.vector(7), v7 = sampler.vector(7);
    CHECK(cross3(u3, v3) == -cross3(v3, u3));
    CHECK(cross7(u7, v7) == -cross7(v7, u7));
  }
}

TEST_CASE("table product") {
  const MulTable t1 = build_table(1);
  const MulTable t2 = build_table(2);
  CHECK(table_product(t1, e(3, 1), e(3, 2)) == e(3, 3));
  CHECK(table_product(t2, exact("1,0,0,0,0,0,0"), exact("0,0,0,0,1,0,0")) == -e(7, 4));
  CHECK(table_product(t2, exact("1,2,3,4,5,6,7"), Vector::zeros(7)).is_zero());
  CHECK_THROWS_AS(table_product(t2, e(3, 1), e(3, 2)), DimensionError);

  for (std::uint64_t s = 0; s < 100; ++s) {
    Sampler sampler(17, 2, s);
    const Vector u = sampler.vector(3), v = sampler.vector(3);
    CHECK(table_product(t1, u, v) == cross3(u, v));
  }
}

TEST_CASE("floating evaluation agrees with exact evaluation") {
  const MulTable t3 = build_table(3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    Sampler sampler(23, 3, s);
    const Vector u = sampler.vector(15), v = sampler.vector(15);
    std::vector<double> uf, vf;
    for (const auto& q : u.exact()) uf.push_back(q.get_d());
    for (const auto& q : v.exact()) vf.push_back(q.get_d());
    const Vector exact_result = table_product(t3, u, v);
    const Vector float_result = table_product(t3, Vector(uf), Vector(vf));
    for (std::size_t m = 0; m < 15; ++m) {
      CHECK(float_result.floating()[m] ==
            doctest::Approx(exact_result.exact()[m].get_d()).epsilon(1e-12));
    }
  }
  const auto u7 = Vector::parse("0.5,1,0,0,0,0,-2", ScalarMode::kFloat);
  const auto v7 = Vector::parse("1,0,0,0.25,0,0,0", ScalarMode::kFloat);
  CHECK(cross7(u7, v7) == table_product(build_table(2), u7, v7));
}

TEST_CASE("table product falls back when a row repeats an output") {
  // Every off-diagonal cell of row 1 sent to +e1: not a valid table, but the
  // product must still be the plain bilinear sum.
  std::vector<SignedBasis> cells(9, SignedBasis::zero());
  cells[1] = SignedBasis::make(1, 1);
  cells[2] = SignedBasis::make(1, 1);
  const MulTable odd(1, cells);
  CHECK_FALSE(odd.layout().has_value());
  const auto u = Vector::parse("2,0,0", ScalarMode::kFloat);
  const auto v = Vector::parse("0,3,5", ScalarMode::kFloat);
  CHECK(table_product(odd, u, v) == Vector::parse("16,0,0", ScalarMode::kFloat));
  CHECK(table_product(odd, exact("2,0,0"), exact("0,3,5")) == exact("16,0,0"));
}

TEST_CASE("padded product") {
  CHECK(padded_cross(exact("0,0,0,1"), exact("1,0,0,0")).is_zero());
  CHECK(padded_cross(e(4, 1), e(4, 2)) == exact("0,0,1,0"));
  CHECK(padded_cross(e(4, 4), e(4, 4)).is_zero());
  CHECK(padded_cross(exact("1,2,3,9,9"), exact("4,5,6,1,1")) == exact("-3,6,-3,0,0"));
  CHECK(padded_cross(e(3, 1), e(3, 2)) == e(3, 3));
  CHECK_THROWS_AS(padded_cross(exact("1,2"), exact("3,4")), DimensionError);
}

TEST_CASE("determinant product") {
  const Vector rows4[] = {e(4, 1), e(4, 2), e(4, 3)};
  // Cofactor sign (-1)^(1+4) on the identity minor.
  CHECK(det_product(rows4) == -e(4, 4));

  const Vector repeated[] = {exact("1,2,3,4"), exact("5,6,7,8"), exact("1,2,3,4")};
  CHECK(det_product(repeated).is_zero());

  const Vector two[] = {exact("1,2"),};
  CHECK(det_product(two) == exact("2,-1"));

  const Vector wrong_count[] = {e(4, 1), e(4, 2)};
  CHECK_THROWS_AS(det_product(wrong_count), DimensionError);
  const Vector ragged[] = {e(3, 1), e(4, 2)};
  CHECK_THROWS_AS(det_product(ragged), DimensionError);
  std::vector<Vector> too_big(12, e(13, 1));
  CHECK_THROWS_AS(det_product(too_big), DimensionError);
}

TEST_CASE("determinant product equals cross3 and the Leibniz oracle") {
  std::mt19937_64 rng(7);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 21) - 10); };
  for (int trial = 0; trial < 100; ++trial) {
    const Vector u(std::vector<Rational>{draw(), draw(), draw()});
    const Vector v(std::vector<Rational>{draw(), draw(), draw()});
    const Vector rows[] = {u, v};
    CHECK(det_product(rows) == cross3(u, v));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      oracle::Matrix m;
      std::vector<Vector> rows;
      for (std::size_t r = 0; r + 1 < n; ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < n; ++c) row.push_back(draw());
        m.push_back(row);
        rows.emplace_back(row);
      }
      CHECK(coords(det_product(rows)) == oracle::det_product(m));
    }
  }
}

TEST_CASE("determinant product is perpendicular to its rows") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 3; n <= kMaxDetDim; ++n) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c) row.emplace_back(static_cast<long>(rng() % 7) - 3);
      rows.emplace_back(std::move(row));
    }
    const Vector d = det_product(rows);
    for (const auto& r : rows) CHECK(dot(d, r).exact() == 0);
  }
}
