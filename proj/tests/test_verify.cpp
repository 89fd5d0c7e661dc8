#include <doctest.h>

#include <json.hpp>

#include "xprod/error.hpp"
#include "xprod/products.hpp"
#include "xprod/verify.hpp"

using namespace xprod;

namespace {

Rational scalar_of(const Quantity& q) { return std::get<Rational>(q); }

ProductUnderTest second_argument(std::size_t dim) {
  return {"second", dim, [](const Vector&, const Vector& v) { return v; }};
}

}  // namespace

TEST_CASE("sampler range and determinism") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(1, 2, i);
    for (int t = 0; t < 10; ++t) {
      const Rational q = s.rational();
      const auto den = q.get_den();
      // p/q in lowest terms with p in [-9, 9], q in {1, 2, 3}
      CHECK((den == 1 || den == 2 || den == 3));
      CHECK(abs(q) <= 9);
    }
  }
  Sampler a(42, 0, 7), b(42, 0, 7), c(42, 0, 8);
  const Vector va = a.vector(10);
  CHECK(va == b.vector(10));
  CHECK_FALSE(va == c.vector(10));
}

TEST_CASE("perpendicular") {
  CHECK_FALSE(check_perpendicular(ProductUnderTest::cross3(), 200, 1).refuted());
  CHECK_FALSE(check_perpendicular(ProductUnderTest::padded(4), 200, 1).refuted());
  CHECK_FALSE(check_perpendicular(ProductUnderTest::det3(), 50, 1).refuted());

  const ProductUnderTest broken = second_argument(3);
  const AxiomReport r = check_perpendicular(broken, 10, 1);
  REQUIRE(r.refuted());
  CHECK(*r.witness->vector("u") == Vector::unit(3, 1));
  CHECK(*r.witness->vector("v") == Vector::unit(3, 1));
  CHECK(scalar_of(r.witness->lhs) == 1);
  CHECK(scalar_of(r.witness->rhs) == 0);
  CHECK(r.cases_checked == 1);
  CHECK(replay_witness(broken, r));
}

TEST_CASE("pythagorean") {
  CHECK_FALSE(check_pythagorean(ProductUnderTest::cross7(), 300, 3).refuted());
  CHECK_FALSE(check_pythagorean(ProductUnderTest::cross3(), 300, 3).refuted());

  const ProductUnderTest padded = ProductUnderTest::padded(4);
  const AxiomReport r = check_pythagorean(padded, 100, 3);
  REQUIRE(r.refuted());
  CHECK(*r.witness->vector("u") == Vector::parse("0,0,0,1", ScalarMode::kExact));
  CHECK(*r.witness->vector("v") == Vector::parse("1,0,0,0", ScalarMode::kExact));
  CHECK(scalar_of(r.witness->lhs) == 0);
  CHECK(scalar_of(r.witness->rhs) == 1);
  CHECK(replay_witness(padded, r));

  const ProductUnderTest t3 = ProductUnderTest::table(3);
  const AxiomReport r3 = check_pythagorean(t3, 100, 3);
  REQUIRE(r3.refuted());
  CHECK(scalar_of(r3.witness->lhs) == 0);
  CHECK(scalar_of(r3.witness->rhs) == 4);
  CHECK(replay_witness(t3, r3));
}

TEST_CASE("padded product fails Pythagorean even without the known pair") {
  const ProductUnderTest bare{"padded", 5, padded_cross};
  const AxiomReport r = check_pythagorean(bare, 10, 9);
  REQUIRE(r.refuted());
  CHECK(replay_witness(bare, r));
}

TEST_CASE("bilinear") {
  for (int k = 1; k <= 4; ++k) {
    CHECK_FALSE(check_bilinear(ProductUnderTest::table(k), 50, 4).refuted());
  }
  CHECK_FALSE(check_bilinear(ProductUnderTest::cross7(), 200, 4).refuted());
  CHECK_FALSE(check_bilinear(ProductUnderTest::padded(5), 200, 4).refuted());

  // u ↦ u×u is not bilinear.
  const ProductUnderTest squares{"squares", 3, [](const Vector& u, const Vector& v) {
                                   return Scalar(dot(u, u).exact() * dot(v, v).exact()) *
                                          Vector::unit(3, 1);
                                 }};
  const AxiomReport r = check_bilinear(squares, 50, 4);
  REQUIRE(r.refuted());
  CHECK(r.witness->scalar("a") != nullptr);
  CHECK(replay_witness(squares, r));
}

TEST_CASE("identities hold for the genuine products") {
  for (const auto& p : {ProductUnderTest::cross3(), ProductUnderTest::cross7()}) {
    for (const auto& r : check_identities(p, 200, 5)) {
      const bool stated_false = r.axiom == Axiom::kTripleExpansion;
      CHECK_MESSAGE(r.refuted() == stated_false, p.name(), " ", to_string(r.axiom));
    }
  }
}

TEST_CASE("triple expansion as stated fails on a basis triple, corrected form holds") {
  const Vector e1 = Vector::unit(3, 1), e2 = Vector::unit(3, 2);
  const Vector& u = e1;
  const Vector& v = e2;
  const Vector& w = e1;
  const Vector lhs = cross3(w, cross3(v, u));
  CHECK(lhs == e2);
  const Vector stated = -cross3(cross3(w, v), u) + Scalar(dot(u, v)) * w +
                        Scalar(dot(w, v)) * u - Scalar(Rational(2)) * (Scalar(dot(w, u)) * v);
  CHECK(stated == Scalar(Rational(-3)) * e2);
  const Vector corrected = -cross3(cross3(w, v), u) + Scalar(Rational(2)) * (dot(w, u) * v) -
                           dot(u, v) * w - dot(w, v) * u;
  CHECK(corrected == lhs);
}

TEST_CASE("double cross on a basis pair") {
  const Vector e1 = Vector::unit(3, 1), e2 = Vector::unit(3, 2);
  CHECK(cross3(e1, cross3(e1, e2)) == -e2);
  CHECK(Scalar(dot(e1, e2).exact()) * e1 - Scalar(dot(e1, e1).exact()) * e2 == -e2);
}

TEST_CASE("identities on the k=3 table come with replayable witnesses") {
  const ProductUnderTest t3 = ProductUnderTest::table(3);
  for (const auto& r : check_identities(t3, 100, 6)) {
    MESSAGE(to_string(r.axiom), ": ", to_string(r.verdict));
    if (r.refuted()) CHECK(replay_witness(t3, r));
    if (r.axiom == Axiom::kAnticommutative) CHECK_FALSE(r.refuted());
  }
}

TEST_CASE("orthonormal closure") {
  CHECK_FALSE(orthonormal_closure_check(build_table(2)).refuted());
  CHECK_FALSE(orthonormal_closure_check(build_table(3)).refuted());
  const MulTable holed = build_table(2).with_cell(2, 5, SignedBasis::zero());
  const AxiomReport r = orthonormal_closure_check(holed);
  REQUIRE(r.refuted());
  CHECK(*r.witness->vector("u") == Vector::unit(7, 2));
  CHECK(*r.witness->vector("v") == Vector::unit(7, 5));
  CHECK(replay_witness(ProductUnderTest::table(std::make_shared<const MulTable>(holed)), r));
}

TEST_CASE("classification") {
  const auto verdicts = classify_dimensions(3, 200, 7);
  REQUIRE(verdicts.size() == 3);
  CHECK_FALSE(verdicts[0].pythagorean_refuted);
  CHECK_FALSE(verdicts[1].pythagorean_refuted);
  CHECK(verdicts[2].pythagorean_refuted);
  CHECK(verdicts[2].n == 15);
  REQUIRE(verdicts[2].witness);
  CHECK(scalar_of(verdicts[2].witness->rhs) == 4);
  CHECK(scalar_of(verdicts[2].witness->lhs) == 0);
  CHECK(surviving_dimensions(verdicts) == std::vector<std::size_t>{0, 1, 3, 7});

  const auto one = classify_dimensions(1, 10, 7);
  REQUIRE(one.size() == 1);
  CHECK_FALSE(one[0].pythagorean_refuted);

  CHECK_THROWS_AS(classify_dimensions(0), RangeError);
  CHECK_THROWS_AS(classify_dimensions(7), RangeError);
}

TEST_CASE("the S_2 block of the k=3 table still satisfies Pythagorean") {
  const ProductUnderTest t3 = ProductUnderTest::table(3);
  for (std::uint64_t s = 0; s < 200; ++s) {
    Sampler sampler(8, 0, s);
    std::vector<Rational> u(15), v(15);
    for (int i = 0; i < 7; ++i) {
      u[i] = sampler.rational();
      v[i] = sampler.rational();
    }
    const Vector uu(u), vv(v);
    const Vector uv = t3(uu, vv);
    const Rational d = dot(uu, vv).exact();
    CHECK(dot(uv, uv).exact() + d * d == dot(uu, uu).exact() * dot(vv, vv).exact());
  }
}

TEST_CASE("reports are deterministic and serialize") {
  const ProductUnderTest t4 = ProductUnderTest::table(4);
  const auto a = check_pythagorean(t4, 20, 11);
  const auto b = check_pythagorean(t4, 20, 11);
  CHECK(report_to_json(a) == report_to_json(b));

  const auto doc = nlohmann::json::parse(report_to_json(a));
  CHECK(doc["product"] == "table(k=4)");
  CHECK(doc["dim"] == 31);
  CHECK(doc["axiom"] == "pythagorean");
  CHECK(doc["verdict"] == "refuted");
  CHECK(doc["witness"]["lhs"] == "0");
  CHECK(doc["witness"]["rhs"] == "4");
  CHECK(doc["samples"] == 20);
  CHECK(doc["seed"] == 11);

  const auto held = nlohmann::json::parse(
      report_to_json(check_perpendicular(ProductUnderTest::cross3(), 5, 1)));
  CHECK(held["witness"].is_null());
  CHECK(held["verdict"] == "holds-on-all-samples");

  const auto c = check_bilinear(ProductUnderTest::cross7(), 30, 12);
  const auto d = check_bilinear(ProductUnderTest::cross7(), 30, 12);
  CHECK(report_to_json(c) == report_to_json(d));
}

TEST_CASE("product under test guards its inputs") {
  const auto p = ProductUnderTest::cross7();
  CHECK_THROWS_AS(p(Vector::unit(3, 1), Vector::unit(3, 2)), DimensionError);
  const auto f = Vector::parse("1,0,0,0,0,0,0", ScalarMode::kFloat);
  CHECK_THROWS_AS(p(f, f), ModeError);
  CHECK_THROWS_AS(check_pythagorean(p, 0, 1), RangeError);
}

TEST_CASE("expected verdicts") {
  CHECK(expected_verdict("cross7", 7, 0, Axiom::kUnitShift) == Verdict::kHoldsOnAllSamples);
  CHECK(expected_verdict("table", 15, 3, Axiom::kPythagorean) == Verdict::kRefuted);
  CHECK_FALSE(expected_verdict("table", 15, 3, Axiom::kScalarTriple).has_value());
  CHECK(expected_verdict("padded", 4, 0, Axiom::kPerpendicular) ==
        Verdict::kHoldsOnAllSamples);
  CHECK(expected_verdict("padded", 4, 0, Axiom::kPythagorean) == Verdict::kRefuted);
  CHECK(parse_axiom("unit-shift") == Axiom::kUnitShift);
  CHECK_FALSE(parse_axiom("nope").has_value());
}
