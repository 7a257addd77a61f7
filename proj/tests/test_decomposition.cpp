#include "hypotria/decomposition.hpp"
#include "hypotria/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hypotria;

namespace {

void expect_lengths(const Decomposition& dec, const Rational& x, const Rational& y, const Rational& a_minus_y,
                    const Rational& b_minus_x, const Rational& h1, const Rational& h2) {
  EXPECT_EQ(dec.x, x);
  EXPECT_EQ(dec.y, y);
  EXPECT_EQ(dec.a_minus_y, a_minus_y);
  EXPECT_EQ(dec.b_minus_x, b_minus_x);
  EXPECT_EQ(dec.h1, h1);
  EXPECT_EQ(dec.h2, h2);
}

void check_invariants(const Triple& tri, const Decomposition& dec) {
  const Rational a = tri.a(), b = tri.b(), c = tri.c();
  ASSERT_EQ(dec.x + dec.b_minus_x, b);
  ASSERT_EQ(dec.y + dec.a_minus_y, a);
  ASSERT_EQ(dec.h1 + dec.h2, c);
  ASSERT_EQ(dec.x / b, dec.a_minus_y / a);
  ASSERT_EQ(dec.x / b, dec.h1 / c);
  ASSERT_EQ(dec.y / a, dec.b_minus_x / b);
  ASSERT_EQ(dec.y / a, dec.h2 / c);
  ASSERT_EQ(dec.a_minus_y * dec.a_minus_y + dec.x * dec.x, dec.h1 * dec.h1);
  ASSERT_EQ(dec.y * dec.y + dec.b_minus_x * dec.b_minus_x, dec.h2 * dec.h2);
}

}  // namespace

TEST(DecomposeAtFraction, Examples) {
  expect_lengths(decompose_at_fraction(Triple(6, 8, 10), Rational(1, 2)), 4, 3, 3, 4, 5, 5);
  expect_lengths(decompose_at_fraction(Triple(75, 100, 125), Rational(9, 25)), 36, 48, 27, 64, 45, 80);
  expect_lengths(decompose_at_fraction(Triple(3, 4, 5), Rational(1, 3)), Rational(4, 3), 2, 1, Rational(8, 3),
                 Rational(5, 3), Rational(10, 3));
}

TEST(DecomposeAtFraction, RejectsEndpointsAndOutside) {
  const Triple tri(3, 4, 5);
  EXPECT_THROW(decompose_at_fraction(tri, 0), DomainError);
  EXPECT_THROW(decompose_at_fraction(tri, 1), DomainError);
  EXPECT_THROW(decompose_at_fraction(tri, Rational(-1, 2)), DomainError);
  EXPECT_THROW(decompose_at_fraction(tri, Rational(3, 2)), DomainError);
}

TEST(DecomposeAtH1, Examples) {
  expect_lengths(decompose_at_h1(Triple(15, 20, 25), 5), 4, 12, 3, 16, 5, 20);

  const auto by_h1 = decompose_at_h1(Triple(6, 8, 10), 5);
  const auto by_t = decompose_at_fraction(Triple(6, 8, 10), Rational(1, 2));
  EXPECT_EQ(by_h1.t, by_t.t);
  expect_lengths(by_h1, by_t.x, by_t.y, by_t.a_minus_y, by_t.b_minus_x, by_t.h1, by_t.h2);

  // delta = 2 with d = 3, m = 2, n = 1.
  expect_lengths(decompose_at_h1(Triple(9, 12, 15), 10), 8, 3, 6, 4, 10, 5);

  EXPECT_THROW(decompose_at_h1(Triple(3, 4, 5), 0), DomainError);
  EXPECT_THROW(decompose_at_h1(Triple(3, 4, 5), 5), DomainError);
}

TEST(DecomposeAtFraction, InvariantsAtRandomRationalPositions) {
  std::mt19937_64 rng(3);
  const auto params = enumerate_params(400);
  std::uniform_int_distribution<std::size_t> pick(0, params.size() - 1);
  std::uniform_int_distribution<long long> den(2, 100000);
  for (int i = 0; i < 3000; ++i) {
    const Triple tri = triple_from_params(params[pick(rng)]);
    const long long q = den(rng);
    const long long p = std::uniform_int_distribution<long long>(1, q - 1)(rng);
    const auto dec = decompose_at_fraction(tri, Rational(p, q));
    check_invariants(tri, dec);
  }
}

TEST(IntegralPositions, SmallScaleFactors) {
  EXPECT_TRUE(integral_positions({1, 2, 1}).empty());

  const auto two = integral_positions({2, 2, 1});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].delta, 1);
  EXPECT_EQ(two[0].sub_bdp, Triple(3, 4, 5));
  EXPECT_EQ(two[0].sub_pea, Triple(3, 4, 5));

  const auto three = integral_positions({3, 2, 1});
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].sub_bdp, Triple(3, 4, 5));
  EXPECT_EQ(three[0].sub_pea, Triple(6, 8, 10));
  EXPECT_EQ(three[1].sub_bdp, Triple(6, 8, 10));
  EXPECT_EQ(three[1].sub_pea, Triple(3, 4, 5));
}

TEST(IntegralPositions, CountAndAdditivity) {
  for (const auto& p : enumerate_params(30 * 145)) {
    if (p.d() > 30) continue;
    const Triple tri = triple_from_params(p);
    const auto positions = integral_positions(p);
    ASSERT_EQ(BigInt(positions.size()), p.d() - 1) << p;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const auto& pos = positions[i];
      ASSERT_EQ(pos.delta, BigInt(i + 1));
      ASSERT_EQ(pos.sub_bdp.a() + pos.sub_pea.a(), tri.a());
      ASSERT_EQ(pos.sub_bdp.b() + pos.sub_pea.b(), tri.b());
      ASSERT_EQ(pos.sub_bdp.c() + pos.sub_pea.c(), tri.c());
      // The listed sub-triangles are exactly what the decomposition gives.
      const auto dec = decompose_at_h1(tri, pos.sub_bdp.c());
      ASSERT_EQ(dec.a_minus_y, Rational(pos.sub_bdp.a()));
      ASSERT_EQ(dec.x, Rational(pos.sub_bdp.b()));
      ASSERT_EQ(dec.y, Rational(pos.sub_pea.a()));
      ASSERT_EQ(dec.b_minus_x, Rational(pos.sub_pea.b()));
      ASSERT_EQ(dec.h2, Rational(pos.sub_pea.c()));
    }
  }
}

TEST(ClassifyPosition, Examples) {
  EXPECT_EQ(classify_position({2, 2, 1}, Rational(1, 2)), PositionClass(IntegralPosition{1}));
  EXPECT_EQ(classify_position({1, 2, 1}, Rational(1, 2)), PositionClass(NonIntegralPosition{}));
  EXPECT_EQ(classify_position({5, 2, 1}, Rational(2, 5)), PositionClass(IntegralPosition{2}));
  EXPECT_THROW(classify_position({5, 2, 1}, 1), DomainError);
}

TEST(ClassifyPosition, ThreeFoldTriangleHasThirds) {
  // With d = 3 the sub-triangles are one and two thirds of the whole.
  const TripleParams p(3, 2, 1);
  EXPECT_EQ(classify_position(p, Rational(1, 3)), PositionClass(IntegralPosition{1}));
  EXPECT_EQ(classify_position(p, Rational(2, 3)), PositionClass(IntegralPosition{2}));
  EXPECT_EQ(classify_position(p, Rational(1, 2)), PositionClass(NonIntegralPosition{}));
  EXPECT_EQ(classify_position(p, Rational(1, 4)), PositionClass(NonIntegralPosition{}));
}

TEST(ClassifyPosition, DichotomyAgainstBruteForce) {
  for (const auto& p : enumerate_params(300)) {
    const Triple tri = triple_from_params(p);
    const auto integral = oracle::brute_force_integral_positions(tri);
    std::set<BigInt> expected;
    for (BigInt delta = 1; delta < p.d(); ++delta) expected.insert(delta * p.primitive_hypotenuse());
    ASSERT_EQ(integral, expected) << p;
    for (BigInt h1 = 1; h1 < tri.c(); ++h1) {
      const auto cls = classify_position(p, Rational(h1, tri.c()));
      const bool is_integral = std::holds_alternative<IntegralPosition>(cls);
      ASSERT_EQ(is_integral, integral.contains(h1)) << p << " h1=" << h1;
      ASSERT_EQ(decompose_at_h1(tri, h1).all_integral(), is_integral);
    }
  }
}
