#include "hypotria/decomposition.hpp"
#include "hypotria/oracle.hpp"
#include "hypotria/special_points.hpp"

#include <gtest/gtest.h>

using namespace hypotria;

namespace {

void expect_integer_length(const SpecialPointReport& r, const char* name, long long value) {
  EXPECT_EQ(r.length(name), Rational(value)) << name;
}

}  // namespace

TEST(Midpoint, EvenScaleFactor) {
  const auto r = analyze_midpoint({2, 2, 1});
  EXPECT_TRUE(r.all_pythagorean);
  EXPECT_TRUE(r.inner_pythagorean);
  EXPECT_EQ(r.witness, BigInt(1));
  expect_integer_length(r, "x", 4);
  expect_integer_length(r, "y", 3);
  expect_integer_length(r, "h1", 5);
  expect_integer_length(r, "h2", 5);
}

TEST(Midpoint, OddScaleFactor) {
  const auto r = analyze_midpoint({1, 2, 1});
  EXPECT_FALSE(r.all_pythagorean);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.length("y"), Rational(3, 2));
  EXPECT_EQ(r.length("h1"), Rational(5, 2));
}

TEST(Midpoint, HalfTriangleSides) {
  const auto r = analyze_midpoint({4, 3, 2});
  EXPECT_TRUE(r.all_pythagorean);
  expect_integer_length(r, "y", 10);   // vertical
  expect_integer_length(r, "x", 24);   // horizontal
  expect_integer_length(r, "h1", 26);  // hypotenuse
  EXPECT_EQ(10 * 10 + 24 * 24, 26 * 26);
}

TEST(BisectorFoot, SmallestPythagoreanCase) {
  const auto r = analyze_bisector_foot({7, 2, 1});
  EXPECT_TRUE(r.all_pythagorean);
  EXPECT_FALSE(r.inner_pythagorean);
  EXPECT_EQ(r.witness, BigInt(1));
  // BDI = (9, 12, 15), IEA = (12, 16, 20).
  expect_integer_length(r, "a_minus_y", 9);
  expect_integer_length(r, "x", 12);
  expect_integer_length(r, "h1", 15);
  expect_integer_length(r, "y", 12);
  expect_integer_length(r, "b_minus_x", 16);
  expect_integer_length(r, "h2", 20);
}

TEST(BisectorFoot, NotDivisible) {
  const auto r = analyze_bisector_foot({5, 2, 1});
  EXPECT_FALSE(r.all_pythagorean);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.length("x"), r.length("y"));
  EXPECT_FALSE(r.length("x").is_integer());
}

TEST(BisectorFoot, DoubleMultiplier) {
  const auto r = analyze_bisector_foot({14, 2, 1});
  EXPECT_TRUE(r.all_pythagorean);
  EXPECT_EQ(r.witness, BigInt(2));
  expect_integer_length(r, "x", 24);
  expect_integer_length(r, "y", 24);
  const Rational& ay = r.length("a_minus_y");
  const Rational& bx = r.length("b_minus_x");
  EXPECT_EQ(ay * ay + r.length("x") * r.length("x"), r.length("h1") * r.length("h1"));
  EXPECT_EQ(r.length("y") * r.length("y") + bx * bx, r.length("h2") * r.length("h2"));
}

TEST(BisectorFoot, ClosedFormMatchesDecomposition) {
  for (const auto& p : enumerate_params(3000)) {
    const auto r = analyze_bisector_foot(p);
    const auto dec = decompose_at_fraction(triple_from_params(p), r.t);
    ASSERT_EQ(r.length("x"), dec.x) << p;
    ASSERT_EQ(r.length("y"), dec.y) << p;
    ASSERT_EQ(r.length("a_minus_y"), dec.a_minus_y) << p;
    ASSERT_EQ(r.length("b_minus_x"), dec.b_minus_x) << p;
    ASSERT_EQ(r.length("h1"), dec.h1) << p;
    ASSERT_EQ(r.length("h2"), dec.h2) << p;
    ASSERT_EQ(dec.x, dec.y);
    if (r.witness) ASSERT_EQ(*r.witness * (p.odd_leg() + p.even_leg()), p.d());
  }
}

TEST(AltitudeFoot, SquareOfPrimitiveHypotenuse) {
  const auto r = analyze_altitude_foot({25, 2, 1});
  EXPECT_TRUE(r.all_pythagorean);
  EXPECT_EQ(r.witness, BigInt(1));
  expect_integer_length(r, "h", 60);
  expect_integer_length(r, "h1", 45);
  expect_integer_length(r, "h2", 80);
  expect_integer_length(r, "y", 48);
  expect_integer_length(r, "a_minus_y", 27);
  expect_integer_length(r, "x", 36);
  expect_integer_length(r, "b_minus_x", 64);
  EXPECT_TRUE(r.notes.empty());
}

TEST(AltitudeFoot, PrimitiveTriangle) {
  const auto r = analyze_altitude_foot({1, 2, 1});
  EXPECT_FALSE(r.all_pythagorean);
  EXPECT_EQ(r.length("h"), Rational(12, 5));
  EXPECT_EQ(r.length("h1"), Rational(9, 5));
  EXPECT_EQ(r.length("h2"), Rational(16, 5));
}

TEST(AltitudeFoot, LargerExampleWithErrata) {
  const auto r = analyze_altitude_foot({289, 4, 1});
  EXPECT_TRUE(r.all_pythagorean);
  EXPECT_EQ(r.witness, BigInt(1));
  expect_integer_length(r, "x", 1800);
  expect_integer_length(r, "h1", 3825);
  expect_integer_length(r, "y", 960);
  expect_integer_length(r, "b_minus_x", 512);
  expect_integer_length(r, "h2", 1088);
  expect_integer_length(r, "a_minus_y", 3375);
  expect_integer_length(r, "h", 2040);
  // Independent confirmation from the sidelengths (4335, 2312, 4913).
  EXPECT_EQ(BigInt(4335) - 960, 3375);
  EXPECT_EQ(Rational(BigInt(4335) * 2312, 4913), Rational(2040));
  ASSERT_EQ(r.notes.size(), 2u);
  EXPECT_NE(r.notes[0].find("15"), std::string::npos);
  EXPECT_NE(r.notes[1].find("1404"), std::string::npos);
}

TEST(AltitudeFoot, SimilarTriangleIdentities) {
  for (const auto& p : enumerate_params(1500)) {
    const Triple tri = triple_from_params(p);
    const Rational a = tri.a(), b = tri.b(), c = tri.c();
    const auto r = analyze_altitude_foot(p);
    const Rational& x = r.length("x");
    const Rational& y = r.length("y");
    ASSERT_EQ(r.length("h"), a * b / c) << p;
    ASSERT_EQ(r.length("h1") * c, a * a) << p;
    ASSERT_EQ(r.length("h2") * c, b * b) << p;
    ASSERT_EQ(r.length("h1") + r.length("h2"), c) << p;
    ASSERT_EQ(r.length("a_minus_y") * r.length("a_minus_y") + x * x, r.length("h1") * r.length("h1")) << p;
    ASSERT_EQ(x * x + y * y, r.length("h") * r.length("h")) << p;
    ASSERT_EQ(r.length("a_minus_y") + y, a);
    ASSERT_EQ(r.length("b_minus_x") + x, b);
    ASSERT_EQ(r.t, r.length("h1") / c);
  }
}

TEST(SpecialPoints, IffAgainstCoordinates) {
  for (const auto& p : enumerate_params(800)) {
    const Triple tri = triple_from_params(p);
    const auto mid = oracle::midpoint_lengths(tri);
    ASSERT_EQ(analyze_midpoint(p).all_pythagorean,
              oracle::outer_pair_integral(mid) && oracle::rectangle_integral(mid)) << p;
    ASSERT_EQ(analyze_bisector_foot(p).all_pythagorean,
              oracle::outer_pair_integral(oracle::bisector_foot_lengths(tri))) << p;
    const auto alt = oracle::altitude_foot_lengths(tri);
    ASSERT_EQ(analyze_altitude_foot(p).all_pythagorean,
              oracle::outer_pair_integral(alt) && oracle::rectangle_integral(alt)) << p;
  }
}

TEST(SpecialPoints, ReportLengthLookup) {
  const auto r = analyze_midpoint({2, 2, 1});
  EXPECT_THROW(r.length("h"), std::out_of_range);
  EXPECT_EQ(to_string(r.kind), "midpoint");
  EXPECT_EQ(analyze_special_point(PointKind::AltitudeFoot, {25, 2, 1}).length("h"), Rational(60));
}
