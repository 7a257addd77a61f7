#include "hypotria/special_points.hpp"

#include "hypotria/decomposition.hpp"

#include <stdexcept>

namespace hypotria {

namespace {

std::vector<NamedLength> six_lengths(const Rational& x, const Rational& y, const Rational& a_minus_y,
                                     const Rational& b_minus_x, const Rational& h1, const Rational& h2) {
  return {{"x", x}, {"y", y}, {"a_minus_y", a_minus_y}, {"b_minus_x", b_minus_x}, {"h1", h1}, {"h2", h2}};
}

std::vector<NamedLength> six_lengths(const Decomposition& dec) {
  return six_lengths(dec.x, dec.y, dec.a_minus_y, dec.b_minus_x, dec.h1, dec.h2);
}

struct Erratum {
  BigInt d, m, n;
  const char* text;
};

// Commonly reproduced altitude-foot values that contradict a^3/c^2 and ab/c.
const std::vector<Erratum>& altitude_errata() {
  static const std::vector<Erratum> table = {
      {289, 4, 1, "errata: printed value a-y = 15 is a misprint; a^3/c^2 = 4335^3/4913^2 = 3375"},
      {289, 4, 1, "errata: printed value h = 1404 is a misprint; ab/c = 4335*2312/4913 = 2040"},
  };
  return table;
}

}  // namespace

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Midpoint:
      return "midpoint";
    case PointKind::BisectorFoot:
      return "bisector";
    case PointKind::AltitudeFoot:
      return "altitude";
  }
  return "unknown";
}

const Rational& SpecialPointReport::length(std::string_view name) const {
  for (const auto& entry : lengths) {
    if (entry.name == name) return entry.value;
  }
  throw std::out_of_range("no length named '" + std::string(name) + "'");
}

SpecialPointReport analyze_midpoint(const TripleParams& p) {
  SpecialPointReport report{PointKind::Midpoint, p, Rational(1, 2), false, false, std::nullopt, {}, {}};
  const BigInt& d = p.d();
  // All six triangles are congruent halves of CBA:
  //   horizontal dmn, vertical d(m^2 - n^2)/2, hypotenuse d(m^2 + n^2)/2.
  const Rational horizontal = d * p.m() * p.n();
  const Rational vertical(d * p.odd_leg(), 2);
  const Rational hypotenuse(d * p.primitive_hypotenuse(), 2);
  report.lengths = six_lengths(horizontal, vertical, vertical, horizontal, hypotenuse, hypotenuse);
  report.all_pythagorean = (d & 1) == 0;
  report.inner_pythagorean = report.all_pythagorean;
  if (report.all_pythagorean) report.witness = d / 2;
  return report;
}

SpecialPointReport analyze_bisector_foot(const TripleParams& p) {
  const BigInt odd = p.odd_leg();
  const BigInt even = p.even_leg();
  const BigInt hyp = p.primitive_hypotenuse();
  const BigInt modulus = odd + even;

  // x = y and the similarity ratios force t b = (1 - t) a, i.e. t = a / (a + b).
  SpecialPointReport report{PointKind::BisectorFoot, p, Rational(odd, modulus), false, false, std::nullopt, {}, {}};
  report.inner_pythagorean = false;
  if (p.d() % modulus == 0) {
    const BigInt k = p.d() / modulus;
    const BigInt leg = k * even * odd;
    report.lengths = six_lengths(leg, leg, k * odd * odd, k * even * even, k * odd * hyp, k * even * hyp);
    report.all_pythagorean = true;
    report.witness = k;
  } else {
    report.lengths = six_lengths(decompose_at_fraction(triple_from_params(p), report.t));
    report.all_pythagorean = false;
  }
  return report;
}

SpecialPointReport analyze_altitude_foot(const TripleParams& p) {
  const BigInt& d = p.d();
  const BigInt odd = p.odd_leg();
  const BigInt even = p.even_leg();
  const BigInt hyp = p.primitive_hypotenuse();
  const BigInt hyp_sq = hyp * hyp;

  SpecialPointReport report{PointKind::AltitudeFoot, p, Rational(odd * odd, hyp_sq), false, false,
                            std::nullopt, {}, {}};
  if (d % hyp_sq == 0) {
    const BigInt k = d / hyp_sq;
    report.lengths = six_lengths(k * odd * odd * even, k * odd * even * even, k * odd * odd * odd,
                                 k * even * even * even, k * hyp * odd * odd, k * hyp * even * even);
    report.lengths.push_back({"h", k * even * odd * hyp});
    report.all_pythagorean = true;
    report.witness = k;
  } else {
    report.lengths = six_lengths(Rational(d * odd * odd * even, hyp_sq), Rational(d * odd * even * even, hyp_sq),
                                 Rational(d * odd * odd * odd, hyp_sq), Rational(d * even * even * even, hyp_sq),
                                 Rational(d * odd * odd, hyp), Rational(d * even * even, hyp));
    report.lengths.push_back({"h", Rational(d * even * odd, hyp)});
    report.all_pythagorean = false;
  }
  report.inner_pythagorean = report.all_pythagorean;

  for (const auto& erratum : altitude_errata()) {
    if (erratum.d == d && erratum.m == p.m() && erratum.n == p.n()) report.notes.emplace_back(erratum.text);
  }
  return report;
}

SpecialPointReport analyze_special_point(PointKind kind, const TripleParams& p) {
  switch (kind) {
    case PointKind::Midpoint:
      return analyze_midpoint(p);
    case PointKind::BisectorFoot:
      return analyze_bisector_foot(p);
    case PointKind::AltitudeFoot:
      return analyze_altitude_foot(p);
  }
  throw std::invalid_argument("unknown point kind");
}

}  // namespace hypotria
