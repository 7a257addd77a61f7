#pragma once

// Closed-form analysis at three distinguished points of the hypotenuse:
//   Midpoint      M, t = 1/2
//   BisectorFoot  I, where the bisector of the right angle at C meets BA
//   AltitudeFoot  F, the foot of the perpendicular from C to BA

#include "hypotria/numeric.hpp"
#include "hypotria/triple.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypotria {

enum class PointKind { Midpoint, BisectorFoot, AltitudeFoot };

std::string_view to_string(PointKind kind);

struct NamedLength {
  std::string name;
  Rational value;
};

struct SpecialPointReport {
  PointKind kind{};
  TripleParams params;
  Rational t;  ///< |BP| / |BA| of the point
  /// All right triangles the point is analysed for are Pythagorean:
  /// midpoint and altitude foot cover all six; the bisector foot covers
  /// BDI and IEA (its four isosceles rectangle triangles never qualify).
  bool all_pythagorean = false;
  /// Whether the four triangles inside the rectangle CDPE are Pythagorean.
  bool inner_pythagorean = false;
  /// K with d = 2K (midpoint), d = K(m^2 - n^2 + 2mn) (bisector foot) or
  /// d = K(m^2 + n^2)^2 (altitude foot). Present iff all_pythagorean.
  std::optional<BigInt> witness;
  /// Ordered x, y, a_minus_y, b_minus_x, h1, h2 and, for the altitude foot, h.
  std::vector<NamedLength> lengths;
  /// Known misprints of classical values for these parameters.
  std::vector<std::string> notes;

  /// Throws std::out_of_range for an unknown name.
  const Rational& length(std::string_view name) const;
};

SpecialPointReport analyze_midpoint(const TripleParams& p);
SpecialPointReport analyze_bisector_foot(const TripleParams& p);
SpecialPointReport analyze_altitude_foot(const TripleParams& p);

SpecialPointReport analyze_special_point(PointKind kind, const TripleParams& p);

}  // namespace hypotria
