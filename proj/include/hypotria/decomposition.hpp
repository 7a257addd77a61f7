#pragma once

// A point P strictly inside the hypotenuse BA, with D and E the feet of the
// perpendiculars from P to CB and CA, splits CBA into the similar triangles
// BDP and PEA plus the rectangle CDPE.
//
// P is addressed by t = |BP| / |BA|. Only rational t is representable.

#include "hypotria/numeric.hpp"
#include "hypotria/triple.hpp"

#include <variant>
#include <vector>

namespace hypotria {

struct Decomposition {
  Rational t;          ///< |BP| / |BA|
  Rational x;          ///< |DP| = |CE|
  Rational y;          ///< |DC| = |PE|
  Rational a_minus_y;  ///< |BD|
  Rational b_minus_x;  ///< |EA|
  Rational h1;         ///< |BP|
  Rational h2;         ///< |PA|

  /// All six lengths are integers.
  bool all_integral() const;
};

/// Throws DomainError unless 0 < t < 1.
Decomposition decompose_at_fraction(const Triple& tri, const Rational& t);

/// Throws DomainError unless 0 < h1 < c.
Decomposition decompose_at_h1(const Triple& tri, const Rational& h1);

/// A position where BDP and PEA are both Pythagorean. Both sub-triangles are
/// scaled copies of the primitive triple: BDP by delta, PEA by d - delta.
struct IntegralDecomposition {
  BigInt delta;
  Triple sub_bdp;  ///< (|BD|, |DP|, |BP|) = (a - y, x, h1)
  Triple sub_pea;  ///< (|PE|, |EA|, |PA|) = (y, b - x, h2)
};

/// The d - 1 positions h1 = delta(m^2 + n^2), delta = 1..d-1, in order.
std::vector<IntegralDecomposition> integral_positions(const TripleParams& p);

struct IntegralPosition {
  BigInt delta;
  friend bool operator==(const IntegralPosition&, const IntegralPosition&) = default;
};
struct NonIntegralPosition {
  friend bool operator==(const NonIntegralPosition&, const NonIntegralPosition&) = default;
};
using PositionClass = std::variant<IntegralPosition, NonIntegralPosition>;

/// Integral(delta) iff t c = delta (m^2 + n^2); then both sub-triangles are
/// Pythagorean, otherwise neither is. Throws DomainError unless 0 < t < 1.
PositionClass classify_position(const TripleParams& p, const Rational& t);

}  // namespace hypotria
