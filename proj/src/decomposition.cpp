#include "hypotria/decomposition.hpp"

namespace hypotria {

namespace {

void require_open_unit(const Rational& t) {
  if (t <= Rational(0) || t >= Rational(1)) {
    throw DomainError("position t = " + t.str() + " must satisfy 0 < t < 1");
  }
}

}  // namespace

bool Decomposition::all_integral() const {
  return x.is_integer() && y.is_integer() && a_minus_y.is_integer() && b_minus_x.is_integer() &&
         h1.is_integer() && h2.is_integer();
}

Decomposition decompose_at_fraction(const Triple& tri, const Rational& t) {
  require_open_unit(t);
  const Rational s = Rational(1) - t;
  Decomposition out;
  out.t = t;
  out.h1 = t * tri.c();
  out.x = t * tri.b();
  out.a_minus_y = t * tri.a();
  out.h2 = s * tri.c();
  out.y = s * tri.a();
  out.b_minus_x = s * tri.b();
  return out;
}

Decomposition decompose_at_h1(const Triple& tri, const Rational& h1) {
  if (h1 <= Rational(0) || h1 >= Rational(tri.c())) {
    throw DomainError("h1 = " + h1.str() + " must satisfy 0 < h1 < c = " + tri.c().str());
  }
  return decompose_at_fraction(tri, h1 / tri.c());
}

std::vector<IntegralDecomposition> integral_positions(const TripleParams& p) {
  const BigInt odd = p.odd_leg();
  const BigInt even = p.even_leg();
  const BigInt hyp = p.primitive_hypotenuse();
  std::vector<IntegralDecomposition> out;
  for (BigInt delta = 1; delta < p.d(); ++delta) {
    const BigInt rest = p.d() - delta;
    out.push_back({delta, Triple(delta * odd, delta * even, delta * hyp),
                   Triple(rest * odd, rest * even, rest * hyp)});
  }
  return out;
}

PositionClass classify_position(const TripleParams& p, const Rational& t) {
  require_open_unit(t);
  const Rational h1 = t * (p.d() * p.primitive_hypotenuse());
  if (!h1.is_integer()) return NonIntegralPosition{};
  const BigInt hyp = p.primitive_hypotenuse();
  if (h1.numerator() % hyp != 0) return NonIntegralPosition{};
  return IntegralPosition{h1.numerator() / hyp};
}

}  // namespace hypotria
