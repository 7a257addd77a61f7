#pragma once

// Positions where all six triangles are Pythagorean: BDP, PEA and the four
// congruent triangles DCE, PEC, CDP, EPD inside the rectangle CDPE.
//
// Positions are indexed the way the search conditions are usually written:
//   y = delta (m^2 - n^2),  x = (d - delta)(2mn),  1 <= delta <= d - 1,
// and the rectangle triangles are Pythagorean iff x^2 + y^2 is a square.
// Under this indexing P sits at |BP| = (d - delta)(m^2 + n^2), i.e. delta
// counts primitive-hypotenuse steps from A rather than from B.

#include "hypotria/numeric.hpp"
#include "hypotria/triple.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace hypotria {

/// Which rectangle leg carries the odd primitive part.
enum class LegOrientation {
  YOdd,   ///< y = D(M^2 - N^2), x = D(2MN)
  YEven,  ///< y = D(2MN), x = D(M^2 - N^2)
};

std::string_view to_string(LegOrientation o);

/// Parametrization (D, M, N) of the rectangle's diagonal triangle.
struct InnerParams {
  BigInt D;
  BigInt M;
  BigInt N;
  LegOrientation orientation{};
  friend bool operator==(const InnerParams&, const InnerParams&) = default;
};

/// If x^2 + y^2 is a perfect square (and x != y), returns D = gcd(x, y) and
/// the generators of the primitive pair.
std::optional<InnerParams> classify_leg_pair(const BigInt& x, const BigInt& y);

struct SixConfig {
  BigInt delta;
  BigInt x;                ///< |DP| = |CE|
  BigInt y;                ///< |DC| = |PE|
  BigInt inner_hypotenuse; ///< |CP| = |DE| = sqrt(x^2 + y^2)
  InnerParams inner;
  BigInt h1;               ///< |BP| of the configuration
  friend bool operator==(const SixConfig&, const SixConfig&) = default;
};

struct RejectedPosition {
  BigInt delta;
  BigInt x;
  BigInt y;
  BigInt sum_of_squares;  ///< x^2 + y^2, not a perfect square
};

struct SixSearchResult {
  std::vector<SixConfig> configs;
  std::vector<RejectedPosition> rejected;
};

/// Scans delta = 1..d-1 in order, splitting positions into hits and misses.
SixSearchResult search_six(const TripleParams& p);

std::vector<SixConfig> find_six_configs(const TripleParams& p);

struct Family1Instance {
  BigInt m, n;  ///< outer generators
  BigInt M, N;  ///< inner generators
  BigInt K;
  BigInt delta;
  BigInt d;
};

struct Family1Result {
  TripleParams outer;
  Family1Instance instance;
  SixConfig config;
};

/// delta = K mn(M^2 - N^2), d = K[mn(M^2 - N^2) + MN(m^2 - n^2)], with
/// D = K mn(m^2 - n^2) on the y-odd branch. Throws DomainError for invalid
/// generator pairs or K < 1.
Family1Result family1_generate(const BigInt& m, const BigInt& n, const BigInt& M, const BigInt& N,
                               const BigInt& K);

}  // namespace hypotria
