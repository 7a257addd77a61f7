#pragma once

// Brute-force ground truth.
//
// Nothing in here uses the (d, m, n) parametrization or delta indexing to
// produce an answer: triples come from a double loop over legs, and lengths
// at a point come from plane coordinates with C = (0, 0), B = (0, a),
// A = (b, 0). The main modules are only called to be compared against.

#include "hypotria/numeric.hpp"
#include "hypotria/triple.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hypotria::oracle {

/// All (a, b, c) with a^2 + b^2 = c^2 and c <= max_c, in Triple orientation.
std::set<Triple> brute_force_triples(const BigInt& max_c);

/// Integers h1 in 1..c-1 at which x = b h1 / c, a - y = a h1 / c,
/// y, b - x and h2 = c - h1 are all integers.
std::set<BigInt> brute_force_integral_positions(const Triple& tri);

/// Exact square root of a non-negative rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Side lengths at the point P = (x, y) on the hypotenuse, from coordinates.
struct PointLengths {
  Rational x, y, a_minus_y, b_minus_x;
  Rational h1, h2;                   ///< |BP|, |PA|
  std::optional<Rational> diagonal;  ///< |CP| = |DE|, empty when irrational
};

/// Throws DomainError unless (x, y) lies strictly inside segment BA.
PointLengths lengths_at_point(const Triple& tri, const Rational& x, const Rational& y);

PointLengths midpoint_lengths(const Triple& tri);
PointLengths bisector_foot_lengths(const Triple& tri);
PointLengths altitude_foot_lengths(const Triple& tri);

/// BDP and PEA are Pythagorean.
bool outer_pair_integral(const PointLengths& l);
/// The four rectangle triangles are Pythagorean (legs x, y, diagonal |DE|).
bool rectangle_integral(const PointLengths& l);

struct OracleReport {
  std::string claim_id;
  std::uint64_t bound = 0;
  std::uint64_t scanned = 0;
  std::vector<std::string> mismatches;

  bool confirmed() const noexcept { return mismatches.empty(); }
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
  std::string_view bound_meaning;
  std::uint64_t default_bound;
};

const std::vector<ClaimInfo>& registered_claims();

class UnknownClaimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive sweep of one registered claim. Throws UnknownClaimError.
OracleReport verify_claim(std::string_view claim_id, std::uint64_t bound);

}  // namespace hypotria::oracle
