#pragma once

#include "hypotria/numeric.hpp"

#include <vector>

namespace hypotria {

/// Generator data (d, m, n) of the triple
///   a = d(m^2 - n^2),  b = d(2mn),  c = d(m^2 + n^2).
/// Construction enforces d >= 1, m > n >= 1, gcd(m, n) = 1, m + n odd.
class TripleParams {
 public:
  TripleParams(BigInt d, BigInt m, BigInt n);

  const BigInt& d() const noexcept { return d_; }
  const BigInt& m() const noexcept { return m_; }
  const BigInt& n() const noexcept { return n_; }

  /// m^2 - n^2, the odd leg of the primitive triple.
  BigInt odd_leg() const { return m_ * m_ - n_ * n_; }
  /// 2mn, the even leg of the primitive triple.
  BigInt even_leg() const { return 2 * m_ * n_; }
  /// m^2 + n^2, the primitive hypotenuse.
  BigInt primitive_hypotenuse() const { return m_ * m_ + n_ * n_; }

  friend bool operator==(const TripleParams&, const TripleParams&) = default;

 private:
  BigInt d_;
  BigInt m_;
  BigInt n_;
};

std::ostream& operator<<(std::ostream& os, const TripleParams& p);

/// Right triangle CBA with legs a = |CB|, b = |CA| and hypotenuse c = |BA|.
///
/// Orientation is fixed: a / gcd(a, b) is odd and b / gcd(a, b) is even, so
/// `a` is always the d(m^2 - n^2) leg.
class Triple {
 public:
  /// Throws DomainError unless a^2 + b^2 = c^2 with a, b > 0 in the
  /// canonical orientation.
  Triple(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend bool operator<(const Triple& lhs, const Triple& rhs) {
    if (lhs.a_ != rhs.a_) return lhs.a_ < rhs.a_;
    if (lhs.b_ != rhs.b_) return lhs.b_ < rhs.b_;
    return lhs.c_ < rhs.c_;
  }

 private:
  BigInt a_;
  BigInt b_;
  BigInt c_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

Triple triple_from_params(const TripleParams& p);

struct RecoveredParams {
  TripleParams params;
  /// True when the caller passed the even leg first.
  bool legs_swapped = false;
};

/// Inverse of triple_from_params. Legs may come in either order.
/// Throws DomainError if (a, b, c) is not a Pythagorean triple.
RecoveredParams recover_params(const BigInt& a, const BigInt& b, const BigInt& c);

/// Every valid (d, m, n) with d(m^2 + n^2) <= max_c, sorted by (m, n, d).
std::vector<TripleParams> enumerate_params(const BigInt& max_c);

}  // namespace hypotria
