#pragma once

// Exact integer and rational primitives.
//
// Every length in the library is either a BigInt or a Rational; nothing is
// ever routed through floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypotria {

// Expression templates are off so arithmetic always yields a BigInt value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Raised for inputs that violate a mathematical precondition (invalid
/// generator pair, non-triple, position off the open hypotenuse, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Greatest common divisor of |u| and |v|; gcd(0, 0) = 0.
BigInt gcd(BigInt u, BigInt v);

/// floor(sqrt(n)) by integer Newton iteration. Throws DomainError for n < 0.
BigInt integer_sqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// m > n >= 1, gcd(m, n) = 1 and m + n odd.
bool is_valid_generator_pair(const BigInt& m, const BigInt& n);

/// Parses an optionally signed decimal integer. Throws DomainError on junk.
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(BigInt(value)) {}  // NOLINT
  /// Throws DomainError if denominator is zero.
  Rational(BigInt numerator, BigInt denominator);

  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  /// Throws DomainError if the value is not an integer.
  const BigInt& to_integer() const;

  /// "p/q"; with `suppress_unit_denominator` an integer renders as "p".
  std::string str(bool suppress_unit_denominator = false) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hypotria
