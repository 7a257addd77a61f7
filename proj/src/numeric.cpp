#include "hypotria/numeric.hpp"

#include <cctype>
#include <utility>

namespace hypotria {

BigInt gcd(BigInt u, BigInt v) {
  if (u < 0) u = -u;
  if (v < 0) v = -v;
  while (v != 0) {
    u %= v;
    std::swap(u, v);
  }
  return u;
}

BigInt integer_sqrt(const BigInt& n) {
  if (n < 0) throw DomainError("integer_sqrt: negative argument");
  if (n < 2) return n;

  // 2^(floor(log2 n)/2 + 1) > sqrt(n), so Newton descends monotonically.
  const auto bits = boost::multiprecision::msb(n);
  BigInt x = BigInt(1) << (bits / 2 + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  return x;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  // Squares occupy 12 of the 64 residues mod 64.
  constexpr std::uint64_t kSquareMod64 = 0x0202021202030213ULL;
  const auto low = static_cast<unsigned>(n & 63);
  if (((kSquareMod64 >> low) & 1U) == 0) return false;
  const BigInt r = integer_sqrt(n);
  return r * r == n;
}

bool is_valid_generator_pair(const BigInt& m, const BigInt& n) {
  if (n < 1 || m <= n) return false;
  if (((m + n) & 1) == 0) return false;
  return gcd(m, n) == 1;
}

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw DomainError("not an integer: '" + std::string(text) + "'");
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

Rational::Rational(BigInt value) : num_(std::move(value)), den_(1) {}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

const BigInt& Rational::to_integer() const {
  if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
  return num_;
}

std::string Rational::str(bool suppress_unit_denominator) const {
  if (suppress_unit_denominator && den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const BigInt left = lhs.num_ * rhs.den_;
  const BigInt right = rhs.num_ * lhs.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hypotria
