#include "hypotria/triple.hpp"

#include <sstream>
#include <utility>

namespace hypotria {

namespace {

std::string describe(const BigInt& a, const BigInt& b, const BigInt& c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

TripleParams::TripleParams(BigInt d, BigInt m, BigInt n)
    : d_(std::move(d)), m_(std::move(m)), n_(std::move(n)) {
  if (d_ < 1) throw DomainError("scale factor d must be positive, got " + d_.str());
  if (!is_valid_generator_pair(m_, n_)) {
    throw DomainError("invalid generator pair (m, n) = (" + m_.str() + ", " + n_.str() +
                      "): need m > n >= 1, gcd(m, n) = 1, m + n odd");
  }
}

std::ostream& operator<<(std::ostream& os, const TripleParams& p) {
  return os << "(d=" << p.d() << ", m=" << p.m() << ", n=" << p.n() << ")";
}

Triple::Triple(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ < 1 || b_ < 1 || a_ * a_ + b_ * b_ != c_ * c_) {
    throw DomainError(describe(a_, b_, c_) + " is not a Pythagorean triple");
  }
  const BigInt g = gcd(a_, b_);
  if (((a_ / g) & 1) == 0) {
    throw DomainError(describe(a_, b_, c_) + " has its even leg first");
  }
}

std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << describe(t.a(), t.b(), t.c()); }

Triple triple_from_params(const TripleParams& p) {
  return Triple(p.d() * p.odd_leg(), p.d() * p.even_leg(), p.d() * p.primitive_hypotenuse());
}

RecoveredParams recover_params(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a < 1 || b < 1 || c < 1 || a * a + b * b != c * c) {
    throw DomainError(describe(a, b, c) + " is not a Pythagorean triple");
  }
  const BigInt d = gcd(a, b);
  BigInt odd = a / d;
  BigInt even = b / d;
  const bool swapped = (odd & 1) == 0;
  if (swapped) std::swap(odd, even);
  const BigInt hyp = c / d;

  // m^2 = (c' + a') / 2, n^2 = (c' - a') / 2 on the primitive part.
  const BigInt m_sq = (hyp + odd) / 2;
  const BigInt n_sq = (hyp - odd) / 2;
  const BigInt m = integer_sqrt(m_sq);
  if (m * m != m_sq || (hyp + odd) % 2 != 0) {
    throw DomainError(describe(a, b, c) + ": primitive part has no square m^2");
  }
  const BigInt n = integer_sqrt(n_sq);
  if (n * n != n_sq || n < 1) {
    throw DomainError(describe(a, b, c) + ": primitive part has no square n^2");
  }
  return {TripleParams(d, m, n), swapped};
}

std::vector<TripleParams> enumerate_params(const BigInt& max_c) {
  std::vector<TripleParams> out;
  for (BigInt m = 2; m * m + 1 <= max_c; ++m) {
    for (BigInt n = 1; n < m && m * m + n * n <= max_c; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      const BigInt hyp = m * m + n * n;
      for (BigInt d = 1; d * hyp <= max_c; ++d) out.emplace_back(d, m, n);
    }
  }
  return out;
}

}  // namespace hypotria
