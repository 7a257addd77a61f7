#include "hypotria/six_search.hpp"

#include <utility>

namespace hypotria {

std::string_view to_string(LegOrientation o) { return o == LegOrientation::YOdd ? "y-odd" : "y-even"; }

std::optional<InnerParams> classify_leg_pair(const BigInt& x, const BigInt& y) {
  if (x < 1 || y < 1 || x == y) return std::nullopt;
  const BigInt sum = x * x + y * y;
  if (!is_perfect_square(sum)) return std::nullopt;

  const BigInt D = gcd(x, y);
  const BigInt px = x / D;
  const BigInt py = y / D;
  const BigInt hyp = integer_sqrt(sum) / D;
  const bool y_odd = (py & 1) == 1;
  const BigInt& odd = y_odd ? py : px;

  const BigInt M = integer_sqrt((hyp + odd) / 2);
  const BigInt N = integer_sqrt((hyp - odd) / 2);
  // A primitive Pythagorean pair always has exactly one odd leg, and its
  // generators satisfy M^2 - N^2 = odd, 2MN = even.
  if (M * M - N * N != odd || 2 * M * N != (y_odd ? px : py) || !is_valid_generator_pair(M, N)) {
    return std::nullopt;
  }
  return InnerParams{D, M, N, y_odd ? LegOrientation::YOdd : LegOrientation::YEven};
}

SixSearchResult search_six(const TripleParams& p) {
  const BigInt odd = p.odd_leg();
  const BigInt even = p.even_leg();
  const BigInt hyp = p.primitive_hypotenuse();
  SixSearchResult result;
  for (BigInt delta = 1; delta < p.d(); ++delta) {
    const BigInt rest = p.d() - delta;
    BigInt y = delta * odd;
    BigInt x = rest * even;
    if (auto inner = classify_leg_pair(x, y)) {
      BigInt inner_hyp = integer_sqrt(x * x + y * y);
      result.configs.push_back({delta, std::move(x), std::move(y), std::move(inner_hyp), *inner, rest * hyp});
    } else {
      BigInt sum = x * x + y * y;
      result.rejected.push_back({delta, std::move(x), std::move(y), std::move(sum)});
    }
  }
  return result;
}

std::vector<SixConfig> find_six_configs(const TripleParams& p) { return search_six(p).configs; }

Family1Result family1_generate(const BigInt& m, const BigInt& n, const BigInt& M, const BigInt& N,
                               const BigInt& K) {
  if (!is_valid_generator_pair(m, n)) {
    throw DomainError("invalid outer generator pair (" + m.str() + ", " + n.str() + ")");
  }
  if (!is_valid_generator_pair(M, N)) {
    throw DomainError("invalid inner generator pair (" + M.str() + ", " + N.str() + ")");
  }
  if (K < 1) throw DomainError("K must be positive, got " + K.str());

  const BigInt outer_odd = m * m - n * n;
  const BigInt inner_odd = M * M - N * N;
  const BigInt delta = K * m * n * inner_odd;
  const BigInt rest = K * M * N * outer_odd;
  const BigInt d = delta + rest;

  TripleParams outer(d, m, n);
  const BigInt D = K * m * n * outer_odd;
  SixConfig config{delta,
                   rest * outer.even_leg(),
                   delta * outer_odd,
                   D * (M * M + N * N),
                   InnerParams{D, M, N, LegOrientation::YOdd},
                   rest * outer.primitive_hypotenuse()};
  return {std::move(outer), Family1Instance{m, n, M, N, K, delta, d}, std::move(config)};
}

}  // namespace hypotria
