#include "hypotria/oracle.hpp"

#include "hypotria/decomposition.hpp"
#include "hypotria/six_search.hpp"
#include "hypotria/special_points.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace hypotria::oracle {

namespace {

std::string label(const TripleParams& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Triple normalized(BigInt a, BigInt b, BigInt c) {
  const BigInt g = gcd(a, b);
  if (((a / g) & 1) == 0) std::swap(a, b);
  return Triple(std::move(a), std::move(b), std::move(c));
}

std::string str(const std::optional<Rational>& q) { return q ? q->str() : std::string("irrational"); }

// Compares the report's named lengths with the coordinate route.
void compare_lengths(const SpecialPointReport& report, const PointLengths& direct, const std::string& where,
                     std::vector<std::string>& mismatches) {
  const std::vector<std::pair<std::string, std::optional<Rational>>> expected = {
      {"x", direct.x},   {"y", direct.y},   {"a_minus_y", direct.a_minus_y}, {"b_minus_x", direct.b_minus_x},
      {"h1", direct.h1}, {"h2", direct.h2}, {"h", direct.diagonal}};
  for (const auto& entry : report.lengths) {
    const auto it = std::find_if(expected.begin(), expected.end(),
                                 [&](const auto& e) { return e.first == entry.name; });
    if (it == expected.end()) continue;
    if (!it->second || *it->second != entry.value) {
      mismatches.push_back(where + " " + entry.name + ": expected " + str(it->second) + ", actual " +
                           entry.value.str());
    }
  }
}

using Sweep = std::function<void(std::uint64_t bound, OracleReport&)>;

void sweep_triples_complete(std::uint64_t bound, OracleReport& report) {
  const auto params = enumerate_params(bound);
  std::set<Triple> generated;
  for (const auto& p : params) {
    if (!generated.insert(triple_from_params(p)).second) {
      report.mismatches.push_back(label(p) + " duplicates an earlier triple");
    }
  }
  const auto brute = brute_force_triples(bound);
  report.scanned = brute.size();
  for (const auto& t : brute) {
    if (!generated.contains(t)) {
      std::ostringstream os;
      os << "brute-force triple " << t << " is not generated";
      report.mismatches.push_back(os.str());
    }
  }
  for (const auto& t : generated) {
    if (!brute.contains(t)) {
      std::ostringstream os;
      os << "generated triple " << t << " is missing from brute force";
      report.mismatches.push_back(os.str());
    }
  }
}

void sweep_position_dichotomy(std::uint64_t bound, OracleReport& report) {
  for (const auto& p : enumerate_params(bound)) {
    const Triple tri = triple_from_params(p);
    const BigInt& a = tri.a();
    const BigInt& b = tri.b();
    const BigInt& c = tri.c();
    for (BigInt h1 = 1; h1 < c; ++h1) {
      ++report.scanned;
      const BigInt h2 = c - h1;
      const bool bdp = (b * h1) % c == 0 && (a * h1) % c == 0;
      const bool pea = (a * h2) % c == 0 && (b * h2) % c == 0;
      const Decomposition dec = decompose_at_h1(tri, h1);
      const PositionClass cls = classify_position(p, Rational(h1, c));
      const auto* integral = std::get_if<IntegralPosition>(&cls);
      const std::string where = label(p) + " h1=" + h1.str();
      if (bdp != pea) report.mismatches.push_back(where + ": BDP and PEA disagree");
      if (bdp != dec.all_integral()) report.mismatches.push_back(where + ": decomposition integrality");
      if (bdp != (integral != nullptr)) report.mismatches.push_back(where + ": classify_position");
      if (integral && integral->delta * (c / p.d()) != h1) {
        report.mismatches.push_back(where + ": delta " + integral->delta.str() + " does not reproduce h1");
      }
    }
  }
}

void sweep_position_count(std::uint64_t bound, OracleReport& report) {
  for (const auto& p : enumerate_params(bound)) {
    ++report.scanned;
    const Triple tri = triple_from_params(p);
    const auto positions = integral_positions(p);
    const std::string where = label(p);
    if (BigInt(positions.size()) != p.d() - 1) {
      report.mismatches.push_back(where + ": " + std::to_string(positions.size()) + " positions, expected d-1");
    }
    std::set<BigInt> h1s;
    for (const auto& pos : positions) {
      h1s.insert(pos.sub_bdp.c());
      if (pos.sub_bdp.a() + pos.sub_pea.a() != tri.a() || pos.sub_bdp.b() + pos.sub_pea.b() != tri.b() ||
          pos.sub_bdp.c() + pos.sub_pea.c() != tri.c()) {
        report.mismatches.push_back(where + " delta=" + pos.delta.str() + ": sub-triangles do not add up");
      }
    }
    if (h1s != brute_force_integral_positions(tri)) {
      report.mismatches.push_back(where + ": integral h1 set differs from brute force");
    }
  }
}

// Shared protocol for the three special-point criteria: the report, the
// coordinate route and the divisibility criterion must all agree.
Sweep special_point_sweep(PointKind kind, std::function<PointLengths(const Triple&)> direct_route,
                          std::function<bool(const PointLengths&)> direct_all_pythagorean,
                          std::function<bool(const TripleParams&)> criterion) {
  return [=](std::uint64_t bound, OracleReport& report) {
    for (const auto& p : enumerate_params(bound)) {
      ++report.scanned;
      const Triple tri = triple_from_params(p);
      const SpecialPointReport analysed = analyze_special_point(kind, p);
      const PointLengths direct = direct_route(tri);
      const bool truth = direct_all_pythagorean(direct);
      const std::string where = label(p);
      if (analysed.all_pythagorean != truth) {
        report.mismatches.push_back(where + ": report says all_pythagorean=" +
                                    (analysed.all_pythagorean ? "true" : "false") + ", coordinates say " +
                                    (truth ? "true" : "false"));
      }
      if (criterion(p) != truth) report.mismatches.push_back(where + ": divisibility criterion disagrees");
      if (analysed.witness.has_value() != truth) report.mismatches.push_back(where + ": witness presence");
      compare_lengths(analysed, direct, where, report.mismatches);
    }
  };
}

void sweep_six_grid(std::uint64_t bound, OracleReport& report) {
  constexpr unsigned kMaxGenerator = 9;
  for (unsigned m = 2; m <= kMaxGenerator; ++m) {
    for (unsigned n = 1; n < m; ++n) {
      if (!is_valid_generator_pair(m, n)) continue;
      for (std::uint64_t d = 1; d <= bound; ++d) {
        ++report.scanned;
        const TripleParams p(d, m, n);
        const Triple tri = triple_from_params(p);
        const std::string where = label(p);

        std::set<std::pair<BigInt, BigInt>> expected;
        for (const BigInt& h1 : brute_force_integral_positions(tri)) {
          const BigInt x = tri.b() * h1 / tri.c();
          const BigInt y = tri.a() - tri.a() * h1 / tri.c();
          if (x != y && is_perfect_square(x * x + y * y)) expected.emplace(x, y);
        }

        std::set<std::pair<BigInt, BigInt>> found;
        for (const auto& cfg : find_six_configs(p)) {
          found.emplace(cfg.x, cfg.y);
          const auto& in = cfg.inner;
          const BigInt inner_odd = in.D * (in.M * in.M - in.N * in.N);
          const BigInt inner_even = in.D * 2 * in.M * in.N;
          const bool y_odd_holds = cfg.y == inner_odd && cfg.x == inner_even;
          const bool y_even_holds = cfg.y == inner_even && cfg.x == inner_odd;
          const std::string at = where + " delta=" + cfg.delta.str();
          if (y_odd_holds == y_even_holds) report.mismatches.push_back(at + ": not exactly one orientation holds");
          if ((in.orientation == LegOrientation::YOdd) != y_odd_holds) {
            report.mismatches.push_back(at + ": orientation tag is wrong");
          }
          if (!is_valid_generator_pair(in.M, in.N)) report.mismatches.push_back(at + ": invalid (M, N)");
          if (cfg.inner_hypotenuse * cfg.inner_hypotenuse != cfg.x * cfg.x + cfg.y * cfg.y) {
            report.mismatches.push_back(at + ": inner hypotenuse");
          }
          const Decomposition dec = decompose_at_h1(tri, cfg.h1);
          if (dec.x != Rational(cfg.x) || dec.y != Rational(cfg.y)) {
            report.mismatches.push_back(at + ": h1=" + cfg.h1.str() + " does not realise (x, y)");
          }
        }
        if (found != expected) {
          report.mismatches.push_back(where + ": " + std::to_string(found.size()) + " configurations, brute force " +
                                      std::to_string(expected.size()));
        }
      }
    }
  }
}

void sweep_family1_sound(std::uint64_t bound, OracleReport& report) {
  constexpr unsigned kMaxK = 5;
  std::vector<std::pair<BigInt, BigInt>> pairs;
  for (std::uint64_t m = 2; m <= bound; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      if (is_valid_generator_pair(m, n)) pairs.emplace_back(m, n);
    }
  }
  for (const auto& [m, n] : pairs) {
    for (const auto& [M, N] : pairs) {
      for (unsigned K = 1; K <= kMaxK; ++K) {
        ++report.scanned;
        const Family1Result fam = family1_generate(m, n, M, N, K);
        const auto& cfg = fam.config;
        std::ostringstream os;
        os << "(m,n,M,N,K)=(" << m << "," << n << "," << M << "," << N << "," << K << ")";
        const std::string where = os.str();
        if (cfg.delta < 1 || cfg.delta > fam.outer.d() - 1) report.mismatches.push_back(where + ": delta out of range");
        if (!is_perfect_square(cfg.x * cfg.x + cfg.y * cfg.y)) {
          report.mismatches.push_back(where + ": x^2 + y^2 is not a perfect square");
        }
        const auto configs = find_six_configs(fam.outer);
        if (std::find(configs.begin(), configs.end(), cfg) == configs.end()) {
          report.mismatches.push_back(where + ": configuration not found by the search");
        }
        const Decomposition dec = decompose_at_h1(triple_from_params(fam.outer), cfg.h1);
        if (!dec.all_integral() || dec.x != Rational(cfg.x) || dec.y != Rational(cfg.y)) {
          report.mismatches.push_back(where + ": designated point does not realise (x, y)");
        }
      }
    }
  }
}

void sweep_coprime_facts(std::uint64_t bound, OracleReport& report) {
  for (std::uint64_t mi = 2; mi <= bound; ++mi) {
    for (std::uint64_t ni = 1; ni < mi; ++ni) {
      const BigInt m = mi;
      const BigInt n = ni;
      if (!is_valid_generator_pair(m, n)) continue;
      ++report.scanned;
      const BigInt s = m * m + n * n;
      const BigInt o = m * m - n * n;
      const BigInt e = 2 * m * n;
      const std::vector<std::pair<const char*, std::pair<BigInt, BigInt>>> facts = {
          {"(s, e)", {s, e}},
          {"(s, o)", {s, o}},
          {"(o, e)", {o, e}},
          {"(s^2, o^3)", {s * s, o * o * o}},
          {"(s^2, e^2)", {s * s, e * e}},
          {"(s, o^2)", {s, o * o}},
          {"(s, e^2)", {s, e * e}},
          {"(s, e o)", {s, e * o}},
          {"(s^2, o^2 e)", {s * s, o * o * e}},
          {"(s^2, o e^2)", {s * s, o * e * e}},
      };
      for (const auto& [name, values] : facts) {
        if (gcd(values.first, values.second) != 1) {
          report.mismatches.push_back("(m, n) = (" + m.str() + ", " + n.str() + "): gcd" + name + " != 1");
        }
      }
    }
  }
}

struct Claim {
  ClaimInfo info;
  Sweep sweep;
};

const std::vector<Claim>& claims() {
  static const std::vector<Claim> registry = {
      {{"triples-complete", "parametric triples with c <= N equal the brute-force set", "max hypotenuse", 500},
       sweep_triples_complete},
      {{"position-dichotomy", "at integer h1, BDP and PEA are both Pythagorean iff (m^2+n^2) | h1, else neither",
        "max hypotenuse", 300},
       sweep_position_dichotomy},
      {{"position-count", "exactly d-1 integral positions, matching the brute-force h1 set", "max hypotenuse", 300},
       sweep_position_count},
      {{"midpoint-parity", "midpoint: all six triangles Pythagorean iff d is even", "max hypotenuse", 2000},
       special_point_sweep(
           PointKind::Midpoint, midpoint_lengths,
           [](const PointLengths& l) { return outer_pair_integral(l) && rectangle_integral(l); },
           [](const TripleParams& p) { return p.d() % 2 == 0; })},
      {{"bisector-iff", "bisector foot: BDI and IEA Pythagorean iff (m^2-n^2+2mn) | d", "max hypotenuse", 2000},
       special_point_sweep(
           PointKind::BisectorFoot, bisector_foot_lengths, outer_pair_integral,
           [](const TripleParams& p) { return p.d() % (p.odd_leg() + p.even_leg()) == 0; })},
      {{"altitude-iff", "altitude foot: all six triangles Pythagorean iff (m^2+n^2)^2 | d", "max hypotenuse", 2000},
       special_point_sweep(
           PointKind::AltitudeFoot, altitude_foot_lengths,
           [](const PointLengths& l) { return outer_pair_integral(l) && rectangle_integral(l); },
           [](const TripleParams& p) {
             const BigInt s = p.primitive_hypotenuse();
             return p.d() % (s * s) == 0;
           })},
      {{"six-grid", "six-configurations equal the brute-force h1 scan with x^2+y^2 square (m <= 9)",
        "max scale factor d", 40},
       sweep_six_grid},
      {{"family1-sound", "Family 1 instances (K <= 5) are found by the six-configuration search",
        "max generator m and M", 8},
       sweep_family1_sound},
      {{"coprime-facts", "pairwise and compound coprimality of m^2+n^2, m^2-n^2, 2mn", "max generator m", 200},
       sweep_coprime_facts},
  };
  return registry;
}

}  // namespace

std::set<Triple> brute_force_triples(const BigInt& max_c) {
  std::set<Triple> out;
  const BigInt limit = max_c * max_c;
  for (BigInt a = 1; a * a < limit; ++a) {
    for (BigInt b = a + 1; a * a + b * b <= limit; ++b) {
      const BigInt sum = a * a + b * b;
      if (is_perfect_square(sum)) out.insert(normalized(a, b, integer_sqrt(sum)));
    }
  }
  return out;
}

std::set<BigInt> brute_force_integral_positions(const Triple& tri) {
  const BigInt& a = tri.a();
  const BigInt& b = tri.b();
  const BigInt& c = tri.c();
  std::set<BigInt> out;
  for (BigInt h1 = 1; h1 < c; ++h1) {
    if ((b * h1) % c != 0 || (a * h1) % c != 0) continue;
    const BigInt x = b * h1 / c;
    const BigInt y = a - a * h1 / c;
    const BigInt h2 = c - h1;
    // Recheck the complementary triangle on its own terms.
    if ((b * h2) % c == 0 && (a * h2) % c == 0 && b - x == b * h2 / c && y == a * h2 / c) out.insert(h1);
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < Rational(0)) return std::nullopt;
  const BigInt& num = q.numerator();
  const BigInt& den = q.denominator();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  return Rational(integer_sqrt(num), integer_sqrt(den));
}

PointLengths lengths_at_point(const Triple& tri, const Rational& x, const Rational& y) {
  const Rational a = tri.a();
  const Rational b = tri.b();
  if (x <= Rational(0) || x >= b || y <= Rational(0) || y >= a || a * x + b * y != a * b) {
    throw DomainError("(" + x.str() + ", " + y.str() + ") is not strictly inside the hypotenuse");
  }
  PointLengths out{x, y, a - y, b - x, {}, {}, rational_sqrt(x * x + y * y)};
  // P, B and A are collinear with rational coordinates, so these distances
  // are rational multiples of c.
  const auto h1 = rational_sqrt(x * x + out.a_minus_y * out.a_minus_y);
  const auto h2 = rational_sqrt(out.b_minus_x * out.b_minus_x + y * y);
  if (!h1 || !h2) throw std::logic_error("irrational distance along a rational hypotenuse");
  out.h1 = *h1;
  out.h2 = *h2;
  return out;
}

PointLengths midpoint_lengths(const Triple& tri) {
  return lengths_at_point(tri, Rational(tri.b(), 2), Rational(tri.a(), 2));
}

PointLengths bisector_foot_lengths(const Triple& tri) {
  // Intersection of X = Y with aX + bY = ab.
  const Rational coord(tri.a() * tri.b(), tri.a() + tri.b());
  return lengths_at_point(tri, coord, coord);
}

PointLengths altitude_foot_lengths(const Triple& tri) {
  // Projection of the origin onto aX + bY = ab along the normal (a, b).
  const BigInt norm_sq = tri.a() * tri.a() + tri.b() * tri.b();
  const Rational scale(tri.a() * tri.b(), norm_sq);
  return lengths_at_point(tri, scale * tri.a(), scale * tri.b());
}

bool outer_pair_integral(const PointLengths& l) {
  return l.x.is_integer() && l.y.is_integer() && l.a_minus_y.is_integer() && l.b_minus_x.is_integer() &&
         l.h1.is_integer() && l.h2.is_integer();
}

bool rectangle_integral(const PointLengths& l) {
  return l.x.is_integer() && l.y.is_integer() && l.diagonal && l.diagonal->is_integer();
}

const std::vector<ClaimInfo>& registered_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

OracleReport verify_claim(std::string_view claim_id, std::uint64_t bound) {
  for (const auto& claim : claims()) {
    if (claim.info.id != claim_id) continue;
    OracleReport report{std::string(claim_id), bound, 0, {}};
    claim.sweep(bound, report);
    return report;
  }
  throw UnknownClaimError("unknown claim '" + std::string(claim_id) + "'");
}

}  // namespace hypotria::oracle
