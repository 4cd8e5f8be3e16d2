#include <doctest.h>

#include "oracles.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/zeta.hpp"

using namespace weilzeta;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

IntPoly linear(const BigInt& root) { return IntPoly{BigInt(1), BigInt(-root)}; }

IntPoly product(const std::vector<IntPoly>& ps) {
  IntPoly r{BigInt(1)};
  for (const auto& p : ps) r *= p;
  return r;
}

IntPoly power(const IntPoly& p, unsigned e) {
  IntPoly r{BigInt(1)};
  while (e-- > 0) r *= p;
  return r;
}

// Counts of an elliptic curve with trace a: N_n = q^n + 1 - (alpha^n + beta^n),
// with the power sums from s_n = a s_{n-1} - q s_{n-2}.
std::vector<BigInt> elliptic_counts(const BigInt& q, const BigInt& a, unsigned terms) {
  std::vector<BigInt> s{BigInt(2), a}, out;
  for (unsigned n = 2; n <= terms; ++n) s.push_back(a * s[n - 1] - q * s[n - 2]);
  for (unsigned n = 1; n <= terms; ++n) out.push_back(pow(q, n) + 1 - s[n]);
  return out;
}

PointCountSeries series(const BigInt& q, std::vector<BigInt> counts) { return {q, std::move(counts)}; }

}  // namespace

TEST_CASE("projective line and plane") {
  for (long q : {2, 3, 4, 5, 7, 9}) {
    std::vector<BigInt> counts;
    for (unsigned n = 1; n <= 4; ++n) counts.push_back(pow(BigInt(q), n) + 1);
    auto z = zeta_from_counts(series(q, counts), {0, 2});
    CHECK(z.numerator == IntPoly{BigInt(1)});
    CHECK(z.denominator == linear(1) * linear(q));
  }
  auto z = zeta_from_counts(series(2, {7, 21, 73}), {0, 3});
  CHECK(z.denominator == product({linear(1), linear(2), linear(4)}));
  CHECK(z.numerator == IntPoly{BigInt(1)});
}

TEST_CASE("elliptic curve from two counts") {
  // N_1 = 9 over F_5 gives a = 5 + 1 - 9 = -3, numerator 1 - a t + q t^2.
  auto z = zeta_from_counts_anchored(series(5, {9, 27}), {2, 2}, 1);
  CHECK(z.numerator == IntPoly{1, 3, 5});
  CHECK(z.denominator == linear(1) * linear(5));
  CHECK(counts_required({2, 2}, 1) == 2);
  CHECK(counts_required({2, 2}, std::nullopt) == 4);
  // An inconsistent N_2 is caught by verification when more counts are given.
  CHECK(throws_kind(ErrorKind::NoRationalFit, [] { zeta_from_counts_anchored(series(5, {9, 27, 100}), {2, 2}, 1); }));
  // The unanchored fit agrees given four counts.
  auto counts = elliptic_counts(5, -3, 4);
  CHECK(counts == std::vector<BigInt>{9, 27, 108, 675});
  CHECK(zeta_from_counts(series(5, counts), {2, 2}) == z);
}

TEST_CASE("fit failures") {
  CHECK(throws_kind(ErrorKind::InsufficientCounts, [] { zeta_from_counts(series(3, {4}), {0, 2}); }));
  // Four corrupted counts determine some rational function, just not an integral one.
  CHECK(throws_kind(ErrorKind::NonIntegralCoefficients, [] { zeta_from_counts(series(5, {9, 27, 100, 600}), {2, 2}); }));
  CHECK(throws_kind(ErrorKind::NoRationalFit, [] { zeta_from_counts_anchored(series(5, {9, 27, 100, 600}), {2, 2}, 1); }));
  // exp(t^2 / 2) fits 1 + t^2/2 to the required order but is not integral.
  CHECK(throws_kind(ErrorKind::NonIntegralCoefficients, [] { zeta_from_counts(series(2, {0, 1}), {2, 0}); }));
}

TEST_CASE("counts from a zeta function") {
  ZetaFunction p1{3, IntPoly{BigInt(1)}, linear(1) * linear(3)};
  CHECK(counts_from_zeta(p1, 2).counts == std::vector<BigInt>{4, 10});
  ZetaFunction point{1, IntPoly{BigInt(1)}, linear(1)};
  CHECK(counts_from_zeta(point, 3).counts == std::vector<BigInt>{1, 1, 1});
  ZetaFunction e{5, IntPoly{1, 3, 5}, linear(1) * linear(5)};
  CHECK(counts_from_zeta(e, 2).counts == std::vector<BigInt>{9, 27});
  CHECK(throws_kind(ErrorKind::NonIntegralCount, [] { counts_from_zeta({5, IntPoly{1, -5}, IntPoly{1}}, 1); }));
  CHECK(throws_kind(ErrorKind::NonIntegralCount, [] { counts_from_zeta({5, IntPoly{1, 1}, IntPoly{2, 1}}, 2); }));
}

TEST_CASE("round trip through counts") {
  std::vector<std::pair<PointCountSeries, DegreeSplit>> fixtures;
  for (long q : {2, 3, 5, 7, 8, 9})
    for (unsigned m = 1; m <= 3; ++m) {
      std::vector<BigInt> c;
      for (unsigned n = 1; n <= m + 3; ++n) c.push_back(oracle::projective_points(m, pow(BigInt(q), n)));
      fixtures.push_back({series(q, c), {0, m + 1}});
    }
  for (long a : {-4, -3, 0, 2, 4}) fixtures.push_back({series(5, elliptic_counts(5, a, 6)), {2, 2}});
  for (const auto& [s, split] : fixtures) {
    auto z = zeta_from_counts(s, split);
    CHECK(counts_from_zeta(z, static_cast<unsigned>(s.counts.size())).counts == s.counts);
  }
}

TEST_CASE("weight factorization of worked examples") {
  ZetaFunction e{5, IntPoly{1, 3, 5}, linear(1) * linear(5)};
  auto w = factor_by_weights(e, CohomologyProfile(1, {1, 2, 1}));
  REQUIRE(w.factors.size() == 3);
  CHECK(w.factors[0] == linear(1));
  CHECK(w.factors[1] == IntPoly{1, 3, 5});
  CHECK(w.factors[2] == linear(5));
  CHECK(w.product() == e);

  ZetaFunction p2{2, IntPoly{BigInt(1)}, product({linear(1), linear(2), linear(4)})};
  auto wp = factor_by_weights(p2, CohomologyProfile(2, {1, 0, 1, 0, 1}));
  CHECK(wp.factors == std::vector<IntPoly>{linear(1), IntPoly{BigInt(1)}, linear(2), IntPoly{BigInt(1)}, linear(4)});

  ZetaFunction point{7, IntPoly{BigInt(1)}, linear(1)};
  auto w0 = factor_by_weights(point, CohomologyProfile(0, {1}));
  CHECK(w0.factors == std::vector<IntPoly>{linear(1)});

  CHECK(throws_kind(ErrorKind::WeightSeparationFailed,
                    [] { factor_by_weights({5, IntPoly{1, -50, 625}, linear(1) * linear(5)}, CohomologyProfile(1, {1, 2, 1})); }));
}

TEST_CASE("surfaces built from an elliptic curve") {
  const BigInt q = 5, a = -3;
  auto ec = elliptic_counts(q, a, 16);
  IntPoly h1{BigInt(1), BigInt(-a), q};
  IntPoly h1_twist{BigInt(1), BigInt(-a * q), q * q * q};

  SUBCASE("E x P^1") {
    std::vector<BigInt> counts;
    for (unsigned n = 1; n <= 10; ++n) counts.push_back(ec[n - 1] * (pow(q, n) + 1));
    CohomologyProfile profile(2, {1, 2, 2, 2, 1});
    auto z = zeta_from_counts_anchored(series(q, counts), split_of(profile), 2);
    auto w = factor_by_weights(z, profile);
    CHECK(w.factors == std::vector<IntPoly>{linear(1), h1, power(linear(q), 2), h1_twist, linear(q * q)});
    CHECK(check_functional_equation(w).ok);
    CHECK(check_riemann_hypothesis(w).ok);
  }
  SUBCASE("E x E with repeated inverse roots") {
    std::vector<BigInt> counts;
    for (unsigned n = 1; n <= 16; ++n) counts.push_back(ec[n - 1] * ec[n - 1]);
    CohomologyProfile profile(2, {1, 4, 6, 4, 1});
    auto z = zeta_from_counts(series(q, counts), split_of(profile));
    CHECK(z == zeta_from_counts_anchored(series(q, {counts.begin(), counts.begin() + 14}), split_of(profile), 2));
    auto w = factor_by_weights(z, profile);
    IntPoly h2 = power(linear(q), 4) * IntPoly{BigInt(1), BigInt(-(a * a - 2 * q)), q * q};
    CHECK(w.factors == std::vector<IntPoly>{linear(1), power(h1, 2), h2, power(h1_twist, 2), linear(q * q)});
    CHECK(check_functional_equation(w).ok);
    CHECK(check_riemann_hypothesis(w).ok);
    auto traces = traces_from_factorization(w, 5);
    for (unsigned n = 1; n <= 5; ++n) CHECK(traces.lefschetz_sum(n) == Rational(counts[n - 1]));
  }
}

TEST_CASE("power sums and traces") {
  auto s = power_sums(linear(2) * linear(3), 5);
  for (unsigned n = 1; n <= 5; ++n) CHECK(s[n - 1] == pow(BigInt(2), n) + pow(BigInt(3), n));

  ZetaFunction e{5, IntPoly{1, 3, 5}, linear(1) * linear(5)};
  auto w = factor_by_weights(e, CohomologyProfile(1, {1, 2, 1}));
  auto t = traces_from_factorization(w, 4);
  auto counts = counts_from_zeta(e, 4).counts;
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(t.traces[0][n - 1] == 1);
    CHECK(t.traces[2][n - 1] == Rational(pow(BigInt(5), n)));
    CHECK(t.lefschetz_sum(n) == Rational(counts[n - 1]));
  }
  CHECK(t.traces[1][0] == -3);
}

TEST_CASE("functional equation") {
  WeilFactorization p2{2, 2, {linear(1), IntPoly{BigInt(1)}, linear(2), IntPoly{BigInt(1)}, linear(4)}};
  CHECK(check_functional_equation(p2).ok);
  auto corrupted = p2;
  corrupted.factors[4] = linear(3);
  auto report = check_functional_equation(corrupted);
  CHECK_FALSE(report.ok);
  CHECK(report.violations == std::vector<unsigned>{0});
  CHECK(throws_kind(ErrorKind::DualityViolation, [&] { require_functional_equation(corrupted); }));
}

TEST_CASE("Riemann hypothesis check") {
  WeilFactorization good{5, 1, {linear(1), IntPoly{1, 3, 5}, linear(5)}};
  CHECK(check_riemann_hypothesis(good).ok);
  WeilFactorization bad{5, 1, {linear(1), IntPoly{1, -6, 5}, linear(5)}};
  auto report = check_riemann_hypothesis(bad);
  CHECK_FALSE(report.ok);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].degree == 1);
  auto roots = inverse_roots(IntPoly{1, -6, 5});
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(std::abs(roots[0]) * std::abs(roots[1]) - 5.0L) < 1e-12L);
}

TEST_CASE("cohomology profiles") {
  CHECK(throws_kind(ErrorKind::MalformedSpec, [] { CohomologyProfile(1, {1, 2}); }));
  CHECK(throws_kind(ErrorKind::MalformedSpec, [] { CohomologyProfile(2, {1, 1, 2, 0, 1}); }));
  CHECK(throws_kind(ErrorKind::MalformedSpec, [] { CohomologyProfile(1, {2, 0, 2}); }));
  CohomologyProfile p(2, {1, 4, 6, 4, 1});
  CHECK(p.odd_total() == 8);
  CHECK(p.even_total() == 8);
  CHECK(split_of(p).numerator == 8);
  CHECK(split_of(p).denominator == 8);
}
