#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "weilzeta/bigint.hpp"
#include "weilzeta/polynomial.hpp"
#include "weilzeta/variety.hpp"

namespace weilzeta {

/// numerator / denominator with integer coefficients, both with constant
/// term 1 and coprime over Q. Two zeta functions are equal iff these
/// normalized pairs are identical.
struct ZetaFunction {
  BigInt q;
  IntPoly numerator;
  IntPoly denominator;

  bool operator==(const ZetaFunction& rhs) const = default;
};

/// Cancels common factors and rescales to constant terms 1.
ZetaFunction normalize(const BigInt& q, const IntPoly& numerator, const IntPoly& denominator);

std::string format_zeta(const ZetaFunction& z);

/// Betti numbers b_0..b_{2d}; Poincare duality b_i = b_{2d-i} and
/// b_0 = b_{2d} = 1 are enforced on construction.
class CohomologyProfile {
 public:
  CohomologyProfile(unsigned d, std::vector<unsigned> betti);

  unsigned dimension() const { return d_; }
  const std::vector<unsigned>& betti() const { return betti_; }
  unsigned odd_total() const;
  unsigned even_total() const;

 private:
  unsigned d_;
  std::vector<unsigned> betti_;
};

struct DegreeSplit {
  unsigned numerator = 0;
  unsigned denominator = 0;

  unsigned total() const { return numerator + denominator; }
};

DegreeSplit split_of(const CohomologyProfile& profile);

/// Rational function with deg(num) <= split.numerator and
/// deg(den) <= split.denominator whose logarithmic derivative matches the
/// counts. Needs split.total() counts; any further counts are verified.
ZetaFunction zeta_from_counts(const PointCountSeries& series, DegreeSplit split);

/// Same, with the factors (1 - t)(1 - q^d t) of H^0 and H^{2d} taken as
/// known (geometrically connected, dimension d). Needs split.total() - 2
/// counts (split.total() - 1 when d = 0).
ZetaFunction zeta_from_counts_anchored(const PointCountSeries& series, DegreeSplit split, unsigned d);

/// Number of counts the fit consumes before any verification terms.
unsigned counts_required(DegreeSplit split, std::optional<unsigned> anchored_dimension);

PointCountSeries counts_from_zeta(const ZetaFunction& z, unsigned terms);

/// P_0..P_{2d} with zeta = prod P_i^{(-1)^{i+1}}.
struct WeilFactorization {
  BigInt q;
  unsigned d = 0;
  std::vector<IntPoly> factors;

  ZetaFunction product() const;
};

inline constexpr double kDefaultTolerance = 1e-9;

WeilFactorization factor_by_weights(const ZetaFunction& z, const CohomologyProfile& profile,
                                    double tolerance = kDefaultTolerance);

/// traces[i][n-1] = Tr(phi^{n*} | H^i).
struct TraceVector {
  BigInt q;
  unsigned d = 0;
  unsigned terms = 0;
  std::vector<std::vector<Rational>> traces;

  /// sum_i (-1)^i traces[i][n-1].
  Rational lefschetz_sum(unsigned n) const;
};

/// Power sums of the inverse roots of P, p_1..p_terms, via Newton's identities.
std::vector<BigInt> power_sums(const IntPoly& p, unsigned terms);

TraceVector traces_from_factorization(const WeilFactorization& w, unsigned terms);

struct DualityReport {
  bool ok = true;
  std::vector<unsigned> violations;  // degrees i < d whose partner 2d - i fails
};

/// Exact check that P_{2d-i}(t) = P_i(q^{d-i} t) for every i < d.
DualityReport check_functional_equation(const WeilFactorization& w);

/// Throws DualityViolation listing the offending degrees.
void require_functional_equation(const WeilFactorization& w);

struct RootViolation {
  unsigned degree = 0;
  std::complex<double> inverse_root;
  double modulus = 0;
  double expected = 0;
};

struct RiemannReport {
  bool ok = true;
  std::vector<RootViolation> violations;
};

/// Advisory numeric check: inverse roots of P_i have modulus q^{i/2}.
RiemannReport check_riemann_hypothesis(const WeilFactorization& w, double tolerance = kDefaultTolerance);

/// Inverse roots of P (roots of t^deg P(1/t)) with multiplicity, computed
/// on the square-free parts for accuracy.
std::vector<std::complex<long double>> inverse_roots(const IntPoly& p);

}  // namespace weilzeta
