#include "weilzeta/zeta.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

using Complex = std::complex<long double>;

/// Solves A x = b over Q. Free variables are set to zero; nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || a[o][c] == 0) continue;
      const Rational f = a[o][c];
      for (std::size_t j = 0; j < cols; ++j) a[o][j] -= f * a[r][j];
      b[o] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t o = r; o < rows; ++o) {
    if (b[o] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Coefficients of exp(sum_n N_n t^n / n) through t^terms.
std::vector<Rational> exp_series(const std::vector<BigInt>& counts) {
  std::vector<Rational> z(counts.size() + 1, Rational(0));
  z[0] = 1;
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += Rational(counts[j - 1]) * z[n - j];
    z[n] = acc / Rational(static_cast<long>(n));
  }
  return z;
}

/// s_n = coefficients of t P'(t) / P(t), n = 1..terms.
std::vector<Rational> log_derivative_series(const IntPoly& p, unsigned terms) {
  std::vector<Rational> s(terms + 1, Rational(0));
  const Rational c0(p.coeff(0));
  for (unsigned n = 1; n <= terms; ++n) {
    Rational acc = Rational(p.coeff(n)) * Rational(static_cast<long>(n));
    for (unsigned k = 1; k < n; ++k) acc -= Rational(p.coeff(k)) * s[n - k];
    s[n] = acc / c0;
  }
  return s;
}

Complex eval(const std::vector<long double>& c, Complex x, Complex* derivative) {
  Complex v = 0, dv = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dv = dv * x + v;
    v = v * x + c[i];
  }
  if (derivative) *derivative = dv;
  return v;
}

std::vector<Complex> simple_roots(const RatPoly& f) {
  const int n = f.degree();
  std::vector<Complex> out;
  if (n <= 0) return out;
  std::vector<long double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = static_cast<long double>(f.coeff(i).get_d());
  if (n == 1) {
    out.emplace_back(-static_cast<long double>(Rational(f.coeff(0) / f.coeff(1)).get_d()), 0.0L);
    return out;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = static_cast<double>(c[n]);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(c[i]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto values = solver.eigenvalues();
  for (int i = 0; i < n; ++i) {
    Complex x(values[i].real(), values[i].imag());
    for (int it = 0; it < 8; ++it) {
      Complex d;
      Complex v = eval(c, x, &d);
      if (std::abs(d) == 0.0L) break;
      Complex step = v / d;
      x -= step;
      if (std::abs(step) <= 1e-19L * std::abs(x)) break;
    }
    out.push_back(x);
  }
  return out;
}

BigInt round_to_bigint(long double x) {
  if (std::fabs(x) >= 9.0e18L) throw Error(ErrorKind::RoundingMismatch, "coefficient too large to round reliably");
  return BigInt(std::to_string(std::llround(x)));
}

std::string join_degrees(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

}  // namespace

ZetaFunction normalize(const BigInt& q, const IntPoly& numerator, const IntPoly& denominator) {
  if (numerator.coeff(0) == 0 || denominator.coeff(0) == 0) {
    throw Error(ErrorKind::NoRationalFit, "zeta numerator and denominator need nonzero constant terms");
  }
  RatPoly num = to_rational(numerator);
  RatPoly den = to_rational(denominator);
  RatPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  num = num.scaled(1 / num.coeff(0));
  den = den.scaled(1 / den.coeff(0));
  auto n = to_integer(num);
  auto d = to_integer(den);
  if (!n || !d) throw Error(ErrorKind::NonIntegralCoefficients, "rational fit has non-integral coefficients");
  return ZetaFunction{q, *n, *d};
}

std::string format_zeta(const ZetaFunction& z) {
  return "(" + format_poly(z.numerator) + ") / (" + format_poly(z.denominator) + ")";
}

CohomologyProfile::CohomologyProfile(unsigned d, std::vector<unsigned> betti) : d_(d), betti_(std::move(betti)) {
  if (betti_.size() != 2 * d_ + 1) {
    throw Error(ErrorKind::MalformedSpec, "profile needs 2d+1 = " + std::to_string(2 * d_ + 1) + " Betti numbers");
  }
  for (unsigned i = 0; i <= 2 * d_; ++i) {
    if (betti_[i] != betti_[2 * d_ - i]) {
      throw Error(ErrorKind::MalformedSpec, "Betti numbers violate Poincare duality at degree " + std::to_string(i));
    }
  }
  if (betti_.front() != 1) throw Error(ErrorKind::MalformedSpec, "b_0 = b_2d = 1 is required");
}

unsigned CohomologyProfile::odd_total() const {
  unsigned s = 0;
  for (unsigned i = 1; i < betti_.size(); i += 2) s += betti_[i];
  return s;
}

unsigned CohomologyProfile::even_total() const {
  unsigned s = 0;
  for (unsigned i = 0; i < betti_.size(); i += 2) s += betti_[i];
  return s;
}

DegreeSplit split_of(const CohomologyProfile& profile) { return {profile.odd_total(), profile.even_total()}; }

unsigned counts_required(DegreeSplit split, std::optional<unsigned> anchored_dimension) {
  if (!anchored_dimension) return split.total();
  const unsigned known = *anchored_dimension == 0 ? 1 : 2;
  return split.total() >= known ? split.total() - known : 0;
}

ZetaFunction zeta_from_counts(const PointCountSeries& series, DegreeSplit split) {
  const std::size_t available = series.counts.size();
  const unsigned e_num = split.numerator;
  const unsigned e_den = split.denominator;
  const unsigned total = split.total();
  if (available < total) {
    throw Error(ErrorKind::InsufficientCounts, "need " + std::to_string(total) + " counts, have " +
                                                   std::to_string(available));
  }
  const auto z = exp_series(series.counts);
  auto zc = [&](long j) { return j < 0 ? Rational(0) : z[static_cast<std::size_t>(j)]; };

  // Q(t) Z(t) = P(t) + O(t^{total+1}) with Q(0) = 1: the coefficients of
  // t^{e_num+1} .. t^{total} of Q Z vanish.
  std::vector<std::vector<Rational>> a(e_den, std::vector<Rational>(e_den, Rational(0)));
  std::vector<Rational> b(e_den, Rational(0));
  for (unsigned r = 0; r < e_den; ++r) {
    const long j = static_cast<long>(e_num + 1 + r);
    for (unsigned i = 1; i <= e_den; ++i) a[r][i - 1] = zc(j - static_cast<long>(i));
    b[r] = -zc(j);
  }
  auto solution = solve_linear(std::move(a), std::move(b));
  if (!solution) throw Error(ErrorKind::NoRationalFit, "no rational function with this degree split fits the counts");

  std::vector<Rational> qc(e_den + 1, Rational(0));
  qc[0] = 1;
  for (unsigned i = 1; i <= e_den; ++i) qc[i] = (*solution)[i - 1];
  auto product_coeff = [&](std::size_t j) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= e_den && i <= j; ++i) acc += qc[i] * z[j - i];
    return acc;
  };
  std::vector<Rational> pc(e_num + 1, Rational(0));
  for (unsigned j = 0; j <= e_num; ++j) pc[j] = product_coeff(j);
  for (std::size_t j = total + 1; j <= available; ++j) {
    if (product_coeff(j) != 0) {
      throw Error(ErrorKind::NoRationalFit, "fit disagrees with the count at n=" + std::to_string(j));
    }
  }

  RatPoly num(std::move(pc));
  RatPoly den(std::move(qc));
  RatPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  num = num.scaled(1 / num.coeff(0));
  den = den.scaled(1 / den.coeff(0));
  auto n = to_integer(num);
  auto d = to_integer(den);
  if (!n || !d) throw Error(ErrorKind::NonIntegralCoefficients, "rational fit has non-integral coefficients");
  return ZetaFunction{series.q, *n, *d};
}

ZetaFunction zeta_from_counts_anchored(const PointCountSeries& series, DegreeSplit split, unsigned d) {
  const unsigned known = d == 0 ? 1 : 2;
  if (split.denominator < known) {
    throw Error(ErrorKind::NoRationalFit, "denominator degree is too small for the H^0 and H^2d factors");
  }
  PointCountSeries reduced{series.q, {}};
  for (std::size_t n = 1; n <= series.counts.size(); ++n) {
    BigInt v = series.counts[n - 1] - 1;
    if (d > 0) v -= pow(series.q, d * static_cast<unsigned long>(n));
    reduced.counts.push_back(v);
  }
  ZetaFunction partial = zeta_from_counts(reduced, {split.numerator, split.denominator - known});
  IntPoly anchor{BigInt(1), BigInt(-1)};
  if (d > 0) anchor *= IntPoly{BigInt(1), BigInt(-pow(series.q, d))};
  return normalize(series.q, partial.numerator, partial.denominator * anchor);
}

PointCountSeries counts_from_zeta(const ZetaFunction& z, unsigned terms) {
  const auto sn = log_derivative_series(z.numerator, terms);
  const auto sd = log_derivative_series(z.denominator, terms);
  PointCountSeries out{z.q, {}};
  for (unsigned n = 1; n <= terms; ++n) {
    Rational v = sn[n] - sd[n];
    if (!is_integer(v)) {
      throw Error(ErrorKind::NonIntegralCount, "N_" + std::to_string(n) + " = " + v.get_str() + " is not an integer");
    }
    if (sgn(v) < 0) throw Error(ErrorKind::NonIntegralCount, "N_" + std::to_string(n) + " = " + v.get_str() + " is negative");
    out.counts.push_back(v.get_num());
  }
  return out;
}

ZetaFunction WeilFactorization::product() const {
  IntPoly num{BigInt(1)}, den{BigInt(1)};
  for (std::size_t i = 0; i < factors.size(); ++i) (i % 2 ? num : den) *= factors[i];
  return normalize(q, num, den);
}

std::vector<std::complex<long double>> inverse_roots(const IntPoly& p) {
  std::vector<Complex> out;
  if (p.degree() <= 0) return out;
  const RatPoly reversed = to_rational(p.reversed(static_cast<std::size_t>(p.degree())));
  for (const auto& [factor, multiplicity] : squarefree_decomposition(reversed)) {
    for (const auto& r : simple_roots(factor)) {
      for (int m = 0; m < multiplicity; ++m) out.push_back(r);
    }
  }
  return out;
}

WeilFactorization factor_by_weights(const ZetaFunction& z, const CohomologyProfile& profile, double tolerance) {
  const unsigned d = profile.dimension();
  const auto& betti = profile.betti();
  if (z.q < 2) throw Error(ErrorKind::WeightSeparationFailed, "q must be at least 2");
  if (z.numerator.degree() != static_cast<int>(profile.odd_total()) ||
      z.denominator.degree() != static_cast<int>(profile.even_total())) {
    throw Error(ErrorKind::WeightSeparationFailed,
                "zeta degrees (" + std::to_string(z.numerator.degree()) + ", " +
                    std::to_string(z.denominator.degree()) + ") do not match the profile (" +
                    std::to_string(profile.odd_total()) + ", " + std::to_string(profile.even_total()) + ")");
  }
  const long double log_q = std::log(static_cast<long double>(z.q.get_d()));
  std::vector<std::vector<Complex>> groups(2 * d + 1);

  auto assign = [&](const IntPoly& poly, unsigned parity) {
    for (const auto& alpha : inverse_roots(poly)) {
      const long double modulus = std::abs(alpha);
      const long double weight = 2.0L * std::log(modulus) / log_q;
      const long long i = std::llround(weight);
      if (i < 0 || i > static_cast<long long>(2 * d) || static_cast<unsigned>(i % 2) != parity) {
        throw Error(ErrorKind::WeightSeparationFailed, "inverse root of modulus " + std::to_string(static_cast<double>(modulus)) +
                                                           " has no admissible weight");
      }
      const long double expected = std::pow(static_cast<long double>(z.q.get_d()), static_cast<long double>(i) / 2.0L);
      if (std::fabs(modulus / expected - 1.0L) > tolerance) {
        throw Error(ErrorKind::WeightSeparationFailed, "inverse root of modulus " + std::to_string(static_cast<double>(modulus)) +
                                                           " is not within tolerance of weight " + std::to_string(i));
      }
      groups[static_cast<std::size_t>(i)].push_back(alpha);
    }
  };
  assign(z.numerator, 1);
  assign(z.denominator, 0);

  WeilFactorization w{z.q, d, {}};
  for (unsigned i = 0; i <= 2 * d; ++i) {
    if (groups[i].size() != betti[i]) {
      throw Error(ErrorKind::WeightSeparationFailed, "weight " + std::to_string(i) + " has " +
                                                         std::to_string(groups[i].size()) + " roots, expected b_" +
                                                         std::to_string(i) + " = " + std::to_string(betti[i]));
    }
    std::vector<Complex> c{Complex(1)};
    for (const auto& alpha : groups[i]) {
      std::vector<Complex> next(c.size() + 1, Complex(0));
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j] += c[j];
        next[j + 1] -= alpha * c[j];
      }
      c = std::move(next);
    }
    std::vector<BigInt> coeffs;
    for (const auto& v : c) {
      if (std::fabs(v.imag()) > 0.25L) throw Error(ErrorKind::RoundingMismatch, "P_" + std::to_string(i) + " is not real");
      coeffs.push_back(round_to_bigint(v.real()));
    }
    w.factors.emplace_back(std::move(coeffs));
  }
  IntPoly num{BigInt(1)}, den{BigInt(1)};
  for (unsigned i = 0; i <= 2 * d; ++i) (i % 2 ? num : den) *= w.factors[i];
  if (num != z.numerator || den != z.denominator) {
    throw Error(ErrorKind::RoundingMismatch, "rounded P_i do not reproduce the zeta function");
  }
  return w;
}

Rational TraceVector::lefschetz_sum(unsigned n) const {
  Rational s = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (i % 2) s -= traces[i][n - 1];
    else s += traces[i][n - 1];
  }
  return s;
}

std::vector<BigInt> power_sums(const IntPoly& p, unsigned terms) {
  // t P'/P = -sum_n p_n t^n for P = prod (1 - alpha t).
  std::vector<BigInt> s(terms + 1, BigInt(0));
  for (unsigned n = 1; n <= terms; ++n) {
    BigInt acc = p.coeff(n) * static_cast<long>(n);
    for (unsigned k = 1; k < n; ++k) acc -= p.coeff(k) * s[n - k];
    s[n] = acc;
  }
  std::vector<BigInt> out;
  for (unsigned n = 1; n <= terms; ++n) out.push_back(-s[n]);
  return out;
}

TraceVector traces_from_factorization(const WeilFactorization& w, unsigned terms) {
  TraceVector t{w.q, w.d, terms, {}};
  for (const auto& factor : w.factors) {
    std::vector<Rational> row;
    for (const auto& v : power_sums(factor, terms)) row.emplace_back(v);
    t.traces.push_back(std::move(row));
  }
  return t;
}

DualityReport check_functional_equation(const WeilFactorization& w) {
  DualityReport report;
  const unsigned d = w.d;
  for (unsigned i = 0; i < d; ++i) {
    const IntPoly expected = w.factors[i].scale_argument(pow(w.q, d - i));
    if (w.factors[2 * d - i] != expected) {
      report.ok = false;
      report.violations.push_back(i);
    }
  }
  return report;
}

void require_functional_equation(const WeilFactorization& w) {
  auto report = check_functional_equation(w);
  if (!report.ok) {
    throw Error(ErrorKind::DualityViolation, "P_{2d-i}(t) != P_i(q^{d-i} t) for i in {" +
                                                 join_degrees(report.violations) + "}");
  }
}

RiemannReport check_riemann_hypothesis(const WeilFactorization& w, double tolerance) {
  RiemannReport report;
  const long double q = static_cast<long double>(w.q.get_d());
  for (unsigned i = 0; i < w.factors.size(); ++i) {
    const long double expected = std::pow(q, static_cast<long double>(i) / 2.0L);
    for (const auto& alpha : inverse_roots(w.factors[i])) {
      const long double modulus = std::abs(alpha);
      if (std::fabs(modulus / expected - 1.0L) > tolerance) {
        report.ok = false;
        report.violations.push_back({i, std::complex<double>(static_cast<double>(alpha.real()), static_cast<double>(alpha.imag())),
                                     static_cast<double>(modulus), static_cast<double>(expected)});
      }
    }
  }
  return report;
}

}  // namespace weilzeta
