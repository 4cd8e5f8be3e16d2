#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/bigint.hpp"

namespace weilzeta {

/// Dense univariate polynomial, coefficients low-to-high, no trailing zeros.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t exponent) {
    std::vector<T> c(exponent + 1, T(0));
    c[exponent] = v;
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }

  Polynomial operator+(const Polynomial& rhs) const {
    std::vector<T> out(std::max(c_.size(), rhs.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return Polynomial(std::move(out));
  }
  Polynomial operator-() const {
    std::vector<T> out(c_);
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
  }
  Polynomial operator-(const Polynomial& rhs) const { return *this + (-rhs); }
  Polynomial operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<T> out(c_.size() + rhs.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial scaled(const T& s) const {
    std::vector<T> out(c_);
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  T evaluate(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// P(s * t).
  Polynomial scale_argument(const T& s) const {
    std::vector<T> out(c_);
    T power(1);
    for (auto& v : out) {
      v *= power;
      power *= s;
    }
    return Polynomial(std::move(out));
  }

  /// t^deg * P(1/t).
  Polynomial reversed(std::size_t length) const {
    std::vector<T> out(length + 1, T(0));
    for (std::size_t i = 0; i < c_.size() && i <= length; ++i) out[length - i] = c_[i];
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);
/// Nullopt if some coefficient is not an integer.
std::optional<IntPoly> to_integer(const RatPoly& p);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero if both are zero).
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly make_monic(const RatPoly& p);

/// Square-free decomposition: pairs (f_i, i) with p = lc * prod f_i^i.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// "1 + 3t + 5t^2" style rendering in the variable `var`.
std::string format_poly(const IntPoly& p, const std::string& var = "t");

/// Power-series coefficients of a / b up to t^n (b(0) must be nonzero).
std::vector<Rational> series_quotient(const RatPoly& a, const RatPoly& b, std::size_t n);

}  // namespace weilzeta
