#include "weilzeta/polynomial.hpp"

#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_integer(const RatPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (!is_integer(v)) return std::nullopt;
    c.emplace_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coefficients()[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p.scaled(inv);
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() <= 0) return out;
  RatPoly f = make_monic(p);
  RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(df, a).first;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::string format_poly(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const BigInt& c = p.coefficients()[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<Rational> series_quotient(const RatPoly& a, const RatPoly& b, std::size_t n) {
  std::vector<Rational> out(n + 1, Rational(0));
  const Rational b0 = b.coeff(0);
  if (b0 == 0) throw Error(ErrorKind::DivisionByZero, "series quotient with b(0) = 0");
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a.coeff(k);
    for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(std::max(b.degree(), 0)); ++j) {
      acc -= b.coeff(j) * out[k - j];
    }
    out[k] = acc / b0;
  }
  return out;
}

}  // namespace weilzeta
