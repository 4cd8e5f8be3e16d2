#include "weilzeta/rational_function.hpp"

#include <cctype>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

BigInt lcm_of_denominators(const RatPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

BigInt gcd_of_numerators(const RatPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

IntPoly parse_sparse(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedSpec, "bad polynomial '" + text + "': " + why);
  };
  if (text == "0") return {};
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("missing coefficient");
    BigInt c(text.substr(start, pos - start));
    if (text.compare(pos, 3, "*q^") != 0) fail("expected '*q^'");
    pos += 3;
    start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("missing exponent");
    const std::size_t e = std::stoul(text.substr(start, pos - start));
    if (coeffs.size() <= e) coeffs.resize(e + 1, BigInt(0));
    coeffs[e] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  RatPoly scaled = p.scaled(Rational(lcm_of_denominators(p)));
  BigInt g = gcd_of_numerators(scaled);
  if (sgn(scaled.leading()) < 0) g = -g;
  std::vector<BigInt> out;
  for (const auto& c : scaled.coefficients()) out.push_back(BigInt(c.get_num() / g));
  return IntPoly(std::move(out));
}

std::string format_sparse_q(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const BigInt& c = p.coefficients()[i];
    if (c == 0) continue;
    if (sgn(c) < 0) os << "-";
    else if (!first) os << "+";
    os << abs(c) << "*q^" << i;
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(const Rational& c) : num_{c}, den_{Rational(1)} {}

RationalFunction::RationalFunction(RatPoly numerator, RatPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = RatPoly{Rational(1)};
    return;
  }
  RatPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  num_ = num_.scaled(1 / lead);
  den_ = den_.scaled(1 / lead);
}

RationalFunction RationalFunction::q_power(long e) {
  if (e >= 0) return RationalFunction(RatPoly::monomial(Rational(1), static_cast<std::size_t>(e)));
  return RationalFunction(RatPoly{Rational(1)}, RatPoly::monomial(Rational(1), static_cast<std::size_t>(-e)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (den_ == rhs.den_) return RationalFunction(num_ + rhs.num_, den_);
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return *this + (-rhs); }

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

Rational RationalFunction::evaluate(const Rational& q0) const {
  const Rational d = den_.evaluate(q0);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational function has a pole at q = " + q0.get_str());
  return num_.evaluate(q0) / d;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0/1*q^0";
  // Common integer scale for numerator and denominator.
  BigInt l = 1;
  mpz_lcm(l.get_mpz_t(), lcm_of_denominators(num_).get_mpz_t(), lcm_of_denominators(den_).get_mpz_t());
  RatPoly n = num_.scaled(Rational(l));
  RatPoly d = den_.scaled(Rational(l));
  BigInt g = 0;
  mpz_gcd(g.get_mpz_t(), gcd_of_numerators(n).get_mpz_t(), gcd_of_numerators(d).get_mpz_t());
  n = n.scaled(make_rational(1, g));
  d = d.scaled(make_rational(1, g));
  return format_sparse_q(*to_integer(n)) + "/" + format_sparse_q(*to_integer(d));
}

RationalFunction RationalFunction::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw Error(ErrorKind::MalformedSpec, "rational function needs '/': " + text);
  IntPoly n = parse_sparse(text.substr(0, slash));
  IntPoly d = parse_sparse(text.substr(slash + 1));
  return RationalFunction(to_rational(n), to_rational(d));
}

}  // namespace weilzeta
