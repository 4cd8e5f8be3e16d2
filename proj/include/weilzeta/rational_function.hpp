#pragma once

#include <string>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

/// Element of Q(q) in canonical form: coprime numerator and denominator,
/// denominator monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_{Rational(1)} {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(RatPoly numerator, RatPoly denominator = RatPoly{Rational(1)});

  /// The indeterminate q raised to the power e (e may be negative).
  static RationalFunction q_power(long e);

  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

  /// Value at q = q0; throws DivisionByZero at a pole.
  Rational evaluate(const Rational& q0) const;

  /// "c*q^e+c*q^e/c*q^e" with integer coefficients, terms by descending
  /// exponent, numerator and denominator scaled to coprime integer content
  /// with a positive leading denominator coefficient.
  std::string to_string() const;
  static RationalFunction parse(const std::string& text);

 private:
  RatPoly num_;
  RatPoly den_;
};

/// Integer-coefficient rendering of a polynomial in q using the sparse
/// "c*q^e" grammar; "0" for zero.
std::string format_sparse_q(const IntPoly& p);

/// Primitive integer multiple of p (positive leading coefficient).
IntPoly primitive_part(const RatPoly& p);

}  // namespace weilzeta
