#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace weilzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Rational pow(const Rational& base, long exponent) {
  Rational r = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace weilzeta
