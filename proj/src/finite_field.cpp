#include "weilzeta/finite_field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fp_poly.hpp"
#include "weilzeta/error.hpp"

namespace weilzeta {

namespace detail {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(factor, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

FpPoly mul_reduce(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  return rem(mul(a, b, p), m, p);
}

FpPoly pow_reduce(FpPoly base, std::uint64_t exponent, const FpPoly& m, std::uint64_t p) {
  FpPoly result = rem(FpPoly{1}, m, p);
  base = rem(std::move(base), m, p);
  while (exponent != 0) {
    if (exponent & 1U) result = mul_reduce(result, base, m, p);
    base = mul_reduce(base, base, m, p);
    exponent >>= 1;
  }
  return result;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InsufficientCounts: return "InsufficientCounts";
    case ErrorKind::NoRationalFit: return "NoRationalFit";
    case ErrorKind::NonIntegralCoefficients: return "NonIntegralCoefficients";
    case ErrorKind::NonIntegralCount: return "NonIntegralCount";
    case ErrorKind::WeightSeparationFailed: return "WeightSeparationFailed";
    case ErrorKind::RoundingMismatch: return "RoundingMismatch";
    case ErrorKind::DualityViolation: return "DualityViolation";
    case ErrorKind::DegenerateQ: return "DegenerateQ";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = mul_mod_u64(r, base, m);
    base = mul_mod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

BigInt u64_pow(std::uint64_t p, unsigned k) { return pow(from_u64(p), k); }

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(const BigInt& p) : p_(p) {
  bool prime = false;
  if (auto small = to_u64(p)) {
    prime = is_prime_u64(*small);
  } else if (sgn(p) > 0) {
    prime = mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
  }
  if (!prime) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
}

bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
  using namespace detail;
  const std::size_t k = monic.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  const FpPoly x{0, 1};
  FpPoly frob = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    frob = pow_reduce(frob, p, monic, p);
    FpPoly g = gcd(monic, sub(frob, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

ExtensionField::ExtensionField(const BigInt& p, std::vector<std::uint64_t> modulus)
    : base_(p), p64_(0), modulus_(std::move(modulus)) {
  auto small = to_u64(p);
  if (!small || *small > kMaxCharacteristic) {
    throw Error(ErrorKind::UnsupportedField, "characteristic " + p.get_str() + " exceeds 2^31 - 1");
  }
  p64_ = *small;
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw Error(ErrorKind::UnsupportedField, "modulus must be monic of degree >= 1");
  }
  for (auto c : modulus_) {
    if (c >= p64_) throw Error(ErrorKind::UnsupportedField, "modulus coefficients must be reduced mod p");
  }
  if (!is_irreducible(modulus_, p64_)) throw Error(ErrorKind::UnsupportedField, "modulus is reducible");
  cardinality_ = u64_pow(p64_, degree());
}

FieldPtr make_extension_with_modulus(const BigInt& p, std::vector<std::uint64_t> modulus) {
  return std::make_shared<const ExtensionField>(p, std::move(modulus));
}

FieldPtr make_extension(const BigInt& p, unsigned k) {
  PrimeField base(p);
  if (k == 0) throw Error(ErrorKind::UnsupportedField, "extension degree must be positive");
  auto small = to_u64(p);
  if (!small || *small > kMaxCharacteristic) {
    throw Error(ErrorKind::UnsupportedField, "characteristic " + p.get_str() + " exceeds 2^31 - 1");
  }
  const std::uint64_t q = *small;
  std::vector<std::uint64_t> candidate(k + 1, 0);
  candidate[k] = 1;
  if (k == 1) return make_extension_with_modulus(p, candidate);
  // Odometer over (m_0, ..., m_{k-1}) with m_0 most significant. Constant
  // term 0 means x divides the candidate, so start at m_0 = 1.
  candidate[0] = 1;
  while (true) {
    if (is_irreducible(candidate, q)) return make_extension_with_modulus(p, candidate);
    std::size_t pos = k - 1;
    while (true) {
      if (++candidate[pos] < q) break;
      candidate[pos] = 0;
      if (pos == 0) throw Error(ErrorKind::UnsupportedField, "no irreducible polynomial found");
      --pos;
    }
  }
}

FieldElement::FieldElement(FieldPtr parent, std::vector<std::uint64_t> coefficients)
    : parent_(std::move(parent)), coeffs_(std::move(coefficients)) {
  const unsigned k = parent_->degree();
  if (coeffs_.size() > k) {
    coeffs_ = detail::rem(std::move(coeffs_), parent_->modulus(), parent_->p());
  }
  for (auto& c : coeffs_) c %= parent_->p();
  coeffs_.resize(k, 0);
}

FieldElement FieldElement::zero(FieldPtr parent) { return FieldElement(std::move(parent), {}); }

FieldElement FieldElement::one(FieldPtr parent) { return FieldElement(std::move(parent), {1}); }

FieldElement FieldElement::from_integer(FieldPtr parent, const BigInt& n) {
  BigInt r = n % from_u64(parent->p());
  if (sgn(r) < 0) r += from_u64(parent->p());
  return FieldElement(std::move(parent), {*to_u64(r)});
}

FieldElement FieldElement::generator(FieldPtr parent) { return FieldElement(std::move(parent), {0, 1}); }

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (parent_ != rhs.parent_ && !(*parent_ == *rhs.parent_)) {
    throw Error(ErrorKind::MixedFields, "operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  std::vector<std::uint64_t> out(coeffs_.size());
  const std::uint64_t p = parent_->p();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + rhs.coeffs_[i]) % p;
  return FieldElement(parent_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  std::vector<std::uint64_t> out(coeffs_.size());
  const std::uint64_t p = parent_->p();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (p - coeffs_[i]) % p;
  return FieldElement(parent_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return FieldElement(parent_, detail::mul_reduce(coeffs_, rhs.coeffs_, parent_->modulus(), parent_->p()));
}

FieldElement FieldElement::pow(const BigInt& exponent) const {
  if (sgn(exponent) < 0) return inverse().pow(-exponent);
  FieldElement result = one(parent_);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * *this;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(parent_->cardinality() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

FieldElement FieldElement::frobenius() const { return pow(from_u64(parent_->p())); }

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same_field(rhs);
  return coeffs_ == rhs.coeffs_;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_neg(const FieldElement& a) { return -a; }
FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

FieldElement element_at(const FieldPtr& field, std::uint64_t index) {
  const unsigned k = field->degree();
  const std::uint64_t p = field->p();
  std::vector<std::uint64_t> coeffs(k, 0);
  for (unsigned i = k; i-- > 0;) {
    coeffs[i] = index % p;
    index /= p;
  }
  return FieldElement(field, std::move(coeffs));
}

ElementRange::ElementRange(FieldPtr field) : field_(std::move(field)), size_(0) {
  auto n = to_u64(field_->cardinality());
  if (!n) throw Error(ErrorKind::UnsupportedField, "field too large to enumerate");
  size_ = *n;
}

ElementRange::iterator::iterator(const FieldPtr& field, std::uint64_t index)
    : field_(field), index_(index), size_(*to_u64(field->cardinality())), current_(FieldElement::zero(field)) {
  if (index_ < size_) current_ = element_at(field_, index_);
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  ++index_;
  if (index_ < size_) current_ = element_at(field_, index_);
  return *this;
}

ElementRange enumerate_elements(const FieldPtr& field) { return ElementRange(field); }

}  // namespace weilzeta
