#include "weilzeta/packed_field.hpp"

#include "fp_poly.hpp"
#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PackedField::PackedField(FieldPtr field)
    : field_(std::move(field)), p_(field_->p()), degree_(field_->degree()), size_(0), order_(0) {
  auto n = to_u64(field_->cardinality());
  if (!n || *n > (std::uint64_t{1} << 62)) {
    throw Error(ErrorKind::UnsupportedField, "field with " + field_->cardinality().get_str() + " elements is too large");
  }
  size_ = *n;
  order_ = size_ - 1;
  if (size_ <= kLogTableLimit) build_tables();
}

PackedField::Code PackedField::encode(const FieldElement& e) const {
  Code c = 0;
  const auto& coeffs = e.coefficients();
  for (unsigned i = degree_; i-- > 0;) c = c * p_ + coeffs[i];
  return c;
}

FieldElement PackedField::decode(Code c) const {
  std::vector<std::uint64_t> coeffs(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    coeffs[i] = c % p_;
    c /= p_;
  }
  return FieldElement(field_, std::move(coeffs));
}

PackedField::Code PackedField::add_digits(Code a, Code b) const {
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    Code s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

PackedField::Code PackedField::neg(Code a) const {
  if (degree_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    Code d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

PackedField::Code PackedField::mul_generic(Code a, Code b) const {
  if (degree_ == 1) return detail::mul_mod(a, b, p_);
  detail::FpPoly x(degree_), y(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  detail::trim(x);
  detail::trim(y);
  detail::FpPoly r = detail::mul_reduce(x, y, field_->modulus(), p_);
  Code out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

PackedField::Code PackedField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a == 0) return 0;
  if (!log_.empty()) {
    unsigned __int128 s = static_cast<unsigned __int128>(log_[a]) * (e % order_);
    return exp_[static_cast<std::uint64_t>(s % order_)];
  }
  Code result = one();
  Code base = a;
  while (e != 0) {
    if (e & 1U) result = mul_generic(result, base);
    base = mul_generic(base, base);
    e >>= 1;
  }
  return result;
}

PackedField::Code PackedField::inv(Code a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!log_.empty()) return exp_[(order_ - log_[a]) % order_];
  return pow(a, size_ - 2);
}

void PackedField::build_tables() {
  if (order_ == 0) return;
  const auto factors = prime_factors(order_);
  auto slow_pow = [this](Code a, std::uint64_t e) {
    Code r = one();
    while (e != 0) {
      if (e & 1U) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  };
  Code generator = 0;
  for (Code g = 1; g < size_; ++g) {
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(g, order_ / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  log_.assign(size_, 0);
  exp_.assign(order_, 0);
  Code cur = one();
  for (std::uint64_t i = 0; i < order_; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, generator);
  }
}

}  // namespace weilzeta
