#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/finite_field.hpp"

namespace weilzeta {

/// Elements of F_{p^k} packed into one integer code sum_i c_i p^i, used by
/// the point counter's inner loop. Fields up to kLogTableLimit elements get
/// discrete log / exponential tables; larger ones fall back to polynomial
/// arithmetic on the unpacked digits.
class PackedField {
 public:
  using Code = std::uint64_t;

  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

  explicit PackedField(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t characteristic() const { return p_; }
  bool has_log_tables() const { return !log_.empty(); }

  static constexpr Code zero() { return 0; }
  static constexpr Code one() { return 1; }

  Code encode(const FieldElement& e) const;
  FieldElement decode(Code c) const;

  Code add(Code a, Code b) const {
    if (degree_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  Code neg(Code a) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint64_t s = log_[a] + log_[b];
      if (s >= order_) s -= order_;
      return exp_[s];
    }
    return mul_generic(a, b);
  }
  Code pow(Code a, std::uint64_t e) const;
  Code inv(Code a) const;

  /// Discrete log base the table generator; only valid with tables and a != 0.
  std::uint32_t log(Code a) const { return log_[a]; }
  Code exp(std::uint64_t e) const { return exp_[e % order_]; }
  std::uint64_t multiplicative_order() const { return order_; }

 private:
  Code add_digits(Code a, Code b) const;
  Code mul_generic(Code a, Code b) const;
  void build_tables();

  FieldPtr field_;
  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t size_;
  std::uint64_t order_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
};

}  // namespace weilzeta
