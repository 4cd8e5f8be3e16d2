#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <vector>

#include "weilzeta/bigint.hpp"

namespace weilzeta {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// The prime field F_p. Primality is checked on construction.
class PrimeField {
 public:
  explicit PrimeField(const BigInt& p);

  const BigInt& characteristic() const { return p_; }

 private:
  BigInt p_;
};

/// Largest characteristic the element arithmetic supports; residues are
/// multiplied in 64-bit words.
inline constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 31) - 1;

/// F_{p^k} = F_p[x] / (modulus). The modulus is monic, degree k and
/// irreducible, stored low-to-high with modulus[k] == 1.
class ExtensionField {
 public:
  ExtensionField(const BigInt& p, std::vector<std::uint64_t> modulus);

  const PrimeField& base() const { return base_; }
  std::uint64_t p() const { return p64_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const BigInt& cardinality() const { return cardinality_; }

  bool operator==(const ExtensionField& other) const {
    return p64_ == other.p64_ && modulus_ == other.modulus_;
  }

 private:
  PrimeField base_;
  std::uint64_t p64_;
  std::vector<std::uint64_t> modulus_;
  BigInt cardinality_;
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

/// Field with the lexicographically smallest monic irreducible modulus of
/// degree k, where "lexicographic" compares the low-to-high coefficient list.
FieldPtr make_extension(const BigInt& p, unsigned k);

/// Field with a caller-chosen modulus (irreducibility is verified).
FieldPtr make_extension_with_modulus(const BigInt& p, std::vector<std::uint64_t> modulus);

/// Ben-Or test: gcd(x^{p^i} - x, f) == 1 for all i <= deg(f)/2.
bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p);

class FieldElement {
 public:
  FieldElement(FieldPtr parent, std::vector<std::uint64_t> coefficients);

  static FieldElement zero(FieldPtr parent);
  static FieldElement one(FieldPtr parent);
  /// Image of the integer n under Z -> F_p -> F_{p^k}.
  static FieldElement from_integer(FieldPtr parent, const BigInt& n);
  /// The class of x.
  static FieldElement generator(FieldPtr parent);

  const FieldPtr& parent() const { return parent_; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;

  FieldElement inverse() const;
  FieldElement pow(const BigInt& exponent) const;
  /// a -> a^p.
  FieldElement frobenius() const;

  bool operator==(const FieldElement& rhs) const;

 private:
  void require_same_field(const FieldElement& rhs) const;

  FieldPtr parent_;
  std::vector<std::uint64_t> coeffs_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);

/// Elements in lexicographic order of their coefficient vectors
/// (coefficient of x^0 compared first).
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const FieldElement*;
    using reference = const FieldElement&;

    iterator(const FieldPtr& field, std::uint64_t index);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& rhs) const { return index_ == rhs.index_; }

   private:
    FieldPtr field_;
    std::uint64_t index_;
    std::uint64_t size_;
    FieldElement current_;
  };

  explicit ElementRange(FieldPtr field);
  iterator begin() const { return iterator(field_, 0); }
  iterator end() const { return iterator(field_, size_); }
  std::uint64_t size() const { return size_; }

 private:
  FieldPtr field_;
  std::uint64_t size_;
};

ElementRange enumerate_elements(const FieldPtr& field);

/// Element at position `index` of the lexicographic enumeration.
FieldElement element_at(const FieldPtr& field, std::uint64_t index);

}  // namespace weilzeta
