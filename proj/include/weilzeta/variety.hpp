#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilzeta/bigint.hpp"
#include "weilzeta/finite_field.hpp"
#include "weilzeta/packed_field.hpp"

namespace weilzeta {

enum class AmbientKind { Affine, Projective };

struct Ambient {
  AmbientKind kind = AmbientKind::Affine;
  unsigned dim = 0;

  /// Number of coordinates: dim for affine space, dim + 1 for projective.
  unsigned coordinates() const { return kind == AmbientKind::Projective ? dim + 1 : dim; }
};

/// One monomial: coefficient in F_q (a vector over F_p of length base_k)
/// times prod x_j^{exponents[j]}.
struct Term {
  std::vector<std::uint64_t> coefficient;
  std::vector<unsigned> exponents;
};

using Equation = std::vector<Term>;

struct VarietySpec {
  std::string label;
  BigInt p;
  unsigned k = 1;
  Ambient ambient;
  std::vector<Equation> equations;

  BigInt q() const { return pow(p, k); }
};

/// Checks the spec invariants (prime p, exponent lengths, homogeneity) and
/// returns a normalized copy: coefficients reduced mod p, zero terms dropped.
VarietySpec validate(VarietySpec spec);

struct PointCountSeries {
  BigInt q;
  std::vector<BigInt> counts;  // counts[n-1] = N_n
};

inline const BigInt kDefaultBudget = BigInt(100000000);

struct CountOptions {
  BigInt budget = kDefaultBudget;
  unsigned workers = 1;
};

/// Size of the enumeration domain over F_{q^n}: q^{nm} affine, or
/// (q^{n(m+1)} - 1) / (q^n - 1) projective.
BigInt domain_size(const VarietySpec& spec, unsigned n);

/// Enumerates the rational points of a spec over F_{q^n}. The domain is a
/// linear sequence of candidate points (projective points as normalized
/// representatives, first nonzero coordinate equal to one), so disjoint
/// index ranges can be counted independently and summed.
class PointCounter {
 public:
  PointCounter(const VarietySpec& spec, unsigned n, const CountOptions& options = {});

  std::uint64_t domain_size() const { return domain_; }
  /// Points with linear index in [begin, end).
  std::uint64_t count_range(std::uint64_t begin, std::uint64_t end) const;
  /// Full count, split across options.workers threads.
  std::uint64_t count() const;

 private:
  struct PackedTerm {
    PackedField::Code coefficient;
    std::uint32_t coefficient_log;
    std::vector<std::pair<unsigned, unsigned>> powers;  // (variable, exponent > 0)
  };

  bool satisfies(const std::vector<PackedField::Code>& point) const;

  unsigned workers_;
  unsigned coords_;
  bool projective_;
  std::uint64_t field_size_;
  std::uint64_t domain_;
  std::vector<std::uint64_t> block_sizes_;
  std::unique_ptr<PackedField> field_;
  std::vector<std::vector<PackedTerm>> equations_;
  // Set when an equation reduced to a nonzero constant.
  bool inconsistent_ = false;
};

std::uint64_t count_points(const VarietySpec& spec, unsigned n, const CountOptions& options = {});
PointCountSeries count_series(const VarietySpec& spec, unsigned terms, const CountOptions& options = {});

/// Projective model y^2 z = x^3 + a x z^2 + b z^3 over F_p.
VarietySpec weierstrass_spec(std::uint64_t p, std::uint64_t a, std::uint64_t b);

}  // namespace weilzeta
