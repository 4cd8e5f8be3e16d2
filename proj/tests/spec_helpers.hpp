#pragma once

#include <functional>

#include "oracles.hpp"
#include "weilzeta/variety.hpp"

namespace testing_support {

using weilzeta::AmbientKind;
using weilzeta::Equation;
using weilzeta::Term;
using weilzeta::VarietySpec;

inline Term term(std::vector<std::uint64_t> coefficient, std::vector<unsigned> exponents) {
  return Term{std::move(coefficient), std::move(exponents)};
}

inline VarietySpec make_spec(std::uint64_t p, unsigned k, AmbientKind kind, unsigned dim,
                             std::vector<Equation> equations) {
  VarietySpec s;
  s.label = "test";
  s.p = p;
  s.k = k;
  s.ambient = {kind, dim};
  s.equations = std::move(equations);
  return s;
}

/// Brute-force count over F_{q^n} using the naive field: every coordinate
/// tuple is tested, projective counts divide the nonzero solutions by Q - 1.
/// Base-field coefficients are embedded through any root of the base modulus,
/// which gives the same count for every choice of root.
inline std::uint64_t brute_force_count(const VarietySpec& spec, const std::vector<std::uint64_t>& base_modulus,
                                       unsigned n) {
  std::uint64_t p = spec.p.get_ui();
  oracle::NaiveField big{p, oracle::smallest_irreducible(p, spec.k * n)};
  std::uint64_t Q = big.size();
  using Vec = std::vector<std::uint64_t>;
  auto from_code = [&](std::uint64_t c) { return big.element(c); };
  Vec zero(big.k(), 0), one = zero;
  one[0] = 1;
  auto power = [&](Vec base, unsigned e) {
    Vec r = one;
    while (e-- > 0) r = big.mul(r, base);
    return r;
  };
  // Root of the base modulus in the big field.
  Vec root;
  for (std::uint64_t c = 0; c < Q && root.empty(); ++c) {
    Vec x = from_code(c), acc = zero;
    for (std::size_t i = base_modulus.size(); i-- > 0;) {
      Vec coeff = zero;
      coeff[0] = base_modulus[i] % p;
      acc = big.add(big.mul(acc, x), coeff);
    }
    if (acc == zero) root = x;
  }
  auto embed = [&](const Vec& c) {
    Vec acc = zero, rp = one;
    for (auto v : c) {
      Vec scalar = zero;
      scalar[0] = v % p;
      acc = big.add(acc, big.mul(scalar, rp));
      rp = big.mul(rp, root);
    }
    return acc;
  };
  unsigned coords = spec.ambient.coordinates();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < coords; ++i) total *= Q;
  std::uint64_t solutions = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Vec> point(coords);
    std::uint64_t t = idx;
    bool nonzero = false;
    for (auto& v : point) {
      nonzero = nonzero || t % Q != 0;
      v = from_code(t % Q);
      t /= Q;
    }
    if (spec.ambient.kind == AmbientKind::Projective && !nonzero) continue;
    bool ok = true;
    for (const auto& eq : spec.equations) {
      Vec acc = zero;
      for (const auto& tm : eq) {
        Vec m = embed(tm.coefficient);
        for (unsigned j = 0; j < coords; ++j) m = big.mul(m, power(point[j], tm.exponents[j]));
        acc = big.add(acc, m);
      }
      if (acc != zero) {
        ok = false;
        break;
      }
    }
    solutions += ok ? 1 : 0;
  }
  return spec.ambient.kind == AmbientKind::Projective ? solutions / (Q - 1) : solutions;
}

}  // namespace testing_support
