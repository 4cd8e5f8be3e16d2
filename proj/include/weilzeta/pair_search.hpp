#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

/// Short Weierstrass curve y^2 = x^3 + a x + b over F_p, p > 3.
struct WeierstrassCurve {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  bool operator==(const WeierstrassCurve&) const = default;
  auto operator<=>(const WeierstrassCurve&) const = default;
};

/// Lexicographically smallest (a, b) in the orbit {(u^4 a, u^6 b) : u != 0}.
WeierstrassCurve canonical_model(const WeierstrassCurve& c);
bool isomorphic(const WeierstrassCurve& x, const WeierstrassCurve& y);

/// Two non-isomorphic curves with identical (N_1, N_2), hence equal zeta.
struct PairSearchResult {
  std::uint64_t p = 0;
  WeierstrassCurve first;
  WeierstrassCurve second;
  PointCountSeries counts;
  ZetaFunction zeta;
};

/// (N_1, N_2) of the projective closure, by quadratic-character sums over
/// F_p and F_{p^2}.
std::pair<std::uint64_t, std::uint64_t> weierstrass_counts(const WeierstrassCurve& c);

/// Searches every prime p in [p_min, p_max] with p > 3. For each bucket of
/// isomorphism classes with equal (N_1, N_2), pairs the smallest class with
/// every other one. Results are ordered by (p, first, second).
std::vector<PairSearchResult> find_pairs(std::uint64_t p_min, std::uint64_t p_max, unsigned workers = 1);

std::vector<PairSearchResult> find_pairs_for_prime(std::uint64_t p);

}  // namespace weilzeta
