#include "weilzeta/pair_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "fp_poly.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/packed_field.hpp"

namespace weilzeta {

namespace {

/// Square-root counts over F_p and F_{p^2} for one prime.
class WeierstrassCounter {
 public:
  explicit WeierstrassCounter(std::uint64_t p)
      : p_(p), quadratic_(make_extension(from_u64(p), 2)), base_roots_(p, 0), ext_roots_(quadratic_.size(), 0) {
    for (std::uint64_t y = 0; y < p; ++y) ++base_roots_[detail::mul_mod(y, y, p)];
    for (PackedField::Code y = 0; y < quadratic_.size(); ++y) ++ext_roots_[quadratic_.mul(y, y)];
  }

  std::pair<std::uint64_t, std::uint64_t> counts(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t n1 = 1;
    for (std::uint64_t x = 0; x < p_; ++x) {
      const std::uint64_t x2 = detail::mul_mod(x, x, p_);
      const std::uint64_t f = (detail::mul_mod(x2, x, p_) + detail::mul_mod(a, x, p_) + b) % p_;
      n1 += base_roots_[f];
    }
    // a and b lie in the prime subfield, whose packed codes are 0..p-1.
    std::uint64_t n2 = 1;
    const auto& F = quadratic_;
    for (PackedField::Code x = 0; x < F.size(); ++x) {
      const auto f = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(a, x)), b);
      n2 += ext_roots_[f];
    }
    return {n1, n2};
  }

 private:
  std::uint64_t p_;
  PackedField quadratic_;
  std::vector<std::uint8_t> base_roots_;
  std::vector<std::uint8_t> ext_roots_;
};

bool nonsingular(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  using detail::mul_mod;
  const std::uint64_t disc = (4 * mul_mod(mul_mod(a, a, p), a, p) + 27 * mul_mod(b, b, p)) % p;
  return disc != 0;
}

ZetaFunction genus_one_zeta(std::uint64_t p, std::uint64_t n1, std::uint64_t n2) {
  PointCountSeries series{from_u64(p), {from_u64(n1), from_u64(n2)}};
  const BigInt q = from_u64(p);
  const BigInt trace = q + 1 - series.counts[0];
  // N_2 is redundant in genus one; it must agree with q^2 + 1 - (a^2 - 2q).
  if (series.counts[1] != q * q + 1 - (trace * trace - 2 * q)) {
    throw Error(ErrorKind::NoRationalFit, "N_2 is inconsistent with N_1 for a genus-one curve");
  }
  return zeta_from_counts_anchored(series, {2, 2}, 1);
}

}  // namespace

WeierstrassCurve canonical_model(const WeierstrassCurve& c) {
  using detail::mul_mod;
  WeierstrassCurve best = c;
  for (std::uint64_t u = 1; u < c.p; ++u) {
    const std::uint64_t u2 = mul_mod(u, u, c.p);
    const std::uint64_t u4 = mul_mod(u2, u2, c.p);
    const std::uint64_t u6 = mul_mod(u4, u2, c.p);
    WeierstrassCurve cand{c.p, mul_mod(u4, c.a, c.p), mul_mod(u6, c.b, c.p)};
    if (cand < best) best = cand;
  }
  return best;
}

bool isomorphic(const WeierstrassCurve& x, const WeierstrassCurve& y) {
  return x.p == y.p && canonical_model(x) == canonical_model(y);
}

std::pair<std::uint64_t, std::uint64_t> weierstrass_counts(const WeierstrassCurve& c) {
  return WeierstrassCounter(c.p).counts(c.a % c.p, c.b % c.p);
}

std::vector<PairSearchResult> find_pairs_for_prime(std::uint64_t p) {
  std::vector<PairSearchResult> out;
  if (p <= 3 || !is_prime_u64(p)) return out;
  const WeierstrassCounter counter(p);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<WeierstrassCurve>> buckets;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      if (!nonsingular(p, a, b)) continue;
      const WeierstrassCurve c{p, a, b};
      if (!(canonical_model(c) == c)) continue;
      buckets[counter.counts(a, b)].push_back(c);
    }
  }
  for (const auto& [key, classes] : buckets) {
    if (classes.size() < 2) continue;
    const ZetaFunction zeta = genus_one_zeta(p, key.first, key.second);
    for (std::size_t j = 1; j < classes.size(); ++j) {
      out.push_back({p, classes.front(), classes[j], PointCountSeries{from_u64(p), {from_u64(key.first), from_u64(key.second)}},
                     zeta});
    }
  }
  std::sort(out.begin(), out.end(), [](const PairSearchResult& x, const PairSearchResult& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

std::vector<PairSearchResult> find_pairs(std::uint64_t p_min, std::uint64_t p_max, unsigned workers) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(p_min, 5); p <= p_max; ++p) {
    if (is_prime_u64(p)) primes.push_back(p);
  }
  std::vector<std::vector<PairSearchResult>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) per_prime[i] = find_pairs_for_prime(primes[i]);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(primes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<PairSearchResult> out;
  for (auto& v : per_prime) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace weilzeta
