#include "oracles.hpp"

#include <algorithm>

namespace oracle {

std::uint64_t NaiveField::size() const {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < k(); ++i) s *= p;
  return s;
}

std::vector<std::uint64_t> NaiveField::element(std::uint64_t index) const {
  std::vector<std::uint64_t> c(k());
  for (auto& v : c) {
    v = index % p;
    index /= p;
  }
  return c;
}

std::vector<std::uint64_t> NaiveField::add(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) const {
  std::vector<std::uint64_t> c(k());
  for (unsigned i = 0; i < k(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

std::vector<std::uint64_t> NaiveField::mul(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) const {
  std::vector<std::uint64_t> prod(2 * k(), 0);
  for (unsigned i = 0; i < k(); ++i)
    for (unsigned j = 0; j < k(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (unsigned top = 2 * k() - 1; top >= k(); --top) {
    std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k(); ++i) {
      std::uint64_t sub = c * modulus[i] % p;
      prod[top - k() + i] = (prod[top - k() + i] + p - sub) % p;
    }
  }
  prod.resize(k());
  return prod;
}

static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

bool divides(const std::vector<std::uint64_t>& b, const std::vector<std::uint64_t>& a, std::uint64_t p) {
  std::vector<std::uint64_t> r = a;
  std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size()) {
    std::uint64_t c = r.back() * lead_inv % p;
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = (r[shift + i] + p - c * b[i] % p) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r.empty();
}

bool irreducible_by_trial_division(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
  unsigned n = static_cast<unsigned>(monic.size() - 1);
  for (unsigned e = 1; e <= n / 2; ++e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(e + 1);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < e; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[e] = 1;
      if (divides(g, monic, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  // Enumerate low-to-high lists in lexicographic order: m0 is the most
  // significant digit of the index.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> m(k + 1);
    std::uint64_t t = idx;
    for (unsigned i = k; i-- > 0;) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (irreducible_by_trial_division(m, p)) return m;
  }
  return {};
}

static int mobius(unsigned n) {
  int sign = 1;
  for (unsigned f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t necklace_count(std::uint64_t p, unsigned n) {
  long long total = 0;
  for (unsigned e = 1; e <= n; ++e) {
    if (n % e != 0) continue;
    long long power = 1;
    for (unsigned i = 0; i < n / e; ++i) power *= static_cast<long long>(p);
    total += mobius(e) * power;
  }
  return static_cast<std::uint64_t>(total / n);
}

std::uint64_t weierstrass_points(const NaiveField& f, std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> av(f.k(), 0), bv(f.k(), 0);
  av[0] = a % f.p;
  bv[0] = b % f.p;
  std::uint64_t n = f.size();
  // Tabulate squares, then count pairs (x, y) with y^2 = rhs(x).
  std::vector<std::uint64_t> square_count(n, 0);
  auto code = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t c = 0;
    for (unsigned i = f.k(); i-- > 0;) c = c * f.p + v[i];
    return c;
  };
  for (std::uint64_t y = 0; y < n; ++y) {
    auto e = f.element(y);
    ++square_count[code(f.mul(e, e))];
  }
  std::uint64_t points = 1;  // (0 : 1 : 0)
  for (std::uint64_t x = 0; x < n; ++x) {
    auto e = f.element(x);
    auto rhs = f.add(f.add(f.mul(f.mul(e, e), e), f.mul(av, e)), bv);
    points += square_count[code(rhs)];
  }
  return points;
}

mpz_class projective_points(unsigned m, const mpz_class& Q) {
  mpz_class total = 0, power = 1;
  for (unsigned i = 0; i <= m; ++i) {
    total += power;
    power *= Q;
  }
  return total;
}

std::vector<std::vector<mpq_class>> constraint_rows(unsigned d, const Flags& f, const mpq_class& q0) {
  unsigned n = 2 * d + 1;
  std::vector<std::vector<mpq_class>> rows;
  auto unit = [&](unsigned i) {
    std::vector<mpq_class> r(n, 0);
    r[i] = 1;
    return r;
  };
  if (f.even) {
    std::vector<mpq_class> r(n, 0);
    mpq_class s = 1;
    for (unsigned i = 0; i <= d; ++i, s /= q0) r[2 * i] = s;
    rows.push_back(r);
  }
  if (f.odd) {
    std::vector<mpq_class> r(n, 0);
    mpq_class s = 1 / q0;
    for (unsigned i = 1; i <= d; ++i, s /= q0) r[2 * i - 1] = s;
    rows.push_back(r);
  }
  if (f.hl) {
    for (unsigned i = 0; i < d; ++i) {
      std::vector<mpq_class> r(n, 0);
      mpq_class s = 1;
      for (unsigned j = 0; j < d - i; ++j) s *= q0;
      r[2 * d - i] = 1;
      r[i] = -s;
      rows.push_back(r);
    }
  }
  if (f.trivial) {
    rows.push_back(unit(0));
    rows.push_back(unit(2 * d));
  }
  if (f.albanese) rows.push_back(unit(1));
  return rows;
}

std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

std::set<unsigned> forced_by_rank(const std::vector<std::vector<mpq_class>>& rows, unsigned unknowns) {
  std::set<unsigned> forced;
  std::size_t base = rank(rows);
  for (unsigned i = 0; i < unknowns; ++i) {
    auto extended = rows;
    std::vector<mpq_class> e(unknowns, 0);
    e[i] = 1;
    extended.push_back(e);
    if (rank(extended) == base) forced.insert(i);
  }
  return forced;
}

}  // namespace oracle
