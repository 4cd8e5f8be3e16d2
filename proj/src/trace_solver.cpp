#include "weilzeta/trace_solver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

bool is_zero(const Rational& v) { return v == 0; }
bool is_zero(const RationalFunction& v) { return v.is_zero(); }

template <class F>
struct Elimination {
  std::vector<std::vector<F>> rows;  // reduced rows, one per pivot
  std::vector<unsigned> pivots;      // pivot column of each row
};

/// Reduced row echelon form with pivot columns chosen from the last column
/// towards the first.
template <class F>
Elimination<F> reduce(std::vector<std::vector<F>> m, unsigned cols) {
  Elimination<F> out;
  std::size_t r = 0;
  for (unsigned c = cols; c-- > 0 && r < m.size();) {
    std::size_t sel = r;
    while (sel < m.size() && is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[r]);
    const F pivot = m[r][c];
    if (is_zero(pivot)) throw Error(ErrorKind::DegenerateQ, "pivot vanishes identically");
    for (auto& v : m[r]) v = v / pivot;
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == r || is_zero(m[o][c])) continue;
      const F f = m[o][c];
      for (unsigned j = 0; j < cols; ++j) m[o][j] = m[o][j] - f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) { return make_monic(divmod(a * b, gcd(a, b)).first); }

/// Clears denominators of a row and scales it to a primitive integer
/// relation whose pivot coefficient has a positive leading term.
Relation make_relation(const std::vector<RationalFunction>& row, unsigned pivot) {
  RatPoly common{Rational(1)};
  for (const auto& v : row) {
    if (!v.is_zero()) common = lcm(common, v.denominator());
  }
  std::vector<RatPoly> polys;
  for (const auto& v : row) polys.push_back(divmod(v.numerator() * common, v.denominator()).first);
  // Integer content across all entries.
  BigInt l = 1;
  for (const auto& p : polys)
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& p : polys)
    for (const auto& c : p.coefficients()) {
      Rational s = c * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
  if (sgn(polys[pivot].leading()) < 0) g = -g;
  Relation rel;
  for (unsigned i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) continue;
    rel.coeffs.emplace(i, RationalFunction(polys[i].scaled(make_rational(l, g))));
  }
  return rel;
}

template <class F>
ForcedReport summarize(unsigned d, const ConstraintFlags& flags, const Elimination<F>& e,
                       const std::function<RationalFunction(const F&)>& lift) {
  const unsigned cols = 2 * d + 1;
  ForcedReport report;
  report.d = d;
  report.flags = flags;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (unsigned c = 0; c < cols; ++c) {
    if (!is_pivot[c]) report.free.push_back(c);
  }
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const unsigned c = e.pivots[r];
    bool unit = true;
    for (unsigned j = 0; j < cols; ++j) {
      if (j != c && !is_zero(e.rows[r][j])) unit = false;
    }
    if (unit) {
      report.forced.push_back(c);
      continue;
    }
    std::vector<RationalFunction> row;
    for (const auto& v : e.rows[r]) row.push_back(lift(v));
    report.relations.push_back(make_relation(row, c));
  }
  std::sort(report.forced.begin(), report.forced.end());
  std::sort(report.relations.begin(), report.relations.end(), [](const Relation& a, const Relation& b) {
    return a.coeffs.rbegin()->first < b.coeffs.rbegin()->first;
  });
  for (auto f : report.free) {
    std::vector<RationalFunction> v(cols);
    v[f] = RationalFunction(Rational(1));
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -lift(e.rows[r][f]);
    report.basis.push_back(std::move(v));
  }
  return report;
}

}  // namespace

std::string RowLabel::to_string() const {
  switch (kind) {
    case RowKind::EvenMukai: return "EVEN_MUKAI";
    case RowKind::OddMukai: return "ODD_MUKAI";
    case RowKind::HardLefschetz: return "HL(" + std::to_string(index) + ")";
    case RowKind::Trivial: return "TRIVIAL(" + std::to_string(index) + ")";
    case RowKind::Albanese: return "ALBANESE";
  }
  return "?";
}

TraceConstraintSystem build_constraint_system(unsigned d, const ConstraintFlags& flags) {
  if (d == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  TraceConstraintSystem s{d, flags, {}};
  const unsigned n = s.unknowns();
  auto blank = [n] { return std::vector<RationalFunction>(n); };

  if (flags.even_mukai) {
    // Tate twist (i) on H^{2i} scales the trace by q^{-i}.
    auto c = blank();
    for (unsigned i = 0; i <= d; ++i) c[2 * i] = RationalFunction::q_power(-static_cast<long>(i));
    s.rows.push_back({{RowKind::EvenMukai}, std::move(c)});
  }
  if (flags.odd_mukai) {
    auto c = blank();
    for (unsigned i = 1; i <= d; ++i) c[2 * i - 1] = RationalFunction::q_power(-static_cast<long>(i));
    s.rows.push_back({{RowKind::OddMukai}, std::move(c)});
  }
  if (flags.hard_lefschetz) {
    for (unsigned i = 0; i < d; ++i) {
      auto c = blank();
      c[2 * d - i] = RationalFunction(Rational(1));
      c[i] = -RationalFunction::q_power(static_cast<long>(d - i));
      s.rows.push_back({{RowKind::HardLefschetz, i}, std::move(c)});
    }
  }
  if (flags.trivial) {
    for (unsigned i : {0U, 2 * d}) {
      auto c = blank();
      c[i] = RationalFunction(Rational(1));
      s.rows.push_back({{RowKind::Trivial, i}, std::move(c)});
    }
  }
  if (flags.albanese) {
    auto c = blank();
    c[1] = RationalFunction(Rational(1));
    s.rows.push_back({{RowKind::Albanese}, std::move(c)});
  }
  return s;
}

ForcedReport solve_forced(const TraceConstraintSystem& system) {
  std::vector<std::vector<RationalFunction>> m;
  for (const auto& row : system.rows) {
    // Clear denominators so the rows enter the elimination as polynomials.
    RatPoly common{Rational(1)};
    for (const auto& v : row.coeffs) {
      if (!v.is_zero()) common = lcm(common, v.denominator());
    }
    const RationalFunction scale{common};
    std::vector<RationalFunction> r;
    for (const auto& v : row.coeffs) r.push_back(v * scale);
    m.push_back(std::move(r));
  }
  auto e = reduce(std::move(m), system.unknowns());
  return summarize<RationalFunction>(system.d, system.flags, e, [](const RationalFunction& v) { return v; });
}

NumericSystem instantiate_at_q(const TraceConstraintSystem& system, const Rational& q0) {
  if (q0 <= 1) throw Error(ErrorKind::DegenerateQ, "q0 must exceed 1");
  NumericSystem n{system.d, system.flags, q0, {}, {}};
  for (const auto& row : system.rows) {
    n.labels.push_back(row.label);
    std::vector<Rational> values;
    for (const auto& v : row.coeffs) values.push_back(v.evaluate(q0));
    n.rows.push_back(std::move(values));
  }
  return n;
}

ForcedReport solve_forced_numeric(const NumericSystem& system) {
  auto e = reduce(system.rows, 2 * system.d + 1);
  return summarize<Rational>(system.d, system.flags, e, [](const Rational& v) { return RationalFunction(v); });
}

TraceCheckReport verify_traces_against_system(const TraceVector& tx, const TraceVector& ty,
                                              const TraceConstraintSystem& system) {
  if (tx.d != ty.d || tx.d != system.d || tx.q != ty.q || tx.terms != ty.terms ||
      tx.traces.size() != system.unknowns() || ty.traces.size() != system.unknowns()) {
    throw Error(ErrorKind::DimensionMismatch, "trace vectors and system disagree on q, d or the number of terms");
  }
  TraceCheckReport report;
  for (unsigned n = 1; n <= tx.terms; ++n) {
    const Rational qn(pow(tx.q, n));
    for (const auto& row : system.rows) {
      Rational residual = 0;
      for (unsigned i = 0; i < row.coeffs.size(); ++i) {
        if (row.coeffs[i].is_zero()) continue;
        residual += row.coeffs[i].evaluate(qn) * (tx.traces[i][n - 1] - ty.traces[i][n - 1]);
      }
      if (residual != 0) report.ok = false;
      report.checks.push_back({row.label, n, residual});
    }
  }
  return report;
}

std::string format_relation(const Relation& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [degree, coeff] : r.coeffs) {
    const auto integral = to_integer(coeff.numerator());
    const bool polynomial = coeff.denominator().degree() == 0 && integral.has_value();
    std::string body;
    bool negative = false;
    if (polynomial) {
      const IntPoly& p = *integral;
      const auto nonzero = std::count_if(p.coefficients().begin(), p.coefficients().end(), [](const BigInt& c) { return c != 0; });
      if (nonzero == 1) {
        negative = sgn(p.leading()) < 0;
        const IntPoly mag = negative ? -p : p;
        body = format_poly(mag, "q");
        if (body == "1") body.clear();
      } else {
        body = "(" + format_poly(p, "q") + ")";
      }
    } else {
      body = "(" + coeff.to_string() + ")";
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    os << body << (body.empty() ? "" : "·") << "D_" << degree;
  }
  os << " = 0";
  return os.str();
}

}  // namespace weilzeta
