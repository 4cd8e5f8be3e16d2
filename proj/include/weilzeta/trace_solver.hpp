#pragma once

#include <map>
#include <string>
#include <vector>

#include "weilzeta/rational_function.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

/// Which families of constraints enter the system. The defaults are the
/// full set used for dimension-three derived equivalences.
struct ConstraintFlags {
  bool even_mukai = true;
  bool odd_mukai = true;
  bool hard_lefschetz = true;
  bool trivial = true;
  bool albanese = true;

  bool operator==(const ConstraintFlags&) const = default;
};

enum class RowKind { EvenMukai, OddMukai, HardLefschetz, Trivial, Albanese };

struct RowLabel {
  RowKind kind;
  unsigned index = 0;  // degree i for HL(i) and TRIVIAL(i)

  std::string to_string() const;
  bool operator==(const RowLabel&) const = default;
};

/// Homogeneous linear constraints sum_i coeffs[i] * D_i = 0 on the trace
/// differences D_i = Tr(phi*|H^i(X)) - Tr(phi*|H^i(Y)), i = 0..2d.
struct ConstraintRow {
  RowLabel label;
  std::vector<RationalFunction> coeffs;
};

struct TraceConstraintSystem {
  unsigned d = 0;
  ConstraintFlags flags;
  std::vector<ConstraintRow> rows;

  unsigned unknowns() const { return 2 * d + 1; }
};

TraceConstraintSystem build_constraint_system(unsigned d, const ConstraintFlags& flags = {});

/// One relation sum_i coeffs[i] * D_i = 0 with integer polynomial
/// coefficients in q, keyed by degree i.
struct Relation {
  std::map<unsigned, RationalFunction> coeffs;
};

struct ForcedReport {
  unsigned d = 0;
  ConstraintFlags flags;
  std::vector<unsigned> forced;    // D_i = 0 in every solution
  std::vector<unsigned> free;      // free parameters of the solution space
  std::vector<Relation> relations; // one per unforced pivot degree
  /// Basis of the solution space: one vector per free parameter.
  std::vector<std::vector<RationalFunction>> basis;

  bool all_forced() const { return forced.size() == 2 * d + 1; }
};

/// Exact elimination over Q(q). Pivots are taken from the highest degree
/// down, so residual relations express high-degree differences through the
/// lowest free ones.
ForcedReport solve_forced(const TraceConstraintSystem& system);

struct NumericSystem {
  unsigned d = 0;
  ConstraintFlags flags;
  Rational q0;
  std::vector<RowLabel> labels;
  std::vector<std::vector<Rational>> rows;
};

NumericSystem instantiate_at_q(const TraceConstraintSystem& system, const Rational& q0);
ForcedReport solve_forced_numeric(const NumericSystem& system);

struct RowCheck {
  RowLabel label;
  unsigned n = 0;
  Rational residual;  // value of the row at D_i = tx_i(n) - ty_i(n), q -> q^n
  bool satisfied() const { return residual == 0; }
};

struct TraceCheckReport {
  bool ok = true;
  std::vector<RowCheck> checks;
};

/// Substitutes the concrete trace differences for phi^n (q replaced by q^n)
/// into every row, for n = 1..terms.
TraceCheckReport verify_traces_against_system(const TraceVector& tx, const TraceVector& ty,
                                              const TraceConstraintSystem& system);

/// "2q·D_1 + D_3 = 0".
std::string format_relation(const Relation& r);

}  // namespace weilzeta
