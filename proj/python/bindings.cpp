#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilzeta/error.hpp"
#include "weilzeta/pair_search.hpp"
#include "weilzeta/serialization.hpp"
#include "weilzeta/trace_solver.hpp"

namespace py = pybind11;
using namespace weilzeta;

// Python int <-> BigInt through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src || (!convert && !PyLong_Check(src.ptr()))) return false;
    object as_int = reinterpret_steal<object>(PyNumber_Long(src.ptr()));
    if (!as_int) {
      PyErr_Clear();
      return false;
    }
    return value.set_str(py::str(as_int).cast<std::string>(), 10) == 0;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

std::vector<BigInt> coefficients(const IntPoly& p) { return p.coefficients(); }

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(BigInt(r.get_num()), BigInt(r.get_den()));
}

ZetaFunction make_zeta(const BigInt& q, const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  return normalize(q, IntPoly(num), IntPoly(den));
}

py::tuple zeta_tuple(const ZetaFunction& z) { return py::make_tuple(coefficients(z.numerator), coefficients(z.denominator)); }

WeilFactorization make_factorization(const BigInt& q, unsigned d, const std::vector<std::vector<BigInt>>& factors) {
  WeilFactorization w{q, d, {}};
  for (const auto& f : factors) w.factors.emplace_back(f);
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zeta functions over finite fields and forced Frobenius-trace equalities";
  py::register_exception<Error>(m, "WeilzetaError", PyExc_ValueError);

  m.def("field_modulus", [](const BigInt& p, unsigned k) { return make_extension(p, k)->modulus(); }, py::arg("p"),
        py::arg("k"));
  m.def("is_irreducible", &is_irreducible, py::arg("monic"), py::arg("p"));

  m.def(
      "count_series",
      [](const std::string& spec_json, unsigned terms, const BigInt& budget, unsigned workers) {
        CountOptions options{budget, workers};
        auto spec = variety_spec_from_json(Json::parse(spec_json));
        py::gil_scoped_release release;
        return count_series(spec, terms, options).counts;
      },
      py::arg("spec_json"), py::arg("terms"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

  m.def(
      "zeta_from_counts",
      [](const BigInt& q, const std::vector<BigInt>& counts, unsigned num_degree, unsigned den_degree) {
        return zeta_tuple(zeta_from_counts({q, counts}, {num_degree, den_degree}));
      },
      py::arg("q"), py::arg("counts"), py::arg("numerator_degree"), py::arg("denominator_degree"));
  m.def(
      "zeta_from_counts_anchored",
      [](const BigInt& q, const std::vector<BigInt>& counts, unsigned num_degree, unsigned den_degree, unsigned d) {
        return zeta_tuple(zeta_from_counts_anchored({q, counts}, {num_degree, den_degree}, d));
      },
      py::arg("q"), py::arg("counts"), py::arg("numerator_degree"), py::arg("denominator_degree"), py::arg("d"));
  m.def(
      "counts_from_zeta",
      [](const BigInt& q, const std::vector<BigInt>& num, const std::vector<BigInt>& den, unsigned terms) {
        return counts_from_zeta(make_zeta(q, num, den), terms).counts;
      },
      py::arg("q"), py::arg("numerator"), py::arg("denominator"), py::arg("terms"));
  m.def(
      "factor_by_weights",
      [](const BigInt& q, const std::vector<BigInt>& num, const std::vector<BigInt>& den, unsigned d,
         std::vector<unsigned> betti, double tolerance) {
        auto w = factor_by_weights(make_zeta(q, num, den), CohomologyProfile(d, std::move(betti)), tolerance);
        std::vector<std::vector<BigInt>> out;
        for (const auto& f : w.factors) out.push_back(coefficients(f));
        return out;
      },
      py::arg("q"), py::arg("numerator"), py::arg("denominator"), py::arg("d"), py::arg("betti"),
      py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "check_functional_equation",
      [](const BigInt& q, unsigned d, const std::vector<std::vector<BigInt>>& factors) {
        auto r = check_functional_equation(make_factorization(q, d, factors));
        return py::make_tuple(r.ok, r.violations);
      },
      py::arg("q"), py::arg("d"), py::arg("factors"));
  m.def(
      "check_riemann_hypothesis",
      [](const BigInt& q, unsigned d, const std::vector<std::vector<BigInt>>& factors, double tolerance) {
        return check_riemann_hypothesis(make_factorization(q, d, factors), tolerance).ok;
      },
      py::arg("q"), py::arg("d"), py::arg("factors"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "traces",
      [](const BigInt& q, unsigned d, const std::vector<std::vector<BigInt>>& factors, unsigned terms) {
        auto t = traces_from_factorization(make_factorization(q, d, factors), terms);
        py::list out;
        for (const auto& row : t.traces) {
          py::list r;
          for (const auto& v : row) r.append(fraction(v));
          out.append(r);
        }
        return out;
      },
      py::arg("q"), py::arg("d"), py::arg("factors"), py::arg("terms"));

  m.def(
      "solve_forced_json",
      [](unsigned d, bool even_mukai, bool odd_mukai, bool hard_lefschetz, bool trivial, bool albanese) {
        ConstraintFlags flags{even_mukai, odd_mukai, hard_lefschetz, trivial, albanese};
        return to_json(solve_forced(build_constraint_system(d, flags))).dump();
      },
      py::arg("d"), py::arg("even_mukai") = true, py::arg("odd_mukai") = true, py::arg("hard_lefschetz") = true,
      py::arg("trivial") = true, py::arg("albanese") = true);
  m.def(
      "find_pairs_json",
      [](std::uint64_t p_min, std::uint64_t p_max, unsigned workers) {
        std::vector<PairSearchResult> results;
        {
          py::gil_scoped_release release;
          results = find_pairs(p_min, p_max, workers);
        }
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        return arr.dump();
      },
      py::arg("p_min"), py::arg("p_max"), py::arg("workers") = 1);
}
