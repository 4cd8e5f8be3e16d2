#include "weilzeta/serialization.hpp"

#include <fstream>
#include <limits>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

std::vector<std::uint64_t> reduce_coefficient(const Json& c, const BigInt& p, unsigned k) {
  std::vector<std::uint64_t> out;
  auto reduce = [&](const Json& v) {
    BigInt r = bigint_from_json(v) % p;
    if (sgn(r) < 0) r += p;
    out.push_back(*to_u64(r));
  };
  if (k == 1 && !c.is_array()) {
    reduce(c);
  } else {
    if (!c.is_array() || c.size() != k) {
      throw Error(ErrorKind::MalformedSpec, "coefficient must be a list of " + std::to_string(k) + " integers");
    }
    for (const auto& v : c) reduce(v);
  }
  return out;
}

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(bigint_to_json(c));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "polynomial must be a coefficient list");
  std::vector<BigInt> c;
  for (const auto& v : j) c.push_back(bigint_from_json(v));
  return IntPoly(std::move(c));
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::MalformedSpec, "bad integer string");
    return r;
  }
  throw Error(ErrorKind::MalformedSpec, "expected an integer, got " + j.dump());
}

std::string format_rational(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

VarietySpec variety_spec_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::MalformedSpec, "spec must be a JSON object");
    for (const char* key : {"p", "k", "ambient", "equations"}) {
      if (!j.contains(key)) throw Error(ErrorKind::MalformedSpec, std::string("missing key '") + key + "'");
    }
    VarietySpec spec;
    spec.label = j.value("label", std::string{});
    spec.p = bigint_from_json(j.at("p"));
    if (sgn(spec.p) <= 0) throw Error(ErrorKind::MalformedSpec, "p must be positive");
    const auto k = j.at("k").get<std::int64_t>();
    if (k < 1) throw Error(ErrorKind::MalformedSpec, "k must be positive");
    spec.k = static_cast<unsigned>(k);
    const auto& amb = j.at("ambient");
    const auto type = amb.at("type").get<std::string>();
    if (type == "affine") spec.ambient.kind = AmbientKind::Affine;
    else if (type == "projective") spec.ambient.kind = AmbientKind::Projective;
    else throw Error(ErrorKind::MalformedSpec, "ambient type must be 'affine' or 'projective'");
    const auto dim = amb.at("dim").get<std::int64_t>();
    if (dim < 0) throw Error(ErrorKind::MalformedSpec, "ambient dimension must be nonnegative");
    spec.ambient.dim = static_cast<unsigned>(dim);
    if (!j.at("equations").is_array()) throw Error(ErrorKind::MalformedSpec, "equations must be a list");
    for (const auto& eq : j.at("equations")) {
      if (!eq.is_array()) throw Error(ErrorKind::MalformedSpec, "each equation must be a list of terms");
      Equation equation;
      for (const auto& term : eq) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array()) {
          throw Error(ErrorKind::MalformedSpec, "term must be [coeff, [exponents...]]");
        }
        Term t;
        t.coefficient = reduce_coefficient(term[0], spec.p, spec.k);
        for (const auto& e : term[1]) {
          const auto v = e.get<std::int64_t>();
          if (v < 0) throw Error(ErrorKind::MalformedSpec, "exponents must be nonnegative");
          t.exponents.push_back(static_cast<unsigned>(v));
        }
        equation.push_back(std::move(t));
      }
      spec.equations.push_back(std::move(equation));
    }
    return validate(std::move(spec));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

Json to_json(const VarietySpec& spec) {
  Json eqs = Json::array();
  for (const auto& eq : spec.equations) {
    Json terms = Json::array();
    for (const auto& t : eq) {
      Json coeff = spec.k == 1 ? Json(t.coefficient.front()) : Json(t.coefficient);
      terms.push_back(Json::array({coeff, t.exponents}));
    }
    eqs.push_back(terms);
  }
  return Json{{"label", spec.label},
              {"p", bigint_to_json(spec.p)},
              {"k", spec.k},
              {"ambient", {{"type", spec.ambient.kind == AmbientKind::Affine ? "affine" : "projective"},
                           {"dim", spec.ambient.dim}}},
              {"equations", eqs}};
}

Json to_json(const PointCountSeries& series) {
  Json counts = Json::array();
  for (const auto& c : series.counts) counts.push_back(bigint_to_json(c));
  return Json{{"q", bigint_to_json(series.q)}, {"counts", counts}};
}

PointCountSeries count_series_from_json(const Json& j) {
  try {
    PointCountSeries s{bigint_from_json(j.at("q")), {}};
    for (const auto& c : j.at("counts")) {
      BigInt v = bigint_from_json(c);
      if (sgn(v) < 0) throw Error(ErrorKind::MalformedSpec, "counts must be nonnegative");
      s.counts.push_back(v);
    }
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

Json to_json(const ZetaFunction& z) {
  return Json{{"q", bigint_to_json(z.q)}, {"num", poly_to_json(z.numerator)}, {"den", poly_to_json(z.denominator)}};
}

ZetaFunction zeta_from_json(const Json& j) {
  try {
    return normalize(bigint_from_json(j.at("q")), poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

CohomologyProfile profile_from_json(const Json& j) {
  try {
    const auto d = j.at("d").get<std::int64_t>();
    if (d < 0) throw Error(ErrorKind::MalformedSpec, "d must be nonnegative");
    std::vector<unsigned> betti;
    for (const auto& b : j.at("betti")) {
      const auto v = b.get<std::int64_t>();
      if (v < 0) throw Error(ErrorKind::MalformedSpec, "Betti numbers must be nonnegative");
      betti.push_back(static_cast<unsigned>(v));
    }
    return CohomologyProfile(static_cast<unsigned>(d), std::move(betti));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

Json to_json(const CohomologyProfile& profile) { return Json{{"d", profile.dimension()}, {"betti", profile.betti()}}; }

Json to_json(const WeilFactorization& w) {
  Json factors = Json::array();
  for (const auto& f : w.factors) factors.push_back(poly_to_json(f));
  return Json{{"q", bigint_to_json(w.q)}, {"d", w.d}, {"factors", factors}};
}

Json to_json(const TraceVector& t) {
  Json traces = Json::array();
  for (const auto& row : t.traces) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    traces.push_back(r);
  }
  return Json{{"q", bigint_to_json(t.q)}, {"d", t.d}, {"terms", t.terms}, {"traces", traces}};
}

Json to_json(const DualityReport& r) { return Json{{"ok", r.ok}, {"violations", r.violations}}; }

Json to_json(const RiemannReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"degree", x.degree},
                 {"inverse_root", {x.inverse_root.real(), x.inverse_root.imag()}},
                 {"modulus", x.modulus},
                 {"expected", x.expected}});
  }
  return Json{{"ok", r.ok}, {"violations", v}};
}

Json to_json(const ConstraintFlags& f) {
  return Json{{"albanese", f.albanese},
              {"even_mukai", f.even_mukai},
              {"hard_lefschetz", f.hard_lefschetz},
              {"odd_mukai", f.odd_mukai},
              {"trivial", f.trivial}};
}

Json to_json(const ForcedReport& report) {
  Json relations = Json::array();
  for (const auto& rel : report.relations) {
    Json coeffs = Json::object();
    for (const auto& [i, c] : rel.coeffs) coeffs["D_" + std::to_string(i)] = c.to_string();
    relations.push_back({{"coeffs", coeffs}});
  }
  return Json{{"d", report.d}, {"flags", to_json(report.flags)}, {"forced", report.forced}, {"residual_relations", relations}};
}

Json to_json(const TraceCheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"row", c.label.to_string()}, {"n", c.n}, {"residual", format_rational(c.residual)},
                      {"satisfied", c.satisfied()}});
  }
  return Json{{"ok", report.ok}, {"checks", checks}};
}

Json to_json(const PairSearchResult& r) {
  auto curve = [](const WeierstrassCurve& c) { return Json{{"a", c.a}, {"b", c.b}}; };
  return Json{{"p", r.p}, {"first", curve(r.first)}, {"second", curve(r.second)},
              {"counts", to_json(r.counts)["counts"]}, {"zeta", to_json(r.zeta)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, path + ": " + e.what());
  }
}

}  // namespace weilzeta
