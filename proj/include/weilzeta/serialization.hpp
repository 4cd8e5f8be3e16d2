#pragma once

#include <json.hpp>
#include <string>

#include "weilzeta/pair_search.hpp"
#include "weilzeta/trace_solver.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

using Json = nlohmann::json;

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
/// strings. Both forms are accepted on input.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// Always "num/den" in lowest terms.
std::string format_rational(const Rational& r);

/// { "label", "p", "k", "ambient": {"type", "dim"}, "equations" }.
/// Throws MalformedSpec on any schema violation.
VarietySpec variety_spec_from_json(const Json& j);
Json to_json(const VarietySpec& spec);

Json to_json(const PointCountSeries& series);
PointCountSeries count_series_from_json(const Json& j);

/// { "q", "num", "den" }, coefficient lists low-to-high.
Json to_json(const ZetaFunction& z);
ZetaFunction zeta_from_json(const Json& j);

/// { "d", "betti" }.
CohomologyProfile profile_from_json(const Json& j);
Json to_json(const CohomologyProfile& profile);

Json to_json(const WeilFactorization& w);
Json to_json(const TraceVector& t);
Json to_json(const DualityReport& r);
Json to_json(const RiemannReport& r);
Json to_json(const ConstraintFlags& flags);

/// { "d", "flags", "forced", "residual_relations": [ {"coeffs": {"D_i": "..."}} ] }.
Json to_json(const ForcedReport& report);
Json to_json(const TraceCheckReport& report);
Json to_json(const PairSearchResult& result);

Json read_json_file(const std::string& path);

}  // namespace weilzeta
