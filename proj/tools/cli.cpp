#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace weilzeta::cli {

namespace {

CountOptions count_options(const GlobalOptions& o) { return CountOptions{o.budget, o.workers}; }

std::string format_degrees(const std::vector<unsigned>& v) {
  if (v.empty()) return "(none)";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::NotPrime:
    case ErrorKind::UnsupportedField:
      return kMalformedSpec;
    case ErrorKind::BudgetExceeded:
      return kBudgetExceeded;
    case ErrorKind::InsufficientCounts:
    case ErrorKind::NoRationalFit:
    case ErrorKind::NonIntegralCoefficients:
    case ErrorKind::NonIntegralCount:
      return kNoRationalFit;
    case ErrorKind::DualityViolation:
      return kDualityViolation;
    case ErrorKind::FieldMismatch:
      return kFieldMismatch;
    default:
      return kPipelineFailure;
  }
}

ZetaInput load_zeta_input(const std::string& path) {
  const Json j = read_json_file(path);
  ZetaInput in;
  if (j.is_object() && j.contains("counts") && !j.contains("equations")) {
    in.counts = count_series_from_json(j);
  } else {
    in.spec = variety_spec_from_json(j);
  }
  return in;
}

std::pair<ZetaFunction, PointCountSeries> compute_zeta(const ZetaInput& input, const CohomologyProfile& profile,
                                                       const GlobalOptions& options) {
  const DegreeSplit split = split_of(profile);
  const unsigned d = profile.dimension();
  PointCountSeries series;
  if (input.counts) {
    series = *input.counts;
  } else {
    const unsigned terms = counts_required(split, d) + options.extra;
    series = count_series(*input.spec, std::max(terms, 1U), count_options(options));
  }
  return {zeta_from_counts_anchored(series, split, d), series};
}

CompareResult compare_specs(const VarietySpec& a, const VarietySpec& b, const CohomologyProfile& profile,
                            const GlobalOptions& options) {
  if (a.p != b.p || a.k != b.k) {
    throw weilzeta::Error(ErrorKind::FieldMismatch, "specs are over F_" + a.q().get_str() + " and F_" + b.q().get_str());
  }
  CompareResult r;
  std::tie(r.zeta_a, r.counts_a) = compute_zeta({a, std::nullopt}, profile, options);
  std::tie(r.zeta_b, r.counts_b) = compute_zeta({b, std::nullopt}, profile, options);
  for (std::size_t n = 0; n < r.counts_a.counts.size(); ++n) {
    if (r.counts_a.counts[n] != r.counts_b.counts[n]) {
      r.first_divergence = static_cast<unsigned>(n + 1);
      break;
    }
  }
  r.equal = r.zeta_a == r.zeta_b;
  return r;
}

int cmd_count(const std::string& spec_path, unsigned n, const GlobalOptions& options, std::ostream& out) {
  const VarietySpec spec = variety_spec_from_json(read_json_file(spec_path));
  const PointCountSeries series = count_series(spec, n, count_options(options));
  if (options.json) {
    Json j = to_json(series);
    j["label"] = spec.label;
    print_json(out, j);
  } else {
    for (const auto& c : series.counts) out << c << "\n";
  }
  return kOk;
}

int cmd_zeta(const std::string& input_path, const std::string& profile_path, const GlobalOptions& options,
             std::ostream& out) {
  const ZetaInput input = load_zeta_input(input_path);
  const CohomologyProfile profile = profile_from_json(read_json_file(profile_path));
  const auto [zeta, series] = compute_zeta(input, profile, options);
  const WeilFactorization w = factor_by_weights(zeta, profile, options.tolerance);
  const DualityReport duality = check_functional_equation(w);
  const RiemannReport rh = check_riemann_hypothesis(w, options.tolerance);

  if (options.json) {
    print_json(out, Json{{"counts", to_json(series)},
                         {"zeta", to_json(zeta)},
                         {"factorization", to_json(w)},
                         {"functional_equation", to_json(duality)},
                         {"riemann_hypothesis", to_json(rh)}});
  } else {
    out << "counts: ";
    for (std::size_t i = 0; i < series.counts.size(); ++i) out << (i ? " " : "") << series.counts[i];
    out << "\nzeta: " << format_zeta(zeta) << "\n";
    for (std::size_t i = 0; i < w.factors.size(); ++i) out << "P_" << i << " = " << format_poly(w.factors[i]) << "\n";
    out << "functional equation: " << (duality.ok ? "ok" : "VIOLATED at i = " + format_degrees(duality.violations)) << "\n";
    out << "riemann hypothesis: " << (rh.ok ? "ok" : std::to_string(rh.violations.size()) + " root(s) off weight")
        << " (advisory)\n";
  }
  return duality.ok ? kOk : kDualityViolation;
}

int cmd_compare(const std::string& spec_a, const std::string& spec_b, const std::string& profile_path,
                const GlobalOptions& options, std::ostream& out) {
  const VarietySpec a = variety_spec_from_json(read_json_file(spec_a));
  const VarietySpec b = variety_spec_from_json(read_json_file(spec_b));
  const CohomologyProfile profile = profile_from_json(read_json_file(profile_path));
  const CompareResult r = compare_specs(a, b, profile, options);
  if (options.json) {
    Json j{{"verdict", r.equal ? "EQUAL" : "DIFFER"}, {"zeta_a", to_json(r.zeta_a)}, {"zeta_b", to_json(r.zeta_b)}};
    if (r.first_divergence) {
      const unsigned n = *r.first_divergence;
      j["first_divergence"] = {{"n", n},
                               {"a", bigint_to_json(r.counts_a.counts[n - 1])},
                               {"b", bigint_to_json(r.counts_b.counts[n - 1])}};
    } else {
      j["first_divergence"] = nullptr;
    }
    print_json(out, j);
  } else {
    out << (r.equal ? "EQUAL" : "DIFFER");
    if (r.first_divergence) {
      const unsigned n = *r.first_divergence;
      out << " at n=" << n << " (" << r.counts_a.counts[n - 1] << " vs " << r.counts_b.counts[n - 1] << ")";
    }
    out << "\nA: " << format_zeta(r.zeta_a) << "\nB: " << format_zeta(r.zeta_b) << "\n";
  }
  return r.equal ? kOk : kNegative;
}

int cmd_find_pair(std::uint64_t p_min, std::uint64_t p_max, const std::string& emit_dir, const GlobalOptions& options,
                  std::ostream& out) {
  const auto results = p_min <= p_max ? find_pairs(p_min, p_max, options.workers) : std::vector<PairSearchResult>{};
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto& r : results) {
      for (const auto& c : {r.first, r.second}) {
        const auto path = std::filesystem::path(emit_dir) /
                          ("curve_p" + std::to_string(c.p) + "_a" + std::to_string(c.a) + "_b" + std::to_string(c.b) + ".json");
        std::ofstream(path) << to_json(weierstrass_spec(c.p, c.a, c.b)).dump(2) << "\n";
      }
    }
  }
  if (options.json) {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    print_json(out, arr);
    return kOk;
  }
  out << std::left << std::setw(5) << "p" << std::setw(12) << "(a1, b1)" << std::setw(12) << "(a2, b2)" << std::setw(12)
      << "N_1, N_2" << "zeta\n";
  for (const auto& r : results) {
    auto curve = [](const WeierstrassCurve& c) { return "(" + std::to_string(c.a) + ", " + std::to_string(c.b) + ")"; };
    out << std::left << std::setw(5) << r.p << std::setw(12) << curve(r.first) << std::setw(12) << curve(r.second)
        << std::setw(12) << (r.counts.counts[0].get_str() + ", " + r.counts.counts[1].get_str()) << format_zeta(r.zeta)
        << "\n";
  }
  out << results.size() << " pair(s)\n";
  return kOk;
}

int cmd_solve(unsigned d, const ConstraintFlags& flags, unsigned max_dim, const GlobalOptions& options,
              std::ostream& out) {
  if (d < 1 || d > max_dim) {
    throw weilzeta::Error(ErrorKind::MalformedSpec, "dimension must lie in [1, " + std::to_string(max_dim) + "]");
  }
  const ForcedReport report = solve_forced(build_constraint_system(d, flags));
  if (options.json) {
    out << to_json(report).dump() << "\n";
  } else {
    std::vector<unsigned> unforced;
    for (unsigned i = 0; i <= 2 * d; ++i) {
      if (!std::binary_search(report.forced.begin(), report.forced.end(), i)) unforced.push_back(i);
    }
    out << "d = " << d << "\n";
    out << "rows: " << (flags.even_mukai ? "EVEN_MUKAI " : "") << (flags.odd_mukai ? "ODD_MUKAI " : "")
        << (flags.hard_lefschetz ? "HL " : "") << (flags.trivial ? "TRIVIAL " : "") << (flags.albanese ? "ALBANESE" : "")
        << "\n";
    out << "forced:   " << format_degrees(report.forced) << "\n";
    out << "unforced: " << format_degrees(unforced) << "\n";
    for (const auto& rel : report.relations) out << "  " << format_relation(rel) << "\n";
  }
  return report.all_forced() ? kOk : kNegative;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of varieties over finite fields and forced Frobenius-trace equalities"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions options;
  std::string budget = options.budget.get_str();
  std::string format = "human";
  options.workers = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--budget", budget, "Maximum number of ambient points to enumerate")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  app.add_option("--tolerance", options.tolerance, "Relative tolerance for root moduli")->capture_default_str();
  app.add_option("--workers", options.workers, "Threads used for point counting")->check(CLI::PositiveNumber);

  std::string spec_path, spec_b, profile_path;
  unsigned n = 1;
  auto* count = app.add_subcommand("count", "Print N_1..N_n for a variety spec");
  count->add_option("spec", spec_path, "VarietySpec JSON file")->required();
  count->add_option("n", n, "Number of terms")->required()->check(CLI::PositiveNumber);

  auto* zeta = app.add_subcommand("zeta", "Compute the zeta function and run the Weil checks");
  zeta->add_option("input", spec_path, "VarietySpec or counts JSON file")->required();
  zeta->add_option("profile", profile_path, "Cohomology profile JSON file")->required();
  zeta->add_option("--extra", options.extra, "Counts beyond the fit used for verification")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Decide whether two varieties have equal zeta functions");
  compare->add_option("spec_a", spec_path)->required();
  compare->add_option("spec_b", spec_b)->required();
  compare->add_option("profile", profile_path)->required();
  compare->add_option("--extra", options.extra, "Counts beyond the fit used for verification")->capture_default_str();

  std::uint64_t p_min = 5, p_max = 31;
  std::string emit_dir;
  auto* find_pair = app.add_subcommand("find-pair", "Search for non-isomorphic elliptic curves with equal zeta");
  find_pair->add_option("--p-min", p_min)->capture_default_str();
  find_pair->add_option("--p-max", p_max)->capture_default_str();
  find_pair->add_option("--emit-dir", emit_dir, "Write a VarietySpec file for every curve in a pair");

  unsigned d = 3, max_dim = 8;
  ConstraintFlags flags;
  auto* solve = app.add_subcommand("solve", "Trace equalities forced by the derived-equivalence constraints");
  solve->add_option("d", d, "Dimension")->required();
  solve->add_option("--max-dim", max_dim)->capture_default_str();
  solve->add_flag("--albanese,!--no-albanese", flags.albanese, "Equality of H^1 traces");
  solve->add_flag("--hard-lefschetz,!--no-hard-lefschetz", flags.hard_lefschetz, "Eigenvalue scaling H^i -> H^{2d-i}");
  solve->add_flag("--trivial,!--no-trivial", flags.trivial, "Equality on H^0 and H^{2d}");
  solve->add_flag("--even-mukai,!--no-even-mukai", flags.even_mukai, "Even Mukai-Hodge trace identity");
  solve->add_flag("--odd-mukai,!--no-odd-mukai", flags.odd_mukai, "Odd Mukai-Hodge trace identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kOk : kMalformedSpec;
  }

  try {
    if (options.budget.set_str(budget, 10) != 0 || sgn(options.budget) < 0) {
      throw weilzeta::Error(ErrorKind::MalformedSpec, "--budget must be a nonnegative integer");
    }
    options.json = format == "json";
    if (*count) return cmd_count(spec_path, n, options, out);
    if (*zeta) return cmd_zeta(spec_path, profile_path, options, out);
    if (*compare) return cmd_compare(spec_path, spec_b, profile_path, options, out);
    if (*find_pair) return cmd_find_pair(p_min, p_max, emit_dir, options, out);
    if (*solve) return cmd_solve(d, flags, max_dim, options, out);
  } catch (const weilzeta::Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPipelineFailure;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"zeta-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weilzeta::cli
