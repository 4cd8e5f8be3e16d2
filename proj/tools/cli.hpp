#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weilzeta/error.hpp"
#include "weilzeta/serialization.hpp"

namespace weilzeta::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // solve: not every degree forced; compare: DIFFER
  kMalformedSpec = 2,
  kBudgetExceeded = 3,
  kNoRationalFit = 4,
  kDualityViolation = 5,
  kFieldMismatch = 6,
  kPipelineFailure = 7,
};

int exit_code_for(ErrorKind kind);

struct GlobalOptions {
  BigInt budget = kDefaultBudget;
  bool json = false;
  double tolerance = kDefaultTolerance;
  unsigned workers = 1;
  /// Counts computed beyond what the fit needs, used to verify it.
  unsigned extra = 2;
};

/// Counts for a spec, or the series stored in a counts file.
struct ZetaInput {
  std::optional<VarietySpec> spec;
  std::optional<PointCountSeries> counts;
};

ZetaInput load_zeta_input(const std::string& path);

/// Anchored fit against the profile; counts are computed from a spec as
/// needed, or taken whole from a counts file.
std::pair<ZetaFunction, PointCountSeries> compute_zeta(const ZetaInput& input, const CohomologyProfile& profile,
                                                       const GlobalOptions& options);

struct CompareResult {
  bool equal = false;
  std::optional<unsigned> first_divergence;  // smallest n with N_n(A) != N_n(B)
  PointCountSeries counts_a, counts_b;
  ZetaFunction zeta_a, zeta_b;
};

CompareResult compare_specs(const VarietySpec& a, const VarietySpec& b, const CohomologyProfile& profile,
                            const GlobalOptions& options);

int cmd_count(const std::string& spec_path, unsigned n, const GlobalOptions& options, std::ostream& out);
int cmd_zeta(const std::string& input_path, const std::string& profile_path, const GlobalOptions& options,
             std::ostream& out);
int cmd_compare(const std::string& spec_a, const std::string& spec_b, const std::string& profile_path,
                const GlobalOptions& options, std::ostream& out);
int cmd_find_pair(std::uint64_t p_min, std::uint64_t p_max, const std::string& emit_dir, const GlobalOptions& options,
                  std::ostream& out);
int cmd_solve(unsigned d, const ConstraintFlags& flags, unsigned max_dim, const GlobalOptions& options,
              std::ostream& out);

/// Full command line; errors are reported on `err` and mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weilzeta::cli
