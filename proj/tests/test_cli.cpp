#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

using namespace weilzeta;

namespace {

const std::string kFixtures = WEILZETA_FIXTURES;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  auto r = run_cli({"count", fixture("p1_f3.json"), "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n10\n");
  CHECK(run_cli({"count", fixture("affine_inconsistent.json"), "1"}).out == "0\n");
  auto j = Json::parse(run_cli({"--format=json", "count", fixture("p2_f2.json"), "3"}).out);
  CHECK(j["counts"] == Json::array({7, 21, 73}));
  CHECK(run_cli({"count", fixture("malformed_exponents.json"), "1"}).code == cli::kMalformedSpec);
  CHECK(run_cli({"count", fixture("malformed_inhomogeneous.json"), "1"}).code == cli::kMalformedSpec);
  CHECK(run_cli({"count", fixture("does_not_exist.json"), "1"}).code == cli::kMalformedSpec);
  auto budget = run_cli({"--budget=10", "count", fixture("p2_f101.json"), "1"});
  CHECK(budget.code == cli::kBudgetExceeded);
  CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("zeta") {
  auto r = run_cli({"zeta", fixture("elliptic_f5.json"), fixture("curve_profile.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("zeta: (1 + 3t + 5t^2) / (1 - 6t + 5t^2)") != std::string::npos);
  CHECK(r.out.find("functional equation: ok") != std::string::npos);
  auto j = Json::parse(run_cli({"--format=json", "zeta", fixture("p2_f2.json"), fixture("p2_profile.json")}).out);
  CHECK(zeta_from_json(j["zeta"]) ==
        ZetaFunction{2, IntPoly{BigInt(1)}, IntPoly{BigInt(1), BigInt(-7), BigInt(14), BigInt(-8)}});
  CHECK(run_cli({"zeta", fixture("corrupted_counts.json"), fixture("curve_profile.json")}).code == cli::kNoRationalFit);
  CHECK(run_cli({"zeta", fixture("p1_f3.json"), fixture("point_profile.json")}).code != 0);
}

TEST_CASE("compare") {
  auto same = run_cli({"compare", fixture("elliptic_f5.json"), fixture("elliptic_f5.json"), fixture("curve_profile.json")});
  CHECK(same.code == 0);
  CHECK(same.out.find("EQUAL") != std::string::npos);
  auto differ = run_cli({"compare", fixture("elliptic_f5.json"), fixture("p1_f5.json"), fixture("curve_profile.json")});
  CHECK(differ.code == cli::kNegative);
  CHECK(differ.out.find("DIFFER at n=1 (9 vs 6)") != std::string::npos);
  CHECK(run_cli({"compare", fixture("p1_f3.json"), fixture("p1_f5.json"), fixture("p1_profile.json")}).code ==
        cli::kFieldMismatch);
}

TEST_CASE("solve") {
  auto full = run_cli({"--format=json", "solve", "3"});
  CHECK(full.code == 0);
  auto j = Json::parse(full.out);
  CHECK(j["forced"] == Json::array({0, 1, 2, 3, 4, 5, 6}));
  CHECK(j["residual_relations"].empty());
  auto partial = Json::parse(run_cli({"--format=json", "solve", "3", "--no-albanese"}).out);
  CHECK(partial["forced"] == Json::array({0, 2, 4, 6}));
  CHECK(partial["residual_relations"][0]["coeffs"] == Json{{"D_1", "2*q^1/1*q^0"}, {"D_3", "1*q^0/1*q^0"}});
  CHECK(run_cli({"solve", "3", "--no-albanese"}).code == cli::kNegative);
  CHECK(run_cli({"solve", "9"}).code == cli::kMalformedSpec);
  CHECK(run_cli({"solve", "9", "--max-dim", "9"}).code == cli::kNegative);
  CHECK(run_cli({"solve", "0"}).code == cli::kMalformedSpec);
  // Output is deterministic.
  CHECK(run_cli({"--format=json", "solve", "5"}).out == run_cli({"--format=json", "solve", "5"}).out);
}

TEST_CASE("find-pair emits comparable specs") {
  auto dir = std::filesystem::temp_directory_path() / "weilzeta_find_pair_test";
  std::filesystem::remove_all(dir);
  auto r = run_cli({"--format=json", "find-pair", "--p-min", "5", "--p-max", "7", "--emit-dir", dir.string()});
  CHECK(r.code == 0);
  auto pairs = Json::parse(r.out);
  REQUIRE(pairs.size() > 0);
  for (const auto& pair : pairs) {
    auto path = [&](const Json& c) {
      return (dir / ("curve_p" + pair["p"].dump() + "_a" + c["a"].dump() + "_b" + c["b"].dump() + ".json")).string();
    };
    CHECK(run_cli({"compare", path(pair["first"]), path(pair["second"]), fixture("curve_profile.json")}).code == 0);
  }
  std::filesystem::remove_all(dir);
  CHECK(Json::parse(run_cli({"--format=json", "find-pair", "--p-min", "8", "--p-max", "10"}).out).empty());
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == cli::kMalformedSpec);
  CHECK(run_cli({"count"}).code == cli::kMalformedSpec);
  CHECK(run_cli({"--format=xml", "solve", "3"}).code == cli::kMalformedSpec);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("serialization") {
  CHECK(bigint_to_json(BigInt(12)) == Json(12));
  BigInt big("123456789012345678901234567890");
  CHECK(bigint_to_json(big) == Json("123456789012345678901234567890"));
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(make_rational(-6, 4)) == "-3/2");

  auto spec = variety_spec_from_json(read_json_file(fixture("elliptic_f5.json")));
  CHECK(spec.p == 5);
  CHECK(spec.ambient.kind == AmbientKind::Projective);
  CHECK(variety_spec_from_json(to_json(spec)).equations.size() == 1);
  CHECK(to_json(variety_spec_from_json(to_json(spec))) == to_json(spec));

  ZetaFunction z{5, IntPoly{1, 3, 5}, IntPoly{1, -6, 5}};
  CHECK(zeta_from_json(to_json(z)) == z);
  PointCountSeries s{5, {9, 27, big}};
  auto back = count_series_from_json(to_json(s));
  CHECK(back.q == s.q);
  CHECK(back.counts == s.counts);
  CHECK(profile_from_json(to_json(CohomologyProfile(1, {1, 2, 1}))).betti() == std::vector<unsigned>{1, 2, 1});
  CHECK_THROWS_AS(variety_spec_from_json(Json::parse(R"({"p": 5})")), Error);
  CHECK_THROWS_AS(variety_spec_from_json(read_json_file(fixture("malformed_exponents.json"))), Error);
}
