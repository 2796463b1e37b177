#include <doctest.h>

#include <set>

#include <json.hpp>

#include "unitgroup/verify.hpp"

using namespace unitgroup;

namespace {

const Fact* find_fact(const VerificationReport& r, const std::string& name) {
  for (const auto& f : r.facts)
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("every emitted report carries a registered anchor") {
  VerifyOptions opts;
  opts.max_n = 5;
  const auto reports = run_all(opts);
  CHECK(reports.size() == 7);  // seven claim groups at max_n = 5

  const auto& registry = claims_registry();
  std::set<std::string> ids;
  for (const auto& r : reports) {
    const auto it = registry.find(r.id);
    REQUIRE(it != registry.end());
    CHECK(r.section == it->second.section);
    CHECK(r.claim == it->second.claim);
    CHECK(r.passed());
    ids.insert(r.id);
  }
  CHECK(ids.size() == 7);
}

TEST_CASE("c5 report facts") {
  const VerificationReport r = cmd_c5();
  CHECK(r.verdict == "pass");
  const Fact* ideals = find_fact(r, "distinct_principal_ideals");
  REQUIRE(ideals != nullptr);
  CHECK(ideals->actual == "4");
  const Fact* counts = find_fact(r, "observed_unit_counts");
  REQUIRE(counts != nullptr);
  CHECK(counts->actual == "{1, 15}");
}

TEST_CASE("sn and an verdicts at max_n = 6") {
  VerifyOptions opts;
  opts.max_n = 6;
  const auto sn = cmd_sn(opts);
  REQUIRE(sn.size() == 2);
  for (const auto& r : sn) CHECK(r.verdict == "pass");

  const auto an = cmd_an(opts);
  REQUIRE(an.size() == 2);
  for (const auto& r : an) CHECK(r.verdict == "pass");
}

TEST_CASE("an reports the A8 obstruction") {
  VerifyOptions opts;
  opts.max_n = 8;
  const auto an = cmd_an(opts);
  REQUIRE(an.size() == 4);
  CHECK(an[0].verdict == "pass");
  CHECK(an[1].verdict == "pass");
  CHECK(an[2].verdict == "pass");
  CHECK(an[3].id == "an.n8");
  CHECK(an[3].verdict == "obstructed");
  CHECK(an[3].passed());
  const Fact* cands = find_fact(an[3], "sigma_candidates");
  REQUIRE(cands != nullptr);
  CHECK(cands->actual == "{e, (6,7,8), (6,8,7)}");
}

TEST_CASE("usage errors throw invalid_argument") {
  VerifyOptions opts;
  opts.max_n = 4;
  CHECK_THROWS_AS(cmd_sn(opts), std::invalid_argument);
  opts.max_n = 10;
  CHECK_THROWS_AS(cmd_an(opts), std::invalid_argument);
  CHECK_THROWS_AS(run_claim("bogus", {}), std::invalid_argument);
}

TEST_CASE("JSON serialization is deterministic modulo ms and schema-shaped") {
  const auto a = reports_to_json({cmd_s3()}, /*zero_ms=*/true);
  const auto b = reports_to_json({cmd_s3()}, /*zero_ms=*/true);
  CHECK(a == b);

  const auto parsed = nlohmann::json::parse(a);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const auto& o = parsed[0];
  CHECK(o.contains("id"));
  CHECK(o.contains("anchor"));
  CHECK(o["anchor"].contains("section"));
  CHECK(o["anchor"].contains("quote"));
  CHECK(o.contains("inputs"));
  CHECK(o.contains("facts"));
  CHECK(o.contains("verdict"));
  CHECK(o.contains("ms"));
  CHECK(o["verdict"] == "pass");
  CHECK(o["ms"] == 0);
  for (const auto& f : o["facts"]) {
    CHECK(f.contains("name"));
    CHECK(f.contains("expected"));
    CHECK(f.contains("actual"));
    CHECK(f.contains("ok"));
  }
}

TEST_CASE("run_claim dispatch") {
  CHECK(run_claim("c5", {}).size() == 1);
  VerifyOptions opts;
  opts.max_n = 5;
  CHECK(run_claim("sn", opts).size() == 1);
  CHECK(run_claim("an", opts).size() == 1);
}

TEST_SUITE_END();
