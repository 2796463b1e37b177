// unitgroup-lab: verifies which symmetric and alternating groups occur as
// unit groups of finite rings, one machine-checkable certificate per claim.
//
// Exit codes: 0 all verifications pass (an "obstructed" report counts as a
// pass), 1 a verification failed to reproduce, 2 usage or configuration
// error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "unitgroup/verify.hpp"

namespace {

int run_verify(const std::string& claim, const unitgroup::VerifyOptions& opts,
               const std::string& json_path) {
  std::vector<unitgroup::VerificationReport> reports;
  try {
    reports = unitgroup::run_claim(claim, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    std::cout << "[" << r.verdict << "] " << r.id << "  (" << r.ms << " ms)\n";
    if (r.verdict == "fail") {
      for (const auto& f : r.facts)
        if (!f.ok)
          std::cout << "    " << f.name << ": expected " << f.expected << ", got "
                    << f.actual << "\n";
    }
  }
  std::cout << reports.size() << " report(s), "
            << (all_pass ? "all passed" : "FAILURES present") << "\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot open " << json_path << " for writing\n";
      return 2;
    }
    out << unitgroup::reports_to_json(reports);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit groups of finite rings: claim verifier"};
  app.require_subcommand(1);

  std::string claim;
  std::string json_path;
  unitgroup::VerifyOptions opts;

  CLI::App* verify = app.add_subcommand("verify", "run one claim family or all");
  verify
      ->add_option("claim", claim,
                   "one of: c5, s3, s4, a4, a8, sn, an, all")
      ->required()
      ->check(CLI::IsMember({"c5", "s3", "s4", "a4", "a8", "sn", "an", "all"}));
  verify->add_option("--max-n", opts.max_n, "upper degree for sn/an (5..9)")
      ->check(CLI::Range(5u, 9u));
  verify->add_option("--json", json_path, "write the certificates as a JSON array");
  verify->add_option("--threads", opts.threads, "worker threads for the big scans")
      ->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  return run_verify(claim, opts, json_path);
}
