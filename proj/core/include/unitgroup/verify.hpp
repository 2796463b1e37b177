#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unitgroup/rings.hpp"

namespace unitgroup {

struct Fact {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Machine-readable certificate for one verified claim. Reports are
/// deterministic given the inputs: every collection is emitted in canonical
/// order, and ms (wall time) is the only field that varies between runs.
struct VerificationReport {
  std::string id;
  std::string section;
  std::string claim;  // serialized under the JSON key "quote"
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Fact> facts;
  std::string verdict;  // "pass", "obstructed" or "fail"
  std::int64_t ms = 0;

  bool passed() const { return verdict == "pass" || verdict == "obstructed"; }
};

struct VerifyOptions {
  unsigned max_n = 9;   // upper degree for the sn/an certificate families
  unsigned threads = 1;
};

VerificationReport cmd_c5();
VerificationReport cmd_s3();
VerificationReport cmd_s4();
VerificationReport cmd_a4();
VerificationReport cmd_a8(const VerifyOptions& opts = {});
std::vector<VerificationReport> cmd_sn(const VerifyOptions& opts = {});
std::vector<VerificationReport> cmd_an(const VerifyOptions& opts = {});

/// Dispatch by claim name: c5, s3, s4, a4, a8, sn, an, all. Throws
/// std::invalid_argument for unknown names or out-of-range options.
std::vector<VerificationReport> run_claim(const std::string& name,
                                          const VerifyOptions& opts = {});
std::vector<VerificationReport> run_all(const VerifyOptions& opts = {});

struct ClaimAnchor {
  std::string section;
  std::string claim;
};

/// Registry of every claim id with its anchor; reports must carry anchors
/// verbatim from here (enforced by the test suite).
const std::map<std::string, ClaimAnchor>& claims_registry();

/// Serializes reports as a JSON array, fields in schema order
/// {id, anchor:{section, quote}, inputs, facts, verdict, ms}. With zero_ms
/// the wall-time field is zeroed, which makes the output byte-identical
/// across runs with identical flags.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool zero_ms = false);

}  // namespace unitgroup
