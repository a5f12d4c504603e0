#ifndef STICKEL_VERIFY_HPP
#define STICKEL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stickel/emit.hpp"

namespace stickel {

struct VerifyConfig {
  std::vector<std::string> groups;  // builtin names or file:<path>
  std::vector<int64_t> qs{2, 3, 5, 7};
  uint64_t seed = 0;
  Strictness strictness = Strictness::strict;
  /// Character table JSON replacing the computed table (single group only).
  std::optional<std::string> table_path;
  int random_characters = 200;
  int random_ag_vectors = 20;
  int random_local_elements = 100;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string group;  // "-" for group-independent checks
  bool passed = true;
  long cases = 0;
  Json counterexample;  // null when passed
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;

  long passed() const;
  long failed() const;
  bool ok() const { return failed() == 0; }
  Json to_json() const;
  std::vector<Section> sections() const;
};

/// Every check id with its anchor, in report order.
const std::vector<std::pair<std::string, std::string>>& check_registry();

/// Runs every invariant suite; failures and exceptions become report entries.
VerificationReport run_verification(const VerifyConfig& config);

}  // namespace stickel

#endif  // STICKEL_VERIFY_HPP
