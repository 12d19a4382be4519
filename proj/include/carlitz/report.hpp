#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace carlitz {

/*
 * VerifyReport — the outcome of one identity check. Expected-fail is a
 * first-class status: an instance outside a theorem's stated range whose two
 * sides genuinely differ. It is not an error; it pins the sharpness of the
 * range bounds.
 */
struct VerifyReport {
  enum class Status { Pass, Fail, ExpectedFail };

  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs, rhs;
  Status status = Status::Pass;
  std::string label;  // optional qualifier, e.g. "CONJECTURE:confirmed-at-desk-scale"
  std::optional<std::pair<std::string, std::string>> witness;  // set when sides differ
  std::vector<std::pair<std::string, std::string>> extra;

  bool passed() const { return status != Status::Fail; }
  std::string status_string() const;
  std::string summary_line() const;

  void add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  void add_extra(std::string key, std::string value) {
    extra.emplace_back(std::move(key), std::move(value));
  }

  // Resolves pass/fail/expected-fail from a comparison outcome: in_range
  // instances must agree; out-of-range instances that differ are the
  // documented counterexamples.
  static Status resolve(bool equal, bool in_range);
};

}  // namespace carlitz
