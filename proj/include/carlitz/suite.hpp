#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "carlitz/report.hpp"

namespace carlitz::suite {

/*
 * The acceptance matrix: ten criteria covering the reference-value checks, the
 * four theorem families with their sharpness counterexamples, oracle
 * equivalences, closed forms, Bernoulli factorizations, randomized identity
 * testing, multizeta, the Euler-Carlitz cross ratio, and the inverse
 * conjecture. `Quick` runs a trimmed matrix (< 60 s), `Full` the whole
 * thing (< 15 min).
 */
enum class Profile { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct TheoremCounts {
  int64_t pass = 0, fail = 0, expected_fail = 0;
};

struct Summary {
  std::string profile;
  uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  std::map<std::string, TheoremCounts> per_theorem;

  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the matrix; one "[PASS|FAIL] criterion N ..." line per criterion is
// streamed to `log` when given. Identical (profile, seed) inputs produce
// identical summaries.
Summary run_acceptance(Profile profile, uint64_t seed, std::ostream* log);

}  // namespace carlitz::suite
