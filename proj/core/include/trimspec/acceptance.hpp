#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimspec {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  int jobs = 0;            // threads per sweep; 0 -> hardware concurrency
  std::string out_dir;     // when nonempty: CSV per sweep + report.txt
  std::ostream* log = nullptr;  // progress and per-criterion lines
};

/// Runs every acceptance criterion at its pinned tolerance and prints one
/// pass/fail line per criterion to the log.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace trimspec
