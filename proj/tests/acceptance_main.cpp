// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <iostream>

#include "trimspec/acceptance.hpp"

int main() {
  trimspec::AcceptanceOptions opts;
  opts.log = &std::cout;
  opts.out_dir = "acceptance_out";
  const auto results = trimspec::run_acceptance(opts);
  const bool ok = trimspec::all_pass(results);
  std::cout << (ok ? "acceptance: all criteria passed\n"
                   : "acceptance: FAILURES present\n");
  return ok ? 0 : 1;
}
