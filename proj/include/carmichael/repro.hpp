#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "carmichael/counting.hpp"

namespace carmichael {

struct ReproCheck {
  std::string name;
  std::function<bool()> run;
};

using CountFn = std::function<BigInt(std::uint64_t q, unsigned n)>;

// Every check of a reference constant or worked example. The counting
// routine is injectable so a broken implementation can be shown to fail.
std::vector<ReproCheck> reference_checks(CountFn count = [](std::uint64_t q, unsigned n) {
  return count_carmichael_exact(q, n);
});

// Runs the checks, printing "PASS"/"FAIL" per item with its runtime. An
// exception counts as a failure. Returns 0 iff every check passed.
int run_checks(const std::vector<ReproCheck>& checks, std::ostream& out);

}  // namespace carmichael
