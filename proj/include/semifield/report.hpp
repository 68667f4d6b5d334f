#pragma once

#include <optional>
#include <string>
#include <vector>

namespace semifield {

// Counterexample found by a checker: the case index it was found at, the
// encoded elements involved and a short tag naming the violated law.
struct Witness {
  long caseIndex = 0;
  std::string law;
  std::vector<std::string> keys;
};

struct Report {
  bool passed = true;
  long casesRun = 0;
  std::optional<Witness> witness;

  // Line-oriented text: `PASS cases=N` or `FAIL case=i witness=<...>`.
  std::string str() const;
};

}  // namespace semifield
