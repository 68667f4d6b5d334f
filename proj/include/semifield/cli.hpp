#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semifield {

// Command dispatch for the `sfc` tool. Writes the transcript to `out` and
// returns the exit status: 0 = all expected properties confirmed, 1 =
// property violation, 2 = usage or validation error. Deterministic given
// (seed, cases, bound).
int runCli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace semifield
