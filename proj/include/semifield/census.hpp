#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semifield/semifield.hpp"

namespace semifield {

// One isomorphism class found by the exhaustive enumeration. Index 0 is the
// additive neutral, index 1 the multiplicative neutral.
struct CensusClass {
  int order = 0;
  std::string name;  // "F_n", "B", or "S<n>#<i>" for anything unrecognized
  std::vector<std::vector<int>> addTable;
  std::vector<std::vector<int>> mulTable;
  std::string canonicalKey;  // encoding-minimal relabeling of both tables
};

// Exhaustively enumerates all semifield structures on carriers of size
// 2..maxOrder up to isomorphism. The multiplicative group is enumerated on
// n-1 elements; addition is determined by f(x) = 1+x via a+b = a.f(a^-1.b),
// so the search runs over f with the full axiom suite as filter.
// maxOrder > 5 is refused (combinatorial guard), maxOrder < 2 is a
// DomainError.
std::vector<CensusClass> finiteCensus(int maxOrder);

// Table-backed instance for re-checking a census class against the full
// axiom suite.
std::shared_ptr<Semifield> tableSemifield(const CensusClass& c);

}  // namespace semifield
