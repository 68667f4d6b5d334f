#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "semifield/census.hpp"
#include "semifield/checks.hpp"
#include "semifield/errors.hpp"

using namespace semifield;

namespace {

std::vector<std::string> namesOfOrder(const std::vector<CensusClass>& all, int n) {
  std::vector<std::string> names;
  for (const auto& c : all)
    if (c.order == n) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_CASE("census up to order 5") {
  auto all = finiteCensus(5);
  CHECK(namesOfOrder(all, 2) == std::vector<std::string>{"B", "F_2"});
  CHECK(namesOfOrder(all, 3) == std::vector<std::string>{"F_3"});
  CHECK(namesOfOrder(all, 4) == std::vector<std::string>{"F_4"});
  CHECK(namesOfOrder(all, 5) == std::vector<std::string>{"F_5"});
  CHECK(all.size() == 5);
}

TEST_CASE("census classes are pairwise non-isomorphic") {
  auto all = finiteCensus(5);
  std::set<std::string> keys;
  for (const auto& c : all) keys.insert(std::to_string(c.order) + "|" + c.canonicalKey);
  CHECK(keys.size() == all.size());
}

TEST_CASE("every census class re-passes the exhaustive axiom suite") {
  for (const auto& c : finiteCensus(5)) {
    CAPTURE(c.name);
    auto F = tableSemifield(c);
    Report r = checkSemifieldAxiomsExhaustive(*F);
    CHECK(r.passed);
    CHECK(r.casesRun == static_cast<long>(c.order) * c.order * c.order);
  }
}

TEST_CASE("boolean class has idempotent addition, field classes have inverses") {
  for (const auto& c : finiteCensus(4)) {
    bool idem = true, allInverses = true;
    for (int i = 0; i < c.order; ++i) {
      if (c.addTable[i][i] != i) idem = false;
      bool hasInv = false;
      for (int j = 0; j < c.order; ++j) hasInv |= (c.addTable[i][j] == 0);
      allInverses &= hasInv;
    }
    if (c.name == "B") {
      CHECK(idem);
      CHECK_FALSE(allInverses);
    } else {
      CHECK(c.name.rfind("F_", 0) == 0);
      CHECK(allInverses);
    }
  }
}

TEST_CASE("characteristic of census classes") {
  for (const auto& c : finiteCensus(5)) {
    auto F = tableSemifield(c);
    CharClass ch = characteristic(*F, 16);
    if (c.name == "B") CHECK(ch.isOne());
    else if (c.name == "F_4") CHECK(ch == CharClass::prime(2));
    else CHECK(ch == CharClass::prime(c.order));
  }
}

TEST_CASE("order bounds are enforced") {
  CHECK_THROWS_AS(finiteCensus(1), DomainError);
  CHECK_THROWS_AS(finiteCensus(6), DomainError);
}
