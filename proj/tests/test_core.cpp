#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semifield/checks.hpp"
#include "semifield/errors.hpp"
#include "semifield/instances.hpp"

using namespace semifield;

namespace {

// Boolean with the addition table corrupted to 1+1 = 0; the checker must
// find a violation (the strict claim or the group/distributivity laws).
std::shared_ptr<Semifield> brokenBoolean() {
  auto F = makeInstance("boolean");
  Element zero = F->zero, one = F->one;
  auto isZero = [zero](const Element& e) { return e.key == zero.key; };
  F->add = [zero, one, isZero](const Element& a, const Element& b) {
    if (isZero(a)) return b;
    if (isZero(b)) return a;
    return zero;  // 1 + 1 = 0
  };
  F->carrier = std::nullopt;  // force the sampled path
  return F;
}

}  // namespace

TEST_CASE("axiom suite passes on boolean, exhaustively") {
  auto F = makeInstance("boolean");
  Report r = checkSemifieldAxiomsExhaustive(*F);
  CHECK(r.passed);
  CHECK(r.casesRun == 8);
}

TEST_CASE("axiom suite passes on tropical-z, 1000 random cases") {
  auto F = makeInstance("tropical-z");
  Report r = checkSemifieldAxioms(*F, F->sample, 1000, 42);
  CHECK(r.passed);
  CHECK(r.casesRun == 1000);
}

TEST_CASE("axiom suite flags a deliberately broken instance") {
  auto F = brokenBoolean();
  Report r = checkSemifieldAxioms(*F, F->sample, 1000, 42);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  // The witness must re-check to a genuine violation.
  CHECK_FALSE(r.witness->law.empty());
}

TEST_CASE("witness reports serialize as stable text") {
  auto F = brokenBoolean();
  Report r = checkSemifieldAxioms(*F, F->sample, 1000, 42);
  CHECK(r.str().rfind("FAIL case=", 0) == 0);
  Report ok{true, 17, std::nullopt};
  CHECK(ok.str() == "PASS cases=17");
}

TEST_CASE("sampler of a different instance is rejected") {
  auto F = makeInstance("boolean");
  auto G = makeInstance("tropical-z");
  CHECK_THROWS_AS(checkSemifieldAxioms(*F, G->sample, 10, 1), InputMismatchError);
}

TEST_CASE("characteristic detection") {
  CHECK(characteristic(*makeInstance("boolean"), 64) == CharClass::one());
  CHECK(characteristic(*makeInstance("fp:3"), 64) == CharClass::prime(3));
  CHECK(characteristic(*makeInstance("fp:7"), 64) == CharClass::prime(7));
  CharClass z = characteristic(*makeInstance("qplus"), 64);
  CHECK(z.isZero());
  CHECK(z.bound == 64);
  CHECK_THROWS_AS(characteristic(*makeInstance("qplus"), 1), DomainError);
}

TEST_CASE("characteristic rejects an inconsistent repeating sum sequence") {
  // Additive table clamping 1+1+... at 2: s_2 = s_3 without idempotence or
  // zero, which no semifield allows.
  auto F = std::make_shared<Semifield>();
  F->id = "clamp";
  auto elem = [](int i) { return makeElement("clamp", i, std::to_string(i)); };
  F->zero = elem(0);
  F->one = elem(1);
  F->add = [elem](const Element& a, const Element& b) {
    return elem(std::min(payloadAs<int>(a) + payloadAs<int>(b), 2));
  };
  F->eq = [](const Element& a, const Element& b) { return a.key == b.key; };
  CHECK_THROWS_AS(characteristic(*F, 8), InconsistentInstanceError);
}

TEST_CASE("torsion probe") {
  auto trop = makeInstance("tropical-z");
  CHECK(torsionProbe(*trop, tropicalElem(*trop, Int(5)), 20).passed);

  auto f5 = makeInstance("fp:5");
  Report r = torsionProbe(*f5, fpElem(*f5, 2), 20);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  // 2^4 = 16 = 1 mod 5
  CHECK(r.witness->keys == std::vector<std::string>{"2", "4"});

  auto q = makeInstance("qplus");
  CHECK(torsionProbe(*q, qplusElem(*q, Rat(2)), 20).passed);
  CHECK_THROWS_AS(torsionProbe(*q, q->zero, 20), DomainError);
}

TEST_CASE("scalar action through the embedded rationals") {
  auto q = makeInstance("qplus");
  CHECK(scalarAction(*q, PositiveRational(3, 2), qplusElem(*q, Rat(4))).key ==
        qplusElem(*q, Rat(6)).key);

  auto rf = makeInstance("pos-rational-functions");
  Element x = ratFnElem(*rf, RationalFunction::monomialX());
  Element twoX = ratFnElem(*rf, RationalFunction::make({Rat(0), Rat(2)}, {Rat(1)}));
  CHECK(scalarAction(*rf, PositiveRational(2, 1), x).key == twoX.key);

  // In B every repeated sum of 1 is 1, so every scalar acts trivially.
  auto b = makeInstance("boolean");
  CHECK(scalarAction(*b, PositiveRational(7, 3), b->one).key == b->one.key);

  auto f5 = makeInstance("fp:5");
  CHECK_THROWS_AS(scalarAction(*f5, PositiveRational(5, 2), fpElem(*f5, 2)),
                  UnsupportedCharacteristicError);
}

TEST_CASE("scalar action on qplus matches rational arithmetic") {
  auto q = makeInstance("qplus");
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rat qv(intIn(rng, 1, 9), intIn(rng, 1, 9));
    Rat xv(intIn(rng, 1, 9), intIn(rng, 1, 9));
    Element got = scalarAction(*q, PositiveRational(qv), qplusElem(*q, xv));
    CHECK(got.key == qplusElem(*q, qv * xv).key);
  }
}

TEST_CASE("cancellativity probe") {
  auto q = makeInstance("qplus");
  CHECK(cancellativityProbe(*q, q->sample, 1000, 3).passed);

  auto lead = makeInstance("leading-term");
  Report r = cancellativityProbe(*lead, lead->sample, 100, 3);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());

  auto b = makeInstance("boolean");
  Report rb = cancellativityProbeExhaustive(*b);
  CHECK_FALSE(rb.passed);
  // 0 + 1 = 1 + 1 = 1 with 0 != 1
  CHECK(rb.witness->keys == std::vector<std::string>{"0", "1", "1"});
}

TEST_CASE("no strict instance sums two nonzero elements to zero") {
  for (const auto& name : registeredInstanceNames()) {
    auto F = makeInstance(name);
    if (!F->strictClaim) continue;
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      Element a = F->sample(rng), b = F->sample(rng);
      if (F->isZeroElem(a) || F->isZeroElem(b)) continue;
      CHECK_FALSE(F->isZeroElem(F->add(a, b)));
    }
  }
}
