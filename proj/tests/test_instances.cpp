#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semifield/checks.hpp"
#include "semifield/errors.hpp"
#include "semifield/instances.hpp"

using namespace semifield;

TEST_CASE("descriptor parsing") {
  auto d = parseDescriptor("fp:5");
  CHECK(d.name == "fp");
  CHECK(d.param == 5);
  CHECK_FALSE(parseDescriptor("qplus").param.has_value());
  CHECK_THROWS_AS(makeInstance("fp:4"), DescriptorError);
  CHECK_THROWS_AS(makeInstance("fp"), DescriptorError);
  CHECK_THROWS_AS(makeInstance("no-such-instance"), DescriptorError);
  CHECK_THROWS_AS(makeInstance("zn-coordinatewise:0"), DescriptorError);
}

TEST_CASE("every registered instance passes the axiom suite") {
  for (const auto& name : registeredInstanceNames()) {
    CAPTURE(name);
    auto F = makeInstance(name);
    Report r = F->carrier ? checkSemifieldAxiomsExhaustive(*F)
                          : checkSemifieldAxioms(*F, F->sample, 500, 123);
    CHECK(r.passed);
  }
}

TEST_CASE("declared characteristic matches the detected one") {
  for (const auto& name : registeredInstanceNames()) {
    CAPTURE(name);
    auto F = makeInstance(name);
    CHECK(characteristic(*F, 64) == F->declaredChar);
  }
}

TEST_CASE("leading-term addition keeps only the top degree") {
  auto F = makeInstance("leading-term");
  Element a = leadingElem(*F, std::make_pair(Rat(2), Int(3)));   // 2X^3
  Element b = leadingElem(*F, std::make_pair(Rat(5), Int(3)));   // 5X^3
  Element c = leadingElem(*F, std::make_pair(Rat(5), Int(1)));   // 5X
  CHECK(F->eq(F->add(a, b), leadingElem(*F, std::make_pair(Rat(7), Int(3)))));
  CHECK(F->eq(F->add(a, c), a));
  CHECK(F->eq(F->add(c, a), a));
  CHECK(F->eq(F->mul(a, c), leadingElem(*F, std::make_pair(Rat(10), Int(4)))));
  // Addition stays associative and commutative despite the truncation.
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Element x = F->sample(rng), y = F->sample(rng), z = F->sample(rng);
    CHECK(F->eq(F->add(F->add(x, y), z), F->add(x, F->add(y, z))));
    CHECK(F->eq(F->add(x, y), F->add(y, x)));
  }
}

TEST_CASE("dual numbers: inverse and nilpotent part") {
  auto F = makeInstance("dual-positive");
  Element x = dualElem(*F, Rat(2), Rat(3));
  // (2 + 3e)^-1 = 1/2 - 3/4 e since e^2 = 0.
  CHECK(F->eq(F->inv(x), dualElem(*F, Rat(1, 2), Rat(-3, 4))));
  CHECK(F->eq(F->mul(x, F->inv(x)), F->one));
  // e-parts multiply to zero: (a+be)(c+de) = ac + (ad+bc)e.
  Element y = dualElem(*F, Rat(1), Rat(-1));
  CHECK(F->eq(F->mul(x, y), dualElem(*F, Rat(2), Rat(1))));
}

TEST_CASE("dual numbers are additively cancellative") {
  auto F = makeInstance("dual-positive");
  CHECK(cancellativityProbe(*F, F->sample, 2000, 9).passed);
}

TEST_CASE("qplus-power operates coordinatewise") {
  auto F = makeInstance("qplus-power:2");
  Element a = qplusPowerElem(*F, {Rat(1), Rat(2)});
  Element b = qplusPowerElem(*F, {Rat(3), Rat(4)});
  CHECK(F->eq(F->add(a, b), qplusPowerElem(*F, {Rat(4), Rat(6)})));
  CHECK(F->eq(F->mul(a, b), qplusPowerElem(*F, {Rat(3), Rat(8)})));
  CHECK(F->eq(F->inv(b), qplusPowerElem(*F, {Rat(1, 3), Rat(1, 4)})));
}

TEST_CASE("rational ratio oracle") {
  auto rf = makeInstance("pos-rational-functions");
  Element x = ratFnElem(*rf, RationalFunction::make({Rat(0), Rat(2)}, {Rat(1)}));  // 2X
  Element y = ratFnElem(*rf, RationalFunction::make({Rat(0), Rat(3)}, {Rat(1)}));  // 3X
  auto theta = ratioAsRational(*rf, x, y);
  REQUIRE(theta.has_value());
  CHECK(*theta == PositiveRational(3, 2));
  // X and X+1 differ by no rational scalar.
  Element xp1 = ratFnElem(*rf, RationalFunction::make({Rat(1), Rat(1)}, {Rat(1)}));
  CHECK_FALSE(ratioAsRational(*rf, ratFnElem(*rf, RationalFunction::monomialX()), xp1)
                  .has_value());

  auto q = makeInstance("qplus");
  auto t = ratioAsRational(*q, qplusElem(*q, Rat(4)), qplusElem(*q, Rat(6)));
  REQUIRE(t.has_value());
  CHECK(*t == PositiveRational(3, 2));

  CHECK_THROWS_AS(ratioAsRational(*q, q->zero, q->one), DomainError);
  auto trop = makeInstance("tropical-z");
  CHECK_FALSE(trop->ratio);  // capability absent entirely
}

TEST_CASE("ratio is consistent with the scalar action") {
  auto rf = makeInstance("pos-rational-functions");
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    Element x = rf->sample(rng);
    if (rf->isZeroElem(x)) continue;
    PositiveRational theta(Rat(intIn(rng, 1, 9), intIn(rng, 1, 9)));
    Element y = scalarAction(*rf, theta, x);
    auto back = ratioAsRational(*rf, x, y);
    REQUIRE(back.has_value());
    CHECK(*back == theta);
    auto recip = ratioAsRational(*rf, y, x);
    REQUIRE(recip.has_value());
    CHECK(*recip == theta.reciprocal());
  }
}

TEST_CASE("rational function equality agrees with cross multiplication") {
  auto rf = makeInstance("pos-rational-functions");
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    Element ea = rf->sample(rng), eb = rf->sample(rng);
    const RationalFunction& a = ratFnOf(ea);
    const RationalFunction& b = ratFnOf(eb);
    bool keyEq = a.key() == b.key();
    // num_a * den_b = num_b * den_a, over Q.
    RatPoly lhs, rhs;
    {
      RatPoly na, da, nb, db;
      for (const auto& c : a.num) na.emplace_back(c);
      for (const auto& c : a.den) da.emplace_back(c);
      for (const auto& c : b.num) nb.emplace_back(c);
      for (const auto& c : b.den) db.emplace_back(c);
      lhs = polyMul(na, db);
      rhs = polyMul(nb, da);
    }
    CHECK(keyEq == (polySub(lhs, rhs).empty()));
  }
}

TEST_CASE("show/parse round trips where parsing is provided") {
  auto q = makeInstance("qplus");
  REQUIRE(q->parse);
  auto e = q->parse("7/3");
  REQUIRE(e.has_value());
  CHECK(q->eq(*e, qplusElem(*q, Rat(7, 3))));
  CHECK_FALSE(q->parse("-1/2").has_value());

  auto lead = makeInstance("leading-term");
  REQUIRE(lead->parse);
  auto l = lead->parse("3/2*X^-4");
  REQUIRE(l.has_value());
  CHECK(lead->eq(*l, leadingElem(*lead, std::make_pair(Rat(3, 2), Int(-4)))));

  auto d = makeInstance("dual-positive");
  REQUIRE(d->parse);
  auto v = d->parse("2+3e");
  if (v) CHECK(d->eq(*v, dualElem(*d, Rat(2), Rat(3))));
}

TEST_CASE("tropical-z arithmetic") {
  auto F = makeInstance("tropical-z");
  Element a = tropicalElem(*F, Int(3));
  Element b = tropicalElem(*F, Int(-5));
  CHECK(F->eq(F->add(a, b), a));                         // max
  CHECK(F->eq(F->mul(a, b), tropicalElem(*F, Int(-2)))); // plus
  CHECK(F->eq(F->inv(a), tropicalElem(*F, Int(-3))));
  CHECK(F->eq(F->add(a, F->zero), a));                   // -inf is neutral
  CHECK(F->eq(F->add(a, a), a));                         // idempotent
}
