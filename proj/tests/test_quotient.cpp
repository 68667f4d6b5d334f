#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semifield/checks.hpp"
#include "semifield/errors.hpp"
#include "semifield/instances.hpp"
#include "semifield/quotient.hpp"

using namespace semifield;

namespace {

Element rx(const Semifield& F, RatPoly num, RatPoly den = {Rat(1)}) {
  return ratFnElem(F, RationalFunction::make(num, den));
}

}  // namespace

TEST_CASE("normalization merges exactly the rational-ratio classes") {
  auto F = makeInstance("qplus");
  // [2] + [3] = [5]: everything in Q+ is one ratio class.
  FormalSum s = normalize(*F, {qplusElem(*F, Rat(2)), qplusElem(*F, Rat(3))});
  REQUIRE(s.terms.size() == 1);
  CHECK(F->eq(s.terms[0], qplusElem(*F, Rat(5))));

  auto R = makeInstance("pos-rational-functions");
  // [X] + [1] stays a two-term sum; no rational theta links X and 1.
  FormalSum t = normalize(*R, {rx(*R, {Rat(0), Rat(1)}), rx(*R, {Rat(1)})});
  CHECK(t.terms.size() == 2);
  // [X] + [2X] + [1] = [3X] + [1].
  FormalSum u = normalize(
      *R, {rx(*R, {Rat(0), Rat(1)}), rx(*R, {Rat(0), Rat(2)}), rx(*R, {Rat(1)})});
  REQUIRE(u.terms.size() == 2);
  std::vector<std::string> keys = {u.terms[0].key, u.terms[1].key};
  std::sort(keys.begin(), keys.end());
  std::vector<std::string> want = {rx(*R, {Rat(0), Rat(3)}).key, rx(*R, {Rat(1)}).key};
  std::sort(want.begin(), want.end());
  CHECK(keys == want);

  // Zeros are dropped; the empty sum is the zero of L_F.
  CHECK(normalize(*R, {R->zero, R->zero}).isZero());
}

TEST_CASE("normalization is confluent under input reordering") {
  auto R = makeInstance("pos-rational-functions");
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> terms;
    long n = intIn(rng, 0, 5);
    for (long i = 0; i < n; ++i) terms.push_back(R->sample(rng));
    FormalSum base = normalize(*R, terms);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      for (std::size_t i = terms.size(); i > 1; --i)
        std::swap(terms[i - 1], terms[below(rng, i)]);
      CHECK(lfEq(normalize(*R, terms), base));
    }
  }
}

TEST_CASE("formal sum arithmetic") {
  auto R = makeInstance("pos-rational-functions");
  FormalSum x = normalize(*R, {rx(*R, {Rat(0), Rat(1)})});
  FormalSum one = normalize(*R, {rx(*R, {Rat(1)})});
  FormalSum s = lfAdd(*R, x, one);  // [X] + [1]
  CHECK(s.terms.size() == 2);
  // ([X] + [1]) * ([X] + [1]) = [X^2] + [2X] + [1]
  FormalSum sq = lfMul(*R, s, s);
  REQUIRE(sq.terms.size() == 3);
  FormalSum want = normalize(*R, {rx(*R, {Rat(0), Rat(0), Rat(1)}), rx(*R, {Rat(0), Rat(2)}),
                                  rx(*R, {Rat(1)})});
  CHECK(lfEq(sq, want));
  // Multiplication by the zero sum annihilates.
  CHECK(lfMul(*R, s, FormalSum{}).isZero());
}

TEST_CASE("L_F is additively cancellative even when F is not") {
  auto L = makeInstance("leading-term");
  // In F: X^2 + X = X^2 + 1, yet X != 1. In L_F the sums stay distinct.
  Element x2 = leadingElem(*L, std::make_pair(Rat(1), Int(2)));
  Element x = leadingElem(*L, std::make_pair(Rat(1), Int(1)));
  Element one = leadingElem(*L, std::make_pair(Rat(1), Int(0)));
  CHECK(L->eq(L->add(x2, x), L->add(x2, one)));  // collapse in F
  FormalSum a = normalize(*L, {x2, x});
  FormalSum b = normalize(*L, {x2, one});
  CHECK_FALSE(lfEq(a, b));  // no collapse in L_F
}

TEST_CASE("fractions of formal sums") {
  auto R = makeInstance("pos-rational-functions");
  FormalSum x = normalize(*R, {rx(*R, {Rat(0), Rat(1)})});
  FormalSum one = normalize(*R, {rx(*R, {Rat(1)})});
  FormalSum twoX = normalize(*R, {rx(*R, {Rat(0), Rat(2)})});
  FormalSum two = normalize(*R, {rx(*R, {Rat(2)})});

  SumFraction q1 = qfMake(*R, x, one);
  SumFraction q2 = qfMake(*R, twoX, two);
  CHECK(qfEq(*R, q1, q2));  // [2X]/[2] = [X]/[1]

  SumFraction sum = qfAdd(*R, q1, q2);          // 2X/1
  CHECK(qfEq(*R, sum, qfMake(*R, twoX, one)));
  SumFraction prod = qfMul(*R, q1, qfInv(*R, q1));
  CHECK(qfEq(*R, prod, qfMake(*R, one, one)));

  CHECK_THROWS_AS(qfMake(*R, x, FormalSum{}), DomainError);
  CHECK_THROWS_AS(qfInv(*R, qfMake(*R, FormalSum{}, one)), DomainError);
}

TEST_CASE("phi projects fractions back to F") {
  auto R = makeInstance("pos-rational-functions");
  FormalSum x = normalize(*R, {rx(*R, {Rat(0), Rat(1)})});
  FormalSum one = normalize(*R, {rx(*R, {Rat(1)})});
  // phi(([X] + [1]) / [1]) = X + 1 in F
  SumFraction q = qfMake(*R, lfAdd(*R, x, one), one);
  CHECK(R->eq(phi(*R, q), rx(*R, {Rat(1), Rat(1)})));
  // phi is multiplicative and additive on samples
  auto QF = quotientSemifield(R);
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    Element a = QF->sample(rng), b = QF->sample(rng);
    CHECK(R->eq(phi(*R, fractionOf(QF->add(a, b))),
                R->add(phi(*R, fractionOf(a)), phi(*R, fractionOf(b)))));
    CHECK(R->eq(phi(*R, fractionOf(QF->mul(a, b))),
                R->mul(phi(*R, fractionOf(a)), phi(*R, fractionOf(b)))));
  }
}

TEST_CASE("phi collapses distinct classes when F is not cancellative") {
  auto L = makeInstance("leading-term");
  Element x2 = leadingElem(*L, std::make_pair(Rat(1), Int(2)));
  Element x = leadingElem(*L, std::make_pair(Rat(1), Int(1)));
  Element one = leadingElem(*L, std::make_pair(Rat(1), Int(0)));
  FormalSum oneS = normalize(*L, {one});
  SumFraction u = qfMake(*L, normalize(*L, {x2, x}), oneS);
  SumFraction v = qfMake(*L, normalize(*L, {x2, one}), oneS);
  CHECK_FALSE(qfEq(*L, u, v));
  CHECK(L->eq(phi(*L, u), phi(*L, v)));
}

TEST_CASE("quotient semifields pass the axiom and cancellativity suites") {
  for (const auto& name : {"qplus", "leading-term", "pos-rational-functions"}) {
    CAPTURE(name);
    auto F = makeInstance(name);
    auto QF = quotientSemifield(F);
    CHECK(checkSemifieldAxioms(*QF, QF->sample, 150, 53).passed);
    CHECK(cancellativityProbe(*QF, QF->sample, 150, 53).passed);
  }
}

TEST_CASE("quotient construction refuses instances without the ratio oracle") {
  CHECK_THROWS_AS(quotientSemifield(makeInstance("tropical-z")), CapabilityError);
  CHECK_THROWS_AS(quotientSemifield(makeInstance("fp:5")), CapabilityError);
}

TEST_CASE("leading-term map on rational functions") {
  auto R = makeInstance("pos-rational-functions");
  auto L = makeInstance("leading-term");
  // (X^2 + 1) / (2X) -> (1/2) X
  Element f = ratFnElem(*R, RationalFunction::make({Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(2)}));
  CHECK(L->eq(leadingTermHom(*R, *L, f), leadingElem(*L, std::make_pair(Rat(1, 2), Int(1)))));
  CHECK(L->eq(leadingTermHom(*R, *L, R->zero), L->zero));
  // multiplicative homomorphism; additive too since deg respects max on sums
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    Element a = R->sample(rng), b = R->sample(rng);
    CHECK(L->eq(leadingTermHom(*R, *L, R->mul(a, b)),
                L->mul(leadingTermHom(*R, *L, a), leadingTermHom(*R, *L, b))));
    CHECK(L->eq(leadingTermHom(*R, *L, R->add(a, b)),
                L->add(leadingTermHom(*R, *L, a), leadingTermHom(*R, *L, b))));
  }
}
