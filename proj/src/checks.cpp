#include "semifield/checks.hpp"

#include <map>
#include <vector>

#include "semifield/errors.hpp"

namespace semifield {

namespace {

// Runs the law suite on one triple; fills `bad` and returns false on the
// first violated law.
bool checkTriple(const Semifield& F, const Element& a, const Element& b, const Element& c,
                 Witness& bad) {
  auto fail = [&](const char* law, std::initializer_list<Element> elems) {
    bad.law = law;
    bad.keys.clear();
    for (const auto& e : elems) bad.keys.push_back(e.key);
    return false;
  };

  // Additive commutative monoid with neutral 0.
  if (!F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))) return fail("add-assoc", {a, b, c});
  if (!F.eq(F.add(a, b), F.add(b, a))) return fail("add-comm", {a, b});
  if (!F.eq(F.add(a, F.zero), a)) return fail("add-zero", {a});

  // Multiplicative group on nonzero elements.
  if (!F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))) return fail("mul-assoc", {a, b, c});
  if (!F.eq(F.mul(a, F.one), a) || !F.eq(F.mul(F.one, a), a)) return fail("mul-one", {a});
  if (!F.isZeroElem(a)) {
    Element ai = F.inv(a);
    if (F.isZeroElem(ai)) return fail("inv-zero", {a});
    if (!F.eq(F.mul(a, ai), F.one) || !F.eq(F.mul(ai, a), F.one)) return fail("inv", {a});
    if (!F.isZeroElem(b) && F.isZeroElem(F.mul(a, b))) return fail("mul-closure", {a, b});
  }

  // Distributivity, both sides, and absorbing zero.
  if (!F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))))
    return fail("left-distrib", {a, b, c});
  if (!F.eq(F.mul(F.add(a, b), c), F.add(F.mul(a, c), F.mul(b, c))))
    return fail("right-distrib", {a, b, c});
  if (!F.isZeroElem(F.mul(F.zero, a)) || !F.isZeroElem(F.mul(a, F.zero)))
    return fail("zero-absorbs", {a});

  // Consistency of a declared strictness claim: an additive inverse of a
  // nonzero element would force a field.
  if (F.strictClaim && !F.isZeroElem(a) && !F.isZeroElem(b) && F.isZeroElem(F.add(a, b)))
    return fail("strict-add-inverse", {a, b});

  return true;
}

Element drawChecked(const Semifield& F, const ElementGen& gen, Rng& rng) {
  Element e = gen(rng);
  if (e.instance != F.id)
    throw InputMismatchError("sampler produced element of instance '" + e.instance +
                             "' for instance '" + F.id + "'");
  return e;
}

}  // namespace

Report checkSemifieldAxioms(const Semifield& F, const ElementGen& gen, long cases,
                            std::uint64_t seed) {
  Rng rng(seed);
  Report report;
  for (long i = 0; i < cases; ++i) {
    Element a = drawChecked(F, gen, rng);
    Element b = drawChecked(F, gen, rng);
    Element c = drawChecked(F, gen, rng);
    ++report.casesRun;
    Witness bad;
    if (!checkTriple(F, a, b, c, bad)) {
      bad.caseIndex = i;
      report.passed = false;
      report.witness = bad;
      return report;
    }
  }
  return report;
}

Report checkSemifieldAxiomsExhaustive(const Semifield& F) {
  if (!F.carrier) throw CapabilityError("instance '" + F.id + "' has no finite carrier");
  const auto& all = *F.carrier;
  Report report;
  long idx = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        ++report.casesRun;
        Witness bad;
        if (!checkTriple(F, a, b, c, bad)) {
          bad.caseIndex = idx;
          report.passed = false;
          report.witness = bad;
          return report;
        }
        ++idx;
      }
  return report;
}

CharClass characteristic(const Semifield& F, long bound) {
  if (bound < 2) throw DomainError("characteristic: bound must be >= 2");
  std::map<std::string, long> seen;
  Element s = F.one;  // s_1
  seen[s.key] = 1;
  for (long n = 2; n <= bound; ++n) {
    s = F.add(s, F.one);
    if (n == 2 && F.eq(s, F.one)) return CharClass::one();
    if (F.isZeroElem(s)) {
      Int p(n);
      if (!isPrime(p))
        throw InconsistentInstanceError("characteristic: first zero sum at non-prime " +
                                        p.str());
      return CharClass::prime(p);
    }
    auto [it, fresh] = seen.emplace(s.key, n);
    if (!fresh)
      throw InconsistentInstanceError("characteristic: s_" + std::to_string(n) +
                                      " repeats s_" + std::to_string(it->second) +
                                      " without idempotence or zero");
  }
  return CharClass::zeroUpTo(bound);
}

Report torsionProbe(const Semifield& F, const Element& x, long maxOrder) {
  if (F.isZeroElem(x)) throw DomainError("torsionProbe: x must be nonzero");
  Report report;
  Element p = x;
  for (long k = 2; k <= maxOrder; ++k) {
    p = F.mul(p, x);
    ++report.casesRun;
    if (F.eq(p, F.one)) {
      report.passed = false;
      report.witness = Witness{k, "torsion", {x.key, std::to_string(k)}};
      return report;
    }
  }
  return report;
}

Element scalarAction(const Semifield& F, const PositiveRational& q, const Element& x) {
  if (F.isZeroElem(x)) throw DomainError("scalarAction: x must be nonzero");
  // s_k by binary double-and-add; s_{a+b} = s_a + s_b.
  std::function<Element(const Int&)> sumOfOnes = [&](const Int& k) -> Element {
    if (k == 1) return F.one;
    Element half = sumOfOnes(k / 2);
    Element s = F.add(half, half);
    if (k % 2 == 1) s = F.add(s, F.one);
    return s;
  };
  auto repeatedSum = [&](const Int& k) {
    Element s = sumOfOnes(k);
    if (F.isZeroElem(s))
      throw UnsupportedCharacteristicError("scalarAction: instance '" + F.id +
                                           "' has positive characteristic");
    return s;
  };
  Element num = repeatedSum(q.numerator());
  Element den = repeatedSum(q.denominator());
  return F.mul(F.mul(num, F.inv(den)), x);
}

namespace {

bool cancellationTriple(const Semifield& F, const Element& x, const Element& y,
                        const Element& z, long idx, Report& report) {
  ++report.casesRun;
  if (F.eq(F.add(x, z), F.add(y, z)) && !F.eq(x, y)) {
    report.passed = false;
    report.witness = Witness{idx, "cancellation", {x.key, y.key, z.key}};
    return false;
  }
  return true;
}

}  // namespace

Report cancellativityProbe(const Semifield& F, const ElementGen& gen, long cases,
                           std::uint64_t seed) {
  Rng rng(seed);
  Report report;
  for (long i = 0; i < cases; ++i) {
    Element x = drawChecked(F, gen, rng);
    Element y = drawChecked(F, gen, rng);
    Element z = drawChecked(F, gen, rng);
    if (!cancellationTriple(F, x, y, z, i, report)) return report;
  }
  return report;
}

Report cancellativityProbeExhaustive(const Semifield& F) {
  if (!F.carrier) throw CapabilityError("instance '" + F.id + "' has no finite carrier");
  Report report;
  long idx = 0;
  for (const auto& x : *F.carrier)
    for (const auto& y : *F.carrier)
      for (const auto& z : *F.carrier) {
        if (!cancellationTriple(F, x, y, z, idx, report)) return report;
        ++idx;
      }
  return report;
}

}  // namespace semifield
