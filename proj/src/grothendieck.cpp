#include "semifield/grothendieck.hpp"

#include "semifield/errors.hpp"

namespace semifield {

DiffPair OrderedRing::add(const DiffPair& x, const DiffPair& y) const {
  return {base->add(x.plus, y.plus), base->add(x.minus, y.minus)};
}

DiffPair OrderedRing::neg(const DiffPair& x) const { return {x.minus, x.plus}; }

DiffPair OrderedRing::mul(const DiffPair& x, const DiffPair& y) const {
  return {base->add(base->mul(x.plus, y.plus), base->mul(x.minus, y.minus)),
          base->add(base->mul(x.plus, y.minus), base->mul(x.minus, y.plus))};
}

bool OrderedRing::eq(const DiffPair& x, const DiffPair& y) const {
  return base->eq(base->add(x.plus, y.minus), base->add(y.plus, x.minus));
}

std::optional<Element> OrderedRing::recognizePositive(const DiffPair& x) const {
  if (base->isZeroElem(x.minus)) return x.plus;
  if (base->eq(x.plus, x.minus)) return base->zero;
  if (!base->sub)
    throw CapabilityError("instance '" + base->id + "' has no subtraction witness");
  return base->sub(x.plus, x.minus);
}

ConeVerdict OrderedRing::isPositive(const DiffPair& x) const {
  if (base->isZeroElem(x.minus) || base->eq(x.plus, x.minus)) return ConeVerdict::Positive;
  if (!base->sub) return ConeVerdict::Unknown;
  if (base->sub(x.plus, x.minus)) return ConeVerdict::Positive;
  // A partial witness (qplus-power with a mixed-sign difference) still
  // decides the negative: the difference is not representable in {0} u F.
  return ConeVerdict::NotPositive;
}

std::string OrderedRing::key(const DiffPair& x) const {
  if (base->sub) {
    if (auto f = base->sub(x.plus, x.minus))
      return base->isZeroElem(*f) ? "0" : "+" + f->key;
    if (auto g = base->sub(x.minus, x.plus)) return "-" + g->key;
  }
  return "(" + x.plus.key + ")-(" + x.minus.key + ")";
}

std::string OrderedRing::show(const DiffPair& x) const {
  return "(" + base->show(x.plus) + ") - (" + base->show(x.minus) + ")";
}

DiffPair OrderedRing::sample(Rng& rng) const { return {base->sample(rng), base->sample(rng)}; }

OrderedRing grothendieckRing(std::shared_ptr<const Semifield> F, long probeCases,
                             std::uint64_t probeSeed) {
  CharClass c = characteristic(*F, 8);
  if (!c.isZero())
    throw UnsupportedCharacteristicError("grothendieckRing: instance '" + F->id +
                                         "' is not of characteristic zero");
  Report probe = cancellativityProbe(*F, F->sample, probeCases, probeSeed);
  if (!probe.passed)
    throw DomainError("grothendieckRing: instance '" + F->id +
                      "' is not cancellative, witness " + probe.str());
  OrderedRing A;
  A.id = F->id + "-ring";
  A.base = F;
  A.zero = {F->zero, F->zero};
  A.one = {F->one, F->zero};
  return A;
}

DiffPair embedIntoRing(const Semifield& F, const Element& x) { return {x, F.zero}; }

Report checkOrderedRingAxioms(const OrderedRing& A, long cases, std::uint64_t seed) {
  Rng rng(seed);
  const Semifield& F = *A.base;
  Report report;
  for (long i = 0; i < cases; ++i) {
    DiffPair x = A.sample(rng), y = A.sample(rng), z = A.sample(rng);
    ++report.casesRun;
    Witness bad;
    auto fail = [&](const char* law, std::initializer_list<DiffPair> elems) {
      bad.caseIndex = i;
      bad.law = law;
      for (const auto& e : elems) bad.keys.push_back(A.key(e));
      report.passed = false;
      report.witness = bad;
      return report;
    };

    // Ring laws on classes.
    if (!A.eq(A.add(A.add(x, y), z), A.add(x, A.add(y, z)))) return fail("add-assoc", {x, y, z});
    if (!A.eq(A.add(x, y), A.add(y, x))) return fail("add-comm", {x, y});
    if (!A.eq(A.add(x, A.zero), x)) return fail("add-zero", {x});
    if (!A.eq(A.add(x, A.neg(x)), A.zero)) return fail("add-neg", {x});
    if (!A.eq(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z)))) return fail("mul-assoc", {x, y, z});
    if (!A.eq(A.mul(x, y), A.mul(y, x))) return fail("mul-comm", {x, y});
    if (!A.eq(A.mul(x, A.one), x)) return fail("mul-one", {x});
    if (!A.eq(A.mul(x, A.add(y, z)), A.add(A.mul(x, y), A.mul(x, z))))
      return fail("distrib", {x, y, z});

    // Cone closure on embedded positives.
    Element f = F.sample(rng), g = F.sample(rng);
    DiffPair p = embedIntoRing(F, f), q = embedIntoRing(F, g);
    if (A.isPositive(A.add(p, q)) != ConeVerdict::Positive) return fail("cone-add", {p, q});
    if (A.isPositive(A.mul(p, q)) != ConeVerdict::Positive) return fail("cone-mul", {p, q});

    // P n -P = {0}.
    if (A.isPositive(x) == ConeVerdict::Positive &&
        A.isPositive(A.neg(x)) == ConeVerdict::Positive && !A.eq(x, A.zero))
      return fail("cone-antisym", {x});

    // Sampled nonzero positives invert.
    if (!F.isZeroElem(f)) {
      DiffPair pinv = embedIntoRing(F, F.inv(f));
      if (!A.eq(A.mul(p, pinv), A.one)) return fail("positive-invert", {p});
    }

    // Every element is a difference of two nonzero positives.
    DiffPair u = embedIntoRing(F, F.add(x.plus, F.one));
    DiffPair v = embedIntoRing(F, F.add(x.minus, F.one));
    if (F.isZeroElem(u.plus) || F.isZeroElem(v.plus) || !A.eq(A.add(u, A.neg(v)), x))
      return fail("decompose", {x});
  }
  return report;
}

std::shared_ptr<Semifield> positiveConeSemifield(const OrderedRing& A) {
  auto S = std::make_shared<Semifield>();
  auto ring = std::make_shared<OrderedRing>(A);
  const std::string id = A.id + "-cone";
  auto elem = [ring, id](DiffPair x) {
    std::string key = ring->key(x);
    return makeElement(id, std::move(x), std::move(key));
  };
  S->id = id;
  S->zero = elem(A.zero);
  S->one = elem(A.one);
  S->add = [ring, elem](const Element& a, const Element& b) {
    return elem(ring->add(payloadAs<DiffPair>(a), payloadAs<DiffPair>(b)));
  };
  S->mul = [ring, elem](const Element& a, const Element& b) {
    return elem(ring->mul(payloadAs<DiffPair>(a), payloadAs<DiffPair>(b)));
  };
  S->inv = [ring, elem](const Element& a) {
    auto f = ring->recognizePositive(payloadAs<DiffPair>(a));
    if (!f || ring->base->isZeroElem(*f))
      throw DomainError("inv: element is zero or not a recognized positive");
    return elem(embedIntoRing(*ring->base, ring->base->inv(*f)));
  };
  S->eq = [ring](const Element& a, const Element& b) {
    return ring->eq(payloadAs<DiffPair>(a), payloadAs<DiffPair>(b));
  };
  S->sample = [ring, elem](Rng& rng) {
    return elem(embedIntoRing(*ring->base, ring->base->sample(rng)));
  };
  S->show = [ring](const Element& e) { return ring->show(payloadAs<DiffPair>(e)); };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

const DiffPair& diffPairOf(const Element& coneElem) { return payloadAs<DiffPair>(coneElem); }

}  // namespace semifield
