#include "semifield/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "semifield/checks.hpp"
#include "semifield/errors.hpp"
#include "semifield/instances.hpp"

namespace semifield {

std::string FormalSum::key() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << "+";
    out << terms[i].key;
  }
  out << "]";
  return out.str();
}

FormalSum normalize(const Semifield& F, std::vector<Element> terms) {
  if (!F.ratio)
    throw CapabilityError("normalize: instance '" + F.id +
                          "' has no rational-ratio capability");
  std::vector<Element> out;
  for (auto& t : terms) {
    if (F.isZeroElem(t)) continue;
    bool merged = false;
    for (auto& u : out) {
      // Terms already in `out` sit in distinct rational-ratio classes, so at
      // most one merge applies and the result stays in u's class.
      if (auto theta = F.ratio(u, t)) {
        u = scalarAction(F, PositiveRational(theta->value() + 1), u);
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const Element& a, const Element& b) { return a.key < b.key; });
  return FormalSum{std::move(out)};
}

FormalSum lfAdd(const Semifield& F, const FormalSum& u, const FormalSum& v) {
  std::vector<Element> terms = u.terms;
  terms.insert(terms.end(), v.terms.begin(), v.terms.end());
  return normalize(F, std::move(terms));
}

FormalSum lfMul(const Semifield& F, const FormalSum& u, const FormalSum& v) {
  std::vector<Element> terms;
  for (const auto& x : u.terms)
    for (const auto& y : v.terms) terms.push_back(F.mul(x, y));
  return normalize(F, std::move(terms));
}

bool lfEq(const FormalSum& u, const FormalSum& v) { return u.key() == v.key(); }

SumFraction qfMake(const Semifield& F, FormalSum num, FormalSum den) {
  (void)F;
  if (den.isZero()) throw DomainError("qfMake: zero denominator");
  return SumFraction{std::move(num), std::move(den)};
}

bool qfEq(const Semifield& F, const SumFraction& a, const SumFraction& b) {
  FormalSum lhs = lfMul(F, a.num, b.den);
  FormalSum rhs = lfMul(F, b.num, a.den);
  if (lfEq(lhs, rhs)) return true;
  // Saturated form: equality must be transitive even if multiplicative
  // cancellation of general formal sums fails.
  std::vector<FormalSum> saturation = {a.den, b.den, lfAdd(F, a.den, b.den)};
  if (!a.num.isZero()) saturation.push_back(a.num);
  if (!b.num.isZero()) saturation.push_back(b.num);
  for (const auto& t : saturation)
    if (lfEq(lfMul(F, lhs, t), lfMul(F, rhs, t))) return true;
  return false;
}

SumFraction qfAdd(const Semifield& F, const SumFraction& a, const SumFraction& b) {
  return qfMake(F, lfAdd(F, lfMul(F, a.num, b.den), lfMul(F, b.num, a.den)),
                lfMul(F, a.den, b.den));
}

SumFraction qfMul(const Semifield& F, const SumFraction& a, const SumFraction& b) {
  return qfMake(F, lfMul(F, a.num, b.num), lfMul(F, a.den, b.den));
}

SumFraction qfInv(const Semifield& F, const SumFraction& a) {
  if (a.num.isZero()) throw DomainError("qfInv: zero has no inverse");
  return qfMake(F, a.den, a.num);
}

Element phi(const Semifield& F, const SumFraction& q) {
  auto foldSum = [&F](const FormalSum& s) {
    Element acc = F.zero;
    for (const auto& t : s.terms) acc = F.add(acc, t);
    return acc;
  };
  Element num = foldSum(q.num);
  Element den = foldSum(q.den);
  return F.mul(num, F.inv(den));
}

std::shared_ptr<Semifield> quotientSemifield(std::shared_ptr<const Semifield> F) {
  if (!F->ratio)
    throw CapabilityError("quotientSemifield: instance '" + F->id +
                          "' has no rational-ratio capability");
  if (!characteristic(*F, 8).isZero())
    throw UnsupportedCharacteristicError("quotientSemifield: instance '" + F->id +
                                         "' is not of characteristic zero");
  auto S = std::make_shared<Semifield>();
  const std::string id = "q(" + F->id + ")";
  auto elem = [id](SumFraction q) {
    std::string key = q.num.key() + "/" + q.den.key();
    return makeElement(id, std::move(q), std::move(key));
  };
  FormalSum lone{{F->one}};
  S->id = id;
  S->zero = elem(SumFraction{FormalSum{}, lone});
  S->one = elem(SumFraction{lone, lone});
  S->add = [F, elem](const Element& a, const Element& b) {
    return elem(qfAdd(*F, payloadAs<SumFraction>(a), payloadAs<SumFraction>(b)));
  };
  S->mul = [F, elem](const Element& a, const Element& b) {
    return elem(qfMul(*F, payloadAs<SumFraction>(a), payloadAs<SumFraction>(b)));
  };
  S->inv = [F, elem](const Element& a) {
    return elem(qfInv(*F, payloadAs<SumFraction>(a)));
  };
  S->eq = [F](const Element& a, const Element& b) {
    return qfEq(*F, payloadAs<SumFraction>(a), payloadAs<SumFraction>(b));
  };
  S->sample = [F, elem, lone](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(SumFraction{FormalSum{}, lone});
    if (pick == 1) return elem(SumFraction{lone, lone});
    auto drawSum = [&](std::size_t maxTerms, bool allowEmpty) {
      std::vector<Element> terms;
      std::size_t n = below(rng, maxTerms) + (allowEmpty ? 0 : 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (;;) {
          Element e = F->sample(rng);
          if (!F->isZeroElem(e)) {
            terms.push_back(std::move(e));
            break;
          }
        }
      }
      return normalize(*F, std::move(terms));
    };
    FormalSum num = drawSum(3, true);
    FormalSum den = drawSum(2, false);
    return elem(SumFraction{std::move(num), std::move(den)});
  };
  S->show = [F](const Element& e) {
    const auto& q = payloadAs<SumFraction>(e);
    auto sumStr = [&](const FormalSum& s) {
      std::string out = "[";
      for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (i) out += " + ";
        out += F->show(s.terms[i]);
      }
      return out + "]";
    };
    return sumStr(q.num) + " / " + sumStr(q.den);
  };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

const SumFraction& fractionOf(const Element& e) { return payloadAs<SumFraction>(e); }

Element fractionElem(const Semifield& QF, SumFraction q) {
  std::string key = q.num.key() + "/" + q.den.key();
  return makeElement(QF.id, std::move(q), std::move(key));
}

Element leadingTermHom(const Semifield& ratFns, const Semifield& leadingTerms,
                       const Element& f) {
  if (f.instance != ratFns.id)
    throw InputMismatchError("leadingTermHom: element not from '" + ratFns.id + "'");
  const RationalFunction& v = ratFnOf(f);
  if (v.isZero()) return leadingTerms.zero;
  return leadingElem(leadingTerms, {{v.leadingCoeff(), Int(v.degreeDiff())}});
}

}  // namespace semifield
