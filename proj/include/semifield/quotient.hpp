#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semifield/semifield.hpp"

namespace semifield {

// Element of L_F: finite formal sum of nonzero elements of F in normal form.
// No two terms have a rational ratio and terms are sorted by canonical key;
// the empty list is the zero of L_F.
struct FormalSum {
  std::vector<Element> terms;

  bool isZero() const { return terms.empty(); }
  std::string key() const;
};

// Collapses the input under [x] + [theta.x] = [(theta+1).x] for theta in Q+
// to the unique normal form. Zero elements of F are dropped. Requires the
// rational-ratio capability and characteristic zero.
FormalSum normalize(const Semifield& F, std::vector<Element> terms);

FormalSum lfAdd(const Semifield& F, const FormalSum& u, const FormalSum& v);
FormalSum lfMul(const Semifield& F, const FormalSum& u, const FormalSum& v);
bool lfEq(const FormalSum& u, const FormalSum& v);

// Element of Q(F): fraction of formal sums, denominator nonzero.
struct SumFraction {
  FormalSum num, den;
};

SumFraction qfMake(const Semifield& F, FormalSum num, FormalSum den);
// Direct cross-multiplication first, then a small deterministic saturation
// set of auxiliary multipliers t with n1.d2.t = n2.d1.t.
bool qfEq(const Semifield& F, const SumFraction& a, const SumFraction& b);
SumFraction qfAdd(const Semifield& F, const SumFraction& a, const SumFraction& b);
SumFraction qfMul(const Semifield& F, const SumFraction& a, const SumFraction& b);
SumFraction qfInv(const Semifield& F, const SumFraction& a);

// Projection Q(F) -> F: sum the numerator terms in F and divide by the sum
// of the denominator terms. A surjective semifield homomorphism.
Element phi(const Semifield& F, const SumFraction& q);

// Q(F) packaged as a semifield instance; elements carry SumFraction payloads.
std::shared_ptr<Semifield> quotientSemifield(std::shared_ptr<const Semifield> F);

const SumFraction& fractionOf(const Element& e);
Element fractionElem(const Semifield& QF, SumFraction q);

// Asymptotic class of a positive rational function: p/q maps to
// (lc(p)/lc(q)).X^(deg p - deg q); zero maps to zero.
Element leadingTermHom(const Semifield& ratFns, const Semifield& leadingTerms,
                       const Element& f);

}  // namespace semifield
