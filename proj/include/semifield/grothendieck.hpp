#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "semifield/checks.hpp"
#include "semifield/report.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

// Formal difference plus - minus of two elements of the source semifield
// (zero allowed in either slot). (a,b) ~ (c,d) iff a+d = c+b; no auxiliary
// translate is needed because the source is cancellative.
struct DiffPair {
  Element plus, minus;
};

enum class ConeVerdict { Positive, NotPositive, Unknown };

// Partially ordered ring completion A_F of a cancellative strict char-zero
// semifield F. Elements are DiffPair equivalence classes.
struct OrderedRing {
  std::string id;
  std::shared_ptr<const Semifield> base;
  DiffPair zero, one;

  DiffPair add(const DiffPair& x, const DiffPair& y) const;
  DiffPair neg(const DiffPair& x) const;
  DiffPair mul(const DiffPair& x, const DiffPair& y) const;
  bool eq(const DiffPair& x, const DiffPair& y) const;

  // f in F with x ~ (f, 0), when the base exposes a subtraction witness.
  // nullopt when the base can decide and the answer is "not positive".
  // Throws CapabilityError when the base cannot decide.
  std::optional<Element> recognizePositive(const DiffPair& x) const;
  ConeVerdict isPositive(const DiffPair& x) const;

  // Canonical when the subtraction witness exists (reduces to (f,0), (0,f)
  // or zero), raw `(plus)-(minus)` otherwise.
  std::string key(const DiffPair& x) const;
  std::string show(const DiffPair& x) const;

  DiffPair sample(Rng& rng) const;
};

// Builds A_F after re-verifying the cancellativity claim by sampling;
// refuses with the witness if one turns up.
OrderedRing grothendieckRing(std::shared_ptr<const Semifield> F, long probeCases = 200,
                             std::uint64_t probeSeed = 1);

DiffPair embedIntoRing(const Semifield& F, const Element& x);  // x -> (x, 0)

// Ring laws on classes, cone closure under + and *, P n -P = {0}, inverses
// of sampled nonzero positives, and decomposition of sampled elements as a
// difference of two nonzero positives.
Report checkOrderedRingAxioms(const OrderedRing& A, long cases, std::uint64_t seed);

// {0} u {positive classes} with the ring operations restricted; the inverse
// of a positive class comes from the recognized witness in F.
std::shared_ptr<Semifield> positiveConeSemifield(const OrderedRing& A);

const DiffPair& diffPairOf(const Element& coneElem);

}  // namespace semifield
