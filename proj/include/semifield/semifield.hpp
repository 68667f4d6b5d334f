#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semifield/element.hpp"
#include "semifield/numbers.hpp"

namespace semifield {

// Isomorphism type of the sub-semifield generated by 0 and 1.
// CharZeroUpTo records the probe bound that found no repetition, not a proof.
struct CharClass {
  enum class Tag { One, P, ZeroUpTo };
  Tag tag = Tag::ZeroUpTo;
  Int p = 0;       // verified prime when tag == P
  long bound = 0;  // probe bound when tag == ZeroUpTo

  static CharClass one() { return {Tag::One, 0, 0}; }
  static CharClass prime(Int prime) { return {Tag::P, std::move(prime), 0}; }
  static CharClass zeroUpTo(long bound) { return {Tag::ZeroUpTo, 0, bound}; }

  bool isOne() const { return tag == Tag::One; }
  bool isP() const { return tag == Tag::P; }
  bool isZero() const { return tag == Tag::ZeroUpTo; }

  bool operator==(const CharClass& o) const {
    if (tag != o.tag) return false;
    if (tag == Tag::P) return p == o.p;
    return true;  // bound is probe metadata, not part of the verdict identity
  }

  std::string str() const;
};

// Bundle of carrier operations plus declared capabilities. Declared claims
// (strict, cancellative, characteristic) are metadata to be verified by the
// checkers, never assumed by algorithms.
struct Semifield {
  std::string id;
  Element zero, one;

  std::function<Element(const Element&, const Element&)> add;
  std::function<Element(const Element&, const Element&)> mul;
  std::function<Element(const Element&)> inv;  // partial, undefined at zero
  std::function<bool(const Element&, const Element&)> eq;

  // Deterministic element generator; yields zero and one with positive
  // probability.
  std::function<Element(Rng&)> sample;

  // Finite carrier, when enumerable.
  std::optional<std::vector<Element>> carrier;

  // Optional capabilities (empty std::function when absent).
  // ratio(x, y) = theta with y = theta.x through the embedded Q+, if any.
  std::function<std::optional<PositiveRational>(const Element&, const Element&)> ratio;
  // sub(a, b) = the unique c in {0} u F with a = b + c, if representable.
  std::function<std::optional<Element>(const Element&, const Element&)> sub;

  std::function<std::string(const Element&)> show;
  std::function<std::optional<Element>(const std::string&)> parse;

  // Declared metadata.
  bool strictClaim = false;
  bool cancellativeClaim = false;
  CharClass declaredChar = CharClass::zeroUpTo(0);

  bool isZeroElem(const Element& e) const { return eq(e, zero); }
  bool isOneElem(const Element& e) const { return eq(e, one); }
};

}  // namespace semifield
