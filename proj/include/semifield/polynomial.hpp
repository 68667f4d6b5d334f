#pragma once

#include <string>
#include <vector>

#include "semifield/numbers.hpp"

namespace semifield {

// Dense polynomial over Q, coefficient list low degree first, no trailing
// zeros; empty list is the zero polynomial.
using RatPoly = std::vector<Rat>;
// Same layout with integer coefficients.
using IntPoly = std::vector<Int>;

RatPoly polyTrim(RatPoly p);
RatPoly polyAdd(const RatPoly& a, const RatPoly& b);
RatPoly polySub(const RatPoly& a, const RatPoly& b);
RatPoly polyMul(const RatPoly& a, const RatPoly& b);
RatPoly polyScale(const RatPoly& a, const Rat& s);
// Euclidean remainder; b nonzero.
RatPoly polyMod(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly polyGcd(RatPoly a, RatPoly b);
// Exact quotient; asserts divisibility.
RatPoly polyDivExact(const RatPoly& a, const RatPoly& b);

inline long polyDeg(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

// Rational function in canonical form: integer-coefficient numerator and
// denominator with no common polynomial factor, coprime contents, and
// positive leading denominator coefficient. The representation is unique, so
// the key doubles as the equality test.
struct RationalFunction {
  IntPoly num;  // empty <=> the zero function
  IntPoly den;  // never empty

  static RationalFunction make(const RatPoly& num, const RatPoly& den);
  static RationalFunction zero() { return {{}, {Int(1)}}; }
  static RationalFunction constant(const Rat& c);
  static RationalFunction monomialX() { return {{Int(0), Int(1)}, {Int(1)}}; }

  RationalFunction addWith(const RationalFunction& o) const;
  RationalFunction mulWith(const RationalFunction& o) const;
  RationalFunction invElem() const;  // requires nonzero

  bool isZero() const { return num.empty(); }
  // Leading coefficient ratio lc(num)/lc(den); requires nonzero.
  Rat leadingCoeff() const;
  long degreeDiff() const;  // deg num - deg den; requires nonzero
  // Constant functions are exactly those with num and den of degree 0.
  bool isConstant() const { return num.size() <= 1 && den.size() == 1; }
  Rat asConstant() const { return Rat(num.empty() ? Int(0) : num[0], den[0]); }

  std::string key() const;
  std::string str() const;
};

}  // namespace semifield
