#include "semifield/polynomial.hpp"

#include <cassert>
#include <sstream>

namespace semifield {

RatPoly polyTrim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RatPoly polyAdd(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return polyTrim(std::move(r));
}

RatPoly polySub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return polyTrim(std::move(r));
}

RatPoly polyMul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return polyTrim(std::move(r));
}

RatPoly polyScale(const RatPoly& a, const Rat& s) {
  if (s == 0) return {};
  RatPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

RatPoly polyMod(const RatPoly& a, const RatPoly& b) {
  assert(!b.empty());
  RatPoly r = a;
  while (r.size() >= b.size()) {
    Rat q = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
    r = polyTrim(std::move(r));
    if (r.empty()) break;
  }
  return r;
}

namespace {

// Primitive integer image of a rational polynomial.
IntPoly toPrimitiveInt(const RatPoly& p) {
  Int lcmDen = 1;
  for (const auto& c : p) lcmDen = lcm(lcmDen, denominator(c));
  IntPoly r;
  for (const auto& c : p) r.push_back(numerator(c) * (lcmDen / denominator(c)));
  Int content = 0;
  for (const auto& c : r) content = gcd(content, c);
  if (content > 1)
    for (auto& c : r) c /= content;
  return r;
}

IntPoly primitivePart(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  Int content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (content > 1)
    for (auto& c : p) c /= content;
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b, all integer.
IntPoly pseudoRemainder(IntPoly a, const IntPoly& b) {
  while (a.size() >= b.size()) {
    Int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

// Primitive Euclid over the integer images; avoids the coefficient blowup of
// the naive rational remainder sequence.
RatPoly polyGcd(RatPoly a, RatPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && a.back() != 1) a = polyScale(a, Rat(1) / a.back());
    return a;
  }
  IntPoly x = toPrimitiveInt(a), y = toPrimitiveInt(b);
  while (!y.empty()) {
    IntPoly r = primitivePart(pseudoRemainder(std::move(x), y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.back() < 0)
    for (auto& c : x) c = -c;
  RatPoly g;
  for (const auto& c : x) g.emplace_back(Rat(c, x.back()));
  return g;
}

RatPoly polyDivExact(const RatPoly& a, const RatPoly& b) {
  assert(!b.empty());
  if (a.empty()) return {};
  RatPoly r = a;
  RatPoly q(a.size() - b.size() + 1, Rat(0));
  while (r.size() >= b.size()) {
    Rat c = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = polyTrim(std::move(r));
    if (r.empty()) break;
  }
  assert(r.empty());
  return polyTrim(std::move(q));
}

namespace {

std::string intPolyKey(const IntPoly& p) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ",";
    out << p[i].str();
  }
  out << "]";
  return out.str();
}

}  // namespace

namespace {

// Scaling-only canonicalization; callers guarantee num and den have no
// common polynomial factor.
RationalFunction canonicalScaled(RatPoly num, RatPoly den);

}  // namespace

RationalFunction RationalFunction::make(const RatPoly& numIn, const RatPoly& denIn) {
  RatPoly num = polyTrim(numIn);
  RatPoly den = polyTrim(denIn);
  assert(!den.empty());
  if (num.empty()) return zero();

  RatPoly g = polyGcd(num, den);
  if (polyDeg(g) > 0) {
    num = polyDivExact(num, g);
    den = polyDivExact(den, g);
  }
  return canonicalScaled(std::move(num), std::move(den));
}

namespace {

RationalFunction canonicalScaled(RatPoly num, RatPoly den) {
  // Scale num and den by the same rational so both become integer polynomials
  // with coprime contents and positive leading denominator coefficient; the
  // common scalar is pinned uniquely by those constraints.
  Int lcmDen = 1;
  for (const auto& c : num) lcmDen = lcm(lcmDen, denominator(c));
  for (const auto& c : den) lcmDen = lcm(lcmDen, denominator(c));
  IntPoly n, d;
  for (const auto& c : num) n.push_back(numerator(c) * (lcmDen / denominator(c)));
  for (const auto& c : den) d.push_back(numerator(c) * (lcmDen / denominator(c)));

  Int content = 0;
  for (const auto& c : n) content = gcd(content, c);
  for (const auto& c : d) content = gcd(content, c);
  if (content > 1)
    for (auto* poly : {&n, &d})
      for (auto& c : *poly) c /= content;

  if (d.back() < 0)
    for (auto* poly : {&n, &d})
      for (auto& c : *poly) c = -c;

  return {std::move(n), std::move(d)};
}

}  // namespace

RationalFunction RationalFunction::constant(const Rat& c) {
  if (c == 0) return zero();
  return make({c}, {Rat(1)});
}

namespace {

RatPoly toRatPoly(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

}  // namespace

RationalFunction RationalFunction::addWith(const RationalFunction& o) const {
  RatPoly n1 = toRatPoly(num), d1 = toRatPoly(den);
  RatPoly n2 = toRatPoly(o.num), d2 = toRatPoly(o.den);
  return make(polyAdd(polyMul(n1, d2), polyMul(n2, d1)), polyMul(d1, d2));
}

RationalFunction RationalFunction::mulWith(const RationalFunction& o) const {
  if (isZero() || o.isZero()) return zero();
  // Both operands are reduced, so only the cross gcds can cancel; removing
  // them leaves a coprime pair and avoids a full gcd on the (possibly huge)
  // product polynomials.
  RatPoly n1 = toRatPoly(num), d1 = toRatPoly(den);
  RatPoly n2 = toRatPoly(o.num), d2 = toRatPoly(o.den);
  RatPoly g1 = polyGcd(n1, d2);
  if (polyDeg(g1) > 0) {
    n1 = polyDivExact(n1, g1);
    d2 = polyDivExact(d2, g1);
  }
  RatPoly g2 = polyGcd(n2, d1);
  if (polyDeg(g2) > 0) {
    n2 = polyDivExact(n2, g2);
    d1 = polyDivExact(d1, g2);
  }
  return canonicalScaled(polyMul(n1, n2), polyMul(d1, d2));
}

RationalFunction RationalFunction::invElem() const {
  assert(!isZero());
  return canonicalScaled(toRatPoly(den), toRatPoly(num));
}

Rat RationalFunction::leadingCoeff() const {
  assert(!isZero());
  return Rat(num.back(), den.back());
}

long RationalFunction::degreeDiff() const {
  assert(!isZero());
  return static_cast<long>(num.size()) - static_cast<long>(den.size());
}

std::string RationalFunction::key() const {
  return intPolyKey(num) + "/" + intPolyKey(den);
}

namespace {

std::string polyStr(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!first) out << (p[i] > 0 ? "+" : "-");
    else if (p[i] < 0) out << "-";
    Int a = abs(p[i]);
    if (a != 1 || i == 0) out << a.str();
    if (i >= 1) {
      out << "X";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

std::string RationalFunction::str() const {
  if (isZero()) return "0";
  if (den.size() == 1 && den[0] == 1) return polyStr(num);
  return "(" + polyStr(num) + ")/(" + polyStr(den) + ")";
}

}  // namespace semifield
