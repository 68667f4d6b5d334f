#include "semifield/instances.hpp"

#include <sstream>

#include "semifield/errors.hpp"
#include "semifield/lattice_group.hpp"

namespace semifield {

namespace {

bool keyEq(const Element& a, const Element& b) { return a.key == b.key; }

Rat smallPositiveRat(Rng& rng) { return Rat(intIn(rng, 1, 6), intIn(rng, 1, 4)); }

// ---------------------------------------------------------------- boolean

std::shared_ptr<Semifield> makeBoolean() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "boolean";
  auto elem = [id](bool v) { return makeElement(id, v, v ? "1" : "0"); };
  S->id = id;
  S->zero = elem(false);
  S->one = elem(true);
  S->add = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<bool>(a) || payloadAs<bool>(b));
  };
  S->mul = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<bool>(a) && payloadAs<bool>(b));
  };
  S->inv = [elem](const Element& a) {
    if (!payloadAs<bool>(a)) throw DomainError("inv: zero has no inverse");
    return elem(true);
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) { return elem(below(rng, 2) == 1); };
  S->carrier = std::vector<Element>{S->zero, S->one};
  S->show = [](const Element& e) { return e.key; };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    if (s == "0") return elem(false);
    if (s == "1") return elem(true);
    return std::nullopt;
  };
  S->strictClaim = true;
  S->cancellativeClaim = false;
  S->declaredChar = CharClass::one();
  return S;
}

// ---------------------------------------------------------------- fp(p)

std::shared_ptr<Semifield> makeFp(long p) {
  if (p < 2 || !isPrime(Int(p))) throw DescriptorError("fp: parameter must be prime");
  auto S = std::make_shared<Semifield>();
  const std::string id = "fp:" + std::to_string(p);
  auto elem = [id, p](Int v) {
    v = ((v % p) + p) % p;
    std::string key = v.str();
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(0);
  S->one = elem(1);
  S->add = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<Int>(a) + payloadAs<Int>(b));
  };
  S->mul = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<Int>(a) * payloadAs<Int>(b));
  };
  S->inv = [elem, p](const Element& a) {
    const Int& v = payloadAs<Int>(a);
    if (v == 0) throw DomainError("inv: zero has no inverse");
    // Fermat: v^(p-2) mod p.
    Int r = 1, base = v, e = p - 2;
    while (e > 0) {
      if (e % 2 == 1) r = r * base % p;
      base = base * base % p;
      e /= 2;
    }
    return elem(r);
  };
  S->eq = keyEq;
  S->sample = [elem, p](Rng& rng) { return elem(Int(below(rng, static_cast<std::uint64_t>(p)))); };
  std::vector<Element> carrier;
  for (long i = 0; i < p; ++i) carrier.push_back(elem(i));
  S->carrier = std::move(carrier);
  S->show = [](const Element& e) { return e.key; };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    try {
      return elem(Int(s));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  S->strictClaim = false;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::prime(Int(p));
  return S;
}

// ---------------------------------------------------------------- qplus

std::shared_ptr<Semifield> makeQplus() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "qplus";
  auto elem = [id](Rat v) {
    std::string key = ratKey(v);
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(Rat(0));
  S->one = elem(Rat(1));
  S->add = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<Rat>(a) + payloadAs<Rat>(b));
  };
  S->mul = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<Rat>(a) * payloadAs<Rat>(b));
  };
  S->inv = [elem](const Element& a) {
    const Rat& v = payloadAs<Rat>(a);
    if (v == 0) throw DomainError("inv: zero has no inverse");
    return elem(Rat(1) / v);
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(Rat(0));
    if (pick == 1) return elem(Rat(1));
    return elem(smallPositiveRat(rng));
  };
  S->ratio = [](const Element& x, const Element& y) -> std::optional<PositiveRational> {
    return PositiveRational(payloadAs<Rat>(y) / payloadAs<Rat>(x));
  };
  S->sub = [elem](const Element& a, const Element& b) -> std::optional<Element> {
    Rat d = payloadAs<Rat>(a) - payloadAs<Rat>(b);
    if (d < 0) return std::nullopt;
    return elem(std::move(d));
  };
  S->show = [](const Element& e) { return payloadAs<Rat>(e).str(); };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    auto r = parseRat(s);
    if (!r || *r < 0) return std::nullopt;
    return elem(*r);
  };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

// ---------------------------------------------------------------- qplus-power(k)

using RatVec = std::vector<Rat>;

std::string ratVecKey(const RatVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ";";
    out << ratKey(v[i]);
  }
  out << ")";
  return out.str();
}

std::shared_ptr<Semifield> makeQplusPower(long k) {
  if (k < 1) throw DescriptorError("qplus-power: parameter must be >= 1");
  auto S = std::make_shared<Semifield>();
  const std::string id = "qplus-power:" + std::to_string(k);
  auto elem = [id](RatVec v) {
    std::string key = ratVecKey(v);
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(RatVec(k, Rat(0)));
  S->one = elem(RatVec(k, Rat(1)));
  S->add = [elem](const Element& a, const Element& b) {
    RatVec r = payloadAs<RatVec>(a);
    const auto& v = payloadAs<RatVec>(b);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
    return elem(std::move(r));
  };
  S->mul = [elem](const Element& a, const Element& b) {
    RatVec r = payloadAs<RatVec>(a);
    const auto& v = payloadAs<RatVec>(b);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= v[i];
    return elem(std::move(r));
  };
  S->inv = [elem](const Element& a) {
    RatVec r = payloadAs<RatVec>(a);
    if (r[0] == 0) throw DomainError("inv: zero has no inverse");
    for (auto& c : r) c = Rat(1) / c;
    return elem(std::move(r));
  };
  S->eq = keyEq;
  S->sample = [elem, k](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(RatVec(k, Rat(0)));
    if (pick == 1) return elem(RatVec(k, Rat(1)));
    RatVec v;
    for (long i = 0; i < k; ++i) v.push_back(smallPositiveRat(rng));
    return elem(std::move(v));
  };
  // Subtraction witness: valid only when the difference lands back in the
  // carrier (all coordinates strictly positive, or all zero).
  S->sub = [elem](const Element& a, const Element& b) -> std::optional<Element> {
    RatVec r = payloadAs<RatVec>(a);
    const auto& v = payloadAs<RatVec>(b);
    bool allPos = true, allZero = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] -= v[i];
      if (r[i] <= 0) allPos = false;
      if (r[i] != 0) allZero = false;
    }
    if (!allPos && !allZero) return std::nullopt;
    return elem(std::move(r));
  };
  S->show = [](const Element& e) { return e.key; };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

// ---------------------------------------------------------------- tropical-z

using Trop = std::optional<Int>;  // nullopt = -inf, the zero

std::shared_ptr<Semifield> makeTropicalZ() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "tropical-z";
  auto elem = [id](Trop v) {
    std::string key = v ? v->str() : "-inf";
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(std::nullopt);
  S->one = elem(Int(0));
  S->add = [elem](const Element& a, const Element& b) {
    const auto& x = payloadAs<Trop>(a);
    const auto& y = payloadAs<Trop>(b);
    if (!x) return b;
    if (!y) return a;
    return elem(*x >= *y ? *x : *y);
  };
  S->mul = [elem](const Element& a, const Element& b) {
    const auto& x = payloadAs<Trop>(a);
    const auto& y = payloadAs<Trop>(b);
    if (!x || !y) return elem(std::nullopt);
    return elem(*x + *y);
  };
  S->inv = [elem](const Element& a) {
    const auto& x = payloadAs<Trop>(a);
    if (!x) throw DomainError("inv: zero has no inverse");
    return elem(-*x);
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) {
    if (below(rng, 8) == 0) return elem(std::nullopt);
    return elem(Int(intIn(rng, -6, 6)));
  };
  S->show = [](const Element& e) { return e.key; };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    if (s == "-inf") return elem(std::nullopt);
    try {
      return elem(Int(s));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  S->strictClaim = true;
  S->cancellativeClaim = false;
  S->declaredChar = CharClass::one();
  return S;
}

// ---------------------------------------------------------------- pos-rational-functions

RatPoly randomPositivePoly(Rng& rng) {
  long deg = static_cast<long>(below(rng, 3));
  RatPoly p;
  for (long i = 0; i <= deg; ++i) p.push_back(Rat(intIn(rng, 1, 4), intIn(rng, 1, 2)));
  return p;
}

std::shared_ptr<Semifield> makePosRationalFunctions() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "pos-rational-functions";
  auto elem = [id](RationalFunction v) {
    std::string key = v.key();
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(RationalFunction::zero());
  S->one = elem(RationalFunction::constant(Rat(1)));
  S->add = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<RationalFunction>(a).addWith(payloadAs<RationalFunction>(b)));
  };
  S->mul = [elem](const Element& a, const Element& b) {
    return elem(payloadAs<RationalFunction>(a).mulWith(payloadAs<RationalFunction>(b)));
  };
  S->inv = [elem](const Element& a) {
    const auto& v = payloadAs<RationalFunction>(a);
    if (v.isZero()) throw DomainError("inv: zero has no inverse");
    return elem(v.invElem());
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(RationalFunction::zero());
    if (pick == 1) return elem(RationalFunction::constant(Rat(1)));
    if (pick == 2) return elem(RationalFunction::monomialX());
    return elem(RationalFunction::make(randomPositivePoly(rng), randomPositivePoly(rng)));
  };
  // y = theta.x iff the cross products n_y.d_x and n_x.d_y are scalar
  // multiples; decided coefficientwise, no gcd needed.
  S->ratio = [](const Element& x, const Element& y) -> std::optional<PositiveRational> {
    const auto& fx = payloadAs<RationalFunction>(x);
    const auto& fy = payloadAs<RationalFunction>(y);
    auto mulInt = [](const IntPoly& a, const IntPoly& b) {
      IntPoly r(a.size() + b.size() - 1, Int(0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
      return r;
    };
    IntPoly p = mulInt(fy.num, fx.den);
    IntPoly q = mulInt(fx.num, fy.den);
    if (p.size() != q.size()) return std::nullopt;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] * q.back() != q[i] * p.back()) return std::nullopt;
    if (q.back() < 0) {
      for (auto& c : p) c = -c;
      for (auto& c : q) c = -c;
    }
    Rat theta(p.back(), q.back());
    if (theta <= 0) return std::nullopt;
    return PositiveRational(std::move(theta));
  };
  S->show = [](const Element& e) { return payloadAs<RationalFunction>(e).str(); };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

// ---------------------------------------------------------------- dual-positive

using Dual = std::pair<Rat, Rat>;  // a + b.eps, a > 0 for nonzero elements

std::shared_ptr<Semifield> makeDualPositive() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "dual-positive";
  auto elem = [id](Rat a, Rat b) {
    std::string key = "(" + ratKey(a) + "," + ratKey(b) + ")";
    return makeElement(id, Dual{std::move(a), std::move(b)}, std::move(key));
  };
  S->id = id;
  S->zero = elem(Rat(0), Rat(0));
  S->one = elem(Rat(1), Rat(0));
  S->add = [elem](const Element& x, const Element& y) {
    const auto& [a, b] = payloadAs<Dual>(x);
    const auto& [c, d] = payloadAs<Dual>(y);
    return elem(a + c, b + d);
  };
  S->mul = [elem](const Element& x, const Element& y) {
    const auto& [a, b] = payloadAs<Dual>(x);
    const auto& [c, d] = payloadAs<Dual>(y);
    // eps^2 = 0
    return elem(a * c, a * d + b * c);
  };
  S->inv = [elem](const Element& x) {
    const auto& [a, b] = payloadAs<Dual>(x);
    if (a == 0) throw DomainError("inv: zero has no inverse");
    return elem(Rat(1) / a, -b / (a * a));
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(Rat(0), Rat(0));
    if (pick == 1) return elem(Rat(1), Rat(0));
    Rat b(intIn(rng, -4, 4), intIn(rng, 1, 3));
    return elem(smallPositiveRat(rng), std::move(b));
  };
  S->ratio = [](const Element& x, const Element& y) -> std::optional<PositiveRational> {
    const auto& [a, b] = payloadAs<Dual>(x);
    const auto& [c, d] = payloadAs<Dual>(y);
    Rat theta = c / a;
    if (theta <= 0 || theta * b != d) return std::nullopt;
    return PositiveRational(std::move(theta));
  };
  S->sub = [elem](const Element& x, const Element& y) -> std::optional<Element> {
    const auto& [a, b] = payloadAs<Dual>(x);
    const auto& [c, d] = payloadAs<Dual>(y);
    Rat da = a - c, db = b - d;
    if (da > 0 || (da == 0 && db == 0)) return elem(std::move(da), std::move(db));
    return std::nullopt;
  };
  S->show = [](const Element& e) {
    const auto& [a, b] = payloadAs<Dual>(e);
    if (b == 0) return a.str();
    return a.str() + (b > 0 ? "+" : "-") + Rat(abs(b)).str() + "e";
  };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    // `a`, `a+be` or `a-be` with a, b rationals
    std::size_t pos = s.find_first_of("+-", 1);
    if (pos == std::string::npos || s.back() != 'e') {
      auto a = parseRat(s);
      if (!a || (*a <= 0 && *a != 0)) return std::nullopt;
      return elem(*a, Rat(0));
    }
    auto a = parseRat(s.substr(0, pos));
    auto b = parseRat(s.substr(pos + 1, s.size() - pos - 2));
    if (!a || !b || *a <= 0) return std::nullopt;
    if (s[pos] == '-') *b = -*b;
    return elem(*a, *b);
  };
  S->strictClaim = true;
  S->cancellativeClaim = true;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

// ---------------------------------------------------------------- leading-term

using Lead = std::optional<std::pair<Rat, Int>>;  // q.X^k, q > 0; nullopt = 0

std::shared_ptr<Semifield> makeLeadingTerm() {
  auto S = std::make_shared<Semifield>();
  const std::string id = "leading-term";
  auto elem = [id](Lead v) {
    std::string key = v ? ratKey(v->first) + "*X^" + v->second.str() : "0";
    return makeElement(id, std::move(v), std::move(key));
  };
  S->id = id;
  S->zero = elem(std::nullopt);
  S->one = elem(Lead{{Rat(1), Int(0)}});
  // Max-degree addition: larger exponent wins, equal exponents add
  // coefficients.
  S->add = [elem](const Element& x, const Element& y) {
    const auto& u = payloadAs<Lead>(x);
    const auto& v = payloadAs<Lead>(y);
    if (!u) return y;
    if (!v) return x;
    if (u->second > v->second) return x;
    if (v->second > u->second) return y;
    return elem(Lead{{u->first + v->first, u->second}});
  };
  S->mul = [elem](const Element& x, const Element& y) {
    const auto& u = payloadAs<Lead>(x);
    const auto& v = payloadAs<Lead>(y);
    if (!u || !v) return elem(std::nullopt);
    return elem(Lead{{u->first * v->first, u->second + v->second}});
  };
  S->inv = [elem](const Element& x) {
    const auto& u = payloadAs<Lead>(x);
    if (!u) throw DomainError("inv: zero has no inverse");
    return elem(Lead{{Rat(1) / u->first, -u->second}});
  };
  S->eq = keyEq;
  S->sample = [elem](Rng& rng) {
    std::uint64_t pick = below(rng, 8);
    if (pick == 0) return elem(std::nullopt);
    if (pick == 1) return elem(Lead{{Rat(1), Int(0)}});
    return elem(Lead{{smallPositiveRat(rng), Int(intIn(rng, -3, 3))}});
  };
  S->ratio = [](const Element& x, const Element& y) -> std::optional<PositiveRational> {
    const auto& u = payloadAs<Lead>(x);
    const auto& v = payloadAs<Lead>(y);
    if (u->second != v->second) return std::nullopt;
    return PositiveRational(v->first / u->first);
  };
  S->show = [](const Element& e) {
    const auto& u = payloadAs<Lead>(e);
    if (!u) return std::string("0");
    if (u->second == 0) return u->first.str();
    return u->first.str() + "*X^" + u->second.str();
  };
  S->parse = [elem](const std::string& s) -> std::optional<Element> {
    // `q*X^k`, `X^k`, or plain `q`
    if (s == "0") return elem(std::nullopt);
    Rat q(1);
    std::string rest = s;
    std::size_t star = s.find("*");
    if (star != std::string::npos) {
      auto c = parseRat(s.substr(0, star));
      if (!c || *c <= 0) return std::nullopt;
      q = *c;
      rest = s.substr(star + 1);
    }
    if (rest.rfind("X^", 0) == 0) {
      try {
        return elem(Lead{{q, Int(rest.substr(2))}});
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (star == std::string::npos) {
      auto c = parseRat(rest);
      if (!c || *c <= 0) return std::nullopt;
      return elem(Lead{{*c, Int(0)}});
    }
    return std::nullopt;
  };
  S->strictClaim = true;
  S->cancellativeClaim = false;
  S->declaredChar = CharClass::zeroUpTo(64);
  return S;
}

}  // namespace

InstanceDescriptor parseDescriptor(const std::string& text) {
  InstanceDescriptor d;
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    d.name = text;
    return d;
  }
  d.name = text.substr(0, colon);
  try {
    d.param = std::stol(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw DescriptorError("invalid parameter in descriptor '" + text + "'");
  }
  return d;
}

std::shared_ptr<Semifield> makeInstance(const InstanceDescriptor& d) {
  auto needParam = [&]() {
    if (!d.param) throw DescriptorError("descriptor '" + d.name + "' requires a parameter");
    return *d.param;
  };
  if (d.name == "boolean") return makeBoolean();
  if (d.name == "fp") return makeFp(needParam());
  if (d.name == "qplus") return makeQplus();
  if (d.name == "qplus-power") return makeQplusPower(needParam());
  if (d.name == "tropical-z") return makeTropicalZ();
  if (d.name == "zn-coordinatewise") {
    long n = needParam();
    if (n < 1) throw DescriptorError("zn-coordinatewise: n must be >= 1");
    return semifieldFromLGroup(std::make_shared<LatticeGroup>(znCoordinatewise(static_cast<int>(n))));
  }
  if (d.name == "z2-lex")
    return semifieldFromLGroup(std::make_shared<LatticeGroup>(z2Lex()));
  if (d.name == "pos-rational-functions") return makePosRationalFunctions();
  if (d.name == "dual-positive") return makeDualPositive();
  if (d.name == "leading-term") return makeLeadingTerm();
  throw DescriptorError("unknown instance '" + d.name + "'");
}

std::shared_ptr<Semifield> makeInstance(const std::string& descriptorText) {
  return makeInstance(parseDescriptor(descriptorText));
}

std::vector<std::string> registeredInstanceNames() {
  return {"boolean",        "fp:5",
          "qplus",          "qplus-power:2",
          "tropical-z",     "zn-coordinatewise:2",
          "z2-lex",         "pos-rational-functions",
          "dual-positive",  "leading-term"};
}

std::optional<PositiveRational> ratioAsRational(const Semifield& F, const Element& x,
                                                const Element& y) {
  if (F.isZeroElem(x) || F.isZeroElem(y))
    throw DomainError("ratioAsRational: arguments must be nonzero");
  if (!F.ratio)
    throw CapabilityError("instance '" + F.id + "' has no rational-ratio capability");
  return F.ratio(x, y);
}

Element boolElem(const Semifield& F, bool v) { return v ? F.one : F.zero; }

Element fpElem(const Semifield& F, Int v) {
  return F.parse(v.str()).value();
}

Element qplusElem(const Semifield& F, Rat v) {
  std::string key = ratKey(v);
  return makeElement(F.id, std::move(v), std::move(key));
}

Element qplusPowerElem(const Semifield& F, std::vector<Rat> v) {
  std::string key = ratVecKey(v);
  return makeElement(F.id, std::move(v), std::move(key));
}

Element tropicalElem(const Semifield& F, std::optional<Int> v) {
  std::string key = v ? v->str() : "-inf";
  return makeElement(F.id, std::move(v), std::move(key));
}

Element ratFnElem(const Semifield& F, RationalFunction v) {
  std::string key = v.key();
  return makeElement(F.id, std::move(v), std::move(key));
}

Element dualElem(const Semifield& F, Rat a, Rat b) {
  std::string key = "(" + ratKey(a) + "," + ratKey(b) + ")";
  return makeElement(F.id, Dual{std::move(a), std::move(b)}, std::move(key));
}

Element leadingElem(const Semifield& F, std::optional<std::pair<Rat, Int>> v) {
  std::string key = v ? ratKey(v->first) + "*X^" + v->second.str() : "0";
  return makeElement(F.id, std::move(v), std::move(key));
}

const RationalFunction& ratFnOf(const Element& e) { return payloadAs<RationalFunction>(e); }
const std::pair<Rat, Rat>& dualOf(const Element& e) { return payloadAs<Dual>(e); }
const std::optional<std::pair<Rat, Int>>& leadingOf(const Element& e) {
  return payloadAs<Lead>(e);
}
const Rat& qplusOf(const Element& e) { return payloadAs<Rat>(e); }

}  // namespace semifield
