#include "semifield/lattice_group.hpp"

#include <sstream>

#include "semifield/errors.hpp"

namespace semifield {

namespace {

using IntVec = std::vector<Int>;

std::string vecKey(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i].str();
  }
  out << ")";
  return out.str();
}

Element vecElem(const std::string& id, IntVec v) {
  std::string key = vecKey(v);
  return makeElement(id, std::move(v), std::move(key));
}

// Shared scaffolding for the Z^n-based groups; only the order data differ.
LatticeGroup vectorGroup(std::string id, int n,
                         std::function<bool(const IntVec&, const IntVec&)> leqVec,
                         std::function<IntVec(const IntVec&, const IntVec&)> joinVec) {
  LatticeGroup G;
  G.id = id;
  G.identity = vecElem(id, IntVec(n, Int(0)));
  G.op = [id](const Element& a, const Element& b) {
    IntVec r = payloadAs<IntVec>(a);
    const auto& v = payloadAs<IntVec>(b);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
    return vecElem(id, std::move(r));
  };
  G.inverse = [id](const Element& a) {
    IntVec r = payloadAs<IntVec>(a);
    for (auto& c : r) c = -c;
    return vecElem(id, std::move(r));
  };
  G.join = [id, joinVec](const Element& a, const Element& b) {
    return vecElem(id, joinVec(payloadAs<IntVec>(a), payloadAs<IntVec>(b)));
  };
  G.leq = [leqVec](const Element& a, const Element& b) {
    return leqVec(payloadAs<IntVec>(a), payloadAs<IntVec>(b));
  };
  G.eq = [](const Element& a, const Element& b) { return a.key == b.key; };
  G.sample = [id, n](Rng& rng) {
    IntVec v;
    for (int i = 0; i < n; ++i) v.emplace_back(intIn(rng, -5, 5));
    return vecElem(id, std::move(v));
  };
  G.show = [](const Element& e) { return e.key; };
  return G;
}

}  // namespace

LatticeGroup trivialGroup() {
  return vectorGroup(
      "trivial", 0, [](const IntVec&, const IntVec&) { return true; },
      [](const IntVec& a, const IntVec&) { return a; });
}

LatticeGroup zGroup() {
  return vectorGroup(
      "z", 1, [](const IntVec& a, const IntVec& b) { return a[0] <= b[0]; },
      [](const IntVec& a, const IntVec& b) { return a[0] >= b[0] ? a : b; });
}

LatticeGroup znCoordinatewise(int n) {
  if (n < 1) throw DescriptorError("znCoordinatewise: n must be >= 1");
  return vectorGroup(
      "zn:" + std::to_string(n), n,
      [](const IntVec& a, const IntVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] > b[i]) return false;
        return true;
      },
      [](const IntVec& a, const IntVec& b) {
        IntVec r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (b[i] > r[i]) r[i] = b[i];
        return r;
      });
}

LatticeGroup z2Lex() {
  auto lexLeq = [](const IntVec& a, const IntVec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] <= b[1];
  };
  return vectorGroup(
      "z2lex", 2, lexLeq,
      [lexLeq](const IntVec& a, const IntVec& b) { return lexLeq(a, b) ? b : a; });
}

Element intVectorGroupElement(const std::string& groupId, std::vector<Int> v) {
  return vecElem(groupId, std::move(v));
}

bool isPositive(const Semifield& F, const Element& x) {
  if (F.isZeroElem(x)) throw DomainError("isPositive: x must be nonzero");
  if (!F.eq(F.add(F.one, F.one), F.one))
    throw UnsupportedCharacteristicError("isPositive: instance '" + F.id +
                                         "' is not of characteristic one");
  return F.eq(F.add(F.one, x), x);
}

LatticeGroup extractLGroup(std::shared_ptr<const Semifield> F) {
  if (!F->eq(F->add(F->one, F->one), F->one))
    throw UnsupportedCharacteristicError("extractLGroup: instance '" + F->id +
                                         "' is not of characteristic one");
  LatticeGroup G;
  G.id = F->id + "-lg";
  auto rebadge = [id = G.id](Element e) {
    e.instance = id;
    return e;
  };
  auto unbadge = [fid = F->id](Element e) {
    e.instance = fid;
    return e;
  };
  G.identity = rebadge(F->one);
  G.op = [F, rebadge, unbadge](const Element& a, const Element& b) {
    return rebadge(F->mul(unbadge(a), unbadge(b)));
  };
  G.inverse = [F, rebadge, unbadge](const Element& a) { return rebadge(F->inv(unbadge(a))); };
  G.join = [F, rebadge, unbadge](const Element& a, const Element& b) {
    return rebadge(F->add(unbadge(a), unbadge(b)));
  };
  G.leq = [F, unbadge](const Element& a, const Element& b) {
    return isPositive(*F, F->mul(unbadge(b), F->inv(unbadge(a))));
  };
  G.eq = [F, unbadge](const Element& a, const Element& b) {
    return F->eq(unbadge(a), unbadge(b));
  };
  G.sample = [F, rebadge](Rng& rng) {
    for (;;) {
      Element e = F->sample(rng);
      if (!F->isZeroElem(e)) return rebadge(e);
    }
  };
  G.show = [F, unbadge](const Element& e) { return F->show(unbadge(e)); };
  return G;
}

namespace {

// Payload of elements of a synthesized {0} u G semifield.
using Wrapped = std::optional<Element>;

Element wrapped(const std::string& id, std::optional<Element> g) {
  std::string key = g ? "g" + g->key : "0";
  return makeElement(id, std::move(g), std::move(key));
}

}  // namespace

std::shared_ptr<Semifield> semifieldFromLGroup(std::shared_ptr<const LatticeGroup> G) {
  auto S = std::make_shared<Semifield>();
  const std::string id = G->id + "-sf";
  S->id = id;
  S->zero = wrapped(id, std::nullopt);
  S->one = wrapped(id, G->identity);
  S->add = [G, id](const Element& a, const Element& b) {
    const auto& x = payloadAs<Wrapped>(a);
    const auto& y = payloadAs<Wrapped>(b);
    if (!x) return b;
    if (!y) return a;
    return wrapped(id, G->join(*x, *y));
  };
  S->mul = [G, id](const Element& a, const Element& b) {
    const auto& x = payloadAs<Wrapped>(a);
    const auto& y = payloadAs<Wrapped>(b);
    if (!x || !y) return wrapped(id, std::nullopt);
    return wrapped(id, G->op(*x, *y));
  };
  S->inv = [G, id](const Element& a) {
    const auto& x = payloadAs<Wrapped>(a);
    if (!x) throw DomainError("inv: zero has no inverse");
    return wrapped(id, G->inverse(*x));
  };
  S->eq = [](const Element& a, const Element& b) { return a.key == b.key; };
  S->sample = [G, id](Rng& rng) {
    if (below(rng, 8) == 0) return wrapped(id, std::nullopt);
    return wrapped(id, G->sample(rng));
  };
  S->show = [G](const Element& e) {
    const auto& x = payloadAs<Wrapped>(e);
    return x ? G->show(*x) : std::string("0");
  };
  S->strictClaim = true;
  S->cancellativeClaim = false;
  S->declaredChar = CharClass::one();
  return S;
}

Element wrapIntoSemifield(const Semifield& S, const Element& groupElem) {
  return wrapped(S.id, groupElem);
}

std::optional<Element> unwrapFromSemifield(const Element& e) {
  return payloadAs<Wrapped>(e);
}

Report checkLatticeGroupAxioms(const LatticeGroup& G, const ElementGen& gen, long cases,
                               std::uint64_t seed) {
  Rng rng(seed);
  Report report;
  for (long i = 0; i < cases; ++i) {
    Element x = gen(rng), y = gen(rng), z = gen(rng);
    ++report.casesRun;
    Witness bad;
    auto fail = [&](const char* law, std::initializer_list<Element> elems) {
      bad.caseIndex = i;
      bad.law = law;
      for (const auto& e : elems) bad.keys.push_back(e.key);
      report.passed = false;
      report.witness = bad;
      return report;
    };

    // Group laws.
    if (!G.eq(G.op(G.op(x, y), z), G.op(x, G.op(y, z)))) return fail("op-assoc", {x, y, z});
    if (!G.eq(G.op(x, G.identity), x) || !G.eq(G.op(G.identity, x), x))
      return fail("identity", {x});
    if (!G.eq(G.op(x, G.inverse(x)), G.identity)) return fail("inverse", {x});

    // Partial order.
    if (!G.leq(x, x)) return fail("reflexive", {x});
    if (G.leq(x, y) && G.leq(y, x) && !G.eq(x, y)) return fail("antisymmetric", {x, y});
    if (G.leq(x, y) && G.leq(y, z) && !G.leq(x, z)) return fail("transitive", {x, y, z});

    // Translation invariance on both sides, and conjugation invariance of
    // positivity.
    if (G.leq(x, y)) {
      if (!G.leq(G.op(z, x), G.op(z, y))) return fail("left-translation", {x, y, z});
      if (!G.leq(G.op(x, z), G.op(y, z))) return fail("right-translation", {x, y, z});
    }
    if (G.leq(G.identity, x) &&
        !G.leq(G.identity, G.op(G.op(G.inverse(z), x), z)))
      return fail("conjugation", {x, z});

    // Join is an upper bound and least among sampled upper bounds.
    Element j = G.join(x, y);
    if (!G.leq(x, j) || !G.leq(y, j)) return fail("join-upper", {x, y, j});
    if (G.leq(x, z) && G.leq(y, z) && !G.leq(j, z)) return fail("join-least", {x, y, z});
  }
  return report;
}

std::string hasseDiagram(const Semifield& F, const std::vector<Element>& range) {
  auto less = [&](const Element& a, const Element& b) {
    return !F.eq(a, b) && isPositive(F, F.mul(b, F.inv(a)));
  };
  std::ostringstream out;
  for (const auto& e : range) out << "node " << e.key << "\n";
  for (const auto& a : range)
    for (const auto& b : range) {
      if (!less(a, b)) continue;
      bool covering = true;
      for (const auto& c : range)
        if (less(a, c) && less(c, b)) {
          covering = false;
          break;
        }
      if (covering) out << "edge " << a.key << " " << b.key << "\n";
    }
  return out.str();
}

}  // namespace semifield
