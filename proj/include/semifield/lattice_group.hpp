#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semifield/checks.hpp"
#include "semifield/report.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

// Group with a translation-invariant partial order in which every pair has a
// least upper bound. The interface keeps the conjugation law so noncommutative
// groups fit, though every shipped instance is abelian.
struct LatticeGroup {
  std::string id;
  Element identity;
  std::function<Element(const Element&, const Element&)> op;
  std::function<Element(const Element&)> inverse;
  std::function<Element(const Element&, const Element&)> join;
  std::function<bool(const Element&, const Element&)> leq;
  std::function<bool(const Element&, const Element&)> eq;
  std::function<Element(Rng&)> sample;
  std::function<std::string(const Element&)> show;
};

// Built-in groups; all carriers are integer vectors.
LatticeGroup trivialGroup();
LatticeGroup zGroup();                  // (Z, +, >=)
LatticeGroup znCoordinatewise(int n);   // Z^n, product order
LatticeGroup z2Lex();                   // Z^2, lexicographic (total) order

// Element of one of the integer-vector groups above; groupId is the group's
// id field ("z", "zn:2", "z2lex", "trivial").
Element intVectorGroupElement(const std::string& groupId, std::vector<Int> v);

// Positivity in a char-one semifield: 1 + x = x, i.e. x >= 1 in the induced
// order. Equivalent to the inversive form 1 + x^-1 = 1; the equivalence is a
// tested invariant.
bool isPositive(const Semifield& F, const Element& x);

// Multiplicative group of F with leq(x, y) <=> y.x^-1 positive and join = add.
// Requires characteristic one.
LatticeGroup extractLGroup(std::shared_ptr<const Semifield> F);

// {0} u G with join as addition and the group law as multiplication. The
// result has characteristic one. Elements wrap the group's elements; see
// wrapIntoSemifield / unwrapFromSemifield.
std::shared_ptr<Semifield> semifieldFromLGroup(std::shared_ptr<const LatticeGroup> G);

Element wrapIntoSemifield(const Semifield& S, const Element& groupElem);
// nullopt for the zero element.
std::optional<Element> unwrapFromSemifield(const Element& wrapped);

// Group laws, partial-order laws, translation invariance, conjugation
// invariance of positivity, and the least-upper-bound property of join on
// sampled tuples.
Report checkLatticeGroupAxioms(const LatticeGroup& G, const ElementGen& gen, long cases,
                               std::uint64_t seed);

// Directed-graph text for the order extracted from a char-one instance,
// restricted to the given nonzero elements: one `node <key>` line per element
// and one `edge <a> <b>` line per covering pair a < b.
std::string hasseDiagram(const Semifield& F, const std::vector<Element>& range);

}  // namespace semifield
