#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semifield/polynomial.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

// Parsed `name[:param]` descriptor, e.g. "fp:5" or "qplus".
struct InstanceDescriptor {
  std::string name;
  std::optional<long> param;
};

InstanceDescriptor parseDescriptor(const std::string& text);

// Wires up one of the built-in semifields:
//   boolean, fp(p), qplus, qplus-power(k), tropical-z, zn-coordinatewise(n),
//   z2-lex, pos-rational-functions, dual-positive, leading-term
// Throws DescriptorError on unknown names or invalid parameters.
std::shared_ptr<Semifield> makeInstance(const InstanceDescriptor& d);
std::shared_ptr<Semifield> makeInstance(const std::string& descriptorText);

// The registry: canonical descriptor for every shipped instance.
std::vector<std::string> registeredInstanceNames();

// ratio oracle with precondition checks: theta in Q+ with y = theta.x, if any.
std::optional<PositiveRational> ratioAsRational(const Semifield& F, const Element& x,
                                                const Element& y);

// Element constructors for the built-in instances (used by the CLI and tests).
Element boolElem(const Semifield& F, bool v);
Element fpElem(const Semifield& F, Int v);
Element qplusElem(const Semifield& F, Rat v);
Element qplusPowerElem(const Semifield& F, std::vector<Rat> v);
Element tropicalElem(const Semifield& F, std::optional<Int> v);  // nullopt = -inf
Element ratFnElem(const Semifield& F, RationalFunction v);
Element dualElem(const Semifield& F, Rat a, Rat b);
Element leadingElem(const Semifield& F, std::optional<std::pair<Rat, Int>> v);

// Payload accessors.
const RationalFunction& ratFnOf(const Element& e);
const std::pair<Rat, Rat>& dualOf(const Element& e);
const std::optional<std::pair<Rat, Int>>& leadingOf(const Element& e);
const Rat& qplusOf(const Element& e);

}  // namespace semifield
