#pragma once

#include <cstdint>
#include <functional>

#include "semifield/report.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

using ElementGen = std::function<Element(Rng&)>;

// Verifies the semifield laws on sampled triples: additive commutative monoid
// with neutral 0, multiplicative group on nonzero elements with neutral 1,
// two-sided distributivity, 0 absorbing. For instances declared strict it
// additionally checks that no two nonzero elements sum to zero. Stops at the
// first counterexample.
Report checkSemifieldAxioms(const Semifield& F, const ElementGen& gen, long cases,
                            std::uint64_t seed);

// Same suite over every triple of the finite carrier.
Report checkSemifieldAxiomsExhaustive(const Semifield& F);

// Computes s_n = 1 + ... + 1 iteratively. CharOne if s_2 = s_1, CharP(p) if
// s_p = 0 for the first p <= bound (p verified prime), otherwise
// CharZeroUpTo(bound) with all s_n distinct (a repeat without idempotence or
// zero is an InconsistentInstanceError).
CharClass characteristic(const Semifield& F, long bound);

// passed iff x^k != 1 for all 2 <= k <= maxOrder; witness is (x, k) otherwise.
Report torsionProbe(const Semifield& F, const Element& x, long maxOrder);

// image(n/d) . x where image(n/d) = s_n . s_d^-1 through the embedded copy of
// Q+. Requires characteristic one or zero.
Element scalarAction(const Semifield& F, const PositiveRational& q, const Element& x);

// passed iff no sampled (x, y, z) has x + z = y + z with x != y.
Report cancellativityProbe(const Semifield& F, const ElementGen& gen, long cases,
                           std::uint64_t seed);
Report cancellativityProbeExhaustive(const Semifield& F);

}  // namespace semifield
