#pragma once

#include "plogic/diagram.hpp"
#include "plogic/rational.hpp"
#include "plogic/states.hpp"

#include <variant>
#include <vector>

namespace plogic {

// Nonnegative rational valuation over a Diagram's atoms whose values sum to
// exactly 1 on every block.
struct RationalState {
    std::vector<Rat> values;  // atom order
};

// Validates the RationalState invariants against a diagram.
RationalState make_rational_state(const Diagram& d, std::vector<Rat> values);

// Convex weights over the given states reproducing the target exactly.
struct ConvexWeights {
    std::vector<Rat> weights;  // one per state, nonnegative, summing to 1
};

// Separating hyperplane: coeffs·m <= bound for every given state m, while
// coeffs·target > bound.
struct SeparatingCertificate {
    std::vector<Rat> coeffs;  // one per atom
    Rat bound;
};

using FeasibilityResult = std::variant<ConvexWeights, SeparatingCertificate>;

// Exact rational decision whether target = sum_k w_k m_k with w_k >= 0 and
// sum w_k = 1. The returned branch always verifies by direct substitution
// (the solver re-checks before returning). Implemented as a phase-1 simplex
// with Bland's rule; the certificate is the Farkas dual at termination.
// Throws Errc::dimension_mismatch if any state's length differs from the
// target's.
FeasibilityResult convex_membership(const RationalState& target,
                                    const std::vector<TwoValuedState>& states);

}  // namespace plogic
