#pragma once

#include "plogic/diagram.hpp"
#include "plogic/partition_logic.hpp"

#include <cstdint>
#include <vector>

namespace plogic {

// Dispersion-free valuation over a Diagram's atoms (in atom order): exactly
// one atom per block carries 1.
using TwoValuedState = std::vector<std::uint8_t>;

bool state_is_valid(const Diagram& d, const TwoValuedState& s);

// All two-valued states of a diagram, duplicate-free, in ascending
// lexicographic order of the 0/1 vector over the declared atom order.
// Backtracks over atoms with unit propagation on the per-block one-true
// constraint; an empty result means the diagram admits no such state.
std::vector<TwoValuedState> enumerate_two_valued_states(const Diagram& d);

// True iff every pair of distinct atoms is told apart by some state.
bool is_separating(const std::vector<TwoValuedState>& states, const Diagram& d);

// True iff every atom carries 1 in at least one state.
bool is_unital(const std::vector<TwoValuedState>& states, const Diagram& d);

// Rebuilds the partition logic carried by a state set: ground is the state
// labels "1".."r" (in the given order), and each block contributes the
// partition of state labels by which atom of the block they make true.
// Cells of atoms no state makes true are dropped. Throws
// Errc::empty_state_set when `states` is empty.
PartitionLogic partition_logic_from_states(const Diagram& d,
                                           const std::vector<TwoValuedState>& states);

}  // namespace plogic
