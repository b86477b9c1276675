#pragma once

#include "plogic/diagram.hpp"
#include "plogic/partition_logic.hpp"
#include "plogic/states.hpp"

#include <string>
#include <vector>

namespace plogic {

// Mealy machine with total transition and output tables over states x inputs.
struct MealyAutomaton {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<std::vector<int>> delta;   // [state][input] -> state index
    std::vector<std::vector<int>> lambda;  // [state][input] -> output index

    int state_index(const std::string& id) const;
    int input_index(const std::string& id) const;
    int output_index(const std::string& id) const;

    bool operator==(const MealyAutomaton&) const = default;
};

MealyAutomaton make_mealy(const std::vector<std::string>& states,
                          const std::vector<std::string>& inputs,
                          const std::vector<std::string>& outputs,
                          const std::vector<std::vector<std::string>>& delta_table,
                          const std::vector<std::vector<std::string>>& lambda_table);

// State partition of the single-input experiment for `input`: cells group
// states producing the same output, ordered by first state occurrence.
Partition input_partition(const MealyAutomaton& a, const std::string& input);

// Pastes all single-input partitions; ground is the state list.
PartitionLogic logic_of_automaton(const MealyAutomaton& a);

// Standard Mealy run: feeds `word` starting from `s0`, returns the outputs.
std::vector<std::string> run(const MealyAutomaton& a, const std::string& s0,
                             const std::vector<std::string>& word);

// Builds the automaton carried by a state set: one automaton state per
// two-valued state ("1".."r"), one input per block ("i1".."it"), outputs are
// the atom identifiers plus the auxiliary "*". lambda(k, i_j) is the unique
// true atom of block j under state k ("*" can only fire for invalid states
// and is kept for robustness); delta collapses everything onto the first
// state, so the initial state information is gone after one input.
MealyAutomaton automaton_from_states(const Diagram& d,
                                     const std::vector<TwoValuedState>& states);

}  // namespace plogic
