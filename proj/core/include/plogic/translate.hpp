#pragma once

#include "plogic/automaton.hpp"
#include "plogic/gum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plogic {

// The three bijections mediating a direct translation: ball types <-> states,
// colors <-> inputs, symbols <-> outputs. Pairs are kept in source
// declaration order.
struct TranslationMap {
    std::vector<std::pair<std::string, std::string>> ground_map;
    std::vector<std::pair<std::string, std::string>> context_map;
    std::vector<std::pair<std::string, std::string>> symbol_map;

    bool operator==(const TranslationMap&) const = default;
};

// Swaps every pair; the inverse direction's map.
TranslationMap inverse(const TranslationMap& m);

// Default maps pair elements positionally. A fresh automaton adopts the ball
// and symbol labels for its states and outputs and numbers its inputs
// "0","1",... by color position; a fresh urn model adopts all automaton
// labels as-is.
TranslationMap positional_gum_to_automaton_map(const Gum& g);
TranslationMap positional_automaton_to_gum_map(const MealyAutomaton& a);

// Direct construction of an automaton from an urn model: the output table is
// the lookup table transported through the bijections, and the transition
// table collapses every state onto the image of the first ball type. Throws
// Errc::bijection_arity_mismatch if `map` does not biject the model's sets.
std::pair<MealyAutomaton, TranslationMap> gum_to_automaton(
    const Gum& g, const std::optional<TranslationMap>& map = std::nullopt);

// Direct construction of an urn model from an automaton: the lookup table is
// the output table transported through the bijections; the transition table
// carries no logical content for single-input experiments and is dropped.
std::pair<Gum, TranslationMap> automaton_to_gum(
    const MealyAutomaton& a, const std::optional<TranslationMap>& map = std::nullopt);

// Converts g to an automaton and back through the inverse maps and checks
// the original model is reproduced exactly.
bool verify_round_trip(const Gum& g);

}  // namespace plogic
