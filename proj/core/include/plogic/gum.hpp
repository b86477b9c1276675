#pragma once

#include "plogic/diagram.hpp"
#include "plogic/partition_logic.hpp"
#include "plogic/states.hpp"

#include <string>
#include <vector>

namespace plogic {

// Generalized urn model: ball types printed with one symbol per color. The
// lookup table is total over ball_types x colors; `symbols` may list symbols
// the lookup never uses. Wright's constancy axiom is deliberately not an
// invariant here (see satisfies_constancy).
struct Gum {
    std::vector<std::string> ball_types;
    std::vector<std::string> colors;
    std::vector<std::string> symbols;
    std::vector<std::vector<int>> lookup;  // [ball][color] -> symbol index

    int ball_index(const std::string& id) const;
    int color_index(const std::string& id) const;
    int symbol_index(const std::string& id) const;

    bool operator==(const Gum&) const = default;
};

// `table[i][j]` names the symbol ball i shows in color j.
Gum make_gum(const std::vector<std::string>& ball_types, const std::vector<std::string>& colors,
             const std::vector<std::string>& symbols,
             const std::vector<std::vector<std::string>>& table);

// How the ball types fall apart when viewed through one color: cells group
// ball types showing the same symbol, ordered by first ball occurrence.
Partition color_partition(const Gum& g, const std::string& color);

// Pastes all per-color partitions; ground is the ball-type list.
PartitionLogic logic_of_gum(const Gum& g);

// The one symbol visible on ball type `u` through the eyeglass for `c`.
std::string observe(const Gum& g, const std::string& u, const std::string& c);

// Wright's constancy axiom as a diagnostic: whenever a symbol occurs in two
// colors, it must sit on exactly the same ball types in both.
bool satisfies_constancy(const Gum& g);

// Builds the urn model carried by a state set: one ball type per state
// (labelled "1".."r"), one color per block ("c1".."ct"), one symbol per atom
// (the atom identifiers themselves). Ball k shows, in the color of block j,
// the symbol of the block's unique true atom under state k. Atoms no state
// makes true never get painted; their identifiers are appended to
// `unpainted` when given (the state set is not unital in that case).
Gum gum_from_states(const Diagram& d, const std::vector<TwoValuedState>& states,
                    std::vector<std::string>* unpainted = nullptr);

}  // namespace plogic
