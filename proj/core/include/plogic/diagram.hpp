#pragma once

#include <string>
#include <vector>

namespace plogic {

// A finite empirical logic in hypergraph form: labelled atoms plus blocks
// (the maximal contexts). Blocks store atom indices sorted ascending, so a
// block is a set regardless of the order its members were listed in.
//
// Invariants (enforced by make_diagram):
//   - atom identifiers are distinct and nonempty,
//   - every block member refers to a declared atom, blocks are nonempty,
//   - no two blocks are equal as sets (duplicates collapse, first kept),
//   - every atom occurs in at least one block.
struct Diagram {
    std::vector<std::string> atoms;
    std::vector<std::vector<int>> blocks;

    // Index of an atom identifier, -1 if absent.
    int atom_index(const std::string& id) const;

    bool operator==(const Diagram&) const = default;
};

Diagram make_diagram(const std::vector<std::string>& atoms,
                     const std::vector<std::vector<std::string>>& blocks);

}  // namespace plogic
