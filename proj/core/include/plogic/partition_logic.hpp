#pragma once

#include "plogic/diagram.hpp"

#include <string>
#include <vector>

namespace plogic {

// A cell is a set of ground indices, stored sorted ascending.
using Cell = std::vector<int>;
// A partition's cells are pairwise disjoint, cover the ground set, and are
// ordered by their smallest ground index.
using Partition = std::vector<Cell>;

// A ground set together with a family of partitions of it. Cells with equal
// extension are the same atom wherever they occur; that identification is
// what glues the per-partition Boolean algebras into one logic. Duplicate
// partitions collapse on construction (first occurrence kept), so the
// partition list is duplicate-free.
struct PartitionLogic {
    std::vector<std::string> ground;
    std::vector<Partition> partitions;

    int ground_index(const std::string& label) const;

    bool operator==(const PartitionLogic&) const = default;
};

// Builds a PartitionLogic from ground labels and partitions given as label
// sets. Throws Errc::not_a_partition when cells overlap, are empty, mention
// unknown labels, or fail to cover the ground set.
PartitionLogic paste_partitions(const std::vector<std::string>& ground,
                                const std::vector<std::vector<std::vector<std::string>>>& partitions);

// Same, but cells already hold ground indices. Validates and normalizes.
PartitionLogic paste_partitions_indexed(std::vector<std::string> ground,
                                        const std::vector<Partition>& partitions);

// The atom/block hypergraph of a logic: one atom per distinct cell (ordered
// by first occurrence scanning partitions in order), one block per
// partition. Atom identifiers spell out the cell extension, e.g. "{1,2}".
Diagram diagram_of_logic(const PartitionLogic& pl);

// "{a,b,c}" label used by diagram_of_logic.
std::string cell_label(const PartitionLogic& pl, const Cell& cell);

}  // namespace plogic
