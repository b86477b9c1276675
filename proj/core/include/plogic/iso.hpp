#pragma once

#include "plogic/partition_logic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plogic {

// Ground/partition bijections mapping logic `a` onto logic `b`: applying
// ground_map cell-wise and partition_map block-wise turns a into b exactly.
struct IsoWitness {
    std::vector<int> ground_map;     // a ground index -> b ground index
    std::vector<int> partition_map;  // a partition index -> b partition index
};

// Search bounds. Exceeding any of them raises Errc::size_limit_exceeded;
// the node budget guards degenerate highly symmetric inputs where
// individualization-refinement degrades to factorial search.
struct IsoLimits {
    int max_ground = 64;
    int max_partitions = 32;
    long max_nodes = 1000000;
};

// Decides partition-logic isomorphism (ground relabelling plus partition
// reindexing). Returns a verified witness, or nullopt. Deterministic for a
// given input order.
std::optional<IsoWitness> logics_isomorphic(const PartitionLogic& a, const PartitionLogic& b,
                                            const IsoLimits& limits = {});

bool verify_witness(const PartitionLogic& a, const PartitionLogic& b, const IsoWitness& w);

// Canonical byte string: two logics within the size limits get equal strings
// exactly when they are isomorphic. Layout is "<n>;<t>;" followed by the
// canonically relabelled partitions (cells "i,j,..." joined by "|",
// partitions joined by ";"); the one-atom logic yields "1;1;0".
std::string canonical_form(const PartitionLogic& pl, const IsoLimits& limits = {});

}  // namespace plogic
