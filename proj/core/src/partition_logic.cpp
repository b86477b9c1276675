#include "plogic/partition_logic.hpp"

#include "plogic/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace plogic {

int PartitionLogic::ground_index(const std::string& label) const {
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] == label) return static_cast<int>(i);
    return -1;
}

namespace {

// Sorts cell members and cells, then checks disjointness and coverage.
Partition normalize_partition(std::size_t ground_size, Partition cells) {
    std::vector<bool> seen(ground_size, false);
    std::size_t total = 0;
    for (auto& cell : cells) {
        if (cell.empty()) fail(Errc::not_a_partition, "empty cell");
        std::sort(cell.begin(), cell.end());
        for (int g : cell) {
            if (g < 0 || static_cast<std::size_t>(g) >= ground_size)
                fail(Errc::not_a_partition, "cell member outside ground set");
            if (seen[g]) fail(Errc::not_a_partition, "cells overlap");
            seen[g] = true;
        }
        total += cell.size();
    }
    if (total != ground_size) fail(Errc::not_a_partition, "cells do not cover the ground set");
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.front() < b.front(); });
    return cells;
}

}  // namespace

PartitionLogic paste_partitions_indexed(std::vector<std::string> ground,
                                        const std::vector<Partition>& partitions) {
    PartitionLogic pl;
    pl.ground = std::move(ground);
    for (const auto& raw : partitions) {
        Partition p = normalize_partition(pl.ground.size(), raw);
        if (std::find(pl.partitions.begin(), pl.partitions.end(), p) != pl.partitions.end())
            continue;  // duplicate partition, keep the first
        pl.partitions.push_back(std::move(p));
    }
    return pl;
}

PartitionLogic paste_partitions(const std::vector<std::string>& ground,
                                const std::vector<std::vector<std::vector<std::string>>>& partitions) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (!index.emplace(ground[i], static_cast<int>(i)).second)
            fail(Errc::duplicate_id, "duplicate ground label '" + ground[i] + "'");

    std::vector<Partition> indexed;
    for (const auto& partition : partitions) {
        Partition cells;
        for (const auto& labels : partition) {
            Cell cell;
            for (const auto& label : labels) {
                auto it = index.find(label);
                if (it == index.end())
                    fail(Errc::not_a_partition, "cell references unknown label '" + label + "'");
                cell.push_back(it->second);
            }
            cells.push_back(std::move(cell));
        }
        indexed.push_back(std::move(cells));
    }
    return paste_partitions_indexed(ground, indexed);
}

std::string cell_label(const PartitionLogic& pl, const Cell& cell) {
    std::string label = "{";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) label += ',';
        label += pl.ground[cell[i]];
    }
    label += '}';
    return label;
}

Diagram diagram_of_logic(const PartitionLogic& pl) {
    Diagram d;
    std::vector<Cell> atom_cells;  // cells in first-occurrence order
    auto atom_of = [&](const Cell& cell) {
        for (std::size_t i = 0; i < atom_cells.size(); ++i)
            if (atom_cells[i] == cell) return static_cast<int>(i);
        atom_cells.push_back(cell);
        d.atoms.push_back(cell_label(pl, cell));
        return static_cast<int>(atom_cells.size() - 1);
    };
    for (const auto& partition : pl.partitions) {
        std::vector<int> block;
        for (const auto& cell : partition) block.push_back(atom_of(cell));
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
    }
    return d;
}

}  // namespace plogic
