#include "plogic/states.hpp"

#include "plogic/errors.hpp"

#include <algorithm>

namespace plogic {

bool state_is_valid(const Diagram& d, const TwoValuedState& s) {
    if (s.size() != d.atoms.size()) return false;
    for (const auto& v : s)
        if (v != 0 && v != 1) return false;
    for (const auto& block : d.blocks) {
        int trues = 0;
        for (int a : block) trues += s[a];
        if (trues != 1) return false;
    }
    return true;
}

namespace {

// Depth-first assignment in atom order, 0 before 1, so states come out in
// ascending lexicographic order. Per block we track the number of atoms set
// to 1 and the number still undecided; a value is forced when a block is
// already satisfied (0) or down to its last undecided atom without a 1 (1).
struct Enumerator {
    const Diagram& d;
    std::vector<std::vector<int>> blocks_of_atom;
    std::vector<int> trues, undecided;
    TwoValuedState current;
    std::vector<TwoValuedState> out;

    explicit Enumerator(const Diagram& diagram) : d(diagram) {
        blocks_of_atom.resize(d.atoms.size());
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
            for (int a : d.blocks[b]) blocks_of_atom[a].push_back(static_cast<int>(b));
        trues.assign(d.blocks.size(), 0);
        undecided.clear();
        for (const auto& block : d.blocks) undecided.push_back(static_cast<int>(block.size()));
        current.assign(d.atoms.size(), 0);
    }

    bool value_allowed(int atom, int value) const {
        for (int b : blocks_of_atom[atom]) {
            if (value == 1 && trues[b] == 1) return false;
            if (value == 0 && trues[b] == 0 && undecided[b] == 1) return false;
        }
        return true;
    }

    void assign(std::size_t atom) {
        if (atom == d.atoms.size()) {
            out.push_back(current);
            return;
        }
        for (int value : {0, 1}) {
            if (!value_allowed(static_cast<int>(atom), value)) continue;
            current[atom] = static_cast<std::uint8_t>(value);
            for (int b : blocks_of_atom[atom]) {
                --undecided[b];
                trues[b] += value;
            }
            assign(atom + 1);
            for (int b : blocks_of_atom[atom]) {
                ++undecided[b];
                trues[b] -= value;
            }
        }
        current[atom] = 0;
    }
};

}  // namespace

std::vector<TwoValuedState> enumerate_two_valued_states(const Diagram& d) {
    Enumerator e(d);
    e.assign(0);
    return e.out;
}

bool is_separating(const std::vector<TwoValuedState>& states, const Diagram& d) {
    for (std::size_t a = 0; a < d.atoms.size(); ++a)
        for (std::size_t b = a + 1; b < d.atoms.size(); ++b) {
            bool split = false;
            for (const auto& s : states)
                if (s[a] != s[b]) {
                    split = true;
                    break;
                }
            if (!split) return false;
        }
    return true;
}

bool is_unital(const std::vector<TwoValuedState>& states, const Diagram& d) {
    for (std::size_t a = 0; a < d.atoms.size(); ++a) {
        bool hit = false;
        for (const auto& s : states)
            if (s[a]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

PartitionLogic partition_logic_from_states(const Diagram& d,
                                           const std::vector<TwoValuedState>& states) {
    if (states.empty()) fail(Errc::empty_state_set, "no states to build a partition logic from");
    for (const auto& s : states)
        if (!state_is_valid(d, s))
            fail(Errc::not_two_valued, "state violates the one-true-atom-per-block rule");

    std::vector<std::string> ground;
    for (std::size_t k = 0; k < states.size(); ++k) ground.push_back(std::to_string(k + 1));

    std::vector<Partition> partitions;
    for (const auto& block : d.blocks) {
        Partition cells;
        for (int atom : block) {
            Cell cell;
            for (std::size_t k = 0; k < states.size(); ++k)
                if (states[k][atom]) cell.push_back(static_cast<int>(k));
            if (!cell.empty()) cells.push_back(std::move(cell));
        }
        partitions.push_back(std::move(cells));
    }
    return paste_partitions_indexed(std::move(ground), partitions);
}

}  // namespace plogic
