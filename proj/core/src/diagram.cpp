#include "plogic/diagram.hpp"

#include "plogic/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace plogic {

int Diagram::atom_index(const std::string& id) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == id) return static_cast<int>(i);
    return -1;
}

Diagram make_diagram(const std::vector<std::string>& atoms,
                     const std::vector<std::vector<std::string>>& blocks) {
    Diagram d;
    d.atoms = atoms;

    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].empty()) fail(Errc::bad_syntax, "empty atom identifier");
        if (!index.emplace(atoms[i], static_cast<int>(i)).second)
            fail(Errc::duplicate_id, "duplicate atom '" + atoms[i] + "'");
    }

    std::vector<bool> covered(atoms.size(), false);
    for (const auto& members : blocks) {
        if (members.empty()) fail(Errc::empty_block, "block with no atoms");
        std::vector<int> block;
        for (const auto& id : members) {
            auto it = index.find(id);
            if (it == index.end())
                fail(Errc::unknown_atom, "block references unknown atom '" + id + "'");
            block.push_back(it->second);
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        if (std::find(d.blocks.begin(), d.blocks.end(), block) != d.blocks.end())
            continue;  // duplicate context, keep the first
        for (int a : block) covered[a] = true;
        d.blocks.push_back(std::move(block));
    }

    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (!covered[i])
            fail(Errc::isolated_atom, "atom '" + atoms[i] + "' occurs in no block");
    return d;
}

}  // namespace plogic
