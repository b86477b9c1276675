#include "plogic/gum.hpp"

#include "plogic/errors.hpp"

#include <unordered_map>
#include <unordered_set>

namespace plogic {

namespace {

int find_label(const std::vector<std::string>& ids, const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i);
    return -1;
}

void check_labels(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (id.empty()) fail(Errc::bad_syntax, std::string("empty ") + what + " identifier");
        if (!seen.insert(id).second)
            fail(Errc::duplicate_id, std::string("duplicate ") + what + " '" + id + "'");
    }
}

}  // namespace

int Gum::ball_index(const std::string& id) const { return find_label(ball_types, id); }
int Gum::color_index(const std::string& id) const { return find_label(colors, id); }
int Gum::symbol_index(const std::string& id) const { return find_label(symbols, id); }

Gum make_gum(const std::vector<std::string>& ball_types, const std::vector<std::string>& colors,
             const std::vector<std::string>& symbols,
             const std::vector<std::vector<std::string>>& table) {
    if (ball_types.empty()) fail(Errc::bad_syntax, "urn model without ball types");
    if (colors.empty()) fail(Errc::bad_syntax, "urn model without colors");
    check_labels(ball_types, "ball type");
    check_labels(colors, "color");
    check_labels(symbols, "symbol");

    Gum g;
    g.ball_types = ball_types;
    g.colors = colors;
    g.symbols = symbols;

    if (table.size() != ball_types.size())
        fail(Errc::dimension_mismatch, "lookup table has " + std::to_string(table.size()) +
                                           " rows for " + std::to_string(ball_types.size()) +
                                           " ball types");
    std::unordered_map<std::string, int> symbol_of;
    for (std::size_t v = 0; v < symbols.size(); ++v) symbol_of.emplace(symbols[v], int(v));
    for (std::size_t u = 0; u < table.size(); ++u) {
        if (table[u].size() != colors.size())
            fail(Errc::dimension_mismatch,
                 "lookup row for '" + ball_types[u] + "' covers " +
                     std::to_string(table[u].size()) + " of " + std::to_string(colors.size()) +
                     " colors");
        std::vector<int> row;
        for (const auto& id : table[u]) {
            auto it = symbol_of.find(id);
            if (it == symbol_of.end())
                fail(Errc::unknown_symbol, "lookup references unknown symbol '" + id + "'");
            row.push_back(it->second);
        }
        g.lookup.push_back(std::move(row));
    }
    return g;
}

Partition color_partition(const Gum& g, const std::string& color) {
    int c = g.color_index(color);
    if (c < 0) fail(Errc::unknown_color, "unknown color '" + color + "'");
    Partition cells;
    std::unordered_map<int, std::size_t> cell_of;  // symbol index -> cell position
    for (std::size_t u = 0; u < g.ball_types.size(); ++u) {
        int v = g.lookup[u][c];
        auto it = cell_of.find(v);
        if (it == cell_of.end()) {
            cell_of.emplace(v, cells.size());
            cells.push_back({static_cast<int>(u)});
        } else {
            cells[it->second].push_back(static_cast<int>(u));
        }
    }
    return cells;
}

PartitionLogic logic_of_gum(const Gum& g) {
    std::vector<Partition> partitions;
    for (const auto& c : g.colors) partitions.push_back(color_partition(g, c));
    return paste_partitions_indexed(g.ball_types, partitions);
}

std::string observe(const Gum& g, const std::string& u, const std::string& c) {
    int ball = g.ball_index(u);
    if (ball < 0) fail(Errc::unknown_ball_type, "unknown ball type '" + u + "'");
    int color = g.color_index(c);
    if (color < 0) fail(Errc::unknown_color, "unknown color '" + c + "'");
    return g.symbols[g.lookup[ball][color]];
}

bool satisfies_constancy(const Gum& g) {
    // carrier[v][c] = ball types showing symbol v in color c
    for (std::size_t v = 0; v < g.symbols.size(); ++v) {
        std::vector<int> carrier;
        bool first = true;
        for (std::size_t c = 0; c < g.colors.size(); ++c) {
            std::vector<int> here;
            for (std::size_t u = 0; u < g.ball_types.size(); ++u)
                if (g.lookup[u][c] == static_cast<int>(v)) here.push_back(static_cast<int>(u));
            if (here.empty()) continue;
            if (first) {
                carrier = std::move(here);
                first = false;
            } else if (here != carrier) {
                return false;
            }
        }
    }
    return true;
}

Gum gum_from_states(const Diagram& d, const std::vector<TwoValuedState>& states,
                    std::vector<std::string>* unpainted) {
    if (states.empty()) fail(Errc::empty_state_set, "no two-valued states to build from");
    for (const auto& s : states)
        if (!state_is_valid(d, s))
            fail(Errc::not_two_valued, "state set contains an invalid state");

    Gum g;
    for (std::size_t k = 0; k < states.size(); ++k) g.ball_types.push_back(std::to_string(k + 1));
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
        g.colors.push_back("c" + std::to_string(j + 1));
    g.symbols = d.atoms;

    for (const auto& s : states) {
        std::vector<int> row;
        for (const auto& block : d.blocks) {
            int shown = -1;
            for (int a : block)
                if (s[a]) shown = a;
            row.push_back(shown);  // valid states have exactly one true atom per block
        }
        g.lookup.push_back(std::move(row));
    }

    if (unpainted) {
        unpainted->clear();
        for (std::size_t a = 0; a < d.atoms.size(); ++a) {
            bool used = false;
            for (const auto& s : states) used = used || s[a];
            if (!used) unpainted->push_back(d.atoms[a]);
        }
    }
    return g;
}

}  // namespace plogic
