#include "plogic/automaton.hpp"

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

std::vector<std::vector<int>> resolve_table(const std::vector<std::vector<std::string>>& table,
                                            std::size_t rows, std::size_t cols,
                                            const std::vector<std::string>& range, Errc unknown,
                                            const char* what) {
    if (table.size() != rows)
        fail(Errc::dimension_mismatch, std::string(what) + " table has " +
                                           std::to_string(table.size()) + " rows for " +
                                           std::to_string(rows) + " states");
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < range.size(); ++i) index.emplace(range[i], int(i));
    std::vector<std::vector<int>> out;
    for (const auto& row : table) {
        if (row.size() != cols)
            fail(Errc::dimension_mismatch, std::string(what) + " row covers " +
                                               std::to_string(row.size()) + " of " +
                                               std::to_string(cols) + " inputs");
        std::vector<int> r;
        for (const auto& id : row) {
            auto it = index.find(id);
            if (it == index.end())
                fail(unknown, std::string(what) + " references unknown label '" + id + "'");
            r.push_back(it->second);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

int MealyAutomaton::state_index(const std::string& id) const { return find_label(states, id); }
int MealyAutomaton::input_index(const std::string& id) const { return find_label(inputs, id); }
int MealyAutomaton::output_index(const std::string& id) const { return find_label(outputs, id); }

MealyAutomaton make_mealy(const std::vector<std::string>& states,
                          const std::vector<std::string>& inputs,
                          const std::vector<std::string>& outputs,
                          const std::vector<std::vector<std::string>>& delta_table,
                          const std::vector<std::vector<std::string>>& lambda_table) {
    if (states.empty()) fail(Errc::bad_syntax, "automaton without states");
    if (inputs.empty()) fail(Errc::bad_syntax, "automaton without inputs");
    check_labels(states, "state");
    check_labels(inputs, "input");
    check_labels(outputs, "output");

    MealyAutomaton a;
    a.states = states;
    a.inputs = inputs;
    a.outputs = outputs;
    a.delta = resolve_table(delta_table, states.size(), inputs.size(), states,
                            Errc::unknown_state, "delta");
    a.lambda = resolve_table(lambda_table, states.size(), inputs.size(), outputs,
                             Errc::unknown_output, "lambda");
    return a;
}

Partition input_partition(const MealyAutomaton& a, const std::string& input) {
    int i = a.input_index(input);
    if (i < 0) fail(Errc::unknown_input, "unknown input '" + input + "'");
    Partition cells;
    std::unordered_map<int, std::size_t> cell_of;  // output index -> cell position
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        int o = a.lambda[s][i];
        auto it = cell_of.find(o);
        if (it == cell_of.end()) {
            cell_of.emplace(o, cells.size());
            cells.push_back({static_cast<int>(s)});
        } else {
            cells[it->second].push_back(static_cast<int>(s));
        }
    }
    return cells;
}

PartitionLogic logic_of_automaton(const MealyAutomaton& a) {
    std::vector<Partition> partitions;
    for (const auto& i : a.inputs) partitions.push_back(input_partition(a, i));
    return paste_partitions_indexed(a.states, partitions);
}

std::vector<std::string> run(const MealyAutomaton& a, const std::string& s0,
                             const std::vector<std::string>& word) {
    int s = a.state_index(s0);
    if (s < 0) fail(Errc::unknown_state, "unknown state '" + s0 + "'");
    std::vector<std::string> out;
    for (const auto& symbol : word) {
        int i = a.input_index(symbol);
        if (i < 0) fail(Errc::unknown_input, "unknown input '" + symbol + "'");
        out.push_back(a.outputs[a.lambda[s][i]]);
        s = a.delta[s][i];
    }
    return out;
}

MealyAutomaton automaton_from_states(const Diagram& d,
                                     const std::vector<TwoValuedState>& states) {
    if (states.empty()) fail(Errc::empty_state_set, "no two-valued states to build from");
    for (const auto& s : states)
        if (!state_is_valid(d, s))
            fail(Errc::not_two_valued, "state set contains an invalid state");
    if (d.atom_index("*") >= 0)
        fail(Errc::duplicate_id, "atom '*' collides with the auxiliary output");

    MealyAutomaton a;
    for (std::size_t k = 0; k < states.size(); ++k) a.states.push_back(std::to_string(k + 1));
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
        a.inputs.push_back("i" + std::to_string(j + 1));
    a.outputs = d.atoms;
    a.outputs.push_back("*");

    const int star = static_cast<int>(d.atoms.size());
    for (const auto& s : states) {
        std::vector<int> lam;
        for (const auto& block : d.blocks) {
            int shown = star;
            for (int atom : block)
                if (s[atom]) shown = atom;
            lam.push_back(shown);
        }
        a.lambda.push_back(std::move(lam));
        a.delta.emplace_back(d.blocks.size(), 0);  // everything collapses onto state "1"
    }
    return a;
}

}  // namespace plogic
