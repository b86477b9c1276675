#pragma once

#include "plogic/automaton.hpp"
#include "plogic/diagram.hpp"
#include "plogic/gum.hpp"
#include "plogic/io.hpp"
#include "plogic/partition_logic.hpp"
#include "plogic/states.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace support {

inline std::string fixtures_dir() { return PLOGIC_FIXTURES_DIR; }

inline std::string fixture(const std::string& name) { return fixtures_dir() + "/" + name; }

inline plogic::Diagram load_diagram(const std::string& name) {
    return plogic::parse_logic(plogic::read_file(fixture(name)));
}

// frozen reference data the unit suites and the acceptance gate check against

inline std::vector<plogic::TwoValuedState> l12_states() {
    return {{0, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 1, 0, 0}};
}

// lookup rows of the two-color five-ball urn, symbols per (red, green)
inline std::vector<std::array<std::string, 2>> table1a_rows() {
    return {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"5", "5"}};
}

// output rows of its automaton twin, outputs per (input 0, input 1)
inline std::vector<std::array<std::string, 2>> table1b_rows() {
    return {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"5", "5"}};
}

// synthesized urn for the five-state logic, symbols per (c1, c2), ball order
// following the lexicographic state enumeration
inline std::vector<std::array<std::string, 2>> table2_rows() {
    return {{"5", "5"}, {"2", "4"}, {"2", "3"}, {"1", "4"}, {"1", "3"}};
}

struct BugRow {
    const char* bits;                      // state over atoms 1..13
    std::array<const char*, 7> symbols;    // painted symbol per color c1..c7
};

// the 14 states of the 13-atom logic and the symbols a ball carrying each
// state paints per color, every entry fixed by the one-true-atom rule over
// the seven blocks (c6 covers atoms 1, 11, 12)
inline std::vector<BugRow> bug_rows() {
    return {
        {"1000100010001", {"1", "5", "5", "9", "9", "1", "13"}},
        {"1001010010000", {"1", "4", "6", "9", "9", "1", "4"}},
        {"1000100101000", {"1", "5", "5", "8", "10", "1", "10"}},
        {"0100100010011", {"2", "5", "5", "9", "9", "12", "13"}},
        {"0100100100101", {"2", "5", "5", "8", "11", "11", "13"}},
        {"0101010010010", {"2", "4", "6", "9", "9", "12", "4"}},
        {"0101001000100", {"2", "4", "7", "7", "11", "11", "4"}},
        {"0101010100100", {"2", "4", "6", "8", "11", "11", "4"}},
        {"0100100101010", {"2", "5", "5", "8", "10", "12", "10"}},
        {"0010001000101", {"3", "3", "7", "7", "11", "11", "13"}},
        {"0010010100101", {"3", "3", "6", "8", "11", "11", "13"}},
        {"0010010010011", {"3", "3", "6", "9", "9", "12", "13"}},
        {"0010001001010", {"3", "3", "7", "7", "10", "12", "10"}},
        {"0010010101010", {"3", "3", "6", "8", "10", "12", "10"}},
    };
}

inline plogic::TwoValuedState state_of_bits(const std::string& bits) {
    plogic::TwoValuedState s;
    for (char ch : bits) s.push_back(ch == '1');
    return s;
}

// oracles, deliberately independent of the library's algorithms

inline std::vector<plogic::TwoValuedState> brute_force_states(const plogic::Diagram& d) {
    const std::size_t n = d.atoms.size();
    std::vector<plogic::TwoValuedState> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        plogic::TwoValuedState s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        bool ok = true;
        for (const auto& block : d.blocks) {
            int trues = 0;
            for (int a : block) trues += s[a];
            ok = ok && trues == 1;
        }
        if (ok) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<plogic::Partition> normal_partitions(const plogic::PartitionLogic& pl,
                                                        const std::vector<int>& relabel) {
    std::vector<plogic::Partition> out;
    for (const auto& p : pl.partitions) {
        plogic::Partition q;
        for (const auto& cell : p) {
            plogic::Cell c;
            for (int x : cell) c.push_back(relabel[x]);
            std::sort(c.begin(), c.end());
            q.push_back(std::move(c));
        }
        std::sort(q.begin(), q.end());
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// tries every ground bijection; usable up to 8 ground elements
inline bool isomorphic_oracle(const plogic::PartitionLogic& a, const plogic::PartitionLogic& b) {
    if (a.ground.size() != b.ground.size() || a.partitions.size() != b.partitions.size())
        return false;
    const int n = static_cast<int>(a.ground.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> identity = perm;
    auto b_norm = normal_partitions(b, identity);
    do {
        if (normal_partitions(a, perm) == b_norm) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// random structures

inline plogic::Diagram random_diagram(std::mt19937& rng, int max_atoms = 16, int max_blocks = 6) {
    std::uniform_int_distribution<int> natoms(1, max_atoms);
    const int pool = natoms(rng);
    std::uniform_int_distribution<int> nblocks(1, max_blocks);
    std::uniform_int_distribution<int> block_size(1, std::min(4, pool));
    std::uniform_int_distribution<int> pick(0, pool - 1);

    std::vector<std::vector<int>> blocks(nblocks(rng));
    std::vector<bool> used(pool, false);
    for (auto& block : blocks) {
        int want = block_size(rng);
        for (int i = 0; i < want; ++i) {
            int a = pick(rng);
            if (std::find(block.begin(), block.end(), a) == block.end()) {
                block.push_back(a);
                used[a] = true;
            }
        }
    }

    // keep only atoms some block mentions, in label order
    std::vector<std::string> atoms;
    std::vector<int> dense(pool, -1);
    for (int a = 0; a < pool; ++a)
        if (used[a]) {
            dense[a] = static_cast<int>(atoms.size());
            atoms.push_back(std::to_string(a + 1));
        }
    std::vector<std::vector<std::string>> named;
    for (const auto& block : blocks) {
        if (block.empty()) continue;
        std::vector<std::string> ids;
        for (int a : block) ids.push_back(atoms[dense[a]]);
        named.push_back(std::move(ids));
    }
    if (named.empty()) return plogic::make_diagram({"1"}, {{"1"}});
    return plogic::make_diagram(atoms, named);
}

inline std::vector<std::string> labels(const char* prefix, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline plogic::Gum random_gum(std::mt19937& rng, int max_size = 6) {
    std::uniform_int_distribution<int> size(1, max_size);
    const int r = size(rng), t = size(rng), l = size(rng);
    auto symbols = labels("v", l);
    std::uniform_int_distribution<int> pick(0, l - 1);
    std::vector<std::vector<std::string>> table(r);
    for (auto& row : table)
        for (int c = 0; c < t; ++c) row.push_back(symbols[pick(rng)]);
    return plogic::make_gum(labels("u", r), labels("c", t), symbols, table);
}

inline plogic::MealyAutomaton random_automaton(std::mt19937& rng, int max_size = 6) {
    std::uniform_int_distribution<int> size(1, max_size);
    const int r = size(rng), t = size(rng), l = size(rng);
    auto states = labels("s", r);
    auto outputs = labels("o", l);
    std::uniform_int_distribution<int> pick_state(0, r - 1), pick_output(0, l - 1);
    std::vector<std::vector<std::string>> delta(r), lambda(r);
    for (int s = 0; s < r; ++s)
        for (int i = 0; i < t; ++i) {
            delta[s].push_back(states[pick_state(rng)]);
            lambda[s].push_back(outputs[pick_output(rng)]);
        }
    return plogic::make_mealy(states, labels("i", t), outputs, delta, lambda);
}

// CLI driver

struct CliResult {
    int exit = -1;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& args) {
    static int serial = 0;
    std::string err_path = "/tmp/plogic_test_err_" + std::to_string(getpid()) + "_" +
                           std::to_string(serial++);
    std::string cmd = std::string(PLOGIC_CLI_PATH) + " " + args + " 2>" + err_path;
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit = WEXITSTATUS(status);
    if (FILE* err = std::fopen(err_path.c_str(), "r")) {
        while ((got = fread(buf, 1, sizeof buf, err)) > 0) result.err.append(buf, got);
        std::fclose(err);
    }
    std::remove(err_path.c_str());
    return result;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

inline std::string strip_comment_lines(const std::string& text) {
    std::string out;
    for (const auto& line : lines_of(text))
        if (line.empty() || line[0] != '#') out += line + '\n';
    return out;
}

}  // namespace support
