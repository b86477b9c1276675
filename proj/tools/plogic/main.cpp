#include "plogic/errors.hpp"
#include "plogic/io.hpp"
#include "plogic/iso.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace plogic;

int exit_code_of(Errc code) {
    switch (code) {
        case Errc::bad_syntax:
            return 1;  // parse error
        case Errc::empty_state_set:
            return 3;  // nothing to synthesize from
        default:
            return 2;  // validation error
    }
}

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

std::string to_hex(const std::string& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : bytes) {
        out += digits[ch >> 4];
        out += digits[ch & 15];
    }
    return out;
}

// '#'-prefixes every line so appended metadata keeps the output parseable
std::string commented(const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out += line.empty() ? "#\n" : "# " + line + '\n';
    return out;
}

PartitionLogic logic_of_file(const std::string& path) {
    std::string text = read_file(path);
    switch (sniff_model(text)) {
        case ModelKind::gum:
            return logic_of_gum(parse_gum(text));
        case ModelKind::automaton:
            return logic_of_automaton(parse_automaton(text));
        case ModelKind::logic: {
            Diagram d = parse_logic(text);
            return partition_logic_from_states(d, enumerate_two_valued_states(d));
        }
    }
    fail(Errc::bad_syntax, "unrecognized model file");
}

int cmd_states(const std::string& file) {
    Diagram d = parse_logic(read_file(file));
    auto states = enumerate_two_valued_states(d);
    std::cout << write_states(states);
    std::cerr << states.size() << " states\n";
    return 0;
}

int cmd_logic(const std::string& from_gum, const std::string& from_am, bool canon) {
    PartitionLogic pl = !from_gum.empty() ? logic_of_gum(parse_gum(read_file(from_gum)))
                                          : logic_of_automaton(parse_automaton(read_file(from_am)));
    if (canon)
        std::cout << to_hex(canonical_form(pl)) << '\n';
    else
        std::cout << write_logic(diagram_of_logic(pl));
    return 0;
}

int cmd_synth(const std::string& kind, const std::string& file) {
    Diagram d = parse_logic(read_file(file));
    auto states = enumerate_two_valued_states(d);
    if (states.empty()) {
        std::cerr << "error: the logic admits no two-valued state\n";
        return 3;
    }
    if (!is_separating(states, d)) {
        std::cerr << "error: the two-valued states do not separate the atoms\n";
        return 3;
    }
    if (kind == "gum")
        std::cout << write_gum(gum_from_states(d, states));
    else
        std::cout << write_automaton(automaton_from_states(d, states));
    for (std::size_t a = 0; a < d.atoms.size(); ++a) {
        bool painted = false;
        for (const auto& s : states) painted = painted || s[a];
        if (!painted)
            std::cerr << "warning: atom '" << d.atoms[a]
                      << "' is never painted; the state set is not unital\n";
    }
    return 0;
}

int cmd_convert(const std::string& direction, const std::string& file) {
    std::string text = read_file(file);
    if (direction == "gum2am") {
        auto [a, m] = gum_to_automaton(parse_gum(text));
        std::cout << write_automaton(a) << commented(write_translation_map(m));
    } else {
        auto [g, m] = automaton_to_gum(parse_automaton(text));
        std::cout << write_gum(g) << commented(write_translation_map(m));
    }
    return 0;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b) {
    PartitionLogic a = logic_of_file(file_a);
    PartitionLogic b = logic_of_file(file_b);
    auto witness = logics_isomorphic(a, b);
    if (!witness) {
        std::cout << "not equivalent\n";
        return 1;
    }
    std::cout << "equivalent\n";
    for (std::size_t i = 0; i < a.ground.size(); ++i)
        std::cout << "ground " << a.ground[i] << " -> " << b.ground[witness->ground_map[i]]
                  << '\n';
    for (std::size_t j = 0; j < a.partitions.size(); ++j)
        std::cout << "partition " << j + 1 << " -> " << witness->partition_map[j] + 1 << '\n';
    return 0;
}

int cmd_realizable(const std::string& file, const std::string& state_file) {
    Diagram d = parse_logic(read_file(file));
    auto vectors = parse_rational_vectors(read_file(state_file), d.atoms.size());
    if (vectors.size() != 1)
        fail(Errc::bad_state, "state file must hold exactly one vector, found " +
                                  std::to_string(vectors.size()));
    RationalState target = make_rational_state(d, vectors[0]);
    auto states = enumerate_two_valued_states(d);
    FeasibilityResult result = convex_membership(target, states);
    if (const auto* w = std::get_if<ConvexWeights>(&result)) {
        std::cout << "Feasible\n";
        for (std::size_t k = 0; k < w->weights.size(); ++k)
            if (w->weights[k] != 0)
                std::cout << "w " << k + 1 << " = " << rat_to_string(w->weights[k]) << '\n';
        return 0;
    }
    const auto& cert = std::get<SeparatingCertificate>(result);
    std::cout << "Infeasible\n";
    for (std::size_t a = 0; a < d.atoms.size(); ++a)
        std::cout << "c " << d.atoms[a] << " = " << rat_to_string(cert.coeffs[a]) << '\n';
    std::cout << "c0 = " << rat_to_string(cert.bound) << '\n';
    return 1;
}

int cmd_simulate(const std::string& file, bool kv) {
    Experiment e = parse_experiment(read_file(file), dir_of(file));
    FrequencyReport report = simulate(e);
    std::cout << (kv ? write_report_kv(report) : write_report_table(report));
    return 0;
}

int cmd_export_dot(const std::string& file) {
    std::cout << export_dot(parse_logic(read_file(file)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition logics of generalized urn models and finite automata"};
    app.require_subcommand(1);

    std::string states_file;
    auto* c_states = app.add_subcommand("states", "enumerate the two-valued states of a logic");
    c_states->add_option("logic-file", states_file, "logic file")->required();

    std::string logic_gum, logic_am;
    bool logic_canon = false;
    auto* c_logic = app.add_subcommand("logic", "print the partition logic of a model");
    auto* opt_gum = c_logic->add_option("--from-gum", logic_gum, "urn model file");
    auto* opt_am = c_logic->add_option("--from-am", logic_am, "automaton file");
    opt_gum->excludes(opt_am);
    opt_am->excludes(opt_gum);
    c_logic->add_flag("--canon", logic_canon, "print the canonical form as a hex string");

    std::string synth_kind, synth_file;
    auto* c_synth = app.add_subcommand("synth", "build an urn model or automaton from a logic");
    c_synth->add_option("kind", synth_kind, "gum or am")
        ->required()
        ->check(CLI::IsMember({"gum", "am"}));
    c_synth->add_option("logic-file", synth_file, "logic file")->required();

    std::string convert_direction, convert_file;
    auto* c_convert = app.add_subcommand("convert", "translate between urn models and automata");
    c_convert->add_option("direction", convert_direction, "gum2am or am2gum")
        ->required()
        ->check(CLI::IsMember({"gum2am", "am2gum"}));
    c_convert->add_option("file", convert_file, "model file")->required();

    std::string equiv_a, equiv_b;
    auto* c_equiv = app.add_subcommand("equiv", "decide whether two models carry the same logic");
    c_equiv->add_option("a", equiv_a, "logic, urn or automaton file")->required();
    c_equiv->add_option("b", equiv_b, "logic, urn or automaton file")->required();

    std::string realizable_file, realizable_state;
    auto* c_realizable =
        app.add_subcommand("realizable", "decide convex realizability of a rational state");
    c_realizable->add_option("logic-file", realizable_file, "logic file")->required();
    c_realizable->add_option("--state", realizable_state, "rational state file")->required();

    std::string simulate_file;
    bool simulate_kv = false;
    auto* c_simulate = app.add_subcommand("simulate", "run a sampling experiment");
    c_simulate->add_option("spec-file", simulate_file, "experiment file")->required();
    c_simulate->add_flag("--kv", simulate_kv, "machine-readable key=value output");

    std::string dot_file;
    auto* c_dot = app.add_subcommand("export-dot", "emit the diagram as DOT graph text");
    c_dot->add_option("logic-file", dot_file, "logic file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 64;
    }

    try {
        if (c_states->parsed()) return cmd_states(states_file);
        if (c_logic->parsed()) {
            if (logic_gum.empty() == logic_am.empty()) {
                std::cerr << "error: need exactly one of --from-gum or --from-am\n";
                return 64;
            }
            return cmd_logic(logic_gum, logic_am, logic_canon);
        }
        if (c_synth->parsed()) return cmd_synth(synth_kind, synth_file);
        if (c_convert->parsed()) return cmd_convert(convert_direction, convert_file);
        if (c_equiv->parsed()) return cmd_equiv(equiv_a, equiv_b);
        if (c_realizable->parsed()) return cmd_realizable(realizable_file, realizable_state);
        if (c_simulate->parsed()) return cmd_simulate(simulate_file, simulate_kv);
        if (c_dot->parsed()) return cmd_export_dot(dot_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_of(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 64;
}
