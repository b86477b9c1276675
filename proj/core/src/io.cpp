#include "plogic/io.hpp"

#include "plogic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace plogic {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) out.push_back(std::move(current)), current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

// Nonblank lines as token rows, comments stripped.
std::vector<std::vector<std::string>> token_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto row = tokens_of(line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(trim(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    out.push_back(trim(current));
    return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(Errc::bad_syntax, std::string(what) + " wants an unsigned integer, got '" + s + "'");
    return value;
}

std::pair<std::string, std::string> split_equals(const std::string& token, const char* what) {
    auto pos = token.find('=');
    if (pos == std::string::npos || pos == 0 || pos + 1 == token.size())
        fail(Errc::bad_syntax, std::string("malformed ") + what + " entry '" + token + "'");
    return {token.substr(0, pos), token.substr(pos + 1)};
}

}  // namespace

Diagram parse_logic(const std::string& text) {
    auto rows = token_rows(text);
    if (rows.empty() || rows[0][0] != "atoms")
        fail(Errc::bad_syntax, "logic file must start with an atoms line");
    std::vector<std::string> atoms(rows[0].begin() + 1, rows[0].end());
    std::vector<std::vector<std::string>> blocks;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] != "block")
            fail(Errc::bad_syntax, "unexpected keyword '" + rows[i][0] + "' in logic file");
        blocks.emplace_back(rows[i].begin() + 1, rows[i].end());
    }
    return make_diagram(atoms, blocks);
}

std::string write_logic(const Diagram& d) {
    std::string out = "atoms";
    for (const auto& a : d.atoms) out += ' ' + a;
    out += '\n';
    for (const auto& block : d.blocks) {
        out += "block";
        for (int a : block) out += ' ' + d.atoms[a];
        out += '\n';
    }
    return out;
}

Gum parse_gum(const std::string& text) {
    auto rows = token_rows(text);
    if (rows.size() < 2 || rows[0][0] != "colors" || rows[1][0] != "symbols")
        fail(Errc::bad_syntax, "urn file must start with colors and symbols lines");
    std::vector<std::string> colors(rows[0].begin() + 1, rows[0].end());
    std::vector<std::string> symbols(rows[1].begin() + 1, rows[1].end());

    std::vector<std::string> balls;
    std::vector<std::vector<std::string>> table;
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row[0] != "ball")
            fail(Errc::bad_syntax, "unexpected keyword '" + row[0] + "' in urn file");
        if (row.size() < 3 || row[2] != ":")
            fail(Errc::bad_syntax, "ball line wants 'ball <type> : <color>=<symbol> ...'");
        const std::string& u = row[1];
        std::vector<std::optional<std::string>> shown(colors.size());
        for (std::size_t j = 3; j < row.size(); ++j) {
            auto [color, symbol] = split_equals(row[j], "lookup");
            int c = -1;
            for (std::size_t k = 0; k < colors.size(); ++k)
                if (colors[k] == color) c = static_cast<int>(k);
            if (c < 0) fail(Errc::unknown_color, "ball '" + u + "' names unknown color '" + color + "'");
            if (shown[c])
                fail(Errc::duplicate_id, "ball '" + u + "' paints color '" + color + "' twice");
            shown[c] = symbol;
        }
        std::vector<std::string> line;
        for (std::size_t c = 0; c < colors.size(); ++c) {
            if (!shown[c])
                fail(Errc::incomplete_lookup,
                     "ball '" + u + "' shows nothing in color '" + colors[c] + "'");
            line.push_back(*shown[c]);
        }
        balls.push_back(u);
        table.push_back(std::move(line));
    }
    return make_gum(balls, colors, symbols, table);
}

std::string write_gum(const Gum& g) {
    std::string out = "colors";
    for (const auto& c : g.colors) out += ' ' + c;
    out += "\nsymbols";
    for (const auto& v : g.symbols) out += ' ' + v;
    out += '\n';
    for (std::size_t u = 0; u < g.ball_types.size(); ++u) {
        out += "ball " + g.ball_types[u] + " :";
        for (std::size_t c = 0; c < g.colors.size(); ++c)
            out += ' ' + g.colors[c] + '=' + g.symbols[g.lookup[u][c]];
        out += '\n';
    }
    return out;
}

MealyAutomaton parse_automaton(const std::string& text) {
    auto rows = token_rows(text);
    if (rows.size() < 3 || rows[0][0] != "states" || rows[1][0] != "inputs" ||
        rows[2][0] != "outputs")
        fail(Errc::bad_syntax, "automaton file must start with states, inputs and outputs lines");
    std::vector<std::string> states(rows[0].begin() + 1, rows[0].end());
    std::vector<std::string> inputs(rows[1].begin() + 1, rows[1].end());
    std::vector<std::string> outputs(rows[2].begin() + 1, rows[2].end());

    auto state_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == id) return static_cast<int>(i);
        fail(Errc::unknown_state, "unknown state '" + id + "'");
    };
    auto input_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            if (inputs[i] == id) return static_cast<int>(i);
        fail(Errc::unknown_input, "unknown input '" + id + "'");
    };

    using Table = std::vector<std::vector<std::optional<std::string>>>;
    Table delta(states.size(), std::vector<std::optional<std::string>>(inputs.size()));
    Table lambda = delta;
    for (std::size_t i = 3; i < rows.size(); ++i) {
        const auto& row = rows[i];
        bool is_delta = row[0] == "delta";
        if (!is_delta && row[0] != "lambda")
            fail(Errc::bad_syntax, "unexpected keyword '" + row[0] + "' in automaton file");
        if (row.size() != 5 || row[3] != "->")
            fail(Errc::bad_syntax, row[0] + " line wants '" + row[0] + " <state> <input> -> <id>'");
        int s = state_of(row[1]);
        int in = input_of(row[2]);
        auto& cell = (is_delta ? delta : lambda)[s][in];
        if (cell)
            fail(Errc::duplicate_id,
                 row[0] + " for state '" + row[1] + "' on input '" + row[2] + "' given twice");
        cell = row[4];
    }

    std::vector<std::vector<std::string>> delta_table, lambda_table;
    for (std::size_t s = 0; s < states.size(); ++s) {
        std::vector<std::string> drow, lrow;
        for (std::size_t in = 0; in < inputs.size(); ++in) {
            if (!delta[s][in])
                fail(Errc::incomplete_lookup, "delta for state '" + states[s] + "' on input '" +
                                                  inputs[in] + "' missing");
            if (!lambda[s][in])
                fail(Errc::incomplete_lookup, "lambda for state '" + states[s] + "' on input '" +
                                                  inputs[in] + "' missing");
            drow.push_back(*delta[s][in]);
            lrow.push_back(*lambda[s][in]);
        }
        delta_table.push_back(std::move(drow));
        lambda_table.push_back(std::move(lrow));
    }
    return make_mealy(states, inputs, outputs, delta_table, lambda_table);
}

std::string write_automaton(const MealyAutomaton& a) {
    std::string out = "states";
    for (const auto& s : a.states) out += ' ' + s;
    out += "\ninputs";
    for (const auto& i : a.inputs) out += ' ' + i;
    out += "\noutputs";
    for (const auto& o : a.outputs) out += ' ' + o;
    out += '\n';
    for (std::size_t s = 0; s < a.states.size(); ++s)
        for (std::size_t i = 0; i < a.inputs.size(); ++i)
            out += "delta " + a.states[s] + ' ' + a.inputs[i] + " -> " +
                   a.states[a.delta[s][i]] + '\n';
    for (std::size_t s = 0; s < a.states.size(); ++s)
        for (std::size_t i = 0; i < a.inputs.size(); ++i)
            out += "lambda " + a.states[s] + ' ' + a.inputs[i] + " -> " +
                   a.outputs[a.lambda[s][i]] + '\n';
    return out;
}

ModelKind sniff_model(const std::string& text) {
    auto rows = token_rows(text);
    if (!rows.empty()) {
        const std::string& kw = rows[0][0];
        if (kw == "atoms") return ModelKind::logic;
        if (kw == "colors" || kw == "symbols" || kw == "ball") return ModelKind::gum;
        if (kw == "states" || kw == "inputs" || kw == "outputs" || kw == "delta" ||
            kw == "lambda")
            return ModelKind::automaton;
    }
    fail(Errc::bad_syntax, "unrecognized model file");
}

std::vector<TwoValuedState> parse_states(const std::string& text, std::size_t width) {
    std::vector<TwoValuedState> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        if (trim(line).empty()) continue;
        TwoValuedState s;
        for (const auto& entry : split_commas(line)) {
            if (entry == "0")
                s.push_back(0);
            else if (entry == "1")
                s.push_back(1);
            else
                fail(Errc::bad_syntax, "state entries must be 0 or 1, got '" + entry + "'");
        }
        if (s.size() != width)
            fail(Errc::dimension_mismatch, "state has " + std::to_string(s.size()) +
                                               " entries for " + std::to_string(width) + " atoms");
        out.push_back(std::move(s));
    }
    return out;
}

std::string write_state(const TwoValuedState& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i] ? '1' : '0';
    }
    return out;
}

std::string write_states(const std::vector<TwoValuedState>& states) {
    std::string out;
    for (const auto& s : states) out += write_state(s) + '\n';
    return out;
}

std::vector<std::vector<Rat>> parse_rational_vectors(const std::string& text, std::size_t width) {
    std::vector<std::vector<Rat>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        if (trim(line).empty()) continue;
        std::vector<Rat> v;
        for (const auto& entry : split_commas(line)) v.push_back(parse_rational(entry));
        if (v.size() != width)
            fail(Errc::dimension_mismatch, "vector has " + std::to_string(v.size()) +
                                               " entries for " + std::to_string(width) + " atoms");
        out.push_back(std::move(v));
    }
    return out;
}

std::string write_translation_map(const TranslationMap& m) {
    std::string out;
    auto section = [&out](const std::vector<std::pair<std::string, std::string>>& pairs) {
        for (const auto& [from, to] : pairs) out += "map " + from + " -> " + to + '\n';
    };
    section(m.ground_map);
    out += '\n';
    section(m.context_map);
    out += '\n';
    section(m.symbol_map);
    return out;
}

Experiment parse_experiment(const std::string& text, const std::string& base_dir) {
    std::optional<ModelKind> kind;
    std::string model_path;
    bool prior_uniform = false;
    std::vector<std::pair<std::string, Rat>> prior_entries;
    bool have_prior = false;
    std::optional<std::string> probe;
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 0;

    for (const auto& row : token_rows(text)) {
        const std::string& key = row[0];
        if (key == "model") {
            if (row.size() != 3 || (row[1] != "gum" && row[1] != "am"))
                fail(Errc::bad_syntax, "model line wants 'model (gum|am) <path>'");
            if (kind) fail(Errc::bad_syntax, "model given twice");
            kind = row[1] == "gum" ? ModelKind::gum : ModelKind::automaton;
            model_path = row[2];
        } else if (key == "prior") {
            if (have_prior) fail(Errc::bad_syntax, "prior given twice");
            have_prior = true;
            if (row.size() == 2 && row[1] == "uniform") {
                prior_uniform = true;
            } else if (row.size() >= 2) {
                for (std::size_t i = 1; i < row.size(); ++i) {
                    auto [label, value] = split_equals(row[i], "prior");
                    prior_entries.emplace_back(label, parse_rational(value));
                }
            } else {
                fail(Errc::bad_syntax, "prior line wants 'uniform' or '<label>=<p/q> ...'");
            }
        } else if (key == "probe") {
            if (row.size() != 2) fail(Errc::bad_syntax, "probe line wants one symbol");
            if (probe) fail(Errc::bad_syntax, "probe given twice");
            probe = row[1];
        } else if (key == "trials") {
            if (row.size() != 2) fail(Errc::bad_syntax, "trials line wants one number");
            if (trials) fail(Errc::bad_syntax, "trials given twice");
            trials = parse_u64(row[1], "trials");
        } else if (key == "seed") {
            if (row.size() != 2) fail(Errc::bad_syntax, "seed line wants one number");
            seed = parse_u64(row[1], "seed");
        } else {
            fail(Errc::bad_syntax, "unexpected keyword '" + key + "' in experiment file");
        }
    }
    if (!kind) fail(Errc::bad_syntax, "experiment file misses the model line");
    if (!probe) fail(Errc::bad_syntax, "experiment file misses the probe line");
    if (!trials) fail(Errc::bad_syntax, "experiment file misses the trials line");
    if (!have_prior) prior_uniform = true;

    std::string path = model_path;
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    std::string model_text = read_file(path);

    std::variant<Gum, MealyAutomaton> model;
    const std::vector<std::string>* carriers;
    if (*kind == ModelKind::gum) {
        model = parse_gum(model_text);
        carriers = &std::get<Gum>(model).ball_types;
    } else {
        model = parse_automaton(model_text);
        carriers = &std::get<MealyAutomaton>(model).states;
    }

    std::vector<Rat> prior(carriers->size(), Rat(0));
    if (prior_uniform) {
        for (auto& p : prior) p = Rat(1) / Rat(static_cast<int>(carriers->size()));
    } else {
        std::vector<bool> set(carriers->size(), false);
        for (const auto& [label, value] : prior_entries) {
            int idx = -1;
            for (std::size_t i = 0; i < carriers->size(); ++i)
                if ((*carriers)[i] == label) idx = static_cast<int>(i);
            if (idx < 0)
                fail(*kind == ModelKind::gum ? Errc::unknown_ball_type : Errc::unknown_state,
                     "prior names unknown label '" + label + "'");
            if (set[idx]) fail(Errc::duplicate_id, "prior sets '" + label + "' twice");
            set[idx] = true;
            prior[idx] = value;
        }
    }
    return make_experiment(std::move(model), std::move(prior), *probe, *trials, seed);
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string approx(const Rat& value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value.get_d());
    return buf;
}

}  // namespace

std::string write_report_table(const FrequencyReport& r) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"outcome", "count", "empirical", "predicted"});
    for (const auto& row : r.rows)
        grid.push_back({row.outcome, std::to_string(row.count), approx(row.empirical),
                        rat_to_string(row.predicted)});
    std::vector<std::size_t> width(4, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (c) out += "  ";
            out += c + 1 < 4 ? pad(row[c], width[c]) : row[c];
        }
        out += '\n';
    }
    out += '\n';
    out += "trials " + std::to_string(r.trials) + '\n';
    out += "seed " + std::to_string(r.seed) + '\n';
    out += "total-variation " + rat_to_string(r.total_variation) + " (~" +
           approx(r.total_variation) + ")\n";
    out += "prng " + r.prng + '\n';
    return out;
}

std::string write_report_kv(const FrequencyReport& r) {
    std::string out;
    out += "trials=" + std::to_string(r.trials) + '\n';
    out += "seed=" + std::to_string(r.seed) + '\n';
    out += "prng=" + r.prng + '\n';
    out += "total-variation=" + rat_to_string(r.total_variation) + '\n';
    for (const auto& row : r.rows) {
        out += "outcome." + row.outcome + ".count=" + std::to_string(row.count) + '\n';
        out += "outcome." + row.outcome + ".empirical=" + rat_to_string(row.empirical) + '\n';
        out += "outcome." + row.outcome + ".predicted=" + rat_to_string(row.predicted) + '\n';
    }
    return out;
}

std::string export_dot(const Diagram& d) {
    auto quote = [](const std::string& id) {
        std::string q = "\"";
        for (char ch : id) {
            if (ch == '"' || ch == '\\') q += '\\';
            q += ch;
        }
        return q + "\"";
    };
    std::string out = "graph logic {\n";
    for (const auto& a : d.atoms) out += "  " + quote(a) + ";\n";
    for (const auto& block : d.blocks)
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            out += "  " + quote(d.atoms[block[i]]) + " -- " + quote(d.atoms[block[i + 1]]) + ";\n";
    out += "}\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::bad_syntax, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace plogic
