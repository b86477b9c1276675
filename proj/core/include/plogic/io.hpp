#pragma once

#include "plogic/automaton.hpp"
#include "plogic/diagram.hpp"
#include "plogic/feasibility.hpp"
#include "plogic/gum.hpp"
#include "plogic/sim.hpp"
#include "plogic/states.hpp"
#include "plogic/translate.hpp"

#include <string>
#include <vector>

namespace plogic {

// Text formats. All parsers are line-based, whitespace-tolerant and treat
// '#' to end-of-line as a comment; all writers emit a fixed normal form
// (single spaces, members in declared order), so serialization is bit-exact.

// Logic files: one "atoms <id> ..." line, then one "block <id> ..." per block.
Diagram parse_logic(const std::string& text);
std::string write_logic(const Diagram& d);

// Urn files: "colors ...", "symbols ...", then "ball <u> : <c>=<v> ..." per
// ball type with every color present.
Gum parse_gum(const std::string& text);
std::string write_gum(const Gum& g);

// Automaton files: "states ...", "inputs ...", "outputs ...", then
// "delta <s> <i> -> <s'>" and "lambda <s> <i> -> <o>" lines covering S x I.
MealyAutomaton parse_automaton(const std::string& text);
std::string write_automaton(const MealyAutomaton& a);

enum class ModelKind { logic, gum, automaton };

// Looks at the first keyword to tell the three model formats apart.
ModelKind sniff_model(const std::string& text);

// State files: one comma-separated vector per line, values in atom order.
// Two-valued states take 0/1 entries, rational states also accept "p/q".
std::vector<TwoValuedState> parse_states(const std::string& text, std::size_t width);
std::string write_states(const std::vector<TwoValuedState>& states);
std::string write_state(const TwoValuedState& s);
std::vector<std::vector<Rat>> parse_rational_vectors(const std::string& text, std::size_t width);

// Translation maps: three "map <from> -> <to>" sections (ground, context,
// symbol) separated by blank lines.
std::string write_translation_map(const TranslationMap& m);

// Experiment files: "model (gum|am) <path>", "prior (uniform | <label>=<p/q> ...)",
// "probe <symbol>", "trials <n>", "seed <n>". The model path is resolved
// relative to `base_dir` unless absolute.
Experiment parse_experiment(const std::string& text, const std::string& base_dir);

// Aligned human-readable table resp. flat machine-readable key=value lines.
std::string write_report_table(const FrequencyReport& r);
std::string write_report_kv(const FrequencyReport& r);

// Greechie-style DOT text: atoms are nodes, each block is one chain of edges
// through its atoms (single-atom blocks degenerate to a node statement).
std::string export_dot(const Diagram& d);

// Reads a whole file; Errc::bad_syntax when unreadable.
std::string read_file(const std::string& path);

}  // namespace plogic
