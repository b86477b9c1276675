#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace plogic {

// Error conditions raised by the library. The CLI maps these onto its exit
// codes (bad_syntax -> 1, empty_state_set -> 3, everything else -> 2) and
// tests match on them.
enum class Errc {
    bad_syntax,        // malformed text input
    duplicate_id,      // repeated identifier where uniqueness is required
    unknown_atom,      // block references an atom not in the atom list
    empty_block,
    isolated_atom,     // atom not covered by any block
    not_a_partition,   // cells overlap or do not cover the ground set
    unknown_color,
    unknown_ball_type,
    unknown_symbol,
    unknown_input,
    unknown_state,
    unknown_output,
    incomplete_lookup,  // lookup/transition/output table not total
    not_two_valued,     // state violates the one-true-atom-per-block rule
    bad_state,          // rational state violates nonnegativity/block sums
    empty_state_set,
    dimension_mismatch,
    bijection_arity_mismatch,
    size_limit_exceeded,
    bad_experiment,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace plogic
