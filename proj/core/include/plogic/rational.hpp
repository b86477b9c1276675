#pragma once

#include <gmpxx.h>

#include <string>

namespace plogic {

// Exact rational arithmetic throughout; no floating point is involved in any
// feasibility or prediction result.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// Errc::bad_syntax on anything else, including a zero denominator.
Rat parse_rational(const std::string& token);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

}  // namespace plogic
