#include "plogic/rational.hpp"

#include "plogic/errors.hpp"

#include <cctype>

namespace plogic {

namespace {

bool digits_only(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return digits_only(s, from);
}

}  // namespace

Rat parse_rational(const std::string& token) {
    auto slash = token.find('/');
    std::string num = token.substr(0, slash);
    std::string den = slash == std::string::npos ? "" : token.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string::npos && !digits_only(den, 0)))
        fail(Errc::bad_syntax, "not a rational number: '" + token + "'");
    // explicit base 10: gmp's default base 0 would read leading zeros as octal
    std::string cleaned = token[0] == '+' ? token.substr(1) : token;
    Rat value(cleaned, 10);
    if (value.get_den() == 0) fail(Errc::bad_syntax, "zero denominator: '" + token + "'");
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace plogic
