#include "plogic/translate.hpp"

#include "plogic/errors.hpp"

#include <unordered_map>
#include <unordered_set>

namespace plogic {

namespace {

// Reorders `pairs` to `source` order and returns the target labels, checking
// the pairs form a bijection out of `source`.
std::vector<std::string> apply_bijection(const std::vector<std::string>& source,
                                         const std::vector<std::pair<std::string, std::string>>& pairs,
                                         const char* what) {
    if (pairs.size() != source.size())
        fail(Errc::bijection_arity_mismatch, std::string(what) + " map has " +
                                                 std::to_string(pairs.size()) + " pairs for " +
                                                 std::to_string(source.size()) + " labels");
    std::unordered_map<std::string, std::string> to;
    std::unordered_set<std::string> images;
    for (const auto& [from, target] : pairs) {
        if (target.empty())
            fail(Errc::bijection_arity_mismatch, std::string(what) + " map has an empty image");
        if (!to.emplace(from, target).second)
            fail(Errc::bijection_arity_mismatch,
                 std::string(what) + " map lists '" + from + "' twice");
        if (!images.insert(target).second)
            fail(Errc::bijection_arity_mismatch,
                 std::string(what) + " map reuses image '" + target + "'");
    }
    std::vector<std::string> ordered;
    for (const auto& label : source) {
        auto it = to.find(label);
        if (it == to.end())
            fail(Errc::bijection_arity_mismatch,
                 std::string(what) + " map misses '" + label + "'");
        ordered.push_back(it->second);
    }
    return ordered;
}

std::vector<std::pair<std::string, std::string>> zip(const std::vector<std::string>& from,
                                                     const std::vector<std::string>& to) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from[i], to[i]);
    return pairs;
}

}  // namespace

TranslationMap inverse(const TranslationMap& m) {
    TranslationMap inv;
    for (const auto& [a, b] : m.ground_map) inv.ground_map.emplace_back(b, a);
    for (const auto& [a, b] : m.context_map) inv.context_map.emplace_back(b, a);
    for (const auto& [a, b] : m.symbol_map) inv.symbol_map.emplace_back(b, a);
    return inv;
}

TranslationMap positional_gum_to_automaton_map(const Gum& g) {
    TranslationMap m;
    m.ground_map = zip(g.ball_types, g.ball_types);
    std::vector<std::string> inputs;
    for (std::size_t j = 0; j < g.colors.size(); ++j) inputs.push_back(std::to_string(j));
    m.context_map = zip(g.colors, inputs);
    m.symbol_map = zip(g.symbols, g.symbols);
    return m;
}

TranslationMap positional_automaton_to_gum_map(const MealyAutomaton& a) {
    TranslationMap m;
    m.ground_map = zip(a.states, a.states);
    m.context_map = zip(a.inputs, a.inputs);
    m.symbol_map = zip(a.outputs, a.outputs);
    return m;
}

std::pair<MealyAutomaton, TranslationMap> gum_to_automaton(
    const Gum& g, const std::optional<TranslationMap>& map) {
    TranslationMap m = map ? *map : positional_gum_to_automaton_map(g);

    MealyAutomaton a;
    a.states = apply_bijection(g.ball_types, m.ground_map, "ball type");
    a.inputs = apply_bijection(g.colors, m.context_map, "color");
    a.outputs = apply_bijection(g.symbols, m.symbol_map, "symbol");
    for (std::size_t u = 0; u < g.ball_types.size(); ++u) {
        a.lambda.push_back(g.lookup[u]);  // output order mirrors symbol order
        a.delta.emplace_back(g.colors.size(), 0);
    }

    TranslationMap normalized;
    normalized.ground_map = zip(g.ball_types, a.states);
    normalized.context_map = zip(g.colors, a.inputs);
    normalized.symbol_map = zip(g.symbols, a.outputs);
    return {std::move(a), std::move(normalized)};
}

std::pair<Gum, TranslationMap> automaton_to_gum(const MealyAutomaton& a,
                                                const std::optional<TranslationMap>& map) {
    TranslationMap m = map ? *map : positional_automaton_to_gum_map(a);

    Gum g;
    g.ball_types = apply_bijection(a.states, m.ground_map, "state");
    g.colors = apply_bijection(a.inputs, m.context_map, "input");
    g.symbols = apply_bijection(a.outputs, m.symbol_map, "output");
    g.lookup = a.lambda;

    TranslationMap normalized;
    normalized.ground_map = zip(a.states, g.ball_types);
    normalized.context_map = zip(a.inputs, g.colors);
    normalized.symbol_map = zip(a.outputs, g.symbols);
    return {std::move(g), std::move(normalized)};
}

bool verify_round_trip(const Gum& g) {
    auto [a, forward] = gum_to_automaton(g);
    auto [back, inverse_map] = automaton_to_gum(a, inverse(forward));
    return back == g && inverse_map == inverse(forward);
}

}  // namespace plogic
