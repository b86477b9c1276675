#pragma once

#include "plogic/automaton.hpp"
#include "plogic/gum.hpp"
#include "plogic/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace plogic {

// One sampling experiment: draw a ball type / initial state from `prior`,
// observe through a single color / feed a single input, tally the outcome.
struct Experiment {
    std::variant<Gum, MealyAutomaton> model;
    std::vector<Rat> prior;  // over ball types resp. states, in model order
    std::string probe;       // a color resp. an input symbol
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Validates prior (nonnegative, sums to exactly 1) and probe membership.
Experiment make_experiment(std::variant<Gum, MealyAutomaton> model, std::vector<Rat> prior,
                           std::string probe, std::uint64_t trials, std::uint64_t seed);

// Exact outcome distribution of the experiment: the prior pushed through the
// lookup/output table. Outcomes with zero mass are omitted; order follows
// the model's symbol/output declaration order.
std::vector<std::pair<std::string, Rat>> predict(const Experiment& e);

struct OutcomeCount {
    std::string outcome;
    std::uint64_t count = 0;
    Rat empirical;  // count/trials (0 when trials == 0)
    Rat predicted;
};

struct FrequencyReport {
    std::vector<OutcomeCount> rows;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rat total_variation;  // exact: (1/2) sum |empirical - predicted|
    std::string prng;     // sampling scheme identifier
};

// Runs the experiment. Sampling is mt19937_64 seeded with `seed`, mapped to
// the prior through fixed-threshold rejection over the common-denominator
// integer weights, so equal seeds give bit-identical reports. Priors whose
// denominator lcm exceeds 2^64-1 are rejected (Errc::bad_experiment).
FrequencyReport simulate(const Experiment& e);

// Distribution-free acceptance threshold for the total-variation distance of
// `trials` samples over `outcomes` outcomes: 5*sqrt(outcomes/trials).
double default_tv_threshold(std::size_t outcomes, std::uint64_t trials);

}  // namespace plogic
