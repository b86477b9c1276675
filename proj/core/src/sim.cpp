#include "plogic/sim.hpp"

#include "plogic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace plogic {

namespace {

// Uniform access to the sampled structure: who gets drawn, what is observed,
// and the table joining them.
struct ModelView {
    const std::vector<std::string>* carriers;
    const std::vector<std::string>* outcomes;
    const std::vector<std::vector<int>>* table;
};

ModelView view(const std::variant<Gum, MealyAutomaton>& model) {
    if (const Gum* g = std::get_if<Gum>(&model)) return {&g->ball_types, &g->symbols, &g->lookup};
    const MealyAutomaton& a = std::get<MealyAutomaton>(model);
    return {&a.states, &a.outputs, &a.lambda};
}

int probe_index(const Experiment& e) {
    if (const Gum* g = std::get_if<Gum>(&e.model)) {
        int c = g->color_index(e.probe);
        if (c < 0) fail(Errc::unknown_color, "probe '" + e.probe + "' is not a color");
        return c;
    }
    const MealyAutomaton& a = std::get<MealyAutomaton>(e.model);
    int i = a.input_index(e.probe);
    if (i < 0) fail(Errc::unknown_input, "probe '" + e.probe + "' is not an input");
    return i;
}

}  // namespace

Experiment make_experiment(std::variant<Gum, MealyAutomaton> model, std::vector<Rat> prior,
                           std::string probe, std::uint64_t trials, std::uint64_t seed) {
    Experiment e{std::move(model), std::move(prior), std::move(probe), trials, seed};
    ModelView v = view(e.model);
    if (e.prior.size() != v.carriers->size())
        fail(Errc::dimension_mismatch, "prior has " + std::to_string(e.prior.size()) +
                                           " entries for " + std::to_string(v.carriers->size()) +
                                           " of them");
    Rat sum = 0;
    for (const auto& p : e.prior) {
        if (p < 0) fail(Errc::bad_experiment, "negative prior weight");
        sum += p;
    }
    if (sum != 1) fail(Errc::bad_experiment, "prior sums to " + rat_to_string(sum));
    probe_index(e);
    return e;
}

std::vector<std::pair<std::string, Rat>> predict(const Experiment& e) {
    ModelView v = view(e.model);
    int c = probe_index(e);
    std::vector<Rat> mass(v.outcomes->size(), Rat(0));
    for (std::size_t u = 0; u < v.carriers->size(); ++u) mass[(*v.table)[u][c]] += e.prior[u];
    std::vector<std::pair<std::string, Rat>> out;
    for (std::size_t o = 0; o < mass.size(); ++o)
        if (mass[o] != 0) out.emplace_back((*v.outcomes)[o], mass[o]);
    return out;
}

FrequencyReport simulate(const Experiment& e) {
    ModelView v = view(e.model);
    int c = probe_index(e);

    // common denominator and cumulative integer weights; the prior is exactly
    // representable as weights w_u / D with sum w_u = D
    mpz_class lcm = 1;
    for (const auto& p : e.prior) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_den_mpz_t());
    if (lcm > mpz_class(std::numeric_limits<std::uint64_t>::max()))
        fail(Errc::bad_experiment, "prior denominators exceed the sampler range");
    const std::uint64_t denom = lcm.get_ui();
    std::vector<std::uint64_t> cumulative;
    {
        std::uint64_t acc = 0;
        for (const auto& p : e.prior) {
            mpz_class w = p.get_num() * (lcm / p.get_den());
            acc += w.get_ui();
            cumulative.push_back(acc);
        }
    }

    // Fixed-threshold rejection: accept x >= 2^64 mod D, take x mod D. The
    // accepted range has size divisible by D, so the draw is exactly uniform
    // and bit-stable across platforms for a fixed seed.
    std::mt19937_64 gen(e.seed);
    const std::uint64_t threshold = (0 - denom) % denom;
    std::vector<std::uint64_t> counts(v.outcomes->size(), 0);
    for (std::uint64_t t = 0; t < e.trials; ++t) {
        std::uint64_t x;
        do {
            x = gen();
        } while (x < threshold);
        std::uint64_t value = x % denom;
        std::size_t u =
            std::upper_bound(cumulative.begin(), cumulative.end(), value) - cumulative.begin();
        ++counts[(*v.table)[u][c]];
    }

    std::vector<Rat> mass(v.outcomes->size(), Rat(0));
    for (std::size_t u = 0; u < v.carriers->size(); ++u) mass[(*v.table)[u][c]] += e.prior[u];

    FrequencyReport report;
    report.trials = e.trials;
    report.seed = e.seed;
    report.prng = "mt19937_64-rejection";
    Rat tv = 0;
    for (std::size_t o = 0; o < mass.size(); ++o) {
        if (mass[o] == 0 && counts[o] == 0) continue;
        OutcomeCount row;
        row.outcome = (*v.outcomes)[o];
        row.count = counts[o];
        row.empirical = e.trials ? Rat(mpz_class(counts[o])) / Rat(mpz_class(e.trials)) : Rat(0);
        row.predicted = mass[o];
        tv += abs(row.empirical - row.predicted);
        report.rows.push_back(std::move(row));
    }
    report.total_variation = tv / 2;
    return report;
}

double default_tv_threshold(std::size_t outcomes, std::uint64_t trials) {
    if (trials == 0) return std::numeric_limits<double>::infinity();
    return 5.0 * std::sqrt(double(outcomes) / double(trials));
}

}  // namespace plogic
