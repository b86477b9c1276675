#include "plogic/feasibility.hpp"
#include "plogic/gum.hpp"
#include "plogic/io.hpp"
#include "plogic/iso.hpp"
#include "plogic/states.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

using namespace plogic;

std::string fixture(const std::string& name) {
    return std::string(PLOGIC_FIXTURES_DIR) + "/" + name;
}

Diagram load(const std::string& name) { return parse_logic(read_file(fixture(name))); }

// chain of three-atom blocks glued at shared endpoints, 2n+1 atoms
Diagram chain(int n) {
    std::vector<std::string> atoms;
    for (int i = 1; i <= 2 * n + 1; ++i) atoms.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> blocks;
    for (int i = 0; i < n; ++i)
        blocks.push_back({atoms[2 * i], atoms[2 * i + 1], atoms[2 * i + 2]});
    return make_diagram(atoms, blocks);
}

void BM_EnumerateBug(benchmark::State& state) {
    Diagram d = load("bug.logic");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_two_valued_states(d));
}
BENCHMARK(BM_EnumerateBug);

void BM_EnumerateChain(benchmark::State& state) {
    Diagram d = chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_two_valued_states(d));
}
BENCHMARK(BM_EnumerateChain)->Arg(8)->Arg(16)->Arg(24);

void BM_CanonicalForm(benchmark::State& state) {
    Diagram d = load("bug.logic");
    PartitionLogic pl = partition_logic_from_states(d, enumerate_two_valued_states(d));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(pl));
}
BENCHMARK(BM_CanonicalForm);

void BM_ConvexMembership(benchmark::State& state) {
    Diagram d = load("pentagon.logic");
    auto states = enumerate_two_valued_states(d);
    auto target = make_rational_state(
        d, parse_rational_vectors(read_file(fixture("wright.state")), d.atoms.size())[0]);
    for (auto _ : state) benchmark::DoNotOptimize(convex_membership(target, states));
}
BENCHMARK(BM_ConvexMembership);

void BM_LogicOfGum(benchmark::State& state) {
    Diagram d = load("bug.logic");
    Gum g = gum_from_states(d, enumerate_two_valued_states(d));
    for (auto _ : state) benchmark::DoNotOptimize(logic_of_gum(g));
}
BENCHMARK(BM_LogicOfGum);

}  // namespace

BENCHMARK_MAIN();
