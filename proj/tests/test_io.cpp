#include "plogic/errors.hpp"
#include "plogic/io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace plogic;

namespace {

template <typename Fn>
Errc code_of(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::unknown_atom;  // sentinel, tests never expect it
}

}  // namespace

TEST_CASE("fixtures are stored in the writers' normal form") {
    for (const char* name : {"l12.logic", "bug.logic", "pentagon.logic"}) {
        std::string text = read_file(support::fixture(name));
        CHECK(write_logic(parse_logic(text)) == text);
    }
    std::string gum_text = read_file(support::fixture("l12.gum"));
    CHECK(write_gum(parse_gum(gum_text)) == gum_text);
    std::string am_text = read_file(support::fixture("l12.am"));
    CHECK(write_automaton(parse_automaton(am_text)) == am_text);
}

TEST_CASE("write then parse is the identity") {
    Diagram d = support::load_diagram("triangle.logic");
    CHECK(parse_logic(write_logic(d)) == d);
    Gum g = parse_gum(read_file(support::fixture("l12.gum")));
    CHECK(parse_gum(write_gum(g)) == g);
    MealyAutomaton a = parse_automaton(read_file(support::fixture("l12.am")));
    CHECK(parse_automaton(write_automaton(a)) == a);
}

TEST_CASE("parsers shrug off whitespace and comments") {
    Diagram clean = parse_logic("atoms a b\nblock a b\n");
    CHECK(parse_logic("  atoms   a  b # ids\n\n# whole line\n\tblock a b  \n") == clean);
    Gum g = parse_gum("colors c\nsymbols v w\nball u : c=v\n");
    CHECK(parse_gum("# urn\n  colors c  # one color\nsymbols   v w\n ball u :  c=v\n") == g);
    MealyAutomaton a =
        parse_automaton("states s\ninputs i\noutputs o\ndelta s i -> s\nlambda s i -> o\n");
    CHECK(parse_automaton("states s # S\ninputs i\noutputs o\n\n  delta s i ->  s\n"
                          "lambda  s i -> o # out\n") == a);
}

TEST_CASE("logic parse errors") {
    CHECK(code_of([] { parse_logic(""); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_logic("block a\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_logic("atoms a\nblok a\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_logic("atoms a b\nblock a c\n"); }) == Errc::unknown_atom);
    CHECK(code_of([] { parse_logic("atoms a a\nblock a\n"); }) == Errc::duplicate_id);
}

TEST_CASE("urn parse errors") {
    CHECK(code_of([] { parse_gum("symbols v\ncolors c\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_gum("colors c\nsymbols v\nurn u : c=v\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_gum("colors c\nsymbols v\nball u c=v\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_gum("colors c\nsymbols v\nball u : d=v\n"); }) ==
          Errc::unknown_color);
    CHECK(code_of([] { parse_gum("colors c\nsymbols v\nball u : c=v c=v\n"); }) ==
          Errc::duplicate_id);
    CHECK(code_of([] { parse_gum("colors c d\nsymbols v\nball u : c=v\n"); }) ==
          Errc::incomplete_lookup);
    CHECK(code_of([] { parse_gum("colors c\nsymbols v\nball u : c=w\n"); }) ==
          Errc::unknown_symbol);
}

TEST_CASE("automaton parse errors") {
    const std::string head = "states s\ninputs i\noutputs o\n";
    CHECK(code_of([] { parse_automaton("states s\noutputs o\ninputs i\n"); }) ==
          Errc::bad_syntax);
    CHECK(code_of([&] { parse_automaton(head + "delta s i => s\nlambda s i -> o\n"); }) ==
          Errc::bad_syntax);
    CHECK(code_of([&] { parse_automaton(head + "delta t i -> s\nlambda s i -> o\n"); }) ==
          Errc::unknown_state);
    CHECK(code_of([&] { parse_automaton(head + "delta s j -> s\nlambda s i -> o\n"); }) ==
          Errc::unknown_input);
    CHECK(code_of([&] {
              parse_automaton(head + "delta s i -> s\ndelta s i -> s\nlambda s i -> o\n");
          }) == Errc::duplicate_id);
    CHECK(code_of([&] { parse_automaton(head + "delta s i -> s\n"); }) ==
          Errc::incomplete_lookup);
    CHECK(code_of([&] { parse_automaton(head + "delta s i -> s\nlambda s i -> x\n"); }) ==
          Errc::unknown_output);
}

TEST_CASE("model sniffing keys on the first keyword") {
    CHECK(sniff_model(read_file(support::fixture("l12.logic"))) == ModelKind::logic);
    CHECK(sniff_model(read_file(support::fixture("l12.gum"))) == ModelKind::gum);
    CHECK(sniff_model(read_file(support::fixture("l12.am"))) == ModelKind::automaton);
    CHECK(sniff_model("# leading comment\natoms x\nblock x\n") == ModelKind::logic);
    CHECK(code_of([] { sniff_model("bogus\n"); }) == Errc::bad_syntax);
    CHECK(code_of([] { sniff_model("# only a comment\n"); }) == Errc::bad_syntax);
}

TEST_CASE("state vectors read and write") {
    auto states = parse_states("0,1,0\n# m2\n1, 0 ,0 # spaced\n", 3);
    REQUIRE(states.size() == 2);
    CHECK(states[0] == TwoValuedState{0, 1, 0});
    CHECK(states[1] == TwoValuedState{1, 0, 0});
    CHECK(write_states(states) == "0,1,0\n1,0,0\n");
    CHECK(write_state(states[0]) == "0,1,0");
    CHECK(parse_states("", 3).empty());
    CHECK(code_of([] { parse_states("0,2,0\n", 3); }) == Errc::bad_syntax);
    CHECK(code_of([] { parse_states("0,1\n", 3); }) == Errc::dimension_mismatch);
}

TEST_CASE("rational vectors read the pentagon target") {
    auto rows = parse_rational_vectors(read_file(support::fixture("wright.state")), 10);
    REQUIRE(rows.size() == 1);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(rows[0][i] == (i % 2 == 0 ? Rat(1) / 2 : Rat(0)));
    auto mixed = parse_rational_vectors("1/3, 2/3 # one line\n", 2);
    CHECK(mixed == std::vector<std::vector<Rat>>{{Rat(1) / 3, Rat(2) / 3}});
    CHECK(code_of([] { parse_rational_vectors("1/2,1/2\n", 3); }) == Errc::dimension_mismatch);
    CHECK(code_of([] { parse_rational_vectors("1/0\n", 1); }) == Errc::bad_syntax);
}

TEST_CASE("translation maps print in three sections") {
    TranslationMap m;
    m.ground_map = {{"1", "s1"}, {"2", "s2"}};
    m.context_map = {{"red", "0"}};
    m.symbol_map = {{"a", "x"}};
    CHECK(write_translation_map(m) ==
          "map 1 -> s1\nmap 2 -> s2\n\nmap red -> 0\n\nmap a -> x\n");
}

TEST_CASE("experiment files resolve the model path against their directory") {
    Experiment e = parse_experiment(read_file(support::fixture("l12-red.experiment")),
                                    support::fixtures_dir());
    CHECK(e.trials == 100000);
    CHECK(e.seed == 1);
    CHECK(e.probe == "red");
    REQUIRE(e.prior.size() == 5);
    for (const auto& p : e.prior) CHECK(p == Rat(1) / 5);
    CHECK(std::get<Gum>(e.model) == parse_gum(read_file(support::fixture("l12.gum"))));
}

TEST_CASE("experiment priors may name the carriers") {
    std::string text = "model gum " + support::fixture("l12.gum") +
                       "\nprior 1=1/2 5=1/2\nprobe green\ntrials 12\n";
    Experiment e = parse_experiment(text, "");  // absolute path, base dir unused
    CHECK(e.seed == 0);
    CHECK(e.prior == std::vector<Rat>{Rat(1) / 2, 0, 0, 0, Rat(1) / 2});
}

TEST_CASE("experiment parse errors") {
    const std::string model = "model gum " + support::fixture("l12.gum") + "\n";
    CHECK(code_of([&] { parse_experiment("probe red\ntrials 1\n", ""); }) == Errc::bad_syntax);
    CHECK(code_of([&] { parse_experiment(model + "trials 1\n", ""); }) == Errc::bad_syntax);
    CHECK(code_of([&] { parse_experiment(model + "probe red\n", ""); }) == Errc::bad_syntax);
    CHECK(code_of([&] {
              parse_experiment(model + "probe red\ntrials 1\nprobe red\ntrials 1\n", "");
          }) == Errc::bad_syntax);
    CHECK(code_of([&] { parse_experiment(model + "probe red\ntrials x\n", ""); }) ==
          Errc::bad_syntax);
    CHECK(code_of([&] { parse_experiment(model + "rng 3\nprobe red\ntrials 1\n", ""); }) ==
          Errc::bad_syntax);
    CHECK(code_of([&] {
              parse_experiment(model + "prior 9=1\nprobe red\ntrials 1\n", "");
          }) == Errc::unknown_ball_type);
    CHECK(code_of([&] {
              parse_experiment(model + "prior 1=1/2 1=1/2\nprobe red\ntrials 1\n", "");
          }) == Errc::duplicate_id);
    CHECK(code_of([&] {
              parse_experiment(model + "prior 1=1/2\nprobe red\ntrials 1\n", "");
          }) == Errc::bad_experiment);
    CHECK(code_of([&] {
              parse_experiment("model gum /nonexistent.gum\nprobe red\ntrials 1\n", "");
          }) == Errc::bad_syntax);
}

TEST_CASE("report writers render a fixed layout") {
    FrequencyReport r;
    r.trials = 10;
    r.seed = 3;
    r.prng = "mt19937_64-rejection";
    r.total_variation = Rat(1) / 10;
    OutcomeCount row;
    row.outcome = "1";
    row.count = 4;
    row.empirical = Rat(2) / 5;
    row.predicted = Rat(1) / 2;
    r.rows.push_back(row);

    CHECK(write_report_table(r) ==
          "outcome  count  empirical  predicted\n"
          "1        4      0.400000   1/2\n"
          "\n"
          "trials 10\n"
          "seed 3\n"
          "total-variation 1/10 (~0.100000)\n"
          "prng mt19937_64-rejection\n");
    CHECK(write_report_kv(r) ==
          "trials=10\n"
          "seed=3\n"
          "prng=mt19937_64-rejection\n"
          "total-variation=1/10\n"
          "outcome.1.count=4\n"
          "outcome.1.empirical=2/5\n"
          "outcome.1.predicted=1/2\n");
}

TEST_CASE("dot export chains each block") {
    CHECK(export_dot(support::load_diagram("l12.logic")) ==
          "graph logic {\n"
          "  \"1\";\n"
          "  \"2\";\n"
          "  \"3\";\n"
          "  \"4\";\n"
          "  \"5\";\n"
          "  \"1\" -- \"2\";\n"
          "  \"2\" -- \"5\";\n"
          "  \"3\" -- \"4\";\n"
          "  \"4\" -- \"5\";\n"
          "}\n");
    // single-block degenerate case plus escaping
    Diagram d = make_diagram({"a\"b"}, {{"a\"b"}});
    CHECK(export_dot(d) == "graph logic {\n  \"a\\\"b\";\n}\n");
}

TEST_CASE("read_file reports unreadable paths") {
    CHECK(code_of([] { read_file("/nonexistent/plogic-io-test"); }) == Errc::bad_syntax);
}
