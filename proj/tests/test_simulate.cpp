#include <doctest.h>

#include <cmath>
#include <set>

#include "binlcl/simulate.hpp"
#include "binlcl/solve.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

using namespace binlcl;

TEST_CASE("view encoding is canonical and extends with the radius") {
    ColoredTree t = gen_complete_biregular(3, 2, 2, Color::White);
    View v0(t, 0, 0, true);
    View v0b(t, 0, 0, true);
    CHECK(v0.encode() == v0b.encode());
    CHECK(View(t, 0, 1, true).encode() != v0.encode());

    // Stripped of ids, all depth-0 views of degree-3 whites coincide.
    int first = -1;
    for (int v = 0; v < t.n(); ++v) {
        if (t.color(v) != Color::White || t.degree(v) != 3) continue;
        if (first < 0) first = v;
        CHECK(View(t, v, 0, false).encode() == View(t, first, 0, false).encode());
    }
    // With ids they differ.
    ColoredTree big = gen_random_biregular(3, 2, 50, 5);
    std::set<std::string> encodings;
    for (int v = 0; v < big.n(); ++v) encodings.insert(View(big, v, 0, true).encode());
    CHECK((int)encodings.size() == big.n());
}

TEST_CASE("constant algorithm decides at round zero") {
    ColoredTree t = gen_random_biregular(3, 2, 300, 8);
    // label lowest min(2, deg) ports 1, rest 0
    WhiteAlgorithm algo = [](const View& view) {
        const ColoredTree& tr = view.tree();
        int deg = tr.degree(view.root());
        std::vector<int8_t> labels(deg, 0);
        for (int k = 0; k < std::min(2, deg); ++k) labels[k] = 1;
        return Decision{true, labels};
    };
    SimulationResult res = run_local_simulation(t, algo);
    CHECK(res.rounds == 0);
    for (auto [id, round] : res.per_node_round) CHECK(round == 0);
    // every edge labeled
    for (int8_t v : res.labeling.x) CHECK((v == 0 || v == 1));
}

TEST_CASE("an algorithm that never decides hits the budget") {
    ColoredTree t = gen_path(9);
    WhiteAlgorithm never = [](const View&) { return Decision{}; };
    SimOptions opts;
    opts.max_rounds = 5;
    CHECK_THROWS_AS(run_local_simulation(t, never, opts), Error);
}

TEST_CASE("inconsistent outputs across identical views are detected") {
    ColoredTree t = gen_path(9);
    // Without ids, degree-1 whites at both path ends share a view at radius 0
    // but answer differently based on internal state.
    int counter = 0;
    WhiteAlgorithm fickle = [&counter](const View& view) {
        const ColoredTree& tr = view.tree();
        int deg = tr.degree(view.root());
        if (deg != 1) {
            if (view.radius() < 1) return Decision{};
            return Decision{true, std::vector<int8_t>(deg, 0)};
        }
        return Decision{true, std::vector<int8_t>(deg, (int8_t)(counter++ % 2))};
    };
    SimOptions opts;
    opts.with_ids = false;
    CHECK_THROWS_WITH_AS(run_local_simulation(t, fickle, opts),
                         doctest::Contains("identical views"), Error);
}

TEST_CASE("constant solvers simulate within one round") {
    for (const BinaryProblem& p :
         {BinaryProblem{4, 2, "00100", "111"}, BinaryProblem{2, 2, "101", "101"},
          BinaryProblem{2, 2, "101", "011"}, BinaryProblem{3, 3, "1111", "0010"}}) {
        ColoredTree t = gen_random_biregular(p.d, p.delta, 400, 13);
        SimulationResult res = run_local_simulation(t, make_view_algorithm(p, t));
        CHECK(res.rounds <= 1);
        CHECK(verify_labeling(t, p, res.labeling).empty());
    }
}

TEST_CASE("logarithmic solvers simulate in O(log n) rounds") {
    for (const BinaryProblem& p :
         {BinaryProblem{3, 2, "1110", "010"}, BinaryProblem{3, 2, "0110", "101"},
          BinaryProblem{3, 3, "0100", "0100"}, BinaryProblem{3, 2, "0100", "101"}}) {
        ColoredTree t = gen_random_biregular(p.d, p.delta, 4000, 29);
        SimulationResult res = run_local_simulation(t, make_view_algorithm(p, t));
        CHECK(verify_labeling(t, p, res.labeling).empty());
        CHECK(res.rounds <= 48.0 * std::log2((double)t.n()));
    }
}

TEST_CASE("sinkless orientation on a path simulates in few rounds") {
    // all whites are unconstrained there; the decision radius stays small
    BinaryProblem p{3, 2, "1110", "010"};
    ColoredTree path = gen_path(2001);
    SimulationResult res = run_local_simulation(path, make_view_algorithm(p, path));
    CHECK(verify_labeling(path, p, res.labeling).empty());
    CHECK(res.rounds <= 64);
}

TEST_CASE("global solver simulates within 2n rounds") {
    BinaryProblem p{3, 2, "1001", "010"};
    ColoredTree t = gen_caterpillar(3, 60);
    SimulationResult res = run_local_simulation(t, make_view_algorithm(p, t));
    CHECK(verify_labeling(t, p, res.labeling).empty());
    CHECK(res.rounds <= 2 * t.n());
    // the two-coloring really is global on a caterpillar: rounds scale with
    // the path length
    CHECK(res.rounds >= 30);
}

TEST_CASE("simulation on degenerate tiny trees") {
    BinaryProblem p{3, 2, "1110", "010"};
    ColoredTree one = gen_path(1);
    SimulationResult r1 = run_local_simulation(one, make_view_algorithm(p, one));
    CHECK(r1.labeling.x.empty());
    ColoredTree two = gen_path(2);
    SimulationResult r2 = run_local_simulation(two, make_view_algorithm(p, two));
    CHECK(verify_labeling(two, p, r2.labeling).empty());
}

TEST_CASE("rounds is the maximum per-node decision round") {
    BinaryProblem p{3, 2, "1110", "010"};
    ColoredTree t = gen_random_biregular(3, 2, 300, 41);
    SimulationResult res = run_local_simulation(t, make_view_algorithm(p, t));
    int max_round = 0, whites = 0;
    for (int v = 0; v < t.n(); ++v) whites += t.color(v) == Color::White;
    CHECK((int)res.per_node_round.size() == whites);
    for (auto [id, round] : res.per_node_round) max_round = std::max(max_round, round);
    CHECK(res.rounds == max_round);
}

TEST_CASE("local and centralized labelings agree for layered solvers") {
    BinaryProblem p{3, 2, "0110", "101"};
    ColoredTree t = gen_random_biregular(3, 2, 500, 3);
    SimulationResult res = run_local_simulation(t, make_view_algorithm(p, t));
    EdgeLabeling centralized = solve(p, t);
    CHECK(res.labeling.x == centralized.x);
}

TEST_CASE("simulation in the port-numbering mode stays consistent") {
    // Strip ids and run on highly symmetric trees: the harness then really
    // compares decisions across nodes with identical views, for each of the
    // layered solver routes.
    struct Case {
        BinaryProblem p;
        ColoredTree t;
    };
    std::vector<Case> cases;
    cases.push_back({{3, 2, "0100", "101"}, gen_complete_biregular(3, 2, 4, Color::White)});
    cases.push_back({{3, 3, "0100", "0100"}, gen_complete_biregular(3, 3, 5, Color::White)});
    cases.push_back({{3, 2, "1110", "010"}, gen_complete_biregular(3, 2, 6, Color::White)});
    cases.push_back({{3, 2, "0100", "101"}, gen_caterpillar(3, 40)});
    cases.push_back({{4, 2, "00100", "111"}, gen_complete_biregular(4, 2, 3, Color::White)});
    for (const Case& c : cases) {
        SimOptions opts;
        opts.with_ids = false;
        SimulationResult res = run_local_simulation(c.t, make_view_algorithm(c.p, c.t), opts);
        CHECK(verify_labeling(c.t, c.p, res.labeling).empty());
    }
}
