// Acceptance suite: finite, exact checks of the headline guarantees. Each
// criterion prints one pass/fail line; the process exits nonzero if any
// criterion fails or runs past its budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "binlcl/classify.hpp"
#include "binlcl/general_problem.hpp"
#include "binlcl/layers.hpp"
#include "binlcl/oracle.hpp"
#include "binlcl/problem.hpp"
#include "binlcl/round_elim.hpp"
#include "binlcl/simulate.hpp"
#include "binlcl/solve.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"
#include "re_oracle.hpp"

using namespace binlcl;

namespace {

int failures = 0;

struct Checker {
    std::string detail;
    bool ok = true;
    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

void criterion(int index, const std::string& name, double budget_s,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_s)
        c.expect(false, "time budget exceeded (" + std::to_string(elapsed) + "s > " +
                            std::to_string(budget_s) + "s)");
    if (c.ok) {
        printf("[PASS] %2d. %-58s (%.2fs)\n", index, name.c_str(), elapsed);
    } else {
        printf("[FAIL] %2d. %-58s (%.2fs): %s\n", index, name.c_str(), elapsed, c.detail.c_str());
        ++failures;
    }
    fflush(stdout);
}

const double kLogRoundFactor = 8.0; // rounds <= kLogRoundFactor * log2(n) for log solvers

struct NamedProblem {
    const char* name;
    BinaryProblem p;
    Complexity complexity;
};

const std::vector<NamedProblem> kTableExamples = {
    {"contradiction", {3, 2, "0111", "100"}, Complexity::Unsolvable},
    {"trivial", {4, 2, "00100", "111"}, Complexity::Constant},
    {"two-coloring", {3, 2, "1001", "010"}, Complexity::Global},
    {"bipartite-splitting", {4, 4, "01110", "01110"}, Complexity::Logarithmic},
    {"sinkless-orientation", {3, 2, "1110", "010"}, Complexity::Logarithmic},
    {"sinkless-sourceless", {3, 2, "0110", "010"}, Complexity::Logarithmic},
    {"even-orientation", {3, 2, "1010", "010"}, Complexity::Logarithmic},
    {"regular-matching", {3, 2, "0100", "101"}, Complexity::Logarithmic},
    {"splitting", {3, 2, "0110", "101"}, Complexity::Logarithmic},
};

void criterion_table(Checker& c) {
    for (const auto& row : kTableExamples) {
        Classification cls = classify(row.p);
        c.expect(cls.complexity == row.complexity,
                 std::string(row.name) + " classified as " + to_string(cls.complexity));
    }
    c.expect(classify({3, 2, "1110", "010"}).primary_family == Family::VII, "SO family");
    c.expect(classify({3, 2, "1001", "010"}).primary_family == Family::Va, "two-coloring family");
    c.expect(classify({3, 2, "0111", "100"}).primary_family == Family::Ic, "contradiction family");
    c.expect(classify({4, 2, "00100", "111"}).primary_family == Family::IIIa, "trivial family");
}

void criterion_sweep(Checker& c) {
    auto problems = enumerate_problems(5, 5);
    c.expect(problems.size() == 14400, "expected 14400 problems");
    auto results = classify_sweep(problems);
    for (size_t i = 0; i < problems.size(); ++i) {
        const auto& p = problems[i];
        const auto& r = results[i];
        c.expect(!r.matched_families.empty(), "no family matched " + format_problem(p));
        for (Family f : r.matched_families)
            c.expect(family_complexity(f) == r.complexity,
                     "cross-class co-match at " + format_problem(p));
        for (const BinaryProblem& q : equivalent_set(p).members)
            c.expect(classify(q).complexity == r.complexity,
                     "equivalence class split at " + format_problem(p));
        if (p.d == 2 && p.delta == 2)
            c.expect(r.primary_family != Family::VII, "(2,2) problem in VII: " + format_problem(p));
    }
}

void criterion_oracle_concordance(Checker& c) {
    int checked = 0;
    for (const BinaryProblem& p : enumerate_problems(3, 3)) {
        ++checked;
        ColoredTree witness = standard_witness(p);
        bool oracle_solvable =
            brute_force_solve(witness, p, OracleMode::First).first.has_value();
        bool classified_solvable = classify(p).complexity != Complexity::Unsolvable;
        c.expect(oracle_solvable == classified_solvable,
                 "oracle/classifier disagree on " + format_problem(p));
        if (!classified_solvable) continue;
        EdgeLabeling x = solve(p, witness);
        c.expect(verify_labeling(witness, p, x).empty(),
                 "witness solution invalid for " + format_problem(p));
        for (uint64_t seed = 101; seed <= 105; ++seed) {
            ColoredTree t = gen_random_biregular(p.d, p.delta, 200, seed);
            EdgeLabeling y = solve(p, t);
            c.expect(verify_labeling(t, p, y).empty(),
                     "random-tree solution invalid for " + format_problem(p));
        }
    }
    c.expect(checked == 576, "expected 576 problems");
}

void criterion_rake_compress(Checker& c) {
    for (auto [d, delta] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}}) {
        for (int n : {1000, 10000, 100000}) {
            ColoredTree t = gen_random_biregular(d, delta, n, 1234 + n + d);
            for (int cc : {1, 3, 5}) {
                LayerDecomposition dec = rake_compress(t, cc);
                c.expect(dec.L <= 4.0 * cc * std::log2((double)t.n()) + 4.0,
                         "layer count too large at c=" + std::to_string(cc));
                for (size_t i = 0; i < dec.u_before.size(); ++i)
                    c.expect(dec.removed[i] * 2ll * cc >= dec.u_before[i],
                             "removal rate below |U|/(2c) at c=" + std::to_string(cc));
                for (int v = 0; v < t.n(); ++v) {
                    int deg_gi = 0;
                    for (int32_t u : t.neighbors(v))
                        if (dec.layer[u] >= dec.layer[v]) ++deg_gi;
                    c.expect(deg_gi <= 2, "layer degree claim violated");
                }
            }
        }
    }
}

std::vector<BinaryProblem> random_type7_problems(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<BinaryProblem> chosen;
    while ((int)chosen.size() < count) {
        int d = 2 + (int)(rng() % 4);
        int delta = 2 + (int)(rng() % 4);
        std::string W(d + 1, '0'), B(delta + 1, '0');
        for (auto& ch : W) ch = (rng() % 2) ? '1' : '0';
        for (auto& ch : B) ch = (rng() % 2) ? '1' : '0';
        BinaryProblem p{d, delta, W, B};
        if (classify(p).complexity == Complexity::Logarithmic) chosen.insert(p);
    }
    return {chosen.begin(), chosen.end()};
}

void criterion_solver_soundness(Checker& c) {
    std::vector<BinaryProblem> problems;
    for (const auto& row : kTableExamples) {
        if (row.complexity == Complexity::Unsolvable) {
            bool threw = false;
            try {
                ColoredTree t = gen_random_biregular(row.p.d, row.p.delta, 100, 1);
                solve(row.p, t);
            } catch (const InputError&) {
                threw = true;
            }
            c.expect(threw, "solve accepted the unsolvable problem");
            continue;
        }
        problems.push_back(row.p);
    }
    for (const BinaryProblem& p : random_type7_problems(20, 2024)) problems.push_back(p);

    const int sizes[] = {100, 300, 1000, 3000, 10000};
    for (const BinaryProblem& p : problems) {
        for (int k = 0; k < 20; ++k) {
            ColoredTree t = gen_random_biregular(p.d, p.delta, sizes[k % 5], 9000 + k);
            EdgeLabeling x = solve(p, t);
            c.expect(verify_labeling(t, p, x).empty(),
                     "invalid solution for " + format_problem(p) + " on tree " + std::to_string(k));
        }
    }
}

void criterion_round_envelope(Checker& c) {
    const std::vector<BinaryProblem> constant_probs = {
        {4, 2, "00100", "111"}, {3, 3, "1111", "0010"}, {2, 2, "101", "101"}, {2, 2, "101", "011"}};
    const std::vector<BinaryProblem> log_probs = {
        {3, 2, "1110", "010"}, {3, 2, "0110", "101"}, {3, 2, "0110", "010"},
        {3, 2, "1010", "010"}, {4, 4, "01110", "01110"}, {3, 3, "0100", "0100"},
        {4, 3, "01000", "0100"}, {3, 2, "0100", "101"}, {3, 3, "0100", "1001"}};

    for (int n : {100, 1000, 10000}) {
        for (const BinaryProblem& p : constant_probs) {
            ColoredTree t = gen_random_biregular(p.d, p.delta, n, 555 + n);
            SimulationResult r = run_local_simulation(t, make_view_algorithm(p, t));
            c.expect(verify_labeling(t, p, r.labeling).empty(), "constant labeling invalid");
            c.expect(r.rounds <= 1, "constant solver needed " + std::to_string(r.rounds) +
                                        " rounds on " + format_problem(p));
        }
        for (const BinaryProblem& p : log_probs) {
            ColoredTree t = gen_random_biregular(p.d, p.delta, n, 555 + n);
            SimulationResult r = run_local_simulation(t, make_view_algorithm(p, t));
            c.expect(verify_labeling(t, p, r.labeling).empty(), "log labeling invalid");
            c.expect(r.rounds <= kLogRoundFactor * std::log2((double)t.n()),
                     format_problem(p) + " needed " + std::to_string(r.rounds) + " rounds at n=" +
                         std::to_string(t.n()));
        }
        // global solvers: two-coloring on a caterpillar, oriented labeling on
        // a random tree
        {
            BinaryProblem p{3, 2, "1001", "010"};
            ColoredTree t = gen_caterpillar(3, std::max(2, n / 4));
            SimulationResult r = run_local_simulation(t, make_view_algorithm(p, t));
            c.expect(verify_labeling(t, p, r.labeling).empty(), "global labeling invalid");
            c.expect(r.rounds <= 2 * t.n(), "global solver exceeded 2n rounds");
        }
        {
            BinaryProblem p{3, 3, "0100", "0010"};
            ColoredTree t = gen_random_biregular(3, 3, n, 777 + n);
            SimulationResult r = run_local_simulation(t, make_view_algorithm(p, t));
            c.expect(verify_labeling(t, p, r.labeling).empty(), "global labeling invalid");
            c.expect(r.rounds <= 2 * t.n(), "global solver exceeded 2n rounds");
        }
    }
}

void criterion_re_golden(Checker& c) {
    for (auto [d, delta] :
         {std::pair{3, 3}, std::pair{4, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        for (int s = 1; s < d; ++s) {
            GeneralProblem fdso = make_fdso(d, delta, s);
            GeneralProblem g1 = black_output(fdso);

            const std::string bA = "{X}", bH = "{H,X}", bT = "{T,X}", bX = "{A,H,T,X}";
            std::vector<std::string> alphabet{bA, bH, bT, bX};
            c.expect(std::set<std::string>(g1.alphabet.begin(), g1.alphabet.end()) ==
                         std::set<std::string>(alphabet.begin(), alphabet.end()),
                     "output alphabet mismatch at d=" + std::to_string(d) +
                         " delta=" + std::to_string(delta) + " s=" + std::to_string(s));

            auto named = [&](const GeneralProblem& g, bool white) {
                std::set<std::vector<std::string>> out;
                for (const auto& cfg : white ? g.white_configs : g.black_configs) {
                    std::vector<std::string> names;
                    for (int lab : cfg) names.push_back(g.alphabet[lab]);
                    std::sort(names.begin(), names.end());
                    out.insert(names);
                }
                return out;
            };
            auto expand = [&](const std::string& expr) {
                std::set<std::vector<std::string>> out;
                for (const auto& cfg : expand_config_expr(alphabet, expr)) {
                    std::vector<std::string> names;
                    for (int lab : cfg) names.push_back(alphabet[lab]);
                    std::sort(names.begin(), names.end());
                    out.insert(names);
                }
                return out;
            };
            const std::string any = "[" + bA + " " + bH + " " + bT + " " + bX + "]";
            auto expected_black = expand(bA + " " + bX + "^" + std::to_string(delta - 1));
            auto ht = expand(bH + " " + bT + " " + bX + "^" + std::to_string(delta - 2));
            expected_black.insert(ht.begin(), ht.end());
            auto expected_white = expand(bX + " " + any + "^" + std::to_string(d - 1));
            auto h = expand(bH + "^" + std::to_string(s + 1) + " " + any + "^" +
                            std::to_string(d - s - 1));
            auto t = expand(bT + "^" + std::to_string(d - s + 1) + " " + any + "^" +
                            std::to_string(s - 1));
            expected_white.insert(h.begin(), h.end());
            expected_white.insert(t.begin(), t.end());

            c.expect(named(g1, false) == expected_black,
                     "black output configs mismatch at s=" + std::to_string(s));
            c.expect(named(g1, true) == expected_white,
                     "white output configs mismatch at s=" + std::to_string(s));

            GeneralProblem g2 = white_output(g1);
            c.expect(is_isomorphic(g2, fdso).has_value(),
                     "second elimination step is not isomorphic to FDSO at s=" + std::to_string(s));
        }
    }
}

void criterion_re_definition_oracle(Checker& c) {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        GeneralProblem g = re_oracle::random_problem(seed);
        c.expect(black_output(g) == re_oracle::black_output(g),
                 "black output differs from the definition at seed " + std::to_string(seed));
        c.expect(white_output(g) == re_oracle::white_output(g),
                 "white output differs from the definition at seed " + std::to_string(seed));
    }
}

void criterion_non_fixed_point(Checker& c) {
    FixedPointCertificate cert = is_fixed_point(from_binary({3, 2, "0110", "010"}), 1);
    c.expect(!cert.fixed_point, "sinkless+sourceless must not be a fixed point");
}

void criterion_resilience_equivalence(Checker& c) {
    auto side_ok = [](const std::string& constraint, int k, int budget) {
        for (int fixed = 0; fixed <= budget; ++fixed)
            for (int ones = 0; ones <= fixed; ++ones) {
                bool any = false;
                for (int extra = 0; extra <= k - fixed; ++extra)
                    if (constraint[ones + extra] == '1') any = true;
                if (!any) return false;
            }
        return true;
    };
    for (const BinaryProblem& p : enumerate_problems(6, 6)) {
        for (auto [t, s] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 1}, std::pair{2, 2}}) {
            bool brute = side_ok(p.W, p.d, t) && side_ok(p.B, p.delta, s);
            c.expect(is_resilient(p, {t, s}) == brute,
                     "resilience mismatch at " + format_problem(p) + " (t=" + std::to_string(t) +
                         ",s=" + std::to_string(s) + ")");
        }
    }
}

} // namespace

int main() {
    printf("acceptance suite\n");
    criterion(1, "table reproduction for the worked examples", 1.0, criterion_table);
    criterion(2, "exhaustive sweep, degrees 2..5", 10.0, criterion_sweep);
    criterion(3, "oracle concordance, degrees 2..3", 300.0, criterion_oracle_concordance);
    criterion(4, "rake & compress bounds up to n=100000", 60.0, criterion_rake_compress);
    criterion(5, "solver soundness at scale", 300.0, criterion_solver_soundness);
    criterion(6, "round-count envelope in the LOCAL simulation", 300.0, criterion_round_envelope);
    criterion(7, "round-elimination golden test (FDSO)", 30.0, criterion_re_golden);
    criterion(8, "output problems match the definition oracle", 120.0,
              criterion_re_definition_oracle);
    criterion(9, "sinkless+sourceless is not a fixed point", 10.0, criterion_non_fixed_point);
    criterion(10, "resilience equals the completion predicate", 60.0,
              criterion_resilience_equivalence);
    if (failures) {
        printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    printf("all criteria passed\n");
    return 0;
}
