#include <doctest.h>

#include <cmath>

#include "binlcl/classify.hpp"

using namespace binlcl;

namespace {

Classification cls(int d, int delta, const std::string& W, const std::string& B) {
    return classify(BinaryProblem{d, delta, W, B});
}

} // namespace

TEST_CASE("table examples") {
    CHECK(cls(3, 2, "1110", "010").complexity == Complexity::Logarithmic); // sinkless orientation
    CHECK(cls(3, 2, "1110", "010").primary_family == Family::VII);

    CHECK(cls(3, 2, "1001", "010").complexity == Complexity::Global); // two-coloring
    CHECK(cls(3, 2, "1001", "010").primary_family == Family::Va);

    CHECK(cls(3, 2, "0111", "100").complexity == Complexity::Unsolvable); // contradiction
    CHECK(cls(3, 2, "0111", "100").primary_family == Family::Ic);

    CHECK(cls(4, 2, "00100", "111").complexity == Complexity::Constant); // trivial
    CHECK(cls(4, 2, "00100", "111").primary_family == Family::IIIa);

    CHECK(cls(2, 2, "010", "011").complexity == Complexity::Global);
    CHECK(cls(2, 2, "010", "011").primary_family == Family::VIb);

    CHECK(cls(4, 4, "01110", "01110").complexity == Complexity::Logarithmic); // bipartite splitting
    CHECK(cls(4, 4, "01110", "01110").primary_family == Family::VII);

    CHECK(cls(3, 2, "0110", "010").complexity == Complexity::Logarithmic); // sinkless+sourceless
    CHECK(cls(3, 2, "1010", "010").complexity == Complexity::Logarithmic); // even orientation
    CHECK(cls(3, 2, "0100", "101").complexity == Complexity::Logarithmic); // regular matching
    CHECK(cls(3, 2, "0110", "101").complexity == Complexity::Logarithmic); // splitting
}

TEST_CASE("exhaustive sweep invariants up to degree 5") {
    auto problems = enumerate_problems(5, 5);
    CHECK(problems.size() == 14400);
    auto results = classify_sweep_serial(problems);
    for (size_t i = 0; i < problems.size(); ++i) {
        const Classification& c = results[i];
        CHECK(!c.matched_families.empty());
        CHECK(c.primary_family == c.matched_families.front());
        // No cross-class co-match.
        for (Family f : c.matched_families) CHECK(family_complexity(f) == c.complexity);
        // d = delta = 2 never lands in VII.
        if (problems[i].d == 2 && problems[i].delta == 2) CHECK(c.primary_family != Family::VII);
    }
}

TEST_CASE("classification is invariant across the equivalence class") {
    for (const BinaryProblem& p : enumerate_problems(5, 5)) {
        Complexity expected = classify(p).complexity;
        for (const BinaryProblem& q : equivalent_set(p).members)
            CHECK(classify(q).complexity == expected);
    }
}

TEST_CASE("solvability is monotone under relaxation") {
    auto problems = enumerate_problems(3, 3);
    for (const auto& sub : problems) {
        if (classify(sub).complexity == Complexity::Unsolvable) continue;
        for (const auto& sup : problems)
            if (is_restriction(sub, sup))
                CHECK(classify(sup).complexity != Complexity::Unsolvable);
    }
}

TEST_CASE("randomized bounds") {
    // even orientation: no escape on either side
    RandomizedBounds rb = randomized_bounds({3, 2, "1010", "010"});
    CHECK(rb.lower == RandBound::Log);
    CHECK(rb.upper == RandBound::Log);
    CHECK(rb.justification == std::vector<std::string>{"no-escape-propagation"});

    // sinkless orientation: interval [LogLog, Log]
    rb = randomized_bounds({3, 2, "1110", "010"});
    CHECK(rb.lower == RandBound::LogLog);
    CHECK(rb.upper == RandBound::Log);
    CHECK(rb.justification == std::vector<std::string>{"forbidden-degree-relaxation"});

    // two-coloring: global stays global
    rb = randomized_bounds({3, 2, "1001", "010"});
    CHECK(rb.lower == RandBound::Linear);
    CHECK(rb.upper == RandBound::Linear);

    // trivial: constant stays constant
    rb = randomized_bounds({4, 2, "00100", "111"});
    CHECK(rb.lower == RandBound::Constant);
    CHECK(rb.upper == RandBound::Constant);

    CHECK_THROWS_AS(randomized_bounds({3, 2, "0111", "100"}), InputError);
}

TEST_CASE("independent set pattern at d = 20") {
    BinaryProblem p{20, 2, "11" + std::string(18, '0') + "1", "010"};
    CHECK(classify(p).primary_family == Family::VII);
    RandomizedBounds rb = randomized_bounds(p);
    CHECK(rb.lower == RandBound::Log);
    bool tagged = false;
    for (const auto& j : rb.justification) tagged |= j == "independent-set-pattern";
    CHECK(tagged);

    // d = 19 misses the degree threshold of the independent-set argument
    BinaryProblem q{19, 2, "11" + std::string(17, '0') + "1", "010"};
    rb = randomized_bounds(q);
    bool tagged19 = false;
    for (const auto& j : rb.justification) tagged19 |= j == "independent-set-pattern";
    CHECK_FALSE(tagged19);

    // the pattern is recognized through the equivalence class too
    BinaryProblem swapped = swap_colors(p);
    rb = randomized_bounds(swapped);
    bool tagged_swap = false;
    for (const auto& j : rb.justification) tagged_swap |= j == "independent-set-pattern";
    CHECK(tagged_swap);
}

TEST_CASE("cut pattern bound is exact integer arithmetic") {
    // W = 1^(r+1) 0^(d-2r-1) 1^(r+1), B = 010; lower bound applies iff
    // r < d/4 - sqrt(d-1)/2.
    for (int d = 5; d <= 40; ++d) {
        for (int r = 1; 2 * r < d; ++r) {
            std::string W = std::string(r + 1, '1') + std::string(d - 2 * r - 1, '0') +
                            std::string(r + 1, '1');
            BinaryProblem p{d, 2, W, "010"};
            if (classify(p).complexity != Complexity::Logarithmic) continue;
            RandomizedBounds rb = randomized_bounds(p);
            bool tagged = false;
            for (const auto& j : rb.justification) tagged |= j == "cut-pattern";
            bool expected = r < d / 4.0 - std::sqrt((double)d - 1.0) / 2.0;
            CHECK(tagged == expected);
        }
    }
}

TEST_CASE("relaxation targets") {
    // sinkless orientation: flip b_2 only
    RelaxationTarget rt = relaxation_target({3, 2, "1110", "010"});
    CHECK(rt.kind == RelaxationTarget::Kind::SinklessOrientation);
    CHECK(rt.equivalence_applied == 0);
    CHECK(rt.flips == std::vector<std::pair<char, int>>{{'b', 2}});
    CHECK(rt.target == BinaryProblem{3, 2, "1110", "011"});

    // already the forbidden-degree pattern at i = 1
    rt = relaxation_target({3, 3, "1011", "0110"});
    CHECK(rt.kind == RelaxationTarget::Kind::ForbiddenDegree);
    CHECK(rt.forbidden_index == 1);
    CHECK(rt.flips.empty());
    CHECK(rt.target == BinaryProblem{3, 3, "1011", "0110"});

    // bipartite splitting: mirrored sinkless case through the complement map
    rt = relaxation_target({4, 4, "01110", "01110"});
    CHECK(rt.kind == RelaxationTarget::Kind::SinklessOrientation);
    CHECK(rt.equivalence_applied == 2);
    CHECK(rt.target == BinaryProblem{4, 4, "11110", "01111"});

    CHECK_THROWS_AS(relaxation_target({3, 2, "1001", "010"}), InputError); // global
}

TEST_CASE("every type-VII problem has a relaxation target") {
    for (const BinaryProblem& p : enumerate_problems(5, 5)) {
        if (classify(p).complexity != Complexity::Logarithmic) continue;
        RelaxationTarget rt = relaxation_target(p);
        // Flips are all 0 -> 1 on the transformed problem and the target is
        // the exact pattern.
        BinaryProblem base = p;
        if (rt.equivalence_applied == 1) base = swap_colors(p);
        if (rt.equivalence_applied == 2) base = complement_problem(p);
        if (rt.equivalence_applied == 3) base = swap_colors(complement_problem(p));
        CHECK(is_restriction(base, rt.target));
        if (rt.kind == RelaxationTarget::Kind::SinklessOrientation) {
            CHECK(rt.target.W == std::string(rt.target.d, '1') + "0");
            CHECK(rt.target.B == "0" + std::string(rt.target.delta, '1'));
        } else {
            const int i = rt.forbidden_index;
            CHECK(0 < i);
            CHECK(i < rt.target.d);
            CHECK(rt.target.W ==
                  std::string(i, '1') + "0" + std::string(rt.target.d - i, '1'));
            CHECK(rt.target.B == "0" + std::string(rt.target.delta - 1, '1') + "0");
        }
    }
}

TEST_CASE("sweep kernel matches the serial reference") {
    auto problems = enumerate_problems(4, 4);
    auto a = classify_sweep(problems);
    auto b = classify_sweep_serial(problems);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].complexity == b[i].complexity);
        CHECK(a[i].matched_families == b[i].matched_families);
    }
}
