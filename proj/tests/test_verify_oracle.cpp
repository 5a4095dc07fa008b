#include <doctest.h>

#include "binlcl/classify.hpp"
#include "binlcl/oracle.hpp"
#include "binlcl/solve.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

using namespace binlcl;

TEST_CASE("verify_labeling basics") {
    ColoredTree t = gen_complete_biregular(2, 2, 2, Color::White);
    EdgeLabeling all1{std::vector<int8_t>(t.m(), 1)};
    CHECK(verify_labeling(t, {2, 2, "111", "111"}, all1).empty());

    // contradiction: all-0 forces a violation at the constrained center white
    ColoredTree w = gen_complete_biregular(3, 2, 2, Color::White);
    EdgeLabeling all0{std::vector<int8_t>(w.m(), 0)};
    auto violations = verify_labeling(w, {3, 2, "0111", "100"}, all0);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].node_id == 1);
    CHECK(violations[0].observed == "X-degree 0");

    // unconstrained nodes are never reported: no node has degree 4 or 5
    CHECK(verify_labeling(w, {4, 5, "00000", "000000"}, all0).empty());

    EdgeLabeling short_labeling{std::vector<int8_t>(w.m() - 1, 0)};
    CHECK_THROWS_AS(verify_labeling(w, {3, 2, "0111", "100"}, short_labeling), InputError);
}

TEST_CASE("witness tree shape") {
    // Central white-black edge, both sides padded to full degree, leaves at
    // distance 2 from the central edge.
    BinaryProblem p{3, 2, "1110", "010"};
    ColoredTree w = standard_witness(p);
    CHECK(w.m() == 8); // 1 + (d-1) + (delta-1) + 2(d-1)(delta-1)
    CHECK(w.n() == 9);
    int full_whites = 0, full_blacks = 0;
    for (int v = 0; v < w.n(); ++v) {
        if (w.color(v) == Color::White && w.degree(v) == 3) ++full_whites;
        if (w.color(v) == Color::Black && w.degree(v) == 2) ++full_blacks;
    }
    // the central white + the (delta-1) whites on the black side
    CHECK(full_whites == 2);
    // the central black + the (d-1) blacks on the white side
    CHECK(full_blacks == 3);

    ColoredTree w22 = standard_witness({2, 2, "111", "111"});
    CHECK(w22.n() == 6);
    CHECK(w22.m() == 5);

    ColoredTree w33 = standard_witness({3, 3, "1111", "1111"});
    CHECK(w33.m() == 13);
}

TEST_CASE("brute force counts") {
    // trivial problem on a 4-star: the center must pick exactly 2 of 4 edges
    ColoredTree star = gen_complete_biregular(4, 2, 1, Color::White);
    OracleResult res = brute_force_solve(star, {4, 2, "00100", "111"}, OracleMode::Count);
    CHECK(res.count == 6);

    // contradiction has no solution on its witness
    BinaryProblem contradiction{3, 2, "0111", "100"};
    CHECK(brute_force_solve(standard_witness(contradiction), contradiction, OracleMode::Count)
              .count == 0);

    // empty white constraint on a path with a degree-2 white center
    ColoredTree path3 = ColoredTree::from_edges({1, 2, 3},
                                                {Color::Black, Color::White, Color::Black},
                                                {{1, 2}, {2, 3}});
    CHECK(brute_force_solve(path3, {2, 2, "000", "111"}, OracleMode::Count).count == 0);

    // cap
    ColoredTree big = gen_random_biregular(3, 2, 60, 3);
    CHECK_THROWS_AS(brute_force_solve(big, {3, 2, "1110", "010"}, OracleMode::Count, 22), CapError);
}

TEST_CASE("brute force first and all modes") {
    ColoredTree star = gen_complete_biregular(4, 2, 1, Color::White);
    BinaryProblem p{4, 2, "00100", "111"};
    OracleResult all = brute_force_solve(star, p, OracleMode::All);
    CHECK(all.all.size() == 6);
    OracleResult first = brute_force_solve(star, p, OracleMode::First);
    REQUIRE(first.first.has_value());
    CHECK(verify_labeling(star, p, *first.first).empty());
    // first mode returns the lexicographically least solution
    CHECK(first.first->x == all.all.front().x);
    for (size_t i = 1; i < all.all.size(); ++i) CHECK(all.all[i - 1].x < all.all[i].x);
    for (const auto& sol : all.all) CHECK(verify_labeling(star, p, sol).empty());
}

TEST_CASE("solutions of a restriction solve the relaxation") {
    BinaryProblem sub{3, 2, "0110", "010"}, sup{3, 2, "1110", "010"};
    ColoredTree w = standard_witness(sub);
    for (const auto& sol : brute_force_solve(w, sub, OracleMode::All).all)
        CHECK(verify_labeling(w, sup, sol).empty());
}

TEST_CASE("oracle agrees with the classifier on every (2,2) problem") {
    for (const BinaryProblem& p : enumerate_problems(2, 2)) {
        ColoredTree w = standard_witness(p);
        bool solvable = brute_force_solve(w, p, OracleMode::First).first.has_value();
        CHECK(solvable == (classify(p).complexity != Complexity::Unsolvable));
    }
}
