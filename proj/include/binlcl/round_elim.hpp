#pragma once

#include <optional>
#include <vector>

#include "binlcl/general_problem.hpp"

namespace binlcl {

struct RECaps {
    int max_alphabet = 5;
    int max_degree = 4;
};

// Black output problem: black configurations are the maximal multisets of
// label subsets whose every choice is a black configuration of g; white
// configurations are the multisets over the surviving subset alphabet with
// at least one choice in g's white configurations. The output alphabet keeps
// only the subsets occurring in maximal black configurations, named as
// sorted label lists like "{H,X}".
GeneralProblem black_output(const GeneralProblem& g, const RECaps& caps = {});
GeneralProblem white_output(const GeneralProblem& g, const RECaps& caps = {});

// Serial reference implementations kept for testing the OpenMP kernels.
GeneralProblem black_output_serial(const GeneralProblem& g, const RECaps& caps = {});
GeneralProblem white_output_serial(const GeneralProblem& g, const RECaps& caps = {});

struct LabelBijection {
    std::vector<int> map; // map[i] = index in g2's alphabet of g1's label i
};

// A bijection carrying white configurations onto white configurations and
// black onto black, if one exists. Alphabets of up to 6 labels.
std::optional<LabelBijection> is_isomorphic(const GeneralProblem& g1, const GeneralProblem& g2);

struct FixedPointCertificate {
    bool fixed_point = false;
    std::optional<LabelBijection> bijection;
    std::vector<GeneralProblem> intermediates; // g, b1, w1, b2, w2, ...
};

// Applies (black_output then white_output) `pairs` times and tests
// isomorphism with g.
FixedPointCertificate is_fixed_point(const GeneralProblem& g, int pairs, const RECaps& caps = {});

// The forbidden-degree-or-sinkless-orientation problem over {X, H, T, A}.
GeneralProblem make_fdso(int d, int delta, int s);

enum class FdsoSource { SinklessOrientation, ForbiddenDegree };

// Bipartite sinkless orientation (W = 1...10, B = 01...1) or the forbidden
// degree problem (W = 1^s 0 1^(d-s), B = 01...10), as binary problems.
BinaryProblem fdso_source_problem(FdsoSource source, int d, int delta, int s);

// Maps a valid solution of the source problem into an FDSO(s) labeling;
// verifies the source solution first and the result passes verify_general
// against make_fdso(d, delta, s).
std::vector<int> reduce_solution_to_fdso(FdsoSource source, int d, int delta, int s,
                                         const ColoredTree& tree, const EdgeLabeling& x);

} // namespace binlcl
