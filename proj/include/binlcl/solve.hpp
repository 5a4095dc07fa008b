#pragma once

#include <optional>
#include <string>

#include "binlcl/classify.hpp"
#include "binlcl/layers.hpp"
#include "binlcl/problem.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace binlcl {

enum class SolverKind { Constant, GlobalTwoColoring, GlobalOriented, Resilient, HypergraphMatching, Special };

const char* to_string(SolverKind k);

// Dispatch record: how solve() routed the problem, which transform connects
// the problem actually solved back to the input, and the decomposition used
// by the layered solvers.
struct SolveInfo {
    SolverKind kind = SolverKind::Constant;
    bool swapped = false;      // solved on the color-swapped tree
    bool complemented = false; // solution mapped back by complementing X
    BinaryProblem solved;      // the (possibly transformed/restricted) problem handed to the solver
    std::string route;         // human-readable dispatch description
    std::optional<LayerDecomposition> layers;
};

// Constructive solver for any solvable problem; the result always passes
// verify_labeling (checked internally). Throws InputError for unsolvable
// problems and Error on an (unreachable) dispatch failure.
EdgeLabeling solve(const BinaryProblem& p, const ColoredTree& tree, SolveInfo* info = nullptr);

// Class-specific solvers with the preconditions from their contracts.
EdgeLabeling solve_constant(const BinaryProblem& p, const ColoredTree& tree);
EdgeLabeling solve_global(const BinaryProblem& p, const ColoredTree& tree, SolveInfo* info = nullptr);
EdgeLabeling solve_resilient(const BinaryProblem& p, const ColoredTree& tree,
                             LayerDecomposition* out_layers = nullptr);
// Requires p = (d, delta, 010^(d-1), 010^(delta-1)) with d, delta >= 3.
EdgeLabeling solve_hypergraph_matching(const BinaryProblem& p, const ColoredTree& tree,
                                       LayerDecomposition* out_layers = nullptr);
// Requires p = (d, delta, 010^(d-1), 10^(delta-1)1) with d >= 3.
EdgeLabeling solve_special(const BinaryProblem& p, const ColoredTree& tree,
                           LayerDecomposition* out_layers = nullptr);

// Pattern helpers shared with the dispatcher and tests.
BinaryProblem hypergraph_matching_problem(int d, int delta);
BinaryProblem special_problem(int d, int delta);

// Tree with white and black exchanged (same ids, same edges).
ColoredTree swap_tree_colors(const ColoredTree& tree);

} // namespace binlcl
