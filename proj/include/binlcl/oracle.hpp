#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binlcl/problem.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace binlcl {

enum class OracleMode { First, Count, All };

struct OracleResult {
    std::optional<EdgeLabeling> first; // set in First mode when a solution exists
    uint64_t count = 0;                // set in Count mode
    std::vector<EdgeLabeling> all;     // set in All mode, lexicographic edge order
};

// Exhaustive search over all 2^m labelings in lexicographic order of the
// canonical edge list, with subtree pruning at fully-assigned nodes. The cap
// guards the search space; exceeding it throws CapError.
OracleResult brute_force_solve(const ColoredTree& tree, const BinaryProblem& p, OracleMode mode,
                               int max_edges = 22);

// Count mode only, parallelized over labeling prefixes; must match
// brute_force_solve(..., Count) exactly.
uint64_t brute_force_count_parallel(const ColoredTree& tree, const BinaryProblem& p,
                                    int max_edges = 22);

// The smallest biregular tree exhibiting every type-I/II contradiction: a
// central white-black edge whose two endpoints both have full degree and
// fully constrained neighborhoods; leaves sit at the given distance from the
// central edge (default 2).
ColoredTree standard_witness(const BinaryProblem& p, int radius = 2);

} // namespace binlcl
