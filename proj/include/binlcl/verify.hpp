#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binlcl/problem.hpp"
#include "binlcl/tree.hpp"

namespace binlcl {

// A candidate solution: x[e] in {0,1} for every canonical edge index.
struct EdgeLabeling {
    std::vector<int8_t> x;
};

struct Violation {
    int64_t node_id;
    std::string expected; // the constraint the node must satisfy
    std::string observed; // what the labeling gives it
};

// Checks every color-matching full-degree node; other nodes are never
// reported. Throws InputError if the labeling does not cover all edges.
std::vector<Violation> verify_labeling(const ColoredTree& tree, const BinaryProblem& p,
                                       const EdgeLabeling& x);

} // namespace binlcl
