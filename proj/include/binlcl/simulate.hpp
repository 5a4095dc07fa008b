#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "binlcl/problem.hpp"
#include "binlcl/solve.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace binlcl {

// A radius-r, root-centered, port-labeled snapshot of the tree. The handle
// is lazy: algorithms walk the underlying tree but must not look past the
// radius; encode() gives the canonical byte representation of exactly the
// visible part.
class View {
public:
    View(const ColoredTree& tree, int root, int radius, bool with_ids)
        : tree_(&tree), root_(root), radius_(radius), with_ids_(with_ids) {}

    const ColoredTree& tree() const { return *tree_; }
    int root() const { return root_; }
    int radius() const { return radius_; }
    bool with_ids() const { return with_ids_; }

    // Canonical encoding: deterministic DFS in port order, truncated at the
    // radius. Isomorphic views (as port-labeled colored rooted trees) encode
    // to identical strings.
    std::string encode() const;

private:
    const ColoredTree* tree_;
    int root_;
    int radius_;
    bool with_ids_;
};

struct Decision {
    bool decide = false;
    std::vector<int8_t> labels; // per port (1..deg), when deciding
};

using WhiteAlgorithm = std::function<Decision(const View&)>;

struct SimulationResult {
    EdgeLabeling labeling;
    int rounds = 0;
    std::unordered_map<int64_t, int> per_node_round; // white id -> decision round
};

struct SimOptions {
    bool with_ids = true;
    int max_rounds = 1 << 20;
    // Detect two nodes with identical encoded views deciding differently.
    // Encoding large views is expensive, so by default the check runs only
    // on small trees; set to force it on or off.
    int consistency_check_node_cap = 2048;
};

// Runs rounds r = 0, 1, 2, ...; every undecided white node sees its depth-r
// view and may decide its incident edge labels, which are then immutable.
SimulationResult run_local_simulation(const ColoredTree& tree, const WhiteAlgorithm& algo,
                                      const SimOptions& opts = {});

// View-based variant of the constructive solver for p on this tree. The
// returned algorithm is bound to the tree it was built for.
WhiteAlgorithm make_view_algorithm(const BinaryProblem& p, const ColoredTree& tree);

} // namespace binlcl
