#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binlcl/problem.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace binlcl {

// A bipartite labeling problem over an arbitrary finite alphabet.
// Configurations are multisets of alphabet indices, stored sorted; the
// configuration sets are sorted and deduplicated.
struct GeneralProblem {
    std::vector<std::string> alphabet;
    int d = 2;
    int delta = 2;
    std::vector<std::vector<int>> white_configs; // each of size d
    std::vector<std::vector<int>> black_configs; // each of size delta

    bool operator==(const GeneralProblem&) const = default;
};

void validate_general(const GeneralProblem& g);

// Canonicalize: sort each configuration and the configuration sets, drop
// duplicates.
void normalize_general(GeneralProblem& g);

int label_index(const GeneralProblem& g, const std::string& label); // throws InputError

// Binary problem as a two-label general problem: X-degree k allowed becomes
// the multiset with k ones and d-k zeros.
GeneralProblem from_binary(const BinaryProblem& p);

// Multiset of each constrained node's incident labels must be a
// configuration of its side.
std::vector<Violation> verify_general(const ColoredTree& tree, const GeneralProblem& g,
                                      const std::vector<int>& edge_labels);

// Expands a configuration expression like "A X^2" or "H^2 [A H T X]" into
// explicit multisets over the given alphabet. Labels must not contain
// whitespace or square brackets.
std::vector<std::vector<int>> expand_config_expr(const std::vector<std::string>& alphabet,
                                                 const std::string& expr);

} // namespace binlcl
