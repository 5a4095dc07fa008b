#pragma once

#include <cstdint>
#include <vector>

#include "binlcl/tree.hpp"

namespace binlcl {

enum class RCVariant { Standard, WhiteRestricted, BlackRestricted };

const char* to_string(RCVariant v);

// Rake & compress layer decomposition. layer[v] is 1-based; L is the number
// of iterations until the tree is exhausted.
struct LayerDecomposition {
    std::vector<int32_t> layer;
    int L = 0;
    int c = 1;
    RCVariant variant = RCVariant::Standard;
    // Per-iteration statistics for the removal-rate checks: |U| before the
    // iteration and how many nodes it removed.
    std::vector<int64_t> u_before;
    std::vector<int64_t> removed;
};

// Iteratively removes nodes of induced degree <= 1 together with degree-2
// nodes lying on a path fragment of at least c induced-degree-2 nodes. The
// restricted variants remove nodes of the named color only at degree <= 1.
LayerDecomposition rake_compress(const ColoredTree& tree, int c, RCVariant variant = RCVariant::Standard);

} // namespace binlcl
