#include "binlcl/layers.hpp"

namespace binlcl {

const char* to_string(RCVariant v) {
    switch (v) {
        case RCVariant::Standard: return "standard";
        case RCVariant::WhiteRestricted: return "white_restricted";
        case RCVariant::BlackRestricted: return "black_restricted";
    }
    return "?";
}

LayerDecomposition rake_compress(const ColoredTree& tree, int c, RCVariant variant) {
    if (c < 1) throw InputError("rake_compress: c must be at least 1");
    const int n = tree.n();
    LayerDecomposition out;
    out.layer.assign(n, 0);
    out.c = c;
    out.variant = variant;

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);
    std::vector<int> alive_list(n);
    for (int v = 0; v < n; ++v) alive_list[v] = v;

    auto degree_rule_only = [&](int v) {
        return (variant == RCVariant::WhiteRestricted && tree.color(v) == Color::White) ||
               (variant == RCVariant::BlackRestricted && tree.color(v) == Color::Black);
    };

    int iter = 0;
    std::vector<char> on_fragment(n, 0);
    while (!alive_list.empty()) {
        ++iter;
        out.u_before.push_back((int64_t)alive_list.size());

        // Mark nodes on maximal runs of >= c induced-degree-2 nodes.
        for (int v : alive_list) on_fragment[v] = 0;
        std::vector<char> seen(n, 0);
        for (int v : alive_list) {
            if (deg[v] != 2 || seen[v]) continue;
            // Walk the maximal degree-2 run through v.
            std::vector<int> run{v};
            seen[v] = 1;
            for (int dir = 0; dir < 2; ++dir) {
                int prev = v;
                int cur = -1;
                // pick the dir-th alive neighbor of v
                int found = 0;
                for (int32_t u : tree.neighbors(v)) {
                    if (out.layer[u] != 0) continue;
                    if (found == dir) { cur = u; break; }
                    ++found;
                }
                if (cur < 0) continue;
                while (cur >= 0 && deg[cur] == 2 && !seen[cur]) {
                    seen[cur] = 1;
                    if (dir == 0) run.push_back(cur);
                    else run.insert(run.begin(), cur);
                    int next = -1;
                    for (int32_t u : tree.neighbors(cur)) {
                        if (out.layer[u] != 0 || u == prev) continue;
                        next = u;
                        break;
                    }
                    prev = cur;
                    cur = next;
                }
            }
            if ((int)run.size() >= c)
                for (int u : run) on_fragment[u] = 1;
        }

        std::vector<int> removed;
        for (int v : alive_list) {
            bool remove;
            if (degree_rule_only(v))
                remove = deg[v] <= 1;
            else
                remove = deg[v] <= 1 || (deg[v] == 2 && on_fragment[v]);
            if (remove) removed.push_back(v);
        }
        if (removed.empty())
            throw Error("rake_compress made no progress; this cannot happen on a tree");
        out.removed.push_back((int64_t)removed.size());
        for (int v : removed) out.layer[v] = iter;
        for (int v : removed)
            for (int32_t u : tree.neighbors(v))
                if (out.layer[u] == 0) --deg[u];
        std::vector<int> next_alive;
        next_alive.reserve(alive_list.size() - removed.size());
        for (int v : alive_list)
            if (out.layer[v] == 0) next_alive.push_back(v);
        alive_list.swap(next_alive);
    }
    out.L = iter;
    return out;
}

} // namespace binlcl
