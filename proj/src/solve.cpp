#include "binlcl/solve.hpp"

#include <algorithm>
#include <queue>

namespace binlcl {

const char* to_string(SolverKind k) {
    switch (k) {
        case SolverKind::Constant: return "constant";
        case SolverKind::GlobalTwoColoring: return "global_two_coloring";
        case SolverKind::GlobalOriented: return "global_oriented";
        case SolverKind::Resilient: return "resilient";
        case SolverKind::HypergraphMatching: return "hypergraph_matching";
        case SolverKind::Special: return "special";
    }
    return "?";
}

BinaryProblem hypergraph_matching_problem(int d, int delta) {
    return BinaryProblem{d, delta, "01" + std::string(d - 1, '0'), "01" + std::string(delta - 1, '0')};
}

BinaryProblem special_problem(int d, int delta) {
    return BinaryProblem{d, delta, "01" + std::string(d - 1, '0'),
                         "1" + std::string(delta - 1, '0') + "1"};
}

ColoredTree swap_tree_colors(const ColoredTree& tree) {
    std::vector<int64_t> ids(tree.n());
    std::vector<Color> colors(tree.n());
    std::vector<std::vector<int32_t>> adj(tree.n());
    for (int v = 0; v < tree.n(); ++v) {
        ids[v] = tree.id(v);
        colors[v] = other(tree.color(v));
        adj[v] = tree.neighbors(v);
    }
    return ColoredTree(std::move(ids), std::move(colors), std::move(adj));
}

namespace {

constexpr int8_t kUnset = -1;

bool constrained(const ColoredTree& tree, const BinaryProblem& p, int v) {
    return tree.degree(v) == (tree.color(v) == Color::White ? p.d : p.delta);
}

int lowest_free_port(const ColoredTree& tree, const std::vector<int8_t>& x, int v) {
    for (int k = 0; k < tree.degree(v); ++k)
        if (x[tree.incident_edges(v)[k]] == kUnset) return k;
    return -1;
}

// Label `extra` unset ports of v with 1 (lowest port indices first) and the
// rest with 0.
void fill_free_ports(const ColoredTree& tree, std::vector<int8_t>& x, int v, int extra) {
    for (int k = 0; k < tree.degree(v); ++k) {
        int e = tree.incident_edges(v)[k];
        if (x[e] != kUnset) continue;
        x[e] = extra > 0 ? 1 : 0;
        if (extra > 0) --extra;
    }
    if (extra > 0) throw Error("solver ran out of free ports");
}

// Nodes of each layer in ascending id order; per-layer completion may be
// parallelized but must stay bit-identical to this sequential order.
std::vector<std::vector<int>> layer_buckets(const ColoredTree& tree, const LayerDecomposition& dec) {
    std::vector<std::vector<int>> buckets(dec.L + 1);
    for (int v = 0; v < tree.n(); ++v) buckets[dec.layer[v]].push_back(v);
    for (auto& bucket : buckets)
        std::sort(bucket.begin(), bucket.end(),
                  [&](int a, int b) { return tree.id(a) < tree.id(b); });
    return buckets;
}

} // namespace

EdgeLabeling solve_constant(const BinaryProblem& p, const ColoredTree& tree) {
    Classification cls = classify(p);
    if (cls.complexity != Complexity::Constant)
        throw InputError("solve_constant: problem is not constant-time");
    std::vector<int8_t> x(tree.m(), 0);
    switch (cls.primary_family) {
        case Family::IVa:
            break; // all edges 0
        case Family::IVb:
            std::fill(x.begin(), x.end(), 1);
            break;
        case Family::IIIa: {
            const int i = (int)p.W.find('1');
            for (int v = 0; v < tree.n(); ++v) {
                if (tree.color(v) != Color::White || !constrained(tree, p, v)) continue;
                for (int k = 0; k < i; ++k) x[tree.incident_edges(v)[k]] = 1;
            }
            break;
        }
        case Family::IIIb: {
            const int j = (int)p.B.find('1');
            for (int v = 0; v < tree.n(); ++v) {
                if (tree.color(v) != Color::Black || !constrained(tree, p, v)) continue;
                for (int k = 0; k < j; ++k) x[tree.incident_edges(v)[k]] = 1;
            }
            break;
        }
        default:
            throw Error("solve_constant: unexpected family");
    }
    return EdgeLabeling{x};
}

namespace {

// Type V.a (W = 10^(d-1)1, B = 010): properly 2-color the projection of the
// tree onto white nodes (joined through degree-2 black nodes) and label all
// edges of one color class 1.
EdgeLabeling solve_global_two_coloring(const BinaryProblem& p, const ColoredTree& tree) {
    std::vector<int> cls(tree.n(), -1); // 0/1 for whites
    std::vector<int> whites_by_id;
    for (int v = 0; v < tree.n(); ++v)
        if (tree.color(v) == Color::White) whites_by_id.push_back(v);
    std::sort(whites_by_id.begin(), whites_by_id.end(),
              [&](int a, int b) { return tree.id(a) < tree.id(b); });
    for (int root : whites_by_id) {
        if (cls[root] >= 0) continue;
        cls[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int32_t b : tree.neighbors(w)) {
                if (tree.degree(b) != 2) continue;
                for (int32_t w2 : tree.neighbors(b)) {
                    if (w2 == w || cls[w2] >= 0) continue;
                    cls[w2] = 1 - cls[w];
                    q.push(w2);
                }
            }
        }
    }
    (void)p;
    std::vector<int8_t> x(tree.m(), 0);
    for (int v = 0; v < tree.n(); ++v) {
        if (tree.color(v) != Color::White || cls[v] != 0) continue;
        for (int32_t e : tree.incident_edges(v)) x[e] = 1;
    }
    return EdgeLabeling{x};
}

// Hardest type-VI.b member (W = 010^(d-1), B = 0^(delta-1)10): root the tree
// at the leaf with the smallest id and put each white node's parent edge
// into X.
EdgeLabeling solve_global_oriented(const ColoredTree& tree) {
    std::vector<int8_t> x(tree.m(), 0);
    if (tree.n() == 1) return EdgeLabeling{x};
    int root = -1;
    for (int v = 0; v < tree.n(); ++v)
        if (tree.degree(v) == 1 && (root < 0 || tree.id(v) < tree.id(root))) root = v;
    std::vector<int> parent(tree.n(), -1);
    std::queue<int> q;
    q.push(root);
    std::vector<char> vis(tree.n(), 0);
    vis[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int32_t u : tree.neighbors(v))
            if (!vis[u]) { vis[u] = 1; parent[u] = v; q.push(u); }
    }
    for (int v = 0; v < tree.n(); ++v) {
        if (v == root || tree.color(v) != Color::White) continue;
        x[tree.incident_edges(v)[tree.port_to(v, parent[v]) - 1]] = 1;
    }
    return EdgeLabeling{x};
}

} // namespace

EdgeLabeling solve_global(const BinaryProblem& p, const ColoredTree& tree, SolveInfo* info) {
    Classification cls = classify(p);
    if (cls.complexity != Complexity::Global)
        throw InputError("solve_global: problem is not global");
    SolveInfo local;
    SolveInfo& si = info ? *info : local;
    switch (cls.primary_family) {
        case Family::Va:
            si.kind = SolverKind::GlobalTwoColoring;
            si.solved = p;
            return solve_global_two_coloring(p, tree);
        case Family::Vb: {
            si.kind = SolverKind::GlobalTwoColoring;
            si.swapped = true;
            si.solved = swap_colors(p);
            ColoredTree swapped = swap_tree_colors(tree);
            return solve_global_two_coloring(si.solved, swapped);
        }
        case Family::VIb:
            si.kind = SolverKind::GlobalOriented;
            si.solved = p;
            return solve_global_oriented(tree);
        case Family::VIa: {
            si.kind = SolverKind::GlobalOriented;
            si.swapped = true;
            si.solved = swap_colors(p);
            ColoredTree swapped = swap_tree_colors(tree);
            return solve_global_oriented(swapped);
        }
        default:
            throw Error("solve_global: unexpected family");
    }
}

EdgeLabeling solve_resilient(const BinaryProblem& p, const ColoredTree& tree,
                             LayerDecomposition* out_layers) {
    validate_problem(p);
    const bool black_side = is_resilient(p, {2, 1});
    const bool white_side = is_resilient(p, {1, 2});
    if (!black_side && !white_side)
        throw InputError("solve_resilient: problem is neither (2,1)- nor (1,2)-resilient");
    // (2,1): blacks complete only one fixed port, so blacks are removed only
    // as leaves; mirrored for (1,2).
    const RCVariant variant = black_side ? RCVariant::BlackRestricted : RCVariant::WhiteRestricted;
    const int white_budget = black_side ? 2 : 1;
    const int black_budget = black_side ? 1 : 2;

    LayerDecomposition dec = rake_compress(tree, 1, variant);
    if (out_layers) *out_layers = dec;
    auto buckets = layer_buckets(tree, dec);

    std::vector<int8_t> x(tree.m(), kUnset);
    for (int i = dec.L; i >= 1; --i) {
        for (int v : buckets[i])
            for (int k = 0; k < tree.degree(v); ++k) {
                int u = tree.neighbors(v)[k];
                if (dec.layer[u] == i && u > v) x[tree.incident_edges(v)[k]] = 0;
            }
        for (int v : buckets[i]) {
            int fixed_total = 0, fixed_ones = 0;
            for (int k = 0; k < tree.degree(v); ++k) {
                int8_t val = x[tree.incident_edges(v)[k]];
                if (val != kUnset) { ++fixed_total; fixed_ones += val; }
            }
            const int budget = tree.color(v) == Color::White ? white_budget : black_budget;
            if (fixed_total > budget)
                throw Error("resilient solver: node " + std::to_string(tree.id(v)) +
                            " has " + std::to_string(fixed_total) + " fixed ports, budget " +
                            std::to_string(budget));
            if (constrained(tree, p, v)) {
                const std::string& constraint = tree.color(v) == Color::White ? p.W : p.B;
                auto extra = complete_labeling(constraint, fixed_ones, fixed_total);
                if (!extra)
                    throw Error("resilient solver: completion failed at node " +
                                std::to_string(tree.id(v)));
                fill_free_ports(tree, x, v, *extra);
            } else {
                fill_free_ports(tree, x, v, 0);
            }
        }
    }
    return EdgeLabeling{std::vector<int8_t>(x.begin(), x.end())};
}

namespace {

// The c = 3 layered procedure: same-layer edges 0, then every node keeps its
// X-degree at exactly one whenever its single pre-fixed port allows it. For
// the exact hypergraph matching problem all constrained nodes end at
// X-degree one; a restriction host with degree-2 constrained nodes may leave
// some of them at zero, which its constraint must then allow (b_0 or w_0
// set) -- solve() dispatch checks that before routing here.
EdgeLabeling one_per_node_labeling(const BinaryProblem& p, const ColoredTree& tree,
                                   LayerDecomposition* out_layers) {
    LayerDecomposition dec = rake_compress(tree, 3, RCVariant::Standard);
    if (out_layers) *out_layers = dec;
    auto buckets = layer_buckets(tree, dec);

    std::vector<int8_t> x(tree.m(), kUnset);
    for (int i = dec.L; i >= 1; --i) {
        for (int v : buckets[i])
            for (int k = 0; k < tree.degree(v); ++k) {
                int u = tree.neighbors(v)[k];
                if (dec.layer[u] == i && u > v) x[tree.incident_edges(v)[k]] = 0;
            }
        for (int v : buckets[i]) {
            int higher = 0, fixed_ones = 0;
            for (int k = 0; k < tree.degree(v); ++k) {
                int u = tree.neighbors(v)[k];
                if (dec.layer[u] > i) {
                    ++higher;
                    fixed_ones += x[tree.incident_edges(v)[k]];
                }
            }
            if (higher > 1)
                throw Error("one-per-node: node " + std::to_string(tree.id(v)) +
                            " has more than one higher-layer neighbor (c=3 property violated)");
            fill_free_ports(tree, x, v, fixed_ones == 0 && lowest_free_port(tree, x, v) >= 0 ? 1 : 0);
            if (constrained(tree, p, v)) {
                int xdeg = 0;
                for (int32_t e : tree.incident_edges(v)) xdeg += x[e];
                if (tree.degree(v) >= 3 && xdeg != 1)
                    throw Error("one-per-node: constrained node " + std::to_string(tree.id(v)) +
                                " has X-degree " + std::to_string(xdeg));
                const std::string& constraint =
                    tree.color(v) == Color::White ? p.W : p.B;
                if (constraint[xdeg] != '1')
                    throw Error("one-per-node: constrained node " + std::to_string(tree.id(v)) +
                                " violates its constraint");
            }
        }
    }
    return EdgeLabeling{std::vector<int8_t>(x.begin(), x.end())};
}

} // namespace

EdgeLabeling solve_hypergraph_matching(const BinaryProblem& p, const ColoredTree& tree,
                                       LayerDecomposition* out_layers) {
    validate_problem(p);
    if (p.d < 3 || p.delta < 3 || p != hypergraph_matching_problem(p.d, p.delta))
        throw InputError("solve_hypergraph_matching: not the hypergraph matching problem");
    return one_per_node_labeling(p, tree, out_layers);
}

EdgeLabeling solve_special(const BinaryProblem& p, const ColoredTree& tree,
                           LayerDecomposition* out_layers) {
    validate_problem(p);
    if (p.d < 3 || p != special_problem(p.d, p.delta))
        throw InputError("solve_special: not the special problem");

    LayerDecomposition dec = rake_compress(tree, 5, RCVariant::Standard);
    if (out_layers) *out_layers = dec;
    auto buckets = layer_buckets(tree, dec);

    std::vector<int8_t> x(tree.m(), kUnset);
    std::vector<int> deg_gi(tree.n(), 0);
    for (int i = dec.L; i >= 1; --i) {
        for (int v : buckets[i]) {
            deg_gi[v] = 0;
            for (int32_t u : tree.neighbors(v))
                if (dec.layer[u] >= i) ++deg_gi[v];
        }
        // A degree-2 node of this layer was removed as part of a path
        // fragment; its maximal same-layer degree-2 run has at least c = 5
        // nodes, hence at least two white nodes.
        auto run_neighbor_count = [&](int v) {
            int cnt = 0;
            for (int32_t u : tree.neighbors(v))
                if (dec.layer[u] == i && deg_gi[u] == 2) ++cnt;
            return cnt;
        };
        // The label a run endpoint copies: its outer port value (a
        // higher-layer label, or 0 when the outer neighbor sits in the same
        // layer).
        auto endpoint_copy = [&](int v) -> int {
            for (int k = 0; k < tree.degree(v); ++k) {
                int u = tree.neighbors(v)[k];
                if (dec.layer[u] > i)
                    return x[tree.incident_edges(v)[k]];
            }
            return 0;
        };

        // Same-layer edges are 0 except the path edge next to a black run
        // endpoint that copies a fixed 1.
        for (int v : buckets[i]) {
            for (int k = 0; k < tree.degree(v); ++k) {
                int u = tree.neighbors(v)[k];
                if (dec.layer[u] != i || u < v) continue;
                int e = tree.incident_edges(v)[k];
                int val = 0;
                for (int z : {v, u}) {
                    int o = (z == v) ? u : v;
                    if (tree.color(z) == Color::Black && deg_gi[z] == 2 && deg_gi[o] == 2 &&
                        run_neighbor_count(z) == 1 && endpoint_copy(z) == 1)
                        val = 1;
                }
                x[e] = (int8_t)val;
            }
        }
        for (int v : buckets[i]) {
            int fixed_ones = 0, fixed_total = 0;
            for (int k = 0; k < tree.degree(v); ++k) {
                int8_t val = x[tree.incident_edges(v)[k]];
                if (val != kUnset) { ++fixed_total; fixed_ones += val; }
            }
            if (tree.color(v) == Color::White) {
                if (fixed_ones > 1)
                    throw Error("special solver: white node " + std::to_string(tree.id(v)) +
                                " saw two fixed 1-ports");
                int want = 0;
                if (fixed_ones == 0 && constrained(tree, p, v)) want = 1;
                fill_free_ports(tree, x, v, want);
                if (constrained(tree, p, v) && fixed_ones + want != 1)
                    throw Error("special solver: constrained white node " +
                                std::to_string(tree.id(v)) + " missed X-degree 1");
            } else {
                // Blacks copy: all-or-nothing.
                if (fixed_ones > 0) {
                    if (constrained(tree, p, v) && fixed_ones != fixed_total)
                        throw Error("special solver: constrained black node " +
                                    std::to_string(tree.id(v)) + " saw mixed fixed ports");
                    fill_free_ports(tree, x, v, tree.degree(v) - fixed_total);
                } else {
                    fill_free_ports(tree, x, v, 0);
                }
            }
        }
        // The c = 5 guarantee: every same-layer degree-2 run contains at
        // least two white nodes.
        std::vector<char> seen(tree.n(), 0);
        for (int v : buckets[i]) {
            if (deg_gi[v] != 2 || seen[v]) continue;
            int whites = 0, size = 0;
            std::queue<int> q;
            q.push(v);
            seen[v] = 1;
            while (!q.empty()) {
                int z = q.front();
                q.pop();
                ++size;
                if (tree.color(z) == Color::White) ++whites;
                for (int32_t u : tree.neighbors(z))
                    if (dec.layer[u] == i && deg_gi[u] == 2 && !seen[u]) { seen[u] = 1; q.push(u); }
            }
            if (whites < 2)
                throw Error("special solver: a removed path contains fewer than two white nodes");
            (void)size;
        }
    }
    return EdgeLabeling{std::vector<int8_t>(x.begin(), x.end())};
}

namespace {

struct EquivForm {
    BinaryProblem q;
    bool swapped;
    bool complemented;
};

std::vector<EquivForm> equivalent_forms(const BinaryProblem& p) {
    return {
        {p, false, false},
        {swap_colors(p), true, false},
        {complement_problem(p), false, true},
        {swap_colors(complement_problem(p)), true, true},
    };
}

EdgeLabeling map_back(EdgeLabeling x, bool complemented) {
    if (complemented)
        for (auto& v : x.x) v = (int8_t)(1 - v);
    return x;
}

} // namespace

EdgeLabeling solve(const BinaryProblem& p, const ColoredTree& tree, SolveInfo* info) {
    Classification cls = classify(p);
    SolveInfo local;
    SolveInfo& si = info ? *info : local;
    EdgeLabeling result;

    switch (cls.complexity) {
        case Complexity::Unsolvable:
            throw InputError("solve: problem " + format_problem(p) + " is unsolvable");
        case Complexity::Constant:
            si.kind = SolverKind::Constant;
            si.solved = p;
            si.route = std::string("constant family ") + to_string(cls.primary_family);
            result = solve_constant(p, tree);
            break;
        case Complexity::Global:
            result = solve_global(p, tree, &si);
            si.route = std::string("global family ") + to_string(cls.primary_family);
            break;
        case Complexity::Logarithmic: {
            if (is_resilient(p, {2, 1}) || is_resilient(p, {1, 2})) {
                si.kind = SolverKind::Resilient;
                si.solved = p;
                si.route = is_resilient(p, {2, 1}) ? "(2,1)-resilient" : "(1,2)-resilient";
                LayerDecomposition dec;
                result = solve_resilient(p, tree, &dec);
                si.layers = std::move(dec);
                break;
            }
            // Restrict an equivalent form onto the hypergraph matching or
            // special pattern; a solution of the harder problem transfers.
            // The one-per-node route also accepts a degree-2 side when that
            // side may stay at X-degree 0 (the c=3 layering can leave
            // degree-2 constrained nodes unmatched).
            bool done = false;
            for (const EquivForm& form : equivalent_forms(p)) {
                const BinaryProblem& q = form.q;
                BinaryProblem hm = hypergraph_matching_problem(q.d, q.delta);
                BinaryProblem sp = q.d >= 3 ? special_problem(q.d, q.delta) : BinaryProblem{};
                bool use_hm = is_restriction(hm, q) &&
                              (q.d >= 3 || q.W[0] == '1') && (q.delta >= 3 || q.B[0] == '1');
                bool use_sp = !use_hm && q.d >= 3 && is_restriction(sp, q);
                if (!use_hm && !use_sp) continue;
                si.kind = use_hm ? SolverKind::HypergraphMatching : SolverKind::Special;
                si.swapped = form.swapped;
                si.complemented = form.complemented;
                si.solved = use_hm ? q : sp;
                si.route = std::string(use_hm ? "restricted to hypergraph matching"
                                              : "restricted to special problem") +
                           (form.swapped ? " after color swap" : "") +
                           (form.complemented ? " after complement" : "");
                ColoredTree swapped = form.swapped ? swap_tree_colors(tree) : ColoredTree(tree);
                LayerDecomposition dec;
                EdgeLabeling y = use_hm ? one_per_node_labeling(q, swapped, &dec)
                                        : solve_special(sp, swapped, &dec);
                si.layers = std::move(dec);
                result = map_back(std::move(y), form.complemented);
                done = true;
                break;
            }
            if (!done)
                throw Error("solve: dispatch failed for " + format_problem(p) +
                            "; no resilient, matching or special route exists");
            break;
        }
    }

    auto violations = verify_labeling(tree, p, result);
    if (!violations.empty())
        throw Error("solve: produced labeling fails verification at node " +
                    std::to_string(violations.front().node_id) + " (route: " + si.route + ")");
    return result;
}

} // namespace binlcl
