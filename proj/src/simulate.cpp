#include "binlcl/simulate.hpp"

#include <algorithm>
#include <memory>
#include <queue>

namespace binlcl {

namespace {

void encode_rec(const ColoredTree& t, int v, int parent, int depth, int radius, bool with_ids,
                std::string& out) {
    out += t.color(v) == Color::White ? 'W' : 'B';
    out += std::to_string(t.degree(v));
    if (with_ids) {
        out += '#';
        out += std::to_string(t.id(v));
    }
    out += '[';
    for (int k = 0; k < t.degree(v); ++k) {
        if (k) out += ',';
        int u = t.neighbors(v)[k];
        if (u == parent) {
            out += '^';
        } else if (depth == radius) {
            out += '?';
        } else {
            out += std::to_string(t.port_to(u, v)); // reverse port on the far end
            out += ':';
            encode_rec(t, u, v, depth + 1, radius, with_ids, out);
        }
    }
    out += ']';
}

} // namespace

std::string View::encode() const {
    std::string out;
    out.reserve(64);
    encode_rec(*tree_, root_, -1, 0, radius_, with_ids_, out);
    return out;
}

SimulationResult run_local_simulation(const ColoredTree& tree, const WhiteAlgorithm& algo,
                                      const SimOptions& opts) {
    SimulationResult res;
    res.labeling.x.assign(tree.m(), -1);
    std::vector<int> undecided;
    for (int v = 0; v < tree.n(); ++v)
        if (tree.color(v) == Color::White) undecided.push_back(v);

    const bool check_consistency = tree.n() <= opts.consistency_check_node_cap;
    std::unordered_map<std::string, std::vector<int8_t>> decided_views;

    int last_decision_round = 0;
    for (int r = 0; !undecided.empty(); ++r) {
        if (r > opts.max_rounds)
            throw Error("simulation exceeded the round budget of " + std::to_string(opts.max_rounds) +
                        " with " + std::to_string(undecided.size()) + " nodes undecided");
        std::vector<int> still;
        for (int v : undecided) {
            View view(tree, v, r, opts.with_ids);
            Decision dec = algo(view);
            if (!dec.decide) {
                still.push_back(v);
                continue;
            }
            if ((int)dec.labels.size() != tree.degree(v))
                throw Error("algorithm decided " + std::to_string(dec.labels.size()) +
                            " ports at a degree-" + std::to_string(tree.degree(v)) + " node");
            if (check_consistency) {
                std::string enc = view.encode();
                auto it = decided_views.find(enc);
                if (it != decided_views.end() && it->second != dec.labels)
                    throw Error("algorithm output differs across identical views (node " +
                                std::to_string(tree.id(v)) + ", round " + std::to_string(r) + ")");
                decided_views.emplace(std::move(enc), dec.labels);
            }
            for (int k = 0; k < tree.degree(v); ++k) {
                if (dec.labels[k] != 0 && dec.labels[k] != 1)
                    throw Error("algorithm produced a label outside {0,1}");
                int e = tree.incident_edges(v)[k];
                if (res.labeling.x[e] != -1)
                    throw Error("algorithm relabeled a fixed edge");
                res.labeling.x[e] = dec.labels[k];
            }
            res.per_node_round[tree.id(v)] = r;
            last_decision_round = r;
        }
        undecided.swap(still);
    }
    res.rounds = last_decision_round;
    for (int8_t val : res.labeling.x)
        if (val == -1) throw Error("simulation finished with unlabeled edges");
    return res;
}

namespace {

// ---- constant-time view algorithms ------------------------------------

WhiteAlgorithm constant_algorithm(const BinaryProblem& p, Family family) {
    return [p, family](const View& view) -> Decision {
        const ColoredTree& t = view.tree();
        const int v = view.root();
        const int deg = t.degree(v);
        switch (family) {
            case Family::IVa:
                return {true, std::vector<int8_t>(deg, 0)};
            case Family::IVb:
                return {true, std::vector<int8_t>(deg, 1)};
            case Family::IIIa: {
                std::vector<int8_t> labels(deg, 0);
                if (deg == p.d) {
                    const int i = (int)p.W.find('1');
                    for (int k = 0; k < i; ++k) labels[k] = 1;
                }
                return {true, labels};
            }
            case Family::IIIb: {
                // Needs the black endpoints' ports, i.e. a depth-1 view.
                if (view.radius() < 1) return {};
                std::vector<int8_t> labels(deg, 0);
                const int j = (int)p.B.find('1');
                for (int k = 0; k < deg; ++k) {
                    int b = t.neighbors(v)[k];
                    if (t.degree(b) == p.delta && t.port_to(b, v) <= j) labels[k] = 1;
                }
                return {true, labels};
            }
            default:
                throw Error("constant_algorithm: unexpected family");
        }
    };
}

// ---- decision-radius machinery for global and layered solvers ---------

struct RadiusPlan {
    std::vector<int> decide_at;              // per node: first radius at which to decide
    std::vector<std::vector<int8_t>> labels; // per node: port labels from the centralized run
};

// Shared wrapper: decide as soon as the view radius reaches the planned
// decision radius (the whole component being visible always suffices).
WhiteAlgorithm plan_algorithm(const ColoredTree& tree, RadiusPlan plan) {
    auto shared = std::make_shared<RadiusPlan>(std::move(plan));
    const ColoredTree* bound = &tree;
    return [shared, bound](const View& view) -> Decision {
        if (&view.tree() != bound)
            throw Error("view algorithm applied to a different tree than it was built for");
        const int v = view.root();
        if (view.radius() < shared->decide_at[v]) return {};
        return {true, shared->labels[v]};
    };
}

std::vector<std::vector<int8_t>> port_labels_from(const ColoredTree& tree, const EdgeLabeling& x) {
    std::vector<std::vector<int8_t>> labels(tree.n());
    for (int v = 0; v < tree.n(); ++v) {
        if (tree.color(v) != Color::White) continue;
        labels[v].resize(tree.degree(v));
        for (int k = 0; k < tree.degree(v); ++k)
            labels[v][k] = x.x[tree.incident_edges(v)[k]];
    }
    return labels;
}

// Global solvers need the full component: the output at a node may depend on
// arbitrarily distant structure (the 2-coloring class or the root leaf).
WhiteAlgorithm global_algorithm(const BinaryProblem& p, const ColoredTree& tree) {
    EdgeLabeling x = solve_global(p, tree);
    RadiusPlan plan;
    plan.decide_at = tree.eccentricities();
    plan.labels = port_labels_from(tree, x);
    return plan_algorithm(tree, std::move(plan));
}

// Layered solvers: a node may decide once its view certifies its own layer,
// the relative layers of all neighbors it reads, and the decisions of the
// strictly-higher nodes it copies labels from. A node's layer is determined
// by the ball of radius (c+1)*layer around it, so the information radius
// rho(v) satisfies the recursion below, evaluated in decreasing layer order.
std::vector<int> layered_decision_radii(const ColoredTree& tree, const LayerDecomposition& dec,
                                        bool run_reads) {
    const int n = tree.n();
    const int c = dec.c;
    std::vector<int> rho(n, 0);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dec.layer[a] > dec.layer[b]; });

    std::vector<int> deg_gi(n, 0);
    for (int v = 0; v < n; ++v)
        for (int32_t u : tree.neighbors(v))
            if (dec.layer[u] >= dec.layer[v]) ++deg_gi[v];

    for (int v : order) {
        const int layer_v = dec.layer[v];
        int r = 1 + (c + 1) * layer_v; // own layer + neighbors' relative layers
        for (int32_t u : tree.neighbors(v)) {
            if (dec.layer[u] > layer_v) r = std::max(r, 1 + rho[u]);
            if (run_reads && deg_gi[v] == 2 && dec.layer[u] == layer_v && deg_gi[u] == 2) {
                // Path neighbors: their endpoint status and copied label.
                r = std::max(r, 2 + (c + 1) * layer_v);
                for (int32_t z : tree.neighbors(u))
                    if (dec.layer[z] > layer_v) r = std::max(r, 2 + rho[z]);
            }
        }
        rho[v] = r;
    }
    return rho;
}

WhiteAlgorithm layered_algorithm(const BinaryProblem& p, const ColoredTree& tree) {
    SolveInfo info;
    EdgeLabeling x = solve(p, tree, &info);
    if (!info.layers)
        throw Error("layered_algorithm: solver did not produce a decomposition");
    std::vector<int> rho =
        layered_decision_radii(tree, *info.layers, info.kind == SolverKind::Special);
    std::vector<int> ecc = tree.eccentricities();
    RadiusPlan plan;
    plan.decide_at.resize(tree.n());
    for (int v = 0; v < tree.n(); ++v) plan.decide_at[v] = std::min(rho[v], ecc[v]);
    plan.labels = port_labels_from(tree, x);
    return plan_algorithm(tree, std::move(plan));
}

} // namespace

WhiteAlgorithm make_view_algorithm(const BinaryProblem& p, const ColoredTree& tree) {
    Classification cls = classify(p);
    switch (cls.complexity) {
        case Complexity::Unsolvable:
            throw InputError("no algorithm exists for an unsolvable problem");
        case Complexity::Constant:
            return constant_algorithm(p, cls.primary_family);
        case Complexity::Global:
            return global_algorithm(p, tree);
        case Complexity::Logarithmic:
            return layered_algorithm(p, tree);
    }
    throw Error("make_view_algorithm: unreachable");
}

} // namespace binlcl
