#include "binlcl/oracle.hpp"

namespace binlcl {

namespace {

// Incremental feasibility bookkeeping for the labeling search. A node with a
// color-matching full degree stays feasible as long as some admissible
// X-degree is reachable given its assigned and remaining ports.
struct Search {
    const ColoredTree& tree;
    const BinaryProblem& p;
    std::vector<int> assigned;
    std::vector<int> ones;

    Search(const ColoredTree& t, const BinaryProblem& prob)
        : tree(t), p(prob), assigned(t.n(), 0), ones(t.n(), 0) {}

    bool feasible_at(int v) const {
        const bool white = tree.color(v) == Color::White;
        const int full = white ? p.d : p.delta;
        if (tree.degree(v) != full) return true;
        const std::string& c = white ? p.W : p.B;
        const int hi = ones[v] + (tree.degree(v) - assigned[v]);
        for (int j = ones[v]; j <= hi; ++j)
            if (c[j] == '1') return true;
        return false;
    }

    bool set_edge(int e, int val) {
        auto [a, b] = tree.edges()[e];
        ++assigned[a];
        ++assigned[b];
        ones[a] += val;
        ones[b] += val;
        return feasible_at(a) && feasible_at(b);
    }

    void unset_edge(int e, int val) {
        auto [a, b] = tree.edges()[e];
        --assigned[a];
        --assigned[b];
        ones[a] -= val;
        ones[b] -= val;
    }
};

// DFS over edges e..m-1 in lexicographic order (0 before 1). Returns false
// from the visitor to stop early.
template <typename Visitor>
bool dfs(Search& s, std::vector<int8_t>& labels, int e, Visitor&& visit) {
    if (e == (int)labels.size()) return visit(labels);
    for (int val = 0; val <= 1; ++val) {
        bool ok = s.set_edge(e, val);
        labels[e] = (int8_t)val;
        if (ok && !dfs(s, labels, e + 1, visit)) return false;
        s.unset_edge(e, val);
    }
    return true;
}

} // namespace

OracleResult brute_force_solve(const ColoredTree& tree, const BinaryProblem& p, OracleMode mode,
                               int max_edges) {
    validate_problem(p);
    if (tree.m() > max_edges)
        throw CapError("brute force: tree has " + std::to_string(tree.m()) +
                       " edges, cap is " + std::to_string(max_edges));
    OracleResult res;
    Search s(tree, p);
    std::vector<int8_t> labels(tree.m(), 0);
    switch (mode) {
        case OracleMode::First:
            dfs(s, labels, 0, [&](const std::vector<int8_t>& l) {
                res.first = EdgeLabeling{l};
                return false;
            });
            break;
        case OracleMode::Count:
            dfs(s, labels, 0, [&](const std::vector<int8_t>&) {
                ++res.count;
                return true;
            });
            break;
        case OracleMode::All:
            dfs(s, labels, 0, [&](const std::vector<int8_t>& l) {
                res.all.push_back(EdgeLabeling{l});
                return true;
            });
            res.count = res.all.size();
            break;
    }
    return res;
}

uint64_t brute_force_count_parallel(const ColoredTree& tree, const BinaryProblem& p, int max_edges) {
    validate_problem(p);
    if (tree.m() > max_edges)
        throw CapError("brute force: tree has " + std::to_string(tree.m()) +
                       " edges, cap is " + std::to_string(max_edges));
    const int m = tree.m();
    const int prefix_bits = std::min(m, 10);
    const uint64_t prefixes = 1ull << prefix_bits;
    std::vector<uint64_t> counts(prefixes, 0);

#pragma omp parallel for schedule(dynamic)
    for (long long pre = 0; pre < (long long)prefixes; ++pre) {
        Search s(tree, p);
        std::vector<int8_t> labels(m, 0);
        bool ok = true;
        for (int e = 0; e < prefix_bits && ok; ++e) {
            int val = (pre >> (prefix_bits - 1 - e)) & 1;
            ok = s.set_edge(e, val);
            labels[e] = (int8_t)val;
        }
        if (!ok) continue;
        uint64_t local = 0;
        if (prefix_bits == m) {
            local = 1;
        } else {
            dfs(s, labels, prefix_bits, [&](const std::vector<int8_t>&) {
                ++local;
                return true;
            });
        }
        counts[pre] = local;
    }
    uint64_t total = 0;
    for (uint64_t c : counts) total += c;
    return total;
}

ColoredTree standard_witness(const BinaryProblem& p, int radius) {
    validate_problem(p);
    if (radius < 1) throw InputError("witness radius must be at least 1");
    // Both central endpoints have full degree and fully constrained
    // neighborhoods, so the contradiction of every unsolvable family shows
    // up regardless of which side it lives on.
    std::vector<Color> colors;
    std::vector<std::vector<int32_t>> adj;
    auto add_node = [&](Color c) {
        colors.push_back(c);
        adj.emplace_back();
        return (int)colors.size() - 1;
    };
    auto add_edge = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    int w = add_node(Color::White);
    int b = add_node(Color::Black);
    add_edge(w, b);
    std::vector<std::pair<int, int>> frontier{{w, 0}, {b, 0}};
    for (size_t i = 0; i < frontier.size(); ++i) {
        auto [v, depth] = frontier[i];
        if (depth == radius) continue;
        const int full = colors[v] == Color::White ? p.d : p.delta;
        const int want = full - (int)adj[v].size();
        for (int k = 0; k < want; ++k) {
            int u = add_node(other(colors[v]));
            add_edge(v, u);
            frontier.emplace_back(u, depth + 1);
        }
    }
    const int n = (int)colors.size();
    std::vector<int64_t> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v + 1;
    std::vector<std::pair<int64_t, int64_t>> id_edges;
    for (int v = 0; v < n; ++v)
        for (int32_t u : adj[v])
            if (v < u) id_edges.emplace_back(ids[v], ids[u]);
    return ColoredTree::from_edges(std::move(ids), std::move(colors), id_edges);
}

} // namespace binlcl
