#include "binlcl/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>

namespace binlcl {

ColoredTree::ColoredTree(std::vector<int64_t> ids, std::vector<Color> colors,
                         std::vector<std::vector<int32_t>> adj_in_port_order)
    : ids_(std::move(ids)), colors_(std::move(colors)), adj_(std::move(adj_in_port_order)) {
    validate_and_index();
}

ColoredTree ColoredTree::from_edges(std::vector<int64_t> ids, std::vector<Color> colors,
                                    const std::vector<std::pair<int64_t, int64_t>>& id_edges) {
    std::unordered_map<int64_t, int32_t> index;
    index.reserve(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
        if (!index.emplace(ids[i], (int32_t)i).second)
            throw InputError("duplicate node id " + std::to_string(ids[i]));
    }
    std::vector<std::vector<int32_t>> adj(ids.size());
    for (auto [a, b] : id_edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw InputError("edge references unknown node id");
        adj[ia->second].push_back(ib->second);
        adj[ib->second].push_back(ia->second);
    }
    // Default port rule: ascending neighbor id.
    for (size_t v = 0; v < adj.size(); ++v)
        std::sort(adj[v].begin(), adj[v].end(),
                  [&](int32_t x, int32_t y) { return ids[x] < ids[y]; });
    return ColoredTree(std::move(ids), std::move(colors), std::move(adj));
}

void ColoredTree::validate_and_index() {
    const int n = (int)ids_.size();
    if ((int)colors_.size() != n || (int)adj_.size() != n)
        throw InputError("tree: field sizes disagree");
    if (n == 0) throw InputError("tree: empty");

    {
        std::vector<int64_t> sorted_ids = ids_;
        std::sort(sorted_ids.begin(), sorted_ids.end());
        if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
            throw InputError("tree: duplicate node ids");
    }

    long long edge_count = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<int32_t> seen = adj_[v];
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InputError("tree: parallel edges at node " + std::to_string(ids_[v]));
        for (int32_t u : adj_[v]) {
            if (u < 0 || u >= n || u == v) throw InputError("tree: bad adjacency entry");
            if (colors_[u] == colors_[v])
                throw InputError("tree: coloring is not proper at edge " +
                                 std::to_string(ids_[v]) + "-" + std::to_string(ids_[u]));
            if (std::find(adj_[u].begin(), adj_[u].end(), v) == adj_[u].end())
                throw InputError("tree: port pairing is not symmetric");
        }
        edge_count += degree(v);
    }
    edge_count /= 2;
    if (edge_count != n - 1) throw InputError("tree: edge count is not n-1");

    // Connectivity.
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int32_t u : adj_[v])
            if (!vis[u]) { vis[u] = 1; ++reached; q.push(u); }
    }
    if (reached != n) throw InputError("tree: not connected");

    // Canonical edge list and the port -> edge map.
    edges_.clear();
    edges_.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        for (int32_t u : adj_[v])
            if (v < u) edges_.emplace_back(v, u);
    std::sort(edges_.begin(), edges_.end(), [&](const auto& a, const auto& b) {
        int64_t a_lo = std::min(ids_[a.first], ids_[a.second]);
        int64_t a_hi = std::max(ids_[a.first], ids_[a.second]);
        int64_t b_lo = std::min(ids_[b.first], ids_[b.second]);
        int64_t b_hi = std::max(ids_[b.first], ids_[b.second]);
        return std::tie(a_lo, a_hi) < std::tie(b_lo, b_hi);
    });
    std::map<std::pair<int32_t, int32_t>, int32_t> edge_of;
    for (size_t e = 0; e < edges_.size(); ++e)
        edge_of[edges_[e]] = (int32_t)e;
    incident_edge_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        incident_edge_[v].resize(adj_[v].size());
        for (size_t k = 0; k < adj_[v].size(); ++k) {
            int u = adj_[v][k];
            incident_edge_[v][k] = edge_of[{std::min(v, u), std::max(v, u)}];
        }
    }
}

int ColoredTree::port_to(int u, int v) const {
    for (size_t k = 0; k < adj_[u].size(); ++k)
        if (adj_[u][k] == v) return (int)k + 1;
    throw InputError("port_to: not adjacent");
}

int ColoredTree::node_by_id(int64_t id) const {
    for (int v = 0; v < n(); ++v)
        if (ids_[v] == id) return v;
    throw InputError("unknown node id " + std::to_string(id));
}

std::vector<int> ColoredTree::eccentricities() const {
    // Height below each node plus the best path through the parent,
    // computed with two sweeps over a BFS order rooted at node 0.
    const int nn = n();
    std::vector<int> parent(nn, -1), order;
    order.reserve(nn);
    {
        std::queue<int> q;
        q.push(0);
        std::vector<char> vis(nn, 0);
        vis[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int32_t u : adj_[v])
                if (!vis[u]) { vis[u] = 1; parent[u] = v; q.push(u); }
        }
    }
    std::vector<int> down(nn, 0); // 1 + max height among children
    for (int i = nn - 1; i >= 0; --i) {
        int v = order[i];
        for (int32_t u : adj_[v])
            if (u != parent[v]) down[v] = std::max(down[v], down[u] + 1);
    }
    std::vector<int> up(nn, 0); // longest path leaving v through its parent
    for (int v : order) {
        // Two largest child heights of v.
        int best1 = -1, best2 = -1;
        for (int32_t u : adj_[v]) {
            if (u == parent[v]) continue;
            int h = down[u] + 1;
            if (h > best1) { best2 = best1; best1 = h; }
            else if (h > best2) best2 = h;
        }
        for (int32_t u : adj_[v]) {
            if (u == parent[v]) continue;
            int through = (down[u] + 1 == best1) ? best2 : best1;
            up[u] = std::max(up[v], through) + 1;
        }
    }
    std::vector<int> ecc(nn);
    for (int v = 0; v < nn; ++v) ecc[v] = std::max(down[v], up[v]);
    return ecc;
}

namespace {

struct Builder {
    std::vector<Color> colors;
    std::vector<std::vector<int32_t>> adj;

    int add_node(Color c) {
        colors.push_back(c);
        adj.emplace_back();
        if ((int)colors.size() > kMaxTreeNodes) throw CapError("tree generator exceeded node cap");
        return (int)colors.size() - 1;
    }
    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // Assign ids by BFS order from node 0 (1..n); a nonzero seed remaps them
    // into [1, n^2] keeping relative BFS order irrelevant for uniqueness.
    ColoredTree finish(uint64_t id_seed) {
        const int n = (int)colors.size();
        std::vector<int64_t> ids(n);
        std::vector<int> bfs_pos(n, -1);
        std::queue<int> q;
        q.push(0);
        bfs_pos[0] = 0;
        int cnt = 1;
        for (; !q.empty();) {
            int v = q.front();
            q.pop();
            for (int32_t u : adj[v])
                if (bfs_pos[u] < 0) bfs_pos[u] = cnt++, q.push(u);
        }
        std::vector<int64_t> label(n);
        std::iota(label.begin(), label.end(), 1);
        if (id_seed != 0) {
            std::mt19937_64 rng(id_seed);
            const uint64_t span = (uint64_t)n * (uint64_t)n;
            std::vector<int64_t> picks;
            picks.reserve(n);
            // Draw n distinct values in [1, n^2] by rejection; dense enough
            // at small n, sparse at large n, deterministic either way.
            std::unordered_map<uint64_t, char> taken;
            while ((int)picks.size() < n) {
                uint64_t x = rng() % span + 1;
                if (taken.emplace(x, 1).second) picks.push_back((int64_t)x);
            }
            label = picks;
        }
        for (int v = 0; v < n; ++v) ids[v] = label[bfs_pos[v]];
        std::vector<std::pair<int64_t, int64_t>> id_edges;
        id_edges.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            for (int32_t u : adj[v])
                if (v < u) id_edges.emplace_back(ids[v], ids[u]);
        return ColoredTree::from_edges(std::move(ids), std::move(colors), id_edges);
    }
};

int full_degree(Color c, int d, int delta) { return c == Color::White ? d : delta; }

} // namespace

ColoredTree gen_complete_biregular(int d, int delta, int radius, Color center_color, uint64_t id_seed) {
    if (d < 2 || delta < 2) throw InputError("degrees must be at least 2");
    if (radius < 1) throw InputError("radius must be at least 1");
    Builder b;
    int center = b.add_node(center_color);
    std::vector<std::pair<int, int>> frontier{{center, 0}}; // (node, depth)
    for (auto i = 0u; i < frontier.size(); ++i) {
        auto [v, depth] = frontier[i];
        if (depth == radius) continue;
        Color child_color = other(b.colors[v]);
        int want = full_degree(b.colors[v], d, delta) - (depth == 0 ? 0 : 1);
        for (int k = 0; k < want; ++k) {
            int u = b.add_node(child_color);
            b.add_edge(v, u);
            frontier.emplace_back(u, depth + 1);
        }
    }
    return b.finish(id_seed);
}

ColoredTree gen_caterpillar(int d, int path_len, uint64_t id_seed) {
    if (d < 3) throw InputError("caterpillar requires d >= 3");
    if (path_len < 1) throw InputError("path_len must be at least 1");
    Builder b;
    std::vector<int> path(path_len);
    for (int i = 0; i < path_len; ++i) {
        path[i] = b.add_node(Color::White);
        if (i > 0) {
            int sub = b.add_node(Color::Black); // subdivision node, degree 2
            b.add_edge(path[i - 1], sub);
            b.add_edge(sub, path[i]);
        }
    }
    auto add_pendant = [&](int w) {
        int black = b.add_node(Color::Black);
        int leaf = b.add_node(Color::White);
        b.add_edge(w, black);
        b.add_edge(black, leaf);
    };
    for (int i = 0; i < path_len; ++i) {
        int pendants = d - 2;
        if (i == 0) ++pendants;
        if (i == path_len - 1) ++pendants;
        for (int k = 0; k < pendants; ++k) add_pendant(path[i]);
    }
    return b.finish(id_seed);
}

ColoredTree gen_random_biregular(int d, int delta, int n_target, uint64_t seed) {
    if (d < 2 || delta < 2) throw InputError("degrees must be at least 2");
    if (n_target < 2) throw InputError("n_target must be at least 2");
    Builder b;
    std::mt19937_64 rng(seed);
    auto chance = [&](uint64_t percent) { return rng() % 100 < percent; };

    int root = b.add_node(Color::White);
    std::queue<int> frontier; // nodes that still owe children
    frontier.push(root);
    while (!frontier.empty() && (int)b.colors.size() < n_target) {
        int v = frontier.front();
        frontier.pop();
        bool is_root = (v == root);
        int want = full_degree(b.colors[v], d, delta) - (is_root ? 0 : 1);
        for (int k = 0; k < want; ++k) {
            int u = b.add_node(other(b.colors[v]));
            b.add_edge(v, u);
            // The first child always stays on the frontier, so growth cannot
            // die out before n_target; the rest become leaves with small
            // probability, which keeps the interior biregular.
            if (k == 0 || !chance(15)) frontier.push(u);
        }
    }
    return b.finish(seed + 0x9e3779b97f4a7c15ull);
}

ColoredTree gen_path(int n, uint64_t id_seed) {
    if (n < 1) throw InputError("path needs at least one node");
    Builder b;
    int prev = b.add_node(Color::White);
    for (int i = 1; i < n; ++i) {
        int v = b.add_node(other(b.colors[prev]));
        b.add_edge(prev, v);
        prev = v;
    }
    return b.finish(id_seed);
}

} // namespace binlcl
