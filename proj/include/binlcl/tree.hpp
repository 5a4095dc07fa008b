#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binlcl/errors.hpp"

namespace binlcl {

enum class Color : uint8_t { White = 0, Black = 1 };

inline Color other(Color c) { return c == Color::White ? Color::Black : Color::White; }

// A properly 2-colored tree with a port numbering. Nodes are indexed
// 0..n-1 internally and carry unique external ids. Port k (1-based) of node
// v leads to adj[v][k-1]; by default neighbors are ordered by ascending id,
// matching the id-chosen port rule, but explicit port orders are accepted.
class ColoredTree {
public:
    // Adjacency given as neighbor index lists in port order.
    ColoredTree(std::vector<int64_t> ids, std::vector<Color> colors,
                std::vector<std::vector<int32_t>> adj_in_port_order);

    static ColoredTree from_edges(std::vector<int64_t> ids, std::vector<Color> colors,
                                  const std::vector<std::pair<int64_t, int64_t>>& id_edges);

    int n() const { return (int)ids_.size(); }
    int m() const { return (int)edges_.size(); }
    int64_t id(int v) const { return ids_[v]; }
    Color color(int v) const { return colors_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int32_t>& neighbors(int v) const { return adj_[v]; }
    int neighbor(int v, int port) const { return adj_[v][port - 1]; } // 1-based port

    // Edges in canonical order: sorted by (min endpoint id, max endpoint id).
    const std::vector<std::pair<int32_t, int32_t>>& edges() const { return edges_; }
    int edge_index(int v, int port) const { return incident_edge_[v][port - 1]; }
    const std::vector<int32_t>& incident_edges(int v) const { return incident_edge_[v]; }
    // Port of u on the edge to its neighbor v.
    int port_to(int u, int v) const;

    int node_by_id(int64_t id) const; // throws InputError if unknown

    // Eccentricity of every node (max distance to any node), O(n).
    std::vector<int> eccentricities() const;

private:
    std::vector<int64_t> ids_;
    std::vector<Color> colors_;
    std::vector<std::vector<int32_t>> adj_;
    std::vector<std::pair<int32_t, int32_t>> edges_;
    std::vector<std::vector<int32_t>> incident_edge_;

    void validate_and_index();
};

// Complete biregular tree: the center has full degree, every internal node at
// distance < radius has full degree (d white / delta black), nodes at
// distance radius are leaves.
ColoredTree gen_complete_biregular(int d, int delta, int radius, Color center_color,
                                   uint64_t id_seed = 0);

// A white path of path_len nodes padded to degree d with pendant subdivided
// edges; consecutive path whites are joined through degree-2 black nodes and
// the endpoints receive one extra pendant so every path white has degree d.
ColoredTree gen_caterpillar(int d, int path_len, uint64_t id_seed = 0);

// Random tree grown by attaching children to frontier nodes with alternating
// colors; every node ends with full degree or degree 1. Deterministic in the
// seed; the node count lands in [n_target, n_target + d*delta].
ColoredTree gen_random_biregular(int d, int delta, int n_target, uint64_t seed);

// Path on n nodes with alternating colors, starting white.
ColoredTree gen_path(int n, uint64_t id_seed = 0);

// Node cap shared by the generators.
inline constexpr int kMaxTreeNodes = 4'000'000;

} // namespace binlcl
