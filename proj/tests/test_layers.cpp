#include <doctest.h>

#include <cmath>

#include "binlcl/layers.hpp"
#include "binlcl/tree.hpp"

using namespace binlcl;

namespace {

void check_layer_claims(const ColoredTree& t, const LayerDecomposition& dec) {
    // Every node assigned exactly once.
    for (int v = 0; v < t.n(); ++v) {
        CHECK(dec.layer[v] >= 1);
        CHECK(dec.layer[v] <= dec.L);
    }
    // deg within same-or-higher layers is at most 2; at most 1 for the
    // restricted color.
    for (int v = 0; v < t.n(); ++v) {
        int deg_gi = 0;
        for (int32_t u : t.neighbors(v))
            if (dec.layer[u] >= dec.layer[v]) ++deg_gi;
        CHECK(deg_gi <= 2);
        if ((dec.variant == RCVariant::WhiteRestricted && t.color(v) == Color::White) ||
            (dec.variant == RCVariant::BlackRestricted && t.color(v) == Color::Black))
            CHECK(deg_gi <= 1);
    }
}

} // namespace

TEST_CASE("path collapses in one layer at c = 1") {
    ColoredTree path = gen_path(10);
    LayerDecomposition dec = rake_compress(path, 1);
    CHECK(dec.L == 1);
    for (int v = 0; v < path.n(); ++v) CHECK(dec.layer[v] == 1);
}

TEST_CASE("star has two layers") {
    // center white with 5 black leaves
    std::vector<int64_t> ids{1, 2, 3, 4, 5, 6};
    std::vector<Color> colors{Color::White, Color::Black, Color::Black,
                              Color::Black, Color::Black, Color::Black};
    std::vector<std::pair<int64_t, int64_t>> edges{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}};
    ColoredTree star = ColoredTree::from_edges(ids, colors, edges);
    LayerDecomposition dec = rake_compress(star, 1);
    CHECK(dec.L == 2);
    int center = star.node_by_id(1);
    CHECK(dec.layer[center] == 2);
    for (int v = 0; v < star.n(); ++v)
        if (v != center) CHECK(dec.layer[v] == 1);
}

TEST_CASE("long c-fragments are required for compress") {
    // Path of 4 between hubs: with c = 5 the middle nodes survive the first
    // iteration, with c = 1 they do not.
    ColoredTree t = gen_caterpillar(3, 6);
    LayerDecomposition c1 = rake_compress(t, 1);
    LayerDecomposition c5 = rake_compress(t, 5);
    CHECK(c1.L <= c5.L);
    check_layer_claims(t, c1);
    check_layer_claims(t, c5);
}

TEST_CASE("complete biregular tree at c = 3 meets the tight bound") {
    ColoredTree t = gen_complete_biregular(3, 3, 6, Color::White);
    LayerDecomposition dec = rake_compress(t, 3);
    check_layer_claims(t, dec);
    CHECK(dec.L <= 2.0 * 3.0 * std::log2((double)t.n()) + 2.0);
    for (size_t i = 0; i < dec.u_before.size(); ++i)
        CHECK(dec.removed[i] * 6ll >= dec.u_before[i]);
}

TEST_CASE("decomposition claims and removal rate on random trees") {
    for (auto [d, delta] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}}) {
        ColoredTree t = gen_random_biregular(d, delta, 3000, 17);
        for (int c : {1, 3, 5}) {
            LayerDecomposition dec = rake_compress(t, c);
            check_layer_claims(t, dec);
            CHECK(dec.L <= 4.0 * c * std::log2((double)t.n()) + 4.0);
            REQUIRE(dec.u_before.size() == dec.removed.size());
            for (size_t i = 0; i < dec.u_before.size(); ++i)
                CHECK(dec.removed[i] * 2ll * c >= dec.u_before[i]);
        }
    }
}

TEST_CASE("restricted variants") {
    ColoredTree t = gen_random_biregular(3, 3, 2000, 23);
    for (RCVariant variant : {RCVariant::WhiteRestricted, RCVariant::BlackRestricted}) {
        LayerDecomposition dec = rake_compress(t, 1, variant);
        check_layer_claims(t, dec);
        CHECK(dec.L <= 4.0 * std::log2((double)t.n()) + 4.0);
    }
}
