#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "xormagic/families.hpp"
#include "xormagic/graph.hpp"

using namespace xormagic;

namespace {

// Straightforward union-find, used as an independent connectivity oracle.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected_oracle(const Graph& g) {
    UnionFind uf(g.order());
    for (const auto& [u, v] : g.edges())
        uf.unite(u, v);
    for (int v = 1; v < g.order(); ++v)
        if (uf.find(v) != uf.find(0))
            return false;
    return true;
}

Graph random_graph(std::mt19937& rng, int order, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph(order, edges);
}

VertexMap random_permutation(std::mt19937& rng, int order) {
    std::vector<int> img(order);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return VertexMap(order, std::move(img));
}

} // namespace

TEST_CASE("neighbors and closed neighborhoods") {
    const Graph c8 = circulant(8, {1, 4});
    CHECK(c8.neighbors(0) == std::vector<int>{1, 4, 7});
    CHECK(c8.closed_neighbors(0) == std::vector<int>{0, 1, 4, 7});

    const Graph k4 = power_of_cycle(4, 2);
    CHECK(k4.neighbors(2) == std::vector<int>{0, 1, 3});

    const Graph edgeless(4);
    CHECK(edgeless.neighbors(0).empty());
    CHECK(edgeless.closed_neighbors(0) == std::vector<int>{0});

    CHECK_THROWS_AS(c8.neighbors(8), std::invalid_argument);
    CHECK_THROWS_AS(c8.neighbors(-1), std::invalid_argument);
}

TEST_CASE("constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("regularity") {
    CHECK(circulant(8, {1, 4}).regularity() == 3);
    // K_{4,4} as the complement of two disjoint K_4 blocks
    std::vector<Edge> k44;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v)
            k44.emplace_back(u, v);
    CHECK(Graph(8, k44).regularity() == 4);
    const Graph path(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(path.regularity().has_value());
}

TEST_CASE("connectivity") {
    CHECK_FALSE(circulant(16, {2, 4}).is_connected());
    CHECK(circulant(16, {1}).is_connected());
    CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("connectivity matches union-find oracle on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const int order = 2 + static_cast<int>(rng() % 63);
        const Graph g = random_graph(rng, order, trial % 2 ? 0.04 : 0.15);
        CHECK(g.is_connected() == connected_oracle(g));
    }
}

TEST_CASE("complement") {
    CHECK(power_of_cycle(4, 2).complement() == Graph(4));
    CHECK(circulant(8, {1, 4}).complement() == circulant(8, {2, 3}));
    const Graph q3 = hypercube(3);
    CHECK(q3.complement().complement() == q3);
}

TEST_CASE("complement regularity identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = circulant(16, {1 + static_cast<int>(rng() % 8), static_cast<int>(1 + rng() % 8)});
        const auto k = g.regularity();
        REQUIRE(k.has_value());
        CHECK(g.complement().regularity() == g.order() - 1 - *k);
    }
}

TEST_CASE("vertex maps") {
    const Graph c8 = circulant(8, {1, 4});
    CHECK(apply_vertex_map(c8, VertexMap::identity(8)) == c8);

    std::vector<int> rot(8);
    for (int i = 0; i < 8; ++i)
        rot[i] = (i + 1) % 8;
    CHECK(apply_vertex_map(c8, VertexMap(8, rot)) == c8);

    CHECK_THROWS_AS(VertexMap(3, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VertexMap(3, {0, 1}), std::invalid_argument);
}

TEST_CASE("the even/odd swap map carries C16({1,6,8}) onto C16({6,7,8})") {
    std::vector<int> img(16);
    for (int i = 0; i < 16; ++i)
        img[i] = i % 2 == 0 ? i : (i + 8) % 16;
    const VertexMap f(16, img);
    CHECK(apply_vertex_map(circulant(16, {1, 6, 8}), f) == circulant(16, {6, 7, 8}));
    CHECK(is_isomorphism_witness(circulant(16, {1, 6, 8}), circulant(16, {6, 7, 8}), f));
}

TEST_CASE("every permutation is a witness for its own image") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(rng, 10 + static_cast<int>(rng() % 10), 0.3);
        const VertexMap f = random_permutation(rng, g.order());
        CHECK(is_isomorphism_witness(g, apply_vertex_map(g, f), f));
    }
}

TEST_CASE("edges are sorted with u < v") {
    const Graph g(5, {{4, 1}, {2, 0}, {3, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 4}, {2, 3}});
    CHECK(g.edge_count() == 3);
}
