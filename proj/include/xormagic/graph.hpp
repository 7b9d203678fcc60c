#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xormagic {

using Edge = std::pair<int, int>;

// Simple undirected graph stored as per-vertex bitset rows.
// Immutable after construction; operations that change the edge set
// return a new graph, so values can be shared freely across threads.
class Graph {
public:
    explicit Graph(int order) : Graph(order, {}) {}

    Graph(int order, const std::vector<Edge>& edge_list)
        : order_(order), words_((order + 63) / 64), rows_(static_cast<std::size_t>(order) * words_, 0) {
        if (order < 1)
            throw std::invalid_argument("graph order must be >= 1");
        for (const auto& [u, v] : edge_list)
            add_edge(u, v);
    }

    int order() const { return order_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return bit(u, v);
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(rows_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < order_; ++u)
            if (bit(v, u))
                out.push_back(u);
        return out;
    }

    std::vector<int> closed_neighbors(int v) const {
        std::vector<int> out = neighbors(v);
        out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

    // The common valency if the graph is regular, absent otherwise.
    std::optional<int> regularity() const {
        const int k = degree(0);
        for (int v = 1; v < order_; ++v)
            if (degree(v) != k)
                return std::nullopt;
        return k;
    }

    bool is_connected() const {
        std::vector<char> seen(order_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < order_; ++y) {
                if (bit(x, y) && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == order_;
    }

    Graph complement() const {
        Graph g(order_);
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (!bit(u, v))
                    g.set_bit(u, v);
        return g;
    }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (bit(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (int v = 0; v < order_; ++v)
            total += static_cast<std::size_t>(degree(v));
        return total / 2;
    }

    // Exact adjacency equality, not isomorphism.
    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::invalid_argument("vertex index out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
        set_bit(u, v);
    }

    bool bit(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    int order_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

// A vertex permutation given by its image sequence.
struct VertexMap {
    int order = 0;
    std::vector<int> image;

    VertexMap(int order_in, std::vector<int> image_in) : order(order_in), image(std::move(image_in)) {
        if (static_cast<int>(image.size()) != order)
            throw std::invalid_argument("vertex map image size does not match order");
        std::vector<char> seen(order, 0);
        for (int x : image) {
            if (x < 0 || x >= order || seen[x])
                throw std::invalid_argument("vertex map image is not a permutation");
            seen[x] = 1;
        }
    }

    static VertexMap identity(int order) {
        std::vector<int> img(order);
        for (int i = 0; i < order; ++i)
            img[i] = i;
        return VertexMap(order, std::move(img));
    }

    int operator()(int v) const { return image.at(v); }
};

inline Graph apply_vertex_map(const Graph& g, const VertexMap& f) {
    if (f.order != g.order())
        throw std::invalid_argument("vertex map order does not match graph order");
    std::vector<Edge> mapped;
    for (const auto& [u, v] : g.edges())
        mapped.emplace_back(f(u), f(v));
    return Graph(g.order(), mapped);
}

// True iff f maps g onto h edge-for-edge.
inline bool is_isomorphism_witness(const Graph& g, const Graph& h, const VertexMap& f) {
    if (g.order() != h.order() || f.order != g.order())
        throw std::invalid_argument("isomorphism witness check needs equal orders");
    return apply_vertex_map(g, f) == h;
}

} // namespace xormagic
