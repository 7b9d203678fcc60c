#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "xormagic/graph.hpp"

namespace xormagic {

// Connection set of a circulant graph, kept in normalized form:
// distances in [1, m/2], distinct, sorted.
struct CirculantSpec {
    int m = 0;
    std::vector<int> distances;

    // Raw generators may be arbitrary integers (Cayley-style sets often
    // exceed m/2); each is reduced mod m and folded to min(s, m-s).
    static CirculantSpec normalized(int m, const std::vector<int>& raw) {
        if (m < 3)
            throw std::invalid_argument("circulant needs m >= 3");
        std::set<int> dists;
        for (int s : raw) {
            int r = s % m;
            if (r < 0)
                r += m;
            r = std::min(r, m - r);
            if (r != 0)
                dists.insert(r);
        }
        return CirculantSpec{m, std::vector<int>(dists.begin(), dists.end())};
    }

    bool operator==(const CirculantSpec&) const = default;
};

inline Graph circulant(const CirculantSpec& spec) {
    if (spec.m < 3)
        throw std::invalid_argument("circulant needs m >= 3");
    if (spec.distances.empty())
        throw std::invalid_argument("circulant needs a non-empty connection set");
    std::vector<Edge> edges;
    for (int i = 0; i < spec.m; ++i) {
        for (int s : spec.distances) {
            const int j = (i + s) % spec.m;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    return Graph(spec.m, edges);
}

inline Graph circulant(int m, const std::vector<int>& raw) {
    return circulant(CirculantSpec::normalized(m, raw));
}

// Q_n: vertices are the integers 0..2^n-1 read as n-bit vectors; the
// canonical vertex-to-(Z_2)^n correspondence is that binary reading.
inline Graph hypercube(int n) {
    if (n < 1)
        throw std::invalid_argument("hypercube needs n >= 1");
    const int order = 1 << n;
    std::vector<Edge> edges;
    for (int v = 0; v < order; ++v)
        for (int b = 0; b < n; ++b)
            if (int u = v ^ (1 << b); v < u)
                edges.emplace_back(v, u);
    return Graph(order, edges);
}

inline Graph power_of_cycle(int m, int r) {
    if (r < 1 || r > m / 2)
        throw std::invalid_argument("power of cycle needs 1 <= r <= m/2");
    std::vector<int> dists(r);
    std::iota(dists.begin(), dists.end(), 1);
    return circulant(m, dists);
}

inline Graph complement_power_of_cycle(int m, int r) {
    if (r < 1 || r > m / 2 - 1)
        throw std::invalid_argument("complement power of cycle needs 1 <= r <= m/2 - 1");
    std::vector<int> dists;
    for (int s = r + 1; s <= m / 2; ++s)
        dists.push_back(s);
    return circulant(m, dists);
}

inline Graph andrasfai(int r) {
    if (r < 2)
        throw std::invalid_argument("andrasfai needs r >= 2");
    const int m = 3 * r - 1;
    std::vector<int> raw;
    for (int k = 0; k <= (3 * r - 3) / 2; ++k)
        raw.push_back(3 * k + 1);
    return circulant(m, raw);
}

inline Graph doob(int r, int t) {
    if (r < 2 || t < 1)
        throw std::invalid_argument("doob needs r >= 2 and t >= 1");
    const int m = (r - 1) * t + 2;
    std::vector<int> raw;
    for (int k = 0; k <= (r - 1) * t / 2; ++k)
        raw.push_back(k * t + 1);
    return circulant(m, raw);
}

inline Graph mobius_ladder(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("mobius ladder needs even n >= 4");
    return circulant(n, {1, n / 2});
}

// Product vertex encoding is row-major: (g_i, h_i) -> g_i * |H| + h_i.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int hn = h.order();
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        for (int w = 0; w < hn; ++w)
            edges.emplace_back(u * hn + w, v * hn + w);
    for (const auto& [u, v] : h.edges())
        for (int w = 0; w < g.order(); ++w)
            edges.emplace_back(w * hn + u, w * hn + v);
    return Graph(g.order() * hn, edges);
}

inline Graph strong_product(const Graph& g, const Graph& h) {
    const int hn = h.order();
    std::vector<Edge> edges;
    for (int gu = 0; gu < g.order(); ++gu) {
        for (int hu = 0; hu < hn; ++hu) {
            const int a = gu * hn + hu;
            for (int gv = 0; gv < g.order(); ++gv) {
                for (int hv = 0; hv < hn; ++hv) {
                    const int b = gv * hn + hv;
                    if (b <= a)
                        continue;
                    const bool g_adj = g.has_edge(gu, gv);
                    const bool h_adj = h.has_edge(hu, hv);
                    if ((gu == gv && h_adj) || (hu == hv && g_adj) || (g_adj && h_adj))
                        edges.emplace_back(a, b);
                }
            }
        }
    }
    return Graph(g.order() * hn, edges);
}

} // namespace xormagic
