#pragma once

#include <vector>

#include "qirw/graph.hpp"
#include "qirw/path_decomposition.hpp"
#include "qirw/rng.hpp"

namespace qirw::test {

inline GraphPtr path_graph(int n) { // vertices 0..n-1
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::make(vs, es);
}

inline GraphPtr cycle_graph(int n) {
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::make(vs, es);
}

inline GraphPtr complete_graph(int n) {
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::make(vs, es);
}

inline GraphPtr star_graph(int leaves) { // center 0
    std::vector<int> vs{0};
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) {
        vs.push_back(i);
        es.emplace_back(0, i);
    }
    return Graph::make(vs, es);
}

// Random connected graph: spanning tree plus extra edges.
inline GraphPtr random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 1; i < n; ++i) es.emplace_back(i, rng.next_int(0, i - 1));
    for (int t = 0; t < extra_edges && n >= 2; ++t) {
        int a = rng.next_int(0, n - 1), b = rng.next_int(0, n - 1);
        if (a != b) es.emplace_back(a, b);
    }
    return Graph::make(vs, es);
}

// Random graph, possibly disconnected, each pair independently an edge.
inline GraphPtr random_graph(Rng& rng, int n, unsigned density_pct) {
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_coin(density_pct, 100)) es.emplace_back(i, j);
    return Graph::make(vs, es);
}

inline PathDecomposition path_bags(const GraphPtr& p) { // canonical width-1 bags for a path graph
    PathDecomposition d{p, {}};
    int n = static_cast<int>(p->vertex_count());
    if (n == 1) d.bags.push_back({p->vertices()[0]});
    for (int i = 0; i + 1 < n; ++i) d.bags.push_back({p->vertices()[static_cast<std::size_t>(i)],
                                                      p->vertices()[static_cast<std::size_t>(i) + 1]});
    return d;
}

} // namespace qirw::test
