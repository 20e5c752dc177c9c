#pragma once

#include <vector>

#include "topcode/graph.hpp"
#include "topcode/hypergraph.hpp"
#include "topcode/rng.hpp"

namespace topcode::test {

// Random tree on n vertices where every vertex i >= 1 attaches to a parent
// j < i. Vertex order is a connected order, which keeps labeling searches
// well pruned.
inline Graph random_tree(Rng& rng, int n) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng.below(v));
        es.push_back({parent, v});
    }
    return Graph(n, std::move(es));
}

inline Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({static_cast<int>(rng.below(v)), v});
    Graph tree(n, es);
    int added = 0, guard = 0;
    while (added < extra_edges && guard < 200) {
        ++guard;
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(es.begin(), es.end(), e) != es.end()) continue;
        es.push_back(e);
        ++added;
    }
    return Graph(n, std::move(es));
}

// Random hypergraph with a connected intersected graph (retries until
// connected).
inline Hypergraph random_connected_hypergraph(Rng& rng, int ground_size, int edge_count) {
    while (true) {
        std::vector<IntSet> fam;
        for (int i = 0; i < edge_count; ++i) {
            IntSet e;
            for (int x = 0; x < ground_size; ++x) {
                if (rng.below(3) == 0) e.push_back(x);
            }
            if (e.empty()) e.push_back(static_cast<int>(rng.below(ground_size)));
            fam.push_back(normalized(e));
        }
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        if (static_cast<int>(fam.size()) != edge_count) continue;
        IntSet ground;
        for (const auto& e : fam) ground = set_union(ground, e);
        Hypergraph h = Hypergraph::validate(ground, fam);
        if (intersected_graph(h).graph.connected()) return h;
    }
}

} // namespace topcode::test
