#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topcode/error.hpp"

namespace topcode {

using Edge = std::pair<int, int>; // stored with smaller id first

// Simple undirected graph with stable vertex ids 0..p-1. No loops, no
// multi-edges. Immutable after construction; all operations below return new
// graphs. The adjacency is kept as per-vertex bitmasks, which caps the order
// at 64; every exact search in the library operates far below that.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    Graph(int order, std::vector<Edge> edges, std::vector<std::string> names = {});

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves); // center = vertex 0

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    std::uint64_t adjacency_mask(int v) const { return adj_[v]; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    const std::vector<std::string>& names() const { return names_; }

    bool connected() const;
    bool is_tree() const;
    // Bipartition classes (X,Y) for connected bipartite graphs; X contains
    // vertex 0. Empty classes are possible for K1.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::vector<Edge> edges_;            // sorted
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> names_;     // optional, empty or size p
};

// Non-increasing multiset of vertex degrees.
using DegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g);

// Erdos-Gallai test: d (sorted non-increasing, non-negative) is the degree
// sequence of some simple graph iff the sum is even and
//   sum_{i<=k} d_i <= k(k-1) + sum_{j>k} min(k, d_j)   for all k.
bool is_graphical(const DegreeSequence& d);

// --- splitting / coinciding -------------------------------------------------

// Vertex-split u into u' and u''. part1/part2 is a bipartition of N(u); both
// non-empty, disjoint, covering N(u). u' keeps u's id, u'' is appended with id
// p. remap maps old ids to new ids (identity here).
struct VertexSplit {
    Graph graph;
    std::vector<int> remap;
    int u_prime = -1;
    int u_second = -1;
};
VertexSplit split_vertex(const Graph& g, int u, const std::vector<int>& part1,
                         const std::vector<int>& part2);

// Vertex-coincide u1 and u2 into one vertex. Requires N(u1) & N(u2) disjoint
// and u1u2 not an edge. The coincided vertex takes the smaller id; remaining
// ids are compacted. remap[old] = new id; remap[u1] == remap[u2] == merged.
struct VertexCoincide {
    Graph graph;
    std::vector<int> remap;
    int merged = -1;
};
VertexCoincide coincide_vertices(const Graph& g, int u1, int u2);

// Edge-split uv per the two-sided splitting rule: remove uv, split u into
// u'/u'' against (part_u1, part_u2) of N(u)\{v} and v likewise, then add the
// two new edges u'v' and u''v''. Empty parts give the leaf-split form. The
// default overload uses the train-hook split: u' takes all of N(u)\{v}, v''
// takes all of N(v)\{u}, the other two sides are leaves.
// Ids: u' = u, v' = v, u'' = p, v'' = p + 1.
struct EdgeSplit {
    Graph graph;
    std::vector<int> remap;
    Edge first;  // u'v'
    Edge second; // u''v''
};
EdgeSplit split_edge(const Graph& g, int u, int v);
EdgeSplit split_edge(const Graph& g, int u, int v, const std::vector<int>& part_u1,
                     const std::vector<int>& part_u2, const std::vector<int>& part_v1,
                     const std::vector<int>& part_v2);

// Edge-coincide e1 = (u1,v1) and e2 = (u2,v2), oriented: u1 merges with u2
// and v1 with v2. Preconditions mirror vertex coinciding on both pairs.
struct EdgeCoincide {
    Graph graph;
    std::vector<int> remap;
    Edge merged;
};
EdgeCoincide coincide_edges(const Graph& g, Edge e1, Edge e2);

// --- homomorphisms -----------------------------------------------------------

struct HomReport {
    bool homomorphism = false;
    bool faithful = false; // image is an induced subgraph of H
    bool full = false;     // uv in E(G) <=> f(u)f(v) in E(H)
};
// f must be total on V(g) with values in V(h).
HomReport check_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f);

// Backtracking isomorphism search with degree refinement. Returns the
// lexicographically smallest witness (as a map from V(g) to V(h)) or nullopt.
// Throws CapExceededError above 32 vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// --- hamiltonicity / connectivity --------------------------------------------

// All Hamilton cycles, each given as a vertex sequence starting at vertex 0
// and deduplicated under rotation+reflection (canonical form: lexicographically
// least). Throws CapExceededError above 16 vertices.
std::vector<std::vector<int>> hamilton_cycles(const Graph& g);

struct EdgeHamiltonianReport {
    bool edge_hamiltonian = false;
    std::optional<Edge> uncovered; // an edge on no Hamilton cycle, when false
};
EdgeHamiltonianReport is_edge_hamiltonian(const Graph& g);

// Minimum vertex cut size (p-1 for complete graphs) plus one witness cut
// (empty for complete graphs). Requires a connected input.
struct ConnectivityReport {
    int connectivity = 0;
    std::vector<int> cut;
};
ConnectivityReport vertex_connectivity_cut(const Graph& g);
int vertex_connectivity(const Graph& g);

} // namespace topcode
