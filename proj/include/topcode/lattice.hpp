#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topcode/graph.hpp"
#include "topcode/hypergraph.hpp"
#include "topcode/setcolor.hpp"

namespace topcode {

enum class LatticeOp { O1, O2, O3, EdgeCoincide, VertexCoincide };

std::string to_string(LatticeOp op);

// Concrete site choice for one pairwise application. O1/O2/O3 split one
// vertex in each operand (u with bipartition part_a/part_b of N(u)); the rest
// coincide or join the four split halves. EdgeCoincide takes oriented edges,
// VertexCoincide plain vertices. All ids are local to their operand.
struct OpSites {
    int u1 = -1;
    std::vector<int> part1a, part1b;
    int u2 = -1;
    std::vector<int> part2a, part2b;
    Edge e1{-1, -1}, e2{-1, -1};
    int v1 = -1, v2 = -1;
};

// Applies op to two vertex-disjoint colored graphs; colors are merged by the
// union rules on coincided vertices/edges (split copies keep their set).
// Uncolored use: wrap the graphs with empty colorings via apply_op.
ColoredGraph apply_op_colored(const ColoredGraph& g1, const ColoredGraph& g2, LatticeOp op,
                              const OpSites& sites);
Graph apply_op(const Graph& g1, const Graph& g2, LatticeOp op, const OpSites& sites);

struct LatticeWord {
    std::vector<int> multiplicities; // a_k per base, sum >= 1
    std::vector<LatticeOp> ops;      // fold operations, size sum(a_k) - 1
    std::uint64_t seed = 0;          // seeded site selection among legal sites
};

struct ProvenanceStep {
    LatticeOp op;
    OpSites sites;
};

struct LatticeSample {
    ColoredGraph result;
    std::vector<ProvenanceStep> trace;
};

// Left fold L_k = op_k(L_{k-1}, T_{k+1}) over the canonical permutation of
// a_1 B_1, a_2 B_2, ...; sites are drawn uniformly among legal sites in
// canonical order from the word's seed. Replays are deterministic. Total
// order is capped at 64 vertices.
LatticeSample sample_lattice(const std::vector<ColoredGraph>& bases, const LatticeWord& word);

// Replay a recorded trace (site choices fixed).
ColoredGraph replay_lattice(const std::vector<ColoredGraph>& bases,
                            const std::vector<int>& multiplicities,
                            const std::vector<ProvenanceStep>& trace);

// Hypergraph-level fold: coincide the selected bases (union of grounds and
// families).
Hypergraph hypergraph_lattice_element(const std::vector<Hypergraph>& bases,
                                      const std::vector<int>& multiplicities);

// All 2^m subset unions ({0,1} coefficients), the empty selection giving the
// empty hypergraph.
std::vector<Hypergraph> enumerate01(const std::vector<Hypergraph>& bases);

// The three edge-hamiltonian-preserving extensions of a split vertex:
// join the halves by an edge, by a path with `length` internal vertices, or
// through a K_m coincided onto both halves.
enum class ExtensionMode { EdgeJoin, PathJoin, CliqueJoin };

struct ExtensionCheck {
    bool base_edge_hamiltonian = false;
    bool extended_edge_hamiltonian = false;
    bool equivalent = false;
    Graph extended;
};
ExtensionCheck edge_hamiltonian_extension_check(const Graph& g, int u,
                                                const std::vector<int>& part1,
                                                const std::vector<int>& part2, ExtensionMode mode,
                                                int size = 3);

} // namespace topcode
