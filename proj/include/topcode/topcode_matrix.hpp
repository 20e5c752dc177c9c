#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"
#include "topcode/group.hpp"
#include "topcode/rng.hpp"
#include "topcode/setcolor.hpp"

namespace topcode {

using BigInt = boost::multiprecision::cpp_int;

// 3 x q matrix with columns (x_i, e_i, y_i): tail color, edge color, head
// color of the i-th edge of a labeled graph.
struct TopcodeMatrix {
    std::array<std::vector<long long>, 3> rows;
    int columns() const { return static_cast<int>(rows[0].size()); }
    bool operator==(const TopcodeMatrix&) const = default;
};

// Set flavor: every entry a finite integer set; column invariant
// F(e_i) superset of F(x_i) & F(y_i), non-empty.
struct SetTopcodeMatrix {
    std::array<std::vector<IntSet>, 3> rows;
    int columns() const { return static_cast<int>(rows[0].size()); }
    bool operator==(const SetTopcodeMatrix&) const = default;
};

// String flavor: every entry one permutation string of the set entry.
struct StringTopcodeMatrix {
    std::array<std::vector<std::string>, 3> rows;
    int columns() const { return static_cast<int>(rows[0].size()); }
};

// Columns = (f(x_i), f(x_i y_i), f(y_i)) with x_i the smaller endpoint id, in
// the given edge order (indices into g.edges(); default lexicographic).
TopcodeMatrix from_labeled_graph(const Graph& g, const Labeling& f, LabelingKind kind,
                                 const std::vector<int>& edge_order = {});

// Column-major reading with decimal entries concatenated (no separator unless
// given). Seeded mode emits `count` strings, each from a fresh seeded
// permutation of all 3q entries.
std::string to_string_canonical(const TopcodeMatrix& m, const std::string& sep = "");
std::vector<std::string> to_strings_seeded(const TopcodeMatrix& m, std::uint64_t seed, int count,
                                           const std::string& sep = "");

// (3q)! for a numeric matrix.
BigInt string_count(const TopcodeMatrix& m);

// M(ABC) = prod |X_i|! * prod |E_i|! * prod |Y_i|!  and the grand total
// (3q)! * M(ABC).
struct SetStringCount {
    BigInt m_abc;
    BigInt total;
};
SetStringCount set_string_count(const SetTopcodeMatrix& m);

// Set-type matrix of a set-colored graph (verify_intersected must pass with
// the coloring's constraint set).
SetTopcodeMatrix from_set_colored_graph(const Graph& g, const SetColoring& sc,
                                        const std::vector<int>& edge_order = {});

// Replace every set entry by a seeded permutation string of its elements.
StringTopcodeMatrix string_type(const SetTopcodeMatrix& m, std::uint64_t seed);

// Nested flavors: a 3 x q grid of indices into a registry.
enum class NestedKind { Graph, Matrix, Hypergraph };

struct NestedTopcodeMatrix {
    NestedKind kind;
    std::array<std::vector<int>, 3> grid; // indices into the registry
    // registries (one active per kind)
    GraphicGroup group;                        // Graph kind: group elements
    std::vector<TopcodeMatrix> matrices;       // Matrix kind
    std::vector<SetFamily> families;           // Hypergraph kind
    int columns() const { return static_cast<int>(grid[0].size()); }
};

// Graph kind: phi maps V u E of J into group element indices (1-based), with
// phi(xy) = phi(x) (+)_zero phi(y) checked on every edge.
NestedTopcodeMatrix nested_graph(const Graph& j, const GraphicGroup& group,
                                 const std::vector<int>& phi_vertex,
                                 const std::map<Edge, int>& phi_edge, int zero);

// Matrix kind: entrywise Topcode matrices of the graph kind's entries.
NestedTopcodeMatrix nested_matrix(const NestedTopcodeMatrix& graph_kind);

// Hypergraph kind from a verified compound set-coloring.
NestedTopcodeMatrix nested_hypergraph(const Graph& j, const FamilyColoring& fc);

} // namespace topcode
