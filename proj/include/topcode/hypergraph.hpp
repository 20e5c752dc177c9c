#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"

namespace topcode {

// Finite hypergraph: ground set Lambda plus a family of distinct non-empty
// hyperedges whose union is Lambda. Hyperedges are stored sorted and the
// family is sorted lexicographically, which fixes every "deterministic order"
// contract below.
class Hypergraph {
public:
    Hypergraph() = default;

    // Validates the invariants; throws PreconditionError listing every
    // violation otherwise.
    static Hypergraph validate(IntSet ground, std::vector<IntSet> edges);
    // Convenience: ground = union of the family.
    static Hypergraph from_edges(std::vector<IntSet> edges);

    const IntSet& ground() const { return ground_; }
    const std::vector<IntSet>& edges() const { return edges_; }
    int order() const { return static_cast<int>(ground_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    bool operator==(const Hypergraph& o) const {
        return ground_ == o.ground_ && edges_ == o.edges_;
    }

private:
    IntSet ground_;
    std::vector<IntSet> edges_;
};

// Fixed point of GR-1 (delete vertices lying in exactly one hyperedge) and
// GR-2 (delete hyperedges contained in another), applied until stable.
// Works on a multiset of sets; may be empty.
std::vector<IntSet> graham_reduction(const Hypergraph& h);

// Dual hypergraph. incidence[j] lists, for the j-th ground element, the
// indices of hyperedges containing it (the incidence sets X_j). The hypergraph part
// deduplicates the incidence family over ground {0..n-1} (hyperedge indices).
struct DualResult {
    std::vector<IntSet> incidence; // parallel to ground()
    Hypergraph hypergraph;
};
DualResult dual(const Hypergraph& h);

// r when every hyperedge has cardinality r.
std::optional<int> uniformity(const Hypergraph& h);

struct StructureReport {
    std::vector<IntSet> ears;      // hyperedges satisfying clause (i) or (ii)
    IntSet isolated_vertices;      // vertices lying in exactly one hyperedge
    bool irreducible = false;      // no hyperedge contained in another
};
StructureReport structure_report(const Hypergraph& h);

// All exact covers of the ground set by pairwise-disjoint hyperedges,
// in deterministic (family-index lexicographic) order. Capped at 24 edges.
std::vector<std::vector<IntSet>> perfect_hypermatchings(const Hypergraph& h);

struct HyperDegrees {
    std::vector<int> hyperedge;   // deg(e_i) = #{e_j != e_i intersecting e_i}
    std::map<int, int> vertex;    // deg(x) = #{e : x in e}
};
HyperDegrees hyperedge_degrees(const Hypergraph& h);

// Intersected-graph: one vertex per hyperedge (vertex i = order[i]-th
// hyperedge), edges exactly between intersecting hyperedges, vertex sets
// F(v_i) = e_i, edge sets F(uv) = F(u) & F(v). The default order is the
// family's canonical order.
struct IntersectedGraph {
    Graph graph;
    SetColoring coloring; // constraints = {c0}
};
IntersectedGraph intersected_graph(const Hypergraph& h);
IntersectedGraph intersected_graph(const Hypergraph& h, const std::vector<int>& order);

// A cycle through all hyperedges (as family indices) with consecutive members
// intersecting and no member an ear; nullopt when none exists. Capped at 16.
std::optional<std::vector<int>> hyperedge_hamilton_cycle(const Hypergraph& h);

// kappa(intersected graph) plus the witness cut mapped back to hyperedges.
// Requires a connected intersected graph; capped at 12 hyperedges.
struct HyperConnectivity {
    int connectivity = 0;
    std::vector<IntSet> cut_set; // hyperedge set-cut-set
};
HyperConnectivity hyperedge_connectivity(const Hypergraph& h);

// chromatic queries ---------------------------------------------------------

// Least k properly coloring the intersected graph (hyperedge chromatic
// index). Exact; capped at 12 hyperedges.
int hyperedge_chromatic_index(const Hypergraph& h);

// Least k coloring the ground set so that no hyperedge of size >= 2 is
// monochromatic. Exact; capped at 12 hyperedges / 20 vertices.
int hypervertex_chromatic_number(const Hypergraph& h);

// Checks a supplied hyper-total coloring: edge part proper under
// intersection, vertex part non-monochromatic on every hyperedge of size >=
// 2; also reports whether the supplied edge coloring is inside the Vizing
// window [Delta, Delta+1] of the intersection structure.
struct HyperTotalReport {
    bool ok = false;
    bool edge_part_proper = false;
    bool vertex_part_ok = false;
    bool vizing_window = false;
    std::vector<std::string> violations;
};
HyperTotalReport verify_hyper_total(const Hypergraph& h, const std::vector<int>& edge_color,
                                    const std::map<int, int>& vertex_color);

// set-decrease / set-increase -------------------------------------------------

// Aligned form: subtract[i] (if present) is removed from the i-th hyperedge
// of the canonical family. At least one entry must change the family; the
// result must validate, otherwise the family is reported "not decreasing".
Hypergraph set_decrease(const Hypergraph& h,
                        const std::vector<std::optional<IntSet>>& subtract);
Hypergraph set_increase(const Hypergraph& h,
                        const std::vector<std::optional<IntSet>>& add);

// Convenience form over an unaligned family X: every hyperedge drops its
// first applicable member of X (in canonical order), skipping any removal
// that would empty a hyperedge, duplicate another, or uncover a ground
// element. Deterministic; the general subtraction relation leaves the pairing free.
enum class AdjustMode { Decrease, Increase };
Hypergraph set_adjust(const Hypergraph& h, const std::vector<IntSet>& X, AdjustMode mode);

// Union of two hypergraphs with duplicate hyperedges merged.
Hypergraph coincide_hypergraphs(const Hypergraph& a, const Hypergraph& b);

// Complement every hyperedge inside the ground set; errors when a complement
// is empty (hyperedge = Lambda).
Hypergraph adjacent_hypergraph(const Hypergraph& h);

} // namespace topcode
