#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"
#include "topcode/hypergraph.hpp"
#include "topcode/labeling.hpp"
#include "topcode/matching.hpp"

namespace topcode {

struct ColoredGraph {
    Graph graph;
    SetColoring coloring;
};

// --- set-coloring classes (conditions (a)-(i)) -------------------------------

enum class SetClassCondition {
    DomainVertices,      // (a) X = V
    DomainEdges,         // (b) X = E
    DomainTotal,         // (c) X = V u E
    AdjacentVertexSets,  // (d) F(u) != F(v) on edges
    AdjacentEdgeSets,    // (e) F(uv) != F(uw) for adjacent edges
    DistinctVertexSets,  // (f) |F(V)| = p
    DistinctEdgeSets,    // (g) |F(E)| = q
    EdgeInduced,         // (h) every c in F'(uv) generated by R_est witnesses
    DistinctInducedEdge, // (i) |F'(E)| = q
};

enum class NamedSetClass {
    StrongVertexSetLabeling,        // a + f
    StrongEdgeSetLabeling,          // b + g
    StronglyInducedEdgeSetLabeling, // g + h
    StronglyTotalSetLabeling,       // c + f + g
    StrongSetColoring,              // a + f + h + i
    SetLabeling,                    // a + d
    EdgeSetLabeling,                // b + e
    TotalSetColoring,               // c + d + e
    SetColoringSubjectToRest,       // a + d + e + h
    PseudoVertexSetLabeling,        // a and not d
    PseudoEdgeSetLabeling,          // b and not e
    PseudoTotalSetColoring,         // c and not (d and e)
};

std::vector<SetClassCondition> conditions_of(NamedSetClass cls);

struct UniformityConstants {
    int v_min = 0, v_max = 0; // vertex set sizes (v_s, v_l)
    int e_min = 0, e_max = 0;
    int t_min = 0, t_max = 0;
    std::optional<int> alpha() const { return v_min == v_max ? std::optional<int>(v_min) : std::nullopt; }
    std::optional<int> beta() const { return e_min == e_max ? std::optional<int>(e_min) : std::nullopt; }
    std::optional<int> k_total() const { return t_min == t_max ? std::optional<int>(t_min) : std::nullopt; }
};

struct ClassReport {
    bool ok = false;
    std::vector<std::pair<std::string, bool>> conditions;
    std::vector<std::string> violations;
    UniformityConstants uniformity;
};

ClassReport verify_class(const Graph& g, const SetColoring& sc,
                         const std::vector<SetClassCondition>& conditions);
ClassReport verify_class(const Graph& g, const SetColoring& sc, NamedSetClass cls);

// --- intersected-graph verification -------------------------------------------

struct IntersectedReport {
    bool ok = false;                  // c0 + numeric constraints hold everywhere
    bool c0 = false;                  // F(uv) superset of non-empty F(u) & F(v)
    bool constraints = false;         // per-edge witnesses for every c_k
    bool proper = false;              // adjacent vertex sets distinct
    bool injective = false;           // all vertex sets distinct
    bool complete = false;            // every intersecting hyperedge pair is an edge
    bool is_intersected_graph = false; // ok && injective && complete
    std::vector<std::string> violations;
};
IntersectedReport verify_intersected(const Graph& g, const SetColoring& sc,
                                     const ConstraintSet& constraints);

// --- intersection total set-labelings (graceful / odd / rainbow) --------------

enum class IntersectionKind { Graceful, OddGraceful, Rainbow };

struct IntersectionTotalReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::map<Edge, int> representatives; // witness a_uv when ok
};
IntersectionTotalReport verify_intersection_total(const Graph& g, const SetColoring& sc,
                                                  IntersectionKind kind);

// Builds the intersection total set-labeling of a tree from a graceful /
// odd-graceful labeling (F(x) = incident edge colors), or the regular rainbow
// labeling from the set sequence {[1,k]}.
SetColoring construct_for_tree(const Graph& tree, IntersectionKind kind);

// --- VSET leaf-peeling ---------------------------------------------------------

// Leaf-peeling set-coloring of a tree from an injective vertex labeling:
// every vertex takes {f(v), f(parent v)} where the parent is its unique
// neighbor at the peeling round removing v; the final star's center keeps
// {f(center)}. Edge sets are the endpoint intersections (non-empty).
SetColoring vset_coloring(const Graph& tree, const Labeling& f);

// --- PSCS algorithms -----------------------------------------------------------

// Iterated VSET: round 1 is vset_coloring, each further round unions in the
// parent's previous set. rounds is capped by max(1, D(T)/2).
SetColoring pscs1(const Graph& tree, const Labeling& f, int rounds);

// Edge-neighborhood base sets, then (rounds-1) union lifts.
SetColoring pscs2(const Graph& tree, const Labeling& f, int rounds);

// Vertex-split a connected non-tree graph into a spanning tree of q+1
// vertices, VSET-color it, and recombine with unions; the returned edge sets
// are [F(u) & F(v)] plus the graceful witness |f(u)-f(v)|.
struct Pscs3Result {
    SetColoring coloring;            // on the input graph
    Graph tree;                      // the vertex-split tree
    SetColoring tree_coloring;
    std::vector<int> tree_to_graph;  // tree vertex -> original vertex
};
Pscs3Result pscs3(const Graph& g, const Labeling& f);

// Edge-odd-graceful base: color each member, then coincide equally-labeled
// vertices across the base (union rules). Vertices of the result are the
// distinct labels, in increasing order.
struct Pscs4Result {
    Graph graph;
    SetColoring coloring;
    std::vector<long long> vertex_labels; // label of each result vertex
};
Pscs4Result pscs4(const std::vector<std::pair<Graph, Labeling>>& base);

// --- Chyper / Cgraph conditions -------------------------------------------------

enum class CgraphKind {
    Subintersected = 1,          // Chyper-1
    RRankSubintersected,         // Chyper-2
    IntersectedEdgeIntersected,  // Chyper-1 + Chyper-3
    RRankIntersectedEdge,        // Chyper-2 + Chyper-3
    EdgeIntersected,             // Chyper-3
    AdjacentEdgeIntersected,     // Chyper-3 + Chyper-4
    IndividualEdgeIntersected,   // Chyper-3 + Chyper-5
};

struct ChyperReport {
    bool ok = false;
    bool vertex_sets_distinct = false;      // preamble, reported
    bool adjacent_edge_sets_distinct = false; // preamble, reported (not gating)
    std::vector<std::string> violations;
};
ChyperReport verify_chyper(const Graph& g, const SetColoring& sc, CgraphKind kind, int r = 2);

enum class AdjacentStrategy { LeafPeeling, LongestPath };
SetColoring construct_adjacent_edge_intersected(const Graph& tree, AdjacentStrategy strategy);

// --- chi'_set -------------------------------------------------------------------

struct ChiSetResult {
    int value = 0;
    std::map<Edge, int> witness; // empty when only the closed form was used
};
// Closed forms for complete graphs and trees; exact search otherwise
// (capped at 12 edges).
ChiSetResult chi_set_prime(const Graph& g);
// Exact minimum regardless of shape (capped at 12 edges).
ChiSetResult chi_set_prime_exact(const Graph& g);

VerifyReport verify_adjacent_1_common(const Graph& g, const std::map<Edge, int>& f);

// Edge coloring induced by a set-labeling with |F(u) & F(v)| = 1 everywhere
// (and adjacent intersections distinct): edge uv takes the unique common
// element. Throws PreconditionError when the hypotheses fail.
std::map<Edge, int> derive_edge_coloring(const Graph& g, const std::vector<IntSet>& F);

// --- set-colored homomorphism -----------------------------------------------

struct SetHomReport {
    bool ok = false;
    std::vector<std::string> violations;
};
SetHomReport set_colored_homomorphism(const Graph& g, const SetColoring& Fg, const Graph& h,
                                      const SetColoring& Fh, const std::vector<int>& phi);

// --- pan-operation graphs / set-set / compound ---------------------------------

enum class PanOp { Intersection, Union, SymmetricDifference, GroupAdd };

struct PanReport {
    bool ok = false;                 // conditions (i) + (ii)
    bool is_pan_operation_graph = false; // plus condition (iii)
    std::vector<std::string> violations;
};
// group_k/group_m parameterize the GroupAdd op: e (.) e' is the set of values
// (a + b - k) mod M over a in e, b in e'.
PanReport verify_pan_operation(const Graph& g, const SetColoring& sc, PanOp op,
                               const ConstraintSet& extra = {}, long long group_k = 0,
                               long long group_m = 0);

using SetFamily = std::vector<IntSet>; // sorted family of sorted sets
struct FamilyColoring {
    std::vector<SetFamily> vertex;
    std::map<Edge, SetFamily> edge;
};
struct CompoundReport {
    bool ok = false;
    bool is_compound_intersected_graph = false;
    std::vector<std::string> violations;
};
// Set-set (Defn of theta over subset families) and compound colorings share
// the superset/non-empty family-intersection rule.
CompoundReport verify_family_coloring(const Graph& g, const FamilyColoring& fc);

// --- splitting / coinciding with colors ----------------------------------------

// Esc rules: colors are duplicated onto the split copies.
ColoredGraph edge_split_colored(const ColoredGraph& cg, int u, int v);

// Edge-coincide with union rules on the merged endpoints and edge.
ColoredGraph edge_coincide_colored(const ColoredGraph& cg, Edge e1, Edge e2);

enum class VscRule {
    Copy = 4,          // Vsc-4: both copies keep F(w)
    DisjointParts = 5, // Vsc-5: F(w) split into two disjoint non-empty parts
    Subsets = 6,       // Vsc-6: overlapping proper subsets
};
ColoredGraph vertex_split_colored(const ColoredGraph& cg, int u, const std::vector<int>& part1,
                                  const std::vector<int>& part2, VscRule rule,
                                  const IntSet& set1 = {}, const IntSet& set2 = {});

// Vertex-coincide with the union rule F(w) = F(w') u F(w'').
ColoredGraph vertex_coincide_colored(const ColoredGraph& cg, int u1, int u2);

// DC composition: vertices (edges) of the inputs carrying equal color sets
// are coincided, colors united per Op-1/Op-2.
ColoredGraph dc_compose(const std::vector<ColoredGraph>& parts);

} // namespace topcode
