#pragma once

#include <vector>

#include "topcode/coloring.hpp"
#include "topcode/hypergraph.hpp"

namespace topcode::test {

// The 8-uniform four-hyperedge family on [1,15], reconstructed from its dual
// incidence listing (x_j lies in e_i iff e_i appears in X_j).
inline Hypergraph venn_hypergraph() {
    return Hypergraph::validate(
        [] {
            IntSet g(15);
            for (int i = 0; i < 15; ++i) g[i] = i + 1;
            return g;
        }(),
        {{1, 2, 6, 7, 9, 11, 12, 15},
         {2, 3, 5, 6, 7, 10, 11, 13},
         {4, 5, 6, 8, 9, 10, 11, 12},
         {7, 8, 9, 10, 11, 13, 14, 15}});
}

// X_1..X_15 of the dual, as hyperedge-index sets (e_i -> i-1). The family
// above is already in canonical (sorted) order, so indices match the published
// e_1..e_4.
inline std::vector<IntSet> venn_dual_incidence() {
    return {{0},          {0, 1},    {1},       {2},          {1, 2},
            {0, 1, 2},    {0, 1, 3}, {2, 3},    {0, 2, 3},    {1, 2, 3},
            {0, 1, 2, 3}, {0, 2},    {1, 3},    {3},          {0, 3}};
}

inline std::vector<IntSet> venn_adjacent_family() {
    return {{3, 4, 5, 8, 10, 13, 14},
            {1, 4, 8, 9, 12, 14, 15},
            {1, 2, 3, 7, 13, 14, 15},
            {1, 2, 3, 4, 5, 6, 12}};
}

// The 13-hyperedge family on [1,12] whose intersected graph carries a
// 5-clique and a hyperedge Hamilton cycle.
inline std::vector<IntSet> twelve_family() {
    return {{2, 12}, {1, 11}, {1, 10},   {6, 10, 11, 12}, {4, 5, 6}, {5, 7}, {7, 8, 9},
            {1, 8},  {4, 9},  {3, 4},    {2, 8},          {1, 2, 3}, {1, 7}};
}

inline Hypergraph twelve_hypergraph() { return Hypergraph::from_edges(twelve_family()); }

// The set-decreased family: a tree-shaped hypergraph on the same ground set.
inline std::vector<IntSet> twelve_reduced_family() {
    return {{12}, {11}, {10}, {6, 10, 11, 12}, {4, 5, 6}, {5, 7}, {7, 8, 9},
            {8},  {4, 9}, {3, 4}, {2},         {1, 2, 3}, {1}};
}

inline Hypergraph twelve_reduced_hypergraph() {
    return Hypergraph::from_edges(twelve_reduced_family());
}

// The lobster-derived family on [0,11] whose Graham reduction is empty.
inline std::vector<IntSet> lobster_family() {
    return {{0, 5}, {1, 5}, {2, 5}, {2},     {2, 6},  {2, 7},
            {2, 8}, {3, 8}, {3, 9}, {2, 11}, {4, 11}, {4, 10}};
}

inline Hypergraph lobster_hypergraph() { return Hypergraph::from_edges(lobster_family()); }

// K4 with vertex sets {1,2,3},{1,2,4},{2,3,4},{1,3,4} and pairwise
// intersections as edge sets (columns of the set-type matrix fixture).
inline std::pair<Graph, SetColoring> k4_strong_fixture() {
    Graph k4 = Graph::complete(4);
    SetColoring sc;
    sc.vertex = {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}};
    for (auto e : k4.edges()) {
        sc.edge[e] = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
    }
    sc.constraints = {Constraint::c0()};
    return {k4, sc};
}

} // namespace topcode::test
