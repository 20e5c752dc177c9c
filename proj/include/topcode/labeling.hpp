#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"

namespace topcode {

enum class LabelingKind {
    Graceful,
    SetOrderedGraceful,
    StronglyGraceful,
    OddGraceful,
    SetOrderedOddGraceful,
    StronglyOddGraceful,
    GracefullyTotal,
    EdgeMagicTotal,
    Felicitous,
    EdgeMagicGraceful,
    EdgeOddGraceful,
};

std::string to_string(LabelingKind kind);

struct KindParams {
    std::optional<long long> magic;           // c for edge-magic kinds
    std::optional<long long> modulus;         // eta for felicitous
    std::vector<Edge> matching;               // M for the strongly-* kinds
};

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> violations;
    // Named condition -> pass, e.g. "B-1", "B-4".
    std::vector<std::pair<std::string, bool>> conditions;
};

// Checks the B-conditions of the kind. Edge colors are recomputed from the
// kind's induced rule when f.edge is empty; if present they are checked for
// consistency with the rule (where one exists).
VerifyReport verify_labeling(const Graph& g, const Labeling& f, LabelingKind kind,
                             const KindParams& params = {});

// Exhaustive backtracking search for the lexicographically smallest valid
// labeling (by the vertex value vector). Returns nullopt when none exists.
// Throws CapExceededError for q > 20.
std::optional<Labeling> search_labeling(const Graph& g, LabelingKind kind,
                                        const KindParams& params = {});

// --- (k,d)-total colorings ---------------------------------------------------

enum class KdVariant {
    GracefullyTotal = 1,   // Ptol-1
    OddGracefullyTotal,    // Ptol-2
    EdgeAntimagicTotal,    // Ptol-3
    HarmoniousTotal,       // Ptol-4
    OddElegantTotal,       // Ptol-5
    EdgeMagicTotal,        // Ptol-6
    EdgeDifferenceTotal,   // Ptol-7
    FelicitousDifference,  // Ptol-8
    GracefulDifference,    // Ptol-9
};

struct KdParams {
    long long k = 0;
    long long d = 1;
    KdVariant variant = KdVariant::GracefullyTotal;
    bool strongly = false; // the "strongly" flavor where the variant has one
};

// Verifies f against the (k,d)-variant equations. The graph must be bipartite
// (connected) for the X/Y range checks; the bipartition is computed and both
// orientations are tried. Magic constants are inferred from the first edge.
VerifyReport verify_kd_total(const Graph& g, const Labeling& f, const KdParams& params);

// --- edge-odd-graceful bases --------------------------------------------------

// True iff each labeling is injective on its graph with edge colors exactly
// the odd set [1, 2q_i - 1]^o, and the vertex color sets jointly cover [0, M]
// with no gap.
VerifyReport verify_edge_odd_graceful_base(
    const std::vector<std::pair<Graph, Labeling>>& base);

// Induced edge value under the graceful rule (used all over the set-coloring
// constructions).
long long induced_edge_value(const Labeling& f, LabelingKind kind, const Graph& g, Edge e);

} // namespace topcode
