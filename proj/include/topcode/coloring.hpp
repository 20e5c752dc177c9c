#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topcode/graph.hpp"

namespace topcode {

// Number-valued labeling: total on vertices, edge values optional. When edge
// values are absent, the kind's induced rule applies (e.g. |f(u)-f(v)| for
// graceful-type kinds).
struct Labeling {
    std::vector<long long> vertex;            // size p
    std::map<Edge, long long> edge;           // optional

    bool has_edge_values(const Graph& g) const {
        for (const auto& e : g.edges())
            if (!edge.count(e)) return false;
        return true;
    }
};

using IntSet = std::vector<int>; // sorted, duplicate-free

// Constraint catalog for R_est. The number-level constraints relate a in F(u),
// b in F(v) and c in F(uv).
enum class ConstraintKind {
    IntersectionC0,    // F(uv) contains F(u) & F(v), which is non-empty
    AbsDiff,           // |a - b| = c
    SumMod,            // a + b = c (mod eta)
    EdgeMagic,         // a + c + b = param
    EdgeMagicGraceful, // |a + b - c| = param
    FelicitousDiff,    // |a + b - c| = param (felicitous-difference form)
    GracefulDiff,      // ||a - b| - c| = param
    GroupAdd,          // c = a + b - param (mod modulus)
};

struct Constraint {
    ConstraintKind kind;
    long long param = 0;   // magic constant / zero index
    long long modulus = 0; // eta for SumMod, M for GroupAdd

    static Constraint c0() { return {ConstraintKind::IntersectionC0, 0, 0}; }
    static Constraint abs_diff() { return {ConstraintKind::AbsDiff, 0, 0}; }
    static Constraint sum_mod(long long eta) { return {ConstraintKind::SumMod, 0, eta}; }
    static Constraint edge_magic(long long c) { return {ConstraintKind::EdgeMagic, c, 0}; }
    static Constraint edge_magic_graceful(long long k) {
        return {ConstraintKind::EdgeMagicGraceful, k, 0};
    }
    static Constraint felicitous_diff(long long c) {
        return {ConstraintKind::FelicitousDiff, c, 0};
    }
    static Constraint graceful_diff(long long c) { return {ConstraintKind::GracefulDiff, c, 0}; }
    static Constraint group_add(long long k, long long m) {
        return {ConstraintKind::GroupAdd, k, m};
    }

    // Number-level predicate for a in F(u), c in F(uv), b in F(v).
    bool holds(long long a, long long c, long long b) const;
    std::string describe() const;
};

using ConstraintSet = std::vector<Constraint>;

// Assignment of finite integer sets to vertices and (optionally) edges,
// together with the constraint set it is subject to.
struct SetColoring {
    std::vector<IntSet> vertex;      // size p when total on V
    std::map<Edge, IntSet> edge;     // optional
    ConstraintSet constraints;

    bool has_edge_sets(const Graph& g) const {
        for (const auto& e : g.edges())
            if (!edge.count(e)) return false;
        return true;
    }
};

IntSet set_union(const IntSet& a, const IntSet& b);
IntSet set_intersection(const IntSet& a, const IntSet& b);
IntSet set_difference(const IntSet& a, const IntSet& b);
IntSet set_symmetric_difference(const IntSet& a, const IntSet& b);
IntSet normalized(IntSet s); // sort + dedupe

} // namespace topcode
