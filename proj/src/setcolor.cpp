#include "topcode/setcolor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace topcode {

bool Constraint::holds(long long a, long long c, long long b) const {
    switch (kind) {
        case ConstraintKind::IntersectionC0: return false; // set-level, not numeric
        case ConstraintKind::AbsDiff: return std::llabs(a - b) == c;
        case ConstraintKind::SumMod: {
            long long m = modulus;
            return m > 0 && ((a + b) % m + m) % m == (c % m + m) % m;
        }
        case ConstraintKind::EdgeMagic: return a + b + c == param;
        case ConstraintKind::EdgeMagicGraceful: return std::llabs(a + b - c) == param;
        case ConstraintKind::FelicitousDiff: return std::llabs(a + b - c) == param;
        case ConstraintKind::GracefulDiff: return std::llabs(std::llabs(a - b) - c) == param;
        case ConstraintKind::GroupAdd: {
            long long m = modulus;
            return m > 0 && ((a + b - param) % m + m) % m == (c % m + m) % m;
        }
    }
    return false;
}

std::string Constraint::describe() const {
    switch (kind) {
        case ConstraintKind::IntersectionC0: return "c0";
        case ConstraintKind::AbsDiff: return "|a-b|=c";
        case ConstraintKind::SumMod: return "a+b=c (mod " + std::to_string(modulus) + ")";
        case ConstraintKind::EdgeMagic: return "a+b+c=" + std::to_string(param);
        case ConstraintKind::EdgeMagicGraceful: return "|a+b-c|=" + std::to_string(param);
        case ConstraintKind::FelicitousDiff: return "|a+b-c|=" + std::to_string(param);
        case ConstraintKind::GracefulDiff: return "||a-b|-c|=" + std::to_string(param);
        case ConstraintKind::GroupAdd:
            return "c=a+b-" + std::to_string(param) + " (mod " + std::to_string(modulus) + ")";
    }
    return "?";
}

namespace {

std::string edge_name(Edge e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::string set_to_string(const IntSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// True iff inner is a subset of outer (both sorted).
bool subsumes(const IntSet& outer, const IntSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool constraint_witness(const Constraint& c, const IntSet& fu, const IntSet& fe,
                        const IntSet& fv) {
    if (c.kind == ConstraintKind::IntersectionC0) {
        IntSet common = set_intersection(fu, fv);
        return !common.empty() && subsumes(fe, common);
    }
    for (int a : fu)
        for (int b : fv)
            for (int w : fe)
                if (c.holds(a, w, b)) return true;
    return false;
}

} // namespace

std::vector<SetClassCondition> conditions_of(NamedSetClass cls) {
    using C = SetClassCondition;
    switch (cls) {
        case NamedSetClass::StrongVertexSetLabeling: return {C::DomainVertices, C::DistinctVertexSets};
        case NamedSetClass::StrongEdgeSetLabeling: return {C::DomainEdges, C::DistinctEdgeSets};
        case NamedSetClass::StronglyInducedEdgeSetLabeling:
            return {C::DistinctEdgeSets, C::EdgeInduced};
        case NamedSetClass::StronglyTotalSetLabeling:
            return {C::DomainTotal, C::DistinctVertexSets, C::DistinctEdgeSets};
        case NamedSetClass::StrongSetColoring:
            return {C::DomainVertices, C::DistinctVertexSets, C::EdgeInduced,
                    C::DistinctInducedEdge};
        case NamedSetClass::SetLabeling: return {C::DomainVertices, C::AdjacentVertexSets};
        case NamedSetClass::EdgeSetLabeling: return {C::DomainEdges, C::AdjacentEdgeSets};
        case NamedSetClass::TotalSetColoring:
            return {C::DomainTotal, C::AdjacentVertexSets, C::AdjacentEdgeSets};
        case NamedSetClass::SetColoringSubjectToRest:
            return {C::DomainVertices, C::AdjacentVertexSets, C::AdjacentEdgeSets, C::EdgeInduced};
        default: return {}; // pseudo classes handled separately
    }
}

namespace {

std::string condition_name(SetClassCondition c) {
    switch (c) {
        case SetClassCondition::DomainVertices: return "a";
        case SetClassCondition::DomainEdges: return "b";
        case SetClassCondition::DomainTotal: return "c";
        case SetClassCondition::AdjacentVertexSets: return "d";
        case SetClassCondition::AdjacentEdgeSets: return "e";
        case SetClassCondition::DistinctVertexSets: return "f";
        case SetClassCondition::DistinctEdgeSets: return "g";
        case SetClassCondition::EdgeInduced: return "h";
        case SetClassCondition::DistinctInducedEdge: return "i";
    }
    return "?";
}

bool evaluate_condition(const Graph& g, const SetColoring& sc, SetClassCondition c,
                        std::vector<std::string>& violations) {
    switch (c) {
        case SetClassCondition::DomainVertices: {
            bool ok = static_cast<int>(sc.vertex.size()) == g.order();
            for (const auto& s : sc.vertex) ok = ok && !s.empty();
            if (!ok) violations.push_back("(a) vertex sets not total/non-empty");
            return ok;
        }
        case SetClassCondition::DomainEdges: {
            bool ok = sc.has_edge_sets(g);
            if (!ok) violations.push_back("(b) edge sets not total");
            return ok;
        }
        case SetClassCondition::DomainTotal: {
            bool ok = static_cast<int>(sc.vertex.size()) == g.order() && sc.has_edge_sets(g);
            if (!ok) violations.push_back("(c) coloring not total on V u E");
            return ok;
        }
        case SetClassCondition::AdjacentVertexSets: {
            for (auto [u, v] : g.edges()) {
                if (sc.vertex[u] == sc.vertex[v]) {
                    violations.push_back("(d) equal sets on edge " + edge_name({u, v}));
                    return false;
                }
            }
            return true;
        }
        case SetClassCondition::AdjacentEdgeSets: {
            for (auto [u, v] : g.edges()) {
                for (auto [x, y] : g.edges()) {
                    Edge e1{u, v}, e2{x, y};
                    if (e1 >= e2) continue;
                    bool adjacent = (u == x || u == y || v == x || v == y);
                    if (adjacent && sc.edge.at(e1) == sc.edge.at(e2)) {
                        violations.push_back("(e) adjacent edges " + edge_name(e1) + "," +
                                             edge_name(e2) + " share a set");
                        return false;
                    }
                }
            }
            return true;
        }
        case SetClassCondition::DistinctVertexSets: {
            std::set<IntSet> distinct(sc.vertex.begin(), sc.vertex.end());
            bool ok = static_cast<int>(distinct.size()) == g.order();
            if (!ok) violations.push_back("(f) vertex sets not pairwise distinct");
            return ok;
        }
        case SetClassCondition::DistinctEdgeSets:
        case SetClassCondition::DistinctInducedEdge: {
            std::set<IntSet> distinct;
            for (const auto& e : g.edges()) distinct.insert(sc.edge.at(e));
            bool ok = static_cast<int>(distinct.size()) == g.size();
            if (!ok) violations.push_back("(" + condition_name(c) + ") edge sets not distinct");
            return ok;
        }
        case SetClassCondition::EdgeInduced: {
            if (sc.constraints.empty()) {
                violations.push_back("(h) needs a non-empty constraint set");
                return false;
            }
            for (const auto& e : g.edges()) {
                const IntSet& fe = sc.edge.at(e);
                const IntSet& fu = sc.vertex[e.first];
                const IntSet& fv = sc.vertex[e.second];
                for (int cval : fe) {
                    bool generated = false;
                    for (const auto& con : sc.constraints) {
                        if (con.kind == ConstraintKind::IntersectionC0) {
                            // c interpreted as a common element of both ends.
                            if (std::binary_search(fu.begin(), fu.end(), cval) &&
                                std::binary_search(fv.begin(), fv.end(), cval)) {
                                generated = true;
                            }
                        } else {
                            for (int a : fu) {
                                for (int b : fv) {
                                    if (con.holds(a, cval, b)) {
                                        generated = true;
                                        break;
                                    }
                                }
                                if (generated) break;
                            }
                        }
                        if (generated) break;
                    }
                    if (!generated) {
                        violations.push_back("(h) value " + std::to_string(cval) + " on edge " +
                                             edge_name(e) + " is not generated by R_est");
                        return false;
                    }
                }
            }
            return true;
        }
    }
    return false;
}

UniformityConstants uniformity_of(const Graph& g, const SetColoring& sc) {
    UniformityConstants u;
    bool first = true;
    for (const auto& s : sc.vertex) {
        int n = static_cast<int>(s.size());
        if (first) {
            u.v_min = u.v_max = n;
            first = false;
        }
        u.v_min = std::min(u.v_min, n);
        u.v_max = std::max(u.v_max, n);
    }
    first = true;
    for (const auto& e : g.edges()) {
        auto it = sc.edge.find(e);
        if (it == sc.edge.end()) continue;
        int n = static_cast<int>(it->second.size());
        if (first) {
            u.e_min = u.e_max = n;
            first = false;
        }
        u.e_min = std::min(u.e_min, n);
        u.e_max = std::max(u.e_max, n);
    }
    u.t_min = sc.edge.empty() ? u.v_min : std::min(u.v_min, u.e_min);
    u.t_max = std::max(u.v_max, u.e_max);
    return u;
}

} // namespace

ClassReport verify_class(const Graph& g, const SetColoring& sc,
                         const std::vector<SetClassCondition>& conditions) {
    ClassReport rep;
    rep.ok = true;
    for (auto c : conditions) {
        bool pass = evaluate_condition(g, sc, c, rep.violations);
        rep.conditions.emplace_back(condition_name(c), pass);
        rep.ok = rep.ok && pass;
    }
    rep.uniformity = uniformity_of(g, sc);
    return rep;
}

ClassReport verify_class(const Graph& g, const SetColoring& sc, NamedSetClass cls) {
    using C = SetClassCondition;
    // Pseudo classes are a positive domain condition plus a *failing*
    // distinctness condition.
    auto negated = [&](C dom, std::vector<C> broken) {
        ClassReport rep;
        std::vector<std::string> vio;
        bool dom_ok = evaluate_condition(g, sc, dom, vio);
        rep.conditions.emplace_back(condition_name(dom), dom_ok);
        bool any_broken = false;
        for (C b : broken) {
            std::vector<std::string> ignore;
            bool holds = evaluate_condition(g, sc, b, ignore);
            rep.conditions.emplace_back("not " + condition_name(b), !holds);
            if (!holds) any_broken = true;
        }
        rep.ok = dom_ok && any_broken;
        if (!rep.ok) rep.violations.push_back("pseudo class conditions not met");
        rep.uniformity = uniformity_of(g, sc);
        return rep;
    };
    switch (cls) {
        case NamedSetClass::PseudoVertexSetLabeling:
            return negated(C::DomainVertices, {C::AdjacentVertexSets});
        case NamedSetClass::PseudoEdgeSetLabeling:
            return negated(C::DomainEdges, {C::AdjacentEdgeSets});
        case NamedSetClass::PseudoTotalSetColoring:
            return negated(C::DomainTotal, {C::AdjacentVertexSets, C::AdjacentEdgeSets});
        default:
            return verify_class(g, sc, conditions_of(cls));
    }
}

IntersectedReport verify_intersected(const Graph& g, const SetColoring& sc,
                                     const ConstraintSet& constraints) {
    if (static_cast<int>(sc.vertex.size()) != g.order() || !sc.has_edge_sets(g)) {
        throw PreconditionError("verify_intersected needs total vertex and edge sets");
    }
    IntersectedReport rep;
    rep.c0 = true;
    rep.constraints = true;
    rep.proper = true;
    for (auto e : g.edges()) {
        const IntSet& fu = sc.vertex[e.first];
        const IntSet& fv = sc.vertex[e.second];
        const IntSet& fe = sc.edge.at(e);
        IntSet common = set_intersection(fu, fv);
        if (common.empty() || !subsumes(fe, common)) {
            rep.c0 = false;
            rep.violations.push_back("c0 fails on edge " + edge_name(e));
        }
        if (fu == fv) {
            rep.proper = false;
            rep.violations.push_back("equal vertex sets on edge " + edge_name(e));
        }
        for (const auto& con : constraints) {
            if (con.kind == ConstraintKind::IntersectionC0) continue;
            if (!constraint_witness(con, fu, fe, fv)) {
                rep.constraints = false;
                rep.violations.push_back("no witness for " + con.describe() + " on edge " +
                                         edge_name(e));
            }
        }
    }
    std::set<IntSet> distinct(sc.vertex.begin(), sc.vertex.end());
    rep.injective = static_cast<int>(distinct.size()) == g.order();
    rep.complete = true;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (sc.vertex[u] == sc.vertex[v]) continue;
            if (set_intersection(sc.vertex[u], sc.vertex[v]).empty()) continue;
            // This hyperedge pair must be realized by at least one edge.
            bool realized = false;
            for (auto e : g.edges()) {
                if ((sc.vertex[e.first] == sc.vertex[u] && sc.vertex[e.second] == sc.vertex[v]) ||
                    (sc.vertex[e.first] == sc.vertex[v] && sc.vertex[e.second] == sc.vertex[u])) {
                    realized = true;
                    break;
                }
            }
            if (!realized) {
                rep.complete = false;
                break;
            }
        }
    }
    rep.ok = rep.c0 && rep.constraints && rep.proper;
    rep.is_intersected_graph = rep.ok && rep.injective && rep.complete;
    return rep;
}

IntersectionTotalReport verify_intersection_total(const Graph& g, const SetColoring& sc,
                                                  IntersectionKind kind) {
    if (static_cast<int>(sc.vertex.size()) != g.order()) {
        throw PreconditionError("vertex sets must be total");
    }
    IntersectionTotalReport rep;
    const long long q = g.size();

    long long cap = (kind == IntersectionKind::OddGraceful) ? 2 * q - 1 : q;
    for (int v = 0; v < g.order(); ++v) {
        if (sc.vertex[v].empty()) {
            rep.violations.push_back("empty set on vertex " + std::to_string(v));
        }
        for (int x : sc.vertex[v]) {
            if (x < 1 || x > cap) {
                rep.violations.push_back("vertex " + std::to_string(v) + " value " +
                                         std::to_string(x) + " outside [1," + std::to_string(cap) +
                                         "]");
            }
        }
        if (kind == IntersectionKind::Rainbow) {
            // set must be [1,k] for some k
            const IntSet& s = sc.vertex[v];
            bool prefix = !s.empty() && s.front() == 1 &&
                          s.back() == static_cast<int>(s.size());
            if (!prefix) {
                rep.violations.push_back("vertex " + std::to_string(v) +
                                         " set is not of the form [1,k]");
            }
        }
    }

    std::vector<IntSet> edge_sets;
    for (auto e : g.edges()) {
        IntSet inter = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
        auto it = sc.edge.find(e);
        if (it != sc.edge.end() && it->second != inter) {
            rep.violations.push_back("edge " + edge_name(e) +
                                     " set is not the endpoint intersection");
        }
        if (inter.empty()) {
            rep.violations.push_back("empty intersection on edge " + edge_name(e));
        }
        edge_sets.push_back(std::move(inter));
    }

    IntSet targets;
    if (kind == IntersectionKind::OddGraceful) {
        for (long long c = 1; c <= 2 * q - 1; c += 2) targets.push_back(static_cast<int>(c));
    } else {
        for (long long c = 1; c <= q; ++c) targets.push_back(static_cast<int>(c));
    }
    auto m = sdr_onto(edge_sets, targets);
    if (!m.found) {
        rep.violations.push_back("no system of distinct representatives onto the target set");
    } else {
        for (std::size_t i = 0; i < edge_sets.size(); ++i) {
            rep.representatives[g.edges()[i]] = m.representatives[i];
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

SetColoring construct_for_tree(const Graph& tree, IntersectionKind kind) {
    if (!tree.is_tree()) throw PreconditionError("construct_for_tree needs a tree");
    const int q = tree.size();
    SetColoring sc;
    sc.constraints = {Constraint::c0()};

    if (kind == IntersectionKind::Rainbow) {
        // Regular rainbow sets [1,k]: root 0 takes [1,q]; edges in DFS
        // preorder get representatives q, q-1, ..., 1, each child takes the
        // prefix of its parent edge's representative.
        sc.vertex.resize(tree.order());
        auto prefix = [](int k) {
            IntSet s(k);
            std::iota(s.begin(), s.end(), 1);
            return s;
        };
        sc.vertex[0] = prefix(std::max(q, 1));
        std::vector<char> seen(tree.order(), 0);
        seen[0] = 1;
        int next_rep = q;
        std::function<void(int)> dfs = [&](int v) {
            for (int w : tree.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                sc.vertex[w] = prefix(next_rep--);
                Edge e{std::min(v, w), std::max(v, w)};
                sc.edge[e] = set_intersection(sc.vertex[v], sc.vertex[w]);
                dfs(w);
            }
        };
        dfs(0);
        if (tree.order() == 1) sc.vertex[0] = {1};
        return sc;
    }

    LabelingKind lk = (kind == IntersectionKind::OddGraceful) ? LabelingKind::OddGraceful
                                                              : LabelingKind::Graceful;
    auto f = search_labeling(tree, lk);
    if (!f) throw Error("no " + to_string(lk) + " labeling found for the tree");
    sc.vertex.resize(tree.order());
    for (int v = 0; v < tree.order(); ++v) {
        IntSet s;
        for (int w : tree.neighbors(v)) {
            Edge e{std::min(v, w), std::max(v, w)};
            s.push_back(static_cast<int>(induced_edge_value(*f, lk, tree, e)));
        }
        sc.vertex[v] = normalized(std::move(s));
    }
    for (auto e : tree.edges()) {
        sc.edge[e] = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
    }
    return sc;
}

namespace {

// Leaf-peeling parents: parent(v) = the unique surviving neighbor at the
// round removing v; the final star's center has parent -1.
std::pair<std::vector<int>, int> peel_parents(const Graph& tree) {
    const int p = tree.order();
    std::vector<int> parent(p, -1);
    std::vector<char> alive(p, 1);
    std::vector<int> deg(p);
    for (int v = 0; v < p; ++v) deg[v] = tree.degree(v);
    int alive_count = p;

    auto is_star = [&]() {
        int internal = 0;
        for (int v = 0; v < p; ++v) {
            if (alive[v] && deg[v] >= 2) ++internal;
        }
        return internal <= 1;
    };

    while (alive_count > 2 && !is_star()) {
        std::vector<int> leaves;
        for (int v = 0; v < p; ++v) {
            if (alive[v] && deg[v] == 1) leaves.push_back(v);
        }
        for (int w : leaves) {
            for (int z : tree.neighbors(w)) {
                if (alive[z]) {
                    parent[w] = z;
                    break;
                }
            }
        }
        for (int w : leaves) {
            alive[w] = 0;
            --alive_count;
            for (int z : tree.neighbors(w)) {
                if (alive[z]) --deg[z];
            }
        }
    }
    // Remaining tree is a star (or a single edge / vertex). The center is the
    // internal vertex; ties (K_{1,1} / K_1) go to the smallest id.
    int center = -1;
    for (int v = 0; v < p; ++v) {
        if (alive[v] && deg[v] >= 2) center = v;
    }
    if (center == -1) {
        for (int v = 0; v < p; ++v) {
            if (alive[v]) {
                center = v;
                break;
            }
        }
    }
    for (int v = 0; v < p; ++v) {
        if (alive[v] && v != center) parent[v] = center;
    }
    return {parent, center};
}

SetColoring vset_impl(const Graph& tree, const std::vector<long long>& values) {
    auto [parent, center] = peel_parents(tree);
    SetColoring sc;
    sc.constraints = {Constraint::c0()};
    sc.vertex.resize(tree.order());
    for (int v = 0; v < tree.order(); ++v) {
        if (v == center) {
            sc.vertex[v] = {static_cast<int>(values[v])};
        } else {
            sc.vertex[v] = normalized({static_cast<int>(values[v]),
                                       static_cast<int>(values[parent[v]])});
        }
    }
    for (auto e : tree.edges()) {
        IntSet inter = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
        if (inter.empty()) throw Error("vset produced an empty edge intersection");
        sc.edge[e] = std::move(inter);
    }
    return sc;
}

int tree_diameter(const Graph& tree) {
    auto bfs_far = [&](int s) {
        std::vector<int> dist(tree.order(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        int far = s;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            if (dist[v] > dist[far]) far = v;
            for (int w : tree.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return std::pair{far, dist[far]};
    };
    if (tree.order() == 0) return 0;
    auto [a, d1] = bfs_far(0);
    auto [b, d2] = bfs_far(a);
    return d2;
}

} // namespace

SetColoring vset_coloring(const Graph& tree, const Labeling& f) {
    if (!tree.is_tree()) throw PreconditionError("vset_coloring needs a tree");
    if (static_cast<int>(f.vertex.size()) != tree.order()) {
        throw PreconditionError("labeling must be total on V");
    }
    std::set<long long> distinct(f.vertex.begin(), f.vertex.end());
    if (static_cast<int>(distinct.size()) != tree.order()) {
        throw PreconditionError("vset_coloring needs an injective vertex labeling");
    }
    return vset_impl(tree, f.vertex);
}

SetColoring pscs1(const Graph& tree, const Labeling& f, int rounds) {
    if (rounds < 1) throw PreconditionError("rounds must be >= 1");
    int cap = std::max(1, tree_diameter(tree) / 2);
    if (rounds > cap) {
        throw PreconditionError("rounds exceed the diameter bound " + std::to_string(cap));
    }
    SetColoring sc = vset_coloring(tree, f);
    auto [parent, center] = peel_parents(tree);
    for (int r = 1; r < rounds; ++r) {
        std::vector<IntSet> next(tree.order());
        for (int v = 0; v < tree.order(); ++v) {
            next[v] = (v == center) ? sc.vertex[v]
                                    : set_union(sc.vertex[v], sc.vertex[parent[v]]);
        }
        sc.vertex = std::move(next);
    }
    for (auto e : tree.edges()) {
        sc.edge[e] = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
    }
    return sc;
}

SetColoring pscs2(const Graph& tree, const Labeling& f, int rounds) {
    if (!tree.is_tree()) throw PreconditionError("pscs2 needs a tree");
    if (rounds < 1) throw PreconditionError("rounds must be >= 1");
    SetColoring sc;
    sc.constraints = {Constraint::c0()};
    sc.vertex.resize(tree.order());
    for (int v = 0; v < tree.order(); ++v) {
        IntSet s;
        for (int w : tree.neighbors(v)) {
            Edge e{std::min(v, w), std::max(v, w)};
            s.push_back(static_cast<int>(induced_edge_value(f, LabelingKind::Graceful, tree, e)));
        }
        sc.vertex[v] = normalized(std::move(s));
    }
    auto [parent, center] = peel_parents(tree);
    for (int r = 1; r < rounds; ++r) {
        std::vector<IntSet> next(tree.order());
        for (int v = 0; v < tree.order(); ++v) {
            next[v] = (v == center) ? sc.vertex[v]
                                    : set_union(sc.vertex[v], sc.vertex[parent[v]]);
        }
        sc.vertex = std::move(next);
    }
    for (auto e : tree.edges()) {
        IntSet inter = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
        if (inter.empty()) throw Error("pscs2 produced an empty edge intersection");
        sc.edge[e] = std::move(inter);
    }
    return sc;
}

namespace {

bool edge_on_cycle(const Graph& g, Edge e) {
    // Non-bridge test: endpoints stay connected after removing the edge.
    std::vector<Edge> es;
    for (auto other : g.edges()) {
        if (other != e) es.push_back(other);
    }
    Graph cut(g.order(), std::move(es));
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{e.first};
    seen[e.first] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : cut.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen[e.second];
}

} // namespace

Pscs3Result pscs3(const Graph& g, const Labeling& f) {
    if (!g.connected()) throw PreconditionError("pscs3 needs a connected graph");
    if (g.is_tree()) throw PreconditionError("pscs3 needs a graph with at least one cycle");
    std::set<long long> edge_values;
    for (auto e : g.edges()) {
        edge_values.insert(induced_edge_value(f, LabelingKind::Graceful, g, e));
    }
    if (static_cast<int>(edge_values.size()) != g.size()) {
        throw PreconditionError("pscs3 needs an edge-injective labeling");
    }

    Graph tree = g;
    std::vector<long long> values = f.vertex;
    std::vector<int> to_graph(g.order());
    std::iota(to_graph.begin(), to_graph.end(), 0);
    // Tree edges correspond 1:1 to graph edges throughout the splitting.
    std::map<Edge, Edge> edge_origin;
    for (auto e : g.edges()) edge_origin[e] = e;

    while (!tree.is_tree()) {
        Edge site{-1, -1};
        for (auto e : tree.edges()) {
            if (edge_on_cycle(tree, e)) {
                site = e;
                break;
            }
        }
        auto [x, y] = site;
        std::vector<int> keep;
        for (int w : tree.neighbors(x)) {
            if (w != y) keep.push_back(w);
        }
        auto split = split_vertex(tree, x, keep, {y});
        // The new pendant (id p) inherits x's label and origin.
        values.push_back(values[x]);
        to_graph.push_back(to_graph[x]);
        std::map<Edge, Edge> next_origin;
        for (auto [e, orig] : edge_origin) {
            Edge moved = e;
            if (e.first == x && e.second == y) {
                moved = {std::min(y, split.u_second), std::max(y, split.u_second)};
            } else if (e.first == x || e.second == x) {
                moved = e; // x keeps its other edges
            }
            next_origin[moved] = orig;
        }
        edge_origin = std::move(next_origin);
        tree = split.graph;
    }

    Pscs3Result out;
    out.tree = tree;
    out.tree_to_graph = to_graph;
    out.tree_coloring = vset_impl(tree, values);

    SetColoring sc;
    sc.constraints = {Constraint::c0(), Constraint::abs_diff()};
    sc.vertex.resize(g.order());
    for (int v = 0; v < tree.order(); ++v) {
        sc.vertex[to_graph[v]] = set_union(sc.vertex[to_graph[v]], out.tree_coloring.vertex[v]);
    }
    for (auto e : g.edges()) {
        IntSet inter = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
        long long witness = induced_edge_value(f, LabelingKind::Graceful, g, e);
        IntSet fe = set_union(inter, IntSet{static_cast<int>(witness)});
        sc.edge[e] = std::move(fe);
    }
    out.coloring = std::move(sc);
    return out;
}

Pscs4Result pscs4(const std::vector<std::pair<Graph, Labeling>>& base) {
    auto baserep = verify_edge_odd_graceful_base(base);
    if (!baserep.ok) {
        throw PreconditionError("pscs4 needs a valid edge-odd-graceful base");
    }
    std::vector<SetColoring> colors;
    for (const auto& [g, f] : base) {
        colors.push_back(g.is_tree() ? vset_coloring(g, f) : pscs3(g, f).coloring);
    }

    std::set<long long> labels;
    for (const auto& [g, f] : base) labels.insert(f.vertex.begin(), f.vertex.end());
    std::vector<long long> label_list(labels.begin(), labels.end());
    std::map<long long, int> label_to_id;
    for (std::size_t i = 0; i < label_list.size(); ++i) {
        label_to_id[label_list[i]] = static_cast<int>(i);
    }

    std::map<Edge, IntSet> edge_sets;
    std::vector<IntSet> vertex_sets(label_list.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto& [g, f] = base[i];
        for (int v = 0; v < g.order(); ++v) {
            int id = label_to_id[f.vertex[v]];
            vertex_sets[id] = set_union(vertex_sets[id], colors[i].vertex[v]);
        }
        for (auto e : g.edges()) {
            int a = label_to_id[f.vertex[e.first]];
            int b = label_to_id[f.vertex[e.second]];
            Edge key{std::min(a, b), std::max(a, b)};
            edge_sets[key] = set_union(edge_sets[key], colors[i].edge.at(e));
        }
    }

    Pscs4Result out;
    std::vector<Edge> es;
    for (const auto& [e, s] : edge_sets) es.push_back(e);
    out.graph = Graph(static_cast<int>(label_list.size()), std::move(es));
    out.coloring.vertex = std::move(vertex_sets);
    out.coloring.edge = std::move(edge_sets);
    out.coloring.constraints = {Constraint::c0()};
    out.vertex_labels = std::move(label_list);
    return out;
}

ChyperReport verify_chyper(const Graph& g, const SetColoring& sc, CgraphKind kind, int r) {
    if (static_cast<int>(sc.vertex.size()) != g.order() || !sc.has_edge_sets(g)) {
        throw PreconditionError("verify_chyper needs total vertex and edge sets");
    }
    ChyperReport rep;
    {
        std::set<IntSet> distinct(sc.vertex.begin(), sc.vertex.end());
        rep.vertex_sets_distinct = static_cast<int>(distinct.size()) == g.order();
    }
    rep.adjacent_edge_sets_distinct = true;
    for (auto e1 : g.edges()) {
        for (auto e2 : g.edges()) {
            if (e1 >= e2) continue;
            bool adjacent = e1.first == e2.first || e1.first == e2.second ||
                            e1.second == e2.first || e1.second == e2.second;
            if (adjacent && sc.edge.at(e1) == sc.edge.at(e2)) {
                rep.adjacent_edge_sets_distinct = false;
            }
        }
    }

    auto chyper1 = [&](bool rrank) {
        for (auto e : g.edges()) {
            IntSet inter = set_intersection(sc.vertex[e.first], sc.vertex[e.second]);
            if (inter.empty() || !subsumes(sc.edge.at(e), inter)) {
                rep.violations.push_back("Chyper-" + std::string(rrank ? "2" : "1") +
                                         " fails on edge " + edge_name(e));
                return false;
            }
            if (rrank && static_cast<int>(inter.size()) < r) {
                rep.violations.push_back("rank " + std::to_string(r) + " fails on edge " +
                                         edge_name(e));
                return false;
            }
        }
        return true;
    };
    auto chyper3 = [&]() {
        for (auto e : g.edges()) {
            if (set_intersection(sc.edge.at(e), sc.vertex[e.first]).empty() ||
                set_intersection(sc.edge.at(e), sc.vertex[e.second]).empty()) {
                rep.violations.push_back("Chyper-3 fails on edge " + edge_name(e));
                return false;
            }
        }
        return true;
    };
    auto adjacent_pairs = [&](bool want_meet) {
        for (auto e1 : g.edges()) {
            for (auto e2 : g.edges()) {
                if (e1 >= e2) continue;
                bool adjacent = e1.first == e2.first || e1.first == e2.second ||
                                e1.second == e2.first || e1.second == e2.second;
                if (!adjacent) continue;
                bool meet = !set_intersection(sc.edge.at(e1), sc.edge.at(e2)).empty();
                if (meet != want_meet) {
                    rep.violations.push_back(std::string(want_meet ? "Chyper-4" : "Chyper-5") +
                                             " fails on edges " + edge_name(e1) + "," +
                                             edge_name(e2));
                    return false;
                }
            }
        }
        return true;
    };

    switch (kind) {
        case CgraphKind::Subintersected: rep.ok = chyper1(false); break;
        case CgraphKind::RRankSubintersected: rep.ok = chyper1(true); break;
        case CgraphKind::IntersectedEdgeIntersected: rep.ok = chyper1(false) && chyper3(); break;
        case CgraphKind::RRankIntersectedEdge: rep.ok = chyper1(true) && chyper3(); break;
        case CgraphKind::EdgeIntersected: rep.ok = chyper3(); break;
        case CgraphKind::AdjacentEdgeIntersected: rep.ok = chyper3() && adjacent_pairs(true); break;
        case CgraphKind::IndividualEdgeIntersected:
            rep.ok = chyper3() && adjacent_pairs(false);
            break;
    }
    rep.ok = rep.ok && rep.vertex_sets_distinct;
    if (!rep.vertex_sets_distinct) rep.violations.push_back("vertex sets are not distinct");
    return rep;
}

namespace {

SetColoring edge_star_base(const Graph& tree, const Labeling& f) {
    SetColoring sc;
    sc.constraints = {Constraint::c0()};
    sc.vertex.resize(tree.order());
    for (int v = 0; v < tree.order(); ++v) {
        IntSet s;
        for (int w : tree.neighbors(v)) {
            Edge e{std::min(v, w), std::max(v, w)};
            s.push_back(static_cast<int>(induced_edge_value(f, LabelingKind::Graceful, tree, e)));
        }
        sc.vertex[v] = normalized(std::move(s));
    }
    for (auto e : tree.edges()) {
        sc.edge[e] = {static_cast<int>(induced_edge_value(f, LabelingKind::Graceful, tree, e))};
    }
    return sc;
}

} // namespace

SetColoring construct_adjacent_edge_intersected(const Graph& tree, AdjacentStrategy strategy) {
    if (!tree.is_tree()) {
        throw PreconditionError("construct_adjacent_edge_intersected needs a tree");
    }
    auto f = search_labeling(tree, LabelingKind::Graceful);
    if (!f) throw Error("no graceful labeling found for the tree");
    SetColoring sc = edge_star_base(tree, *f);
    if (tree.size() <= 1) return sc;

    std::vector<char> alive(tree.order(), 1);
    std::vector<int> deg(tree.order());
    for (int v = 0; v < tree.order(); ++v) deg[v] = tree.degree(v);

    auto remaining_edges = [&]() {
        std::vector<Edge> es;
        for (auto e : tree.edges()) {
            if (alive[e.first] && alive[e.second]) es.push_back(e);
        }
        return es;
    };
    auto finish_star = [&]() {
        auto rest = remaining_edges();
        if (rest.size() < 2) return; // a single edge keeps its set
        IntSet s;
        for (auto e : rest) s = set_union(s, sc.edge.at(e));
        for (auto e : rest) sc.edge[e] = s;
    };

    if (strategy == AdjacentStrategy::LeafPeeling) {
        auto is_star = [&]() {
            int internal = 0;
            for (int v = 0; v < tree.order(); ++v) {
                if (alive[v] && deg[v] >= 2) ++internal;
            }
            return internal <= 1;
        };
        while (!is_star()) {
            std::vector<int> leaves;
            for (int v = 0; v < tree.order(); ++v) {
                if (alive[v] && deg[v] == 1) leaves.push_back(v);
            }
            // Snapshot so the whole level recolors simultaneously.
            auto snapshot = sc.edge;
            std::set<int> attach;
            for (int w : leaves) {
                for (int z : tree.neighbors(w)) {
                    if (alive[z]) attach.insert(z);
                }
            }
            for (int v : attach) {
                IntSet s;
                for (int w : tree.neighbors(v)) {
                    Edge e{std::min(v, w), std::max(v, w)};
                    s = set_union(s, snapshot.at(e));
                }
                for (int w : tree.neighbors(v)) {
                    if (!alive[w] || deg[w] != 1) continue;
                    Edge e{std::min(v, w), std::max(v, w)};
                    sc.edge[e] = s;
                }
            }
            for (int w : leaves) {
                alive[w] = 0;
                for (int z : tree.neighbors(w)) {
                    if (alive[z]) --deg[z];
                }
            }
        }
        finish_star();
        return sc;
    }

    // Longest-path strategy.
    auto alive_diameter_path = [&]() -> std::vector<int> {
        auto bfs = [&](int s) {
            std::vector<int> dist(tree.order(), -1), prev(tree.order(), -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int v = queue[i];
                for (int w : tree.neighbors(v)) {
                    if (alive[w] && dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            int far = s;
            for (int v = 0; v < tree.order(); ++v) {
                if (alive[v] && dist[v] > dist[far]) far = v;
            }
            return std::tuple{far, dist, prev};
        };
        int start = -1;
        for (int v = 0; v < tree.order(); ++v) {
            if (alive[v]) {
                start = v;
                break;
            }
        }
        auto [a, d1, p1] = bfs(start);
        auto [b, d2, p2] = bfs(a);
        std::vector<int> path;
        for (int v = b; v != -1; v = p2[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (true) {
        auto path = alive_diameter_path();
        if (static_cast<int>(path.size()) < 4) break; // diameter <= 2 left
        int x2 = path[1], x3 = path[2];
        int xm = path[path.size() - 2], xm1 = path[path.size() - 3];
        auto recolor_end = [&](int v, int inner) {
            Edge up{std::min(v, inner), std::max(v, inner)};
            std::vector<int> drop;
            for (int y : tree.neighbors(v)) {
                if (!alive[y] || deg[y] != 1) continue;
                Edge e{std::min(v, y), std::max(v, y)};
                sc.edge[e] = set_union(sc.edge.at(e), sc.edge.at(up));
                drop.push_back(y);
            }
            for (int y : drop) {
                alive[y] = 0;
                --deg[v];
            }
        };
        recolor_end(x2, x3);
        if (xm != x2) recolor_end(xm, xm1);
    }
    finish_star();
    return sc;
}

ChiSetResult chi_set_prime_exact(const Graph& g) {
    if (g.size() > 12) throw CapExceededError("chi'_set exact search is capped at 12 edges");
    ChiSetResult out;
    const int q = g.size();
    if (q == 0) return out;

    // Lower bound: an edge uv needs deg(u)+deg(v)-1 colors around it.
    int lower = 1;
    for (auto [u, v] : g.edges()) {
        lower = std::max(lower, g.degree(u) + g.degree(v) - 1);
    }

    const auto& edges = g.edges();
    for (int bound = lower; bound <= q; ++bound) {
        std::vector<int> color(q, -1);
        std::function<bool(int, int)> rec = [&](int idx, int used) -> bool {
            if (idx == q) {
                std::map<Edge, int> f;
                for (int i = 0; i < q; ++i) f[edges[i]] = color[i] + 1;
                return verify_adjacent_1_common(g, f).ok;
            }
            int cap = std::min(bound, used + 1);
            for (int c = 0; c < cap; ++c) {
                bool ok = true;
                // proper edge coloring
                for (int j = 0; j < idx && ok; ++j) {
                    bool adjacent = edges[j].first == edges[idx].first ||
                                    edges[j].first == edges[idx].second ||
                                    edges[j].second == edges[idx].first ||
                                    edges[j].second == edges[idx].second;
                    if (adjacent && color[j] == c) ok = false;
                }
                if (!ok) continue;
                color[idx] = c;
                // prune: a pair of adjacent vertices must never share two
                // incident colors
                for (auto [u, v] : g.edges()) {
                    std::set<int> cu, cv;
                    for (int j = 0; j <= idx; ++j) {
                        if (color[j] == -1) continue;
                        if (edges[j].first == u || edges[j].second == u) cu.insert(color[j]);
                        if (edges[j].first == v || edges[j].second == v) cv.insert(color[j]);
                    }
                    std::vector<int> common;
                    std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                                          std::back_inserter(common));
                    if (common.size() >= 2) {
                        ok = false;
                        break;
                    }
                }
                if (ok && rec(idx + 1, std::max(used, c + 1))) return true;
                color[idx] = -1;
            }
            return false;
        };
        if (rec(0, 0)) {
            out.value = bound;
            for (int i = 0; i < q; ++i) out.witness[edges[i]] = color[i] + 1;
            return out;
        }
    }
    out.value = q;
    return out;
}

ChiSetResult chi_set_prime(const Graph& g) {
    const int p = g.order();
    if (g.size() == p * (p - 1) / 2 && p >= 2) {
        ChiSetResult out;
        out.value = p * (p - 1) / 2;
        int c = 1;
        for (auto e : g.edges()) out.witness[e] = c++;
        return out;
    }
    if (g.is_tree()) {
        ChiSetResult out;
        for (auto [u, v] : g.edges()) {
            out.value = std::max(out.value, g.degree(u) + g.degree(v) - 1);
        }
        if (g.size() <= 12) out.witness = chi_set_prime_exact(g).witness;
        return out;
    }
    return chi_set_prime_exact(g);
}

VerifyReport verify_adjacent_1_common(const Graph& g, const std::map<Edge, int>& f) {
    for (auto e : g.edges()) {
        if (!f.count(e)) throw PreconditionError("edge coloring must be total");
    }
    VerifyReport rep;
    auto around = [&](int v) {
        std::set<int> s;
        for (int w : g.neighbors(v)) {
            s.insert(f.at({std::min(v, w), std::max(v, w)}));
        }
        return s;
    };
    bool proper = true;
    for (int v = 0; v < g.order(); ++v) {
        if (static_cast<int>(around(v).size()) != g.degree(v)) proper = false;
    }
    rep.conditions.emplace_back("proper", proper);
    if (!proper) rep.violations.push_back("not a proper edge coloring");

    bool one_common = true;
    for (auto [u, v] : g.edges()) {
        auto cu = around(u), cv = around(v);
        std::vector<int> common;
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                              std::back_inserter(common));
        if (common.size() != 1) {
            one_common = false;
            rep.violations.push_back("edge " + edge_name({u, v}) + " has " +
                                     std::to_string(common.size()) + " common colors");
        }
    }
    rep.conditions.emplace_back("1-common", one_common);

    bool distinct = true;
    for (int u = 0; u < g.order(); ++u) {
        auto cu = around(u);
        std::vector<int> nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                auto ci = around(nb[i]), cj = around(nb[j]);
                std::vector<int> a, b;
                std::set_intersection(cu.begin(), cu.end(), ci.begin(), ci.end(),
                                      std::back_inserter(a));
                std::set_intersection(cu.begin(), cu.end(), cj.begin(), cj.end(),
                                      std::back_inserter(b));
                if (a == b) {
                    distinct = false;
                    rep.violations.push_back("adjacent edges at " + std::to_string(u) +
                                             " share their common-color set");
                }
            }
        }
    }
    rep.conditions.emplace_back("adjacent-distinct", distinct);
    rep.ok = proper && one_common && distinct;
    return rep;
}

std::map<Edge, int> derive_edge_coloring(const Graph& g, const std::vector<IntSet>& F) {
    if (static_cast<int>(F.size()) != g.order()) {
        throw PreconditionError("set-labeling must be total on V");
    }
    for (int v = 0; v < g.order(); ++v) {
        if (static_cast<int>(F[v].size()) < g.degree(v)) {
            throw PreconditionError("need |F(x)| >= deg(x) at vertex " + std::to_string(v));
        }
    }
    std::map<Edge, int> f;
    for (auto e : g.edges()) {
        IntSet common = set_intersection(F[e.first], F[e.second]);
        if (common.size() != 1) {
            throw PreconditionError("need |F(u) & F(v)| = 1 on edge " + edge_name(e));
        }
        f[e] = common[0];
    }
    for (int u = 0; u < g.order(); ++u) {
        std::set<int> seen;
        for (int w : g.neighbors(u)) {
            int c = f.at({std::min(u, w), std::max(u, w)});
            if (!seen.insert(c).second) {
                throw PreconditionError("adjacent intersections are not distinct at vertex " +
                                        std::to_string(u));
            }
        }
    }
    return f;
}

SetHomReport set_colored_homomorphism(const Graph& g, const SetColoring& Fg, const Graph& h,
                                      const SetColoring& Fh, const std::vector<int>& phi) {
    SetHomReport rep;
    auto hom = check_homomorphism(g, h, phi);
    if (!hom.homomorphism) {
        throw PreconditionError("phi is not a graph homomorphism");
    }
    bool vertex_rule = true;
    for (int w = 0; w < h.order(); ++w) {
        IntSet expect;
        bool any = false;
        for (int x = 0; x < g.order(); ++x) {
            if (phi[x] == w) {
                expect = set_union(expect, Fg.vertex[x]);
                any = true;
            }
        }
        if (!any) continue; // vertices outside the image are unconstrained
        if (Fh.vertex[w] != expect) {
            vertex_rule = false;
            rep.violations.push_back("vertex " + std::to_string(w) +
                                     " set differs from the preimage union");
        }
    }
    bool edge_rule = true;
    for (auto e : h.edges()) {
        IntSet expect;
        bool any = false;
        for (auto ge : g.edges()) {
            int a = phi[ge.first], b = phi[ge.second];
            Edge im{std::min(a, b), std::max(a, b)};
            if (im == e) {
                expect = set_union(expect, Fg.edge.at(ge));
                any = true;
            }
        }
        if (!any) continue;
        if (Fh.edge.at(e) != expect) {
            edge_rule = false;
            rep.violations.push_back("edge " + edge_name(e) +
                                     " set differs from the preimage union");
        }
    }
    rep.ok = vertex_rule && edge_rule;
    return rep;
}

namespace {

IntSet apply_pan_op(PanOp op, const IntSet& a, const IntSet& b, long long k, long long m) {
    switch (op) {
        case PanOp::Intersection: return set_intersection(a, b);
        case PanOp::Union: return set_union(a, b);
        case PanOp::SymmetricDifference: return set_symmetric_difference(a, b);
        case PanOp::GroupAdd: {
            IntSet out;
            for (int x : a) {
                for (int y : b) {
                    long long v = ((x + y - k) % m + m) % m;
                    out.push_back(static_cast<int>(v));
                }
            }
            return normalized(std::move(out));
        }
    }
    return {};
}

} // namespace

PanReport verify_pan_operation(const Graph& g, const SetColoring& sc, PanOp op,
                               const ConstraintSet& extra, long long group_k, long long group_m) {
    if (static_cast<int>(sc.vertex.size()) != g.order() || !sc.has_edge_sets(g)) {
        throw PreconditionError("pan verification needs total vertex and edge sets");
    }
    if (op == PanOp::GroupAdd && group_m <= 0) {
        throw PreconditionError("group-add needs a positive modulus");
    }
    PanReport rep;
    bool cond1 = true, cond2 = true, proper = true;
    for (auto e : g.edges()) {
        const IntSet& fu = sc.vertex[e.first];
        const IntSet& fv = sc.vertex[e.second];
        if (fu == fv) proper = false;
        IntSet combined = apply_pan_op(op, fu, fv, group_k, group_m);
        if (combined.empty() || !subsumes(sc.edge.at(e), combined)) {
            cond1 = false;
            rep.violations.push_back("(i) fails on edge " + edge_name(e));
        }
        for (const auto& con : extra) {
            if (con.kind == ConstraintKind::IntersectionC0) continue;
            if (!constraint_witness(con, fu, sc.edge.at(e), fv)) {
                cond2 = false;
                rep.violations.push_back("(ii) no witness for " + con.describe() + " on edge " +
                                         edge_name(e));
            }
        }
    }
    bool cond3 = true;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (sc.vertex[u] == sc.vertex[v]) continue;
            IntSet combined = apply_pan_op(op, sc.vertex[u], sc.vertex[v], group_k, group_m);
            if (combined.empty()) continue;
            bool realized = false;
            for (auto e : g.edges()) {
                if ((sc.vertex[e.first] == sc.vertex[u] && sc.vertex[e.second] == sc.vertex[v]) ||
                    (sc.vertex[e.first] == sc.vertex[v] && sc.vertex[e.second] == sc.vertex[u])) {
                    realized = true;
                    break;
                }
            }
            if (!realized) cond3 = false;
        }
    }
    rep.ok = cond1 && cond2 && proper;
    if (!proper) rep.violations.push_back("adjacent vertex sets must differ");
    rep.is_pan_operation_graph = rep.ok && cond3;
    return rep;
}

CompoundReport verify_family_coloring(const Graph& g, const FamilyColoring& fc) {
    if (static_cast<int>(fc.vertex.size()) != g.order()) {
        throw PreconditionError("family coloring must be total on V");
    }
    CompoundReport rep;
    auto family_intersection = [](const SetFamily& a, const SetFamily& b) {
        SetFamily out;
        for (const auto& s : a) {
            if (std::find(b.begin(), b.end(), s) != b.end()) out.push_back(s);
        }
        return out;
    };
    bool ok = true;
    for (auto e : g.edges()) {
        const SetFamily& fu = fc.vertex[e.first];
        const SetFamily& fv = fc.vertex[e.second];
        if (fu == fv) {
            ok = false;
            rep.violations.push_back("equal families on edge " + edge_name(e));
        }
        SetFamily common = family_intersection(fu, fv);
        if (common.empty()) {
            ok = false;
            rep.violations.push_back("disjoint families on edge " + edge_name(e));
            continue;
        }
        auto it = fc.edge.find(e);
        if (it == fc.edge.end()) {
            ok = false;
            rep.violations.push_back("missing edge family on " + edge_name(e));
            continue;
        }
        for (const auto& s : common) {
            if (std::find(it->second.begin(), it->second.end(), s) == it->second.end()) {
                ok = false;
                rep.violations.push_back("edge family on " + edge_name(e) +
                                         " misses common set " + set_to_string(s));
            }
        }
    }
    rep.ok = ok;
    bool complete = true;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (fc.vertex[u] == fc.vertex[v]) continue;
            if (family_intersection(fc.vertex[u], fc.vertex[v]).empty()) continue;
            if (!g.has_edge(u, v)) complete = false;
        }
    }
    rep.is_compound_intersected_graph = ok && complete;
    return rep;
}

ColoredGraph edge_split_colored(const ColoredGraph& cg, int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (!cg.coloring.edge.count(e)) throw PreconditionError("edge has no color set");
    auto split = split_edge(cg.graph, u, v);
    ColoredGraph out;
    out.graph = split.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex = cg.coloring.vertex;
    out.coloring.vertex.push_back(cg.coloring.vertex[u]); // u''
    out.coloring.vertex.push_back(cg.coloring.vertex[v]); // v''
    const int u2 = cg.graph.order(), v2 = cg.graph.order() + 1;
    for (auto ne : out.graph.edges()) {
        if (ne == split.first || ne == split.second) {
            out.coloring.edge[ne] = cg.coloring.edge.at(e);
            continue;
        }
        // Map back: u'' and v'' carry u's and v's old incident edges.
        auto back = [&](int x) { return x == u2 ? u : (x == v2 ? v : x); };
        Edge old{std::min(back(ne.first), back(ne.second)),
                 std::max(back(ne.first), back(ne.second))};
        out.coloring.edge[ne] = cg.coloring.edge.at(old);
    }
    return out;
}

ColoredGraph edge_coincide_colored(const ColoredGraph& cg, Edge e1, Edge e2) {
    auto merged = coincide_edges(cg.graph, e1, e2);
    ColoredGraph out;
    out.graph = merged.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex.assign(out.graph.order(), {});
    for (int v = 0; v < cg.graph.order(); ++v) {
        int t = merged.remap[v];
        out.coloring.vertex[t] = set_union(out.coloring.vertex[t], cg.coloring.vertex[v]);
    }
    for (auto [e, s] : cg.coloring.edge) {
        int a = merged.remap[e.first], b = merged.remap[e.second];
        Edge t{std::min(a, b), std::max(a, b)};
        auto it = out.coloring.edge.find(t);
        if (it == out.coloring.edge.end()) {
            out.coloring.edge[t] = s;
        } else {
            it->second = set_union(it->second, s);
        }
    }
    return out;
}

ColoredGraph vertex_split_colored(const ColoredGraph& cg, int u, const std::vector<int>& part1,
                                  const std::vector<int>& part2, VscRule rule, const IntSet& set1,
                                  const IntSet& set2) {
    auto split = split_vertex(cg.graph, u, part1, part2);
    IntSet f1, f2;
    const IntSet& fu = cg.coloring.vertex[u];
    switch (rule) {
        case VscRule::Copy:
            f1 = f2 = fu;
            break;
        case VscRule::DisjointParts:
            if (set1.empty() || set2.empty() || set_union(set1, set2) != fu ||
                !set_intersection(set1, set2).empty()) {
                throw PreconditionError("Vsc-5 needs a disjoint non-empty partition of F(w)");
            }
            f1 = set1;
            f2 = set2;
            break;
        case VscRule::Subsets:
            if (set1.empty() || set2.empty() || !subsumes(fu, set1) || !subsumes(fu, set2) ||
                set1 == fu || set2 == fu || set_intersection(set1, set2).empty()) {
                throw PreconditionError(
                    "Vsc-6 needs overlapping proper subsets of F(w)");
            }
            f1 = set1;
            f2 = set2;
            break;
    }
    ColoredGraph out;
    out.graph = split.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex = cg.coloring.vertex;
    out.coloring.vertex[u] = f1;
    out.coloring.vertex.push_back(f2);
    const int u2 = split.u_second;
    for (auto ne : out.graph.edges()) {
        auto back = [&](int x) { return x == u2 ? u : x; };
        Edge old{std::min(back(ne.first), back(ne.second)),
                 std::max(back(ne.first), back(ne.second))};
        out.coloring.edge[ne] = cg.coloring.edge.at(old);
    }
    return out;
}

ColoredGraph vertex_coincide_colored(const ColoredGraph& cg, int u1, int u2) {
    auto merged = coincide_vertices(cg.graph, u1, u2);
    ColoredGraph out;
    out.graph = merged.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex.assign(out.graph.order(), {});
    for (int v = 0; v < cg.graph.order(); ++v) {
        int t = merged.remap[v];
        out.coloring.vertex[t] = set_union(out.coloring.vertex[t], cg.coloring.vertex[v]);
    }
    for (auto [e, s] : cg.coloring.edge) {
        int a = merged.remap[e.first], b = merged.remap[e.second];
        out.coloring.edge[{std::min(a, b), std::max(a, b)}] = s;
    }
    return out;
}

ColoredGraph dc_compose(const std::vector<ColoredGraph>& parts) {
    if (parts.empty()) throw PreconditionError("dc_compose needs at least one part");
    // Vertices with equal color sets coincide; edges between equal set pairs
    // coincide with union edge colors.
    std::vector<IntSet> sets;
    for (const auto& part : parts) {
        for (const auto& s : part.coloring.vertex) {
            if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
        }
    }
    std::sort(sets.begin(), sets.end());
    auto id_of = [&](const IntSet& s) {
        return static_cast<int>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin());
    };
    std::map<Edge, IntSet> edge_sets;
    for (const auto& part : parts) {
        for (auto e : part.graph.edges()) {
            int a = id_of(part.coloring.vertex[e.first]);
            int b = id_of(part.coloring.vertex[e.second]);
            if (a == b) {
                throw PreconditionError("coinciding adjacent equal-colored vertices makes a loop");
            }
            Edge key{std::min(a, b), std::max(a, b)};
            const IntSet& c = part.coloring.edge.at(e);
            auto it = edge_sets.find(key);
            if (it == edge_sets.end()) {
                edge_sets[key] = c;
            } else {
                it->second = set_union(it->second, c);
            }
        }
    }
    ColoredGraph out;
    std::vector<Edge> es;
    for (const auto& [e, s] : edge_sets) es.push_back(e);
    out.graph = Graph(static_cast<int>(sets.size()), std::move(es));
    out.coloring.vertex = std::move(sets);
    out.coloring.edge = std::move(edge_sets);
    out.coloring.constraints = {Constraint::c0()};
    return out;
}

} // namespace topcode
