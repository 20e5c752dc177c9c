#include "topcode/topcode_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace topcode {

namespace {

std::vector<int> default_order(int q, const std::vector<int>& edge_order) {
    std::vector<int> order = edge_order;
    if (order.empty()) {
        order.resize(q);
        std::iota(order.begin(), order.end(), 0);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < q; ++i) {
        if (i >= static_cast<int>(sorted.size()) || sorted[i] != i) {
            throw PreconditionError("edge order must be a permutation of the edge indices");
        }
    }
    return order;
}

BigInt factorial(long long n) {
    BigInt out = 1;
    for (long long i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace

TopcodeMatrix from_labeled_graph(const Graph& g, const Labeling& f, LabelingKind kind,
                                 const std::vector<int>& edge_order) {
    if (static_cast<int>(f.vertex.size()) != g.order()) {
        throw PreconditionError("labeling must be total on V");
    }
    auto order = default_order(g.size(), edge_order);
    TopcodeMatrix m;
    for (int idx : order) {
        Edge e = g.edges()[idx];
        m.rows[0].push_back(f.vertex[e.first]);
        m.rows[1].push_back(induced_edge_value(f, kind, g, e));
        m.rows[2].push_back(f.vertex[e.second]);
    }
    return m;
}

std::string to_string_canonical(const TopcodeMatrix& m, const std::string& sep) {
    std::string out;
    for (int c = 0; c < m.columns(); ++c) {
        for (int r = 0; r < 3; ++r) {
            if (!out.empty() && !sep.empty()) out += sep;
            out += std::to_string(m.rows[r][c]);
        }
    }
    return out;
}

std::vector<std::string> to_strings_seeded(const TopcodeMatrix& m, std::uint64_t seed, int count,
                                           const std::string& sep) {
    std::vector<long long> entries;
    for (int c = 0; c < m.columns(); ++c) {
        for (int r = 0; r < 3; ++r) entries.push_back(m.rows[r][c]);
    }
    Rng rng(seed);
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        auto perm = entries;
        rng.shuffle(perm);
        std::string s;
        for (long long v : perm) {
            if (!s.empty() && !sep.empty()) s += sep;
            s += std::to_string(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

BigInt string_count(const TopcodeMatrix& m) { return factorial(3LL * m.columns()); }

SetStringCount set_string_count(const SetTopcodeMatrix& m) {
    SetStringCount out;
    out.m_abc = 1;
    for (int r = 0; r < 3; ++r) {
        for (const auto& s : m.rows[r]) out.m_abc *= factorial(static_cast<long long>(s.size()));
    }
    out.total = out.m_abc * factorial(3LL * m.columns());
    return out;
}

SetTopcodeMatrix from_set_colored_graph(const Graph& g, const SetColoring& sc,
                                        const std::vector<int>& edge_order) {
    auto rep = verify_intersected(g, sc, sc.constraints);
    if (!rep.ok) {
        std::string what = "set coloring fails verification:";
        for (const auto& v : rep.violations) what += " [" + v + "]";
        throw PreconditionError(what);
    }
    auto order = default_order(g.size(), edge_order);
    SetTopcodeMatrix m;
    for (int idx : order) {
        Edge e = g.edges()[idx];
        m.rows[0].push_back(sc.vertex[e.first]);
        m.rows[1].push_back(sc.edge.at(e));
        m.rows[2].push_back(sc.vertex[e.second]);
    }
    return m;
}

StringTopcodeMatrix string_type(const SetTopcodeMatrix& m, std::uint64_t seed) {
    Rng rng(seed);
    StringTopcodeMatrix out;
    for (int c = 0; c < m.columns(); ++c) {
        for (int r = 0; r < 3; ++r) {
            std::vector<int> perm = m.rows[r][c];
            rng.shuffle(perm);
            std::string s;
            for (int v : perm) s += std::to_string(v);
            out.rows[r].push_back(std::move(s));
        }
    }
    return out;
}

NestedTopcodeMatrix nested_graph(const Graph& j, const GraphicGroup& group,
                                 const std::vector<int>& phi_vertex,
                                 const std::map<Edge, int>& phi_edge, int zero) {
    if (static_cast<int>(phi_vertex.size()) != j.order()) {
        throw PreconditionError("phi must be total on V(J)");
    }
    NestedTopcodeMatrix out;
    out.kind = NestedKind::Graph;
    out.group = group;
    for (auto e : j.edges()) {
        auto it = phi_edge.find(e);
        if (it == phi_edge.end()) throw PreconditionError("phi must be total on E(J)");
        int expect = group.add(phi_vertex[e.first], phi_vertex[e.second], zero);
        if (it->second != expect) {
            throw PreconditionError("group law fails on edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + "): expected element " +
                                    std::to_string(expect));
        }
        out.grid[0].push_back(phi_vertex[e.first]);
        out.grid[1].push_back(it->second);
        out.grid[2].push_back(phi_vertex[e.second]);
    }
    return out;
}

NestedTopcodeMatrix nested_matrix(const NestedTopcodeMatrix& graph_kind) {
    if (graph_kind.kind != NestedKind::Graph) {
        throw PreconditionError("matrix kind is derived from the graph kind");
    }
    NestedTopcodeMatrix out;
    out.kind = NestedKind::Matrix;
    out.grid = graph_kind.grid;
    const auto& grp = graph_kind.group;
    for (int t = 1; t <= grp.modulus(); ++t) {
        Labeling f = grp.element_labeling(t);
        if (!grp.has_edge_slots()) {
            for (auto e : grp.base_graph().edges()) {
                f.edge[e] = std::llabs(f.vertex[e.first] - f.vertex[e.second]);
            }
        }
        out.matrices.push_back(
            from_labeled_graph(grp.base_graph(), f, LabelingKind::Graceful));
    }
    return out;
}

NestedTopcodeMatrix nested_hypergraph(const Graph& j, const FamilyColoring& fc) {
    auto rep = verify_family_coloring(j, fc);
    if (!rep.ok) {
        throw PreconditionError("compound set-coloring fails verification");
    }
    NestedTopcodeMatrix out;
    out.kind = NestedKind::Hypergraph;
    auto family_id = [&](const SetFamily& fam) {
        auto it = std::find(out.families.begin(), out.families.end(), fam);
        if (it != out.families.end()) return static_cast<int>(it - out.families.begin());
        out.families.push_back(fam);
        return static_cast<int>(out.families.size()) - 1;
    };
    for (auto e : j.edges()) {
        out.grid[0].push_back(family_id(fc.vertex[e.first]));
        out.grid[1].push_back(family_id(fc.edge.at(e)));
        out.grid[2].push_back(family_id(fc.vertex[e.second]));
    }
    return out;
}

} // namespace topcode
