#include "topcode/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "topcode/rng.hpp"

namespace topcode {

std::string to_string(LatticeOp op) {
    switch (op) {
        case LatticeOp::O1: return "O1";
        case LatticeOp::O2: return "O2";
        case LatticeOp::O3: return "O3";
        case LatticeOp::EdgeCoincide: return "edge-coincide";
        case LatticeOp::VertexCoincide: return "vertex-coincide";
    }
    return "?";
}

namespace {

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
    const int pa = a.graph.order();
    std::vector<Edge> es = a.graph.edges();
    for (auto [u, v] : b.graph.edges()) es.push_back({u + pa, v + pa});
    ColoredGraph out;
    out.graph = Graph(pa + b.graph.order(), std::move(es));
    out.coloring.constraints = a.coloring.constraints.empty() ? b.coloring.constraints
                                                              : a.coloring.constraints;
    out.coloring.vertex = a.coloring.vertex;
    out.coloring.vertex.resize(pa, IntSet{});
    for (const auto& s : b.coloring.vertex) out.coloring.vertex.push_back(s);
    out.coloring.vertex.resize(out.graph.order(), IntSet{});
    out.coloring.edge = a.coloring.edge;
    for (const auto& [e, s] : b.coloring.edge) {
        out.coloring.edge[{e.first + pa, e.second + pa}] = s;
    }
    return out;
}

ColoredGraph split_copy(const ColoredGraph& cg, int u, const std::vector<int>& p1,
                        const std::vector<int>& p2, int& u_second) {
    auto split = split_vertex(cg.graph, u, p1, p2);
    u_second = split.u_second;
    ColoredGraph out;
    out.graph = split.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex = cg.coloring.vertex;
    out.coloring.vertex.resize(cg.graph.order(), IntSet{});
    out.coloring.vertex.push_back(out.coloring.vertex.empty() ? IntSet{}
                                                              : out.coloring.vertex[u]);
    for (auto ne : out.graph.edges()) {
        auto back = [&](int x) { return x == split.u_second ? u : x; };
        Edge old{std::min(back(ne.first), back(ne.second)),
                 std::max(back(ne.first), back(ne.second))};
        auto it = cg.coloring.edge.find(old);
        if (it != cg.coloring.edge.end()) out.coloring.edge[ne] = it->second;
    }
    return out;
}

ColoredGraph coincide_pair(const ColoredGraph& cg, int a, int b) {
    auto merged = coincide_vertices(cg.graph, a, b);
    ColoredGraph out;
    out.graph = merged.graph;
    out.coloring.constraints = cg.coloring.constraints;
    out.coloring.vertex.assign(out.graph.order(), IntSet{});
    for (int v = 0; v < cg.graph.order(); ++v) {
        int t = merged.remap[v];
        out.coloring.vertex[t] = set_union(out.coloring.vertex[t],
                                           v < static_cast<int>(cg.coloring.vertex.size())
                                               ? cg.coloring.vertex[v]
                                               : IntSet{});
    }
    for (const auto& [e, s] : cg.coloring.edge) {
        int x = merged.remap[e.first], y = merged.remap[e.second];
        Edge t{std::min(x, y), std::max(x, y)};
        auto it = out.coloring.edge.find(t);
        if (it == out.coloring.edge.end()) {
            out.coloring.edge[t] = s;
        } else {
            it->second = set_union(it->second, s);
        }
    }
    return out;
}

ColoredGraph add_plain_edge(const ColoredGraph& cg, int a, int b) {
    std::vector<Edge> es = cg.graph.edges();
    es.push_back({std::min(a, b), std::max(a, b)});
    ColoredGraph out = cg;
    out.graph = Graph(cg.graph.order(), std::move(es));
    return out;
}

} // namespace

ColoredGraph apply_op_colored(const ColoredGraph& g1, const ColoredGraph& g2, LatticeOp op,
                              const OpSites& sites) {
    const int p1 = g1.graph.order();
    ColoredGraph u = disjoint_union(g1, g2);
    switch (op) {
        case LatticeOp::VertexCoincide:
            return coincide_pair(u, sites.v1, sites.v2 + p1);
        case LatticeOp::EdgeCoincide: {
            Edge e2{sites.e2.first + p1, sites.e2.second + p1};
            // Reuse the colored edge-coincide (union rules on both pairs).
            return edge_coincide_colored(u, sites.e1, e2);
        }
        default: break;
    }
    std::vector<int> p2a = sites.part2a, p2b = sites.part2b;
    for (int& v : p2a) v += p1;
    for (int& v : p2b) v += p1;
    int u1_second = -1, u2_second = -1;
    ColoredGraph s1 = split_copy(u, sites.u1, sites.part1a, sites.part1b, u1_second);
    ColoredGraph s2 = split_copy(s1, sites.u2 + p1, p2a, p2b, u2_second);
    const int a1 = sites.u1, a2 = u1_second;          // u', u''
    const int b1 = sites.u2 + p1, b2 = u2_second;      // v', v''
    switch (op) {
        case LatticeOp::O1:
            return add_plain_edge(add_plain_edge(s2, a1, b1), a2, b2);
        case LatticeOp::O2: {
            ColoredGraph once = coincide_pair(s2, a1, b1);
            // ids after the first coincide: recompute through the remap
            auto merged = coincide_vertices(s2.graph, a1, b1);
            return coincide_pair(once, merged.remap[a2], merged.remap[b2]);
        }
        case LatticeOp::O3: {
            ColoredGraph once = coincide_pair(s2, a1, b1);
            auto merged = coincide_vertices(s2.graph, a1, b1);
            return add_plain_edge(once, merged.remap[a2], merged.remap[b2]);
        }
        default: break;
    }
    throw PreconditionError("unsupported lattice operation");
}

Graph apply_op(const Graph& g1, const Graph& g2, LatticeOp op, const OpSites& sites) {
    ColoredGraph a{g1, {}}, b{g2, {}};
    a.coloring.vertex.assign(g1.order(), IntSet{});
    b.coloring.vertex.assign(g2.order(), IntSet{});
    return apply_op_colored(a, b, op, sites).graph;
}

namespace {

// Uniform choice of a legal split site (vertex of degree >= 2 plus neighbor
// bipartition). When the graph has a Hamilton cycle of reasonable size, the
// bipartition is made to straddle the first one: the cycle's two edges at u
// land on opposite sides, matching how the split interacts with Hamilton
// cycles in the constructions.
void choose_split(const Graph& g, Rng& rng, int& u, std::vector<int>& part1,
                  std::vector<int>& part2) {
    std::vector<int> candidates;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 2) candidates.push_back(v);
    }
    if (candidates.empty()) throw PreconditionError("no splittable vertex");
    u = candidates[rng.below(candidates.size())];

    int anchor1 = -1, anchor2 = -1;
    if (g.order() <= 16) {
        auto cycles = hamilton_cycles(g);
        if (!cycles.empty()) {
            const auto& c = cycles.front();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == u) {
                    anchor1 = c[(i + c.size() - 1) % c.size()];
                    anchor2 = c[(i + 1) % c.size()];
                    break;
                }
            }
        }
    }
    part1.clear();
    part2.clear();
    for (int w : g.neighbors(u)) {
        if (w == anchor1) {
            part1.push_back(w);
        } else if (w == anchor2) {
            part2.push_back(w);
        } else {
            (rng.below(2) == 0 ? part1 : part2).push_back(w);
        }
    }
    if (part1.empty()) {
        part1.push_back(part2.back());
        part2.pop_back();
    }
    if (part2.empty()) {
        part2.push_back(part1.back());
        part1.pop_back();
    }
}

} // namespace

LatticeSample sample_lattice(const std::vector<ColoredGraph>& bases, const LatticeWord& word) {
    if (bases.empty() || word.multiplicities.size() != bases.size()) {
        throw PreconditionError("word multiplicities must match the base list");
    }
    std::vector<int> sequence;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        if (word.multiplicities[k] < 0) throw PreconditionError("negative multiplicity");
        for (int c = 0; c < word.multiplicities[k]; ++c) sequence.push_back(static_cast<int>(k));
    }
    if (sequence.empty()) throw PreconditionError("word must select at least one base");
    if (word.ops.size() + 1 != sequence.size()) {
        throw PreconditionError("word needs exactly sum(a_k) - 1 operations");
    }
    int total = 0;
    for (int k : sequence) total += bases[k].graph.order();
    if (total > Graph::kMaxOrder) {
        throw CapExceededError("lattice sample exceeds the 64-vertex cap");
    }

    Rng rng(word.seed);
    LatticeSample out;
    ColoredGraph acc = bases[sequence[0]];
    for (std::size_t step = 0; step + 1 < sequence.size(); ++step) {
        const ColoredGraph& next = bases[sequence[step + 1]];
        LatticeOp op = word.ops[step];
        OpSites sites;
        switch (op) {
            case LatticeOp::O1:
            case LatticeOp::O2:
            case LatticeOp::O3:
                choose_split(acc.graph, rng, sites.u1, sites.part1a, sites.part1b);
                choose_split(next.graph, rng, sites.u2, sites.part2a, sites.part2b);
                break;
            case LatticeOp::EdgeCoincide: {
                const auto& ea = acc.graph.edges();
                const auto& eb = next.graph.edges();
                if (ea.empty() || eb.empty()) throw PreconditionError("no edge to coincide");
                sites.e1 = ea[rng.below(ea.size())];
                sites.e2 = eb[rng.below(eb.size())];
                break;
            }
            case LatticeOp::VertexCoincide:
                sites.v1 = static_cast<int>(rng.below(acc.graph.order()));
                sites.v2 = static_cast<int>(rng.below(next.graph.order()));
                break;
        }
        acc = apply_op_colored(acc, next, op, sites);
        out.trace.push_back({op, sites});
    }
    out.result = std::move(acc);
    return out;
}

ColoredGraph replay_lattice(const std::vector<ColoredGraph>& bases,
                            const std::vector<int>& multiplicities,
                            const std::vector<ProvenanceStep>& trace) {
    std::vector<int> sequence;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        for (int c = 0; c < multiplicities[k]; ++c) sequence.push_back(static_cast<int>(k));
    }
    if (sequence.empty()) throw PreconditionError("empty selection");
    if (trace.size() + 1 != sequence.size()) {
        throw PreconditionError("trace length must be sum(a_k) - 1");
    }
    ColoredGraph acc = bases[sequence[0]];
    for (std::size_t step = 0; step < trace.size(); ++step) {
        acc = apply_op_colored(acc, bases[sequence[step + 1]], trace[step].op, trace[step].sites);
    }
    return acc;
}

Hypergraph hypergraph_lattice_element(const std::vector<Hypergraph>& bases,
                                      const std::vector<int>& multiplicities) {
    if (bases.size() != multiplicities.size()) {
        throw PreconditionError("multiplicities must match the base list");
    }
    bool any = false;
    Hypergraph acc;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        if (multiplicities[k] <= 0) continue;
        acc = any ? coincide_hypergraphs(acc, bases[k]) : bases[k];
        any = true;
    }
    if (!any) throw PreconditionError("selection must be non-empty");
    return acc;
}

std::vector<Hypergraph> enumerate01(const std::vector<Hypergraph>& bases) {
    const std::size_t m = bases.size();
    if (m > 16) throw CapExceededError("enumerate01 is capped at 16 bases");
    std::vector<Hypergraph> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Hypergraph acc; // empty element for mask 0
        bool any = false;
        for (std::size_t k = 0; k < m; ++k) {
            if (mask & (std::size_t{1} << k)) {
                acc = any ? coincide_hypergraphs(acc, bases[k]) : bases[k];
                any = true;
            }
        }
        out.push_back(acc);
    }
    return out;
}

ExtensionCheck edge_hamiltonian_extension_check(const Graph& g, int u,
                                                const std::vector<int>& part1,
                                                const std::vector<int>& part2, ExtensionMode mode,
                                                int size) {
    ExtensionCheck out;
    out.base_edge_hamiltonian = is_edge_hamiltonian(g).edge_hamiltonian;
    auto split = split_vertex(g, u, part1, part2);
    const int a = split.u_prime, b = split.u_second;
    std::vector<Edge> es = split.graph.edges();
    int order = split.graph.order();
    switch (mode) {
        case ExtensionMode::EdgeJoin:
            es.push_back({std::min(a, b), std::max(a, b)});
            break;
        case ExtensionMode::PathJoin: {
            if (size < 1) throw PreconditionError("path join needs >= 1 internal vertex");
            int prev = a;
            for (int i = 0; i < size; ++i) {
                es.push_back({std::min(prev, order), std::max(prev, order)});
                prev = order++;
            }
            es.push_back({std::min(prev, b), std::max(prev, b)});
            break;
        }
        case ExtensionMode::CliqueJoin: {
            if (size < 2) throw PreconditionError("clique join needs m >= 2");
            // K_size with one vertex coincided onto each split half.
            std::vector<int> clique{a, b};
            for (int i = 0; i < size - 2; ++i) clique.push_back(order++);
            for (std::size_t i = 0; i < clique.size(); ++i) {
                for (std::size_t j = i + 1; j < clique.size(); ++j) {
                    es.push_back({std::min(clique[i], clique[j]),
                                  std::max(clique[i], clique[j])});
                }
            }
            break;
        }
    }
    out.extended = Graph(order, std::move(es));
    out.extended_edge_hamiltonian = is_edge_hamiltonian(out.extended).edge_hamiltonian;
    out.equivalent = out.base_edge_hamiltonian == out.extended_edge_hamiltonian;
    return out;
}

} // namespace topcode
