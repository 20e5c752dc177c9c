#include "topcode/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace topcode {

namespace {

std::string set_to_string(const IntSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

bool intersects(const IntSet& a, const IntSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return false;
}

bool subset_of(const IntSet& a, const IntSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

IntSet normalized(IntSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

IntSet set_union(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IntSet set_intersection(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IntSet set_difference(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IntSet set_symmetric_difference(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

Hypergraph Hypergraph::validate(IntSet ground, std::vector<IntSet> edges) {
    ground = normalized(std::move(ground));
    for (auto& e : edges) e = normalized(std::move(e));
    std::sort(edges.begin(), edges.end());

    std::vector<std::string> problems;
    for (const auto& e : edges) {
        if (e.empty()) problems.push_back("empty hyperedge");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            problems.push_back("duplicate hyperedge " + set_to_string(edges[i]));
        }
    }
    IntSet covered;
    for (const auto& e : edges) covered = set_union(covered, e);
    if (covered != ground) {
        problems.push_back("union of hyperedges " + set_to_string(covered) +
                           " differs from the ground set " + set_to_string(ground));
    }
    if (!problems.empty()) {
        std::string what = "invalid hypergraph:";
        for (const auto& p : problems) what += " [" + p + "]";
        throw PreconditionError(what);
    }
    Hypergraph h;
    h.ground_ = std::move(ground);
    h.edges_ = std::move(edges);
    return h;
}

Hypergraph Hypergraph::from_edges(std::vector<IntSet> edges) {
    IntSet ground;
    for (auto& e : edges) ground = set_union(ground, normalized(e));
    return validate(std::move(ground), std::move(edges));
}

std::vector<IntSet> graham_reduction(const Hypergraph& h) {
    std::vector<IntSet> fam = h.edges();
    bool changed = true;
    while (changed) {
        changed = false;
        // GR-1: delete vertices lying in exactly one hyperedge.
        std::map<int, int> count;
        for (const auto& e : fam)
            for (int x : e) ++count[x];
        std::vector<IntSet> next;
        for (const auto& e : fam) {
            IntSet kept;
            for (int x : e)
                if (count[x] > 1) kept.push_back(x);
            if (kept.size() != e.size()) changed = true;
            if (!kept.empty()) next.push_back(kept);
        }
        if (next.size() != fam.size()) changed = true;
        fam = std::move(next);
        // GR-2: delete hyperedges contained in another (simultaneous sweep;
        // equal sets eliminate each other).
        std::vector<char> drop(fam.size(), 0);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            for (std::size_t j = 0; j < fam.size(); ++j) {
                if (i != j && subset_of(fam[i], fam[j])) {
                    drop[i] = 1;
                    break;
                }
            }
        }
        std::vector<IntSet> kept;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            if (!drop[i]) kept.push_back(fam[i]);
        }
        if (kept.size() != fam.size()) changed = true;
        fam = std::move(kept);
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

DualResult dual(const Hypergraph& h) {
    DualResult out;
    out.incidence.resize(h.order());
    for (int j = 0; j < h.order(); ++j) {
        int x = h.ground()[j];
        for (int i = 0; i < h.size(); ++i) {
            if (std::binary_search(h.edges()[i].begin(), h.edges()[i].end(), x)) {
                out.incidence[j].push_back(i);
            }
        }
    }
    IntSet dual_ground(h.size());
    std::iota(dual_ground.begin(), dual_ground.end(), 0);
    std::vector<IntSet> fam = out.incidence;
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    out.hypergraph = Hypergraph::validate(std::move(dual_ground), std::move(fam));
    return out;
}

std::optional<int> uniformity(const Hypergraph& h) {
    if (h.size() == 0) return std::nullopt;
    std::size_t r = h.edges()[0].size();
    for (const auto& e : h.edges()) {
        if (e.size() != r) return std::nullopt;
    }
    return static_cast<int>(r);
}

StructureReport structure_report(const Hypergraph& h) {
    StructureReport rep;
    std::map<int, int> count;
    for (const auto& e : h.edges())
        for (int x : e) ++count[x];
    for (int x : h.ground()) {
        if (count[x] == 1) rep.isolated_vertices.push_back(x);
    }
    const auto& fam = h.edges();
    rep.irreducible = true;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = 0; j < fam.size(); ++j) {
            if (i != j && subset_of(fam[i], fam[j])) rep.irreducible = false;
        }
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        // Clause (i): disjoint from every other hyperedge.
        bool lonely = true;
        for (std::size_t j = 0; j < fam.size(); ++j) {
            if (i != j && intersects(fam[i], fam[j])) {
                lonely = false;
                break;
            }
        }
        if (lonely) {
            rep.ears.push_back(fam[i]);
            continue;
        }
        // Clause (ii): some other e* collects all of e's shared vertices, i.e.
        // every vertex of e \ e* lies in no other hyperedge.
        for (std::size_t k = 0; k < fam.size(); ++k) {
            if (k == i) continue;
            IntSet priv = set_difference(fam[i], fam[k]);
            bool ok = true;
            for (int x : priv) {
                if (count[x] > 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                rep.ears.push_back(fam[i]);
                break;
            }
        }
    }
    return rep;
}

std::vector<std::vector<IntSet>> perfect_hypermatchings(const Hypergraph& h) {
    if (h.size() > 24) throw CapExceededError("perfect_hypermatchings is capped at 24 hyperedges");
    std::vector<std::vector<IntSet>> out;
    std::vector<int> pick;
    const auto& fam = h.edges();
    std::function<void(std::size_t, const IntSet&)> rec = [&](std::size_t idx, const IntSet& used) {
        if (used == h.ground()) {
            std::vector<IntSet> m;
            for (int i : pick) m.push_back(fam[i]);
            out.push_back(std::move(m));
            return;
        }
        if (idx >= fam.size()) return;
        // Cover the smallest uncovered ground element; its candidate edges all
        // have index >= idx in family order.
        int target = -1;
        for (int x : h.ground()) {
            if (!std::binary_search(used.begin(), used.end(), x)) {
                target = x;
                break;
            }
        }
        for (std::size_t i = idx; i < fam.size(); ++i) {
            if (!std::binary_search(fam[i].begin(), fam[i].end(), target)) continue;
            if (!set_intersection(fam[i], used).empty()) continue;
            pick.push_back(static_cast<int>(i));
            rec(i + 1, set_union(used, fam[i]));
            pick.pop_back();
        }
    };
    rec(0, {});
    std::sort(out.begin(), out.end());
    return out;
}

HyperDegrees hyperedge_degrees(const Hypergraph& h) {
    HyperDegrees deg;
    deg.hyperedge.assign(h.size(), 0);
    for (int i = 0; i < h.size(); ++i) {
        for (int j = 0; j < h.size(); ++j) {
            if (i != j && intersects(h.edges()[i], h.edges()[j])) ++deg.hyperedge[i];
        }
    }
    for (int x : h.ground()) deg.vertex[x] = 0;
    for (const auto& e : h.edges())
        for (int x : e) ++deg.vertex[x];
    return deg;
}

IntersectedGraph intersected_graph(const Hypergraph& h) {
    std::vector<int> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    return intersected_graph(h, order);
}

IntersectedGraph intersected_graph(const Hypergraph& h, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != h.size()) {
        throw PreconditionError("order must be a permutation of the hyperedge indices");
    }
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < h.size(); ++i) {
            if (sorted[i] != i) {
                throw PreconditionError("order must be a permutation of the hyperedge indices");
            }
        }
    }
    IntersectedGraph out;
    std::vector<Edge> es;
    SetColoring sc;
    sc.constraints = {Constraint::c0()};
    sc.vertex.resize(h.size());
    for (int v = 0; v < h.size(); ++v) sc.vertex[v] = h.edges()[order[v]];
    for (int u = 0; u < h.size(); ++u) {
        for (int v = u + 1; v < h.size(); ++v) {
            IntSet common = set_intersection(sc.vertex[u], sc.vertex[v]);
            if (!common.empty()) {
                es.push_back({u, v});
                sc.edge[{u, v}] = std::move(common);
            }
        }
    }
    out.graph = Graph(h.size(), std::move(es));
    out.coloring = std::move(sc);
    return out;
}

std::optional<std::vector<int>> hyperedge_hamilton_cycle(const Hypergraph& h) {
    if (h.size() > 16) {
        throw CapExceededError("hyperedge_hamilton_cycle is capped at 16 hyperedges");
    }
    if (h.size() < 3) return std::nullopt;
    // Every member of the cycle must be a non-ear, and the cycle spans all of
    // the family, so any ear rules the cycle out.
    if (!structure_report(h).ears.empty()) return std::nullopt;
    auto ig = intersected_graph(h);
    auto cycles = hamilton_cycles(ig.graph);
    if (cycles.empty()) return std::nullopt;
    return cycles.front();
}

HyperConnectivity hyperedge_connectivity(const Hypergraph& h) {
    if (h.size() > 16) {
        throw CapExceededError("hyperedge_connectivity is capped at 16 hyperedges");
    }
    auto ig = intersected_graph(h);
    if (!ig.graph.connected()) {
        throw PreconditionError("hyperedge_connectivity needs a connected intersected graph");
    }
    auto rep = vertex_connectivity_cut(ig.graph);
    HyperConnectivity out;
    out.connectivity = rep.connectivity;
    for (int v : rep.cut) out.cut_set.push_back(h.edges()[v]);
    return out;
}

namespace {

// Smallest k admitting a proper coloring of g; canonical backtracking where a
// vertex may only use colors up to (max used so far) + 1.
int chromatic_number(const Graph& g) {
    const int p = g.order();
    if (p == 0) return 0;
    for (int k = 1; k <= p; ++k) {
        std::vector<int> color(p, -1);
        std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
            if (v == p) return true;
            int cap = std::min(k, used + 1);
            for (int c = 0; c < cap; ++c) {
                bool ok = true;
                for (int w : g.neighbors(v)) {
                    if (w < v && color[w] == c) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                color[v] = c;
                if (rec(v + 1, std::max(used, c + 1))) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return p;
}

} // namespace

int hyperedge_chromatic_index(const Hypergraph& h) {
    if (h.size() > 12) throw CapExceededError("chromatic search is capped at 12 hyperedges");
    return chromatic_number(intersected_graph(h).graph);
}

int hypervertex_chromatic_number(const Hypergraph& h) {
    if (h.size() > 12 || h.order() > 20) {
        throw CapExceededError("hypervertex chromatic search is capped at 12 edges / 20 vertices");
    }
    const int n = h.order();
    if (n == 0) return 0;
    std::vector<IntSet> big;
    for (const auto& e : h.edges())
        if (e.size() >= 2) big.push_back(e);
    if (big.empty()) return 1;
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[h.ground()[i]] = i;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, -1);
        std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
            if (v == n) {
                for (const auto& e : big) {
                    int c0 = color[index[e[0]]];
                    bool mono = true;
                    for (int x : e) {
                        if (color[index[x]] != c0) {
                            mono = false;
                            break;
                        }
                    }
                    if (mono) return false;
                }
                return true;
            }
            int cap = std::min(k, used + 1);
            for (int c = 0; c < cap; ++c) {
                color[v] = c;
                // Prune: a fully-colored big hyperedge must not be monochromatic.
                bool ok = true;
                for (const auto& e : big) {
                    bool complete = true, mono = true;
                    int first = -1;
                    for (int x : e) {
                        int cx = color[index[x]];
                        if (cx == -1) {
                            complete = false;
                            break;
                        }
                        if (first == -1) first = cx;
                        if (cx != first) mono = false;
                    }
                    if (complete && mono) {
                        ok = false;
                        break;
                    }
                }
                if (ok && rec(v + 1, std::max(used, c + 1))) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n;
}

HyperTotalReport verify_hyper_total(const Hypergraph& h, const std::vector<int>& edge_color,
                                    const std::map<int, int>& vertex_color) {
    if (static_cast<int>(edge_color.size()) != h.size()) {
        throw PreconditionError("edge coloring must cover the family");
    }
    HyperTotalReport rep;
    rep.edge_part_proper = true;
    for (int i = 0; i < h.size(); ++i) {
        for (int j = i + 1; j < h.size(); ++j) {
            if (intersects(h.edges()[i], h.edges()[j]) && edge_color[i] == edge_color[j]) {
                rep.edge_part_proper = false;
                rep.violations.push_back("intersecting hyperedges " + std::to_string(i) + "," +
                                         std::to_string(j) + " share color");
            }
        }
    }
    rep.vertex_part_ok = true;
    for (const auto& e : h.edges()) {
        if (e.size() < 2) continue;
        auto it = vertex_color.find(e[0]);
        if (it == vertex_color.end()) {
            throw PreconditionError("vertex coloring must cover the ground set");
        }
        bool varied = false;
        for (int x : e) {
            auto jt = vertex_color.find(x);
            if (jt == vertex_color.end()) {
                throw PreconditionError("vertex coloring must cover the ground set");
            }
            if (jt->second != it->second) varied = true;
        }
        if (!varied) {
            rep.vertex_part_ok = false;
            rep.violations.push_back("hyperedge " + set_to_string(e) + " is monochromatic");
        }
    }
    auto deg = hyperedge_degrees(h);
    int delta = deg.hyperedge.empty() ? 0
                                      : *std::max_element(deg.hyperedge.begin(), deg.hyperedge.end());
    std::set<int> used(edge_color.begin(), edge_color.end());
    int m = static_cast<int>(used.size());
    rep.vizing_window = (m >= delta && m <= delta + 1);
    rep.ok = rep.edge_part_proper && rep.vertex_part_ok;
    return rep;
}

Hypergraph set_decrease(const Hypergraph& h,
                        const std::vector<std::optional<IntSet>>& subtract) {
    if (static_cast<int>(subtract.size()) != h.size()) {
        throw PreconditionError("aligned subtrahend list must match the family size");
    }
    std::vector<IntSet> next;
    bool changed = false;
    for (int i = 0; i < h.size(); ++i) {
        IntSet e = h.edges()[i];
        if (subtract[i]) {
            IntSet reduced = set_difference(e, *subtract[i]);
            if (reduced != e) changed = true;
            e = std::move(reduced);
        }
        next.push_back(std::move(e));
    }
    if (!changed) throw PreconditionError("set-decrease changed no hyperedge");
    try {
        return Hypergraph::validate(h.ground(), std::move(next));
    } catch (const PreconditionError& err) {
        throw PreconditionError(std::string("not decreasing: ") + err.what());
    }
}

Hypergraph set_increase(const Hypergraph& h, const std::vector<std::optional<IntSet>>& add) {
    if (static_cast<int>(add.size()) != h.size()) {
        throw PreconditionError("aligned addend list must match the family size");
    }
    std::vector<IntSet> next;
    bool changed = false;
    for (int i = 0; i < h.size(); ++i) {
        IntSet e = h.edges()[i];
        if (add[i]) {
            IntSet grown = set_union(e, *add[i]);
            if (grown != e) changed = true;
            e = std::move(grown);
        }
        next.push_back(std::move(e));
    }
    if (!changed) throw PreconditionError("set-increase changed no hyperedge");
    return Hypergraph::from_edges(std::move(next));
}

Hypergraph set_adjust(const Hypergraph& h, const std::vector<IntSet>& X, AdjustMode mode) {
    std::vector<IntSet> xs;
    for (const auto& x : X) xs.push_back(normalized(x));
    std::sort(xs.begin(), xs.end());

    if (mode == AdjustMode::Increase) {
        // Grow each hyperedge by its first intersecting X-member that is not
        // already contained in it; skip growth that would duplicate.
        std::vector<IntSet> fam = h.edges();
        bool changed = false;
        for (auto& e : fam) {
            for (const auto& x : xs) {
                if (subset_of(x, e)) continue;
                IntSet grown = set_union(e, x);
                if (std::count(fam.begin(), fam.end(), grown) > 0) continue;
                e = grown;
                changed = true;
                break;
            }
        }
        if (!changed) throw PreconditionError("set-increase changed no hyperedge");
        return Hypergraph::from_edges(std::move(fam));
    }

    // Decrease: first applicable X-member per hyperedge, subject to keeping
    // the family a hypergraph on the same ground set.
    std::vector<IntSet> fam = h.edges();
    auto coverage = [&](const std::vector<IntSet>& f) {
        IntSet u;
        for (const auto& e : f) u = set_union(u, e);
        return u;
    };
    bool changed = false;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (const auto& x : xs) {
            IntSet reduced = set_difference(fam[i], x);
            if (reduced == fam[i] || reduced.empty()) continue;
            auto trial = fam;
            trial[i] = reduced;
            if (std::count(trial.begin(), trial.end(), reduced) > 1) continue;
            if (coverage(trial) != h.ground()) continue;
            fam = std::move(trial);
            changed = true;
            break;
        }
    }
    if (!changed) throw PreconditionError("not decreasing: no applicable subtraction");
    return Hypergraph::validate(h.ground(), std::move(fam));
}

Hypergraph coincide_hypergraphs(const Hypergraph& a, const Hypergraph& b) {
    std::vector<IntSet> fam = a.edges();
    for (const auto& e : b.edges()) {
        if (std::find(fam.begin(), fam.end(), e) == fam.end()) fam.push_back(e);
    }
    return Hypergraph::validate(set_union(a.ground(), b.ground()), std::move(fam));
}

Hypergraph adjacent_hypergraph(const Hypergraph& h) {
    std::vector<IntSet> fam;
    for (const auto& e : h.edges()) {
        IntSet comp = set_difference(h.ground(), e);
        if (comp.empty()) {
            throw PreconditionError("hyperedge equals the ground set; complement is empty");
        }
        fam.push_back(std::move(comp));
    }
    return Hypergraph::from_edges(std::move(fam));
}

} // namespace topcode
