#include "topcode/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace topcode {

namespace {

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

} // namespace

Graph::Graph(int order, std::vector<Edge> edges, std::vector<std::string> names)
    : order_(order), names_(std::move(names)) {
    if (order < 0 || order > kMaxOrder) {
        throw PreconditionError("graph order must be in [0, 64], got " + std::to_string(order));
    }
    if (!names_.empty() && static_cast<int>(names_.size()) != order) {
        throw PreconditionError("vertex name list must match the order");
    }
    adj_.assign(order, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw PreconditionError("loops are not allowed (vertex " + std::to_string(u) + ")");
        }
        auto e = ordered(u, v);
        if (adj_[e.first] & bit(e.second)) {
            throw PreconditionError("multi-edge " + std::to_string(e.first) + "-" +
                                    std::to_string(e.second));
        }
        adj_[e.first] |= bit(e.second);
        adj_[e.second] |= bit(e.first);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_) {
        throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
    }
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({v - 1, v});
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({v - 1, v});
    es.push_back({0, n - 1});
    return Graph(n, std::move(es));
}

Graph Graph::star(int leaves) {
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.push_back({0, v});
    return Graph(leaves + 1, std::move(es));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (adj_[u] & bit(v));
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    std::uint64_t m = adj_[v];
    while (m) {
        int w = std::countr_zero(m);
        out.push_back(w);
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

bool Graph::connected() const {
    if (order_ <= 1) return true;
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t fresh = adj_[v] & ~seen;
        seen |= fresh;
        while (fresh) {
            stack.push_back(std::countr_zero(fresh));
            fresh &= fresh - 1;
        }
    }
    return std::popcount(seen) == order_;
}

bool Graph::is_tree() const { return connected() && size() == order_ - 1; }

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::bipartition() const {
    std::vector<int> color(order_, -1);
    std::vector<int> stack;
    for (int s = 0; s < order_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < order_; ++v) {
        (color[v] == 0 ? classes.first : classes.second).push_back(v);
    }
    return classes;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

bool is_graphical(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
        if (d[i] < 0) return false;
        if (i + 1 < n && d[i] < d[i + 1]) {
            throw PreconditionError("degree sequence must be sorted non-increasing");
        }
    }
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    long long head = 0;
    for (int k = 1; k <= n; ++k) {
        head += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int j = k; j < n; ++j) rhs += std::min(k, d[j]);
        if (head > rhs) return false;
    }
    return true;
}

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

VertexSplit split_vertex(const Graph& g, int u, const std::vector<int>& part1,
                         const std::vector<int>& part2) {
    if (g.degree(u) < 2) {
        throw PreconditionError("split_vertex needs deg(u) >= 2");
    }
    if (part1.empty() || part2.empty()) {
        throw PreconditionError("both split parts must be non-empty");
    }
    std::vector<int> all = sorted_copy(part1);
    std::vector<int> b = sorted_copy(part2);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end() ||
        all != g.neighbors(u)) {
        throw PreconditionError("split parts must partition N(u)");
    }

    const int p = g.order();
    std::vector<Edge> es;
    for (auto [a, c] : g.edges()) {
        if (a != u && c != u) es.push_back({a, c});
    }
    for (int w : part1) es.push_back({std::min(u, w), std::max(u, w)});
    for (int w : part2) es.push_back({w, p});

    VertexSplit out;
    out.graph = Graph(p + 1, std::move(es));
    out.remap.resize(p);
    std::iota(out.remap.begin(), out.remap.end(), 0);
    out.u_prime = u;
    out.u_second = p;
    return out;
}

VertexCoincide coincide_vertices(const Graph& g, int u1, int u2) {
    if (u1 == u2) throw PreconditionError("cannot coincide a vertex with itself");
    if (g.has_edge(u1, u2)) {
        throw PreconditionError("coinciding adjacent vertices would create a loop");
    }
    if (g.adjacency_mask(u1) & g.adjacency_mask(u2)) {
        throw PreconditionError("coinciding vertices with a common neighbor would create a multi-edge");
    }
    const int keep = std::min(u1, u2);
    const int drop = std::max(u1, u2);
    const int p = g.order();

    VertexCoincide out;
    out.remap.resize(p);
    for (int v = 0; v < p; ++v) {
        int t = (v == drop) ? keep : v;
        out.remap[v] = t - (t > drop ? 1 : 0);
    }
    std::vector<Edge> es;
    for (auto [a, b] : g.edges()) {
        int x = out.remap[a], y = out.remap[b];
        es.push_back({std::min(x, y), std::max(x, y)});
    }
    out.graph = Graph(p - 1, std::move(es));
    out.merged = out.remap[u1];
    return out;
}

EdgeSplit split_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw PreconditionError("split_edge: edge absent");
    std::vector<int> nu, nv;
    for (int w : g.neighbors(u))
        if (w != v) nu.push_back(w);
    for (int w : g.neighbors(v))
        if (w != u) nv.push_back(w);
    // Train-hook default: u' keeps N(u)\{v}, v'' keeps N(v)\{u}.
    return split_edge(g, u, v, nu, {}, {}, nv);
}

EdgeSplit split_edge(const Graph& g, int u, int v, const std::vector<int>& part_u1,
                     const std::vector<int>& part_u2, const std::vector<int>& part_v1,
                     const std::vector<int>& part_v2) {
    if (!g.has_edge(u, v)) throw PreconditionError("split_edge: edge absent");
    auto check_partition = [&](int x, int other, const std::vector<int>& a,
                               const std::vector<int>& b) {
        std::vector<int> all = sorted_copy(a);
        std::vector<int> bs = sorted_copy(b);
        all.insert(all.end(), bs.begin(), bs.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect;
        for (int w : g.neighbors(x))
            if (w != other) expect.push_back(w);
        if (std::adjacent_find(all.begin(), all.end()) != all.end() || all != expect) {
            throw PreconditionError("split_edge parts must partition N(x)\\{other end}");
        }
    };
    check_partition(u, v, part_u1, part_u2);
    check_partition(v, u, part_v1, part_v2);

    const int p = g.order();
    const int u2 = p, v2 = p + 1; // u'' and v''; u' = u, v' = v
    std::vector<Edge> es;
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (a == u || b == u || a == v || b == v) continue;
        es.push_back({a, b});
    }
    for (int w : part_u1) es.push_back({std::min(u, w), std::max(u, w)});
    for (int w : part_u2) es.push_back({w, u2});
    for (int w : part_v1) es.push_back({std::min(v, w), std::max(v, w)});
    for (int w : part_v2) es.push_back({w, v2});
    es.push_back({std::min(u, v), std::max(u, v)}); // u'v'
    es.push_back({u2, v2});                         // u''v''

    EdgeSplit out;
    out.graph = Graph(p + 2, std::move(es));
    out.remap.resize(p);
    std::iota(out.remap.begin(), out.remap.end(), 0);
    out.first = {std::min(u, v), std::max(u, v)};
    out.second = {u2, v2};
    return out;
}

EdgeCoincide coincide_edges(const Graph& g, Edge e1, Edge e2) {
    auto [u1, v1] = e1;
    auto [u2, v2] = e2;
    if (!g.has_edge(u1, v1) || !g.has_edge(u2, v2)) {
        throw PreconditionError("coincide_edges: edge absent");
    }
    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) {
        throw PreconditionError("coincide_edges: edges must be vertex-disjoint");
    }
    // N(u') & N(u'') = {} and N(v') & N(v'') = {}; this also rules out the
    // cross edges u1v2 / u2v1 (they would make v1 resp. v2 a common
    // neighbor). Adjacency of the merged pairs would create a loop.
    if ((g.adjacency_mask(u1) & g.adjacency_mask(u2)) ||
        (g.adjacency_mask(v1) & g.adjacency_mask(v2))) {
        throw PreconditionError("coincide_edges: neighbor clash");
    }
    if (g.has_edge(u1, u2) || g.has_edge(v1, v2)) {
        throw PreconditionError("coincide_edges: merged ends are adjacent");
    }

    // Rename u2 -> u1 and v2 -> v1, then compact ids. The two coincided
    // edges collapse into the single edge u1v1; no other edge doubles up.
    const int p = g.order();
    EdgeCoincide out;
    out.remap.resize(p);
    for (int v = 0; v < p; ++v) {
        int t = v;
        if (v == u2) t = u1;
        if (v == v2) t = v1;
        int shift = 0;
        if (t > std::min(u2, v2)) ++shift;
        if (t > std::max(u2, v2)) ++shift;
        // dropped ids u2 and v2 are mapped above, never shifted themselves
        out.remap[v] = (v == u2 || v == v2) ? -1 : t - shift;
    }
    out.remap[u2] = out.remap[u1];
    out.remap[v2] = out.remap[v1];
    std::vector<Edge> es;
    for (auto [a, b] : g.edges()) {
        int x = out.remap[a], y = out.remap[b];
        Edge e{std::min(x, y), std::max(x, y)};
        if ((a == u2 && b == v2) || (a == v2 && b == u2)) continue; // merged copy
        es.push_back(e);
    }
    out.graph = Graph(p - 2, std::move(es));
    out.merged = {std::min(out.remap[u1], out.remap[v1]),
                  std::max(out.remap[u1], out.remap[v1])};
    return out;
}

HomReport check_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.order()) {
        throw PreconditionError("vertex map must be total on V(G)");
    }
    for (int v : f) {
        if (v < 0 || v >= h.order()) throw PreconditionError("vertex map image out of range");
    }
    HomReport rep;
    rep.homomorphism = true;
    for (auto [u, v] : g.edges()) {
        if (f[u] == f[v] || !h.has_edge(f[u], f[v])) {
            rep.homomorphism = false;
            return rep;
        }
    }
    // faithful: the image is an induced subgraph of h.
    std::vector<char> in_image(h.order(), 0);
    for (int v : f) in_image[v] = 1;
    std::vector<std::vector<char>> image_edge(h.order(), std::vector<char>(h.order(), 0));
    for (auto [u, v] : g.edges()) image_edge[f[u]][f[v]] = image_edge[f[v]][f[u]] = 1;
    rep.faithful = true;
    for (int x = 0; x < h.order() && rep.faithful; ++x) {
        for (int y = x + 1; y < h.order(); ++y) {
            if (in_image[x] && in_image[y] && h.has_edge(x, y) && !image_edge[x][y]) {
                rep.faithful = false;
                break;
            }
        }
    }
    rep.full = true;
    for (int u = 0; u < g.order() && rep.full; ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            bool eg = g.has_edge(u, v);
            bool eh = f[u] != f[v] && h.has_edge(f[u], f[v]);
            if (eg != eh) {
                rep.full = false;
                break;
            }
        }
    }
    return rep;
}

namespace {

// Iterated neighbor-degree refinement; returns per-vertex class signatures.
std::vector<std::vector<int>> refine_classes(const Graph& g) {
    std::vector<int> cls(g.order());
    for (int v = 0; v < g.order(); ++v) cls[v] = g.degree(v);
    for (int round = 0; round < g.order(); ++round) {
        std::vector<std::vector<int>> sig(g.order());
        for (int v = 0; v < g.order(); ++v) {
            sig[v].push_back(cls[v]);
            std::vector<int> ns;
            for (int w : g.neighbors(v)) ns.push_back(cls[w]);
            std::sort(ns.begin(), ns.end());
            sig[v].insert(sig[v].end(), ns.begin(), ns.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(g.order());
        for (int v = 0; v < g.order(); ++v) {
            next[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        }
        if (next == cls) break;
        cls = next;
    }
    std::vector<std::vector<int>> sig(g.order());
    for (int v = 0; v < g.order(); ++v) {
        sig[v].push_back(cls[v]);
        std::vector<int> ns;
        for (int w : g.neighbors(v)) ns.push_back(cls[w]);
        std::sort(ns.begin(), ns.end());
        sig[v].insert(sig[v].end(), ns.begin(), ns.end());
    }
    return sig;
}

bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<std::vector<int>>& sig_g,
                        const std::vector<std::vector<int>>& sig_h, std::vector<int>& f,
                        std::vector<char>& used, int v) {
    const int p = g.order();
    if (v == p) return true;
    for (int w = 0; w < p; ++w) {
        if (used[w] || sig_g[v] != sig_h[w]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v) != h.has_edge(f[u], w)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        f[v] = w;
        used[w] = 1;
        if (extend_isomorphism(g, h, sig_g, sig_h, f, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() > 32 || h.order() > 32) {
        throw CapExceededError("find_isomorphism is capped at 32 vertices");
    }
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
    auto sig_g = refine_classes(g);
    auto sig_h = refine_classes(h);
    {
        auto a = sig_g;
        auto b = sig_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> f(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    if (extend_isomorphism(g, h, sig_g, sig_h, f, used, 0)) return f;
    return std::nullopt;
}

namespace {

void hamilton_dfs(const Graph& g, std::vector<int>& path, std::uint64_t visited,
                  std::vector<std::vector<int>>& out) {
    const int p = g.order();
    int v = path.back();
    if (static_cast<int>(path.size()) == p) {
        if (g.has_edge(v, 0) && path[1] < path.back()) out.push_back(path);
        return;
    }
    for (int w : g.neighbors(v)) {
        if (visited & (std::uint64_t{1} << w)) continue;
        path.push_back(w);
        hamilton_dfs(g, path, visited | (std::uint64_t{1} << w), out);
        path.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> hamilton_cycles(const Graph& g) {
    if (g.order() > 16) throw CapExceededError("hamilton_cycles is capped at 16 vertices");
    if (g.order() < 3) return {};
    // Fix start 0; kill reflections by requiring path[1] < path[p-1].
    std::vector<std::vector<int>> out;
    std::vector<int> path{0};
    hamilton_dfs(g, path, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

EdgeHamiltonianReport is_edge_hamiltonian(const Graph& g) {
    auto cycles = hamilton_cycles(g);
    std::vector<std::vector<char>> covered(g.order(), std::vector<char>(g.order(), 0));
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            covered[a][b] = covered[b][a] = 1;
        }
    }
    EdgeHamiltonianReport rep;
    rep.edge_hamiltonian = true;
    for (auto [u, v] : g.edges()) {
        if (!covered[u][v]) {
            rep.edge_hamiltonian = false;
            rep.uncovered = Edge{u, v};
            return rep;
        }
    }
    return rep;
}

namespace {

// Max number of internally vertex-disjoint s-t paths via unit-capacity
// vertex-split max flow (Menger).
int disjoint_paths(const Graph& g, int s, int t) {
    const int p = g.order();
    const int n = 2 * p; // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (int v = 0; v < p; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? p : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    int flow = 0;
    while (true) {
        std::vector<int> prev(n, -1);
        std::vector<int> queue{2 * s};
        prev[2 * s] = 2 * s;
        for (std::size_t qi = 0; qi < queue.size() && prev[2 * t + 1] == -1; ++qi) {
            int x = queue[qi];
            for (int y = 0; y < n; ++y) {
                if (cap[x][y] > 0 && prev[y] == -1) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (prev[2 * t + 1] == -1) break;
        for (int y = 2 * t + 1; y != 2 * s; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

std::vector<int> min_cut_between(const Graph& g, int s, int t, int k) {
    // Recover a vertex cut of size k separating s and t by brute force over
    // subsets of the refined candidate set; k is small at desk scale.
    std::vector<int> candidates;
    for (int v = 0; v < g.order(); ++v) {
        if (v != s && v != t) candidates.push_back(v);
    }
    std::vector<int> pick;
    std::vector<int> best;
    auto disconnected_without = [&](const std::vector<int>& cut) {
        std::uint64_t removed = 0;
        for (int v : cut) removed |= std::uint64_t{1} << v;
        std::uint64_t seen = std::uint64_t{1} << s;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t fresh = g.adjacency_mask(v) & ~seen & ~removed;
            seen |= fresh;
            while (fresh) {
                stack.push_back(std::countr_zero(fresh));
                fresh &= fresh - 1;
            }
        }
        return !(seen & (std::uint64_t{1} << t));
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) {
        if (static_cast<int>(pick.size()) == k) {
            if (disconnected_without(pick)) {
                best = pick;
                return true;
            }
            return false;
        }
        if (idx >= candidates.size()) return false;
        pick.push_back(candidates[idx]);
        if (rec(idx + 1)) return true;
        pick.pop_back();
        return rec(idx + 1);
    };
    rec(0);
    return best;
}

} // namespace

ConnectivityReport vertex_connectivity_cut(const Graph& g) {
    if (!g.connected()) throw PreconditionError("vertex_connectivity requires a connected graph");
    const int p = g.order();
    ConnectivityReport rep;
    if (g.size() == p * (p - 1) / 2) {
        rep.connectivity = p - 1;
        return rep;
    }
    int best = p - 1;
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < p; ++s) {
        for (int t = s + 1; t < p; ++t) {
            if (g.has_edge(s, t)) continue;
            int k = disjoint_paths(g, s, t);
            if (k < best) {
                best = k;
                best_pair = {s, t};
            }
        }
    }
    rep.connectivity = best;
    if (best_pair.first >= 0) {
        rep.cut = min_cut_between(g, best_pair.first, best_pair.second, best);
    }
    return rep;
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity_cut(g).connectivity; }

} // namespace topcode
