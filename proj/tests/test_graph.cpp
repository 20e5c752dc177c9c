#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "test_util.hpp"
#include "topcode/graph.hpp"
#include "topcode/parallel.hpp"

using namespace topcode;

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(Graph::complete(3)) == DegreeSequence{2, 2, 2});
    CHECK(degree_sequence(Graph::star(4)) == DegreeSequence{4, 1, 1, 1, 1});
}

TEST_CASE("Erdos-Gallai basics") {
    CHECK(is_graphical({2, 2, 2}));
    CHECK(is_graphical({3, 1, 1, 1}));      // the star K_{1,3} realizes it
    CHECK_FALSE(is_graphical({3, 3, 1, 1}));
    CHECK_FALSE(is_graphical({1}));          // odd sum
    CHECK(is_graphical({}));
    CHECK(is_graphical({0, 0}));
    CHECK_THROWS_AS(is_graphical({1, 2}), PreconditionError);
}

TEST_CASE("Erdos-Gallai agrees with graph enumeration up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        auto realizable = realizable_sequences_serial(n);
        for (const auto& d : enumerate_nonincreasing(n, n + 1)) {
            CHECK(is_graphical(d) == (realizable.count(d) > 0));
        }
    }
}

TEST_CASE("vertex split and coincide") {
    // C4 = 0-1-2-3-0; splitting 0 against {1} / {3} opens the cycle to P5.
    Graph c4 = Graph::cycle(4);
    auto split = split_vertex(c4, 0, {1}, {3});
    CHECK(split.graph.order() == 5);
    CHECK(split.graph.size() == 4);
    CHECK(split.graph.is_tree());
    DegreeSequence d = degree_sequence(split.graph);
    CHECK(d == DegreeSequence{2, 2, 2, 1, 1}); // a path

    Graph k4 = Graph::complete(4);
    auto split2 = split_vertex(k4, 0, {1}, {2, 3});
    CHECK(split2.graph.order() == 5);
    CHECK(split2.graph.size() == 6);

    CHECK_THROWS_AS(split_vertex(Graph::star(3), 1, {0}, {}), PreconditionError);
    CHECK_THROWS_AS(split_vertex(k4, 0, {1, 2}, {2, 3}), PreconditionError);
}

TEST_CASE("coincide preconditions") {
    // two disjoint edges a-b, c-d: coinciding b,c gives a path.
    Graph g(4, {{0, 1}, {2, 3}});
    auto merged = coincide_vertices(g, 1, 2);
    CHECK(merged.graph.order() == 3);
    CHECK(merged.graph.size() == 2);
    CHECK(merged.graph.is_tree());

    Graph shared(3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(coincide_vertices(shared, 1, 2), PreconditionError); // common neighbor 0
    CHECK_THROWS_AS(coincide_vertices(Graph::path(2), 0, 1), PreconditionError); // adjacent
}

TEST_CASE("split then coincide round-trips up to isomorphism") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = test::random_connected_graph(rng, 5 + static_cast<int>(rng.below(6)),
                                               static_cast<int>(rng.below(5)));
        // pick a splittable vertex
        int u = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) >= 2) {
                u = v;
                break;
            }
        }
        if (u == -1) continue;
        auto nb = g.neighbors(u);
        std::vector<int> part1{nb[0]};
        std::vector<int> part2(nb.begin() + 1, nb.end());
        auto split = split_vertex(g, u, part1, part2);
        auto merged = coincide_vertices(split.graph, split.u_prime, split.u_second);
        CHECK(find_isomorphism(merged.graph, g).has_value());
    }
}

TEST_CASE("edge split basics") {
    // C3 with the default train-hook split of an edge becomes a 4-edge path.
    Graph c3 = Graph::cycle(3);
    auto split = split_edge(c3, 0, 1);
    CHECK(split.graph.order() == 5);
    CHECK(split.graph.size() == 4);
    CHECK(split.graph.is_tree());

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = test::random_connected_graph(rng, 6, 3);
        Edge e = g.edges()[rng.below(g.edges().size())];
        auto s = split_edge(g, e.first, e.second);
        CHECK(s.graph.size() == g.size() + 1);
        CHECK(s.graph.order() == g.order() + 2);
        auto merged = coincide_edges(s.graph, s.first, s.second);
        CHECK(find_isomorphism(merged.graph, g).has_value());
    }
}

TEST_CASE("coincide edges error paths") {
    Graph g(4, {{0, 1}, {2, 3}, {1, 2}});
    // e1 and e2 share vertex 1/2 neighborhood structure through edge 1-2
    CHECK_THROWS_AS(coincide_edges(g, {0, 1}, {1, 2}), PreconditionError);
}

TEST_CASE("homomorphism checks") {
    Graph g = Graph::cycle(6);
    std::vector<int> identity{0, 1, 2, 3, 4, 5};
    auto rep = check_homomorphism(g, g, identity);
    CHECK(rep.homomorphism);
    CHECK(rep.faithful);
    CHECK(rep.full);

    Graph c3 = Graph::cycle(3);
    std::vector<int> mod3{0, 1, 2, 0, 1, 2};
    CHECK(check_homomorphism(g, c3, mod3).homomorphism);

    // quotient map produced by coinciding two non-adjacent vertices
    Graph p5 = Graph::path(5);
    auto merged = coincide_vertices(p5, 0, 4);
    CHECK(check_homomorphism(p5, merged.graph, merged.remap).homomorphism);
}

TEST_CASE("isomorphism search") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = test::random_connected_graph(rng, 8, 4);
        // relabel by a random permutation
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<Edge> es;
        for (auto [u, v] : g.edges()) {
            es.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        }
        Graph h(8, es);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        auto fwd = check_homomorphism(g, h, *iso);
        CHECK(fwd.homomorphism);
        CHECK(fwd.faithful);
        CHECK(fwd.full);
    }
    CHECK_FALSE(find_isomorphism(Graph::path(4), Graph::star(3)).has_value());
}

TEST_CASE("hamilton cycles") {
    CHECK(hamilton_cycles(Graph::complete(4)).size() == 3);
    CHECK(hamilton_cycles(Graph::path(4)).empty());
    CHECK(hamilton_cycles(Graph::cycle(6)).size() == 1);
    long long expect = 1;
    for (int n = 3; n <= 7; ++n) {
        expect = 1;
        for (int i = 2; i < n; ++i) expect *= i;
        expect /= 2;
        CHECK(static_cast<long long>(hamilton_cycles(Graph::complete(n)).size()) == expect);
    }
}

TEST_CASE("edge hamiltonicity") {
    CHECK(is_edge_hamiltonian(Graph::complete(4)).edge_hamiltonian);
    auto tree = is_edge_hamiltonian(Graph::path(4));
    CHECK_FALSE(tree.edge_hamiltonian);
    CHECK(tree.uncovered.has_value());

    // C5 plus a chord, checked against direct cycle enumeration.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
    auto cycles = hamilton_cycles(g);
    std::set<Edge> covered;
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            covered.insert({std::min(a, b), std::max(a, b)});
        }
    }
    bool all = true;
    for (auto e : g.edges()) all = all && covered.count(e);
    CHECK(is_edge_hamiltonian(g).edge_hamiltonian == all);
}

namespace {

// Subset-enumeration oracle for the minimum vertex cut.
int brute_connectivity(const Graph& g) {
    const int p = g.order();
    if (g.size() == p * (p - 1) / 2) return p - 1;
    for (int k = 0; k < p; ++k) {
        std::vector<int> subset(k);
        std::function<bool(int, int)> rec = [&](int idx, int start) -> bool {
            if (idx == k) {
                std::vector<char> removed(p, 0);
                for (int v : subset) removed[v] = 1;
                int seed = -1;
                for (int v = 0; v < p; ++v) {
                    if (!removed[v]) {
                        seed = v;
                        break;
                    }
                }
                if (seed == -1) return false;
                std::vector<char> seen(p, 0);
                std::vector<int> stack{seed};
                seen[seed] = 1;
                int cnt = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int w : g.neighbors(v)) {
                        if (!removed[w] && !seen[w]) {
                            seen[w] = 1;
                            ++cnt;
                            stack.push_back(w);
                        }
                    }
                }
                return cnt < p - k;
            }
            for (int v = start; v < p; ++v) {
                subset[idx] = v;
                if (rec(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return p - 1;
}

} // namespace

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(Graph::complete(4)) == 3);
    CHECK(vertex_connectivity(Graph::cycle(5)) == 2);
    CHECK_THROWS_AS(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);

    Rng rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = test::random_connected_graph(rng, 5 + static_cast<int>(rng.below(5)),
                                               static_cast<int>(rng.below(8)));
        auto rep = vertex_connectivity_cut(g);
        CHECK(rep.connectivity == brute_connectivity(g));
        if (!rep.cut.empty()) {
            // witness check: removal disconnects
            std::vector<Edge> es;
            std::vector<char> removed(g.order(), 0);
            for (int v : rep.cut) removed[v] = 1;
            std::vector<int> keep;
            std::vector<int> remap(g.order(), -1);
            for (int v = 0; v < g.order(); ++v) {
                if (!removed[v]) {
                    remap[v] = static_cast<int>(keep.size());
                    keep.push_back(v);
                }
            }
            for (auto [u, v] : g.edges()) {
                if (!removed[u] && !removed[v]) es.push_back({remap[u], remap[v]});
            }
            Graph rest(static_cast<int>(keep.size()), es);
            CHECK_FALSE(rest.connected());
        }
    }
}

TEST_CASE("invariants: split preserves edges, coincide inverts") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = test::random_connected_graph(rng, 6 + static_cast<int>(rng.below(4)),
                                               static_cast<int>(rng.below(4)));
        int u = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) >= 2) u = v;
        }
        auto nb = g.neighbors(u);
        std::vector<int> p1{nb.front()}, p2(nb.begin() + 1, nb.end());
        CHECK(split_vertex(g, u, p1, p2).graph.size() == g.size());
    }
}

TEST_CASE("search caps are distinct errors") {
    Graph big = Graph::complete(7); // 21 edges
    CHECK_THROWS_AS(hamilton_cycles(Graph::complete(17)), CapExceededError);
    CHECK(hamilton_cycles(big).size() == 360);
    std::vector<Edge> es;
    for (int v = 1; v < 33; ++v) es.push_back({v - 1, v});
    Graph chain(33, es);
    CHECK_THROWS_AS(find_isomorphism(chain, chain), CapExceededError);
}

TEST_CASE("isomorphism witnesses are faithful and full both ways") {
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = test::random_connected_graph(rng, 7, 3);
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<Edge> es;
        for (auto [u, v] : g.edges()) {
            es.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        }
        Graph h(7, es);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        std::vector<int> inverse(7);
        for (int v = 0; v < 7; ++v) inverse[(*iso)[v]] = v;
        for (const auto& [a, b, f] :
             {std::tuple{&g, &h, &*iso}, std::tuple{&h, &g, &inverse}}) {
            auto rep = check_homomorphism(*a, *b, *f);
            CHECK(rep.homomorphism);
            CHECK(rep.faithful);
            CHECK(rep.full);
        }
    }
}
