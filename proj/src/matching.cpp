#include "topcode/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace topcode {

namespace {

struct Kuhn {
    // right-side values are compacted to indices
    std::vector<std::vector<int>> adj; // left -> right indices
    std::vector<int> match_right;      // right -> left or -1
    std::vector<int> match_left;       // left -> right or -1
    std::vector<char> visited;

    bool try_augment(int u) {
        for (int v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] == -1 || try_augment(match_right[v])) {
                match_right[v] = u;
                match_left[u] = v;
                return true;
            }
        }
        return false;
    }

    int run() {
        match_left.assign(adj.size(), -1);
        int total = 0;
        for (std::size_t u = 0; u < adj.size(); ++u) {
            visited.assign(match_right.size(), 0);
            if (try_augment(static_cast<int>(u))) ++total;
        }
        return total;
    }
};

} // namespace

std::vector<long long> max_bipartite_matching(
    const std::vector<std::vector<long long>>& adjacency) {
    std::vector<long long> values;
    for (const auto& a : adjacency) values.insert(values.end(), a.begin(), a.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::map<long long, int> idx;
    for (std::size_t i = 0; i < values.size(); ++i) idx[values[i]] = static_cast<int>(i);

    Kuhn k;
    k.adj.resize(adjacency.size());
    k.match_right.assign(values.size(), -1);
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        for (long long v : adjacency[u]) k.adj[u].push_back(idx[v]);
    }
    k.run();
    std::vector<long long> out(adjacency.size(), -1);
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        if (k.match_left[u] != -1) out[u] = values[k.match_left[u]];
    }
    return out;
}

namespace {

SdrResult solve_sdr(const std::vector<IntSet>& family, const std::optional<IntSet>& targets) {
    // Build the candidate lists, restricted to the target universe if given.
    std::vector<std::vector<long long>> adjacency(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (int v : family[i]) {
            if (!targets || std::binary_search(targets->begin(), targets->end(), v)) {
                adjacency[i].push_back(v);
            }
        }
    }

    SdrResult out;
    auto matching_size = [&](const std::vector<std::vector<long long>>& adj) {
        std::vector<long long> m = max_bipartite_matching(adj);
        return static_cast<std::size_t>(std::count_if(m.begin(), m.end(),
                                                      [](long long v) { return v != -1; }));
    };

    const std::size_t need = family.size();
    bool feasible = matching_size(adjacency) == need &&
                    (!targets || targets->size() == need);
    if (targets && targets->size() != need) feasible = false;

    if (!feasible) {
        // Hall witness: indices reachable by alternating paths from some
        // unmatched left vertex; their neighborhood is strictly smaller.
        std::vector<long long> m = max_bipartite_matching(adjacency);
        std::map<long long, int> owner; // value -> left index
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != -1) owner[m[i]] = static_cast<int>(i);
        }
        std::set<int> frontier;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == -1) frontier.insert(static_cast<int>(i));
        }
        if (frontier.empty() && targets) {
            // All positions matched but the target universe is bigger/smaller;
            // report the whole index set as the witness of impossibility.
            for (std::size_t i = 0; i < family.size(); ++i) {
                out.hall_witness.push_back(static_cast<int>(i));
            }
            return out;
        }
        std::set<int> reach = frontier;
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<long long> nb;
            for (int i : reach)
                for (long long v : adjacency[i]) nb.insert(v);
            for (long long v : nb) {
                auto it = owner.find(v);
                if (it != owner.end() && !reach.count(it->second)) {
                    reach.insert(it->second);
                    grew = true;
                }
            }
        }
        out.hall_witness.assign(reach.begin(), reach.end());
        return out;
    }

    // Lexicographically smallest representative vector: fix positions in
    // order, choosing the smallest value that keeps the rest completable.
    std::vector<long long> chosen(need, -1);
    std::set<long long> used;
    for (std::size_t i = 0; i < need; ++i) {
        bool done = false;
        for (long long v : adjacency[i]) {
            if (used.count(v)) continue;
            // Tentatively pin i -> v and test completability of the rest.
            std::vector<std::vector<long long>> rest;
            for (std::size_t j = i + 1; j < need; ++j) {
                std::vector<long long> cand;
                for (long long w : adjacency[j]) {
                    if (w != v && !used.count(w)) cand.push_back(w);
                }
                rest.push_back(std::move(cand));
            }
            if (matching_size(rest) == need - i - 1) {
                chosen[i] = v;
                used.insert(v);
                done = true;
                break;
            }
        }
        if (!done) return out; // unreachable given feasibility
    }
    out.found = true;
    out.representatives.assign(chosen.begin(), chosen.end());
    return out;
}

} // namespace

SdrResult sdr(const std::vector<IntSet>& family) { return solve_sdr(family, std::nullopt); }

SdrResult sdr_onto(const std::vector<IntSet>& family, const IntSet& targets) {
    return solve_sdr(family, targets);
}

} // namespace topcode
