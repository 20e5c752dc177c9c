#include "topcode/parallel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topcode {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

DegreeSequence mask_degrees(std::uint64_t mask, const std::vector<Edge>& pairs, int n) {
    DegreeSequence d(n, 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) {
            ++d[pairs[b].first];
            ++d[pairs[b].second];
        }
    }
    std::sort(d.rbegin(), d.rend());
    return d;
}

} // namespace

std::set<DegreeSequence> realizable_sequences_serial(int n) {
    if (n < 0 || n > 7) throw CapExceededError("graph enumeration is capped at 7 vertices");
    auto pairs = all_pairs(n);
    std::set<DegreeSequence> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        out.insert(mask_degrees(mask, pairs, n));
    }
    return out;
}

std::set<DegreeSequence> realizable_sequences_parallel(int n) {
    if (n < 0 || n > 7) throw CapExceededError("graph enumeration is capped at 7 vertices");
    auto pairs = all_pairs(n);
    const long long total = 1LL << pairs.size();
    std::set<DegreeSequence> out;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::set<DegreeSequence> local;
#pragma omp for schedule(static)
        for (long long mask = 0; mask < total; ++mask) {
            local.insert(mask_degrees(static_cast<std::uint64_t>(mask), pairs, n));
        }
#pragma omp critical
        out.merge(local);
    }
#else
    for (long long mask = 0; mask < total; ++mask) {
        out.insert(mask_degrees(static_cast<std::uint64_t>(mask), pairs, n));
    }
#endif
    return out;
}

std::vector<DegreeSequence> enumerate_nonincreasing(int n, int cap) {
    std::vector<DegreeSequence> out;
    DegreeSequence cur(n);
    auto rec = [&](auto&& self, int idx, int bound) -> void {
        if (idx == n) {
            out.push_back(cur);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[idx] = v;
            self(self, idx + 1, v);
        }
    };
    rec(rec, 0, cap);
    return out;
}

std::vector<char> is_graphical_batch_serial(const std::vector<DegreeSequence>& seqs) {
    std::vector<char> out(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) out[i] = is_graphical(seqs[i]) ? 1 : 0;
    return out;
}

std::vector<char> is_graphical_batch_parallel(const std::vector<DegreeSequence>& seqs) {
    std::vector<char> out(seqs.size());
    const long long n = static_cast<long long>(seqs.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) out[i] = is_graphical(seqs[i]) ? 1 : 0;
    return out;
}

std::vector<long long> hamilton_count_batch_serial(const std::vector<Graph>& graphs) {
    std::vector<long long> out(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        out[i] = static_cast<long long>(hamilton_cycles(graphs[i]).size());
    }
    return out;
}

std::vector<long long> hamilton_count_batch_parallel(const std::vector<Graph>& graphs) {
    std::vector<long long> out(graphs.size());
    const long long n = static_cast<long long>(graphs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        out[i] = static_cast<long long>(hamilton_cycles(graphs[i]).size());
    }
    return out;
}

} // namespace topcode
