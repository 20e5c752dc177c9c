#pragma once

#include <set>
#include <vector>

#include "topcode/graph.hpp"

namespace topcode {

// Brute-force realizability oracle: the set of degree sequences of all
// 2^(n(n-1)/2) labeled graphs on n vertices (n <= 7). The serial version is
// the reference; the parallel one splits the mask range across OpenMP
// threads and merges per-thread sets.
std::set<DegreeSequence> realizable_sequences_serial(int n);
std::set<DegreeSequence> realizable_sequences_parallel(int n);

// All non-increasing sequences of length n with entries in [0, cap].
std::vector<DegreeSequence> enumerate_nonincreasing(int n, int cap);

// Batch Erdos-Gallai tests.
std::vector<char> is_graphical_batch_serial(const std::vector<DegreeSequence>& seqs);
std::vector<char> is_graphical_batch_parallel(const std::vector<DegreeSequence>& seqs);

// Batch Hamilton-cycle counts (each graph within the 16-vertex cap).
std::vector<long long> hamilton_count_batch_serial(const std::vector<Graph>& graphs);
std::vector<long long> hamilton_count_batch_parallel(const std::vector<Graph>& graphs);

} // namespace topcode
