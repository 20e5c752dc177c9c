#pragma once

#include <optional>
#include <vector>

#include "topcode/coloring.hpp"

namespace topcode {

// Maximum bipartite matching between `left` positions and arbitrary integer
// values; adjacency[i] lists the values position i may take (sorted).
// Returns assignment[i] = chosen value or -1.
std::vector<long long> max_bipartite_matching(const std::vector<std::vector<long long>>& adjacency);

// System of distinct representatives for a family of sets. On success,
// representatives[i] in family[i], pairwise distinct, lexicographically
// smallest such vector (greedy smallest value per position subject to
// completability). On failure, hall_witness holds indices S of the family
// with |S| > |union of family[S]|.
struct SdrResult {
    bool found = false;
    std::vector<int> representatives;
    std::vector<int> hall_witness;
};
SdrResult sdr(const std::vector<IntSet>& family);

// Variant with a prescribed value universe: representatives must be distinct
// AND their multiset must equal `targets` exactly (used for the
// graceful-intersection representative condition {a_uv} = [1,q]).
SdrResult sdr_onto(const std::vector<IntSet>& family, const IntSet& targets);

} // namespace topcode
