#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "topcode/error.hpp"
#include "topcode/rng.hpp"

namespace topcode {

enum class GrowthLaw { Linear, Exponential };

struct SimConfig {
    int edges_per_step = 2;   // m
    int initial_clique = 3;   // m0 >= m
    long long steps = 1000;   // T
    std::uint64_t seed = 0;
    GrowthLaw law = GrowthLaw::Linear; // which growth fit to report
};

struct HistoryPoint {
    long long t = 0;
    long long v_net = 0;
    long long e_net = 0;
};

// Preferential-attachment intersected network. Each vertex's hyperedge is its
// closed neighborhood label set, so the grown graph is the intersected
// network of its own hyperedge family by construction.
class NetState {
public:
    static NetState init(const SimConfig& cfg);

    void step(const SimConfig& cfg); // one growth step (in place)

    long long time() const { return t_; }
    long long vertex_count() const { return static_cast<long long>(degree_.size()); }
    long long edge_count() const { return edges_; }
    const std::vector<long long>& degrees() const { return degree_; }
    const std::vector<HistoryPoint>& history() const { return history_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    // Closed neighborhood of v (its hyperedge), sorted.
    std::vector<int> hyperedge_of(int v) const;

    // Pi_i(t) = k_i / sum k_j over current vertices (sums to 1).
    std::vector<double> attachment_probabilities() const;

    // Draw m distinct targets weighted by degree, without replacement.
    std::vector<int> sample_targets(int m, Rng& rng) const;

    // Degree-sum identity and the Hnet growth conditions.
    bool invariants_ok() const;

private:
    std::vector<long long> degree_;
    std::vector<std::vector<int>> adj_;
    long long edges_ = 0;
    long long t_ = 0;
    Rng rng_{0};
    std::vector<HistoryPoint> history_;
};

NetState run_simulation(const SimConfig& cfg);

struct GrowthFit {
    double a_v = 0, b_v = 0; // v ~ a_v t + b_v
    double a_e = 0, b_e = 0;
};
GrowthFit fit_growth_linear(const std::vector<HistoryPoint>& history);

struct ExponentialFit {
    double a_v = 0, r_v = 0; // v ~ a_v * r_v^t
    double a_e = 0, r_e = 0;
};
ExponentialFit fit_growth_exponential(const std::vector<HistoryPoint>& history);

enum class DistKind { Pk, Cum, Ecum, Decum };

// k -> value tables. Pk: empirical degree pmf. Cum: tail sums of Pk
// (cum(k_min) = 1, cum(k) - cum(k+1) = pk(k)). Ecum / Decum: hyperedge
// cumulative curves where E(k') counts hyperedges adjacent to one of
// hyperedge-degree k', plain and k'-weighted, both normalized by e_net.
std::map<long long, double> distributions(const NetState& s, DistKind kind);

struct ExponentFit {
    double gamma = 0;
    double stderr_slope = 0;
    int tail_points = 0;
};
// Least-squares slope of the log-log CCDF tail (k >= k_min); gamma = 1 - slope.
// Needs at least 5 tail points.
ExponentFit fit_exponent(const std::map<long long, double>& ccdf, long long k_min = 5);

struct KinematicsReport {
    double v_velocity = 0;   // dv/dt (last step)
    double e_velocity = 0;   // de/dt
    double velocity = 0;     // sqrt(v'^2 + e'^2)
    double speed_ratio = 0;  // e' / v'
    double average_degree = 0;
    double sparsity_ratio = 0; // e / (v ln v)
    bool sparse = false;
};
KinematicsReport kinematics(const NetState& s);

} // namespace topcode
