#include "topcode/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace topcode {

NetState NetState::init(const SimConfig& cfg) {
    if (cfg.edges_per_step < 1 || cfg.initial_clique < cfg.edges_per_step || cfg.steps < 1) {
        throw PreconditionError("need m >= 1, m0 >= m and T >= 1");
    }
    if (cfg.initial_clique < 2) {
        // a single seed vertex has degree 0: no hyperedge partner and no
        // attachment weight
        throw PreconditionError("the initial clique needs at least 2 vertices");
    }
    NetState s;
    s.rng_ = Rng(cfg.seed);
    const int m0 = cfg.initial_clique;
    s.degree_.assign(m0, m0 - 1);
    s.adj_.assign(m0, {});
    for (int u = 0; u < m0; ++u) {
        for (int v = u + 1; v < m0; ++v) {
            s.adj_[u].push_back(v);
            s.adj_[v].push_back(u);
        }
    }
    s.edges_ = static_cast<long long>(m0) * (m0 - 1) / 2;
    s.t_ = 0;
    s.history_.push_back({0, s.vertex_count(), s.edges_});
    return s;
}

std::vector<int> NetState::hyperedge_of(int v) const {
    std::vector<int> e = adj_[v];
    e.push_back(v);
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<double> NetState::attachment_probabilities() const {
    double total = 2.0 * static_cast<double>(edges_);
    std::vector<double> pi(degree_.size());
    for (std::size_t i = 0; i < degree_.size(); ++i) {
        pi[i] = static_cast<double>(degree_[i]) / total;
    }
    return pi;
}

std::vector<int> NetState::sample_targets(int m, Rng& rng) const {
    const int n = static_cast<int>(degree_.size());
    if (m > n) throw PreconditionError("cannot attach to more targets than vertices");
    std::vector<long long> weight(degree_.begin(), degree_.end());
    long long total = std::accumulate(weight.begin(), weight.end(), 0LL);
    std::vector<int> targets;
    for (int pick = 0; pick < m; ++pick) {
        long long r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total)));
        int chosen = -1;
        for (int v = 0; v < n; ++v) {
            if (weight[v] == 0) continue;
            if (r < weight[v]) {
                chosen = v;
                break;
            }
            r -= weight[v];
        }
        targets.push_back(chosen);
        total -= weight[chosen];
        weight[chosen] = 0; // without replacement
    }
    return targets;
}

void NetState::step(const SimConfig& cfg) {
    auto targets = sample_targets(cfg.edges_per_step, rng_);
    const int v = static_cast<int>(degree_.size());
    degree_.push_back(0);
    adj_.emplace_back();
    for (int w : targets) {
        adj_[v].push_back(w);
        adj_[w].push_back(v);
        ++degree_[v];
        ++degree_[w];
        ++edges_;
    }
    ++t_;
    history_.push_back({t_, vertex_count(), edges_});
}

bool NetState::invariants_ok() const {
    long long sum = std::accumulate(degree_.begin(), degree_.end(), 0LL);
    if (sum != 2 * edges_) return false;
    for (std::size_t i = 1; i < history_.size(); ++i) {
        if (history_[i].v_net <= history_[i - 1].v_net) return false;
        if (history_[i].e_net <= history_[i - 1].e_net) return false;
    }
    // Hnet-1: every hyperedge intersects another. Closed neighborhoods of a
    // graph with min degree >= 1 always do.
    for (long long d : degree_) {
        if (d == 0) return false;
    }
    return true;
}

NetState run_simulation(const SimConfig& cfg) {
    NetState s = NetState::init(cfg);
    for (long long i = 0; i < cfg.steps; ++i) s.step(cfg);
    return s;
}

namespace {

std::pair<double, double> least_squares(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

} // namespace

GrowthFit fit_growth_linear(const std::vector<HistoryPoint>& history) {
    if (history.size() < 2) throw PreconditionError("growth fit needs >= 2 history points");
    std::vector<double> t, v, e;
    for (const auto& h : history) {
        t.push_back(static_cast<double>(h.t));
        v.push_back(static_cast<double>(h.v_net));
        e.push_back(static_cast<double>(h.e_net));
    }
    GrowthFit fit;
    std::tie(fit.a_v, fit.b_v) = least_squares(t, v);
    std::tie(fit.a_e, fit.b_e) = least_squares(t, e);
    return fit;
}

ExponentialFit fit_growth_exponential(const std::vector<HistoryPoint>& history) {
    if (history.size() < 2) throw PreconditionError("growth fit needs >= 2 history points");
    std::vector<double> t, lv, le;
    for (const auto& h : history) {
        t.push_back(static_cast<double>(h.t));
        lv.push_back(std::log(static_cast<double>(h.v_net)));
        le.push_back(std::log(static_cast<double>(h.e_net)));
    }
    ExponentialFit fit;
    auto [sv, iv] = least_squares(t, lv);
    auto [se, ie] = least_squares(t, le);
    fit.r_v = std::exp(sv);
    fit.a_v = std::exp(iv);
    fit.r_e = std::exp(se);
    fit.a_e = std::exp(ie);
    return fit;
}

std::map<long long, double> distributions(const NetState& s, DistKind kind) {
    const auto& deg = s.degrees();
    const double v_net = static_cast<double>(s.vertex_count());
    const double e_net = static_cast<double>(s.edge_count());
    std::map<long long, long long> count; // k -> |V(k)|
    for (long long d : deg) ++count[d];

    switch (kind) {
        case DistKind::Pk: {
            std::map<long long, double> out;
            for (auto [k, c] : count) out[k] = static_cast<double>(c) / v_net;
            return out;
        }
        case DistKind::Cum: {
            std::map<long long, double> out;
            double tail = 0;
            for (auto it = count.rbegin(); it != count.rend(); ++it) {
                tail += static_cast<double>(it->second) / v_net;
                out[it->first] = tail;
            }
            return out;
        }
        case DistKind::Ecum:
        case DistKind::Decum: {
            // E(k') = number of hyperedges (vertices) adjacent to at least one
            // hyperedge of hyperedge-degree k'.
            std::map<long long, long long> adjacent_count;
            const auto& adj = s.adjacency();
            for (std::size_t v = 0; v < adj.size(); ++v) {
                std::vector<long long> seen;
                for (int w : adj[v]) seen.push_back(deg[w]);
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                for (long long k : seen) ++adjacent_count[k];
            }
            std::map<long long, double> out;
            double tail = 0;
            for (auto it = adjacent_count.rbegin(); it != adjacent_count.rend(); ++it) {
                double term = static_cast<double>(it->second);
                if (kind == DistKind::Decum) term *= static_cast<double>(it->first);
                tail += term / e_net;
                out[it->first] = tail;
            }
            return out;
        }
    }
    return {};
}

ExponentFit fit_exponent(const std::map<long long, double>& ccdf, long long k_min) {
    std::vector<double> xs, ys;
    for (auto [k, val] : ccdf) {
        if (k >= k_min && val > 0) {
            xs.push_back(std::log(static_cast<double>(k)));
            ys.push_back(std::log(val));
        }
    }
    if (xs.size() < 5) throw PreconditionError("fit_exponent needs at least 5 tail points");
    auto [slope, intercept] = least_squares(xs, ys);
    double ss = 0;
    double sx = 0, sxx = 0;
    for (double x : xs) {
        sx += x;
        sxx += x * x;
    }
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double resid = ys[i] - (slope * xs[i] + intercept);
        ss += resid * resid;
    }
    ExponentFit fit;
    fit.gamma = 1.0 - slope;
    fit.tail_points = static_cast<int>(xs.size());
    double var = ss / (n - 2) / (sxx - sx * sx / n);
    fit.stderr_slope = std::sqrt(std::max(0.0, var));
    return fit;
}

KinematicsReport kinematics(const NetState& s) {
    const auto& h = s.history();
    if (h.size() < 2) throw PreconditionError("kinematics needs >= 2 history points");
    const auto& a = h[h.size() - 2];
    const auto& b = h.back();
    KinematicsReport rep;
    double dt = static_cast<double>(b.t - a.t);
    rep.v_velocity = static_cast<double>(b.v_net - a.v_net) / dt;
    rep.e_velocity = static_cast<double>(b.e_net - a.e_net) / dt;
    rep.velocity = std::sqrt(rep.v_velocity * rep.v_velocity + rep.e_velocity * rep.e_velocity);
    rep.speed_ratio = rep.e_velocity / rep.v_velocity;
    rep.average_degree = 2.0 * static_cast<double>(b.e_net) / static_cast<double>(b.v_net);
    double v = static_cast<double>(b.v_net);
    rep.sparsity_ratio = static_cast<double>(b.e_net) / (v * std::log(v));
    rep.sparse = rep.sparsity_ratio <= 1.0;
    return rep;
}

} // namespace topcode
