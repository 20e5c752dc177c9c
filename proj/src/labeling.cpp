#include "topcode/labeling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace topcode {

std::string to_string(LabelingKind kind) {
    switch (kind) {
        case LabelingKind::Graceful: return "graceful";
        case LabelingKind::SetOrderedGraceful: return "set-ordered-graceful";
        case LabelingKind::StronglyGraceful: return "strongly-graceful";
        case LabelingKind::OddGraceful: return "odd-graceful";
        case LabelingKind::SetOrderedOddGraceful: return "set-ordered-odd-graceful";
        case LabelingKind::StronglyOddGraceful: return "strongly-odd-graceful";
        case LabelingKind::GracefullyTotal: return "gracefully-total";
        case LabelingKind::EdgeMagicTotal: return "edge-magic-total";
        case LabelingKind::Felicitous: return "felicitous";
        case LabelingKind::EdgeMagicGraceful: return "edge-magic-graceful";
        case LabelingKind::EdgeOddGraceful: return "edge-odd-graceful";
    }
    return "?";
}

namespace {

bool uses_abs_diff_rule(LabelingKind kind) {
    switch (kind) {
        case LabelingKind::Graceful:
        case LabelingKind::SetOrderedGraceful:
        case LabelingKind::StronglyGraceful:
        case LabelingKind::OddGraceful:
        case LabelingKind::SetOrderedOddGraceful:
        case LabelingKind::StronglyOddGraceful:
        case LabelingKind::GracefullyTotal:
        case LabelingKind::EdgeOddGraceful:
            return true;
        default:
            return false;
    }
}

bool is_odd_kind(LabelingKind kind) {
    return kind == LabelingKind::OddGraceful || kind == LabelingKind::SetOrderedOddGraceful ||
           kind == LabelingKind::StronglyOddGraceful || kind == LabelingKind::EdgeOddGraceful;
}

bool is_set_ordered(LabelingKind kind) {
    return kind == LabelingKind::SetOrderedGraceful ||
           kind == LabelingKind::SetOrderedOddGraceful;
}

} // namespace

long long induced_edge_value(const Labeling& f, LabelingKind kind, const Graph& g, Edge e) {
    auto it = f.edge.find(e);
    if (it != f.edge.end()) return it->second;
    if (uses_abs_diff_rule(kind)) {
        return std::llabs(f.vertex[e.first] - f.vertex[e.second]);
    }
    if (kind == LabelingKind::Felicitous) {
        long long eta = g.size();
        return (f.vertex[e.first] + f.vertex[e.second]) % eta;
    }
    throw PreconditionError("labeling kind " + to_string(kind) +
                            " has no induced edge rule; edge values must be supplied");
}

namespace {

struct Checker {
    VerifyReport rep;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        rep.conditions.emplace_back(name, pass);
        if (!pass) rep.violations.push_back(detail.empty() ? name + " fails" : detail);
    }
};

// B-6: some bipartition orientation has max f(X) < min f(Y).
bool set_ordered_holds(const Graph& g, const Labeling& f) {
    auto classes = g.bipartition();
    if (!classes) return false;
    auto ext = [&](const std::vector<int>& side) {
        long long lo = 1LL << 62, hi = -1;
        for (int v : side) {
            lo = std::min(lo, f.vertex[v]);
            hi = std::max(hi, f.vertex[v]);
        }
        return std::pair{lo, hi};
    };
    if (classes->first.empty() || classes->second.empty()) return false;
    auto [alo, ahi] = ext(classes->first);
    auto [blo, bhi] = ext(classes->second);
    return ahi < blo || bhi < alo;
}

} // namespace

VerifyReport verify_labeling(const Graph& g, const Labeling& f, LabelingKind kind,
                             const KindParams& params) {
    if (static_cast<int>(f.vertex.size()) != g.order()) {
        throw PreconditionError("labeling must be total on V");
    }
    const int p = g.order();
    const long long q = g.size();
    Checker ck;

    // Consistency of supplied edge values with the induced rule, where a rule
    // exists.
    if (uses_abs_diff_rule(kind) || kind == LabelingKind::Felicitous) {
        bool consistent = true;
        for (const auto& e : g.edges()) {
            auto it = f.edge.find(e);
            if (it == f.edge.end()) continue;
            Labeling bare{f.vertex, {}};
            if (it->second != induced_edge_value(bare, kind, g, e)) consistent = false;
        }
        ck.add("edge-rule-consistency", consistent,
               "supplied edge values disagree with the induced rule");
    }

    std::vector<long long> edge_colors;
    for (const auto& e : g.edges()) edge_colors.push_back(induced_edge_value(f, kind, g, e));

    std::set<long long> vset(f.vertex.begin(), f.vertex.end());
    const bool injective = static_cast<int>(vset.size()) == p;
    long long vmin = vset.empty() ? 0 : *vset.begin();
    long long vmax = vset.empty() ? 0 : *vset.rbegin();

    auto edges_exactly = [&](long long lo, long long hi, long long step) {
        std::set<long long> want;
        for (long long c = lo; c <= hi; c += step) want.insert(c);
        std::set<long long> got(edge_colors.begin(), edge_colors.end());
        return got == want && edge_colors.size() == want.size();
    };

    switch (kind) {
        case LabelingKind::Graceful:
        case LabelingKind::SetOrderedGraceful:
        case LabelingKind::StronglyGraceful:
            ck.add("B-1", injective, "vertex labels are not pairwise distinct");
            ck.add("B-2", vmin == 0 && vmax <= q && vmin >= 0,
                   "vertex labels must lie in [0,q] with minimum 0");
            ck.add("B-4", edges_exactly(1, q, 1), "edge colors must be exactly [1,q]");
            break;
        case LabelingKind::OddGraceful:
        case LabelingKind::SetOrderedOddGraceful:
        case LabelingKind::StronglyOddGraceful:
            ck.add("B-1", injective, "vertex labels are not pairwise distinct");
            ck.add("B-3", vmin == 0 && vmax <= 2 * q - 1,
                   "vertex labels must lie in [0,2q-1] with minimum 0");
            ck.add("B-5", edges_exactly(1, 2 * q - 1, 2),
                   "edge colors must be exactly the odd set [1,2q-1]");
            break;
        case LabelingKind::GracefullyTotal:
            ck.add("vertex-range", vmin >= 0 && vmax <= q, "vertex labels must lie in [0,q]");
            ck.add("edges", edges_exactly(1, q, 1), "edge colors must be exactly [1,q]");
            break;
        case LabelingKind::EdgeOddGraceful:
            ck.add("B-1", injective, "vertex labels are not pairwise distinct");
            ck.add("B-5", edges_exactly(1, 2 * q - 1, 2),
                   "edge colors must be exactly the odd set [1,2q-1]");
            break;
        case LabelingKind::EdgeMagicTotal: {
            if (!f.has_edge_values(g)) {
                throw PreconditionError("edge-magic-total needs explicit edge values");
            }
            std::set<long long> all(vset);
            for (const auto& e : g.edges()) all.insert(f.edge.at(e));
            bool total = static_cast<long long>(all.size()) == p + q && *all.begin() == 1 &&
                         *all.rbegin() == p + q;
            ck.add("total-bijection", total, "values must be a bijection onto [1,p+q]");
            long long c = params.magic ? *params.magic : 0;
            bool magic_ok = true;
            for (const auto& e : g.edges()) {
                long long s = f.vertex[e.first] + f.vertex[e.second] + f.edge.at(e);
                if (!params.magic && c == 0) c = s;
                if (s != c) magic_ok = false;
            }
            ck.add("magic-constant", magic_ok, "f(u)+f(uv)+f(v) is not constant");
            break;
        }
        case LabelingKind::Felicitous: {
            ck.add("injective", injective, "vertex labels are not pairwise distinct");
            ck.add("vertex-range", vmin >= 0 && vmax <= q, "vertex labels must lie in [0,q]");
            long long eta = params.modulus ? *params.modulus : q;
            std::set<long long> mods;
            for (const auto& e : g.edges())
                mods.insert((f.vertex[e.first] + f.vertex[e.second]) % eta);
            ck.add("edges-distinct-mod", static_cast<long long>(mods.size()) == q,
                   "edge colors mod eta are not pairwise distinct");
            break;
        }
        case LabelingKind::EdgeMagicGraceful: {
            if (!f.has_edge_values(g)) {
                throw PreconditionError("edge-magic-graceful needs explicit edge values");
            }
            ck.add("injective", injective, "vertex labels are not pairwise distinct");
            long long k = params.magic ? *params.magic : -1;
            bool ok = true;
            for (const auto& e : g.edges()) {
                long long s = std::llabs(f.vertex[e.first] + f.vertex[e.second] - f.edge.at(e));
                if (k < 0) k = s;
                if (s != k) ok = false;
            }
            ck.add("edge-magic-graceful", ok, "|f(u)+f(v)-f(uv)| is not constant");
            break;
        }
    }

    if (is_set_ordered(kind)) {
        ck.add("B-6", set_ordered_holds(g, f),
               "no bipartition orientation satisfies max f(X) < min f(Y)");
    }
    if (kind == LabelingKind::StronglyGraceful || kind == LabelingKind::StronglyOddGraceful) {
        if (params.matching.empty()) {
            throw PreconditionError("strongly-* kinds need the matching M supplied");
        }
        long long target = (kind == LabelingKind::StronglyGraceful) ? q : 2 * q - 1;
        bool ok = true;
        for (auto [u, v] : params.matching) {
            if (!g.has_edge(u, v) || f.vertex[u] + f.vertex[v] != target) ok = false;
        }
        ck.add(kind == LabelingKind::StronglyGraceful ? "B-7" : "B-8", ok,
               "matching edge sums break the strongly condition");
    }

    ck.rep.ok = std::all_of(ck.rep.conditions.begin(), ck.rep.conditions.end(),
                            [](const auto& c) { return c.second; });
    return ck.rep;
}

namespace {

struct SearchState {
    const Graph& g;
    LabelingKind kind;
    const KindParams& params;
    long long value_cap;              // inclusive upper bound on vertex labels
    bool injective;
    std::vector<long long> values;    // assignment, -1 = unset
    std::set<long long> used_vertex;
    std::set<long long> used_edge;
    std::vector<int> side;            // set-ordered: 0 = low class, 1 = high, -1 n/a
    long long eta = 0;                // felicitous modulus

    bool accept_edge_color(long long c, long long q) {
        switch (kind) {
            case LabelingKind::Graceful:
            case LabelingKind::SetOrderedGraceful:
            case LabelingKind::StronglyGraceful:
            case LabelingKind::GracefullyTotal:
                return c >= 1 && c <= q && !used_edge.count(c);
            case LabelingKind::OddGraceful:
            case LabelingKind::SetOrderedOddGraceful:
            case LabelingKind::StronglyOddGraceful:
            case LabelingKind::EdgeOddGraceful:
                return c >= 1 && c <= 2 * q - 1 && (c % 2 == 1) && !used_edge.count(c);
            case LabelingKind::Felicitous:
                return !used_edge.count(c % eta);
            default:
                return false;
        }
    }
    long long edge_key(long long c) {
        return kind == LabelingKind::Felicitous ? c % eta : c;
    }
};

bool search_rec(SearchState& st, int v, std::optional<Labeling>& out) {
    const Graph& g = st.g;
    const long long q = g.size();
    if (v == g.order()) {
        Labeling f;
        f.vertex = st.values;
        // Re-verify to cover the global conditions (min = 0, exact edge sets,
        // matching sums). The incremental filters make this pass nearly always.
        if (verify_labeling(g, f, st.kind, st.params).ok) {
            out = f;
            return true;
        }
        return false;
    }
    for (long long val = 0; val <= st.value_cap; ++val) {
        if (st.injective && st.used_vertex.count(val)) continue;
        if (!st.side.empty() && st.side[v] >= 0) {
            // Low class must stay strictly below every high-class value seen,
            // and vice versa.
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (st.side[u] < 0) continue;
                if (st.side[u] == 0 && st.side[v] == 1 && st.values[u] >= val) ok = false;
                if (st.side[u] == 1 && st.side[v] == 0 && st.values[u] <= val) ok = false;
            }
            if (!ok) continue;
        }
        std::vector<long long> added_edges;
        bool feasible = true;
        for (int u : st.g.neighbors(v)) {
            if (u >= v) continue;
            long long c;
            if (st.kind == LabelingKind::Felicitous) {
                c = (st.values[u] + val) % st.eta;
            } else {
                c = std::llabs(st.values[u] - val);
            }
            if (!st.accept_edge_color(c, q)) {
                feasible = false;
                break;
            }
            long long key = st.edge_key(c);
            if (std::find(added_edges.begin(), added_edges.end(), key) != added_edges.end()) {
                feasible = false;
                break;
            }
            added_edges.push_back(key);
        }
        if (!feasible) continue;
        st.values[v] = val;
        if (st.injective) st.used_vertex.insert(val);
        for (long long c : added_edges) st.used_edge.insert(c);
        if (search_rec(st, v + 1, out)) return true;
        for (long long c : added_edges) st.used_edge.erase(c);
        if (st.injective) st.used_vertex.erase(val);
        st.values[v] = -1;
    }
    return false;
}

std::optional<Labeling> search_edge_magic_total(const Graph& g, const KindParams& params) {
    const int p = g.order();
    const long long q = g.size();
    const long long n = p + q;
    std::vector<long long> cs;
    if (params.magic) {
        cs.push_back(*params.magic);
    } else {
        for (long long c = 3; c <= 3 * n; ++c) cs.push_back(c);
    }
    for (long long c : cs) {
        std::vector<long long> values(p, -1);
        std::vector<char> used(n + 1, 0);
        std::optional<Labeling> result;
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == p) {
                Labeling f;
                f.vertex = values;
                for (const auto& e : g.edges()) {
                    f.edge[e] = c - values[e.first] - values[e.second];
                }
                KindParams with_c = params;
                with_c.magic = c;
                if (verify_labeling(g, f, LabelingKind::EdgeMagicTotal, with_c).ok) {
                    result = f;
                    return true;
                }
                return false;
            }
            for (long long val = 1; val <= n; ++val) {
                if (used[val]) continue;
                bool ok = true;
                std::vector<long long> edge_vals;
                for (int u : g.neighbors(v)) {
                    if (u >= v) continue;
                    long long ev = c - values[u] - val;
                    if (ev < 1 || ev > n || used[ev] || ev == val ||
                        std::find(edge_vals.begin(), edge_vals.end(), ev) != edge_vals.end()) {
                        ok = false;
                        break;
                    }
                    edge_vals.push_back(ev);
                }
                if (!ok) continue;
                values[v] = val;
                used[val] = 1;
                for (long long ev : edge_vals) used[ev] = 1;
                if (rec(v + 1)) return true;
                for (long long ev : edge_vals) used[ev] = 0;
                used[val] = 0;
                values[v] = -1;
            }
            return false;
        };
        if (rec(0)) return result;
    }
    return std::nullopt;
}

} // namespace

std::optional<Labeling> search_labeling(const Graph& g, LabelingKind kind,
                                        const KindParams& params) {
    if (g.size() > 20) {
        throw CapExceededError("search_labeling is capped at 20 edges");
    }
    if (g.order() == 0) return Labeling{};
    const long long q = g.size();

    if (kind == LabelingKind::EdgeMagicTotal) return search_edge_magic_total(g, params);
    if (kind == LabelingKind::EdgeMagicGraceful) {
        throw PreconditionError("search is not supported for edge-magic-graceful");
    }

    SearchState st{g, kind, params, 0, true, {}, {}, {}, {}, 0};
    st.values.assign(g.order(), -1);
    switch (kind) {
        case LabelingKind::Graceful:
        case LabelingKind::SetOrderedGraceful:
        case LabelingKind::StronglyGraceful:
            st.value_cap = q;
            break;
        case LabelingKind::GracefullyTotal:
            st.value_cap = q;
            st.injective = false;
            break;
        case LabelingKind::OddGraceful:
        case LabelingKind::SetOrderedOddGraceful:
        case LabelingKind::StronglyOddGraceful:
        case LabelingKind::EdgeOddGraceful:
            st.value_cap = std::max<long long>(2 * q - 1, 0);
            break;
        case LabelingKind::Felicitous:
            st.value_cap = q;
            st.eta = params.modulus ? *params.modulus : q;
            break;
        default:
            break;
    }
    if (is_set_ordered(kind)) {
        auto classes = g.bipartition();
        if (!classes) return std::nullopt; // B-6 needs a bipartite graph
        st.side.assign(g.order(), -1);
        for (int v : classes->first) st.side[v] = 0;
        for (int v : classes->second) st.side[v] = 1;
        // Low/high orientation: try X low first, then swapped. The lex-least
        // witness across both is returned.
        std::optional<Labeling> a, b;
        search_rec(st, 0, a);
        for (int& s : st.side) s = (s >= 0) ? 1 - s : s;
        st.values.assign(g.order(), -1);
        st.used_vertex.clear();
        st.used_edge.clear();
        search_rec(st, 0, b);
        if (a && b) return a->vertex <= b->vertex ? a : b;
        return a ? a : b;
    }
    std::optional<Labeling> out;
    search_rec(st, 0, out);
    return out;
}

VerifyReport verify_kd_total(const Graph& g, const Labeling& f, const KdParams& params) {
    if (static_cast<int>(f.vertex.size()) != g.order()) {
        throw PreconditionError("labeling must be total on V");
    }
    const long long q = g.size(), k = params.k, d = params.d;
    if (d < 1 || k < 0) throw PreconditionError("need k >= 0 and d >= 1");
    auto classes = g.bipartition();
    if (!classes) throw PreconditionError("(k,d)-total colorings need a bipartite graph");

    auto run = [&](const std::vector<int>& X, const std::vector<int>& Y) -> VerifyReport {
        Checker ck;
        bool range_ok = true;
        for (int x : X) {
            long long v = f.vertex[x];
            if (v < 0 || v % d != 0) range_ok = false;
        }
        for (int y : Y) {
            long long v = f.vertex[y];
            if (v < k || (v - k) % d != 0) range_ok = false;
        }
        ck.add("vertex-ranges", range_ok,
               "X must lie in {0,d,2d,...} and Y in {k,k+d,...}");

        auto edge_value = [&](Edge e) -> long long {
            auto it = f.edge.find(e);
            if (it != f.edge.end()) return it->second;
            long long a = f.vertex[e.first], b = f.vertex[e.second];
            switch (params.variant) {
                case KdVariant::GracefullyTotal:
                case KdVariant::OddGracefullyTotal:
                    return std::llabs(a - b);
                case KdVariant::HarmoniousTotal:
                case KdVariant::OddElegantTotal: {
                    long long m = ((a + b - k) % (q * d) + q * d) % (q * d);
                    return k + m;
                }
                default:
                    throw PreconditionError("this (k,d)-variant needs explicit edge values");
            }
        };

        std::vector<long long> ev;
        for (const auto& e : g.edges()) ev.push_back(edge_value(e));

        auto edge_set_is = [&](bool odd) {
            std::set<long long> want;
            if (odd) {
                for (long long i = 1; i <= 2 * q - 1; i += 2) want.insert(k + i * d);
            } else {
                for (long long i = 0; i < q; ++i) want.insert(k + i * d);
            }
            std::set<long long> got(ev.begin(), ev.end());
            return got == want && static_cast<long long>(ev.size()) == q;
        };

        switch (params.variant) {
            case KdVariant::GracefullyTotal: {
                bool rule = true;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    const auto& e = g.edges()[i];
                    if (ev[i] != std::llabs(f.vertex[e.first] - f.vertex[e.second])) {
                        rule = false;
                        ck.rep.violations.push_back("edge (" + std::to_string(e.first) + "," +
                                                    std::to_string(e.second) + ") breaks the rule");
                    }
                }
                ck.add("abs-diff-rule", rule);
                ck.add("edge-set", edge_set_is(false), "edge colors must be {k,k+d,...,k+(q-1)d}");
                break;
            }
            case KdVariant::OddGracefullyTotal: {
                bool rule = true;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    const auto& e = g.edges()[i];
                    if (ev[i] != std::llabs(f.vertex[e.first] - f.vertex[e.second])) rule = false;
                }
                ck.add("abs-diff-rule", rule);
                ck.add("edge-set", edge_set_is(true), "edge colors must be the odd (k,d)-set");
                break;
            }
            case KdVariant::EdgeAntimagicTotal: {
                std::vector<long long> sums;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    const auto& e = g.edges()[i];
                    sums.push_back(f.vertex[e.first] + f.vertex[e.second] + ev[i]);
                }
                std::sort(sums.begin(), sums.end());
                bool ok = !sums.empty();
                for (std::size_t i = 0; ok && i < sums.size(); ++i) {
                    if (sums[i] != sums[0] + 2 * d * static_cast<long long>(i)) ok = false;
                }
                ok = ok && (sums.empty() || (sums[0] - 2 * k) % (2 * d) == 0);
                ck.add("antimagic-sums", ok,
                       "edge sums must form {2k+2ad, 2k+2(a+1)d, ...}");
                break;
            }
            case KdVariant::HarmoniousTotal:
            case KdVariant::OddElegantTotal: {
                bool rule = true;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    const auto& e = g.edges()[i];
                    long long a = f.vertex[e.first], b = f.vertex[e.second];
                    bool cong = ((ev[i] - k) - (a + b - k)) % (q * d) == 0;
                    bool rep = ev[i] >= k && ev[i] <= k + q * d - 1;
                    if (!cong || !rep) {
                        rule = false;
                        ck.rep.violations.push_back("edge (" + std::to_string(e.first) + "," +
                                                    std::to_string(e.second) +
                                                    ") breaks the mod* rule");
                    }
                }
                ck.add("mod-rule", rule);
                ck.add("edge-set",
                       edge_set_is(params.variant == KdVariant::OddElegantTotal),
                       "edge color set mismatch");
                break;
            }
            case KdVariant::EdgeMagicTotal:
            case KdVariant::EdgeDifferenceTotal:
            case KdVariant::FelicitousDifference:
            case KdVariant::GracefulDifference: {
                long long c = -1;
                bool ok = true;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    const auto& e = g.edges()[i];
                    long long a = f.vertex[e.first], b = f.vertex[e.second], w = ev[i];
                    long long s = 0;
                    switch (params.variant) {
                        case KdVariant::EdgeMagicTotal: s = a + w + b; break;
                        case KdVariant::EdgeDifferenceTotal: s = w + std::llabs(a - b); break;
                        case KdVariant::FelicitousDifference: s = std::llabs(a + b - w); break;
                        default: s = std::llabs(std::llabs(a - b) - w); break;
                    }
                    if (c < 0) c = s;
                    if (s != c) {
                        ok = false;
                        ck.rep.violations.push_back("edge (" + std::to_string(e.first) + "," +
                                                    std::to_string(e.second) +
                                                    ") breaks the constant, value " +
                                                    std::to_string(s));
                    }
                }
                ck.add("constant", ok);
                if (params.strongly) {
                    ck.add("edge-set", edge_set_is(false),
                           "strongly flavor needs edge colors {k,...,k+(q-1)d}");
                } else {
                    std::set<long long> distinct(ev.begin(), ev.end());
                    ck.add("edge-count", static_cast<long long>(distinct.size()) <= q);
                }
                break;
            }
        }
        ck.rep.ok = std::all_of(ck.rep.conditions.begin(), ck.rep.conditions.end(),
                                [](const auto& c) { return c.second; });
        return ck.rep;
    };

    if (params.strongly && (params.variant == KdVariant::GracefullyTotal ||
                            params.variant == KdVariant::OddGracefullyTotal)) {
        throw PreconditionError("strongly (k,d)-graceful variants need a matching; unsupported");
    }

    VerifyReport a = run(classes->first, classes->second);
    if (a.ok) return a;
    VerifyReport b = run(classes->second, classes->first);
    return b.ok ? b : a;
}

VerifyReport verify_edge_odd_graceful_base(
    const std::vector<std::pair<Graph, Labeling>>& base) {
    Checker ck;
    std::set<long long> union_labels;
    bool per_graph = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto& [g, f] = base[i];
        auto rep = verify_labeling(g, f, LabelingKind::EdgeOddGraceful);
        if (!rep.ok) {
            per_graph = false;
            for (const auto& v : rep.violations) {
                ck.rep.violations.push_back("graph " + std::to_string(i) + ": " + v);
            }
        }
        union_labels.insert(f.vertex.begin(), f.vertex.end());
    }
    ck.add("per-graph", per_graph);
    bool contiguous = !union_labels.empty() && *union_labels.begin() == 0;
    if (contiguous) {
        long long expect = 0;
        for (long long v : union_labels) {
            if (v != expect++) {
                contiguous = false;
                break;
            }
        }
    }
    ck.add("vertex-union", contiguous, "vertex labels must jointly cover [0,M] with no gap");
    ck.rep.ok = per_graph && contiguous;
    return ck.rep;
}

} // namespace topcode
