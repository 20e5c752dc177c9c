#include "topcode/group.hpp"

#include <algorithm>
#include <map>

namespace topcode {

namespace {

long long mod_value(long long v, long long m) { return ((v % m) + m) % m; }

} // namespace

GraphicGroup GraphicGroup::build(const Graph& g, const Labeling& base, GroupFlavor flavor,
                                 int modulus) {
    if (modulus < 1) throw PreconditionError("group modulus must be >= 1");
    if (static_cast<int>(base.vertex.size()) != g.order()) {
        throw PreconditionError("base labeling must be total on V");
    }
    if (flavor == GroupFlavor::SetColored) {
        throw PreconditionError("use build_set for the set-colored flavor");
    }
    if (flavor == GroupFlavor::Total && !base.has_edge_values(g)) {
        throw PreconditionError("total flavor needs edge values in the base");
    }
    GraphicGroup grp;
    grp.base_ = g;
    grp.flavor_ = flavor;
    grp.modulus_ = modulus;
    grp.edge_slots_ = (flavor == GroupFlavor::Total);
    std::vector<std::vector<long long>> slots;
    for (int v = 0; v < g.order(); ++v) slots.push_back({base.vertex[v]});
    if (grp.edge_slots_) {
        for (auto e : g.edges()) slots.push_back({base.edge.at(e)});
    }
    for (int i = 1; i <= modulus; ++i) {
        auto shifted = slots;
        for (auto& s : shifted)
            for (auto& v : s) v = mod_value(v + i, modulus);
        grp.elements_.push_back(std::move(shifted));
    }
    return grp;
}

GraphicGroup GraphicGroup::build_set(const Graph& g, const SetColoring& base, int modulus) {
    if (modulus < 1) throw PreconditionError("group modulus must be >= 1");
    if (static_cast<int>(base.vertex.size()) != g.order()) {
        throw PreconditionError("base set-coloring must be total on V");
    }
    GraphicGroup grp;
    grp.base_ = g;
    grp.flavor_ = GroupFlavor::SetColored;
    grp.modulus_ = modulus;
    grp.edge_slots_ = base.has_edge_sets(g);
    std::vector<std::vector<long long>> slots;
    for (int v = 0; v < g.order(); ++v) {
        slots.emplace_back(base.vertex[v].begin(), base.vertex[v].end());
    }
    if (grp.edge_slots_) {
        for (auto e : g.edges()) {
            const auto& s = base.edge.at(e);
            slots.emplace_back(s.begin(), s.end());
        }
    }
    for (int i = 1; i <= modulus; ++i) {
        auto shifted = slots;
        for (auto& s : shifted)
            for (auto& v : s) v = mod_value(v + i, modulus);
        grp.elements_.push_back(std::move(shifted));
    }
    return grp;
}

int GraphicGroup::add(int i, int j, int zero) const {
    if (i < 1 || i > modulus_ || j < 1 || j > modulus_ || zero < 1 || zero > modulus_) {
        throw PreconditionError("group index out of range");
    }
    long long lambda = mod_value(static_cast<long long>(i) + j - zero, modulus_);
    return lambda == 0 ? modulus_ : static_cast<int>(lambda);
}

int GraphicGroup::inverse(int i, int zero) const {
    long long t = mod_value(2LL * zero - i, modulus_);
    return t == 0 ? modulus_ : static_cast<int>(t);
}

Labeling GraphicGroup::element_labeling(int i) const {
    if (flavor_ == GroupFlavor::SetColored) {
        throw PreconditionError("set-colored elements are set colorings");
    }
    if (i < 1 || i > modulus_) throw PreconditionError("group index out of range");
    Labeling f;
    const auto& el = elements_[i - 1];
    for (int v = 0; v < base_.order(); ++v) f.vertex.push_back(el[v][0]);
    if (edge_slots_) {
        int s = base_.order();
        for (auto e : base_.edges()) f.edge[e] = el[s++][0];
    }
    return f;
}

SetColoring GraphicGroup::element_sets(int i) const {
    if (flavor_ != GroupFlavor::SetColored) {
        throw PreconditionError("labeling elements are not set colorings");
    }
    if (i < 1 || i > modulus_) throw PreconditionError("group index out of range");
    SetColoring sc;
    const auto& el = elements_[i - 1];
    for (int v = 0; v < base_.order(); ++v) {
        sc.vertex.push_back(normalized(IntSet(el[v].begin(), el[v].end())));
    }
    if (edge_slots_) {
        int s = base_.order();
        for (auto e : base_.edges()) {
            sc.edge[e] = normalized(IntSet(el[s].begin(), el[s].end()));
            ++s;
        }
    }
    sc.constraints = {Constraint::c0()};
    return sc;
}

std::vector<std::vector<long long>> GraphicGroup::combine(int i, int j, int zero) const {
    const auto& a = elements_[i - 1];
    const auto& b = elements_[j - 1];
    const auto& k = elements_[zero - 1];
    std::vector<std::vector<long long>> out(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        out[s].resize(a[s].size());
        for (std::size_t r = 0; r < a[s].size(); ++r) {
            out[s][r] = mod_value(a[s][r] + b[s][r] - k[s][r], modulus_);
        }
        std::sort(out[s].begin(), out[s].end());
    }
    return out;
}

std::vector<std::vector<long long>> GraphicGroup::element_slots_normalized(int i) const {
    auto out = elements_[i - 1];
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

void GraphicGroup::tamper(int element, int slot, int pos, long long value) {
    elements_.at(element - 1).at(slot).at(pos) = value;
}

AxiomReport GraphicGroup::verify_axioms() const {
    if (modulus_ > 64) throw CapExceededError("verify_axioms is capped at M <= 64");
    AxiomReport rep;
    rep.zero_law = rep.uniqueness = rep.closure = rep.inverse_law = true;
    rep.associative = rep.commutative = true;

    std::map<std::vector<std::vector<long long>>, std::vector<int>> index;
    for (int i = 1; i <= modulus_; ++i) {
        index[element_slots_normalized(i)].push_back(i);
    }

    auto note = [&](bool& flag, const std::string& msg) {
        if (flag) rep.violations.push_back(msg);
        flag = false;
    };

    for (int k = 1; k <= modulus_; ++k) {
        for (int i = 1; i <= modulus_; ++i) {
            // zero law: i (+) k = i under zero k
            if (combine(i, k, k) != element_slots_normalized(i)) {
                note(rep.zero_law, "zero law fails at zero " + std::to_string(k) + ", element " +
                                       std::to_string(i));
            }
            // inverse: some element combines with i to the zero
            int inv = inverse(i, k);
            if (add(i, inv, k) != k || combine(i, inv, k) != element_slots_normalized(k)) {
                note(rep.inverse_law, "inverse fails at zero " + std::to_string(k) +
                                          ", element " + std::to_string(i));
            }
            for (int j = 1; j <= modulus_; ++j) {
                auto combined = combine(i, j, k);
                auto it = index.find(combined);
                if (it == index.end()) {
                    note(rep.closure, "closure fails at zero " + std::to_string(k) + ": " +
                                          std::to_string(i) + "(+)" + std::to_string(j));
                    continue;
                }
                if (it->second.size() != 1 || it->second[0] != add(i, j, k)) {
                    note(rep.uniqueness, "uniqueness fails at zero " + std::to_string(k) + ": " +
                                             std::to_string(i) + "(+)" + std::to_string(j));
                }
                if (combined != combine(j, i, k)) {
                    note(rep.commutative, "commutativity fails at zero " + std::to_string(k));
                }
            }
        }
    }
    // Associativity: index arithmetic always; pointwise spot check when small.
    for (int k = 1; k <= modulus_ && rep.associative; ++k) {
        for (int i = 1; i <= modulus_ && rep.associative; ++i) {
            for (int j = 1; j <= modulus_ && rep.associative; ++j) {
                for (int r = 1; r <= modulus_; ++r) {
                    if (add(add(i, j, k), r, k) != add(i, add(j, r, k), k)) {
                        note(rep.associative, "associativity fails at zero " + std::to_string(k));
                        break;
                    }
                }
            }
        }
    }
    if (modulus_ <= 16 && rep.closure && rep.uniqueness) {
        for (int k = 1; k <= modulus_ && rep.associative; ++k) {
            for (int i = 1; i <= modulus_ && rep.associative; ++i) {
                for (int j = 1; j <= modulus_ && rep.associative; ++j) {
                    for (int r = 1; r <= modulus_; ++r) {
                        auto left = combine(add(i, j, k), r, k);
                        auto right = combine(i, add(j, r, k), k);
                        if (left != right) {
                            note(rep.associative,
                                 "pointwise associativity fails at zero " + std::to_string(k));
                            break;
                        }
                    }
                }
            }
        }
    }
    rep.ok = rep.zero_law && rep.uniqueness && rep.closure && rep.inverse_law &&
             rep.associative && rep.commutative;
    return rep;
}

} // namespace topcode
