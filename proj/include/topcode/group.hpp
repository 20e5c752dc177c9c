#pragma once

#include <map>
#include <string>
#include <vector>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"

namespace topcode {

enum class GroupFlavor { Labeling, Total, SetColored };

struct AxiomReport {
    bool zero_law = false;
    bool uniqueness = false;
    bool closure = false;
    bool inverse_law = false;
    bool associative = false;
    bool commutative = false;
    bool ok = false;
    std::vector<std::string> violations;
};

// Every-zero graphic group: M shifted copies of one base coloring of one
// graph, closed under lambda = i + j - k (mod M) with any element as zero.
// Element indices run 1..M; element values are normalized into [0, M-1]
// (the arithmetic is representative-independent).
//
// Internally every element stores its values aligned with the base coloring's
// slot order (vertices first, then edges; set entries keep the base element
// order) so the pointwise law can be evaluated without re-sorting.
class GraphicGroup {
public:
    GraphicGroup() = default;

    static GraphicGroup build(const Graph& g, const Labeling& base, GroupFlavor flavor,
                              int modulus);
    static GraphicGroup build_set(const Graph& g, const SetColoring& base, int modulus);

    int modulus() const { return modulus_; }
    GroupFlavor flavor() const { return flavor_; }
    const Graph& base_graph() const { return base_; }
    bool has_edge_slots() const { return edge_slots_; }

    // lambda = i + j - k mapped into [1, M].
    int add(int i, int j, int zero) const;
    // index with add(i, inverse(i, zero), zero) == zero; one of 2k-i, M+2k-i.
    int inverse(int i, int zero) const;

    // Element colorings (values in [0, M-1]). Labeling/Total flavors.
    Labeling element_labeling(int i) const;
    // Set-colored flavor.
    SetColoring element_sets(int i) const;

    // Pointwise combination of stored elements i, j under zero k (base-order
    // aligned), normalized per slot.
    std::vector<std::vector<long long>> combine(int i, int j, int zero) const;
    std::vector<std::vector<long long>> element_slots_normalized(int i) const;

    // Exhaustive verification under every choice of zero; capped at M <= 64
    // (pointwise closure/uniqueness/zero/inverse; associativity pointwise for
    // M <= 16, index-level above).
    AxiomReport verify_axioms() const;

    // Test hook: overwrite one value of one element (1-based element index,
    // slot index, position inside the slot).
    void tamper(int element, int slot, int pos, long long value);

    bool operator==(const GraphicGroup&) const = default;

private:
    Graph base_;
    GroupFlavor flavor_ = GroupFlavor::Labeling;
    int modulus_ = 0;
    bool edge_slots_ = false;
    // slots: vertices 0..p-1, then edges in g.edges() order.
    std::vector<std::vector<std::vector<long long>>> elements_; // [element][slot][pos]
};

} // namespace topcode
