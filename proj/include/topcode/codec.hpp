#pragma once

#include <optional>
#include <string>

#include "topcode/coloring.hpp"
#include "topcode/graph.hpp"
#include "topcode/hypergraph.hpp"
#include "topcode/topcode_matrix.hpp"

namespace topcode {

// *.graph.json: vertex count, edges, optional names / vertex labels / edge
// labels / vertex sets / edge sets. Keys are emitted in a fixed order and
// sets sorted ascending, so save(load(x)) == x byte for byte.
struct GraphDoc {
    Graph graph;
    std::optional<Labeling> labeling;
    std::optional<SetColoring> sets;
};

GraphDoc parse_graph_doc(const std::string& text);
std::string format_graph_doc(const GraphDoc& doc);
GraphDoc load_graph_doc(const std::string& path);
void save_graph_doc(const std::string& path, const GraphDoc& doc);

// *.hyper.json: ground array + edges array-of-arrays.
Hypergraph parse_hyper_doc(const std::string& text);
std::string format_hyper_doc(const Hypergraph& h);
Hypergraph load_hyper_doc(const std::string& path);
void save_hyper_doc(const std::string& path, const Hypergraph& h);

// *.topcode.json: numeric or set flavor.
struct TopcodeDoc {
    std::optional<TopcodeMatrix> numeric;
    std::optional<SetTopcodeMatrix> sets;
};
TopcodeDoc parse_topcode_doc(const std::string& text);
std::string format_topcode_doc(const TopcodeDoc& doc);
TopcodeDoc load_topcode_doc(const std::string& path);
void save_topcode_doc(const std::string& path, const TopcodeDoc& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace topcode
