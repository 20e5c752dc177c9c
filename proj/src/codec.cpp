#include "topcode/codec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace topcode {

using OrderedJson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_doc(const std::string& what) {
    throw PreconditionError("malformed document: " + what);
}

OrderedJson parse(const std::string& text) {
    try {
        return OrderedJson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad_doc(e.what());
    }
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

OrderedJson edge_list(const Graph& g) {
    OrderedJson edges = OrderedJson::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

GraphDoc parse_graph_doc(const std::string& text) {
    OrderedJson j = parse(text);
    if (!j.contains("p") || !j["p"].is_number_integer()) bad_doc("field 'p' missing");
    if (!j.contains("edges") || !j["edges"].is_array()) bad_doc("field 'edges' missing");
    int p = j["p"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) bad_doc("edge entries must be [u,v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
    }
    GraphDoc doc;
    try {
        doc.graph = Graph(p, std::move(edges), std::move(names));
    } catch (const Error& e) {
        bad_doc(e.what());
    }
    if (j.contains("labels")) {
        Labeling f;
        if (static_cast<int>(j["labels"].size()) != p) bad_doc("'labels' must list p values");
        for (const auto& v : j["labels"]) f.vertex.push_back(v.get<long long>());
        if (j.contains("edge_labels")) {
            for (const auto& e : j["edge_labels"]) {
                if (!e.is_array() || e.size() != 3) bad_doc("edge label entries are [u,v,value]");
                int u = e[0].get<int>(), v = e[1].get<int>();
                f.edge[{std::min(u, v), std::max(u, v)}] = e[2].get<long long>();
            }
        }
        doc.labeling = std::move(f);
    }
    if (j.contains("vertex_sets")) {
        SetColoring sc;
        if (static_cast<int>(j["vertex_sets"].size()) != p) {
            bad_doc("'vertex_sets' must list p sets");
        }
        for (const auto& s : j["vertex_sets"]) {
            sc.vertex.push_back(normalized(s.get<IntSet>()));
        }
        if (j.contains("edge_sets")) {
            for (const auto& e : j["edge_sets"]) {
                if (!e.is_array() || e.size() != 3) bad_doc("edge set entries are [u,v,[...]]");
                int u = e[0].get<int>(), v = e[1].get<int>();
                sc.edge[{std::min(u, v), std::max(u, v)}] = normalized(e[2].get<IntSet>());
            }
        }
        sc.constraints = {Constraint::c0()};
        doc.sets = std::move(sc);
    }
    return doc;
}

std::string format_graph_doc(const GraphDoc& doc) {
    OrderedJson j;
    j["p"] = doc.graph.order();
    j["edges"] = edge_list(doc.graph);
    if (!doc.graph.names().empty()) j["names"] = doc.graph.names();
    if (doc.labeling) {
        j["labels"] = doc.labeling->vertex;
        if (!doc.labeling->edge.empty()) {
            OrderedJson el = OrderedJson::array();
            for (const auto& [e, v] : doc.labeling->edge) el.push_back({e.first, e.second, v});
            j["edge_labels"] = el;
        }
    }
    if (doc.sets) {
        j["vertex_sets"] = doc.sets->vertex;
        if (!doc.sets->edge.empty()) {
            OrderedJson es = OrderedJson::array();
            for (const auto& [e, s] : doc.sets->edge) es.push_back({e.first, e.second, s});
            j["edge_sets"] = es;
        }
    }
    return dump(j);
}

GraphDoc load_graph_doc(const std::string& path) { return parse_graph_doc(read_file(path)); }
void save_graph_doc(const std::string& path, const GraphDoc& doc) {
    write_file(path, format_graph_doc(doc));
}

Hypergraph parse_hyper_doc(const std::string& text) {
    OrderedJson j = parse(text);
    if (!j.contains("ground") || !j["ground"].is_array()) bad_doc("field 'ground' missing");
    if (!j.contains("edges") || !j["edges"].is_array()) bad_doc("field 'edges' missing");
    IntSet ground = j["ground"].get<IntSet>();
    std::vector<IntSet> edges;
    for (const auto& e : j["edges"]) edges.push_back(e.get<IntSet>());
    try {
        return Hypergraph::validate(std::move(ground), std::move(edges));
    } catch (const Error& e) {
        bad_doc(e.what());
    }
}

std::string format_hyper_doc(const Hypergraph& h) {
    OrderedJson j;
    j["ground"] = h.ground();
    j["edges"] = h.edges();
    return dump(j);
}

Hypergraph load_hyper_doc(const std::string& path) { return parse_hyper_doc(read_file(path)); }
void save_hyper_doc(const std::string& path, const Hypergraph& h) {
    write_file(path, format_hyper_doc(h));
}

TopcodeDoc parse_topcode_doc(const std::string& text) {
    OrderedJson j = parse(text);
    if (!j.contains("kind")) bad_doc("field 'kind' missing");
    TopcodeDoc doc;
    std::string kind = j["kind"].get<std::string>();
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 3) {
        bad_doc("field 'rows' must hold 3 rows");
    }
    if (kind == "numeric") {
        TopcodeMatrix m;
        for (int r = 0; r < 3; ++r) m.rows[r] = j["rows"][r].get<std::vector<long long>>();
        if (m.rows[0].size() != m.rows[1].size() || m.rows[1].size() != m.rows[2].size()) {
            bad_doc("rows must have equal length");
        }
        doc.numeric = std::move(m);
    } else if (kind == "set") {
        SetTopcodeMatrix m;
        for (int r = 0; r < 3; ++r) {
            for (const auto& s : j["rows"][r]) m.rows[r].push_back(normalized(s.get<IntSet>()));
        }
        if (m.rows[0].size() != m.rows[1].size() || m.rows[1].size() != m.rows[2].size()) {
            bad_doc("rows must have equal length");
        }
        doc.sets = std::move(m);
    } else {
        bad_doc("unknown kind '" + kind + "'");
    }
    return doc;
}

std::string format_topcode_doc(const TopcodeDoc& doc) {
    OrderedJson j;
    if (doc.numeric) {
        j["kind"] = "numeric";
        j["rows"] = {doc.numeric->rows[0], doc.numeric->rows[1], doc.numeric->rows[2]};
    } else if (doc.sets) {
        j["kind"] = "set";
        j["rows"] = {doc.sets->rows[0], doc.sets->rows[1], doc.sets->rows[2]};
    } else {
        throw PreconditionError("empty topcode document");
    }
    return dump(j);
}

TopcodeDoc load_topcode_doc(const std::string& path) {
    return parse_topcode_doc(read_file(path));
}
void save_topcode_doc(const std::string& path, const TopcodeDoc& doc) {
    write_file(path, format_topcode_doc(doc));
}

} // namespace topcode
