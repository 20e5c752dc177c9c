#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topcode/codec.hpp"
#include "topcode/group.hpp"
#include "topcode/hypergraph.hpp"
#include "topcode/labeling.hpp"
#include "topcode/lattice.hpp"
#include "topcode/netsim.hpp"
#include "topcode/parallel.hpp"
#include "topcode/setcolor.hpp"
#include "topcode/topcode_matrix.hpp"

using namespace topcode;
using OrderedJson = nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TOPCODE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

OrderedJson verdict_json(bool ok, const std::vector<std::pair<std::string, bool>>& conditions,
                         const std::vector<std::string>& violations) {
    OrderedJson j;
    j["ok"] = ok;
    OrderedJson cond = OrderedJson::object();
    for (const auto& [name, pass] : conditions) cond[name] = pass;
    j["conditions"] = cond;
    j["violations"] = violations;
    return j;
}

void emit(const OrderedJson& j, const std::string& format) {
    if (format == "text") {
        if (j.contains("ok")) {
            std::cout << (j["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
        }
        for (const auto& [key, value] : j.items()) {
            if (key == "ok" || key == "conditions" || key == "violations") continue;
            if (value.is_primitive()) std::cout << key << ": " << value.dump() << "\n";
        }
        if (j.contains("conditions")) {
            for (const auto& [k, v] : j["conditions"].items()) {
                std::cout << "  " << k << ": " << (v.get<bool>() ? "pass" : "fail") << "\n";
            }
        }
        if (j.contains("violations")) {
            for (const auto& v : j["violations"]) {
                std::cout << "  ! " << v.get<std::string>() << "\n";
            }
        }
        return;
    }
    std::cout << j.dump(2) << "\n";
}

LabelingKind parse_kind(const std::string& name) {
    static const std::map<std::string, LabelingKind> kinds{
        {"graceful", LabelingKind::Graceful},
        {"set-ordered-graceful", LabelingKind::SetOrderedGraceful},
        {"strongly-graceful", LabelingKind::StronglyGraceful},
        {"odd-graceful", LabelingKind::OddGraceful},
        {"set-ordered-odd-graceful", LabelingKind::SetOrderedOddGraceful},
        {"strongly-odd-graceful", LabelingKind::StronglyOddGraceful},
        {"gracefully-total", LabelingKind::GracefullyTotal},
        {"edge-magic-total", LabelingKind::EdgeMagicTotal},
        {"felicitous", LabelingKind::Felicitous},
        {"edge-magic-graceful", LabelingKind::EdgeMagicGraceful},
        {"edge-odd-graceful", LabelingKind::EdgeOddGraceful},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw PreconditionError("unknown labeling kind: " + name);
    return it->second;
}

NamedSetClass parse_class(const std::string& name) {
    static const std::map<std::string, NamedSetClass> classes{
        {"strong-vertex-set-labeling", NamedSetClass::StrongVertexSetLabeling},
        {"strong-edge-set-labeling", NamedSetClass::StrongEdgeSetLabeling},
        {"strongly-induced-edge-set-labeling", NamedSetClass::StronglyInducedEdgeSetLabeling},
        {"strongly-total-set-labeling", NamedSetClass::StronglyTotalSetLabeling},
        {"strong-set-coloring", NamedSetClass::StrongSetColoring},
        {"set-labeling", NamedSetClass::SetLabeling},
        {"edge-set-labeling", NamedSetClass::EdgeSetLabeling},
        {"total-set-coloring", NamedSetClass::TotalSetColoring},
        {"set-coloring", NamedSetClass::SetColoringSubjectToRest},
        {"pseudo-vertex-set-labeling", NamedSetClass::PseudoVertexSetLabeling},
        {"pseudo-edge-set-labeling", NamedSetClass::PseudoEdgeSetLabeling},
        {"pseudo-total-set-coloring", NamedSetClass::PseudoTotalSetColoring},
    };
    auto it = classes.find(name);
    if (it == classes.end()) throw PreconditionError("unknown set class: " + name);
    return it->second;
}

OrderedJson graph_json(const Graph& g, const SetColoring* sc = nullptr,
                       const Labeling* f = nullptr) {
    GraphDoc doc;
    doc.graph = g;
    if (sc) doc.sets = *sc;
    if (f) doc.labeling = *f;
    return OrderedJson::parse(format_graph_doc(doc));
}

int run_verify(const std::string& in, const std::string& kind, const std::string& set_class,
               int chyper, int rank, const std::string& format) {
    GraphDoc doc = load_graph_doc(in);
    if (!kind.empty()) {
        if (!doc.labeling) throw PreconditionError("document has no vertex labels");
        auto rep = verify_labeling(doc.graph, *doc.labeling, parse_kind(kind));
        emit(verdict_json(rep.ok, rep.conditions, rep.violations), format);
        return rep.ok ? kExitTrue : kExitFalse;
    }
    if (!set_class.empty()) {
        if (!doc.sets) throw PreconditionError("document has no vertex sets");
        auto rep = verify_class(doc.graph, *doc.sets, parse_class(set_class));
        OrderedJson j = verdict_json(rep.ok, rep.conditions, rep.violations);
        j["uniformity"] = {{"v_min", rep.uniformity.v_min},
                           {"v_max", rep.uniformity.v_max},
                           {"e_min", rep.uniformity.e_min},
                           {"e_max", rep.uniformity.e_max}};
        emit(j, format);
        return rep.ok ? kExitTrue : kExitFalse;
    }
    if (chyper > 0) {
        if (!doc.sets) throw PreconditionError("document has no vertex sets");
        auto rep = verify_chyper(doc.graph, *doc.sets, static_cast<CgraphKind>(chyper), rank);
        OrderedJson j = verdict_json(rep.ok, {}, rep.violations);
        j["vertex_sets_distinct"] = rep.vertex_sets_distinct;
        j["adjacent_edge_sets_distinct"] = rep.adjacent_edge_sets_distinct;
        emit(j, format);
        return rep.ok ? kExitTrue : kExitFalse;
    }
    if (!doc.sets) throw PreconditionError("document has no vertex sets");
    auto rep = verify_intersected(doc.graph, *doc.sets, doc.sets->constraints);
    OrderedJson j = verdict_json(rep.ok,
                                 {{"c0", rep.c0},
                                  {"constraints", rep.constraints},
                                  {"proper", rep.proper},
                                  {"injective", rep.injective},
                                  {"complete", rep.complete}},
                                 rep.violations);
    j["is_intersected_graph"] = rep.is_intersected_graph;
    emit(j, format);
    return rep.ok ? kExitTrue : kExitFalse;
}

int run_hyper(const std::string& action, const std::string& in, const std::string& out,
              const std::string& format) {
    Hypergraph h = load_hyper_doc(in);
    OrderedJson j;
    if (action == "reduce") {
        auto core = graham_reduction(h);
        j["reduction"] = core;
        j["empty"] = core.empty();
    } else if (action == "dual") {
        auto d = dual(h);
        j["incidence"] = d.incidence;
        j["hypergraph"] = OrderedJson::parse(format_hyper_doc(d.hypergraph));
    } else if (action == "uniform") {
        auto r = uniformity(h);
        if (r) {
            j["uniform"] = *r;
        } else {
            j["uniform"] = nullptr;
        }
    } else if (action == "ears") {
        auto rep = structure_report(h);
        j["ears"] = rep.ears;
        j["isolated_vertices"] = rep.isolated_vertices;
        j["irreducible"] = rep.irreducible;
    } else if (action == "matching") {
        j["matchings"] = perfect_hypermatchings(h);
    } else if (action == "connectivity") {
        auto rep = hyperedge_connectivity(h);
        j["connectivity"] = rep.connectivity;
        j["cut_set"] = rep.cut_set;
    } else if (action == "intersected") {
        auto ig = intersected_graph(h);
        j = graph_json(ig.graph, &ig.coloring);
    } else if (action == "chromatic") {
        j["hyperedge_index"] = hyperedge_chromatic_index(h);
        j["hypervertex"] = hypervertex_chromatic_number(h);
    } else if (action == "adjacent") {
        j = OrderedJson::parse(format_hyper_doc(adjacent_hypergraph(h)));
    } else if (action == "hamilton") {
        auto c = hyperedge_hamilton_cycle(h);
        j["found"] = c.has_value();
        if (c) j["cycle"] = *c;
    } else {
        throw PreconditionError("unknown hyper action: " + action);
    }
    if (!out.empty()) {
        write_file(out, j.dump(2) + "\n");
    } else {
        emit(j, format);
    }
    return kExitTrue;
}

int run_setcolor(const std::string& action, const std::string& in, const std::string& out,
                 int variant, int rounds, const std::string& kind, const std::string& strategy,
                 const std::string& format) {
    GraphDoc doc = load_graph_doc(in);
    OrderedJson j;
    if (action == "vset") {
        if (!doc.labeling) throw PreconditionError("vset needs vertex labels");
        auto sc = vset_coloring(doc.graph, *doc.labeling);
        j = graph_json(doc.graph, &sc);
    } else if (action == "pscs") {
        if (!doc.labeling) throw PreconditionError("pscs needs vertex labels");
        switch (variant) {
            case 1: {
                auto sc = pscs1(doc.graph, *doc.labeling, rounds);
                j = graph_json(doc.graph, &sc);
                break;
            }
            case 2: {
                auto sc = pscs2(doc.graph, *doc.labeling, rounds);
                j = graph_json(doc.graph, &sc);
                break;
            }
            case 3: {
                auto r = pscs3(doc.graph, *doc.labeling);
                j["graph"] = graph_json(doc.graph, &r.coloring);
                j["tree"] = graph_json(r.tree, &r.tree_coloring);
                j["tree_to_graph"] = r.tree_to_graph;
                break;
            }
            default:
                throw PreconditionError("pscs variant must be 1, 2 or 3 here (4 needs a base)");
        }
    } else if (action == "construct-tree") {
        IntersectionKind k = kind == "odd"       ? IntersectionKind::OddGraceful
                             : kind == "rainbow" ? IntersectionKind::Rainbow
                                                 : IntersectionKind::Graceful;
        auto sc = construct_for_tree(doc.graph, k);
        j = graph_json(doc.graph, &sc);
    } else if (action == "adjacent-edge") {
        AdjacentStrategy s = strategy == "longest-path" ? AdjacentStrategy::LongestPath
                                                        : AdjacentStrategy::LeafPeeling;
        auto sc = construct_adjacent_edge_intersected(doc.graph, s);
        j = graph_json(doc.graph, &sc);
    } else {
        throw PreconditionError("unknown setcolor action: " + action);
    }
    if (!out.empty()) {
        write_file(out, j.dump(2) + "\n");
    } else {
        emit(j, format);
    }
    return kExitTrue;
}

int run_topcode(const std::string& action, const std::string& in, const std::string& out,
                int count, std::uint64_t seed, const std::string& sep,
                const std::string& format) {
    OrderedJson j;
    if (action == "build" || action == "set") {
        GraphDoc doc = load_graph_doc(in);
        TopcodeDoc td;
        if (action == "build") {
            if (!doc.labeling) throw PreconditionError("build needs vertex labels");
            td.numeric = from_labeled_graph(doc.graph, *doc.labeling, LabelingKind::Graceful);
        } else {
            if (!doc.sets) throw PreconditionError("set needs vertex sets");
            td.sets = from_set_colored_graph(doc.graph, *doc.sets);
        }
        if (!out.empty()) {
            save_topcode_doc(out, td);
        } else {
            std::cout << format_topcode_doc(td);
        }
        return kExitTrue;
    }
    TopcodeDoc td = load_topcode_doc(in);
    if (action == "strings") {
        if (!td.numeric) throw PreconditionError("strings needs a numeric matrix");
        for (const auto& s : to_strings_seeded(*td.numeric, seed, count, sep)) {
            std::cout << s << "\n";
        }
        return kExitTrue;
    }
    if (action == "count") {
        if (td.numeric) {
            j["strings"] = string_count(*td.numeric).str();
        } else if (td.sets) {
            auto c = set_string_count(*td.sets);
            j["m_abc"] = c.m_abc.str();
            j["total"] = c.total.str();
        }
        emit(j, format);
        return kExitTrue;
    }
    throw PreconditionError("unknown topcode action: " + action);
}

int run_group(const std::string& action, const std::string& in, int modulus,
              const std::string& flavor, int i, int jdx, int zero, const std::string& format) {
    GraphDoc doc = load_graph_doc(in);
    GraphicGroup grp;
    if (flavor == "set-colored") {
        if (!doc.sets) throw PreconditionError("set-colored flavor needs vertex sets");
        grp = GraphicGroup::build_set(doc.graph, *doc.sets, modulus);
    } else {
        if (!doc.labeling) throw PreconditionError("labeling flavors need vertex labels");
        GroupFlavor f = flavor == "total" ? GroupFlavor::Total : GroupFlavor::Labeling;
        grp = GraphicGroup::build(doc.graph, *doc.labeling, f, modulus);
    }
    OrderedJson j;
    if (action == "build") {
        j["modulus"] = grp.modulus();
        j["flavor"] = flavor;
        j["order"] = grp.base_graph().order();
        emit(j, format);
        return kExitTrue;
    }
    if (action == "add") {
        j["lambda"] = grp.add(i, jdx, zero);
        emit(j, format);
        return kExitTrue;
    }
    if (action == "inverse") {
        j["inverse"] = grp.inverse(i, zero);
        emit(j, format);
        return kExitTrue;
    }
    if (action == "check") {
        auto rep = grp.verify_axioms();
        j = verdict_json(rep.ok,
                         {{"zero", rep.zero_law},
                          {"uniqueness", rep.uniqueness},
                          {"closure", rep.closure},
                          {"inverse", rep.inverse_law},
                          {"associative", rep.associative},
                          {"commutative", rep.commutative}},
                         rep.violations);
        emit(j, format);
        return rep.ok ? kExitTrue : kExitFalse;
    }
    throw PreconditionError("unknown group action: " + action);
}

int run_lattice(const std::string& action, const std::vector<std::string>& bases,
                const std::string& op_name, const std::vector<int>& multiplicities,
                std::uint64_t seed, const std::string& out, const std::string& format) {
    auto parse_op = [](const std::string& name) {
        if (name == "O1") return LatticeOp::O1;
        if (name == "O2") return LatticeOp::O2;
        if (name == "O3") return LatticeOp::O3;
        if (name == "edge-coincide") return LatticeOp::EdgeCoincide;
        if (name == "vertex-coincide") return LatticeOp::VertexCoincide;
        throw PreconditionError("unknown lattice op: " + name);
    };
    OrderedJson j;
    if (action == "enumerate01") {
        std::vector<Hypergraph> hs;
        for (const auto& path : bases) hs.push_back(load_hyper_doc(path));
        auto elements = enumerate01(hs);
        j["count"] = elements.size();
        OrderedJson arr = OrderedJson::array();
        for (const auto& e : elements) arr.push_back(OrderedJson::parse(format_hyper_doc(e)));
        j["elements"] = arr;
    } else if (action == "sample" || action == "apply") {
        std::vector<ColoredGraph> cgs;
        for (const auto& path : bases) {
            GraphDoc doc = load_graph_doc(path);
            ColoredGraph cg{doc.graph, {}};
            if (doc.sets) {
                cg.coloring = *doc.sets;
            } else {
                cg.coloring.vertex.assign(doc.graph.order(), IntSet{});
            }
            cgs.push_back(std::move(cg));
        }
        LatticeWord word;
        word.multiplicities =
            multiplicities.empty() ? std::vector<int>(cgs.size(), 1) : multiplicities;
        int total = 0;
        for (int m : word.multiplicities) total += m;
        word.ops.assign(std::max(0, total - 1), parse_op(op_name));
        word.seed = seed;
        auto s = sample_lattice(cgs, word);
        j["graph"] = graph_json(s.result.graph, &s.result.coloring);
        OrderedJson trace = OrderedJson::array();
        for (const auto& step : s.trace) {
            OrderedJson t;
            t["op"] = to_string(step.op);
            t["u1"] = step.sites.u1;
            t["u2"] = step.sites.u2;
            t["v1"] = step.sites.v1;
            t["v2"] = step.sites.v2;
            t["e1"] = {step.sites.e1.first, step.sites.e1.second};
            t["e2"] = {step.sites.e2.first, step.sites.e2.second};
            t["part1a"] = step.sites.part1a;
            t["part1b"] = step.sites.part1b;
            t["part2a"] = step.sites.part2a;
            t["part2b"] = step.sites.part2b;
            trace.push_back(t);
        }
        j["trace"] = trace;
        if (s.result.graph.order() <= 16) {
            j["edge_hamiltonian"] = is_edge_hamiltonian(s.result.graph).edge_hamiltonian;
        }
    } else {
        throw PreconditionError("unknown lattice action: " + action);
    }
    if (!out.empty()) {
        write_file(out, j.dump(2) + "\n");
    } else {
        emit(j, format);
    }
    return kExitTrue;
}

int run_simulate(const std::string& action, int m, int m0, long long steps, std::uint64_t seed,
                 long long k_min, const std::string& out, const std::string& format) {
    SimConfig cfg;
    cfg.edges_per_step = m;
    cfg.initial_clique = m0;
    cfg.steps = steps;
    cfg.seed = seed;
    auto s = run_simulation(cfg);
    if (action == "run") {
        std::ostringstream csv;
        csv << "t,v_net,e_net\n";
        for (const auto& h : s.history()) {
            csv << h.t << "," << h.v_net << "," << h.e_net << "\n";
        }
        if (!out.empty()) {
            write_file(out, csv.str());
        } else {
            std::cout << csv.str();
        }
        return kExitTrue;
    }
    if (action == "fit") {
        OrderedJson j;
        auto fit = fit_growth_linear(s.history());
        j["a_v"] = fit.a_v;
        j["b_v"] = fit.b_v;
        j["a_e"] = fit.a_e;
        j["b_e"] = fit.b_e;
        auto gamma = fit_exponent(distributions(s, DistKind::Cum), k_min);
        j["gamma"] = gamma.gamma;
        j["gamma_stderr"] = gamma.stderr_slope;
        j["tail_points"] = gamma.tail_points;
        emit(j, format);
        return kExitTrue;
    }
    if (action == "kinematics") {
        auto rep = kinematics(s);
        OrderedJson j;
        j["v_velocity"] = rep.v_velocity;
        j["e_velocity"] = rep.e_velocity;
        j["velocity"] = rep.velocity;
        j["speed_ratio"] = rep.speed_ratio;
        j["average_degree"] = rep.average_degree;
        j["sparsity_ratio"] = rep.sparsity_ratio;
        j["sparse"] = rep.sparse;
        emit(j, format);
        return kExitTrue;
    }
    if (action == "distribution") {
        std::ostringstream csv;
        csv << "k,value\n";
        for (auto [k, v] : distributions(s, DistKind::Cum)) csv << k << "," << v << "\n";
        if (!out.empty()) {
            write_file(out, csv.str());
        } else {
            std::cout << csv.str();
        }
        return kExitTrue;
    }
    throw PreconditionError("unknown simulate action: " + action);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph set-colorings, hypergraphs and intersected networks"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --format appear after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text");

    auto* verify = app.add_subcommand("verify", "verify labelings / set classes / chyper kinds");
    std::string v_in, v_kind, v_class;
    int v_chyper = 0, v_rank = 2;
    verify->add_option("--in", v_in)->required();
    verify->add_option("--kind", v_kind, "labeling kind");
    verify->add_option("--class", v_class, "set-coloring class");
    verify->add_option("--chyper", v_chyper, "Cgraph kind 1..7");
    verify->add_option("--rank", v_rank, "r for the r-rank kinds");

    auto* hyper = app.add_subcommand("hyper", "hypergraph procedures");
    std::string h_action, h_in, h_out;
    hyper
        ->add_option("action", h_action,
                     "reduce|dual|uniform|ears|matching|connectivity|intersected|chromatic|"
                     "adjacent|hamilton")
        ->required();
    hyper->add_option("--in", h_in)->required();
    hyper->add_option("--out", h_out);

    auto* setcolor = app.add_subcommand("setcolor", "set-coloring constructions");
    std::string s_action, s_in, s_out, s_kind = "graceful", s_strategy = "leaf-peeling";
    int s_variant = 1, s_rounds = 1;
    setcolor->add_option("action", s_action, "vset|pscs|construct-tree|adjacent-edge")
        ->required();
    setcolor->add_option("--in", s_in)->required();
    setcolor->add_option("--out", s_out);
    setcolor->add_option("--variant", s_variant);
    setcolor->add_option("--rounds", s_rounds);
    setcolor->add_option("--kind", s_kind, "graceful|odd|rainbow");
    setcolor->add_option("--strategy", s_strategy, "leaf-peeling|longest-path");

    auto* topsub = app.add_subcommand("topcode", "Topcode matrices and strings");
    std::string t_action, t_in, t_out, t_sep;
    int t_count = 1;
    std::uint64_t t_seed = default_seed();
    topsub->add_option("action", t_action, "build|set|strings|count")->required();
    topsub->add_option("--in", t_in)->required();
    topsub->add_option("--out", t_out);
    topsub->add_option("--count", t_count);
    topsub->add_option("--seed", t_seed);
    topsub->add_option("--sep", t_sep, "separator for unambiguous multi-digit output");

    auto* group = app.add_subcommand("group", "every-zero graphic groups");
    std::string g_action, g_in, g_flavor = "labeling";
    int g_modulus = 1, g_i = 1, g_j = 1, g_zero = 1;
    group->add_option("action", g_action, "build|add|inverse|check")->required();
    group->add_option("--in", g_in)->required();
    group->add_option("--modulus", g_modulus)->required();
    group->add_option("--flavor", g_flavor, "labeling|total|set-colored");
    group->add_option("--i", g_i);
    group->add_option("--j", g_j);
    group->add_option("--zero", g_zero);

    auto* lattice = app.add_subcommand("lattice", "graphic / hypergraph lattices");
    std::string l_action, l_op = "edge-coincide", l_out;
    std::vector<std::string> l_bases;
    std::vector<int> l_mult;
    std::uint64_t l_seed = default_seed();
    lattice->add_option("action", l_action, "apply|sample|enumerate01")->required();
    lattice->add_option("--base", l_bases, "base documents")->required();
    lattice->add_option("--op", l_op);
    lattice->add_option("--multiplicity", l_mult);
    lattice->add_option("--seed", l_seed);
    lattice->add_option("--out", l_out);

    auto* simulate = app.add_subcommand("simulate", "intersected-network growth");
    std::string sim_action, sim_out;
    int sim_m = 2, sim_m0 = 3;
    long long sim_steps = 1000, sim_kmin = 5;
    std::uint64_t sim_seed = default_seed();
    simulate->add_option("action", sim_action, "run|fit|kinematics|distribution")->required();
    simulate->add_option("--m", sim_m);
    simulate->add_option("--m0", sim_m0);
    simulate->add_option("--steps", sim_steps);
    simulate->add_option("--seed", sim_seed);
    simulate->add_option("--kmin", sim_kmin);
    simulate->add_option("--out", sim_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return run_verify(v_in, v_kind, v_class, v_chyper, v_rank, format);
        }
        if (hyper->parsed()) return run_hyper(h_action, h_in, h_out, format);
        if (setcolor->parsed()) {
            return run_setcolor(s_action, s_in, s_out, s_variant, s_rounds, s_kind, s_strategy,
                                format);
        }
        if (topsub->parsed()) {
            return run_topcode(t_action, t_in, t_out, t_count, t_seed, t_sep, format);
        }
        if (group->parsed()) {
            return run_group(g_action, g_in, g_modulus, g_flavor, g_i, g_j, g_zero, format);
        }
        if (lattice->parsed()) {
            return run_lattice(l_action, l_bases, l_op, l_mult, l_seed, l_out, format);
        }
        if (simulate->parsed()) {
            return run_simulate(sim_action, sim_m, sim_m0, sim_steps, sim_seed, sim_kmin,
                                sim_out, format);
        }
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
