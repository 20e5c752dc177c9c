#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "topcode/codec.hpp"

using namespace topcode;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {
std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
} // namespace

TEST_CASE("hypergraph documents round-trip byte for byte") {
    for (const char* name : {"venn4.hyper.json", "twelve.hyper.json", "lobster.hyper.json"}) {
        std::string text = read_file(fixture(name));
        Hypergraph h = parse_hyper_doc(text);
        CHECK(format_hyper_doc(h) == text);
    }
    Hypergraph twelve = load_hyper_doc(fixture("twelve.hyper.json"));
    CHECK(twelve == test::twelve_hypergraph());
    CHECK(twelve.size() == 13);
}

TEST_CASE("graph documents round-trip byte for byte") {
    for (const char* name : {"matrix27.graph.json", "k4sets.graph.json", "p4.graph.json"}) {
        std::string text = read_file(fixture(name));
        GraphDoc doc = parse_graph_doc(text);
        CHECK(format_graph_doc(doc) == text);
    }
}

TEST_CASE("malformed documents carry diagnostics") {
    CHECK_THROWS_WITH_AS(parse_hyper_doc("{\"ground\": [1,2]}"),
                         doctest::Contains("'edges' missing"), PreconditionError);
    CHECK_THROWS_WITH_AS(parse_hyper_doc(R"({"ground": [1,2], "edges": [[1,2],[1,2]]})"),
                         doctest::Contains("duplicate hyperedge"), PreconditionError);
    CHECK_THROWS_AS(parse_graph_doc("{"), PreconditionError);
    CHECK_THROWS_WITH_AS(parse_graph_doc(R"({"p": 2, "edges": [[0,0]]})"),
                         doctest::Contains("loops"), PreconditionError);
}

TEST_CASE("topcode documents") {
    TopcodeDoc doc;
    TopcodeMatrix m;
    m.rows[0] = {0, 1};
    m.rows[1] = {1, 2};
    m.rows[2] = {1, 3};
    doc.numeric = m;
    std::string text = format_topcode_doc(doc);
    TopcodeDoc back = parse_topcode_doc(text);
    REQUIRE(back.numeric.has_value());
    CHECK(*back.numeric == m);
    CHECK(format_topcode_doc(back) == text);

    TopcodeDoc sets;
    SetTopcodeMatrix sm;
    sm.rows[0] = {{1, 2}};
    sm.rows[1] = {{2}};
    sm.rows[2] = {{2, 3}};
    sets.sets = sm;
    std::string stext = format_topcode_doc(sets);
    TopcodeDoc sback = parse_topcode_doc(stext);
    REQUIRE(sback.sets.has_value());
    CHECK(*sback.sets == sm);
}
