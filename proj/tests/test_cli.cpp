// End-to-end CLI coverage: every subcommand exercised against the shipped
// fixtures, checking exit codes and key output fields.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef CLI_PATH
#define CLI_PATH "topcode"
#endif
#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.output.append(buf.data(), n);
    }
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("verify subcommand") {
    auto ok = run("verify --in " + fixture("matrix27.graph.json") + " --kind graceful");
    CHECK(ok.exit_code == 0);
    CHECK(parse(ok.output)["ok"] == true);

    auto ordered = run("verify --in " + fixture("matrix27.graph.json") +
                       " --kind set-ordered-graceful");
    CHECK(ordered.exit_code == 0);

    auto cls = run("verify --in " + fixture("k4sets.graph.json") + " --class strong-set-coloring");
    CHECK(cls.exit_code == 0);

    auto inter = run("verify --in " + fixture("k4sets.graph.json"));
    CHECK(inter.exit_code == 0);
    CHECK(parse(inter.output)["is_intersected_graph"] == true);

    auto chyper = run("verify --in " + fixture("k4sets.graph.json") + " --chyper 1");
    CHECK(chyper.exit_code == 0);

    // verified-false exits 1
    auto bad = run("verify --in " + fixture("p4.graph.json") + " --kind felicitous");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("hyper subcommand") {
    auto uniform = run("hyper uniform --in " + fixture("venn4.hyper.json"));
    CHECK(uniform.exit_code == 0);
    CHECK(parse(uniform.output)["uniform"] == 8);

    auto inter = run("hyper intersected --in " + fixture("venn4.hyper.json"));
    CHECK(inter.exit_code == 0);
    auto j = parse(inter.output);
    CHECK(j["p"] == 4);
    CHECK(j["edges"].size() == 6);
    CHECK(j["vertex_sets"].size() == 4);

    auto adj = run("hyper adjacent --in " + fixture("venn4.hyper.json"));
    CHECK(adj.exit_code == 0);
    CHECK(parse(adj.output)["edges"][0].size() == 7);

    auto reduce = run("hyper reduce --in " + fixture("lobster.hyper.json"));
    CHECK(reduce.exit_code == 0);
    CHECK(parse(reduce.output)["empty"] == true);

    auto dual = run("hyper dual --in " + fixture("venn4.hyper.json"));
    CHECK(dual.exit_code == 0);
    CHECK(parse(dual.output)["incidence"].size() == 15);

    auto ears = run("hyper ears --in " + fixture("twelve.hyper.json"));
    CHECK(ears.exit_code == 0);
    CHECK(parse(ears.output)["ears"].empty());

    auto matching = run("hyper matching --in " + fixture("twelve_reduced.hyper.json"));
    CHECK(matching.exit_code == 0);
    CHECK(!parse(matching.output)["matchings"].empty());

    auto conn = run("hyper connectivity --in " + fixture("venn4.hyper.json"));
    CHECK(conn.exit_code == 0);
    CHECK(parse(conn.output)["connectivity"] == 3);

    auto chrom = run("hyper chromatic --in " + fixture("venn4.hyper.json"));
    CHECK(chrom.exit_code == 0);
    CHECK(parse(chrom.output)["hyperedge_index"] == 4);

    auto ham = run("hyper hamilton --in " + fixture("twelve.hyper.json"));
    CHECK(ham.exit_code == 0);
    CHECK(parse(ham.output)["found"] == true);
}

TEST_CASE("setcolor subcommand") {
    auto vset = run("setcolor vset --in " + fixture("p4.graph.json"));
    CHECK(vset.exit_code == 0);
    CHECK(parse(vset.output)["vertex_sets"].size() == 4);

    auto tree = run("setcolor construct-tree --in " + fixture("spider.graph.json") +
                    " --kind graceful");
    CHECK(tree.exit_code == 0);

    auto adj = run("setcolor adjacent-edge --in " + fixture("spider.graph.json") +
                   " --strategy longest-path");
    CHECK(adj.exit_code == 0);

    auto pscs = run("setcolor pscs --in " + fixture("spider.graph.json") +
                    " --variant 2 --rounds 2");
    CHECK(pscs.exit_code == 2); // spider fixture has no labels -> usage error
    auto pscs2 = run("setcolor pscs --in " + fixture("p4.graph.json") +
                     " --variant 1 --rounds 1");
    CHECK(pscs2.exit_code == 0);
}

TEST_CASE("topcode subcommand") {
    std::string tmp = "/tmp/cli_matrix.topcode.json";
    auto build = run("topcode build --in " + fixture("matrix27.graph.json") + " --out " + tmp);
    CHECK(build.exit_code == 0);

    auto strings = run("topcode strings --in " + std::string(tmp) + " --count 4 --seed 7");
    CHECK(strings.exit_code == 0);
    // four 27-digit lines, reproducible
    int lines = 0;
    std::size_t pos = 0;
    while ((pos = strings.output.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 4);
    auto again = run("topcode strings --in " + std::string(tmp) + " --count 4 --seed 7");
    CHECK(again.output == strings.output);

    auto count = run("topcode count --in " + std::string(tmp));
    CHECK(count.exit_code == 0);
    CHECK(parse(count.output)["strings"] == "10888869450418352160768000000");

    std::string tmps = "/tmp/cli_sets.topcode.json";
    auto sets = run("topcode set --in " + fixture("k4sets.graph.json") + " --out " + tmps);
    CHECK(sets.exit_code == 0);
    auto scount = run("topcode count --in " + std::string(tmps));
    CHECK(scount.exit_code == 0);
    CHECK(parse(scount.output)["m_abc"] == "139314069504");

    auto unknown = run("topcode frobnicate --in " + std::string(tmp));
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("group subcommand") {
    auto add = run("group add --in " + fixture("p4.graph.json") +
                   " --modulus 5 --i 2 --j 4 --zero 1");
    CHECK(add.exit_code == 0);
    CHECK(parse(add.output)["lambda"] == 5);

    auto inv = run("group inverse --in " + fixture("p4.graph.json") +
                   " --modulus 7 --i 5 --zero 2");
    CHECK(inv.exit_code == 0);
    CHECK(parse(inv.output)["inverse"] == 6);

    auto check = run("group check --in " + fixture("p4.graph.json") + " --modulus 3");
    CHECK(check.exit_code == 0);
    CHECK(parse(check.output)["ok"] == true);
}

TEST_CASE("lattice subcommand") {
    auto enum01 = run("lattice enumerate01 --base " + fixture("pm_a.hyper.json") + " --base " +
                      fixture("pm_b.hyper.json"));
    CHECK(enum01.exit_code == 0);
    CHECK(parse(enum01.output)["count"] == 4);

    auto sample = run("lattice sample --base " + fixture("p4.graph.json") + " --base " +
                      fixture("p4.graph.json") + " --op edge-coincide --seed 3");
    CHECK(sample.exit_code == 0);
    auto j = parse(sample.output);
    CHECK(j["graph"]["p"] == 6); // 4 + 4 - 2
    CHECK(j["trace"].size() == 1);
}

TEST_CASE("simulate subcommand") {
    auto runout = run("simulate run --m 2 --m0 3 --steps 20 --seed 5");
    CHECK(runout.exit_code == 0);
    CHECK(runout.output.rfind("t,v_net,e_net\n", 0) == 0);

    auto fit = run("simulate fit --m 2 --m0 3 --steps 600 --seed 5 --kmin 3");
    CHECK(fit.exit_code == 0);
    auto j = parse(fit.output);
    CHECK(std::abs(j["a_v"].get<double>() - 1.0) < 1e-6);
    CHECK(std::abs(j["a_e"].get<double>() - 2.0) < 1e-6);

    auto kin = run("simulate kinematics --m 2 --m0 3 --steps 50 --seed 5");
    CHECK(kin.exit_code == 0);
    CHECK(parse(kin.output)["speed_ratio"] == 2.0);
}

TEST_CASE("exit codes") {
    auto missing = run("hyper uniform --in /nonexistent.hyper.json");
    CHECK(missing.exit_code == 2);
    auto unknown_flag = run("hyper uniform --in x --frobnicate");
    CHECK(unknown_flag.exit_code == 2);
    // cap exceeded signals 3
    auto cap = run("hyper hamilton --in " + fixture("big.hyper.json"));
    CHECK(cap.exit_code == 3);
}

TEST_CASE("text format") {
    auto uniform = run("hyper uniform --in " + fixture("venn4.hyper.json") + " --format text");
    CHECK(uniform.exit_code == 0);
    CHECK(uniform.output.find("uniform: 8") != std::string::npos);
    auto check = run("group check --in " + fixture("p4.graph.json") +
                     " --modulus 3 --format text");
    CHECK(check.exit_code == 0);
    CHECK(check.output.rfind("ok\n", 0) == 0);
}

TEST_CASE("TOPCODE_SEED provides the default seed") {
    std::string tmp = "/tmp/cli_seed.topcode.json";
    run("topcode build --in " + fixture("matrix27.graph.json") + " --out " + tmp);
    auto with_env = [&](const std::string& env) {
        std::string cmd = env + " " + std::string(CLI_PATH) + " topcode strings --in " + tmp +
                          " --count 1 2>/dev/null";
        std::array<char, 256> buf{};
        std::string out;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        pclose(pipe);
        return out;
    };
    CHECK(with_env("TOPCODE_SEED=7") == with_env("TOPCODE_SEED=7"));
    CHECK(with_env("TOPCODE_SEED=7") != with_env("TOPCODE_SEED=8"));
}
