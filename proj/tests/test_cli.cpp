#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "tverberg/cli.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/io.hpp"

using namespace tverberg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("tvtest_") + name;
        if (!content.empty()) {
            std::ofstream f(path, std::ios::binary);
            f << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("complex files round-trip") {
    auto K = cross_polytope_boundary(2);
    auto parsed = parse_complex(simplicial_to_text(K));
    CHECK(parsed.type == "simplicial");
    REQUIRE(parsed.simplicial.has_value());
    CHECK(*parsed.simplicial == K);

    auto X = minimal_cw_sphere(2);
    auto parsed_cw = parse_complex(cw_to_text(X));
    CHECK(parsed_cw.cw == X);

    auto G = y_graph();
    auto parsed_g = parse_complex(graph_to_text(G));
    REQUIRE(parsed_g.graph.has_value());
    CHECK(*parsed_g.graph == G);
}

TEST_CASE("parse diagnostics name the offending element") {
    CHECK_THROWS_AS(parse_complex("not json"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"facets": []})"), ParseError);  // missing type
    CHECK_THROWS_AS(parse_complex(R"({"type": "nope"})"), ParseError);
    CHECK_THROWS_WITH_AS(parse_complex(R"({"type":"simplicial","facets":[[0],[1,"x"]]})"),
                         doctest::Contains("facets[1][1]"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_complex(R"({"type":"cw","cells":[{"id":"e","dim":1,"covers":["v"]}]})"),
        doctest::Contains("unknown id"), ParseError);
    CHECK_THROWS_WITH_AS(parse_complex(R"({"type":"graph","vertices":2,"edges":[[0,0]]})"),
                         doctest::Contains("loop"), ParseError);
}

TEST_CASE("certify subcommand and exit codes") {
    TempFile d2("d2.json", simplicial_to_text(simplex(2)));
    auto ok = run_cli({"certify", d2.path, "--d", "1", "--r", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("certified") != std::string::npos);
    CHECK(ok.out.find("complementary") != std::string::npos);

    TempFile y("y.json", graph_to_text(y_graph()));
    auto split = run_cli({"certify", y.path, "--d", "1", "--r", "2", "--method", "complementary"});
    CHECK(split.code == 1);
    CHECK(split.out.find("v0") != std::string::npos);

    auto both = run_cli({"certify", y.path, "--d", "1", "--r", "2"});
    CHECK(both.code == 0);
    CHECK(both.out.find("deleted_product") != std::string::npos);

    auto npp = run_cli({"certify", d2.path, "--d", "1", "--r", "6"});
    CHECK(npp.code == 1);
    CHECK(npp.out.find("NotPrimePower") != std::string::npos);

    auto missing = run_cli({"certify", "does_not_exist.json", "--d", "1", "--r", "2"});
    CHECK(missing.code == 2);
}

TEST_CASE("homology, acyclic and conf subcommands") {
    TempFile s2("s2.json", simplicial_to_text(boundary_simplex(3)));
    auto hom = run_cli({"homology", s2.path});
    CHECK(hom.code == 0);
    CHECK(hom.out.find("degree") != std::string::npos);

    auto ac = run_cli({"acyclic", s2.path, "--n", "1"});
    CHECK(ac.code == 0);
    auto not_ac = run_cli({"acyclic", s2.path, "--n", "2"});
    CHECK(not_ac.code == 1);
    CHECK(not_ac.out.find("2") != std::string::npos);

    TempFile d3("d3.json", simplicial_to_text(simplex(3)));
    auto conf = run_cli({"conf", d3.path, "--r", "2", "--homology"});
    CHECK(conf.code == 0);
    CHECK(conf.out.find("50 cells") != std::string::npos);

    auto guarded = run_cli({"conf", d3.path, "--r", "2", "--max-cells", "10"});
    CHECK(guarded.code == 2);
}

TEST_CASE("complementary subcommand") {
    TempFile m2("m2.json", cw_to_text(minimal_cw_sphere(2)));
    auto rep = run_cli({"complementary", m2.path, "--k", "1", "--n", "0"});
    CHECK(rep.code == 1);
    CHECK(rep.out.find("e1+") != std::string::npos);
    CHECK(rep.out.find("e1-") == std::string::npos);  // fail-fast: first failure only

    auto all = run_cli({"complementary", m2.path, "--k", "1", "--n", "0", "--all"});
    CHECK(all.code == 1);
    CHECK(all.out.find("e1+") != std::string::npos);
    CHECK(all.out.find("e1-") != std::string::npos);

    TempFile d2("d2.json", simplicial_to_text(simplex(2)));
    auto pass = run_cli({"complementary", d2.path, "--k", "1", "--n", "0"});
    CHECK(pass.code == 0);
}

TEST_CASE("TVERBERG_MAX_CELLS overrides the deleted-product guard") {
    TempFile d3("env.json", simplicial_to_text(simplex(3)));
    setenv("TVERBERG_MAX_CELLS", "10", 1);
    auto guarded = run_cli({"conf", d3.path, "--r", "2"});
    CHECK(guarded.code == 2);
    CHECK(guarded.err.find("10") != std::string::npos);
    // an explicit --max-cells wins over the environment
    auto explicit_guard = run_cli({"conf", d3.path, "--r", "2", "--max-cells", "100"});
    CHECK(explicit_guard.code == 0);
    setenv("TVERBERG_MAX_CELLS", "banana", 1);
    auto bad_env = run_cli({"conf", d3.path, "--r", "2"});
    CHECK(bad_env.code == 2);
    unsetenv("TVERBERG_MAX_CELLS");
    auto normal = run_cli({"conf", d3.path, "--r", "2"});
    CHECK(normal.code == 0);
}

TEST_CASE("graph subcommands") {
    TempFile y("y2.json", graph_to_text(y_graph()));
    CHECK(run_cli({"graph", "classify", y.path}).code == 0);

    TempFile p5("p5.json", graph_to_text(path_graph(5)));
    CHECK(run_cli({"graph", "classify", p5.path}).code == 1);

    auto corpus = run_cli({"graph", "corpus", "--max-edges", "3"});
    CHECK(corpus.code == 0);
    CHECK(corpus.out.find("sound") != std::string::npos);
}

TEST_CASE("gen writes complexes that re-parse identically") {
    TempFile out1("gen1.json");
    CHECK(run_cli({"gen", "cross-polytope", "2", "--out", out1.path}).code == 0);
    auto parsed = load_complex(out1.path);
    CHECK(*parsed.simplicial == cross_polytope_boundary(2));

    TempFile out2("gen2.json");
    CHECK(run_cli({"gen", "minimal-cw-sphere", "1", "--out", out2.path}).code == 0);
    CHECK(load_complex(out2.path).cw == minimal_cw_sphere(1));

    TempFile out3("gen3.json");
    CHECK(run_cli({"gen", "y", "--out", out3.path}).code == 0);
    CHECK(*load_complex(out3.path).graph == y_graph());

    // suspension of a generated complex
    TempFile out4("gen4.json");
    CHECK(run_cli({"gen", "suspension", "--of", out1.path, "--out", out4.path}).code == 0);
    CHECK(*load_complex(out4.path).simplicial == suspension(cross_polytope_boundary(2)));

    auto bad = run_cli({"gen", "wat", "--out", "never.json"});
    CHECK(bad.code == 2);
}

TEST_CASE("json reports are byte-identical across runs") {
    TempFile y("y3.json", graph_to_text(y_graph()));
    auto a = run_cli({"--json", "certify", y.path, "--d", "1", "--r", "2"});
    auto b = run_cli({"--json", "certify", y.path, "--d", "1", "--r", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"digest\"") != std::string::npos);
    CHECK(a.out.find("\"version\"") != std::string::npos);
    // global flags may come after the subcommand too
    auto c = run_cli({"certify", y.path, "--d", "1", "--r", "2", "--json"});
    CHECK(c.code == 0);
    CHECK(c.out.find("\"verdict\": \"certified\"") != std::string::npos);

    auto h1 = run_cli({"--json", "homology", y.path});
    auto h2 = run_cli({"--json", "homology", y.path});
    CHECK(h1.out == h2.out);
}

TEST_CASE("strict mode rejects irregular cw input") {
    // 1-cell with a repeated endpoint: passes the combinatorial checks but
    // its boundary is a single point, not a 0-sphere
    TempFile bad("bad.json",
                 R"({"type":"cw","cells":[{"id":"v","dim":0,"covers":[]},
                                          {"id":"e","dim":1,"covers":["v","v"]}]})");
    CHECK(run_cli({"homology", bad.path}).code == 0);
    CHECK(run_cli({"--strict", "homology", bad.path}).code == 2);
    TempFile good("good.json", cw_to_text(minimal_cw_sphere(2)));
    CHECK(run_cli({"--strict", "homology", good.path}).code == 0);
}
