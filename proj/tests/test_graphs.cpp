#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "tverberg/deleted_product.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/graphs.hpp"

using namespace tverberg;

TEST_CASE("make_multigraph validation") {
    CHECK_THROWS_AS(make_multigraph(2, {{0, 0}}), LoopEdge);
    CHECK_THROWS_AS(make_multigraph(2, {{0, 5}}), Error);
    auto g = make_multigraph(3, {{2, 0}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("graph_to_cw") {
    auto c3 = graph_to_cw(cycle_graph(3));
    CHECK(c3.size() == 6);
    CHECK(euler_characteristic(c3) == 0);
    // same structure as the triangle boundary (ids aside)
    CHECK(same_profile(reduced_homology(c3), reduced_homology(as_cw(boundary_simplex(2)))));

    auto c2 = graph_to_cw(cycle_graph(2));
    CHECK(c2.size() == 4);
    for (const auto& cell : c2.cells())
        if (cell.dim == 1)
            CHECK(cell.covers == std::vector<std::string>{"v0", "v1"});

    auto y = graph_to_cw(y_graph());
    CHECK(y.size() == 7);

    Multigraph loop{1, {{0, 0}}};
    CHECK_THROWS_AS(graph_to_cw(loop), LoopEdge);
}

TEST_CASE("classify_12_tverberg pinned verdicts") {
    CHECK(classify_12_tverberg(cycle_graph(3)));
    CHECK(classify_12_tverberg(y_graph()));
    CHECK_FALSE(classify_12_tverberg(path_graph(5)));
    CHECK_FALSE(classify_12_tverberg(cycle_graph(2)));

    // C2 with a third parallel edge is still a thickened path
    auto triple = make_multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK_FALSE(classify_12_tverberg(triple));

    for (int n = 3; n <= 10; ++n) CHECK(classify_12_tverberg(cycle_graph(n)));
    for (int n = 1; n <= 10; ++n) CHECK_FALSE(classify_12_tverberg(path_graph(n)));
}

TEST_CASE("enumerate_connected_multigraphs small counts") {
    auto one = enumerate_connected_multigraphs(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].edges == std::vector<std::pair<int, int>>{{0, 1}});

    // cumulative: single edge, P3, C2
    auto two = enumerate_connected_multigraphs(2);
    REQUIRE(two.size() == 3);
    std::set<std::vector<std::pair<int, int>>> got2;
    for (const auto& g : two) got2.insert(g.edges);
    CHECK(got2.count({{0, 1}}) == 1);
    CHECK(got2.count({{0, 1}, {0, 1}}) == 1);     // C2
    CHECK(got2.count({{0, 1}, {0, 2}}) == 1);     // P3 in canonical form

    // the five classes with exactly 3 edges
    auto three = enumerate_connected_multigraphs(3);
    CHECK(three.size() == 8);
    std::set<std::vector<std::pair<int, int>>> with3;
    for (const auto& g : three)
        if (g.edges.size() == 3) with3.insert(g.edges);
    CHECK(with3 ==
          std::set<std::vector<std::pair<int, int>>>{
              {{0, 1}, {0, 1}, {0, 1}},  // triple edge
              {{0, 1}, {0, 1}, {0, 2}},  // P3 with a doubled edge
              {{0, 1}, {0, 2}, {1, 2}},  // C3
              {{0, 1}, {0, 2}, {0, 3}},  // Y
              {{0, 1}, {0, 2}, {1, 3}},  // P4
          });

    CHECK(enumerate_connected_multigraphs(4).size() == 20);
    CHECK_THROWS_AS(enumerate_connected_multigraphs(8), GuardExceeded);
}

TEST_CASE("enumeration yields pairwise non-isomorphic connected graphs") {
    auto graphs = enumerate_connected_multigraphs(5);
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> canon;
    for (const auto& g : graphs) {
        auto c = canonical_form(g);
        CHECK(c.edges == g.edges);  // enumeration returns canonical forms
        CHECK(canon.emplace(c.vertex_count, c.edges).second);
        // connected and loopless
        CHECK(is_connected(graph_to_cw(g)));
    }
}

TEST_CASE("corpus_crosscheck pinned rows") {
    auto table = corpus_crosscheck(3);
    CHECK(table.sound());
    auto find = [&](const Multigraph& g) -> const CrosscheckRow& {
        auto c = canonical_form(g);
        for (const auto& row : table.rows)
            if (row.graph.vertex_count == c.vertex_count && row.graph.edges == c.edges)
                return row;
        throw std::runtime_error("row not found");
    };
    const auto& c3 = find(cycle_graph(3));
    CHECK(c3.classifier);
    CHECK(c3.conf2_connected);

    const auto& p3 = find(path_graph(3));
    CHECK_FALSE(p3.classifier);
    CHECK_FALSE(p3.conf2_connected);

    const auto& c2 = find(cycle_graph(2));
    CHECK_FALSE(c2.classifier);
    CHECK_FALSE(c2.conf2_connected);

    CHECK_THROWS_AS(corpus_crosscheck(7), GuardExceeded);
}

TEST_CASE("Conf_2 of P3 is two disjoint paths, of C2 two points") {
    auto p3 = deleted_product(graph_to_cw(path_graph(3)), 2);
    CHECK(p3.underlying.size() == 10);
    CHECK_FALSE(is_connected(p3.underlying));
    auto H = reduced_homology(p3.underlying);
    CHECK(H.group(0).betti == 1);  // two contractible components
    CHECK(H.group(1).trivial());

    auto c2 = deleted_product(graph_to_cw(cycle_graph(2)), 2);
    CHECK(c2.underlying.size() == 2);
    CHECK(c2.underlying.dim() == 0);
}

TEST_CASE("the classifier is monotone under adding edges") {
    for (const auto& G : enumerate_connected_multigraphs(4)) {
        if (!classify_12_tverberg(G)) continue;
        for (int a = 0; a < G.vertex_count; ++a)
            for (int b = a + 1; b <= G.vertex_count; ++b) {
                auto bigger = G;
                bigger.vertex_count = std::max(bigger.vertex_count, b + 1);
                bigger.edges.emplace_back(a, b);
                CHECK(classify_12_tverberg(bigger));
            }
    }
}

TEST_CASE("graph-level disjoint pair count matches the Conf_2 census") {
    for (int n = 2; n <= 6; ++n) {
        auto G = cycle_graph(n);
        // ordered pairs of faces sharing no endpoint, counted on the graph
        const int nv = G.vertex_count;
        const int ne = static_cast<int>(G.edges.size());
        std::size_t count = 0;
        count += static_cast<std::size_t>(nv) * (nv - 1);          // vertex-vertex
        count += G.edges.size() * 2 * (nv - 2);                    // vertex-edge, both orders
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j) {
                if (i == j) continue;
                auto [a, b] = G.edges[i];
                auto [c, d] = G.edges[j];
                if (a != c && a != d && b != c && b != d) ++count;
            }
        auto conf = deleted_product(graph_to_cw(G), 2);
        CHECK(conf.underlying.size() == count);
    }
}
