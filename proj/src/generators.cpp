#include "tverberg/generators.hpp"

#include <algorithm>
#include <numeric>

namespace tverberg {

SimplicialComplex simplex(int n) {
    if (n < 0) throw Error("simplex: n must be >= 0");
    VertexList all(n + 1);
    std::iota(all.begin(), all.end(), 0);
    return build_simplicial({all});
}

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw Error("boundary_simplex: n must be >= 1");
    std::vector<VertexList> facets;
    for (int drop = 0; drop <= n; ++drop) {
        VertexList f;
        for (int v = 0; v <= n; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return build_simplicial(facets);
}

Multigraph cycle_graph(int n) {
    if (n < 2) throw Error("cycle_graph: n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_multigraph(n, std::move(edges));
}

Multigraph path_graph(int n) {
    if (n < 1) throw Error("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_multigraph(n, std::move(edges));
}

Multigraph y_graph() { return make_multigraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

RegularCwComplex minimal_cw_sphere(int d) {
    if (d < 0) throw Error("minimal_cw_sphere: d must be >= 0");
    std::vector<Cell> cells;
    for (int k = 0; k <= d; ++k) {
        std::vector<std::string> covers;
        if (k > 0) covers = {"e" + std::to_string(k - 1) + "+", "e" + std::to_string(k - 1) + "-"};
        cells.push_back({"e" + std::to_string(k) + "+", k, covers});
        cells.push_back({"e" + std::to_string(k) + "-", k, covers});
    }
    return build_cw(std::move(cells));
}

SimplicialComplex cross_polytope_boundary(int d) {
    if (d < 1) throw Error("cross_polytope_boundary: d must be >= 1");
    std::vector<VertexList> facets;
    const int pairs = d + 1;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        VertexList f;
        for (int i = 0; i < pairs; ++i) f.push_back(2 * i + ((mask >> i) & 1));
        facets.push_back(std::move(f));
    }
    return build_simplicial(facets);
}

SimplicialComplex suspension(const SimplicialComplex& K) {
    auto vs = K.vertices();
    const int a = vs.empty() ? 0 : vs.back() + 1;
    const int b = a + 1;
    std::vector<VertexList> facets;
    if (K.empty()) {
        facets = {{a}, {b}};
    } else {
        for (const auto& f : K.facets()) {
            VertexList fa = f, fb = f;
            fa.push_back(a);
            fb.push_back(b);
            facets.push_back(std::move(fa));
            facets.push_back(std::move(fb));
        }
    }
    return build_simplicial(facets);
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> corpus;
    auto add_simplicial = [&](std::string name, const SimplicialComplex& K, int sphere_dim = -1) {
        corpus.push_back({std::move(name), K, as_cw(K), sphere_dim});
    };
    auto add_cw = [&](std::string name, RegularCwComplex X, int sphere_dim = -1) {
        corpus.push_back({std::move(name), std::nullopt, std::move(X), sphere_dim});
    };

    for (int n = 0; n <= 4; ++n) add_simplicial("simplex-" + std::to_string(n), simplex(n));
    for (int n = 1; n <= 4; ++n)
        add_simplicial("boundary-simplex-" + std::to_string(n), boundary_simplex(n), n - 1);
    for (int d = 1; d <= 3; ++d)
        add_simplicial("cross-polytope-" + std::to_string(d), cross_polytope_boundary(d), d);
    const auto bipyramid = suspension(boundary_simplex(2));
    add_simplicial("suspension-boundary-simplex-2", bipyramid, 2);
    add_simplicial("double-suspension-boundary-simplex-2", suspension(bipyramid), 3);

    for (int d = 0; d <= 3; ++d)
        add_cw("minimal-cw-sphere-" + std::to_string(d), minimal_cw_sphere(d), d);

    for (int n = 2; n <= 6; ++n)
        add_cw("cycle-" + std::to_string(n), graph_to_cw(cycle_graph(n)), 1);
    for (int n = 1; n <= 5; ++n)
        add_cw("path-" + std::to_string(n), graph_to_cw(path_graph(n)));
    add_cw("y-graph", graph_to_cw(y_graph()));

    return corpus;
}

}  // namespace tverberg
