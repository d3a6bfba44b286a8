#include "tverberg/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tverberg/deleted_product.hpp"

namespace tverberg {

Multigraph make_multigraph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0) throw Error("make_multigraph: negative vertex count");
    for (auto& [a, b] : edges) {
        if (a == b) throw LoopEdge("make_multigraph: loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw Error("make_multigraph: edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    return Multigraph{vertex_count, std::move(edges)};
}

RegularCwComplex graph_to_cw(const Multigraph& G) {
    for (auto [a, b] : G.edges)
        if (a == b) throw LoopEdge("graph_to_cw: loop at vertex " + std::to_string(a));
    std::vector<Cell> cells;
    for (int v = 0; v < G.vertex_count; ++v) cells.push_back({"v" + std::to_string(v), 0, {}});
    for (std::size_t e = 0; e < G.edges.size(); ++e)
        cells.push_back({"e" + std::to_string(e), 1,
                         {"v" + std::to_string(G.edges[e].first),
                          "v" + std::to_string(G.edges[e].second)}});
    return build_cw(std::move(cells));
}

bool classify_12_tverberg(const Multigraph& G) {
    for (auto [a, b] : G.edges)
        if (a == b) throw LoopEdge("classify_12_tverberg: loop at vertex " + std::to_string(a));

    std::vector<std::set<int>> nbrs(G.vertex_count);
    for (auto [a, b] : G.edges) {
        nbrs[a].insert(b);
        nbrs[b].insert(a);
    }
    for (const auto& nb : nbrs)
        if (nb.size() >= 3) return true;  // contains Y

    // a cycle in the simple graph underlying G has length >= 3
    std::vector<int> parent(G.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    std::set<std::pair<int, int>> simple(G.edges.begin(), G.edges.end());
    for (auto [a, b] : simple) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return true;
        parent[ra] = rb;
    }
    return false;
}

namespace {

bool graph_connected(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv == 0) return false;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    const int root = find(0);
    for (int v = 1; v < nv; ++v)
        if (find(v) != root) return false;
    return true;
}

}  // namespace

Multigraph canonical_form(const Multigraph& G) {
    const int nv = G.vertex_count;
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool have = false;
    do {
        std::vector<std::pair<int, int>> relab;
        relab.reserve(G.edges.size());
        for (auto [a, b] : G.edges) {
            int x = perm[a], y = perm[b];
            relab.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(relab.begin(), relab.end());
        if (!have || relab < best) {
            best = std::move(relab);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Multigraph{nv, std::move(best)};
}

std::vector<Multigraph> enumerate_connected_multigraphs(int max_edges) {
    if (max_edges > 7)
        throw GuardExceeded("enumerate_connected_multigraphs: max_edges > 7");
    if (max_edges < 1) return {};

    // Edge multisets in nondecreasing order with vertices introduced in
    // first-use order; isomorphism reduction by brute-force canonical form.
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> classes;
    std::vector<std::pair<int, int>> edges;
    auto dfs = [&](auto&& self, int max_label) -> void {
        if (!edges.empty()) {
            const int nv = max_label + 1;
            if (graph_connected(nv, edges)) {
                auto canon = canonical_form(Multigraph{nv, edges});
                classes.emplace(nv, std::move(canon.edges));
            }
        }
        if (static_cast<int>(edges.size()) == max_edges) return;
        const std::pair<int, int> last = edges.empty() ? std::pair<int, int>{0, 0} : edges.back();
        for (int a = 0; a <= max_label + 1; ++a)
            for (int b = a + 1; b <= std::max(max_label, a) + 1; ++b) {
                std::pair<int, int> e{a, b};
                if (!edges.empty() && e < last) continue;
                edges.push_back(e);
                self(self, std::max({max_label, a, b}));
                edges.pop_back();
            }
    };
    dfs(dfs, -1);

    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (const auto& [nv, e] : classes) out.push_back(Multigraph{nv, e});
    std::sort(out.begin(), out.end(), [](const Multigraph& a, const Multigraph& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
        return a.edges < b.edges;
    });
    return out;
}

CrosscheckTable corpus_crosscheck(int max_edges) {
    if (max_edges > 6) throw GuardExceeded("corpus_crosscheck: max_edges > 6");
    CrosscheckTable table;
    table.max_edges = max_edges;
    for (const auto& G : enumerate_connected_multigraphs(max_edges)) {
        CrosscheckRow row;
        row.graph = G;
        row.classifier = classify_12_tverberg(G);
        auto conf = deleted_product(graph_to_cw(G), 2);
        row.conf2_connected = is_connected(conf.underlying);
        if (row.conf2_connected && !row.classifier)
            table.violations.push_back(table.rows.size());
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace tverberg
