#include "tverberg/deleted_product.hpp"

#include <algorithm>
#include <unordered_map>

namespace tverberg {

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::string tuple_id(const RegularCwComplex& X, const std::vector<int>& t) {
    std::string id = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) id += '|';
        id += X.cell(t[i]).id;
    }
    id += ')';
    return id;
}

}  // namespace

std::map<int, std::size_t> ConfComplex::census() const {
    std::map<int, std::size_t> out;
    for (const auto& c : underlying.cells()) ++out[c.dim];
    return out;
}

ConfComplex deleted_product(const RegularCwComplex& X, int r, std::size_t max_cells) {
    if (r < 1) throw Error("deleted_product: r must be >= 1");
    for (const auto& c : X.cells())
        if (c.id.find('|') != std::string::npos || c.id.find('(') != std::string::npos ||
            c.id.find(')') != std::string::npos)
            throw Error("deleted_product: cell id '" + c.id + "' contains a reserved character");

    const int n = static_cast<int>(X.size());

    // pairwise disjointness table of the base complex
    std::vector<std::vector<char>> dis(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) dis[a][b] = dis[b][a] = X.disjoint(a, b) ? 1 : 0;

    // ordered tuples, lexicographic on coordinate indices (= coordinate ids)
    std::vector<std::vector<int>> tuples;
    std::vector<int> tup;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(tup.size()) == r) {
            if (tuples.size() >= max_cells)
                throw SizeLimitExceeded("deleted_product: more than " +
                                        std::to_string(max_cells) + " cells (r = " +
                                        std::to_string(r) + ")");
            tuples.push_back(tup);
            return;
        }
        for (int i = 0; i < n; ++i) {
            bool ok = true;
            for (int j : tup)
                if (!dis[i][j]) { ok = false; break; }
            if (!ok) continue;
            tup.push_back(i);
            self(self);
            tup.pop_back();
        }
    };
    dfs(dfs);

    std::unordered_map<std::vector<int>, int, TupleHash> index;
    index.reserve(tuples.size() * 2);
    for (std::size_t i = 0; i < tuples.size(); ++i)
        index.emplace(tuples[i], static_cast<int>(i));

    std::vector<Cell> cells;
    cells.reserve(tuples.size());
    for (const auto& t : tuples) {
        Cell c;
        c.id = tuple_id(X, t);
        c.dim = 0;
        for (int i : t) c.dim += X.cell(i).dim;
        for (int pos = 0; pos < r; ++pos) {
            for (int cov : X.cover_indices()[t[pos]]) {
                auto sub = t;
                sub[pos] = cov;
                c.covers.push_back(tuple_id(X, sub));  // faces inherit disjointness
            }
        }
        cells.push_back(std::move(c));
    }

    ConfComplex conf;
    conf.r = r;
    conf.underlying = build_cw(std::move(cells));
    for (const auto& c : X.cells()) conf.base_ids.push_back(c.id);

    // align coordinates with the canonical cell order of `underlying`
    conf.coordinates.resize(tuples.size());
    for (auto& t : tuples) {
        const int at = conf.underlying.index_of(tuple_id(X, t));
        conf.coordinates[at] = std::move(t);
    }
    return conf;
}

HomologyProfile conf_homology(const RegularCwComplex& X, int r, std::size_t max_cells) {
    return reduced_homology(deleted_product(X, r, max_cells).underlying);
}

}  // namespace tverberg
