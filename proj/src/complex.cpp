#include "tverberg/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tverberg {

namespace {

VertexList normalized(const VertexList& f) {
    VertexList v = f;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_subset(const VertexList& a, const VertexList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> sorted_union(const std::vector<std::vector<int>*>& lists) {
    std::vector<int> out;
    for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

// ---------------------------------------------------------------- simplicial

SimplicialComplex build_simplicial(const std::vector<VertexList>& facets) {
    std::vector<VertexList> norm;
    norm.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw EmptyFacet("build_simplicial: empty facet");
        for (int v : f)
            if (v < 0) throw Error("build_simplicial: negative vertex label");
        norm.push_back(normalized(f));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    // drop faces contained in another facet
    std::vector<VertexList> maximal;
    for (std::size_t i = 0; i < norm.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < norm.size() && !contained; ++j)
            if (i != j && norm[i].size() <= norm[j].size() && is_subset(norm[i], norm[j]))
                contained = norm[i] != norm[j];
        if (!contained) maximal.push_back(norm[i]);
    }
    SimplicialComplex K;
    K.facets_ = std::move(maximal);
    return K;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<VertexList> SimplicialComplex::faces_of_dim(int k) const {
    std::set<VertexList> out;
    if (k < 0) return {};
    const std::size_t sz = static_cast<std::size_t>(k) + 1;
    for (const auto& f : facets_) {
        if (f.size() < sz) continue;
        // enumerate sz-subsets of f
        std::vector<std::size_t> pick(sz);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            VertexList sub(sz);
            for (std::size_t i = 0; i < sz; ++i) sub[i] = f[pick[i]];
            out.insert(std::move(sub));
            // next combination
            std::size_t i = sz;
            while (i > 0 && pick[i - 1] == f.size() - sz + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < sz; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
    std::vector<std::size_t> counts;
    for (int k = 0; k <= dim(); ++k) counts.push_back(faces_of_dim(k).size());
    return counts;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (auto c : face_counts()) n += c;
    return n;
}

bool SimplicialComplex::has_face(const VertexList& f) const {
    VertexList v = normalized(f);
    if (v.empty()) return false;
    for (const auto& fac : facets_)
        if (is_subset(v, fac)) return true;
    return false;
}

// ------------------------------------------------------------------------ cw

void RegularCwComplex::finish_construction() {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < cells_.size(); ++i) index[cells_[i].id] = static_cast<int>(i);

    cover_idx_.assign(cells_.size(), {});
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (const auto& c : cells_[i].covers) cover_idx_[i].push_back(index.at(c));
        std::sort(cover_idx_[i].begin(), cover_idx_[i].end());
        cover_idx_[i].erase(std::unique(cover_idx_[i].begin(), cover_idx_[i].end()),
                            cover_idx_[i].end());
    }

    // down sets in order of increasing dimension
    std::vector<int> by_dim(cells_.size());
    std::iota(by_dim.begin(), by_dim.end(), 0);
    std::sort(by_dim.begin(), by_dim.end(),
              [&](int a, int b) { return cells_[a].dim < cells_[b].dim; });
    down_.assign(cells_.size(), {});
    for (int i : by_dim) {
        std::vector<std::vector<int>*> parts;
        for (int c : cover_idx_[i]) parts.push_back(&down_[c]);
        std::vector<int> self{i};
        parts.push_back(&self);
        down_[i] = sorted_union(parts);
    }
}

RegularCwComplex build_cw(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!index.emplace(cells[i].id, static_cast<int>(i)).second)
            throw Error("build_cw: duplicate cell id '" + cells[i].id + "'");
        if (cells[i].dim < 0) throw BadGrading("build_cw: negative dimension at '" + cells[i].id + "'");
    }
    for (const auto& c : cells) {
        if (c.dim >= 1 && c.covers.empty())
            throw NotRegular("build_cw: cell '" + c.id + "' of dim " + std::to_string(c.dim) +
                             " has no boundary faces");
        if (c.dim == 0 && !c.covers.empty())
            throw BadGrading("build_cw: 0-cell '" + c.id + "' has boundary faces");
        for (const auto& b : c.covers) {
            auto it = index.find(b);
            if (it == index.end())
                throw DanglingBoundary("build_cw: cell '" + c.id + "' covers unknown id '" + b + "'");
            if (cells[it->second].dim != c.dim - 1)
                throw BadGrading("build_cw: cell '" + c.id + "' (dim " + std::to_string(c.dim) +
                                 ") covers '" + b + "' of dim " +
                                 std::to_string(cells[it->second].dim));
        }
    }
    RegularCwComplex X;
    X.cells_ = std::move(cells);
    X.finish_construction();
    return X;
}

int RegularCwComplex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

bool RegularCwComplex::has_cell(const std::string& id) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), id,
                               [](const Cell& c, const std::string& s) { return c.id < s; });
    return it != cells_.end() && it->id == id;
}

int RegularCwComplex::index_of(const std::string& id) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), id,
                               [](const Cell& c, const std::string& s) { return c.id < s; });
    if (it == cells_.end() || it->id != id) throw UnknownCell("unknown cell '" + id + "'");
    return static_cast<int>(it - cells_.begin());
}

bool RegularCwComplex::leq(int below, int above) const {
    const auto& d = down_[above];
    return std::binary_search(d.begin(), d.end(), below);
}

bool RegularCwComplex::disjoint(int a, int b) const {
    const auto& da = down_[a];
    const auto& db = down_[b];
    std::size_t i = 0, j = 0;
    while (i < da.size() && j < db.size()) {
        if (da[i] == db[j]) return false;
        if (da[i] < db[j]) ++i; else ++j;
    }
    return true;
}

RegularCwComplex as_cw(const SimplicialComplex& K) {
    std::vector<Cell> cells;
    for (int k = 0; k <= K.dim(); ++k) {
        for (const auto& f : K.faces_of_dim(k)) {
            Cell c;
            c.dim = k;
            std::string id;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) id += '-';
                id += std::to_string(f[i]);
            }
            c.id = std::move(id);
            if (k > 0) {
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    std::string sub;
                    bool first = true;
                    for (std::size_t i = 0; i < f.size(); ++i) {
                        if (i == drop) continue;
                        if (!first) sub += '-';
                        sub += std::to_string(f[i]);
                        first = false;
                    }
                    c.covers.push_back(std::move(sub));
                }
            }
            cells.push_back(std::move(c));
        }
    }
    return build_cw(std::move(cells));
}

// --------------------------------------------------------------------- poset

FacePoset face_poset(const RegularCwComplex& X) {
    FacePoset P;
    P.elements.reserve(X.size());
    P.dims.reserve(X.size());
    for (const auto& c : X.cells()) {
        P.elements.push_back(c.id);
        P.dims.push_back(c.dim);
    }
    P.down_sets = X.down_sets();
    return P;
}

bool FacePoset::leq(int x, int y) const {
    const auto& d = down_sets[y];
    return std::binary_search(d.begin(), d.end(), x);
}

SimplicialComplex order_complex(const FacePoset& P) {
    const int n = static_cast<int>(P.size());
    if (n == 0) return SimplicialComplex{};

    // strict down lists and "has something above" flags
    std::vector<std::vector<int>> below(n);
    std::vector<char> covered(n, 0);
    for (int y = 0; y < n; ++y)
        for (int x : P.down_sets[y])
            if (x != y) {
                below[y].push_back(x);
                covered[x] = 1;
            }

    // covers(y): maximal elements of below[y]
    std::vector<std::vector<int>> covers(n);
    for (int y = 0; y < n; ++y) {
        for (int x : below[y]) {
            bool maximal = true;
            for (int z : below[y])
                if (z != x && P.leq(x, z)) { maximal = false; break; }
            if (maximal) covers[y].push_back(x);
        }
    }

    // maximal chains: walk from maximal elements down to minimal ones
    std::vector<VertexList> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int top) -> void {
        chain.push_back(top);
        if (covers[top].empty()) {
            VertexList f(chain.rbegin(), chain.rend());
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        } else {
            for (int c : covers[top]) self(self, c);
        }
        chain.pop_back();
    };
    for (int y = 0; y < n; ++y)
        if (!covered[y]) dfs(dfs, y);

    return build_simplicial(facets);
}

bool are_disjoint(const RegularCwComplex& X, const std::string& sigma, const std::string& tau) {
    return X.disjoint(X.index_of(sigma), X.index_of(tau));
}

bool is_connected(const RegularCwComplex& X) {
    if (X.empty()) return false;
    std::vector<int> parent(X.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (std::size_t i = 0; i < X.size(); ++i)
        for (int c : X.cover_indices()[i]) parent[find(static_cast<int>(i))] = find(c);
    const int root = find(0);
    for (std::size_t i = 1; i < X.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

}  // namespace tverberg
