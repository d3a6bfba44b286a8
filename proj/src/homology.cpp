#include "tverberg/homology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace tverberg {

void IntegerMatrix::set(int r, int c, Int v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("IntegerMatrix::set out of range");
    if (v == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = std::move(v);
}

Int IntegerMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Int(0) : it->second;
}

namespace detail {

namespace {

/// Sparse elimination state: values live in row maps, columns track presence.
struct Elim {
    std::vector<std::map<int, Int>> row;
    std::vector<std::set<int>> colrows;
    std::size_t live = 0;
    std::function<void(int, int, const Int&)> on_touch;  // new or changed entry

    Elim(int R, int C) : row(R), colrows(C) {}

    const Int* find(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? nullptr : &it->second;
    }

    void erase(int r, int c) {
        auto it = row[r].find(c);
        if (it == row[r].end()) return;
        row[r].erase(it);
        colrows[c].erase(r);
        --live;
    }

    void add(int r, int c, const Int& dv) {
        if (dv == 0) return;
        auto it = row[r].find(c);
        if (it == row[r].end()) {
            it = row[r].emplace(c, dv).first;
            colrows[c].insert(r);
            ++live;
        } else {
            it->second += dv;
            if (it->second == 0) {
                row[r].erase(it);
                colrows[c].erase(r);
                --live;
                return;
            }
        }
        if (on_touch) on_touch(r, c, it->second);
    }

    // row[dst] += m * row[src]
    void row_axpy(int dst, int src, const Int& m) {
        std::vector<std::pair<int, Int>> snapshot(row[src].begin(), row[src].end());
        for (const auto& [c, v] : snapshot) add(dst, c, m * v);
    }

    // col[dst] += m * col[src]
    void col_axpy(int dst, int src, const Int& m) {
        std::vector<int> snapshot(colrows[src].begin(), colrows[src].end());
        for (int r : snapshot) add(r, dst, m * row[r].at(src));
    }
};

bool is_unit(const Int& v) { return v == 1 || v == -1; }

/// Make the pivot divide every entry in its row and column; the pivot
/// position may move, its absolute value strictly decreases on each step.
void improve_pivot(Elim& E, int& pr, int& pc) {
    for (;;) {
        Int p = E.row[pr].at(pc);
        if (is_unit(p)) return;
        bool changed = false;
        {
            std::vector<int> col(E.colrows[pc].begin(), E.colrows[pc].end());
            for (int r : col) {
                if (r == pr) continue;
                const Int& v = E.row[r].at(pc);
                if (v % p != 0) {
                    E.row_axpy(r, pr, -(v / p));
                    pr = r;
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        {
            std::vector<std::pair<int, Int>> rw(E.row[pr].begin(), E.row[pr].end());
            for (const auto& [c, v] : rw) {
                if (c == pc) continue;
                if (v % p != 0) {
                    E.col_axpy(c, pc, -(v / p));
                    pc = c;
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) return;
    }
}

void eliminate_at(Elim& E, int pr, int pc, std::vector<Int>& diag) {
    improve_pivot(E, pr, pc);
    const Int p = E.row[pr].at(pc);
    {
        std::vector<int> col(E.colrows[pc].begin(), E.colrows[pc].end());
        for (int r : col) {
            if (r == pr) continue;
            E.row_axpy(r, pr, -(E.row[r].at(pc) / p));
        }
    }
    // column pc is now the pivot alone; clearing row pr with column
    // operations touches nothing else, so the entries just vanish
    {
        std::vector<int> cols;
        for (const auto& [c, v] : E.row[pr])
            if (c != pc) cols.push_back(c);
        for (int c : cols) E.erase(pr, c);
    }
    diag.push_back(abs(p));
    E.erase(pr, pc);
}

/// Full scan for the next pivot: min |value|, ties by (row, col).
std::pair<int, int> scan_pivot(const Elim& E) {
    int br = -1, bc = -1;
    Int bval = 0;
    for (int r = 0; r < static_cast<int>(E.row.size()); ++r) {
        for (const auto& [c, v] : E.row[r]) {
            Int a = abs(v);
            if (br < 0 || a < bval) {
                br = r;
                bc = c;
                bval = std::move(a);
            }
        }
    }
    return {br, bc};
}

struct HeapItem {
    long long absv;
    long long fill;
    int r;
    int c;
    friend bool operator>(const HeapItem& a, const HeapItem& b) {
        return std::tie(a.absv, a.fill, a.r, a.c) > std::tie(b.absv, b.fill, b.r, b.c);
    }
};

long long clamped_abs(const Int& v) {
    Int a = abs(v);
    if (a > 0x3fffffff) return 0x3fffffff;
    return a.convert_to<long long>();
}

/// Rank and trivial factors of an oriented-incidence matrix (every column is
/// e_i - e_j): always totally unimodular, so rank = rows touched - components.
bool incidence_shortcut(const Triplets& t, SmithResult& out) {
    std::vector<signed char> colsign(t.cols, 0);
    std::vector<int> colfirst(t.cols, -1);
    std::vector<int> colcount(t.cols, 0);
    for (const auto& [rc, v] : t.data) {
        if (v != 1 && v != -1) return false;
        auto& cnt = colcount[rc.second];
        if (++cnt > 2) return false;
        colsign[rc.second] += static_cast<signed char>(v == 1 ? 1 : -1);
        if (colfirst[rc.second] < 0) colfirst[rc.second] = rc.first;
    }
    for (int c = 0; c < t.cols; ++c) {
        if (colcount[c] == 0) continue;
        if (colcount[c] != 2 || colsign[c] != 0) return false;
    }
    // union-find over the rows joined by each column
    std::vector<int> parent(t.rows);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int rank = 0;
    for (const auto& [rc, v] : t.data) {
        const int c = rc.second;
        if (rc.first == colfirst[c]) continue;  // visit each column at its second entry
        const int a = find(colfirst[c]);
        const int b = find(rc.first);
        if (a != b) {
            parent[a] = b;
            ++rank;
        }
    }
    out.rank = rank;  // spanning forest; cycle columns are dependent
    out.invariant_factors.assign(rank, Int(1));
    return true;
}

std::vector<Int> normalize_chain(std::vector<Int> diag) {
    std::size_t ones = 0;
    std::vector<Int> rest;
    for (auto& d : diag) {
        if (d == 1) ++ones;
        else rest.push_back(d);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                if (rest[j] % rest[i] != 0) {
                    Int g = gcd(rest[i], rest[j]);
                    Int l = rest[i] / g * rest[j];
                    rest[i] = g;
                    rest[j] = l;
                    changed = true;
                }
    }
    for (const auto& d : rest)
        if (d == 1) ++ones;  // gcd steps can create new units
    rest.erase(std::remove(rest.begin(), rest.end(), Int(1)), rest.end());
    std::sort(rest.begin(), rest.end());
    std::vector<Int> out(ones, Int(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

SmithResult smith_engine(const Triplets& t, PivotPolicy policy) {
    SmithResult res;
    if (policy == PivotPolicy::FillAware && incidence_shortcut(t, res)) return res;

    Elim E(t.rows, t.cols);
    for (const auto& [rc, v] : t.data) E.add(rc.first, rc.second, v);

    std::vector<Int> diag;
    if (policy == PivotPolicy::MinAbsOrder) {
        while (E.live > 0) {
            auto [pr, pc] = scan_pivot(E);
            eliminate_at(E, pr, pc, diag);
        }
    } else {
        // lazy min-heap on (|value|, fill estimate); stale items are
        // re-keyed when popped, so the matrix is never scanned
        std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
        auto fill_of = [&](int r, int c) {
            return static_cast<long long>(E.row[r].size() - 1) *
                   static_cast<long long>(E.colrows[c].size() - 1);
        };
        E.on_touch = [&](int r, int c, const Int& v) {
            heap.push({clamped_abs(v), fill_of(r, c), r, c});
        };
        for (int r = 0; r < t.rows; ++r)
            for (const auto& [c, v] : E.row[r]) heap.push({clamped_abs(v), fill_of(r, c), r, c});

        while (E.live > 0) {
            HeapItem item = heap.top();
            heap.pop();
            const Int* v = E.find(item.r, item.c);
            if (!v) continue;  // entry vanished
            const long long absv = clamped_abs(*v);
            const long long fill = fill_of(item.r, item.c);
            if (absv != item.absv || fill != item.fill) {
                heap.push({absv, fill, item.r, item.c});
                continue;
            }
            eliminate_at(E, item.r, item.c, diag);
        }
    }

    res.rank = static_cast<int>(diag.size());
    res.invariant_factors = normalize_chain(std::move(diag));
    return res;
}

}  // namespace detail

SmithResult smith_normal_form(const IntegerMatrix& M) {
    detail::Triplets t;
    t.rows = M.rows;
    t.cols = M.cols;
    t.data.reserve(M.entries.size());
    for (const auto& [rc, v] : M.entries) {
        if (v == 0) continue;
        if (rc.first < 0 || rc.first >= M.rows || rc.second < 0 || rc.second >= M.cols)
            throw Error("smith_normal_form: entry out of range");
        t.data.push_back({rc, v});
    }
    return detail::smith_engine(t, detail::PivotPolicy::MinAbsOrder);
}

// ----------------------------------------------------------- chain complexes

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Basis = std::vector<std::vector<int>>;

detail::Triplets boundary_triplets(const Basis& lower, const Basis& upper) {
    std::unordered_map<std::vector<int>, int, VecHash> index;
    index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<int>(i));
    detail::Triplets t;
    t.rows = static_cast<int>(lower.size());
    t.cols = static_cast<int>(upper.size());
    t.data.reserve(upper.size() * 4);
    std::vector<int> sub;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& f = upper[j];
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            sub.clear();
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            t.data.push_back({{index.at(sub), static_cast<int>(j)},
                              Int((drop % 2 == 0) ? 1 : -1)});
        }
    }
    return t;
}

/// Betti + torsion from chain bases for degrees 0..top (bases supplied for
/// 0..top+1). Reduced convention: the degree-0 boundary is the augmentation.
HomologyProfile profile_from_bases(const std::vector<Basis>& basis, int complex_dim, int top) {
    HomologyProfile H;
    H.complex_dim = complex_dim;
    H.computed_to = top;
    std::vector<int> rank(top + 3, 0);
    std::vector<std::vector<Int>> torsion_of(top + 2);
    for (int k = 1; k <= top + 1; ++k) {
        if (basis[k].empty()) continue;
        auto res = detail::smith_engine(boundary_triplets(basis[k - 1], basis[k]),
                                        detail::PivotPolicy::FillAware);
        rank[k] = res.rank;
        for (auto& d : res.invariant_factors)
            if (d > 1) torsion_of[k].push_back(d);
    }
    H.groups.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        const long long ck = static_cast<long long>(basis[k].size());
        const long long low = (k == 0) ? 1 : rank[k];  // augmentation has rank 1
        H.groups[k].betti = ck - low - rank[k + 1];
        H.groups[k].torsion = torsion_of[k + 1];
    }
    return H;
}

HomologyProfile simplicial_profile(const SimplicialComplex& K, int max_degree) {
    HomologyProfile H;
    if (K.empty()) {
        H.is_empty_complex = true;
        return H;
    }
    const int top = std::min(max_degree, K.dim());
    if (top < 0) {
        H.complex_dim = K.dim();
        H.computed_to = -1;
        return H;
    }
    std::vector<Basis> basis(top + 2);
    for (int k = 0; k <= top + 1; ++k) basis[k] = K.faces_of_dim(k);
    return profile_from_bases(basis, K.dim(), top);
}

/// Chains of the face poset, enumerated degreewise: the simplices of the
/// order complex without materializing its facets.
std::vector<Basis> poset_chain_bases(const RegularCwComplex& X, int top) {
    const int n = static_cast<int>(X.size());
    std::vector<std::vector<int>> above(n);
    for (int y = 0; y < n; ++y)
        for (int x : X.down_sets()[y])
            if (x != y) above[x].push_back(y);

    std::vector<Basis> basis(top + 2);
    // chains in poset order, grouped by generation
    std::vector<std::vector<int>> current;
    current.reserve(n);
    for (int i = 0; i < n; ++i) current.push_back({i});
    for (int k = 0; k <= top + 1; ++k) {
        basis[k].reserve(current.size());
        for (const auto& ch : current) {
            std::vector<int> key = ch;
            std::sort(key.begin(), key.end());
            basis[k].push_back(std::move(key));
        }
        std::sort(basis[k].begin(), basis[k].end());
        if (k == top + 1) break;
        std::vector<std::vector<int>> next;
        for (const auto& ch : current)
            for (int z : above[ch.back()]) {
                auto ext = ch;
                ext.push_back(z);
                next.push_back(std::move(ext));
            }
        current = std::move(next);
        if (current.empty()) break;
    }
    return basis;
}

HomologyProfile cw_profile(const RegularCwComplex& X, int max_degree) {
    HomologyProfile H;
    if (X.empty()) {
        H.is_empty_complex = true;
        return H;
    }
    const int top = std::min(max_degree, X.dim());
    if (top < 0) {
        H.complex_dim = X.dim();
        H.computed_to = -1;
        return H;
    }
    return profile_from_bases(poset_chain_bases(X, top), X.dim(), top);
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& K, bool reduced) {
    ChainComplex C;
    C.reduced = reduced;
    const int d = K.dim();
    for (int k = 0; k <= d; ++k) C.basis.push_back(K.faces_of_dim(k));
    C.boundary.resize(d + 1);
    if (d >= 0) {
        IntegerMatrix aug;
        aug.rows = reduced ? 1 : 0;
        aug.cols = static_cast<int>(C.basis[0].size());
        if (reduced)
            for (int j = 0; j < aug.cols; ++j) aug.set(0, j, 1);
        C.boundary[0] = std::move(aug);
    }
    for (int k = 1; k <= d; ++k) {
        auto t = boundary_triplets(C.basis[k - 1], C.basis[k]);
        IntegerMatrix M;
        M.rows = t.rows;
        M.cols = t.cols;
        for (auto& [rc, v] : t.data) M.entries[rc] = v;
        C.boundary[k] = std::move(M);
    }
    return C;
}

// -------------------------------------------------------------------- profiles

const HomologyProfile::Group& HomologyProfile::group(int k) const {
    static const Group zero{};
    if (k >= 0 && k <= computed_to) return groups[k];
    if (k > complex_dim) return zero;
    throw Error("homology degree " + std::to_string(k) + " was not computed");
}

bool HomologyProfile::trivial_up_to(int n) const {
    for (int k = 0; k <= n; ++k) {
        if (k > complex_dim) break;
        if (!group(k).trivial()) return false;
    }
    return true;
}

bool same_profile(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.is_empty_complex || b.is_empty_complex)
        return a.is_empty_complex == b.is_empty_complex;
    const int top = std::max(a.complex_dim, b.complex_dim);
    for (int k = 0; k <= top; ++k)
        if (!(a.group(k) == b.group(k))) return false;
    return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& K) {
    return simplicial_profile(K, K.empty() ? 0 : K.dim());
}

HomologyProfile reduced_homology(const RegularCwComplex& X) {
    return cw_profile(X, X.empty() ? 0 : X.dim());
}

HomologyProfile reduced_homology_up_to(const SimplicialComplex& K, int max_degree) {
    return simplicial_profile(K, max_degree);
}

HomologyProfile reduced_homology_up_to(const RegularCwComplex& X, int max_degree) {
    return cw_profile(X, max_degree);
}

namespace {

template <typename ComplexT>
bool n_acyclic_impl(const ComplexT& X, int n) {
    if (n <= -2) return true;
    if (X.empty()) return false;
    if (n == -1) return true;
    return reduced_homology_up_to(X, n).trivial_up_to(n);
}

}  // namespace

bool is_n_acyclic(const SimplicialComplex& K, int n) { return n_acyclic_impl(K, n); }
bool is_n_acyclic(const RegularCwComplex& X, int n) { return n_acyclic_impl(X, n); }

long long euler_characteristic(const SimplicialComplex& K) {
    if (K.empty()) throw EmptyComplex("euler_characteristic: empty complex");
    long long chi = 0;
    auto counts = K.face_counts();
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    return chi;
}

long long euler_characteristic(const RegularCwComplex& X) {
    if (X.empty()) throw EmptyComplex("euler_characteristic: empty complex");
    long long chi = 0;
    for (const auto& c : X.cells()) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

}  // namespace tverberg
