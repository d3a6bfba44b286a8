#include "tverberg/complementary.hpp"

#include <algorithm>

namespace tverberg {

RegularCwComplex complement(const RegularCwComplex& X, const std::vector<std::string>& faces) {
    std::vector<int> marked;
    for (const auto& f : faces) marked.push_back(X.index_of(f));
    std::vector<Cell> keep;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const int ci = static_cast<int>(i);
        bool ok = true;
        for (int m : marked)
            if (!X.disjoint(ci, m)) { ok = false; break; }
        if (ok) keep.push_back(X.cell(ci));
    }
    return build_cw(std::move(keep));
}

namespace {

// Tuples of exactly `size` cells, extended by cells of strictly larger index,
// pruned by the remaining budget. Index order equals id order, so within one
// size the output is lexicographic on the sorted id lists.
bool visit_tuples_of_size(const RegularCwComplex& X, int size, int dim_budget,
                          std::vector<int>& tup, int total, int start,
                          const std::function<bool(const DisjointTuple&)>& visit) {
    if (static_cast<int>(tup.size()) == size) {
        DisjointTuple t;
        t.total_dim = total;
        for (int i : tup) t.cells.push_back(X.cell(i).id);
        return visit(t);
    }
    for (int i = start; i < static_cast<int>(X.size()); ++i) {
        const int d = X.cell(i).dim;
        if (total + d > dim_budget) continue;
        bool disjoint = true;
        for (int j : tup)
            if (!X.disjoint(i, j)) { disjoint = false; break; }
        if (!disjoint) continue;
        tup.push_back(i);
        if (!visit_tuples_of_size(X, size, dim_budget, tup, total + d, i + 1, visit)) return false;
        tup.pop_back();
    }
    return true;
}

}  // namespace

void for_each_disjoint_tuple(const RegularCwComplex& X, int max_count, int dim_budget,
                             const std::function<bool(const DisjointTuple&)>& visit) {
    if (max_count < 0) throw Error("enumerate_disjoint_tuples: max_count must be >= 0");
    if (!visit(DisjointTuple{})) return;  // i = 0 case, always present
    std::vector<int> tup;
    for (int size = 1; size <= max_count; ++size)
        if (!visit_tuples_of_size(X, size, dim_budget, tup, 0, 0, visit)) return;
}

std::vector<DisjointTuple> enumerate_disjoint_tuples(const RegularCwComplex& X, int max_count,
                                                     int dim_budget) {
    std::vector<DisjointTuple> out;
    for_each_disjoint_tuple(X, max_count, dim_budget, [&](const DisjointTuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

ComplementaryReport check_complementary_acyclic(const RegularCwComplex& X, int k, int n,
                                                bool exhaustive, const std::string& complex_id) {
    if (k < 0) throw Error("check_complementary_acyclic: k must be >= 0");
    if (n < -1) throw Error("check_complementary_acyclic: n must be >= -1");

    ComplementaryReport report;
    report.complex_id = complex_id;
    report.k = k;
    report.n = n;
    report.pass = true;

    for_each_disjoint_tuple(X, k, n + 1, [&](const DisjointTuple& t) {
        ++report.checked_count;
        RegularCwComplex Y = complement(X, t.cells);
        const int level = n - t.total_dim;
        if (!is_n_acyclic(Y, level)) {
            TupleFailure f;
            f.tuple = t;
            f.required_level = level;
            f.complement_cells = Y.size();
            f.complement_homology = Y.empty()
                                        ? reduced_homology(Y)
                                        : reduced_homology_up_to(Y, std::max(level, 0));
            if (!report.counterexample) report.counterexample = f;
            report.failures.push_back(std::move(f));
            report.pass = false;
            return exhaustive;  // fail fast unless every failure is wanted
        }
        return true;
    });
    if (report.pass) report.failures.clear();
    return report;
}

}  // namespace tverberg
