/* Complements X(sigma_1,...,sigma_k), enumeration of pairwise-disjoint face
 * tuples under a dimension budget, and the k-complementary n-acyclic check. */

#ifndef TVERBERG_COMPLEMENTARY_HPP
#define TVERBERG_COMPLEMENTARY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/homology.hpp"

namespace tverberg {

/// Unordered tuple of pairwise disjoint cells, kept sorted by id.
struct DisjointTuple {
    std::vector<std::string> cells;
    int total_dim = 0;

    bool operator==(const DisjointTuple&) const = default;
};

/// Subcomplex of all cells disjoint from every listed face. Throws UnknownCell.
RegularCwComplex complement(const RegularCwComplex& X, const std::vector<std::string>& faces);

/// All disjoint tuples of size 0..max_count with total dimension within the
/// budget, in size-major order, lexicographic on sorted id lists within a
/// size. The empty tuple is always first.
std::vector<DisjointTuple> enumerate_disjoint_tuples(const RegularCwComplex& X, int max_count,
                                                     int dim_budget);

/// Streaming form, same order; return false from the visitor to stop early.
void for_each_disjoint_tuple(const RegularCwComplex& X, int max_count, int dim_budget,
                             const std::function<bool(const DisjointTuple&)>& visit);

struct TupleFailure {
    DisjointTuple tuple;
    int required_level = 0;
    std::size_t complement_cells = 0;
    HomologyProfile complement_homology;
};

struct ComplementaryReport {
    std::string complex_id;
    int k = 0;
    int n = 0;
    bool pass = false;
    std::optional<TupleFailure> counterexample;  // first failure in enumeration order
    std::vector<TupleFailure> failures;          // all failures in exhaustive mode
    unsigned long long checked_count = 0;
};

/// Every complement of a tuple within the budget must be
/// (n - total_dim)-acyclic; the empty tuple checks X itself.
ComplementaryReport check_complementary_acyclic(const RegularCwComplex& X, int k, int n,
                                                bool exhaustive = false,
                                                const std::string& complex_id = "");

}  // namespace tverberg

#endif
