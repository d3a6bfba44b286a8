/* Exact reduced integral homology via boundary matrices and Smith normal
 * form. CW complexes are handled through the order complex of their face
 * poset, so no incidence numbers are ever needed. */

#ifndef TVERBERG_HOMOLOGY_HPP
#define TVERBERG_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "tverberg/complex.hpp"

namespace tverberg {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix; only non-zero entries are stored.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Int> entries;

    void set(int r, int c, Int v);
    Int get(int r, int c) const;
    std::size_t nnz() const { return entries.size(); }
};

struct SmithResult {
    std::vector<Int> invariant_factors;  // divisibility chain d1 | d2 | ...
    int rank = 0;
};

/// Deterministic SNF: pivot of minimal absolute value, ties by lowest (row, col).
SmithResult smith_normal_form(const IntegerMatrix& M);

/// Chain complex of a simplicial complex. boundary[k] maps degree k to k-1;
/// with `reduced`, boundary[0] is the 1-row augmentation.
struct ChainComplex {
    bool reduced = false;
    std::vector<std::vector<VertexList>> basis;  // basis[k]: k-faces, lex order
    std::vector<IntegerMatrix> boundary;         // boundary[k], k = 0..dim
};

ChainComplex chain_complex(const SimplicialComplex& K, bool reduced);

/// Reduced integral homology, degree by degree: Betti rank plus the torsion
/// invariant factors (each divides the next).
struct HomologyProfile {
    bool is_empty_complex = false;
    int complex_dim = -1;
    int computed_to = -1;  // groups[0..computed_to] are valid

    struct Group {
        long long betti = 0;
        std::vector<Int> torsion;
        bool trivial() const { return betti == 0 && torsion.empty(); }
        bool operator==(const Group&) const = default;
    };
    std::vector<Group> groups;

    /// Zero beyond the complex dimension; throws if k was not computed.
    const Group& group(int k) const;
    long long betti(int k) const { return group(k).betti; }
    const std::vector<Int>& torsion(int k) const { return group(k).torsion; }
    bool trivial_up_to(int n) const;
};

/// True when the profiles agree degreewise (padding with zeros above dim).
bool same_profile(const HomologyProfile& a, const HomologyProfile& b);

HomologyProfile reduced_homology(const SimplicialComplex& K);
HomologyProfile reduced_homology(const RegularCwComplex& X);

/// Profile restricted to degrees 0..max_degree (cheaper: chain groups are
/// only built up to degree max_degree+1).
HomologyProfile reduced_homology_up_to(const SimplicialComplex& K, int max_degree);
HomologyProfile reduced_homology_up_to(const RegularCwComplex& X, int max_degree);

/// n <= -2: always true. n = -1: non-empty. n >= 0: non-empty with vanishing
/// reduced homology in all degrees <= n.
bool is_n_acyclic(const SimplicialComplex& K, int n);
bool is_n_acyclic(const RegularCwComplex& X, int n);

/// Alternating sum of cell counts. Throws EmptyComplex.
long long euler_characteristic(const SimplicialComplex& K);
long long euler_characteristic(const RegularCwComplex& X);

namespace detail {

/// Entry list for the elimination engine; values are small at construction
/// time (boundary coefficients are +-1) but grow arbitrarily during
/// elimination, hence cpp_int.
struct Triplets {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<std::pair<int, int>, Int>> data;
};

enum class PivotPolicy {
    MinAbsOrder,  // min |value|, ties by lowest (row, col)
    FillAware,  // zero-fill singletons first, then min |value| / min fill
};

SmithResult smith_engine(const Triplets& t, PivotPolicy policy);

}  // namespace detail

}  // namespace tverberg

#endif
