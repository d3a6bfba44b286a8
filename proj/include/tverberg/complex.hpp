/* Finite regular CW complexes and abstract simplicial complexes: face posets,
 * order complexes, disjointness of closed cells. Everything is combinatorial
 * and immutable after construction. */

#ifndef TVERBERG_COMPLEX_HPP
#define TVERBERG_COMPLEX_HPP

#include <string>
#include <vector>

#include "tverberg/errors.hpp"

namespace tverberg {

/// A simplex as a strictly increasing list of non-negative vertex labels.
using VertexList = std::vector<int>;

/// Abstract simplicial complex stored by its inclusion-maximal faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<VertexList>& facets() const { return facets_; }
    std::vector<int> vertices() const;

    bool empty() const { return facets_.empty(); }
    /// -1 for the empty complex.
    int dim() const;

    /// All k-faces in lexicographic order.
    std::vector<VertexList> faces_of_dim(int k) const;
    /// Number of faces of each dimension 0..dim().
    std::vector<std::size_t> face_counts() const;
    std::size_t face_count() const;
    bool has_face(const VertexList& f) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<VertexList> facets_;  // each sorted; list sorted lex; antichain
    friend SimplicialComplex build_simplicial(const std::vector<VertexList>& facets);
};

/// Reduces the input to inclusion-maximal faces. Throws EmptyFacet.
SimplicialComplex build_simplicial(const std::vector<VertexList>& facets);

struct Cell {
    std::string id;
    int dim = 0;
    std::vector<std::string> covers;  // ids of the codimension-1 faces

    bool operator==(const Cell&) const = default;
};

/// Finite regular CW complex given by its graded covering relation.
/// Cells are kept in canonical (id-lexicographic) order.
class RegularCwComplex {
public:
    RegularCwComplex() = default;

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    /// -1 for the empty complex.
    int dim() const;

    bool has_cell(const std::string& id) const;
    /// Index in cells(); throws UnknownCell.
    int index_of(const std::string& id) const;
    const Cell& cell(int index) const { return cells_[index]; }

    /// Cover indices per cell, aligned with cells().
    const std::vector<std::vector<int>>& cover_indices() const { return cover_idx_; }
    /// P_{<=x} as sorted cell indices (including x), aligned with cells().
    const std::vector<std::vector<int>>& down_sets() const { return down_; }

    bool leq(int below, int above) const;
    /// Closed cells intersect iff they share a face in the poset.
    bool disjoint(int a, int b) const;

    bool operator==(const RegularCwComplex& o) const { return cells_ == o.cells_; }

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> cover_idx_;
    std::vector<std::vector<int>> down_;

    void finish_construction();
    friend RegularCwComplex build_cw(std::vector<Cell> cells);
};

/// Validates ids, grading and non-empty boundaries; computes the face order.
/// Throws DanglingBoundary, BadGrading, NotRegular.
RegularCwComplex build_cw(std::vector<Cell> cells);

/// One cell per face; ids are sorted vertex labels joined by '-'.
RegularCwComplex as_cw(const SimplicialComplex& K);

/// Face poset of a regular CW complex: elements in canonical id order.
struct FacePoset {
    std::vector<std::string> elements;
    std::vector<int> dims;
    std::vector<std::vector<int>> down_sets;  // P_{<=x}, sorted, includes x

    std::size_t size() const { return elements.size(); }
    bool leq(int x, int y) const;
};

FacePoset face_poset(const RegularCwComplex& X);

/// Simplicial complex of strict chains; poset elements are relabeled to
/// integers by the canonical order of their ids.
SimplicialComplex order_complex(const FacePoset& P);

/// True iff no cell lies below both. Throws UnknownCell.
bool are_disjoint(const RegularCwComplex& X, const std::string& sigma, const std::string& tau);

/// Connectivity of the underlying space (union-find over the covering graph).
bool is_connected(const RegularCwComplex& X);

/// Strict regularity check: the boundary subcomplex of every cell of dim >= 1
/// must have the reduced homology of a (dim-1)-sphere. Throws NotRegular.
void validate_strict(const RegularCwComplex& X);

}  // namespace tverberg

#endif
