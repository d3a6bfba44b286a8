/* Deterministic constructors for the complexes used throughout the test
 * corpus: simplices and their boundaries, cross-polytope boundaries,
 * suspensions, minimal CW spheres and the small named graphs. */

#ifndef TVERBERG_GENERATORS_HPP
#define TVERBERG_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/graphs.hpp"

namespace tverberg {

/// Full n-simplex on vertices 0..n.
SimplicialComplex simplex(int n);
/// Boundary of the n-simplex (n >= 1).
SimplicialComplex boundary_simplex(int n);

/// Cycle with n vertices; C_2 is the double edge.
Multigraph cycle_graph(int n);
/// Path with n vertices (n - 1 edges).
Multigraph path_graph(int n);
/// Star with center 0 and leaves 1, 2, 3.
Multigraph y_graph();

/// Two cells in every dimension 0..d, each k-cell covering both (k-1)-cells.
RegularCwComplex minimal_cw_sphere(int d);

/// Boundary of the (d+1)-dimensional cross-polytope: vertices 2i, 2i+1 are
/// antipodal, facets pick one vertex from each pair. A simplicial d-sphere.
SimplicialComplex cross_polytope_boundary(int d);

/// Join with two fresh vertices (labels max+1, max+2).
SimplicialComplex suspension(const SimplicialComplex& K);

/// Named member of the standard test corpus. Every entry carries its CW
/// form; simplicial entries keep the simplicial form too.
struct CorpusEntry {
    std::string name;
    std::optional<SimplicialComplex> simplicial;
    RegularCwComplex cw;
    int sphere_dim = -1;  // >= 0 when the complex is a known d-sphere
};

/// The full generator corpus used by the property and acceptance tests.
std::vector<CorpusEntry> standard_corpus();

}  // namespace tverberg

#endif
