/* Dimension-1 study: loopless multigraphs, the (1,2)-Tverberg classifier,
 * isomorphism-reduced enumeration of small connected multigraphs and the
 * cross-check against Conf_2 connectivity. */

#ifndef TVERBERG_GRAPHS_HPP
#define TVERBERG_GRAPHS_HPP

#include <utility>
#include <vector>

#include "tverberg/complex.hpp"

namespace tverberg {

struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // endpoints normalized a < b

    bool operator==(const Multigraph&) const = default;
};

/// Validates labels and rejects loops. Throws LoopEdge.
Multigraph make_multigraph(int vertex_count, std::vector<std::pair<int, int>> edges);

/// 0-cells "v<i>", 1-cells "e<j>" in input edge order.
RegularCwComplex graph_to_cw(const Multigraph& G);

/// True iff G contains a simple cycle of length >= 3 or a vertex with at
/// least 3 distinct neighbors. Parallel edges count once.
bool classify_12_tverberg(const Multigraph& G);

/// All connected loopless multigraphs with 1..max_edges edges, one per
/// isomorphism class (canonical form: lexicographically minimal edge multiset
/// over vertex relabelings). Deterministic order. Throws GuardExceeded for
/// max_edges > 7.
std::vector<Multigraph> enumerate_connected_multigraphs(int max_edges);

/// Canonical form of a multigraph, used by the enumeration and by tests.
Multigraph canonical_form(const Multigraph& G);

struct CrosscheckRow {
    Multigraph graph;
    bool classifier = false;
    bool conf2_connected = false;
};

struct CrosscheckTable {
    int max_edges = 0;
    std::vector<CrosscheckRow> rows;
    /// Rows with Conf_2 connected but classifier false; must stay empty.
    std::vector<std::size_t> violations;
    bool sound() const { return violations.empty(); }
};

/// Throws GuardExceeded for max_edges > 6.
CrosscheckTable corpus_crosscheck(int max_edges);

}  // namespace tverberg

#endif
