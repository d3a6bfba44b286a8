/* File format for complexes plus JSON report helpers. The on-disk format is
 * structured text (JSON) so certificates stay human-auditable. */

#ifndef TVERBERG_IO_HPP
#define TVERBERG_IO_HPP

#include <optional>
#include <string>

#include "tverberg/complex.hpp"
#include "tverberg/graphs.hpp"

namespace tverberg {

/// Parsed complex file: the declared type plus the CW form everything runs on.
struct AnyComplex {
    std::string type;  // "simplicial" | "cw" | "graph"
    std::optional<SimplicialComplex> simplicial;
    std::optional<Multigraph> graph;
    RegularCwComplex cw;
};

AnyComplex parse_complex(const std::string& text);  // throws ParseError
AnyComplex load_complex(const std::string& path);   // throws ParseError

std::string simplicial_to_text(const SimplicialComplex& K);
std::string cw_to_text(const RegularCwComplex& X);
std::string graph_to_text(const Multigraph& G);

/// FNV-1a hash of the raw bytes, as "fnv1a:<16 hex digits>".
std::string digest(const std::string& bytes);

}  // namespace tverberg

#endif
