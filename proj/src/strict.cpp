#include "tverberg/complex.hpp"
#include "tverberg/homology.hpp"

namespace tverberg {

// Necessary condition for topological regularity: the boundary of every cell
// of dim >= 1 must look like a (dim-1)-sphere in reduced homology.
void validate_strict(const RegularCwComplex& X) {
    for (std::size_t i = 0; i < X.size(); ++i) {
        const Cell& c = X.cell(static_cast<int>(i));
        if (c.dim < 1) continue;
        std::vector<Cell> boundary;
        for (int j : X.down_sets()[static_cast<int>(i)])
            if (j != static_cast<int>(i)) boundary.push_back(X.cell(j));
        RegularCwComplex B = build_cw(std::move(boundary));
        const int sphere_dim = c.dim - 1;
        auto H = reduced_homology(B);
        bool ok = !H.is_empty_complex && B.dim() == sphere_dim;
        if (ok) {
            for (int k = 0; k <= sphere_dim && ok; ++k) {
                const auto& g = H.group(k);
                if (k == sphere_dim)
                    ok = g.betti == 1 && g.torsion.empty();
                else
                    ok = g.trivial();
            }
        }
        if (!ok)
            throw NotRegular("strict validation: boundary of cell '" + c.id +
                             "' is not a " + std::to_string(sphere_dim) + "-sphere in homology");
    }
}

}  // namespace tverberg
