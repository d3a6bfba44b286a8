/* Discretized configuration spaces: Conf_r(X) is the subcomplex of X^r on
 * ordered r-tuples of pairwise disjoint cells. */

#ifndef TVERBERG_DELETED_PRODUCT_HPP
#define TVERBERG_DELETED_PRODUCT_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "tverberg/complex.hpp"
#include "tverberg/homology.hpp"

namespace tverberg {

inline constexpr std::size_t kDefaultConfGuard = 200000;

struct ConfComplex {
    int r = 1;
    RegularCwComplex underlying;
    /// Per cell of `underlying` (canonical order): indices into base_ids.
    std::vector<std::vector<int>> coordinates;
    std::vector<std::string> base_ids;

    /// Cell counts by dimension.
    std::map<int, std::size_t> census() const;
};

/// Throws SizeLimitExceeded when more than max_cells tuples arise.
ConfComplex deleted_product(const RegularCwComplex& X, int r,
                            std::size_t max_cells = kDefaultConfGuard);

HomologyProfile conf_homology(const RegularCwComplex& X, int r,
                              std::size_t max_cells = kDefaultConfGuard);

}  // namespace tverberg

#endif
