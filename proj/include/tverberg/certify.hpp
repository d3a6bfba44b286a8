/* Tverberg-property certification: the prime-power gate plus either the
 * complementary-acyclicity condition or acyclicity of Conf_r(X). Both
 * conditions are sufficient only, so a failed check is inconclusive, never a
 * refutation. */

#ifndef TVERBERG_CERTIFY_HPP
#define TVERBERG_CERTIFY_HPP

#include <optional>
#include <string>

#include "tverberg/complementary.hpp"
#include "tverberg/deleted_product.hpp"

namespace tverberg {

struct PrimePowerWitness {
    long long r = 0;
    long long p = 0;
    int k = 0;  // p^k = r

    bool operator==(const PrimePowerWitness&) const = default;
};

std::optional<PrimePowerWitness> is_prime_power(long long r);

enum class Method { complementary, deleted_product, both };

Method parse_method(const std::string& name);  // throws Error on bad name
std::string method_name(Method m);

struct ConfEvidence {
    std::size_t cell_count = 0;
    int required_n = 0;
    bool acyclic = false;
    HomologyProfile profile;  // degrees 0..required_n (when required_n >= 0)
};

struct TverbergCertificate {
    std::string complex_id;
    int d = 0;
    long long r = 0;
    std::optional<PrimePowerWitness> witness;
    std::string method;  // "complementary" | "deleted_product" | "trivial" | "none"
    std::optional<ComplementaryReport> complementary_evidence;
    std::optional<ConfEvidence> conf_evidence;
    bool certified = false;
    std::string reason;
};

/// d >= 1, r >= 1. Throws SizeLimitExceeded from the deleted-product route.
TverbergCertificate certify_tverberg(const RegularCwComplex& X, int d, long long r,
                                     Method method = Method::both,
                                     std::size_t max_cells = kDefaultConfGuard,
                                     const std::string& complex_id = "");

}  // namespace tverberg

#endif
