#include "tverberg/certify.hpp"

namespace tverberg {

std::optional<PrimePowerWitness> is_prime_power(long long r) {
    if (r <= 1) return std::nullopt;
    long long p = r;
    for (long long q = 2; q * q <= r; ++q)
        if (r % q == 0) { p = q; break; }
    long long m = r;
    int k = 0;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return std::nullopt;
    return PrimePowerWitness{r, p, k};
}

Method parse_method(const std::string& name) {
    if (name == "complementary") return Method::complementary;
    if (name == "deleted-product" || name == "deleted_product") return Method::deleted_product;
    if (name == "both") return Method::both;
    throw Error("unknown method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::complementary: return "complementary";
        case Method::deleted_product: return "deleted_product";
        default: return "both";
    }
}

namespace {

ConfEvidence conf_check(const RegularCwComplex& X, long long r, int n, std::size_t max_cells) {
    ConfEvidence ev;
    auto conf = deleted_product(X, static_cast<int>(r), max_cells);
    ev.cell_count = conf.underlying.size();
    ev.required_n = n;
    ev.acyclic = is_n_acyclic(conf.underlying, n);
    if (!conf.underlying.empty() && n >= 0)
        ev.profile = reduced_homology_up_to(conf.underlying, n);
    else
        ev.profile = reduced_homology_up_to(conf.underlying, 0);
    return ev;
}

}  // namespace

TverbergCertificate certify_tverberg(const RegularCwComplex& X, int d, long long r, Method method,
                                     std::size_t max_cells, const std::string& complex_id) {
    if (d < 1) throw Error("certify_tverberg: d must be >= 1");
    if (r < 1) throw Error("certify_tverberg: r must be >= 1");

    TverbergCertificate cert;
    cert.complex_id = complex_id;
    cert.d = d;
    cert.r = r;

    if (r == 1) {
        cert.method = "trivial";
        cert.certified = !X.empty();
        cert.reason = cert.certified ? "r = 1: any non-empty complex qualifies"
                                     : "r = 1 but the complex is empty";
        return cert;
    }

    cert.witness = is_prime_power(r);
    if (!cert.witness) {
        cert.method = "none";
        cert.certified = false;
        cert.reason = "NotPrimePower: r = " + std::to_string(r) +
                      " is not a prime power, the sufficient conditions do not apply";
        return cert;
    }

    const int n = d * static_cast<int>(r - 1) - 1;
    const int k = static_cast<int>(r - 1);

    if (method == Method::complementary || method == Method::both) {
        cert.complementary_evidence = check_complementary_acyclic(X, k, n, false, complex_id);
        if (cert.complementary_evidence->pass) {
            cert.method = "complementary";
            cert.certified = true;
            cert.reason = "complex is " + std::to_string(k) + "-complementary " +
                          std::to_string(n) + "-acyclic";
            return cert;
        }
        if (method == Method::complementary) {
            cert.method = "complementary";
            cert.certified = false;
            const auto& cx = *cert.complementary_evidence->counterexample;
            std::string cells;
            for (const auto& c : cx.tuple.cells) cells += (cells.empty() ? "" : ", ") + c;
            cert.reason = "complement of (" + cells + ") is not " +
                          std::to_string(cx.required_level) + "-acyclic";
            return cert;
        }
    }

    cert.conf_evidence = conf_check(X, r, n, max_cells);
    cert.method = "deleted_product";
    cert.certified = cert.conf_evidence->acyclic;
    if (cert.certified)
        cert.reason = "Conf_" + std::to_string(r) + " is " + std::to_string(n) + "-acyclic";
    else
        cert.reason = "Conf_" + std::to_string(r) + " is not " + std::to_string(n) + "-acyclic";
    return cert;
}

}  // namespace tverberg
