/* Shared helpers and independent oracles for the test suites. The oracles
 * never call the code paths they are checking. */

#ifndef TVERBERG_TEST_UTIL_HPP
#define TVERBERG_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tverberg/homology.hpp"

namespace tvtest {

using tverberg::Int;
using tverberg::IntegerMatrix;

// ------------------------------------------------------------ SNF oracle

/// Exact determinant, fraction-free elimination.
inline Int bareiss_det(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int pick = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pick = i; break; }
            if (pick < 0) return 0;
            std::swap(a[k], a[pick]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

/// Invariant factors via d_k = gcd of all k x k minors, s_k = d_k / d_{k-1}.
inline std::pair<std::vector<Int>, int> minor_gcd_snf(const IntegerMatrix& M) {
    const int maxk = std::min(M.rows, M.cols);
    std::vector<Int> d(maxk + 1, 0);
    d[0] = 1;
    for (int k = 1; k <= maxk; ++k) {
        Int g = 0;
        std::vector<int> rows(k), cols(k);
        std::iota(rows.begin(), rows.end(), 0);
        bool more_rows = M.rows >= k;
        while (more_rows && g != 1) {
            std::iota(cols.begin(), cols.end(), 0);
            bool more_cols = M.cols >= k;
            while (more_cols && g != 1) {
                std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = M.get(rows[i], cols[j]);
                g = gcd(g, bareiss_det(std::move(sub)));
                // next column combination
                int i = k;
                while (i > 0 && cols[i - 1] == M.cols - k + i - 1) --i;
                if (i == 0) more_cols = false;
                else {
                    ++cols[i - 1];
                    for (int j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
                }
            }
            int i = k;
            while (i > 0 && rows[i - 1] == M.rows - k + i - 1) --i;
            if (i == 0) more_rows = false;
            else {
                ++rows[i - 1];
                for (int j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
            }
        }
        d[k] = abs(g);
        if (d[k] == 0) break;
    }
    std::vector<Int> factors;
    int rank = 0;
    for (int k = 1; k <= maxk && d[k] != 0; ++k) {
        factors.push_back(d[k] / d[k - 1]);
        rank = k;
    }
    return {factors, rank};
}

// ----------------------------------------------------- prime power oracle

inline bool is_prime_bruteforce(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline std::optional<std::pair<long long, int>> prime_power_bruteforce(long long r) {
    for (long long p = 2; p <= r; ++p) {
        if (!is_prime_bruteforce(p)) continue;
        long long v = p;
        int k = 1;
        while (v < r && v <= r / p) { v *= p; ++k; }
        if (v == r) return std::make_pair(p, k);
    }
    return std::nullopt;
}

// -------------------------------------------------------------- fixtures

/// Minimal 6-vertex triangulation of the real projective plane.
inline std::vector<tverberg::VertexList> rp2_facets() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

/// Vertex set of a canonical simplicial cell id like "0-2-5".
inline std::set<int> id_vertices(const std::string& id) {
    std::set<int> out;
    std::stringstream ss(id);
    std::string part;
    while (std::getline(ss, part, '-')) out.insert(std::stoi(part));
    return out;
}

inline bool vertex_disjoint(const std::string& a, const std::string& b) {
    auto va = id_vertices(a), vb = id_vertices(b);
    return std::none_of(va.begin(), va.end(), [&](int v) { return vb.count(v) > 0; });
}

inline std::mt19937 fixed_rng(unsigned seed = 20240811u) { return std::mt19937(seed); }

}  // namespace tvtest

#endif
