#pragma once

/** \file tridiag.hpp
 *  Symmetric tridiagonal eigenvalue extraction by Sturm-sequence bisection,
 *  plus inverse iteration for a single eigenvector.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rotosc::detail {

/// Number of eigenvalues of the symmetric tridiagonal (d, e) strictly
/// below x, by the Sturm/LDL^T sign count.
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                       double x) {
    const std::size_t n = d.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

/// k-th smallest eigenvalue (k is 0-based) by bisection.
inline double tridiag_eigenvalue(const std::vector<double>& d,
                                 const std::vector<double>& e, int k,
                                 double rel_tol = 1e-13) {
    const std::size_t n = d.size();
    if (n == 0 || k < 0 || static_cast<std::size_t>(k) >= n)
        throw std::invalid_argument("tridiag_eigenvalue: bad index");
    // Gerschgorin bounds
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
                           (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - off);
        hi = std::max(hi, d[i] + off);
    }
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)) + 1e-300) break;
    }
    return 0.5 * (lo + hi);
}

/// Solve (T - sigma I) x = b for tridiagonal T by LU with partial pivoting.
inline std::vector<double> tridiag_solve_shifted(const std::vector<double>& d,
                                                 const std::vector<double>& e,
                                                 double sigma, std::vector<double> b) {
    const std::size_t n = d.size();
    std::vector<double> du(n, 0.0), dm(n), du2(n, 0.0), dl(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        dm[i] = d[i] - sigma;
        if (i + 1 < n) du[i] = e[i];
        if (i > 0) dl[i] = e[i - 1];
    }
    std::vector<int> piv(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i + 1]) > std::abs(dm[i])) {
            piv[i] = 1;
            std::swap(dm[i], dl[i + 1]);
            std::swap(du[i], dm[i + 1]);
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = 0.0;
            }
            std::swap(b[i], b[i + 1]);
        }
        if (dm[i] == 0.0) dm[i] = 1e-300;
        const double m = dl[i + 1] / dm[i];
        dm[i + 1] -= m * du[i];
        if (i + 2 < n) du[i + 1] -= m * du2[i];
        b[i + 1] -= m * b[i];
    }
    if (dm[n - 1] == 0.0) dm[n - 1] = 1e-300;
    std::vector<double> x(n);
    x[n - 1] = b[n - 1] / dm[n - 1];
    if (n >= 2) x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / dm[n - 2];
    for (std::size_t ii = n; ii-- > 2;) {
        const std::size_t i = ii - 2;
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dm[i];
    }
    return x;
}

/// Eigenvector for an eigenvalue approximation via inverse iteration.
inline std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                               const std::vector<double>& e,
                                               double eigenvalue, int iterations = 3) {
    const std::size_t n = d.size();
    std::vector<double> v(n);
    // fixed quasi-random start, deterministic across runs
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        v[i] = ((s >> 11) * (1.0 / 9007199254740992.0)) - 0.5;
    }
    for (int it = 0; it < iterations; ++it) {
        v = tridiag_solve_shifted(d, e, eigenvalue, v);
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0 || !std::isfinite(nrm))
            throw std::runtime_error("tridiag_eigenvector: inverse iteration failed");
        for (double& x : v) x /= nrm;
    }
    return v;
}

} // namespace rotosc::detail
