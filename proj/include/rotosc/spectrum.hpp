#pragma once

/** \file spectrum.hpp
 *
 *  Discrete energy levels of the deformed-oscillator family.
 *
 *  lambda = 0:  E^2 = M^2 + 2 M omega (n + 3/2) + omega^2 l(l+1)
 *  lambda != 0: E^2 = M^2 - lambda omega^2 [4p(n + 3/2) + n^2]
 *                     + (1+lambda) omega^2 l(l+1),
 *  with p = p_minus for lambda > 0 (finite spectrum, n <= n_max) and
 *  p = p_plus for lambda < 0 (countable spectrum).  For lambda > 0 the
 *  continuous spectrum is [M sqrt(1+1/lambda), inf) and discrete levels at
 *  or above that threshold are flagged as embedded.
 */

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotosc/model.hpp"

namespace rotosc::spectrum {

/// Tolerance for recognising -2 p_minus as an exact integer; at integer
/// values the square-integrability condition n < -2 p_minus is strict and
/// the borderline level is excluded (log-divergent norm).
inline constexpr double integer_snap_tol = 1e-12;

struct EnergyLevel {
    int n;
    int l;
    double E;
    double E_squared;
    int degeneracy;
    bool embedded; ///< lambda > 0 only: E >= continuum threshold
};

struct SpectrumResult {
    ModelParams params;
    std::vector<EnergyLevel> levels;
    std::optional<int> n_max;                  ///< finite for lambda > 0
    std::optional<double> continuum_threshold; ///< lambda > 0 only
    std::optional<double> E_max_bound;         ///< lambda > 0 only
    std::vector<std::string> notes;
};

namespace detail {

inline void check_selection(int n, int l) {
    if (n < 0 || l < 0 || l > n || ((n - l) % 2) != 0)
        throw std::invalid_argument(
            "spectrum: selection rule requires 0 <= l <= n with equal parity");
}

/// E^2 without the lambda > 0 cutoff check (used to probe excluded levels).
inline double energy_squared_unchecked(const ModelParams& params, int n, int l) {
    check_selection(n, l);
    const double M = params.mass, w = params.omega, lam = params.lambda;
    const double w2 = w * w, ll1 = static_cast<double>(l) * (l + 1);
    if (params.minkowski_branch())
        return M * M + 2.0 * M * w * (n + 1.5) + w2 * ll1;
    const auto d = derive(params, l);
    const double p = *d.p_selected;
    return M * M - lam * w2 * (4.0 * p * (n + 1.5) + static_cast<double>(n) * n)
           + (1.0 + lam) * w2 * ll1;
}

} // namespace detail

/// Largest n in the discrete spectrum for lambda > 0, from the strict
/// square-integrability condition n < -2 p_minus.  When -2 p_minus is an
/// integer the equality level is excluded; *discrepancy_note reports that
/// this differs from taking the plain integer part.
inline int n_max(const ModelParams& params, std::string* discrepancy_note = nullptr) {
    if (params.minkowski_branch() || params.lambda < 0.0)
        throw std::domain_error("n_max: defined only for lambda > 0");
    const auto d = derive(params, 0);
    const double t = -2.0 * *d.p_minus; // > 0 for M > 0
    const double nearest = std::round(t);
    if (std::abs(t - nearest) <= integer_snap_tol * std::max(1.0, std::abs(t))) {
        if (discrepancy_note)
            *discrepancy_note =
                "-2*p_minus = " + std::to_string(static_cast<long long>(nearest)) +
                " is an integer: strict square-integrability excludes n = -2*p_minus, "
                "one level fewer than the integer part";
        return static_cast<int>(nearest) - 1;
    }
    return static_cast<int>(std::floor(t));
}

/// Bottom of the continuous spectrum, M sqrt(1 + 1/lambda) (lambda > 0).
inline double continuum_threshold(const ModelParams& params) {
    if (params.minkowski_branch() || params.lambda < 0.0)
        throw std::domain_error("continuum_threshold: defined only for lambda > 0");
    return params.mass * std::sqrt(1.0 + 1.0 / params.lambda);
}

/// E^2 of level (n, l); enforces selection rules and, for lambda > 0, the
/// finite cutoff n <= n_max.
inline double energy_squared(const ModelParams& params, int n, int l) {
    detail::check_selection(n, l);
    if (!params.minkowski_branch() && params.lambda > 0.0 && n > n_max(params))
        throw std::domain_error("spectrum: n exceeds n_max for lambda > 0");
    return detail::energy_squared_unchecked(params, n, l);
}

inline double energy(const ModelParams& params, int n, int l) {
    return std::sqrt(energy_squared(params, n, l));
}

/// Right side of the E_max inequality, M^2 (1+1/lambda)^2 + 4 p_minus
/// omega^2 (1+lambda); evaluated as a global bound over the spectrum.
inline double energy_max_bound(const ModelParams& params) {
    if (params.minkowski_branch() || params.lambda < 0.0)
        throw std::domain_error("energy_max_bound: defined only for lambda > 0");
    const auto d = derive(params, 0);
    const double M = params.mass, lam = params.lambda, w = params.omega;
    return M * M * (1.0 + 1.0 / lam) * (1.0 + 1.0 / lam)
           + 4.0 * *d.p_minus * w * w * (1.0 + lam);
}

/// Enumerate all levels with n <= min(n_cutoff, n_max) and fill embedded
/// flags, the threshold and the E_max bound for lambda > 0.
inline SpectrumResult discrete_spectrum(const ModelParams& params, int n_cutoff) {
    if (n_cutoff < 0) throw std::invalid_argument("discrete_spectrum: n_cutoff >= 0");
    SpectrumResult res{params, {}, {}, {}, {}, {}};
    int n_top = n_cutoff;
    const bool positive = !params.minkowski_branch() && params.lambda > 0.0;
    if (positive) {
        std::string note;
        res.n_max = n_max(params, &note);
        if (!note.empty()) res.notes.push_back(note);
        res.continuum_threshold = continuum_threshold(params);
        res.E_max_bound = energy_max_bound(params);
        n_top = std::min(n_cutoff, *res.n_max);
    }
    for (int n = 0; n <= n_top; ++n) {
        for (int l : allowed_l_values(n)) {
            const double E2 = detail::energy_squared_unchecked(params, n, l);
            EnergyLevel lev{n, l, std::sqrt(E2), E2, degeneracy(l), false};
            if (positive) {
                lev.embedded = lev.E >= *res.continuum_threshold;
                if (E2 > *res.E_max_bound)
                    throw std::logic_error("discrete_spectrum: E_max bound violated");
            }
            res.levels.push_back(lev);
        }
    }
    return res;
}

struct ScanPoint {
    double parameter; ///< the varied quantity (lambda, or M/omega)
    std::optional<double> E;
    std::string note; ///< non-empty when the level does not exist
};

/// E(lambda) at fixed (n, l) over a list of lambda values; points where
/// n > n_max(lambda) are skipped with a note.
inline std::vector<ScanPoint> scan_lambda(double mass, double omega,
                                          const std::vector<double>& lambdas,
                                          int n, int l) {
    detail::check_selection(n, l);
    std::vector<ScanPoint> out;
    out.reserve(lambdas.size());
    for (double lam : lambdas) {
        ModelParams p(mass, omega, lam);
        ScanPoint pt{lam, {}, {}};
        if (!p.minkowski_branch() && lam > 0.0 && n > n_max(p)) {
            pt.note = "level (n=" + std::to_string(n) + ") above n_max=" +
                      std::to_string(n_max(p));
        } else {
            pt.E = energy(p, n, l);
        }
        out.push_back(pt);
    }
    return out;
}

} // namespace rotosc::spectrum
