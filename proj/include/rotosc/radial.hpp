#pragma once

/** \file radial.hpp
 *
 *  Bound-state and continuum radial wave functions.
 *
 *  lambda = 0:  R = N r^l F(-n_r, l + 3/2, M omega r^2) exp(-M omega r^2 / 2)
 *  lambda != 0: R = N (1 + lambda omega^2 r^2)^p r^l
 *                     2F1(-n_r, 2p + l + n_r; l + 3/2; -lambda omega^2 r^2)
 *  continuum (lambda > 0, nu <= 0):
 *               R = (1 + lambda omega^2 r^2)^{p_-} r^l
 *                     2F1(p_- + l/2 -+ i sqrt(-nu); l + 3/2; -lambda omega^2 r^2)
 *
 *  Norms use the radial scalar product
 *      <R, R'> = int_0^{r0} r^2 dr (1 + lambda omega^2 r^2)^{-3/2} R* R'
 *  under which the radial operator is self-adjoint.  Normalization fixes
 *  <R, R> = 1 with N > 0 and R(0+) > 0.
 */

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rotosc/model.hpp"
#include "rotosc/quadrature.hpp"
#include "rotosc/specfun.hpp"
#include "rotosc/spectrum.hpp"

namespace rotosc::radial {

/// Weight of the radial scalar product, w(r) = r^2 (1 + lambda omega^2 r^2)^{-3/2}.
inline double scalar_product_weight(const ModelParams& params, double r) {
    const double beta = 1.0 + params.lambda * params.omega * params.omega * r * r;
    return r * r / (beta * std::sqrt(beta));
}

/// beta^p evaluated as exp(p log1p(lambda omega^2 r^2)); keeps full relative
/// accuracy when |p| is huge and the argument tiny (lambda -> 0 limits).
inline double beta_pow(const ModelParams& params, double r, double p) {
    const double t = params.lambda * params.omega * params.omega * r * r;
    return std::exp(p * std::log1p(t));
}

enum class Kind { bound, continuum };

struct RadialState {
    ModelParams params;
    QuantumNumbers qn;
    Kind kind;
    std::optional<double> p_used;        ///< absent on the lambda = 0 branch
    std::optional<double> energy;        ///< continuum always; bound when E^2 > 0
    std::optional<double> norm_constant; ///< set by with_norm (bound only)
};

/// Bound state (n_r, l).  Construction does not enforce the lambda > 0
/// cutoff n <= n_max; a state beyond it is detected by norm_squared.
inline RadialState make_bound_state(const ModelParams& params, int n_r, int l, int m = 0) {
    QuantumNumbers qn(n_r, l, m);
    RadialState st{params, qn, Kind::bound, {}, {}, {}};
    if (!params.minkowski_branch()) st.p_used = derive(params, l).p_selected;
    const double E2 = spectrum::detail::energy_squared_unchecked(params, qn.n(), l);
    if (E2 > 0.0) st.energy = std::sqrt(E2);
    return st;
}

/// Continuum state at energy E (lambda > 0, E at or above the threshold of
/// the continuous spectrum for this l).
inline RadialState make_continuum_state(const ModelParams& params, double E, int l, int m = 0) {
    if (params.minkowski_branch() || params.lambda < 0.0)
        throw std::domain_error("continuum states exist only for lambda > 0");
    const double lam = params.lambda, w2 = params.omega * params.omega;
    const double lhs = E * E - (1.0 + lam) * w2 * static_cast<double>(l) * (l + 1);
    const double rhs = (1.0 + 1.0 / lam) * params.mass * params.mass;
    if (!(lhs >= rhs))
        throw std::domain_error("continuum state below the continuous-spectrum threshold");
    RadialState st{params, QuantumNumbers(0, l, m), Kind::continuum, {}, E, {}};
    st.p_used = derive(params, l).p_minus;
    return st;
}

inline void check_radius(const ModelParams& params, double r) {
    if (!(r >= 0.0)) throw std::domain_error("radial: r >= 0 required");
    const double r0 = params.horizon_radius();
    if (r > r0 * (1.0 - 1e-12))
        throw std::domain_error("radial: point at or outside the event horizon");
}

/// Closed-form radial function with N = 1.
inline double radial_unnormalized(const RadialState& st, double r) {
    check_radius(st.params, r);
    const ModelParams& pp = st.params;
    const int l = st.qn.l;
    const double c = l + 1.5;
    const double rl = (l == 0) ? 1.0 : std::pow(r, l);
    if (st.kind == Kind::continuum) {
        const double E = *st.energy;
        const auto d = derive(pp, l);
        const double nu = d.nu(E * E);
        const double y = -pp.lambda * pp.omega * pp.omega * r * r;
        const double p = *st.p_used;
        double F;
        if (nu < 0.0) {
            const std::complex<double> a(p + 0.5 * l, -std::sqrt(-nu));
            F = specfun::gauss_2f1(a, c, y);
        } else {
            // exactly at threshold: degenerate real pair
            const double a = p + 0.5 * l;
            F = specfun::gauss_2f1(a, a, c, y);
        }
        return beta_pow(pp, r, p) * rl * F;
    }
    if (pp.minkowski_branch()) {
        const double z = pp.mass * pp.omega * r * r;
        return rl * specfun::kummer_poly(st.qn.n_r, c, z) * std::exp(-0.5 * z);
    }
    const double y = -pp.lambda * pp.omega * pp.omega * r * r;
    const double p = *st.p_used;
    const double b = 2.0 * p + l + st.qn.n_r;
    return beta_pow(pp, r, p) * rl * specfun::gauss_2f1_poly(st.qn.n_r, b, c, y);
}

/// Analytic dR/dr of the bound-state closed form (N = 1), via the
/// hypergeometric derivative identities.
inline double radial_derivative_unnormalized(const RadialState& st, double r) {
    if (st.kind != Kind::bound)
        throw std::invalid_argument("radial_derivative: bound states only");
    check_radius(st.params, r);
    const ModelParams& pp = st.params;
    const int l = st.qn.l, nr = st.qn.n_r;
    const double c = l + 1.5;
    const double rl = (l == 0) ? 1.0 : std::pow(r, l);
    const double rlm = (l == 0) ? 0.0 : l * ((l == 1) ? 1.0 : std::pow(r, l - 1));
    if (pp.minkowski_branch()) {
        const double Mw = pp.mass * pp.omega;
        const double z = Mw * r * r, dz = 2.0 * Mw * r;
        const double K = specfun::kummer_poly(nr, c, z);
        const double dK = (nr == 0) ? 0.0
                                    : (-nr / c) * specfun::kummer_poly(nr - 1, c + 1.0, z);
        const double e = std::exp(-0.5 * z);
        return e * (rlm * K + rl * dK * dz - 0.5 * rl * K * dz);
    }
    const double lam = pp.lambda, w2 = pp.omega * pp.omega;
    const double y = -lam * w2 * r * r, dy = -2.0 * lam * w2 * r;
    const double p = *st.p_used;
    const double b = 2.0 * p + l + nr;
    const double G = specfun::gauss_2f1_poly(nr, b, c, y);
    const double dG = (nr == 0) ? 0.0
                                : (-nr * b / c) * specfun::gauss_2f1_poly(nr - 1, b + 1.0, c + 1.0, y);
    const double bp = beta_pow(pp, r, p);
    const double beta = 1.0 + lam * w2 * r * r;
    const double dbeta = 2.0 * lam * w2 * r;
    return bp * (p * dbeta / beta * rl * G + rlm * G + rl * dG * dy);
}

/// <R, R> under the radial scalar product.  For lambda >= 0 the infinite
/// tail is extended by radius doubling; failure to converge signals a
/// non-normalizable (misclassified) state and throws.
inline double norm_squared(const RadialState& st) {
    if (st.kind != Kind::bound)
        throw std::invalid_argument("norm_squared: bound states only");
    const ModelParams& pp = st.params;
    auto f = [&](double r) {
        const double R = radial_unnormalized(st, r);
        return R * R * scalar_product_weight(pp, r);
    };
    if (!pp.minkowski_branch() && pp.lambda < 0.0) {
        const double r0 = pp.horizon_radius();
        auto res = quadrature::integrate(f, 0.0, r0 * (1.0 - 1e-12), 1e-13);
        if (!res.converged)
            throw std::runtime_error("norm_squared: quadrature failed to converge");
        return res.value;
    }
    const double core = std::sqrt((st.qn.n() + 1.5) / (pp.mass * pp.omega));
    auto res = quadrature::integrate_to_infinity(f, 0.0, 8.0 * core, 1e-13);
    if (!res.converged)
        throw std::runtime_error(
            "norm_squared: tail integral did not converge; the state appears "
            "non-normalizable (n > n_max?)");
    return res.value;
}

/// Copy of the state with norm_constant = 1/sqrt(<R,R>) filled in.
inline RadialState with_norm(const RadialState& st) {
    RadialState out = st;
    out.norm_constant = 1.0 / std::sqrt(norm_squared(st));
    return out;
}

inline double radial_normalized(const RadialState& st, double r) {
    if (!st.norm_constant)
        throw std::logic_error("radial_normalized: call with_norm first");
    return *st.norm_constant * radial_unnormalized(st, r);
}

/// <A, B> for two normalized bound states of the same model.
inline double inner_product(const RadialState& a, const RadialState& b) {
    if (!a.norm_constant || !b.norm_constant)
        throw std::logic_error("inner_product: normalized states required");
    const ModelParams& pp = a.params;
    auto f = [&](double r) {
        return radial_normalized(a, r) * radial_normalized(b, r) *
               scalar_product_weight(pp, r);
    };
    if (!pp.minkowski_branch() && pp.lambda < 0.0) {
        const double r0 = pp.horizon_radius();
        return quadrature::integrate(f, 0.0, r0 * (1.0 - 1e-12), 1e-12, 1e-13).value;
    }
    const double core = std::sqrt((std::max(a.qn.n(), b.qn.n()) + 1.5) / (pp.mass * pp.omega));
    auto res = quadrature::integrate_to_infinity(f, 0.0, 8.0 * core, 1e-12, 1e-13);
    return res.value;
}

/// Number of interior sign changes of R; equals n_r for a valid bound
/// state.  The scan is refined until the count is stable; if it has not
/// stabilised by 2^20 cells a resolution error is thrown.
inline int count_nodes(const RadialState& st, int grid_resolution = 4096) {
    if (st.kind != Kind::bound)
        throw std::invalid_argument("count_nodes: bound states only");
    if (grid_resolution < 16)
        throw std::invalid_argument("count_nodes: resolution too small");
    const ModelParams& pp = st.params;
    double r_hi;
    if (!pp.minkowski_branch() && pp.lambda < 0.0) {
        r_hi = pp.horizon_radius() * (1.0 - 1e-9);
    } else {
        // Cauchy bound on the roots of the degree-n_r hypergeometric factor,
        // mapped back to r.
        const int nr = st.qn.n_r;
        const int l = st.qn.l;
        const double c = l + 1.5;
        std::vector<double> coef(nr + 1);
        coef[0] = 1.0;
        for (int k = 0; k < nr; ++k) {
            double ratio;
            if (pp.minkowski_branch())
                ratio = static_cast<double>(-nr + k) / ((c + k) * (k + 1.0));
            else {
                const double b = 2.0 * *st.p_used + l + nr;
                ratio = static_cast<double>(-nr + k) * (b + k) / ((c + k) * (k + 1.0));
            }
            coef[k + 1] = coef[k] * ratio;
        }
        double root_bound = 1.0;
        for (int k = 0; k < nr; ++k)
            root_bound = std::max(root_bound, 1.0 + std::abs(coef[k] / coef[nr]));
        const double scale =
            pp.minkowski_branch() ? pp.mass * pp.omega
                                  : std::abs(pp.lambda) * pp.omega * pp.omega;
        r_hi = 1.05 * std::sqrt(root_bound / scale);
    }
    int prev_count = -1;
    for (int cells = grid_resolution; cells <= (1 << 20); cells *= 2) {
        int count = 0;
        double prev = radial_unnormalized(st, r_hi / cells);
        for (int i = 2; i <= cells; ++i) {
            const double cur = radial_unnormalized(st, i * r_hi / cells);
            if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur))
                ++count;
            if (cur != 0.0) prev = cur;
        }
        if (count == prev_count) return count;
        prev_count = count;
    }
    throw std::runtime_error("count_nodes: node count did not stabilise by 2^20 cells");
}

/// Continuum radial function (unnormalized; these are the non-square-
/// integrable solutions, no delta-normalization scheme is applied).
inline double continuum_radial(const ModelParams& params, double E, int l, double r) {
    return radial_unnormalized(make_continuum_state(params, E, l), r);
}

enum class Frequency { positive, negative };

/// e^{-+ i E t} / sqrt(2E)
inline std::complex<double> mode_time_factor(double E, double t, Frequency dir) {
    if (!(E > 0.0)) throw std::domain_error("mode_time_factor: E > 0 required");
    const double phase = (dir == Frequency::positive ? -1.0 : 1.0) * E * t;
    return std::polar(1.0 / std::sqrt(2.0 * E), phase);
}

/// Time factor applied to the radial value (normalized when a norm constant
/// is present).  The angular factor Y_lm is the caller's business; only the
/// (l, m) labels are carried.
inline std::complex<double> mode_function(const RadialState& st, double t, double r,
                                          Frequency dir) {
    if (!st.energy) throw std::domain_error("mode_function: state has no energy");
    const double Rv =
        st.norm_constant ? radial_normalized(st, r) : radial_unnormalized(st, r);
    return mode_time_factor(*st.energy, t, dir) * Rv;
}

} // namespace rotosc::radial
