#pragma once

/** \file metric.hpp
 *
 *  The deformed static metric family
 *
 *      ds^2 = (alpha/beta) dt^2 - (1/beta)(delta_ij + (omega^2/beta) x^i x^j) dx^i dx^j,
 *      alpha = 1 + (1+lambda) omega^2 r^2,   beta = 1 + lambda omega^2 r^2,
 *
 *  in Cartesian and spherical form, with closed-form determinant and inverse.
 *  The spatial block is identity plus a rank-one term, so Sherman-Morrison
 *  gives both exactly.  Signature (+,-,-,-) on 0 <= r < r0.
 */

#include <array>
#include <cmath>
#include <stdexcept>

#include "rotosc/model.hpp"

namespace rotosc::metric {

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Fraction of r0 beyond which evaluation is refused for lambda < 0.
inline constexpr double horizon_guard = 1e-12;

inline void check_domain(const ModelParams& params, double r) {
    if (!(r >= 0.0)) throw std::domain_error("metric: r >= 0 required");
    const double r0 = params.horizon_radius();
    if (r > r0 * (1.0 - horizon_guard))
        throw std::domain_error("metric: point at or outside the event horizon");
}

/// Profile functions (alpha, beta) at radius r.
inline std::pair<double, double> alpha_beta(const ModelParams& params, double r) {
    check_domain(params, r);
    const double wr2 = params.omega * params.omega * r * r;
    return {1.0 + (1.0 + params.lambda) * wr2, 1.0 + params.lambda * wr2};
}

/// Horizon radius r0 = 1/(omega sqrt(-lambda)), +inf for lambda >= 0.
inline double event_horizon(const ModelParams& params) {
    return params.horizon_radius();
}

/// Diagonal spherical components.  g_phph is returned at unit sin(theta);
/// callers multiply by sin^2(theta).  det_g likewise uses sin(theta) = 1.
struct MetricComponents {
    double g_tt;
    double g_rr;
    double g_thth;
    double g_phph;
    double alpha;
    double beta;
    double det_g;
};

inline MetricComponents metric_spherical(const ModelParams& params, double r) {
    const auto [a, b] = alpha_beta(params, r);
    MetricComponents m{};
    m.alpha = a;
    m.beta = b;
    m.g_tt = a / b;
    m.g_rr = -a / (b * b);
    m.g_thth = -r * r / b;
    m.g_phph = -r * r / b; // times sin^2(theta)
    m.det_g = -(a * a) * (r * r * r * r) / (b * b * b * b * b);
    return m;
}

/// Full Cartesian 4-metric at x = (x1, x2, x3); index 0 is time.
inline Matrix4 metric_cartesian(const ModelParams& params, const std::array<double, 3>& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const auto [a, b] = alpha_beta(params, r);
    const double w2 = params.omega * params.omega;
    Matrix4 g{};
    g[0][0] = a / b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g[i + 1][j + 1] = -(1.0 / b) * ((i == j ? 1.0 : 0.0) + w2 * x[i] * x[j] / b);
    return g;
}

/// Inverse of the Cartesian 4-metric.  The spatial inverse is
/// -beta (delta_ij - (omega^2/alpha) x^i x^j) by Sherman-Morrison.
inline Matrix4 inverse_cartesian(const ModelParams& params, const std::array<double, 3>& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const auto [a, b] = alpha_beta(params, r);
    const double w2 = params.omega * params.omega;
    Matrix4 gi{};
    gi[0][0] = b / a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            gi[i + 1][j + 1] = -b * ((i == j ? 1.0 : 0.0) - w2 * x[i] * x[j] / a);
    return gi;
}

/// det of the spatial Cartesian 3x3 block: -alpha/beta^4.
inline double spatial_det_cartesian(const ModelParams& params, double r) {
    const auto [a, b] = alpha_beta(params, r);
    return -a / (b * b * b * b);
}

/// det of the full Cartesian 4-metric: -alpha^2/beta^5.
inline double det_cartesian(const ModelParams& params, double r) {
    const auto [a, b] = alpha_beta(params, r);
    return -(a * a) / (b * b * b * b * b);
}

} // namespace rotosc::metric
