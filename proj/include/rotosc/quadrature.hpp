#pragma once

/** \file quadrature.hpp
 *
 *  Globally adaptive Gauss-Kronrod 7-15 quadrature plus a semi-infinite
 *  driver that extends the domain by successive doubling.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace rotosc::quadrature {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss (QUADPACK).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& integral, double& err,
          std::size_t& evals) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = wgk[7] * fc;
    double g7 = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = m * xgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += wgk[i] * fsum;
        if (i % 2 == 1) g7 += wg[i / 2] * fsum;
    }
    evals += 15;
    integral = m * k15;
    // |K15 - G7| is a conservative estimate: for smooth panels the true
    // K15 error is far below the embedded-G7 difference.
    err = std::abs(m * (k15 - g7));
}

struct Interval {
    double a, b, value, error;
};

} // namespace detail

/// Integrate f over [a, b] to |error| <= max(abs_tol, rel_tol * |value|).
template <typename F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-12,
                     double abs_tol = 1e-300, std::size_t max_intervals = 4000) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::vector<detail::Interval> heap;
    auto worse = [](const detail::Interval& x, const detail::Interval& y) {
        return x.error < y.error;
    };
    detail::Interval root{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, root.value, root.error, res.evaluations);
    heap.push_back(root);
    double total = root.value, total_err = root.error;
    while (heap.size() < max_intervals) {
        if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            res.converged = true;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        const detail::Interval top = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (top.a + top.b);
        if (mid == top.a || mid == top.b) {
            // interval at rounding resolution; accept its estimate
            heap.push_back(top);
            std::push_heap(heap.begin(), heap.end(), worse);
            res.converged = total_err <= std::max(abs_tol, 1e-10 * std::abs(total));
            break;
        }
        detail::Interval left{top.a, mid, 0.0, 0.0}, right{mid, top.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error, res.evaluations);
        detail::gk15(f, right.a, right.b, right.value, right.error, res.evaluations);
        total += left.value + right.value - top.value;
        total_err += left.error + right.error - top.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) res.converged = true;
    // re-sum from the interval list for a tighter final value
    double v = 0.0, e = 0.0;
    for (const auto& iv : heap) {
        v += iv.value;
        e += iv.error;
    }
    res.value = v;
    res.error = e;
    return res;
}

struct TailResult {
    double value = 0.0;
    bool converged = false;
    double outer_radius = 0.0;     ///< where the doubling stopped
    double last_increment = 0.0;   ///< contribution of the final octave
    std::size_t doublings = 0;
};

/// Integrate f over [a, inf) by doubling the outer radius until the last
/// octave contributes less than rel_increment_tol of the running total.
/// Non-convergence (divergent or critically slow tails) is reported, not
/// thrown.
template <typename F>
TailResult integrate_to_infinity(const F& f, double a, double initial_radius,
                                 double rel_tol = 1e-12,
                                 double rel_increment_tol = 1e-14,
                                 std::size_t max_doublings = 200) {
    TailResult out;
    double R = std::max(initial_radius, a + 1.0);
    QuadResult head = integrate(f, a, R, rel_tol);
    double total = head.value;
    for (std::size_t k = 0; k < max_doublings; ++k) {
        QuadResult inc = integrate(f, R, 2.0 * R, rel_tol);
        total += inc.value;
        R *= 2.0;
        out.doublings = k + 1;
        out.last_increment = inc.value;
        if (std::abs(inc.value) <= rel_increment_tol * std::abs(total)) {
            out.converged = true;
            break;
        }
        if (!std::isfinite(total)) break;
    }
    out.value = total;
    out.outer_radius = R;
    return out;
}

} // namespace rotosc::quadrature
