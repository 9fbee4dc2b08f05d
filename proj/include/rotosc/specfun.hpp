#pragma once

/** \file specfun.hpp
 *
 *  Confluent and Gauss hypergeometric evaluation on exactly the parameter
 *  ranges the oscillator family needs:
 *
 *    - F(-n, c, z): Kummer polynomial (finite sum),
 *    - 2F1(-n, b; c; y): Gauss polynomial, any y < 1,
 *    - 2F1(a, b; c; y) for real a, b and y <= 0,
 *    - 2F1(a, conj(a); c; y) for the continuum (real result), y <= 0.
 *
 *  Series are summed with compensated (Neumaier) accumulation; arguments
 *  y < -1 go through the Pfaff transformation
 *  2F1(a,b;c;y) = (1-y)^(-a) 2F1(a, c-b; c; y/(y-1)) so the series argument
 *  always lies in [0, 1).  There is deliberately no general-purpose branch
 *  for y in (0,1) with non-polynomial parameters: bound states there are
 *  always polynomial and the lambda < 0 continuum does not exist.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace rotosc::specfun {

namespace detail {

/// Neumaier compensated accumulator.
template <typename T>
struct CompensatedSum {
    T sum{};
    T comp{};
    void add(const T& v) {
        const T t = sum + v;
        if constexpr (std::is_same_v<T, double>) {
            comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
        } else {
            // complex: compensate componentwise through the same formula
            comp += (std::norm(sum) >= std::norm(v)) ? (sum - t) + v : (v - t) + sum;
        }
        sum = t;
    }
    T value() const { return sum + comp; }
};

inline bool is_nonpositive_integer(double a) {
    return a <= 0.0 && a == std::floor(a);
}

/// Generic 2F1 power series on |y| < 1.  Stop when |term| <= 1e-17 |sum|
/// for three consecutive terms (guards small odd/even terms).
template <typename T>
T gauss_series(T a, T b, double c, double y) {
    CompensatedSum<T> acc;
    T term = T(1);
    acc.add(term);
    int small_count = 0;
    for (std::int64_t k = 0; k < 1000000; ++k) {
        const double kd = static_cast<double>(k);
        term *= (a + T(kd)) * (b + T(kd)) / ((c + kd) * (kd + 1.0)) * y;
        acc.add(term);
        if (std::abs(term) <= 1e-17 * std::abs(acc.value())) {
            if (++small_count >= 3) return acc.value();
        } else {
            small_count = 0;
        }
    }
    throw std::runtime_error("gauss_2f1: series did not converge in 1e6 terms");
}

} // namespace detail

/// Kummer polynomial F(-n_r, c, z) = sum_{k=0}^{n_r} ((-n_r)_k/(c)_k) z^k/k!.
inline double kummer_poly(int n_r, double c, double z) {
    if (n_r < 0) throw std::invalid_argument("kummer_poly: n_r >= 0 required");
    detail::CompensatedSum<double> acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 0; k < n_r; ++k) {
        term *= static_cast<double>(-n_r + k) / ((c + k) * (k + 1.0)) * z;
        acc.add(term);
    }
    return acc.value();
}

/// Gauss polynomial 2F1(-n, b; c; y), exact finite sum; valid for any y.
inline double gauss_2f1_poly(int n, double b, double c, double y) {
    if (n < 0) throw std::invalid_argument("gauss_2f1_poly: n >= 0 required");
    detail::CompensatedSum<double> acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 0; k < n; ++k) {
        term *= static_cast<double>(-n + k) * (b + k) / ((c + k) * (k + 1.0)) * y;
        acc.add(term);
    }
    return acc.value();
}

/// 2F1(a, b; c; y) for real parameters.  Polynomial a or b (non-positive
/// integer): any y < 1.  Otherwise y <= 0 only.
inline double gauss_2f1(double a, double b, double c, double y) {
    if (!(y < 1.0)) throw std::domain_error("gauss_2f1: y < 1 required");
    if (detail::is_nonpositive_integer(a))
        return gauss_2f1_poly(static_cast<int>(-a), b, c, y);
    if (detail::is_nonpositive_integer(b))
        return gauss_2f1_poly(static_cast<int>(-b), a, c, y);
    if (y > 0.0)
        throw std::domain_error(
            "gauss_2f1: non-polynomial parameters supported only for y <= 0");
    if (y >= -1.0) return detail::gauss_series<double>(a, b, c, y);
    // Pfaff: argument y/(y-1) lands in (0, 1/2]
    const double x = y / (y - 1.0);
    return std::pow(1.0 - y, -a) * detail::gauss_series<double>(a, c - b, c, x);
}

/// 2F1(a, conj(a); c; y) for the continuum's conjugate parameter pair.
/// The result is real; |Im| of the raw sum is checked against reality_tol.
inline double gauss_2f1(std::complex<double> a, double c, double y,
                        double reality_tol = 1e-12) {
    if (!(y <= 0.0)) throw std::domain_error("gauss_2f1(conj): y <= 0 required");
    const std::complex<double> b = std::conj(a);
    std::complex<double> value;
    if (y >= -1.0) {
        value = detail::gauss_series<std::complex<double>>(a, b, c, y);
    } else {
        const double x = y / (y - 1.0);
        value = std::pow(std::complex<double>(1.0 - y, 0.0), -a) *
                detail::gauss_series<std::complex<double>>(a, std::complex<double>(c) - b, c, x);
    }
    if (std::abs(value.imag()) > reality_tol * std::max(1e-300, std::abs(value.real())))
        throw std::runtime_error("gauss_2f1(conj): result failed the reality check");
    return value.real();
}

} // namespace rotosc::specfun
