#pragma once

/** \file model.hpp
 *
 *  Physical parameters, quantum numbers and derived scalars for the
 *  one-parameter family of deformed de Sitter / anti-de Sitter oscillator
 *  models.  Everything here is an immutable value type; all functions are
 *  pure and safe for unrestricted concurrent use.
 */

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotosc {

/// Sign-of-lambda regime of a model.  exactAdS is the lambda == -1 member
/// with the equidistant, l-independent spectrum.
enum class Regime { deSitterLike, minkowskiLike, antiDeSitterLike, exactAdS };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::deSitterLike:     return "deSitterLike";
        case Regime::minkowskiLike:    return "minkowskiLike";
        case Regime::antiDeSitterLike: return "antiDeSitterLike";
        case Regime::exactAdS:         return "exactAdS";
    }
    return "?";
}

/// The physical triple (M, omega, lambda) in natural units (hbar = c = 1).
/// lambda > 0 deforms de Sitter, lambda < 0 anti-de Sitter, lambda = 0 is the
/// deformed Minkowski member and lambda = -1 the exact anti-de Sitter one.
struct ModelParams {
    double mass;
    double omega;
    double lambda;
    /// |lambda| below this snaps to the lambda = 0 branch (mu = M/(lambda
    /// omega) is not representable there).
    double lambda_eps = 1e-12;

    ModelParams(double M, double w, double lam, double lam_eps = 1e-12)
        : mass(M), omega(w), lambda(lam), lambda_eps(lam_eps) {
        if (!(M > 0.0) || !std::isfinite(M))
            throw std::invalid_argument("ModelParams: mass must be positive");
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("ModelParams: omega must be positive");
        if (!std::isfinite(lam))
            throw std::invalid_argument("ModelParams: lambda must be finite");
    }

    /// True when this model is treated on the lambda = 0 branch.
    bool minkowski_branch() const { return std::abs(lambda) < lambda_eps; }

    Regime regime() const {
        if (lambda == -1.0) return Regime::exactAdS;
        if (minkowski_branch()) return Regime::minkowskiLike;
        return lambda > 0.0 ? Regime::deSitterLike : Regime::antiDeSitterLike;
    }

    /// Event-horizon radius 1/(omega sqrt(-lambda)); +inf for lambda >= 0.
    double horizon_radius() const {
        if (minkowski_branch() || lambda > 0.0)
            return std::numeric_limits<double>::infinity();
        return 1.0 / (omega * std::sqrt(-lambda));
    }
};

/// (n_r, l, m) with the derived main quantum number n = 2 n_r + l.
/// m is carried for mode labelling only; energies are m-degenerate.
struct QuantumNumbers {
    int n_r;
    int l;
    int m;

    QuantumNumbers(int nr, int ell, int mm = 0) : n_r(nr), l(ell), m(mm) {
        if (nr < 0) throw std::invalid_argument("QuantumNumbers: n_r >= 0 required");
        if (ell < 0) throw std::invalid_argument("QuantumNumbers: l >= 0 required");
        if (std::abs(mm) > ell)
            throw std::invalid_argument("QuantumNumbers: |m| <= l required");
    }

    /// Main quantum number n = 2 n_r + l.
    int n() const { return 2 * n_r + l; }

    /// Build from (n, l, m); n and l must have equal parity with l <= n.
    static QuantumNumbers from_n_l(int n, int l, int m = 0) {
        if (n < 0 || l < 0 || l > n || ((n - l) % 2) != 0)
            throw std::invalid_argument(
                "QuantumNumbers: need 0 <= l <= n with parity(l) == parity(n)");
        return QuantumNumbers((n - l) / 2, l, m);
    }
};

/// For fixed n, the allowed l values: {n, n-2, ...} down to 0 or 1,
/// returned ascending.
inline std::vector<int> allowed_l_values(int n) {
    if (n < 0) throw std::invalid_argument("allowed_l_values: n >= 0 required");
    std::vector<int> out;
    for (int l = n % 2; l <= n; l += 2) out.push_back(l);
    return out;
}

/// Energies are degenerate in m only: 2l + 1 states per (n, l).
inline int degeneracy(int l) {
    if (l < 0) throw std::invalid_argument("degeneracy: l >= 0 required");
    return 2 * l + 1;
}

/// Per-(model, l) derived scalars.  For the lambda = 0 branch mu and the
/// indicial exponents p are undefined and stored absent.
struct DerivedParams {
    ModelParams params;
    int l;
    double s;                         ///< lower indicial exponent at r = 0, s = l/2
    std::optional<double> mu;         ///< M/(lambda omega)
    std::optional<double> p_plus;     ///< larger root of 4p^2 - 6p - mu^2 = 0, >= 3/2
    std::optional<double> p_minus;    ///< smaller root, <= 0
    std::optional<double> p_selected; ///< p_minus for lambda>0, p_plus for lambda<0
    double r0;                        ///< horizon radius (inf for lambda >= 0)

    /// epsilon = E/(lambda omega); absent branch throws.
    double epsilon(double E) const {
        if (!mu) throw std::domain_error("epsilon undefined on the lambda=0 branch");
        return E / (params.lambda * params.omega);
    }

    /// The spectral parameter of the hypergeometric reduction,
    /// nu = [ (1+1/lambda) M^2 + (1+lambda) omega^2 l(l+1) - E^2 ] / (4 lambda omega^2).
    double nu(double E_squared) const {
        if (!mu) throw std::domain_error("nu undefined on the lambda=0 branch");
        const double lam = params.lambda, w2 = params.omega * params.omega;
        const double num = (1.0 + lam) * params.mass * params.mass / lam - E_squared
                           + (1.0 + lam) * w2 * static_cast<double>(l) * (l + 1);
        return num / (4.0 * lam * w2);
    }
};

/// Evaluate every derived scalar for (params, l).
inline DerivedParams derive(const ModelParams& params, int l) {
    if (l < 0) throw std::invalid_argument("derive: l >= 0 required");
    DerivedParams d{params, l, 0.5 * l, {}, {}, {}, {}, params.horizon_radius()};
    if (params.minkowski_branch()) return d;

    const double mu = params.mass / (params.lambda * params.omega);
    // roots of 4p^2 - 6p - mu^2 = 0
    const double disc = std::sqrt(1.0 + (2.0 * mu / 3.0) * (2.0 * mu / 3.0));
    d.mu = mu;
    d.p_plus = 0.75 * (1.0 + disc);
    d.p_minus = 0.75 * (1.0 - disc);
    d.p_selected = params.lambda > 0.0 ? d.p_minus : d.p_plus;
    return d;
}

} // namespace rotosc
