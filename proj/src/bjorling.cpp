#include "tlms/bjorling.hpp"

#include <cmath>

namespace tlms {

namespace {

constexpr double kCoeffTol = 1e-10;

bool coeffs_below(const SplitFourierSeries& s, double tol) { return max_coeff_mag(s) <= tol; }

// Position data on the unit hyperbola plus radial-derivative data determine
// one split-harmonic map: matching e^{k'n theta} coefficients of
// restrict_unit and radial_derivative gives, per degree n != 0,
//   a_n + b_n = c_n  and  n(a_n - b_n) = l_n,
// and at n = 0 the pair (winding, l_0) feeds the Log coefficients.
LaurentMap solve_component(const SplitFourierSeries& pos, const SplitFourierSeries& der) {
    LaurentMap H;
    SplitComplex lsum = der.coeff(0);
    SplitComplex ldiff = kprime * pos.winding;
    H.log_z = 0.5 * (lsum + ldiff);
    H.log_zbar = 0.5 * (lsum - ldiff);
    for (const auto& [n, c] : pos.coeffs) {
        if (n == 0) {
            H.add_a(0, c);
            continue;
        }
        SplitComplex l = der.coeff(n) / static_cast<double>(n);
        H.add_a(n, 0.5 * (c + l));
        H.add_b(n, 0.5 * (c - l));
    }
    for (const auto& [n, l] : der.coeffs) {
        if (n == 0 || pos.coeffs.count(n)) continue;
        SplitComplex ln = l / static_cast<double>(n);
        H.add_a(n, 0.5 * ln);
        H.add_b(n, -0.5 * ln);
    }
    return H;
}

double fd_det(const Surface& s, double rho, double theta, double delta) {
    return fd_metric_at(s, rho, theta, delta).det;
}

}  // namespace

BjorlingResult solve_bjorling(const SplitCurve& gamma, const SplitCurve& field,
                              DegeneracyPolicy policy) {
    SplitCurve gd = derivative(gamma);
    if (!coeffs_below(pairing_series(gd, gd), kCoeffTol))
        raise(Err::NotLightlikeCurve, "boundary curve tangent is not lightlike");
    if (!coeffs_below(pairing_series(field, field), kCoeffTol))
        raise(Err::NotLightlikeField, "normal data field is not lightlike");
    if (!coeffs_below(pairing_series(gd, field), kCoeffTol))
        raise(Err::NotOrthogonal, "normal data field is not orthogonal to the curve tangent");

    BjorlingResult result;
    result.surface.h = solve_component(gamma.w, field.w);
    result.surface.omega = solve_component(gamma.third, field.third);
    result.surface.domain = default_annulus();

    // Degeneracy scan: if det g vanishes on the whole grid the surface is not
    // an immersion anywhere we can see, so the hypothesis behind the
    // construction fails. Thresholds scale with the squared coefficient size
    // because det g is quadratic in each first derivative.
    const Surface& s = result.surface;
    double m = std::max(max_coeff_mag(s.h), max_coeff_mag(s.omega));
    double tol = 1e-10 * (1.0 + m * m);
    constexpr double kDelta = 1e-4;
    constexpr int kNRho = 33;
    constexpr int kNTheta = 129;
    double rho_lo = s.domain.rho_min + 2.0 * kDelta;
    double rho_hi = s.domain.rho_max - 2.0 * kDelta;
    double max_abs = 0.0;
    for (int i = 0; i < kNRho; ++i) {
        double rho = rho_lo + (rho_hi - rho_lo) * i / (kNRho - 1);
        for (int j = 0; j < kNTheta; ++j) {
            double theta = -2.0 + 4.0 * j / (kNTheta - 1);
            max_abs = std::max(max_abs, std::fabs(fd_det(s, rho, theta, kDelta)));
        }
    }
    result.max_abs_det = max_abs;
    if (max_abs <= tol) {
        result.totally_degenerate = true;
        if (policy == DegeneracyPolicy::Error)
            raise(Err::TotallyDegenerate, "metric determinant vanishes on the whole sample grid");
    }
    return result;
}

}  // namespace tlms
