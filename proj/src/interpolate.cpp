#include "tlms/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace tlms {

namespace {

constexpr double kMeanTol = 1e-10;
constexpr double kWindingTol = 1e-12;

SplitFourierSeries constant_series(SplitComplex c0) {
    SplitFourierSeries s;
    s.set(0, c0);
    return s;
}

// Shared two-boundary kernel: outer data at rho = r, inner data at rho = 1.
// point_interpolant calls it with a constant inner series, so the constant
// special case of the curve formulas is the point formula bit for bit.
LaurentMap interp_component(const SplitFourierSeries& outer, const SplitFourierSeries& inner,
                            double r, bool allow_log, Err mean_err) {
    LaurentMap H;
    std::set<int> degrees;
    for (const auto& [n, c] : outer.coeffs) degrees.insert(n);
    for (const auto& [n, c] : inner.coeffs) degrees.insert(n);
    for (int n : degrees) {
        if (n == 0) continue;
        SplitComplex c = outer.coeff(n);
        SplitComplex l = inner.coeff(n);
        double rn = ipow(r, n);
        double denom = rn * rn - 1.0;
        SplitComplex a = (c * rn - l) / denom;
        H.add_a(n, a);
        H.add_b(n, l - a);
    }
    H.add_a(0, inner.coeff(0));
    SplitComplex mean_gap = outer.coeff(0) - inner.coeff(0);
    SplitComplex lsum{};
    if (allow_log) {
        lsum = mean_gap / std::log(r);
    } else if (mag(mean_gap) > kMeanTol) {
        raise(mean_err, "degree-zero boundary equations are inconsistent");
    }
    SplitComplex ldiff = kprime * inner.winding;
    H.log_z = 0.5 * (lsum + ldiff);
    H.log_zbar = 0.5 * (lsum - ldiff);
    return H;
}

double golden_refine(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > 1e-10) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

Surface point_interpolant(const SplitCurve& gamma, LVec3 p, double r) {
    if (!(r > 1.0)) raise(Err::RadiusOutOfRange, "interpolation radius must exceed 1");
    if (!gamma.w.winding_free() || !gamma.third.winding_free())
        raise(Err::WindingNotSupported, "point interpolation requires a winding-free curve");
    SplitFourierSeries inner_w = constant_series({p.x1, p.x2});
    SplitFourierSeries inner_t = constant_series({p.x3, 0.0});
    Surface s;
    s.h = interp_component(gamma.w, inner_w, r, false, Err::InfeasibleMean);
    s.omega = interp_component(gamma.third, inner_t, r, false, Err::InfeasibleMean);
    s.domain = {std::exp(-1.0), r * std::exp(1.0)};
    return s;
}

Surface curve_interpolant(const SplitCurve& gamma, const SplitCurve& alpha, double r,
                          bool allow_log) {
    if (!(r > 1.0)) raise(Err::RadiusOutOfRange, "interpolation radius must exceed 1");
    SplitComplex dw = gamma.w.winding - alpha.w.winding;
    SplitComplex dt = gamma.third.winding - alpha.third.winding;
    double scale = 1.0 + std::max(mag(gamma.w.winding), mag(gamma.third.winding));
    if (mag(dw) > kWindingTol * scale || mag(dt) > kWindingTol * scale)
        raise(Err::WindingMismatch, "boundary curves carry different winding terms");
    Surface s;
    s.h = interp_component(gamma.w, alpha.w, r, allow_log, Err::MeanMismatch);
    s.omega = interp_component(gamma.third, alpha.third, r, allow_log, Err::MeanMismatch);
    s.domain = {std::exp(-1.0), r * std::exp(1.0)};
    return s;
}

MinimalityConditions minimality_conditions(const Surface& s) {
    MinimalityConditions mc;
    mc.residual = minimality_residual(s.h, s.omega);
    mc.norm = max_coeff_mag(mc.residual);
    return mc;
}

std::vector<RadiusCandidate> radius_search(const SplitCurve& gamma, const InterpTarget& target,
                                           double r_min, double r_max, int grid_n, double feas_tol,
                                           bool allow_log) {
    if (!(1.0 < r_min) || !(r_min < r_max))
        raise(Err::BadRange, "radius search requires 1 < r_min < r_max");
    if (grid_n < 8) raise(Err::BadRange, "radius search requires at least 8 grid points");
    // A constant curve has zero tangent everywhere; the causal classifier calls
    // that lightlike, but the search is still well defined (norm vanishes
    // identically), so the precondition only applies to nonconstant curves.
    bool constant_curve =
        gamma.w.winding_free() && gamma.third.winding_free() &&
        derivative(gamma.w).coeffs.empty() && derivative(gamma.third).coeffs.empty();
    if (!constant_curve) {
        Causal cc = causal_character(gamma);
        if (cc != Causal::Spacelike && cc != Causal::Timelike)
            raise(Err::NotSpaceOrTimelike, "interpolated curve must be spacelike or timelike");
    }

    auto norm_at = [&](double t) {
        double r = std::exp(t);
        Surface s;
        if (std::holds_alternative<LVec3>(target))
            s = point_interpolant(gamma, std::get<LVec3>(target), r);
        else
            s = curve_interpolant(gamma, std::get<SplitCurve>(target), r, allow_log);
        return minimality_conditions(s).norm;
    };

    double t_lo = std::log(r_min);
    double t_hi = std::log(r_max);
    std::vector<double> ts(grid_n);
    std::vector<double> norms(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        ts[i] = t_lo + (t_hi - t_lo) * i / (grid_n - 1);
        norms[i] = norm_at(ts[i]);
    }

    std::vector<RadiusCandidate> out;
    for (int i = 0; i < grid_n; ++i) {
        bool left_ok = i == 0 || norms[i] <= norms[i - 1];
        bool right_ok = i == grid_n - 1 || norms[i] <= norms[i + 1];
        if (!left_ok || !right_ok) continue;
        double lo = ts[std::max(0, i - 1)];
        double hi = ts[std::min(grid_n - 1, i + 1)];
        double t_star = lo < hi ? golden_refine(norm_at, lo, hi) : lo;
        RadiusCandidate c;
        c.r = std::exp(t_star);
        c.norm = norm_at(t_star);
        c.feasible = c.norm <= feas_tol;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const RadiusCandidate& a, const RadiusCandidate& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.r < b.r;
    });
    // Plateaus make every grid point a local minimum; collapse refined
    // candidates that landed at the same radius.
    std::vector<RadiusCandidate> dedup;
    for (const auto& c : out) {
        bool dup = false;
        for (const auto& k : dedup)
            if (std::fabs(std::log(c.r) - std::log(k.r)) <= 1e-8) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(c);
    }
    return dedup;
}

}  // namespace tlms
