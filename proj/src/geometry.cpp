#include "tlms/geometry.hpp"

#include <cmath>

namespace tlms {

namespace {

constexpr double kRealnessTol = 1e-9;
constexpr double kCausalTol = 1e-10;

}  // namespace

LVec3 eval(const SplitCurve& c, double theta) {
    SplitComplex w = eval(c.w, theta);
    SplitComplex t = eval(c.third, theta);
    if (std::fabs(t.im) > kRealnessTol)
        raise(Err::RealnessViolation, "third curve component is not real-valued");
    return {w.re, w.im, t.re};
}

SplitCurve derivative(const SplitCurve& c) { return {derivative(c.w), derivative(c.third)}; }

SplitFourierSeries pairing_series(const SplitCurve& a, const SplitCurve& b) {
    SplitFourierSeries s = real_part(product(a.w, conjugate(b.w)));
    SplitFourierSeries t = product(a.third, b.third);
    return t - s;
}

Causal classify_pairing(const SplitFourierSeries& p, SampleWindow win) {
    double mc = max_coeff_mag(p);
    if (mc <= kCausalTol) return Causal::Lightlike;
    double tol = kCausalTol * (1.0 + mc);
    bool all_pos = true;
    bool all_neg = true;
    for (int i = 0; i < win.n; ++i) {
        double theta = win.theta_lo + (win.theta_hi - win.theta_lo) * i / (win.n - 1);
        double v = eval(p, theta).re;
        if (!(v > tol)) all_pos = false;
        if (!(v < -tol)) all_neg = false;
    }
    if (all_pos) return Causal::Spacelike;
    if (all_neg) return Causal::Timelike;
    return Causal::Mixed;
}

Causal causal_character(const SplitCurve& gamma, SampleWindow win) {
    SplitCurve d = derivative(gamma);
    return classify_pairing(pairing_series(d, d), win);
}

LVec3 eval(const Surface& s, double rho, double theta) {
    SplitComplex h = eval(s.h, rho, theta);
    SplitComplex w = eval(s.omega, rho, theta);
    if (std::fabs(w.im) > kRealnessTol)
        raise(Err::RealnessViolation, "surface third component is not real-valued");
    return {h.re, h.im, w.re};
}

SplitCurve curve_at_radius(const Surface& s, double r) {
    return {restrict_radius(s.h, r), restrict_radius(s.omega, r)};
}

FdMetric fd_metric_at(const Surface& s, double rho, double theta, double delta) {
    SplitComplex z = from_polar(rho, theta);
    double x = z.re;
    double y = z.im;
    double xp = x + delta;
    double xm = x - delta;
    double yp = y + delta;
    double ym = y - delta;
    auto F = [&s](double u, double v) {
        Polar p = to_polar({u, v});
        return eval(s, p.rho, p.theta);
    };
    // Dividing by the spread of the rounded abscissae keeps linear functions
    // exactly linear through the stencil (no step-rounding bias).
    LVec3 fx = (F(xp, y) - F(xm, y)) / (xp - xm);
    LVec3 fy = (F(x, yp) - F(x, ym)) / (yp - ym);
    FdMetric m;
    m.g11 = linner(fx, fx);
    m.g12 = linner(fx, fy);
    m.g22 = linner(fy, fy);
    m.det = m.g11 * m.g22 - m.g12 * m.g12;
    return m;
}

}  // namespace tlms
