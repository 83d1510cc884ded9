#pragma once

#include <random>

#include "tlms/geometry.hpp"
#include "tlms/series.hpp"
#include "tlms/split_complex.hpp"

namespace fixtures {

inline tlms::SplitComplex sc(double re, double im) { return {re, im}; }

// True iff f() throws tlms::Error with exactly the expected kind.
template <typename F>
bool raises(F&& f, tlms::Err kind) {
    try {
        f();
    } catch (const tlms::Error& e) {
        return e.kind() == kind;
    } catch (...) {
        return false;
    }
    return false;
}

// gamma(t) = (sinh t, cosh t, t): lightlike, w = k' e^{k't}, third = t.
inline tlms::SplitCurve null_helix() {
    tlms::SplitCurve g;
    g.w.set(1, sc(0.0, 1.0));
    g.third.winding = sc(1.0, 0.0);
    return g;
}

// L = gamma': w = e^{k't}, third = 1. Parallel to the tangent, so the
// reconstruction collapses to a null plane.
inline tlms::SplitCurve helix_tangent() {
    tlms::SplitCurve l;
    l.w.set(1, sc(1.0, 0.0));
    l.third.set(0, sc(1.0, 0.0));
    return l;
}

// L = cosh t * gamma': still lightlike and tangent-orthogonal, but the
// varying scale makes the reconstructed surface genuinely immersed away
// from the unit hyperbola.
inline tlms::SplitCurve cosh_tangent() {
    tlms::SplitCurve l;
    l.w.set(0, sc(0.5, 0.0));
    l.w.set(2, sc(0.5, 0.0));
    l.third.set(1, sc(0.5, 0.0));
    l.third.set(-1, sc(0.5, 0.0));
    return l;
}

// gamma(t) = (cosh t, sinh t, sinh t): spacelike closed-form test curve.
inline tlms::SplitCurve spacelike_curve() {
    tlms::SplitCurve g;
    g.w.set(1, sc(1.0, 0.0));
    g.third.set(1, sc(0.0, 0.5));
    g.third.set(-1, sc(0.0, -0.5));
    return g;
}

// F = (x, y, 0), the flat timelike plane.
inline tlms::Surface flat_plane() {
    tlms::Surface s;
    s.h.add_a(1, sc(1.0, 0.0));
    s.domain = tlms::default_annulus();
    return s;
}

inline double rand_in(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

inline tlms::SplitComplex rand_sc(std::mt19937_64& rng, double scale = 1.0) {
    double re = rand_in(rng, -scale, scale);
    double im = rand_in(rng, -scale, scale);
    return {re, im};
}

// Winding-free series with full support |n| <= max_deg.
inline tlms::SplitFourierSeries rand_series(std::mt19937_64& rng, int max_deg,
                                            double scale = 1.0) {
    tlms::SplitFourierSeries s;
    for (int n = -max_deg; n <= max_deg; ++n) s.set(n, rand_sc(rng, scale));
    return s;
}

// Winding-free real-valued series: real mean, coeffs[-n] = conj(coeffs[n]).
inline tlms::SplitFourierSeries rand_real_series(std::mt19937_64& rng, int max_deg,
                                                 double scale = 1.0) {
    tlms::SplitFourierSeries s;
    s.set(0, {rand_in(rng, -scale, scale), 0.0});
    for (int n = 1; n <= max_deg; ++n) {
        tlms::SplitComplex c = rand_sc(rng, scale);
        s.set(n, c);
        s.set(-n, tlms::conj(c));
    }
    return s;
}

// Curve with an arbitrary w component and a genuinely real third component,
// so pointwise evaluation is defined everywhere.
inline tlms::SplitCurve rand_curve(std::mt19937_64& rng, int max_deg, double scale = 1.0) {
    tlms::SplitCurve c;
    c.w = rand_series(rng, max_deg, scale);
    c.third = rand_real_series(rng, max_deg, scale);
    return c;
}

// Largest componentwise difference between two coefficient maps, including
// degrees present on only one side.
inline double series_gap(const tlms::SplitFourierSeries& a, const tlms::SplitFourierSeries& b) {
    double gap = tlms::mag(a.winding - b.winding);
    for (const auto& [n, c] : a.coeffs) gap = std::max(gap, tlms::mag(c - b.coeff(n)));
    for (const auto& [n, c] : b.coeffs) gap = std::max(gap, tlms::mag(a.coeff(n) - c));
    return gap;
}

inline double map_gap(const tlms::LaurentMap& a, const tlms::LaurentMap& b) {
    double gap = std::max(tlms::mag(a.log_z - b.log_z), tlms::mag(a.log_zbar - b.log_zbar));
    auto visit = [&](const tlms::LaurentMap& x, const tlms::LaurentMap& y) {
        for (const auto& [n, t] : x.terms) {
            tlms::LaurentTerm u = y.term(n);
            gap = std::max(gap, tlms::mag(t.a - u.a));
            gap = std::max(gap, tlms::mag(t.b - u.b));
        }
    };
    visit(a, b);
    visit(b, a);
    return gap;
}

inline double surface_gap(const tlms::Surface& a, const tlms::Surface& b) {
    return std::max(map_gap(a.h, b.h), map_gap(a.omega, b.omega));
}

}  // namespace fixtures
