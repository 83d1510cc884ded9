#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tlms/bjorling.hpp"
#include "tlms/interpolate.hpp"

using namespace tlms;
using fixtures::map_gap;
using fixtures::raises;
using fixtures::sc;
using fixtures::series_gap;

TEST_SUITE("bjorling") {

TEST_CASE("closed-form null plane from tangent data") {
    BjorlingResult res = solve_bjorling(fixtures::null_helix(), fixtures::helix_tangent(),
                                        DegeneracyPolicy::Warn);
    const Surface& s = res.surface;

    LaurentMap h_want;
    h_want.add_a(1, sc(0.5, 0.5));
    h_want.add_b(1, sc(-0.5, 0.5));
    CHECK(map_gap(s.h, h_want) <= 1e-12);

    LaurentMap w_want;
    w_want.log_z = sc(0.5, 0.5);
    w_want.log_zbar = sc(0.5, -0.5);
    CHECK(map_gap(s.omega, w_want) <= 1e-12);

    CHECK(minimality_residual(s.h, s.omega).empty());
    CHECK(res.totally_degenerate);
    CHECK(res.max_abs_det <= 1e-9);
    CHECK(s.domain.rho_min == doctest::Approx(std::exp(-1.0)));
    CHECK(s.domain.rho_max == doctest::Approx(std::exp(1.0)));

    // Closed form: F = ((rho e^t - e^{-t}/rho)/2, (rho e^t + e^{-t}/rho)/2, log rho + t).
    for (double rho : {0.5, 1.0, 2.0}) {
        for (double t : {-1.0, 0.0, 0.7}) {
            LVec3 f = eval(s, rho, t);
            double u = 0.5 * (rho * std::exp(t) - std::exp(-t) / rho);
            double v = 0.5 * (rho * std::exp(t) + std::exp(-t) / rho);
            LVec3 want{u, v, std::log(rho) + t};
            CHECK(sup_norm(f - want) <= 1e-12 * (1.0 + sup_norm(want)));
        }
    }

    CHECK(raises(
        [&] { solve_bjorling(fixtures::null_helix(), fixtures::helix_tangent(),
                             DegeneracyPolicy::Error); },
        Err::TotallyDegenerate));
}

TEST_CASE("nondegenerate reconstruction") {
    BjorlingResult res = solve_bjorling(fixtures::null_helix(), fixtures::cosh_tangent());
    const Surface& s = res.surface;

    LaurentMap h_want;
    h_want.add_a(1, sc(0, 0.5));
    h_want.add_b(1, sc(0, 0.5));
    h_want.add_a(2, sc(0.125, 0));
    h_want.add_b(2, sc(-0.125, 0));
    h_want.log_z = sc(0.25, 0);
    h_want.log_zbar = sc(0.25, 0);
    CHECK(map_gap(s.h, h_want) <= 1e-15);

    LaurentMap w_want;
    w_want.add_a(1, sc(0.25, 0));
    w_want.add_b(1, sc(-0.25, 0));
    w_want.add_a(-1, sc(-0.25, 0));
    w_want.add_b(-1, sc(0.25, 0));
    w_want.log_z = sc(0, 0.5);
    w_want.log_zbar = sc(0, -0.5);
    CHECK(map_gap(s.omega, w_want) <= 1e-15);
    CHECK(is_real_map(s.omega));

    CHECK(minimality_residual(s.h, s.omega).empty());
    CHECK(!res.totally_degenerate);
    CHECK(res.max_abs_det > 1.0);

    // Boundary data reproduced exactly at the coefficient level.
    CHECK(series_gap(restrict_unit(s.h), fixtures::null_helix().w) <= 1e-15);
    CHECK(series_gap(restrict_unit(s.omega), fixtures::null_helix().third) <= 1e-15);
    CHECK(series_gap(radial_derivative(s.h, 1.0), fixtures::cosh_tangent().w) <= 1e-15);
    CHECK(series_gap(radial_derivative(s.omega, 1.0), fixtures::cosh_tangent().third) <= 1e-15);
}

TEST_CASE("point curve swept along a constant null direction") {
    SplitCurve origin;  // identically (0, 0, 0)
    SplitCurve field;
    field.w.set(0, sc(1, 1));
    BjorlingResult res = solve_bjorling(origin, field, DegeneracyPolicy::Warn);

    LaurentMap h_want;
    h_want.log_z = sc(0.5, 0.5);
    h_want.log_zbar = sc(0.5, 0.5);
    CHECK(map_gap(res.surface.h, h_want) <= 1e-15);
    CHECK(res.surface.omega.terms.empty());
    CHECK(res.surface.omega.log_z == sc(0, 0));
    CHECK(res.surface.omega.log_zbar == sc(0, 0));
    CHECK(minimality_residual(res.surface.h, res.surface.omega).empty());
    CHECK(res.totally_degenerate);

    // F = (log rho, log rho, 0).
    LVec3 f = eval(res.surface, 2.0, 0.8);
    CHECK(sup_norm(f - LVec3{std::log(2.0), std::log(2.0), 0.0}) <= 1e-12);
}

TEST_CASE("precondition screening") {
    CHECK(raises(
        [] { solve_bjorling(fixtures::spacelike_curve(), fixtures::helix_tangent()); },
        Err::NotLightlikeCurve));

    SplitCurve spacelike_field;
    spacelike_field.third.set(0, sc(1, 0));
    CHECK(raises([&] { solve_bjorling(fixtures::null_helix(), spacelike_field); },
                 Err::NotLightlikeField));

    SplitCurve null_const;
    null_const.w.set(0, sc(1, 1));
    CHECK(raises([&] { solve_bjorling(fixtures::null_helix(), null_const); },
                 Err::NotOrthogonal));
}

TEST_CASE("solution is linear in the data") {
    BjorlingResult base = solve_bjorling(fixtures::null_helix(), fixtures::cosh_tangent());

    auto scale_curve = [](const SplitCurve& c, double s) {
        SplitCurve r;
        r.w = s * c.w;
        r.third = s * c.third;
        return r;
    };
    auto scale_map = [](const LaurentMap& m, double s) {
        LaurentMap r;
        r.log_z = s * m.log_z;
        r.log_zbar = s * m.log_zbar;
        for (const auto& [n, t] : m.terms) {
            r.add_a(n, s * t.a);
            r.add_b(n, s * t.b);
        }
        return r;
    };

    // Power-of-two scale: every coefficient operation is exact.
    BjorlingResult doubled = solve_bjorling(scale_curve(fixtures::null_helix(), 2.0),
                                            scale_curve(fixtures::cosh_tangent(), 2.0));
    CHECK(map_gap(doubled.surface.h, scale_map(base.surface.h, 2.0)) == 0.0);
    CHECK(map_gap(doubled.surface.omega, scale_map(base.surface.omega, 2.0)) == 0.0);

    BjorlingResult stretched = solve_bjorling(scale_curve(fixtures::null_helix(), 1.7),
                                              scale_curve(fixtures::cosh_tangent(), 1.7));
    CHECK(map_gap(stretched.surface.h, scale_map(base.surface.h, 1.7)) <= 1e-15);
    CHECK(map_gap(stretched.surface.omega, scale_map(base.surface.omega, 1.7)) <= 1e-15);
}

TEST_CASE("boundary reproduction holds pointwise") {
    BjorlingResult res = solve_bjorling(fixtures::null_helix(), fixtures::cosh_tangent());
    SplitCurve gamma = fixtures::null_helix();
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double t = -2.0 + 4.0 * i / 400;
        worst = std::max(worst, sup_norm(eval(res.surface, 1.0, t) - eval(gamma, t)));
    }
    CHECK(worst <= 1e-8);
}

}  // TEST_SUITE
