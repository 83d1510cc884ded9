#include "tlms/verify.hpp"

#include <algorithm>
#include <cmath>

namespace tlms {

namespace {

double grid_rho(const GridSpec& g, int i) {
    return g.rho_lo + (g.rho_hi - g.rho_lo) * i / (g.n_rho - 1);
}

double grid_theta(const GridSpec& g, int j) {
    return g.theta_lo + (g.theta_hi - g.theta_lo) * j / (g.n_theta - 1);
}

void check_grid(const Surface& s, const GridSpec& g, double delta) {
    if (g.n_rho < 2 || g.n_theta < 2 || !(g.rho_lo <= g.rho_hi) || !(g.theta_lo <= g.theta_hi))
        raise(Err::GridOutsideDomain, "malformed verification grid");
    if (g.rho_lo < s.domain.rho_min + 2.0 * delta || g.rho_hi > s.domain.rho_max - 2.0 * delta)
        raise(Err::GridOutsideDomain,
              "grid rho range leaves no stencil margin inside the surface domain");
}

LVec3 eval_xy(const Surface& s, double x, double y) {
    Polar p = to_polar({x, y});
    return eval(s, p.rho, p.theta);
}

}  // namespace

GridSpec default_grid(const Surface& s, double margin) {
    GridSpec g;
    g.rho_lo = std::max(s.domain.rho_min, std::exp(-1.0)) + margin;
    g.rho_hi = std::min(s.domain.rho_max, std::exp(1.0)) - margin;
    return g;
}

double fd_wave_residual(const Surface& s, const GridSpec& grid, double delta) {
    if (!(delta > 0.0)) raise(Err::GridOutsideDomain, "step size must be positive");
    check_grid(s, grid, delta);
    double d2 = delta * delta;
    double worst = 0.0;
    for (int i = 0; i < grid.n_rho; ++i) {
        for (int j = 0; j < grid.n_theta; ++j) {
            SplitComplex z = from_polar(grid_rho(grid, i), grid_theta(grid, j));
            double x = z.re;
            double y = z.im;
            LVec3 f0 = eval_xy(s, x, y);
            LVec3 dxx = (eval_xy(s, x + delta, y) - 2.0 * f0 + eval_xy(s, x - delta, y)) / d2;
            LVec3 dyy = (eval_xy(s, x, y + delta) - 2.0 * f0 + eval_xy(s, x, y - delta)) / d2;
            worst = std::max(worst, sup_norm(dxx - dyy));
        }
    }
    return worst;
}

std::pair<double, double> fd_conformality(const Surface& s, const GridSpec& grid, double delta) {
    if (!(delta > 0.0)) raise(Err::GridOutsideDomain, "step size must be positive");
    check_grid(s, grid, delta);
    double conf = 0.0;
    double cross = 0.0;
    for (int i = 0; i < grid.n_rho; ++i) {
        for (int j = 0; j < grid.n_theta; ++j) {
            FdMetric m = fd_metric_at(s, grid_rho(grid, i), grid_theta(grid, j), delta);
            conf = std::max(conf, std::fabs(m.g11 + m.g22));
            cross = std::max(cross, std::fabs(m.g12));
        }
    }
    return {conf, cross};
}

VerificationReport metric_scan(const Surface& s, const GridSpec& grid, double delta, double tol) {
    if (!(delta > 0.0)) raise(Err::GridOutsideDomain, "step size must be positive");
    VerificationReport rep;
    rep.grid = grid;
    rep.delta_first = delta;
    rep.delta_second = 10.0 * delta;
    rep.tol = tol;
    check_grid(s, grid, rep.delta_second);

    bool first = true;
    bool all_below = true;
    bool all_neg = true;
    for (int i = 0; i < grid.n_rho; ++i) {
        for (int j = 0; j < grid.n_theta; ++j) {
            double rho = grid_rho(grid, i);
            double theta = grid_theta(grid, j);
            FdMetric m = fd_metric_at(s, rho, theta, delta);
            if (first) {
                rep.det_min = rep.det_max = m.det;
                first = false;
            } else {
                rep.det_min = std::min(rep.det_min, m.det);
                rep.det_max = std::max(rep.det_max, m.det);
            }
            if (std::fabs(m.det) <= tol)
                rep.singular_points.push_back({rho, theta});
            else
                all_below = false;
            if (!(m.det < -tol)) all_neg = false;
        }
    }
    if (all_neg)
        rep.classification = SurfaceClass::Timelike;
    else if (all_below)
        rep.classification = SurfaceClass::Degenerate;
    else
        rep.classification = SurfaceClass::Mixed;

    rep.wave_residual_max = fd_wave_residual(s, grid, rep.delta_second);
    auto [conf, cross] = fd_conformality(s, grid, delta);
    rep.conformal_residual_max = conf;
    rep.cross_residual_max = cross;
    return rep;
}

BoundaryReport boundary_report(const Surface& s, const SplitCurve& gamma, const SplitCurve& field,
                               int n_theta, double delta, double theta_lo, double theta_hi) {
    BoundaryReport rep;
    double rp = 1.0 + delta;
    double rm = 1.0 - delta;
    double spread = rp - rm;
    for (int j = 0; j < n_theta; ++j) {
        double theta = theta_lo + (theta_hi - theta_lo) * j / (n_theta - 1);
        rep.position_sup =
            std::max(rep.position_sup, sup_norm(eval(s, 1.0, theta) - eval(gamma, theta)));
        LVec3 dr = (eval(s, rp, theta) - eval(s, rm, theta)) / spread;
        rep.radial_sup = std::max(rep.radial_sup, sup_norm(dr - eval(field, theta)));
    }
    return rep;
}

}  // namespace tlms
