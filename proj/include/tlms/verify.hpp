#pragma once

#include <utility>
#include <vector>

#include "tlms/geometry.hpp"

namespace tlms {

// Everything in this header checks a Surface by evaluating it pointwise on a
// grid and differencing numerically in the Cartesian coordinates x + k'y.
// None of it consults the coefficient-level derivative operators, so these
// checks are independent of the algebra that built the surface.

struct GridSpec {
    int n_rho = 33;
    int n_theta = 129;
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    double theta_lo = -2.0;
    double theta_hi = 2.0;
};

// Default scan grid: 33 x 129 over the domain clipped to [1/e, e] in rho and
// [-2, 2] in theta, inset radially by `margin` so the widest difference
// stencil stays inside the domain.
GridSpec default_grid(const Surface& s, double margin = 2e-3);

// Max over the grid (componentwise sup) of the second-difference wave
// residual [F(x+d,y) - 2F + F(x-d,y)]/d^2 - [F(x,y+d) - 2F + F(x,y-d)]/d^2.
double fd_wave_residual(const Surface& s, const GridSpec& grid, double delta);

// Max over the grid of |<F_x,F_x> + <F_y,F_y>| and |<F_x,F_y>| with
// central-difference first derivatives.
std::pair<double, double> fd_conformality(const Surface& s, const GridSpec& grid, double delta);

enum class SurfaceClass { Timelike, Degenerate, Mixed };

inline const char* to_string(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::Timelike: return "Timelike";
        case SurfaceClass::Degenerate: return "Degenerate";
        case SurfaceClass::Mixed: return "Mixed";
    }
    return "Unknown";
}

struct VerificationReport {
    double wave_residual_max = 0.0;
    double conformal_residual_max = 0.0;
    double cross_residual_max = 0.0;
    double det_min = 0.0;
    double det_max = 0.0;
    std::vector<Polar> singular_points;
    SurfaceClass classification = SurfaceClass::Mixed;
    GridSpec grid;
    double delta_first = 0.0;
    double delta_second = 0.0;
    double tol = 0.0;
};

// Full numerical report: metric determinant range and singular points at
// first-difference step delta, wave residual at step 10 * delta, and the
// conformality residuals. Classification: Timelike when det < -tol on the
// whole grid, Degenerate when |det| <= tol on the whole grid, else Mixed.
VerificationReport metric_scan(const Surface& s, const GridSpec& grid, double delta = 1e-4,
                               double tol = 1e-6);

struct BoundaryReport {
    double position_sup = 0.0;
    double radial_sup = 0.0;
};

// Sup over a theta grid of |F(1, theta) - gamma(theta)| and of the central
// rho-difference of F at rho = 1 against the field.
BoundaryReport boundary_report(const Surface& s, const SplitCurve& gamma, const SplitCurve& field,
                               int n_theta = 401, double delta = 1e-4, double theta_lo = -2.0,
                               double theta_hi = 2.0);

}  // namespace tlms
