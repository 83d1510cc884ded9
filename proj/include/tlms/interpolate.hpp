#pragma once

#include <variant>
#include <vector>

#include "tlms/geometry.hpp"

namespace tlms {

// Surface whose boundary values are p on the unit hyperbola and gamma on the
// hyperbola rho = r > 1. gamma must be winding-free, and its mean must equal
// p within 1e-10 (the degree-zero equations are overdetermined otherwise).
// Minimality is not asserted; callers inspect minimality_conditions.
Surface point_interpolant(const SplitCurve& gamma, LVec3 p, double r);

// Surface whose boundary values are alpha at rho = 1 and gamma at rho = r.
// With allow_log = false the curve means must agree within 1e-10; with
// allow_log = true a mean mismatch is absorbed by a radial Log term. The
// curves must carry equal winding terms.
Surface curve_interpolant(const SplitCurve& gamma, const SplitCurve& alpha, double r,
                          bool allow_log = false);

struct MinimalityConditions {
    HoloLaurent residual;
    double norm = 0.0;
};

// Exact minimality obstruction of the surface plus its coefficient sup-norm.
MinimalityConditions minimality_conditions(const Surface& s);

struct RadiusCandidate {
    double r = 0.0;
    double norm = 0.0;
    bool feasible = false;
};

using InterpTarget = std::variant<LVec3, SplitCurve>;

// Scan the interpolant residual norm over a log-spaced radius grid in
// [r_min, r_max], refine each local minimum by golden section to relative
// width 1e-10, and return candidates sorted by ascending norm. A candidate is
// feasible when its norm is at most feas_tol. gamma must be spacelike or
// timelike. Deterministic for fixed inputs.
std::vector<RadiusCandidate> radius_search(const SplitCurve& gamma, const InterpTarget& target,
                                           double r_min, double r_max, int grid_n,
                                           double feas_tol = 1e-9, bool allow_log = true);

}  // namespace tlms
