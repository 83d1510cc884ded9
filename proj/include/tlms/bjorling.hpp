#pragma once

#include "tlms/geometry.hpp"

namespace tlms {

enum class DegeneracyPolicy { Error, Warn };

struct BjorlingResult {
    Surface surface;
    // Set when the metric determinant vanishes over the whole detection grid:
    // the normal data is tangent-parallel and the output is a null plane
    // (or worse), not an immersed timelike surface.
    bool totally_degenerate = false;
    // Largest |det g| seen by the detection scan.
    double max_abs_det = 0.0;
};

// Reconstruct the surface with boundary position gamma and radial derivative
// `field` along the unit hyperbola, in closed coefficient form.
//
// Preconditions: gamma' lightlike, field lightlike, <gamma', field> = 0, each
// coefficient-wise within 1e-10. Under DegeneracyPolicy::Error a fully
// degenerate result raises; under Warn it is flagged on the result.
BjorlingResult solve_bjorling(const SplitCurve& gamma, const SplitCurve& field,
                              DegeneracyPolicy policy = DegeneracyPolicy::Error);

}  // namespace tlms
