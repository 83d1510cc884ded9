#pragma once

#include <string>

#include "tlms/geometry.hpp"

namespace tlms {

struct MeshSpec {
    int n_rho = 33;
    int n_theta = 129;
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    double theta_lo = -2.0;
    double theta_hi = 2.0;
};

// Full-domain mesh at the default resolution.
MeshSpec default_mesh(const Surface& s);

// Wavefront OBJ: one vertex line per grid point in row-major order (rho
// outer, theta inner), then one quad face per grid cell with 1-based indices.
// Coordinates are written verbatim (x1 x2 x3); byte output is deterministic.
void export_obj(const Surface& s, const MeshSpec& spec, const std::string& path);

// CSV with header rho,theta,x1,x2,x3,detg; detg is the finite-difference
// metric determinant at step `delta`.
void export_csv(const Surface& s, const MeshSpec& spec, const std::string& path,
                double delta = 1e-4);

}  // namespace tlms
