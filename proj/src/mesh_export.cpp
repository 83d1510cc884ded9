#include "tlms/mesh_export.hpp"

#include "tlms/json_io.hpp"

namespace tlms {

namespace {

void check_spec(const Surface& s, const MeshSpec& spec) {
    if (spec.n_rho < 2 || spec.n_theta < 2)
        raise(Err::GridOutsideDomain, "mesh needs at least 2 samples per direction");
    if (!(spec.rho_lo <= spec.rho_hi) || !(spec.theta_lo <= spec.theta_hi))
        raise(Err::GridOutsideDomain, "mesh ranges are empty");
    if (spec.rho_lo < s.domain.rho_min || spec.rho_hi > s.domain.rho_max)
        raise(Err::GridOutsideDomain, "mesh rho range leaves the surface domain");
}

double lerp_step(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

}  // namespace

MeshSpec default_mesh(const Surface& s) {
    MeshSpec spec;
    spec.rho_lo = s.domain.rho_min;
    spec.rho_hi = s.domain.rho_max;
    return spec;
}

void export_obj(const Surface& s, const MeshSpec& spec, const std::string& path) {
    check_spec(s, spec);
    std::string out;
    for (int i = 0; i < spec.n_rho; ++i) {
        double rho = lerp_step(spec.rho_lo, spec.rho_hi, i, spec.n_rho);
        for (int j = 0; j < spec.n_theta; ++j) {
            double theta = lerp_step(spec.theta_lo, spec.theta_hi, j, spec.n_theta);
            LVec3 v = eval(s, rho, theta);
            out += "v ";
            out += fmt17(v.x1);
            out += " ";
            out += fmt17(v.x2);
            out += " ";
            out += fmt17(v.x3);
            out += "\n";
        }
    }
    auto vid = [&spec](int i, int j) { return i * spec.n_theta + j + 1; };
    for (int i = 0; i + 1 < spec.n_rho; ++i) {
        for (int j = 0; j + 1 < spec.n_theta; ++j) {
            out += "f ";
            out += std::to_string(vid(i, j));
            out += " ";
            out += std::to_string(vid(i, j + 1));
            out += " ";
            out += std::to_string(vid(i + 1, j + 1));
            out += " ";
            out += std::to_string(vid(i + 1, j));
            out += "\n";
        }
    }
    write_text_file_atomic(path, out);
}

void export_csv(const Surface& s, const MeshSpec& spec, const std::string& path, double delta) {
    check_spec(s, spec);
    std::string out = "rho,theta,x1,x2,x3,detg\n";
    for (int i = 0; i < spec.n_rho; ++i) {
        double rho = lerp_step(spec.rho_lo, spec.rho_hi, i, spec.n_rho);
        for (int j = 0; j < spec.n_theta; ++j) {
            double theta = lerp_step(spec.theta_lo, spec.theta_hi, j, spec.n_theta);
            LVec3 v = eval(s, rho, theta);
            FdMetric m = fd_metric_at(s, rho, theta, delta);
            out += fmt17(rho);
            out += ",";
            out += fmt17(theta);
            out += ",";
            out += fmt17(v.x1);
            out += ",";
            out += fmt17(v.x2);
            out += ",";
            out += fmt17(v.x3);
            out += ",";
            out += fmt17(m.det);
            out += "\n";
        }
    }
    write_text_file_atomic(path, out);
}

}  // namespace tlms
