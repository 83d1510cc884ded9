#include "tlms/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlms/bjorling.hpp"
#include "tlms/interpolate.hpp"
#include "tlms/json_io.hpp"
#include "tlms/mesh_export.hpp"
#include "tlms/verify.hpp"

namespace tlms {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitVerifyFailed = 5;
constexpr int kExitUsage = 64;

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e)
        raise(Err::ParseError, std::string(what) + ": cannot parse number \"" + std::string(s) + "\"");
    return v;
}

std::vector<double> parse_tuple(const std::string& s, size_t count, const char* what) {
    std::vector<double> vals;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        size_t end = comma == std::string::npos ? s.size() : comma;
        vals.push_back(parse_double(std::string_view(s).substr(start, end - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != count)
        raise(Err::ParseError,
              std::string(what) + ": expected " + std::to_string(count) + " comma-separated numbers");
    return vals;
}

void parse_grid_arg(const std::string& s, int& n_rho, int& n_theta) {
    size_t x = s.find('x');
    if (x == std::string::npos) raise(Err::ParseError, "--grid: expected N_RHOxN_THETA");
    auto parse_int = [](std::string_view sv) {
        int v = 0;
        auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size() || v < 2)
            raise(Err::ParseError, "--grid: sizes must be integers >= 2");
        return v;
    };
    n_rho = parse_int(std::string_view(s).substr(0, x));
    n_theta = parse_int(std::string_view(s).substr(x + 1));
}

// Explicit --tol wins, then TLMS_TOL, then the command's own default.
double resolve_tol(double cli_tol, double cmd_default) {
    if (cli_tol >= 0.0) return cli_tol;
    if (const char* env = std::getenv("TLMS_TOL")) {
        std::string s(env);
        if (!s.empty()) {
            double v = 0.0;
            auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec == std::errc{} && res.ptr == s.data() + s.size() && v > 0.0) return v;
        }
    }
    return cmd_default;
}

int exit_code_for(Err kind) {
    return kind == Err::TotallyDegenerate ? kExitDegenerate : kExitValidation;
}

struct CliState {
    double tol = -1.0;
    long long seed = 0;
    bool quiet = false;
};

void warn(std::ostream& err, bool quiet, const std::string& kind, const std::string& message) {
    if (quiet) return;
    std::string out = "{\"warning\": \"" + kind + "\", \"message\": \"" + message + "\"}\n";
    err << out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct, interpolate, and verify timelike minimal surfaces"};
    app.require_subcommand(1);
    CliState st;
    app.add_option("--tol", st.tol, "tolerance override (default: per command, or TLMS_TOL)");
    app.add_option("--seed", st.seed, "seed for randomized self-checks (reserved)");
    app.add_flag("--quiet", st.quiet, "suppress warnings");

    auto* cmd_bjorling = app.add_subcommand("bjorling", "solve the boundary reconstruction problem");
    std::string gamma_path;
    std::string field_path;
    std::string policy = "error";
    std::string out_path;
    cmd_bjorling->add_option("--gamma", gamma_path, "boundary curve JSON")->required();
    cmd_bjorling->add_option("--field", field_path, "radial derivative field JSON")->required();
    cmd_bjorling->add_option("--policy", policy, "degeneracy policy: error | warn")
        ->check(CLI::IsMember({"error", "warn"}));
    cmd_bjorling->add_option("--out", out_path, "output surface JSON")->required();

    auto* cmd_ipoint = app.add_subcommand("interp-point", "interpolate a curve to a point");
    std::string point_arg = "0,0,0";
    double r_min = 1.01;
    double r_max = 10.0;
    int grid_n = 200;
    cmd_ipoint->add_option("--gamma", gamma_path, "outer curve JSON")->required();
    cmd_ipoint->add_option("--point", point_arg, "target point \"x1,x2,x3\"");
    cmd_ipoint->add_option("--rmin", r_min, "radius search lower bound");
    cmd_ipoint->add_option("--rmax", r_max, "radius search upper bound");
    cmd_ipoint->add_option("--grid", grid_n, "radius grid size");
    cmd_ipoint->add_option("--out", out_path, "output report JSON")->required();

    auto* cmd_icurves = app.add_subcommand("interp-curves", "interpolate between two curves");
    std::string alpha_path;
    bool allow_log = false;
    cmd_icurves->add_option("--gamma", gamma_path, "outer curve JSON (at rho = r)")->required();
    cmd_icurves->add_option("--alpha", alpha_path, "inner curve JSON (at rho = 1)")->required();
    cmd_icurves->add_flag("--allow-log", allow_log, "absorb mean mismatch with a Log term");
    cmd_icurves->add_option("--rmin", r_min, "radius search lower bound");
    cmd_icurves->add_option("--rmax", r_max, "radius search upper bound");
    cmd_icurves->add_option("--grid", grid_n, "radius grid size");
    cmd_icurves->add_option("--out", out_path, "output report JSON")->required();

    auto* cmd_verify = app.add_subcommand("verify", "finite-difference verification report");
    std::string surface_path;
    std::string grid_arg;
    double delta = 1e-4;
    std::string report_path;
    cmd_verify->add_option("--surface", surface_path, "surface JSON")->required();
    cmd_verify->add_option("--grid", grid_arg, "scan grid as N_RHOxN_THETA");
    cmd_verify->add_option("--delta", delta, "first-derivative step");
    cmd_verify->add_option("--report", report_path, "output report JSON")->required();

    auto* cmd_mesh = app.add_subcommand("mesh", "export OBJ (and optional CSV) meshes");
    std::string obj_path;
    std::string csv_path;
    std::string rho_arg;
    std::string theta_arg;
    std::string mesh_grid_arg;
    double mesh_delta = 1e-4;
    cmd_mesh->add_option("--surface", surface_path, "surface JSON")->required();
    cmd_mesh->add_option("--obj", obj_path, "output OBJ path")->required();
    cmd_mesh->add_option("--csv", csv_path, "output CSV path");
    cmd_mesh->add_option("--grid", mesh_grid_arg, "mesh grid as N_RHOxN_THETA");
    cmd_mesh->add_option("--rho", rho_arg, "radial range \"lo,hi\" (default: whole domain)");
    cmd_mesh->add_option("--theta", theta_arg, "angular range \"lo,hi\" (default: -2,2)");
    cmd_mesh->add_option("--delta", mesh_delta, "CSV metric determinant step");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a surface at one point");
    std::string at_arg;
    cmd_eval->add_option("--surface", surface_path, "surface JSON")->required();
    cmd_eval->add_option("--at", at_arg, "evaluation point \"rho,theta\"")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << emit_error_json("Usage", e.what());
        return kExitUsage;
    }

    try {
        if (cmd_bjorling->parsed()) {
            SplitCurve gamma = parse_curve_json(read_text_file(gamma_path));
            SplitCurve field = parse_curve_json(read_text_file(field_path));
            DegeneracyPolicy pol =
                policy == "warn" ? DegeneracyPolicy::Warn : DegeneracyPolicy::Error;
            BjorlingResult res = solve_bjorling(gamma, field, pol);
            write_text_file_atomic(out_path, emit_surface_json(res.surface));
            if (res.totally_degenerate)
                warn(err, st.quiet, "TotallyDegenerate",
                     "metric determinant vanishes on the whole sample grid");
            return kExitOk;
        }

        if (cmd_ipoint->parsed() || cmd_icurves->parsed()) {
            SplitCurve gamma = parse_curve_json(read_text_file(gamma_path));
            double feas_tol = resolve_tol(st.tol, 1e-9);
            InterpTarget target;
            if (cmd_ipoint->parsed()) {
                std::vector<double> p = parse_tuple(point_arg, 3, "--point");
                target = LVec3{p[0], p[1], p[2]};
            } else {
                target = parse_curve_json(read_text_file(alpha_path));
            }
            std::vector<RadiusCandidate> cands =
                radius_search(gamma, target, r_min, r_max, grid_n, feas_tol, allow_log);
            bool feasible = !cands.empty() && cands.front().feasible;
            Surface best;
            if (feasible) {
                double r = cands.front().r;
                if (cmd_ipoint->parsed())
                    best = point_interpolant(gamma, std::get<LVec3>(target), r);
                else
                    best = curve_interpolant(gamma, std::get<SplitCurve>(target), r, allow_log);
            }
            write_text_file_atomic(out_path,
                                   emit_search_report_json(cands, feasible ? &best : nullptr));
            if (!feasible) {
                warn(err, st.quiet, "Infeasible", "no radius meets the residual tolerance");
                return kExitInfeasible;
            }
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            Surface s = parse_surface_json(read_text_file(surface_path));
            if (!(delta > 0.0)) raise(Err::ParseError, "--delta must be positive");
            double tol = resolve_tol(st.tol, 1e-6);
            GridSpec grid = default_grid(s, 2.0 * (10.0 * delta));
            if (!grid_arg.empty()) parse_grid_arg(grid_arg, grid.n_rho, grid.n_theta);
            VerificationReport rep = metric_scan(s, grid, delta, tol);
            write_text_file_atomic(report_path, emit_report_json(rep));
            bool failed = rep.wave_residual_max > tol || rep.conformal_residual_max > tol ||
                          rep.cross_residual_max > tol;
            return failed ? kExitVerifyFailed : kExitOk;
        }

        if (cmd_mesh->parsed()) {
            Surface s = parse_surface_json(read_text_file(surface_path));
            MeshSpec spec = default_mesh(s);
            if (!mesh_grid_arg.empty()) parse_grid_arg(mesh_grid_arg, spec.n_rho, spec.n_theta);
            if (!rho_arg.empty()) {
                std::vector<double> r = parse_tuple(rho_arg, 2, "--rho");
                spec.rho_lo = r[0];
                spec.rho_hi = r[1];
            }
            if (!theta_arg.empty()) {
                std::vector<double> t = parse_tuple(theta_arg, 2, "--theta");
                spec.theta_lo = t[0];
                spec.theta_hi = t[1];
            }
            export_obj(s, spec, obj_path);
            if (!csv_path.empty()) export_csv(s, spec, csv_path, mesh_delta);
            return kExitOk;
        }

        if (cmd_eval->parsed()) {
            Surface s = parse_surface_json(read_text_file(surface_path));
            std::vector<double> at = parse_tuple(at_arg, 2, "--at");
            LVec3 v = eval(s, at[0], at[1]);
            if (!in_domain(s.domain, at[0]))
                warn(err, st.quiet, "OutsideDomain", "evaluation point is outside the annulus");
            out << fmt17(v.x1) << " " << fmt17(v.x2) << " " << fmt17(v.x3) << "\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        err << emit_error_json(err_name(e.kind()), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << emit_error_json("Internal", e.what());
        return kExitValidation;
    }

    err << emit_error_json("Usage", "no subcommand given");
    return kExitUsage;
}

}  // namespace tlms
