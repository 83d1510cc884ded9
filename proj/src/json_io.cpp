#include "tlms/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tlms {

namespace {

using njson = nlohmann::json;

void append_escaped(std::string& out, const std::string& s) {
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
}

void append_split(std::string& out, SplitComplex z) {
    out += "{\"re\": ";
    out += fmt17(z.re);
    out += ", \"im\": ";
    out += fmt17(z.im);
    out += "}";
}

void append_series(std::string& out, const SplitFourierSeries& s) {
    out += "{\"winding\": ";
    append_split(out, s.winding);
    out += ", \"coeffs\": [";
    bool first = true;
    for (const auto& [n, c] : s.coeffs) {
        if (!first) out += ", ";
        first = false;
        out += "{\"n\": ";
        out += std::to_string(n);
        out += ", \"re\": ";
        out += fmt17(c.re);
        out += ", \"im\": ";
        out += fmt17(c.im);
        out += "}";
    }
    out += "]}";
}

void append_map(std::string& out, const LaurentMap& m) {
    out += "{\"log_z\": ";
    append_split(out, m.log_z);
    out += ", \"log_zbar\": ";
    append_split(out, m.log_zbar);
    out += ", \"terms\": [";
    bool first = true;
    for (const auto& [n, t] : m.terms) {
        if (!first) out += ", ";
        first = false;
        out += "{\"n\": ";
        out += std::to_string(n);
        out += ", \"a\": ";
        append_split(out, t.a);
        out += ", \"b\": ";
        append_split(out, t.b);
        out += "}";
    }
    out += "]}";
}

void append_surface(std::string& out, const Surface& s) {
    out += "{\"h\": ";
    append_map(out, s.h);
    out += ", \"omega\": ";
    append_map(out, s.omega);
    out += ", \"domain\": {\"rho_min\": ";
    out += fmt17(s.domain.rho_min);
    out += ", \"rho_max\": ";
    out += fmt17(s.domain.rho_max);
    out += "}}";
}

const njson& require_key(const njson& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        raise(Err::ParseError, std::string(what) + ": missing key \"" + key + "\"");
    return j.at(key);
}

double require_number(const njson& j, const char* what) {
    if (!j.is_number()) raise(Err::ParseError, std::string(what) + ": expected a number");
    return j.get<double>();
}

int require_int(const njson& j, const char* what) {
    if (!j.is_number_integer()) raise(Err::ParseError, std::string(what) + ": expected an integer");
    return j.get<int>();
}

SplitComplex parse_split(const njson& j, const char* what) {
    SplitComplex z;
    z.re = require_number(require_key(j, "re", what), what);
    z.im = require_number(require_key(j, "im", what), what);
    return z;
}

SplitFourierSeries parse_series(const njson& j, const char* what) {
    SplitFourierSeries s;
    s.winding = parse_split(require_key(j, "winding", what), what);
    const njson& coeffs = require_key(j, "coeffs", what);
    if (!coeffs.is_array()) raise(Err::ParseError, std::string(what) + ": coeffs must be an array");
    for (const njson& e : coeffs) {
        int n = require_int(require_key(e, "n", what), what);
        if (s.coeffs.count(n))
            raise(Err::ParseError, std::string(what) + ": duplicate coefficient degree");
        SplitComplex c;
        c.re = require_number(require_key(e, "re", what), what);
        c.im = require_number(require_key(e, "im", what), what);
        s.set(n, c);
    }
    return s;
}

LaurentMap parse_map(const njson& j, const char* what) {
    LaurentMap m;
    m.log_z = parse_split(require_key(j, "log_z", what), what);
    m.log_zbar = parse_split(require_key(j, "log_zbar", what), what);
    const njson& terms = require_key(j, "terms", what);
    if (!terms.is_array()) raise(Err::ParseError, std::string(what) + ": terms must be an array");
    for (const njson& e : terms) {
        int n = require_int(require_key(e, "n", what), what);
        if (m.terms.count(n)) raise(Err::ParseError, std::string(what) + ": duplicate term degree");
        LaurentTerm t;
        t.a = parse_split(require_key(e, "a", what), what);
        t.b = parse_split(require_key(e, "b", what), what);
        m.set(n, t);
    }
    return m;
}

njson parse_root(const std::string& text, const char* what) {
    njson j = njson::parse(text, nullptr, false);
    if (j.is_discarded()) raise(Err::ParseError, std::string(what) + ": invalid JSON");
    return j;
}

}  // namespace

std::string fmt17(double v) {
    if (!std::isfinite(v)) raise(Err::IoError, "non-finite number in output");
    if (v == 0.0) return "0";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Err::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) raise(Err::IoError, "cannot read " + path);
    return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(Err::IoError, "cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) raise(Err::IoError, "cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        raise(Err::IoError, "cannot replace " + path);
    }
}

SplitFourierSeries parse_series_json(const std::string& text) {
    return parse_series(parse_root(text, "series"), "series");
}

SplitCurve parse_curve_json(const std::string& text) {
    njson j = parse_root(text, "curve");
    SplitCurve c;
    c.w = parse_series(require_key(j, "w", "curve"), "curve.w");
    c.third = parse_series(require_key(j, "third", "curve"), "curve.third");
    if (!is_real_valued(c.third))
        raise(Err::RealnessViolation, "curve third component is not real-valued");
    return c;
}

Surface parse_surface_json(const std::string& text) {
    njson j = parse_root(text, "surface");
    Surface s;
    s.h = parse_map(require_key(j, "h", "surface"), "surface.h");
    s.omega = parse_map(require_key(j, "omega", "surface"), "surface.omega");
    const njson& d = require_key(j, "domain", "surface");
    s.domain.rho_min = require_number(require_key(d, "rho_min", "surface.domain"), "surface.domain");
    s.domain.rho_max = require_number(require_key(d, "rho_max", "surface.domain"), "surface.domain");
    if (!(0.0 < s.domain.rho_min) || !(s.domain.rho_min < s.domain.rho_max))
        raise(Err::ParseError, "surface domain requires 0 < rho_min < rho_max");
    if (!is_real_map(s.omega))
        raise(Err::RealnessViolation, "surface third component is not real-valued");
    return s;
}

std::string emit_series_json(const SplitFourierSeries& s) {
    std::string out;
    append_series(out, s);
    out += "\n";
    return out;
}

std::string emit_curve_json(const SplitCurve& c) {
    std::string out = "{\"w\": ";
    append_series(out, c.w);
    out += ", \"third\": ";
    append_series(out, c.third);
    out += "}\n";
    return out;
}

std::string emit_surface_json(const Surface& s) {
    std::string out;
    append_surface(out, s);
    out += "\n";
    return out;
}

std::string emit_report_json(const VerificationReport& r) {
    std::string out = "{\"wave_residual_max\": ";
    out += fmt17(r.wave_residual_max);
    out += ", \"conformal_residual_max\": ";
    out += fmt17(r.conformal_residual_max);
    out += ", \"cross_residual_max\": ";
    out += fmt17(r.cross_residual_max);
    out += ", \"det_min\": ";
    out += fmt17(r.det_min);
    out += ", \"det_max\": ";
    out += fmt17(r.det_max);
    out += ", \"singular_points\": [";
    bool first = true;
    for (const Polar& p : r.singular_points) {
        if (!first) out += ", ";
        first = false;
        out += "{\"rho\": ";
        out += fmt17(p.rho);
        out += ", \"theta\": ";
        out += fmt17(p.theta);
        out += "}";
    }
    out += "], \"classification\": \"";
    out += to_string(r.classification);
    out += "\", \"grid\": {\"n_rho\": ";
    out += std::to_string(r.grid.n_rho);
    out += ", \"n_theta\": ";
    out += std::to_string(r.grid.n_theta);
    out += ", \"rho_lo\": ";
    out += fmt17(r.grid.rho_lo);
    out += ", \"rho_hi\": ";
    out += fmt17(r.grid.rho_hi);
    out += ", \"theta_lo\": ";
    out += fmt17(r.grid.theta_lo);
    out += ", \"theta_hi\": ";
    out += fmt17(r.grid.theta_hi);
    out += "}, \"delta_first\": ";
    out += fmt17(r.delta_first);
    out += ", \"delta_second\": ";
    out += fmt17(r.delta_second);
    out += ", \"tol\": ";
    out += fmt17(r.tol);
    out += "}\n";
    return out;
}

std::string emit_search_report_json(const std::vector<RadiusCandidate>& candidates,
                                    const Surface* best) {
    std::string out = "{\"candidates\": [";
    bool first = true;
    for (const RadiusCandidate& c : candidates) {
        if (!first) out += ", ";
        first = false;
        out += "{\"r\": ";
        out += fmt17(c.r);
        out += ", \"norm\": ";
        out += fmt17(c.norm);
        out += ", \"feasible\": ";
        out += c.feasible ? "true" : "false";
        out += "}";
    }
    out += "], \"surface\": ";
    if (best) {
        append_surface(out, *best);
    } else {
        out += "null";
    }
    out += "}\n";
    return out;
}

std::string emit_error_json(const std::string& kind, const std::string& message) {
    std::string out = "{\"error\": \"";
    append_escaped(out, kind);
    out += "\", \"message\": \"";
    append_escaped(out, message);
    out += "\"}\n";
    return out;
}

}  // namespace tlms
