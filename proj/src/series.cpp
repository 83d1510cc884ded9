#include "tlms/series.hpp"

#include <cmath>
#include <set>

namespace tlms {

SplitComplex eval(const SplitFourierSeries& f, double theta) {
    SplitComplex acc = f.winding * theta;
    for (const auto& [n, c] : f.coeffs) acc = acc + c * exp_hyper(n * theta);
    return acc;
}

SplitFourierSeries derivative(const SplitFourierSeries& f) {
    SplitFourierSeries r;
    for (const auto& [n, c] : f.coeffs) {
        if (n == 0) continue;
        r.coeffs[n] = static_cast<double>(n) * (kprime * c);
    }
    // d/dtheta of winding * theta is the constant winding.
    if (f.winding != SplitComplex{}) r.coeffs[0] = r.coeff(0) + f.winding;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries conjugate(const SplitFourierSeries& f) {
    SplitFourierSeries r;
    r.winding = conj(f.winding);
    for (const auto& [n, c] : f.coeffs) r.coeffs[-n] = conj(c);
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries product(const SplitFourierSeries& a, const SplitFourierSeries& b) {
    if (!a.winding_free() || !b.winding_free())
        raise(Err::WindingNotSupported, "product of series with a winding term");
    SplitFourierSeries r;
    for (const auto& [na, ca] : a.coeffs)
        for (const auto& [nb, cb] : b.coeffs) r.coeffs[na + nb] = r.coeff(na + nb) + ca * cb;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries real_part(const SplitFourierSeries& f) {
    SplitFourierSeries r;
    r.winding = {f.winding.re, 0.0};
    for (const auto& [n, c] : f.coeffs) r.coeffs[n] = r.coeff(n) + 0.5 * c;
    for (const auto& [n, c] : f.coeffs) r.coeffs[-n] = r.coeff(-n) + 0.5 * conj(c);
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries operator+(const SplitFourierSeries& a, const SplitFourierSeries& b) {
    SplitFourierSeries r = a;
    r.winding = a.winding + b.winding;
    for (const auto& [n, c] : b.coeffs) r.coeffs[n] = r.coeff(n) + c;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries operator-(const SplitFourierSeries& a, const SplitFourierSeries& b) {
    SplitFourierSeries r = a;
    r.winding = a.winding - b.winding;
    for (const auto& [n, c] : b.coeffs) r.coeffs[n] = r.coeff(n) - c;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries operator*(double s, const SplitFourierSeries& f) {
    SplitFourierSeries r;
    r.winding = s * f.winding;
    for (const auto& [n, c] : f.coeffs) r.coeffs[n] = s * c;
    detail::normalize(r.coeffs);
    return r;
}

double max_coeff_mag(const SplitFourierSeries& f) {
    double m = mag(f.winding);
    for (const auto& [n, c] : f.coeffs) m = std::max(m, mag(c));
    return m;
}

bool is_real_valued(const SplitFourierSeries& f, double tol) {
    if (std::fabs(f.winding.im) > tol * (1.0 + mag(f.winding))) return false;
    // Checking n and -n together over the union of stored degrees.
    for (const auto& [n, c] : f.coeffs) {
        SplitComplex d = f.coeff(-n) - conj(c);
        if (mag(d) > tol * (1.0 + std::max(mag(c), mag(f.coeff(-n))))) return false;
    }
    return true;
}

SplitComplex eval(const HoloLaurent& p, SplitComplex z) {
    SplitComplex acc{};
    for (const auto& [n, c] : p.coeffs) acc = acc + c * ipow(z, n);
    return acc;
}

SplitComplex eval(const AntiHoloLaurent& q, SplitComplex z) {
    SplitComplex zb = conj(z);
    SplitComplex acc{};
    for (const auto& [n, c] : q.coeffs) acc = acc + c * ipow(zb, n);
    return acc;
}

HoloLaurent conjugate(const AntiHoloLaurent& q) {
    HoloLaurent r;
    for (const auto& [n, c] : q.coeffs) r.coeffs[n] = conj(c);
    detail::normalize(r.coeffs);
    return r;
}

HoloLaurent product(const HoloLaurent& a, const HoloLaurent& b) {
    HoloLaurent r;
    for (const auto& [na, ca] : a.coeffs)
        for (const auto& [nb, cb] : b.coeffs) r.coeffs[na + nb] = r.coeff(na + nb) + ca * cb;
    detail::normalize(r.coeffs);
    return r;
}

HoloLaurent operator-(const HoloLaurent& a, const HoloLaurent& b) {
    HoloLaurent r = a;
    for (const auto& [n, c] : b.coeffs) r.coeffs[n] = r.coeff(n) - c;
    detail::normalize(r.coeffs);
    return r;
}

double max_coeff_mag(const HoloLaurent& p) {
    double m = 0.0;
    for (const auto& [n, c] : p.coeffs) m = std::max(m, mag(c));
    return m;
}

SplitComplex eval(const LaurentMap& H, double rho, double theta) {
    if (!(rho > 0.0)) raise(Err::DomainError, "LaurentMap eval requires rho > 0");
    double lr = std::log(rho);
    SplitComplex acc = H.log_z * SplitComplex{lr, theta} + H.log_zbar * SplitComplex{lr, -theta};
    for (const auto& [n, t] : H.terms)
        acc = acc + (t.a * ipow(rho, n) + t.b * ipow(rho, -n)) * exp_hyper(n * theta);
    return acc;
}

HoloLaurent d_z(const LaurentMap& H) {
    HoloLaurent r;
    for (const auto& [n, t] : H.terms) {
        if (n == 0) continue;
        r.coeffs[n - 1] = r.coeff(n - 1) + static_cast<double>(n) * t.a;
    }
    if (H.log_z != SplitComplex{}) r.coeffs[-1] = r.coeff(-1) + H.log_z;
    detail::normalize(r.coeffs);
    return r;
}

AntiHoloLaurent d_zbar(const LaurentMap& H) {
    AntiHoloLaurent r;
    for (const auto& [n, t] : H.terms) {
        if (n == 0) continue;
        r.coeffs[-n - 1] = r.coeff(-n - 1) - static_cast<double>(n) * t.b;
    }
    if (H.log_zbar != SplitComplex{}) r.coeffs[-1] = r.coeff(-1) + H.log_zbar;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries restrict_unit(const LaurentMap& H) {
    SplitFourierSeries r;
    r.winding = kprime * (H.log_z - H.log_zbar);
    for (const auto& [n, t] : H.terms) r.coeffs[n] = t.a + t.b;
    detail::normalize(r.coeffs);
    return r;
}

SplitFourierSeries restrict_radius(const LaurentMap& H, double r) {
    if (!(r > 0.0)) raise(Err::DomainError, "restrict_radius requires r > 0");
    SplitFourierSeries s;
    s.winding = kprime * (H.log_z - H.log_zbar);
    for (const auto& [n, t] : H.terms) s.coeffs[n] = t.a * ipow(r, n) + t.b * ipow(r, -n);
    SplitComplex lsum = (H.log_z + H.log_zbar) * std::log(r);
    if (lsum != SplitComplex{}) s.coeffs[0] = s.coeff(0) + lsum;
    detail::normalize(s.coeffs);
    return s;
}

SplitFourierSeries radial_derivative(const LaurentMap& H, double r) {
    if (!(r > 0.0)) raise(Err::DomainError, "radial_derivative requires r > 0");
    SplitFourierSeries s;
    for (const auto& [n, t] : H.terms) {
        if (n == 0) continue;
        s.coeffs[n] = static_cast<double>(n) * (t.a * ipow(r, n - 1) - t.b * ipow(r, -n - 1));
    }
    SplitComplex lsum = (H.log_z + H.log_zbar) * (1.0 / r);
    if (lsum != SplitComplex{}) s.coeffs[0] = s.coeff(0) + lsum;
    detail::normalize(s.coeffs);
    return s;
}

double max_coeff_mag(const LaurentMap& H) {
    double m = std::max(mag(H.log_z), mag(H.log_zbar));
    for (const auto& [n, t] : H.terms) m = std::max(m, std::max(mag(t.a), mag(t.b)));
    return m;
}

bool is_real_map(const LaurentMap& H, double tol) {
    SplitComplex lsum = H.log_z + H.log_zbar;
    if (std::fabs(lsum.im) > tol * (1.0 + mag(lsum))) return false;
    SplitComplex w = kprime * (H.log_z - H.log_zbar);
    if (std::fabs(w.im) > tol * (1.0 + mag(w))) return false;
    // Realness pairs degree n with degree -n: terms[-n].b == conj(terms[n].a).
    // Iterate the union of stored degrees and their negatives so a missing
    // partner term still gets checked against zero.
    std::set<int> degrees;
    for (const auto& [n, t] : H.terms) {
        degrees.insert(n);
        degrees.insert(-n);
    }
    for (int n : degrees) {
        SplitComplex a = H.term(n).a;
        SplitComplex b = H.term(-n).b;
        if (mag(b - conj(a)) > tol * (1.0 + std::max(mag(a), mag(b)))) return false;
    }
    return true;
}

HoloLaurent minimality_residual(const LaurentMap& h, const LaurentMap& omega) {
    HoloLaurent hz = d_z(h);
    HoloLaurent hzb = conjugate(d_zbar(h));
    HoloLaurent wz = d_z(omega);
    return product(hz, hzb) - product(wz, wz);
}

}  // namespace tlms
