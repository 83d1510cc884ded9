#pragma once

#include <map>

#include "tlms/split_complex.hpp"

namespace tlms {

// Coefficients stored below this absolute size are dropped: every operation
// normalizes its result, so "coefficient absent" and "coefficient ~0" mean
// the same thing and exact cancellations leave no residue entries.
inline constexpr double kCoeffPrune = 1e-15;

namespace detail {

inline void normalize(std::map<int, SplitComplex>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (mag(it->second) < kCoeffPrune)
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace detail

// Finite hyperbolic Fourier series on the unit hyperbola:
//   f(theta) = winding * theta + sum_n coeffs[n] * e^{k' n theta}.
// The winding term is what lets non-periodic boundary data (helical third
// components, logarithmic radial means) live on the universal cover.
struct SplitFourierSeries {
    SplitComplex winding{};
    std::map<int, SplitComplex> coeffs;

    SplitComplex coeff(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? SplitComplex{} : it->second;
    }
    void set(int n, SplitComplex v) {
        if (mag(v) < kCoeffPrune)
            coeffs.erase(n);
        else
            coeffs[n] = v;
    }
    void add(int n, SplitComplex v) { set(n, coeff(n) + v); }
    bool winding_free() const { return winding == SplitComplex{}; }
    bool empty() const { return winding_free() && coeffs.empty(); }
};

SplitComplex eval(const SplitFourierSeries& f, double theta);
SplitFourierSeries derivative(const SplitFourierSeries& f);
SplitFourierSeries conjugate(const SplitFourierSeries& f);
// Convolution product; both factors must be winding-free.
SplitFourierSeries product(const SplitFourierSeries& a, const SplitFourierSeries& b);
// (f + conjugate(f)) / 2, computed coefficient-wise (exact halving).
SplitFourierSeries real_part(const SplitFourierSeries& f);
SplitFourierSeries operator+(const SplitFourierSeries& a, const SplitFourierSeries& b);
SplitFourierSeries operator-(const SplitFourierSeries& a, const SplitFourierSeries& b);
SplitFourierSeries operator*(double s, const SplitFourierSeries& f);
// Largest component magnitude over all coefficients and the winding.
double max_coeff_mag(const SplitFourierSeries& f);
// True when f(theta) is real for all theta: real winding, real mean, and
// coeffs[-n] == conj(coeffs[n]) to a scale-aware tolerance.
bool is_real_valued(const SplitFourierSeries& f, double tol = 1e-12);

// Laurent polynomial in z with split-complex coefficients, p(z) = sum_n c_n z^n.
struct HoloLaurent {
    std::map<int, SplitComplex> coeffs;

    SplitComplex coeff(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? SplitComplex{} : it->second;
    }
    void set(int n, SplitComplex v) {
        if (mag(v) < kCoeffPrune)
            coeffs.erase(n);
        else
            coeffs[n] = v;
    }
    void add(int n, SplitComplex v) { set(n, coeff(n) + v); }
    bool empty() const { return coeffs.empty(); }
};

// Laurent polynomial in zbar, q(z) = sum_n c_n zbar^n.
struct AntiHoloLaurent {
    std::map<int, SplitComplex> coeffs;

    SplitComplex coeff(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? SplitComplex{} : it->second;
    }
    void set(int n, SplitComplex v) {
        if (mag(v) < kCoeffPrune)
            coeffs.erase(n);
        else
            coeffs[n] = v;
    }
    void add(int n, SplitComplex v) { set(n, coeff(n) + v); }
    bool empty() const { return coeffs.empty(); }
};

SplitComplex eval(const HoloLaurent& p, SplitComplex z);
SplitComplex eval(const AntiHoloLaurent& q, SplitComplex z);
// conj(q(z)) is a Laurent polynomial in z; coefficient-wise conjugate.
HoloLaurent conjugate(const AntiHoloLaurent& q);
HoloLaurent product(const HoloLaurent& a, const HoloLaurent& b);
HoloLaurent operator-(const HoloLaurent& a, const HoloLaurent& b);
double max_coeff_mag(const HoloLaurent& p);

// One degree of a harmonic expansion: a * z^n + b * zbar^{-n}.
struct LaurentTerm {
    SplitComplex a{};
    SplitComplex b{};
};

// Split-harmonic map on the right wedge:
//   H(z) = log_z * Log z + log_zbar * Log zbar
//        + sum_n (terms[n].a * z^n + terms[n].b * zbar^{-n}).
// Log z = log rho + k' theta in wedge polar coordinates. Every coordinate
// function of a representable surface is the component of such a map.
struct LaurentMap {
    SplitComplex log_z{};
    SplitComplex log_zbar{};
    std::map<int, LaurentTerm> terms;

    LaurentTerm term(int n) const {
        auto it = terms.find(n);
        return it == terms.end() ? LaurentTerm{} : it->second;
    }
    void set(int n, LaurentTerm t) {
        if (mag(t.a) < kCoeffPrune && mag(t.b) < kCoeffPrune)
            terms.erase(n);
        else
            terms[n] = t;
    }
    void add_a(int n, SplitComplex v) {
        LaurentTerm t = term(n);
        t.a = t.a + v;
        set(n, t);
    }
    void add_b(int n, SplitComplex v) {
        LaurentTerm t = term(n);
        t.b = t.b + v;
        set(n, t);
    }
};

// Evaluate at the wedge point rho * e^{k' theta}; rho must be positive.
SplitComplex eval(const LaurentMap& H, double rho, double theta);
// Derivative in z: n a_n z^{n-1} plus log_z / z.
HoloLaurent d_z(const LaurentMap& H);
// Derivative in zbar: -n b_n zbar^{-n-1} plus log_zbar / zbar.
AntiHoloLaurent d_zbar(const LaurentMap& H);
// Boundary values on the unit hyperbola rho = 1.
SplitFourierSeries restrict_unit(const LaurentMap& H);
// Boundary values on the hyperbola rho = r > 0.
SplitFourierSeries restrict_radius(const LaurentMap& H, double r);
// d/d rho of the restriction, as a series at rho = r.
SplitFourierSeries radial_derivative(const LaurentMap& H, double r);
double max_coeff_mag(const LaurentMap& H);
// True when H(z) is real-valued: terms[-n].b == conj(terms[n].a) for all n,
// log_z + log_zbar real, and k'(log_z - log_zbar) real.
bool is_real_map(const LaurentMap& H, double tol = 1e-12);

// Exact obstruction to minimality: d_z(h) * conj(d_zbar(h)) - d_z(omega)^2.
// Identically zero exactly when (h, omega) parametrizes a timelike minimal
// (equivalently, conformal split-harmonic) surface.
HoloLaurent minimality_residual(const LaurentMap& h, const LaurentMap& omega);

}  // namespace tlms
