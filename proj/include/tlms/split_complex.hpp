#pragma once

#include <algorithm>
#include <cmath>

#include "tlms/errors.hpp"

namespace tlms {

// Hyperbolic number x + k'y with k'^2 = +1. Unlike the complex numbers this
// ring has zero divisors: everything on the null cone re == +-im.
struct SplitComplex {
    double re = 0.0;
    double im = 0.0;
};

inline constexpr SplitComplex kprime{0.0, 1.0};

constexpr SplitComplex operator+(SplitComplex a, SplitComplex b) { return {a.re + b.re, a.im + b.im}; }
constexpr SplitComplex operator-(SplitComplex a, SplitComplex b) { return {a.re - b.re, a.im - b.im}; }
constexpr SplitComplex operator-(SplitComplex a) { return {-a.re, -a.im}; }
constexpr SplitComplex operator*(SplitComplex a, SplitComplex b) {
    return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr SplitComplex operator*(double s, SplitComplex a) { return {s * a.re, s * a.im}; }
constexpr SplitComplex operator*(SplitComplex a, double s) { return {a.re * s, a.im * s}; }
constexpr SplitComplex operator/(SplitComplex a, double s) { return {a.re / s, a.im / s}; }
constexpr bool operator==(SplitComplex a, SplitComplex b) { return a.re == b.re && a.im == b.im; }
constexpr bool operator!=(SplitComplex a, SplitComplex b) { return !(a == b); }

constexpr SplitComplex conj(SplitComplex z) { return {z.re, -z.im}; }

// z * conj(z) = re^2 - im^2, written in factored form so it is exact
// (and exactly zero) on the null cone.
constexpr double quad(SplitComplex z) { return (z.re - z.im) * (z.re + z.im); }

// Squared modulus with the timelike sign convention: im^2 - re^2 = -quad(z).
constexpr double sq_modulus(SplitComplex z) { return (z.im - z.re) * (z.im + z.re); }

// Component sup norm. Tolerances use this, not the quadratic form, because
// quad vanishes identically on the null cone and cannot measure smallness.
inline double mag(SplitComplex z) { return std::max(std::fabs(z.re), std::fabs(z.im)); }

inline bool is_null(SplitComplex z) {
    return std::fabs(quad(z)) <= 1e-14 * (1.0 + z.re * z.re + z.im * z.im);
}

inline SplitComplex inv(SplitComplex z) {
    if (is_null(z)) raise(Err::NullDivisor, "inverse of an element on (or near) the null cone");
    double q = quad(z);
    return {z.re / q, -z.im / q};
}

inline SplitComplex operator/(SplitComplex a, SplitComplex b) { return a * inv(b); }

// Hyperbolic exponential e^{k't} = cosh t + k' sinh t; parametrizes the unit
// hyperbola branch through 1.
inline SplitComplex exp_hyper(double t) {
    double c = std::cosh(t);
    if (std::isinf(c)) raise(Err::OutOfRange, "exp_hyper overflow");
    return {c, std::sinh(t)};
}

struct Polar {
    double rho = 0.0;
    double theta = 0.0;
};

inline SplitComplex from_polar(double rho, double theta) { return rho * exp_hyper(theta); }

// Inverse of from_polar, defined on the right wedge re > |im| only.
inline Polar to_polar(SplitComplex z) {
    double p = z.re + z.im;
    double m = z.re - z.im;
    if (!(p > 0.0) || !(m > 0.0)) raise(Err::OutsideWedge, "to_polar outside the right wedge");
    double rho = std::sqrt(p * m);
    if (!std::isfinite(rho)) raise(Err::OutOfRange, "to_polar overflow");
    return {rho, 0.5 * (std::log(p) - std::log(m))};
}

// Integer powers by binary exponentiation. Interpolation and restriction use
// this one helper for every radial power so that algebraically equal
// coefficient formulas agree to the last bit.
inline double ipow(double x, int n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double r = 1.0;
    double b = x;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1u) r *= b;
        b *= b;
    }
    return r;
}

inline SplitComplex ipow(SplitComplex z, int n) {
    if (n < 0) return ipow(inv(z), -n);
    SplitComplex r{1.0, 0.0};
    SplitComplex b = z;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1u) r = r * b;
        b = b * b;
    }
    return r;
}

}  // namespace tlms
