#pragma once

#include "tlms/series.hpp"

namespace tlms {

// Vector in L^3 with inner product -x1^2 + x2^2 + x3^2.
struct LVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

constexpr LVec3 operator+(LVec3 a, LVec3 b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
constexpr LVec3 operator-(LVec3 a, LVec3 b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
constexpr LVec3 operator*(double s, LVec3 a) { return {s * a.x1, s * a.x2, s * a.x3}; }
constexpr LVec3 operator/(LVec3 a, double s) { return {a.x1 / s, a.x2 / s, a.x3 / s}; }
constexpr bool operator==(LVec3 a, LVec3 b) { return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3; }

constexpr double linner(LVec3 a, LVec3 b) { return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

inline double sup_norm(LVec3 v) {
    return std::max(std::fabs(v.x1), std::max(std::fabs(v.x2), std::fabs(v.x3)));
}

// Curve in L^3 with the first two coordinates packed as w = x1 + k' x2 and a
// real-valued third component.
struct SplitCurve {
    SplitFourierSeries w;
    SplitFourierSeries third;
};

// Pointwise value; raises RealnessViolation if the third component has a
// non-real value larger than 1e-9.
LVec3 eval(const SplitCurve& c, double theta);
SplitCurve derivative(const SplitCurve& c);

// Series whose value at theta is <A(theta), B(theta)> in L^3:
//   -Re(w_A * conj(w_B)) + third_A * third_B.
// Both curves must be winding-free.
SplitFourierSeries pairing_series(const SplitCurve& a, const SplitCurve& b);

enum class Causal { Lightlike, Spacelike, Timelike, Mixed };

inline const char* to_string(Causal c) {
    switch (c) {
        case Causal::Lightlike: return "Lightlike";
        case Causal::Spacelike: return "Spacelike";
        case Causal::Timelike: return "Timelike";
        case Causal::Mixed: return "Mixed";
    }
    return "Unknown";
}

struct SampleWindow {
    double theta_lo = -2.0;
    double theta_hi = 2.0;
    int n = 401;
};

// Classify the sign of a real-valued pairing series: Lightlike when every
// coefficient is at most 1e-10 in magnitude, otherwise by sampling the sign
// on the window with tolerance 1e-10 * (1 + max coefficient magnitude).
Causal classify_pairing(const SplitFourierSeries& p, SampleWindow win = {});

// Causal character of the tangent gamma'.
Causal causal_character(const SplitCurve& gamma, SampleWindow win = {});

// Domain annulus in the radial coordinate: rho_min < rho < rho_max.
struct Annulus {
    double rho_min = 0.0;
    double rho_max = 0.0;
};

inline Annulus default_annulus() { return {std::exp(-1.0), std::exp(1.0)}; }

inline bool in_domain(const Annulus& a, double rho) { return rho > a.rho_min && rho < a.rho_max; }

// Surface in L^3: first two coordinates packed into the split-harmonic map h,
// third coordinate the real-valued map omega, parametrized over the annulus.
struct Surface {
    LaurentMap h;
    LaurentMap omega;
    Annulus domain;
};

// F(rho e^{k' theta}) = (Re h, Im h, omega). Raises RealnessViolation when
// |Im omega| > 1e-9 at the point; does not enforce the domain (callers warn).
LVec3 eval(const Surface& s, double rho, double theta);

// Restriction of the surface to the hyperbola rho = r, as a curve.
SplitCurve curve_at_radius(const Surface& s, double r);

// First fundamental form computed by central differences in the Cartesian
// coordinates (x, y) = (rho cosh theta, rho sinh theta), using effective step
// sizes (the difference of the rounded stencil abscissae). Purely numerical:
// no coefficient-level derivative identities are involved.
struct FdMetric {
    double g11 = 0.0;
    double g12 = 0.0;
    double g22 = 0.0;
    double det = 0.0;
};

FdMetric fd_metric_at(const Surface& s, double rho, double theta, double delta);

}  // namespace tlms
