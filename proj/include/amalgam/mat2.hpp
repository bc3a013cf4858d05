#pragma once

// Real 2x2 unit-determinant matrices acting on the upper half-plane, plus
// the axis/fixed-point helpers used by the enumeration and intersection code.

#include "amalgam/errors.hpp"

#include <cmath>
#include <limits>

namespace amalgam {

inline constexpr double kHyperbolicTraceTol = 1e-12; // |tr| > 2 + tol <=> hyperbolic

struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }

    Mat2 inverse() const { return {d, -b, -c, a}; }

    // Renormalizes to det 1 when roundoff drift exceeds 1e-12.  With large
    // entries the determinant itself carries cancellation error of order
    // eps * max^2, so rescaling there would inject noise instead of
    // removing it; drift in that regime is relative and stays benign.
    void renormalize() {
        const double m = std::fmax(std::fmax(std::fabs(a), std::fabs(b)),
                                   std::fmax(std::fabs(c), std::fabs(d)));
        if (m > 100.0) return;
        const double dt = det();
        if (std::fabs(dt - 1.0) > 1e-12 && dt > 0.0) {
            const double s = 1.0 / std::sqrt(dt);
            a *= s; b *= s; c *= s; d *= s;
        }
    }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        Mat2 r{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
               m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
        r.renormalize();
        return r;
    }

    bool is_hyperbolic() const { return std::fabs(trace()) > 2.0 + kHyperbolicTraceTol; }

    // cosh d(i, M i) = (a^2+b^2+c^2+d^2)/2 for det-1 matrices.
    double displacement() const {
        const double q = (a * a + b * b + c * c + d * d) / 2.0;
        return std::log(q + std::sqrt(q - 1.0) * std::sqrt(q + 1.0));
    }
};

// Translation length 2*acosh(|tr|/2); throws for elliptic/parabolic input.
double trace_to_length(const Mat2& m);

// As above but given the trace directly.
double trace_to_length(double tr);

// Repelling and attracting fixed points on the boundary R u {inf} of a
// hyperbolic matrix.  infinity is encoded as HUGE_VAL.
struct AxisEndpoints {
    double repelling;
    double attracting;
    double lo() const { return std::fmin(repelling, attracting); }
    double hi() const { return std::fmax(repelling, attracting); }
};

AxisEndpoints axis_endpoints(const Mat2& m);

// Mobius action on the boundary circle; maps/returns HUGE_VAL for infinity.
double mobius_boundary(const Mat2& m, double x);

// Distance from the basepoint i to the geodesic with the given ideal
// endpoints (either may be infinite).
double dist_i_to_geodesic(double p, double q);

// Signed position along the oriented geodesic (p -> q) of its crossing
// with a transverse geodesic (r1, r2); position 0 is the foot of i.
// Returns false when the two geodesics do not cross.  When crossing,
// optionally also reports log|R1/R2| and the sign of R1, where R1, R2 are
// the images of r1, r2 under the map sending (p, q) to (0, infinity);
// these are invariant under translating (r1, r2) along (p, q) and so
// identify the crossing translate within one period.
bool geodesic_crossing(double p, double q, double r1, double r2, double* t_out,
                       double* logratio_out = nullptr, bool* r1_neg_out = nullptr);

} // namespace amalgam
