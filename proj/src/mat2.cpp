#include "amalgam/mat2.hpp"
#include "amalgam/hyp.hpp"

#include <cmath>
#include <string>

namespace amalgam {

double trace_to_length(double tr) {
    const double t = std::fabs(tr);
    if (t <= 2.0 + kHyperbolicTraceTol)
        throw not_hyperbolic_error("trace_to_length: |trace| = " + std::to_string(t) +
                                   " <= 2, element is not hyperbolic");
    return 2.0 * hyp::acosh_stable(t / 2.0);
}

double trace_to_length(const Mat2& m) { return trace_to_length(m.trace()); }

AxisEndpoints axis_endpoints(const Mat2& m) {
    const double tr = m.trace();
    if (std::fabs(tr) <= 2.0 + kHyperbolicTraceTol)
        throw not_hyperbolic_error("axis_endpoints: element is not hyperbolic");
    const double disc = std::sqrt(tr * tr - 4.0);
    const double l1 = (tr + disc) / 2.0;   // |l1| > |l2| iff tr > 0
    const double l2 = (tr - disc) / 2.0;
    const double l_att = (std::fabs(l1) > std::fabs(l2)) ? l1 : l2;
    const double l_rep = (l_att == l1) ? l2 : l1;

    if (std::fabs(m.c) > 1e-14) {
        return {(l_rep - m.d) / m.c, (l_att - m.d) / m.c};
    }
    // c = 0: fixed points are infinity (eigenvalue a) and b/(d-a) (eigenvalue d).
    const double finite_fp = m.b / (m.d - m.a);
    if (std::fabs(m.a) > std::fabs(m.d))
        return {finite_fp, HUGE_VAL};
    return {HUGE_VAL, finite_fp};
}

double mobius_boundary(const Mat2& m, double x) {
    if (std::isinf(x))
        return (std::fabs(m.c) > 1e-300) ? m.a / m.c : HUGE_VAL;
    const double den = m.c * x + m.d;
    if (std::fabs(den) < 1e-300) return HUGE_VAL;
    return (m.a * x + m.b) / den;
}

double dist_i_to_geodesic(double p, double q) {
    if (std::isinf(p) || std::isinf(q)) {
        const double x = std::isinf(p) ? q : p;
        return hyp::asinh_stable(std::fabs(x));
    }
    const double r = std::fabs(p - q) / 2.0;
    if (r <= 0.0) throw domain_error("dist_i_to_geodesic: degenerate endpoint pair");
    const double c = (p + q) / 2.0;
    return hyp::acosh_stable(std::fmax(1.0, (c * c + 1.0 + r * r) / (2.0 * r)));
}

bool geodesic_crossing(double p, double q, double r1, double r2, double* t_out,
                       double* logratio_out, bool* r1_neg_out) {
    // Move an infinite axis endpoint to a finite one by a rotation about i
    // (these fix the basepoint, so the t-origin is unchanged).  The half
    // turn z -> -1/z swaps 0 and infinity, so fall back to the quarter
    // turn z -> (z+1)/(1-z) when the finite endpoint sits near 0.
    if (std::isinf(p) || std::isinf(q)) {
        const double finite = std::isinf(p) ? q : p;
        if (std::fabs(finite) > 0.5) {
            auto flip = [](double x) {
                if (std::isinf(x)) return 0.0;
                if (std::fabs(x) < 1e-300) return HUGE_VAL;
                return -1.0 / x;
            };
            p = flip(p); q = flip(q); r1 = flip(r1); r2 = flip(r2);
        } else {
            auto quarter = [](double x) {
                if (std::isinf(x)) return -1.0;
                const double den = 1.0 - x;
                if (std::fabs(den) < 1e-300) return HUGE_VAL;
                return (x + 1.0) / den;
            };
            p = quarter(p); q = quarter(q); r1 = quarter(r1); r2 = quarter(r2);
        }
    }
    // S(z) = (z - p)/(z - q) sends the axis to (0, infinity); S(inf) = 1.
    auto send = [&](double x) -> double {
        if (std::isinf(x)) return 1.0;
        const double den = x - q;
        if (std::fabs(den) < 1e-300) return HUGE_VAL;
        return (x - p) / den;
    };
    const double R1 = send(r1);
    const double R2 = send(r2);
    if (std::isinf(R1) || std::isinf(R2)) return false;  // shared ideal endpoint
    // near-shared endpoints are tangency noise, not transverse crossings
    if (std::fabs(R1) < 1e-10 || std::fabs(R2) < 1e-10 ||
        std::fabs(R1) > 1e10 || std::fabs(R2) > 1e10)
        return false;
    if (!(R1 * R2 < 0.0)) return false;
    if (t_out) {
        // Crossing height sqrt(-R1*R2); origin at the foot of the basepoint,
        // which sits at height |S(i)| = sqrt((1+p^2)/(1+q^2)).
        *t_out = 0.5 * std::log(-R1 * R2) - 0.5 * std::log((1.0 + p * p) / (1.0 + q * q));
    }
    if (logratio_out) *logratio_out = std::log(std::fabs(R1 / R2));
    if (r1_neg_out) *r1_neg_out = (R1 < 0.0);
    return true;
}

} // namespace amalgam
