#include "amalgam/hyp.hpp"
#include "amalgam/errors.hpp"

#include <cmath>
#include <string>

namespace amalgam::hyp {

double asinh_stable(double x) {
    if (x >= 0.0)
        return std::log(x + std::hypot(1.0, x));
    return -std::log(-x + std::hypot(1.0, x));
}

double acosh_stable(double x) {
    if (x < 1.0) {
        if (x > 1.0 - 1e-12) return 0.0;   // clamp roundoff just below 1
        throw domain_error("acosh_stable: argument " + std::to_string(x) + " < 1");
    }
    return std::log(x + std::sqrt(x - 1.0) * std::sqrt(x + 1.0));
}

double disk_area(double r) {
    if (r < 0.0) throw domain_error("disk_area: negative radius");
    return 2.0 * M_PI * (std::cosh(r) - 1.0);
}

double collar_width(double ell) {
    if (ell <= 0.0) throw domain_error("collar_width: curve length must be positive");
    return asinh_stable(1.0 / std::sinh(ell / 2.0));
}

double strip_area(double r, double ell, int n) {
    if (r < 0.0) throw domain_error("strip_area: negative radius");
    if (ell <= 0.0) throw domain_error("strip_area: curve length must be positive");
    if (n < 2) throw domain_error("strip_area: a geodesic has at least 2 sides (n >= 2)");
    return static_cast<double>(n) * ell * std::sinh(r);
}

double min_angle_phi(double r) {
    if (r <= 0.0) throw domain_error("min_angle_phi: radius must be positive");
    const double c = std::cosh(r);
    const double cot_half = c * (std::sqrt(1.0 + 2.0 * c) + std::sqrt(2.0 + 2.0 * c));
    return 2.0 * std::atan(1.0 / cot_half);
}

long max_disk_neighbors(double r) {
    return static_cast<long>(std::floor(2.0 * M_PI / min_angle_phi(r)));
}

double r0_of(double sys) {
    if (sys <= 0.0) throw domain_error("r0_of: systole must be positive");
    return std::min(std::log(3.0) / 4.0, sys / 4.0);
}

double pentagon_beta_length(double s, double b) {
    if (s <= 0.0 || b <= 0.0)
        throw domain_error("pentagon_beta_length: lengths must be positive");
    return 2.0 * asinh_stable(std::cosh(b / 4.0) / std::sinh(s / 2.0));
}

double pentagon_boundary_length(double s, double u) {
    if (s <= 0.0 || u <= 0.0)
        throw domain_error("pentagon_boundary_length: lengths must be positive");
    const double p = std::sinh(s / 2.0) * std::sinh(u / 2.0);
    if (p < 1.0 - kIdentityTol)
        throw domain_error("pentagon_boundary_length: sinh(s/2)*sinh(u/2) < 1, no geodesic boundary");
    return 4.0 * acosh_stable(std::max(p, 1.0));
}

double twisted_length(long k, double s, double u) {
    if (k < 0) throw domain_error("twisted_length: twist count must be nonnegative");
    if (s <= 0.0 || u <= 0.0)
        throw domain_error("twisted_length: lengths must be positive");
    // cosh(ks/2)*cosh(u/2) overflows for large k*s; add logs instead.
    const double x = static_cast<double>(k) * s / 2.0;
    const double y = u / 2.0;
    if (x + y > 300.0) return 2.0 * (x + y);  // both cosh ~ exp/2, acosh ~ log(2x)
    return 2.0 * acosh_stable(std::cosh(x) * std::cosh(y));
}

bool transverse_check(double ell_gamma, double ell_delta) {
    return std::sinh(ell_gamma / 2.0) * std::sinh(ell_delta / 2.0) >= 1.0;
}

} // namespace amalgam::hyp
