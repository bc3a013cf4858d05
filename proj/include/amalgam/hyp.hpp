#pragma once

// Closed-form hyperbolic trigonometry: disk areas, collar widths, strip
// areas, inscribed-angle bounds, and the pentagon / twist relations for
// one-holed tori.  All functions are pure and operate on doubles.

#include <cstdint>

namespace amalgam::hyp {

inline constexpr double kTol = 1e-9;        // default comparison tolerance
inline constexpr double kIdentityTol = 1e-12;

// log(x + sqrt(x^2+1)), written to stay accurate for large x.
double asinh_stable(double x);

// log(x + sqrt(x-1)*sqrt(x+1)); requires x >= 1.  The factored square
// root avoids cancellation near x = 1 and overflow of x^2 for large x.
double acosh_stable(double x);

// Area of a hyperbolic disk of radius r: 2*pi*(cosh r - 1).
double disk_area(double r);

// Half-width of the standard collar around a closed geodesic of length
// ell: w with sinh(w)*sinh(ell/2) = 1.
double collar_width(double ell);

// Area of the r-neighborhood of a closed geodesic of length ell with n
// attached half-collars: n*ell*sinh(r).  A two-sided curve has n = 2.
double strip_area(double r, double ell, int n);

// Lower bound phi_r on the angles of a triangle with sides >= r inscribed
// in a disk of radius >= r:  cot(phi/2) = cosh(r)*(sqrt(1+2cosh r) + sqrt(2+2cosh r)).
// Lies in (0, pi/6]; decreasing in r.
double min_angle_phi(double r);

// floor(2*pi / min_angle_phi(r)): cap on the number of disks of radius r
// adjacent to one disk in a minimal covering.
long max_disk_neighbors(double r);

// Packing radius min(log(3)/4, sys/4).
double r0_of(double sys);

// Length of the curve dual to the systole on a one-holed torus with
// systole s and boundary length b:  u with sinh(s/2)*sinh(u/2) = cosh(b/4).
double pentagon_beta_length(double s, double b);

// Boundary length of the one-holed torus with orthogonal core curves of
// lengths s and u: b with cosh(b/4) = sinh(s/2)*sinh(u/2).  Returns 0 at
// the pinched parameter sinh(s/2)*sinh(u/2) = 1; errors below it.
double pentagon_boundary_length(double s, double u);

// Length of the k-fold twist of the length-u curve about the length-s
// curve:  2*acosh(cosh(k*s/2)*cosh(u/2)).
double twisted_length(long k, double s, double u);

// True iff sinh(ell_gamma/2)*sinh(ell_delta/2) >= 1, the necessary
// condition for two closed geodesics to cross off the gluing locus.
bool transverse_check(double ell_gamma, double ell_delta);

} // namespace amalgam::hyp
