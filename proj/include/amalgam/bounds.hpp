#pragma once

// Evaluation of the geodesic-count upper bounds (ball-covering chain and
// its coarse closed form), the entropy bound, and the lower-bound
// formulas for the long-pasting-curve and short-systole families.
// Astronomical quantities are carried in log space.

#include <optional>
#include <string>

namespace amalgam {

struct BoundsReport {
    double A = 0, B = 0, sys = 0, L = 0, r0 = 0;
    double n_max = 0;           // cap on covering balls: 4A/(pi r0^2)
    double leaves_max = 0;      // leaf bound per ball: (B/2r0)(3A/2pi - 2) + 2
    double ball_area_max = 0;   // leaves_max * 4 pi sinh^2(r0/2)
    double strip_max = 0;       // area of the 3r0/2-neighborhood of a geodesic
    double betaL_max = 0;       // balls met by a length-L geodesic
    double lambda_max = 0;      // neighbor cap: max(13, leaf bound)
    double upper_stepwise_log10 = 0;  // log10 of n_max * lambda_max^betaL_max
    double upper_coarse_log10 = 0;
    double entropy_upper = 0;
};

// Full chain evaluated at (A, B, sys, L); requires positivity and
// B >= sys (a nonempty gluing locus forces sys(X) <= B).
BoundsReport stepwise_report(double A, double B, double sys, double L);

// log10 of (4A/(pi r0^2)) * (15 + 3AB/(4 pi r0))^{(25AB/(pi r0^2))(L + r0)}.
double upper_coarse_log10(double A, double B, double sys, double L);

// (25AB/(pi r0^2)) * log(15 + 3AB/(4 pi r0)), natural log.
double entropy_upper(double A, double B, double sys);

// ell / (2 pi^2 (g-1)); equals 4*ell / vol(T^1 S).
double c_beta(double ell_beta, int g);

struct LongbetaBound {
    double value;               // e^{C L}
    bool asymptotic_only;       // validity needs unquantified "large enough L"
};

// Requires 0 < C < log(2) * c_beta(ell_beta, g).
LongbetaBound longbeta_lower(double ell_beta, int g, double C, double L);

struct XbBound {
    double log2_value;          // 1 + (1/96)(e^{B/2}/B) L
    double log10_value;
    double value;               // 2^log2_value, +inf on overflow
    bool preconditions_met;     // B >= 2 log 24 and L >= 2B + 5
    std::string unmet;          // failing inequality, if any
};

XbBound xb_lower(double B, double L);

struct ChainReport {
    double s = 0, u = 0, B = 0, L = 0;
    long k = 0, kprime = 0;
    // positive margins mean the inequality holds strictly
    double margin_u_lo = 0, margin_u_hi = 0;
    double margin_B_lo = 0, margin_B_hi = 0;
    double margin_k = 0;
    double margin_kprime = 0;
    bool all_hold = false;
};

// Verifies the construction-chain inequalities for the short-systole
// family at parameter s (0 < s <= 1/2):
//   2log(2/s) <= u <= 2log(7/s),  2log(2/s) <= B <= 2log(12/s),
//   k >= e^{B/2}/12 - 1,  and for L (default 2B + 5)  k' >= (L-1)/B - 1.
ChainReport chain_check(double s, std::optional<double> L = std::nullopt);

// JSON with one key per bound quantity (the normative 9-key report).
std::string bounds_report_to_json(const BoundsReport& r);

} // namespace amalgam
