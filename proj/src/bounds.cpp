#include "amalgam/bounds.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/hyp.hpp"

#include <json.hpp>

#include <cmath>

namespace amalgam {

namespace {
void require_inputs(double A, double B, double sys, double L, bool need_L) {
    if (!(A > 0.0) || !(B > 0.0) || !(sys > 0.0) || (need_L && !(L > 0.0)))
        throw domain_error("bounds: A, B, sys, L must be positive");
    if (B < sys - 1e-12)
        throw domain_error("bounds: B < sys, but a nonempty gluing locus forces "
                           "sys(X) <= B");
}
} // namespace

BoundsReport stepwise_report(double A, double B, double sys, double L) {
    require_inputs(A, B, sys, L, true);
    BoundsReport r;
    r.A = A; r.B = B; r.sys = sys; r.L = L;
    r.r0 = hyp::r0_of(sys);
    const double r0 = r.r0;
    r.n_max = 4.0 * A / (M_PI * r0 * r0);
    r.leaves_max = (B / (2.0 * r0)) * (3.0 * A / (2.0 * M_PI) - 2.0) + 2.0;
    r.ball_area_max = r.leaves_max * 4.0 * M_PI * std::pow(std::sinh(r0 / 2.0), 2);
    r.strip_max = (3.0 * B * A * (2.0 * L + 2.0 * r0) / (r0 * r0)) *
                  std::pow(std::sinh(r0), 2);
    r.betaL_max = (12.0 * B * A / (M_PI * r0 * r0)) * std::pow(std::cosh(r0 / 4.0), 2) *
                  std::pow(std::cosh(r0 / 2.0), 2) * (2.0 * L + 2.0 * r0);
    r.lambda_max = std::max(13.0, r.leaves_max);
    r.upper_stepwise_log10 = std::log10(r.n_max) + r.betaL_max * std::log10(r.lambda_max);
    r.upper_coarse_log10 = upper_coarse_log10(A, B, sys, L);
    r.entropy_upper = entropy_upper(A, B, sys);
    return r;
}

double upper_coarse_log10(double A, double B, double sys, double L) {
    require_inputs(A, B, sys, L, false);
    if (L < 0.0) throw domain_error("upper_coarse: L must be nonnegative");
    const double r0 = hyp::r0_of(sys);
    const double base = 15.0 + 3.0 * A * B / (4.0 * M_PI * r0);
    const double expo = (25.0 * A * B / (M_PI * r0 * r0)) * (L + r0);
    return std::log10(4.0 * A / (M_PI * r0 * r0)) + expo * std::log10(base);
}

double entropy_upper(double A, double B, double sys) {
    require_inputs(A, B, sys, 1.0, false);
    const double r0 = hyp::r0_of(sys);
    return (25.0 * A * B / (M_PI * r0 * r0)) *
           std::log(15.0 + 3.0 * A * B / (4.0 * M_PI * r0));
}

double c_beta(double ell_beta, int g) {
    if (g < 2) throw domain_error("c_beta: genus must be at least 2");
    if (!(ell_beta > 0.0)) throw domain_error("c_beta: curve length must be positive");
    return ell_beta / (2.0 * M_PI * M_PI * static_cast<double>(g - 1));
}

LongbetaBound longbeta_lower(double ell_beta, int g, double C, double L) {
    const double cb = c_beta(ell_beta, g);
    if (!(C > 0.0) || C >= std::log(2.0) * cb)
        throw domain_error("longbeta_lower: requires 0 < C < log(2)*c_beta = " +
                           std::to_string(std::log(2.0) * cb));
    if (L < 0.0) throw domain_error("longbeta_lower: L must be nonnegative");
    return {std::exp(C * L), true};
}

XbBound xb_lower(double B, double L) {
    if (!(B > 0.0) || !(L > 0.0)) throw domain_error("xb_lower: B, L must be positive");
    XbBound r;
    r.log2_value = 1.0 + (std::exp(B / 2.0) / B) * L / 96.0;
    r.log10_value = r.log2_value * std::log10(2.0);
    r.value = (r.log2_value < 1020.0) ? std::exp2(r.log2_value) : HUGE_VAL;
    r.preconditions_met = true;
    const double bmin = 2.0 * std::log(24.0);
    if (B < bmin) {
        r.preconditions_met = false;
        r.unmet = "B = " + std::to_string(B) + " < 2 log 24 = " + std::to_string(bmin);
    } else if (L < 2.0 * B + 5.0) {
        r.preconditions_met = false;
        r.unmet = "L = " + std::to_string(L) + " < 2B + 5 = " + std::to_string(2.0 * B + 5.0);
    }
    return r;
}

ChainReport chain_check(double s, std::optional<double> Lopt) {
    if (!(s > 0.0 && s <= 0.5)) throw domain_error("chain_check: s must lie in (0, 1/2]");
    ChainReport r;
    r.s = s;
    const double b = 2.0 * hyp::asinh_stable(1.0);
    r.u = hyp::pentagon_beta_length(s, b);
    r.k = static_cast<long>(std::floor(1.0 / s + 1e-9));
    r.B = hyp::twisted_length(r.k, s, r.u);
    r.L = Lopt.value_or(2.0 * r.B + 5.0);
    r.kprime = static_cast<long>(std::floor((r.L - s) / r.u + 1e-12));
    if (r.kprime < 0) r.kprime = 0;

    r.margin_u_lo = r.u - 2.0 * std::log(2.0 / s);
    r.margin_u_hi = 2.0 * std::log(7.0 / s) - r.u;
    r.margin_B_lo = r.B - 2.0 * std::log(2.0 / s);
    r.margin_B_hi = 2.0 * std::log(12.0 / s) - r.B;
    r.margin_k = static_cast<double>(r.k) - (std::exp(r.B / 2.0) / 12.0 - 1.0);
    r.margin_kprime = static_cast<double>(r.kprime) - ((r.L - 1.0) / r.B - 1.0);
    r.all_hold = r.margin_u_lo > 0 && r.margin_u_hi > 0 && r.margin_B_lo > 0 &&
                 r.margin_B_hi > 0 && r.margin_k > 0 && r.margin_kprime > 0;
    return r;
}

std::string bounds_report_to_json(const BoundsReport& r) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["leaves_max"] = r.leaves_max;
    j["ball_area_max"] = r.ball_area_max;
    j["strip_max"] = r.strip_max;
    j["betaL_max"] = r.betaL_max;
    j["lambda_max"] = r.lambda_max;
    j["upper_stepwise_log10"] = r.upper_stepwise_log10;
    j["upper_coarse_log10"] = r.upper_coarse_log10;
    j["entropy_upper"] = r.entropy_upper;
    return j.dump(2) + "\n";
}

} // namespace amalgam
