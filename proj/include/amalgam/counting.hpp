#pragma once

// Lift-multiplicity counting on amalgams via projection to the base
// surface, and the empirical intersection statistics of long geodesics
// against a fixed curve.

#include "amalgam/amalgam_spec.hpp"
#include "amalgam/fuchsian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amalgam {

struct LiftCount {
    std::optional<double> exact;  // known exactly only for m = 2 (or i = 0)
    double lower = 0.0;
};

// Number of closed geodesics of the m-copy amalgam projecting to a base
// class meeting the pasting curve i times: at least 2^{i-1} for i >= 1
// (exactly that many for m = 2, where the two copies of each arc give a
// free binary choice per crossing up to the copy swap), and exactly m
// for i = 0 (one copy of the geodesic per chamber copy).
LiftCount lift_count(int i, int m);

struct LedgerRow {
    std::string word;
    double length = 0.0;
    int i_beta = 0;
    std::optional<double> lifts_exact;
    double lifts_lower = 0.0;
};

struct CountRecord {
    double L = 0.0;
    double lower = 0.0;        // certified lower bound (linear; +inf if huge)
    double lower_log2 = 0.0;   // log2 of lower, overflow-safe
    std::optional<double> enumerated;  // exact lift count when known
    double upper_log10 = 0.0;  // log10 of the stepwise upper bound
    std::string family;
};

struct XbskBreakdown {
    long k = 0, kprime = 0;
    double u = 0.0, B = 0.0;
    double single_term_log2 = 0.0;  // k k' + 1, the largest-class bound alone
    std::vector<double> term_log2; // per-twist-class contributions jk + 1
};

// Lower bound for the two-torus twist family: each twist class alpha_j
// (j = 1..k', homology (1, -j), pairwise distinct) has length below
// j*u + s <= L and meets the pasting curve jk + 1 times, contributing
// 2^{jk+1} lifts; the sum dominates the single-term bound 2^{kk'+1}.
CountRecord count_lower_Xbsk(const AmalgamSpec& spec, double L,
                             XbskBreakdown* breakdown = nullptr);

// Lower bound for m pasted copies of the doubled surface: enumerates base
// classes to length L, counts crossings with the pasting curve, and sums
// lift_count per class.  include_i0 adds the m disjoint copies of classes
// missing the curve (not part of the single-term bound).
CountRecord count_lower_XSbm(const AmalgamSpec& spec, int m, double L,
                             std::vector<LedgerRow>* ledger = nullptr,
                             bool include_i0 = true, const EnumOptions& opt = {});

struct IntersectionStats {
    double mean_ratio = 0.0;         // mean i(beta, gamma) / L over the band
    double good_fraction = 0.0;      // fraction with i >= (1 - eps) c_beta L
    double c_beta_ref = 0.0;         // ell(beta) / (2 pi^2 (g-1)), g = 2
    double collar_cap_fraction = 0.0;// fraction of all classes with i < L/(2 w(beta))
    int n_band = 0;
    int n_total = 0;
    bool small_sample = false;
};

// Statistics of crossing counts with the separating curve over the
// enumerated classes of the double; band_lo restricts mean/fraction to
// classes with length > band_lo.  Throws domain_error on a pinched
// double, whose separating curve has zero length and no collar width.
IntersectionStats empirical_intersection_stats(const Genus2Rep& S, double L, double eps,
                                               double band_lo = 0.0,
                                               std::optional<double> beta_length_override =
                                                   std::nullopt,
                                               const EnumOptions& opt = {});

// CSV in the frozen column layouts.
std::string count_records_to_csv(const std::vector<CountRecord>& rows);
std::vector<CountRecord> count_records_from_csv(const std::string& text);
std::string ledger_to_csv(const std::vector<LedgerRow>& rows);

} // namespace amalgam
