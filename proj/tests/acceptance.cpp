// Acceptance suite: one numbered check per release criterion, each printed
// as a single pass/fail line.  Returns nonzero if any criterion fails.

#include "amalgam/amalgam_spec.hpp"
#include "amalgam/bounds.hpp"
#include "amalgam/counting.hpp"
#include "amalgam/entropy.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/fuchsian.hpp"
#include "amalgam/hyp.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace amalgam;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail,
            double seconds) {
    std::printf("criterion %2d %-34s %s  (%.2fs)%s%s\n", idx, name,
                ok ? "PASS" : "FAIL", seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!ok) ++g_failures;
}

void run(int idx, const char* name, double time_limit,
         const std::function<std::pair<bool, std::string>()>& f) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [o, d] = f();
        ok = o;
        detail = d;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string{"exception: "} + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && time_limit > 0.0 && secs > time_limit) {
        ok = false;
        detail += " [exceeded " + std::to_string(time_limit) + "s budget]";
    }
    report(idx, name, ok, detail, secs);
}

constexpr double kAsinh1 = 0.8813735870195430;

char buf[256];
std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

} // namespace

// ---------------------------------------------------------------------------

static std::pair<bool, std::string> criterion1_formula_identities() {
    bool ok = true;
    // dual disk-area forms
    for (int i = 1; i <= 100; ++i) {
        const double r = 0.1 * i;
        ok &= std::fabs(hyp::disk_area(r) - 4.0 * M_PI * std::pow(std::sinh(r / 2), 2)) <
              1e-10 * (1.0 + hyp::disk_area(r));
    }
    // collar identity
    for (int i = 1; i <= 100; ++i) {
        const double ell = 0.2 * i;
        ok &= std::fabs(std::sinh(hyp::collar_width(ell)) * std::sinh(ell / 2) - 1.0) < 1e-10;
    }
    // pentagon round trip
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            const double s = 0.25 * i, b = 0.35 * j;
            const double u = hyp::pentagon_beta_length(s, b);
            ok &= std::fabs(std::sinh(s / 2) * std::sinh(u / 2) - std::cosh(b / 4)) <
                  1e-10 * std::cosh(b / 4);
        }
    // twist length vs trace(B A^k)
    const TorusRep rep = build_one_holed_torus(0.9, 4.0);
    for (long k = 0; k <= 99; ++k) {
        const Mat2 m = word_to_matrix(twist_word(2, 1, k), rep);
        const double target = 2.0 * std::cosh(k * 0.9 / 2) * std::cosh(4.0 / 2);
        ok &= std::fabs(m.trace() - target) < 1e-10 * target;
    }
    // commutator trace vs -2 cosh(bdry/2)
    for (int i = 0; i < 100; ++i) {
        const double s = 1.8 + 0.02 * i, u = 2.0 + 0.015 * i;
        const TorusRep r = build_one_holed_torus(s, u);
        const Mat2 c = r.A * r.B * r.A.inverse() * r.B.inverse();
        ok &= std::fabs(c.trace() + 2.0 * std::cosh(r.bdry / 2)) <
              1e-10 * (2.0 * std::cosh(r.bdry / 2));
    }
    return {ok, ""};
}

static std::pair<bool, std::string> criterion2_enumeration_exactness() {
    // brute-force cyclic-word oracle, wholly independent of the library path
    auto oracle = [](const TorusRep& rep, int max_len) {
        std::map<Word, double> out;
        for (int n = 1; n <= max_len; ++n) {
            std::vector<int> digits(static_cast<size_t>(n), 0);
            while (true) {
                static const Letter kL[4] = {1, -1, 2, -2};
                Word w;
                for (int d : digits) w.push_back(kL[d]);
                bool red = true;
                for (size_t i = 0; i + 1 < w.size(); ++i) red &= (w[i] != -w[i + 1]);
                if (red && cyclic_reduce(w) == w && canonical_cyclic(w) == w &&
                    is_primitive(w)) {
                    const Mat2 m = word_to_matrix(w, rep);
                    if (m.is_hyperbolic()) out[w] = trace_to_length(m);
                }
                int pos = n - 1;
                while (pos >= 0 && digits[static_cast<size_t>(pos)] == 3) {
                    digits[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++digits[static_cast<size_t>(pos)];
            }
        }
        return out;
    };

    bool ok = true;
    std::string detail;
    const std::pair<double, double> params[3] = {
        {2.0 * kAsinh1, 2.0 * kAsinh1}, {1.8, 2.2}, {2.6, 1.4}};
    for (const auto& [s, u] : params) {
        const TorusRep rep = build_one_holed_torus(s, u);
        const int max_len = 8;
        const auto orc = oracle(rep, max_len);
        EnumOptions opt;
        const double L = free_horizon_delta(rep) * max_len * 0.999;
        const auto cls = enumerate_classes_free(rep, L, opt);
        std::set<Word> got;
        for (const auto& c : cls) {
            got.insert(c.word);
            auto it = orc.find(c.word);
            if (it == orc.end() || std::fabs(it->second - c.length) > 1e-10) ok = false;
        }
        for (const auto& [w, ell] : orc)
            if (ell <= L - 1e-9 && !got.count(w)) ok = false;
    }

    // the pinned short-spectrum instance
    const auto cls = enumerate_classes_free(
        build_one_holed_torus(2.0 * kAsinh1, 2.0 * kAsinh1), 2.7);
    ok &= (cls.size() == 4);
    if (cls.size() == 4) {
        const double expect[4] = {1.76275, 1.76275, 2.63392, 2.63392};
        for (int i = 0; i < 4; ++i)
            ok &= std::fabs(cls[static_cast<size_t>(i)].length - expect[i]) < 1e-5;
        detail = "square-torus spectrum at L=2.7: {a, b, ab, aB}";
    } else {
        detail = fmt("expected 4 classes, got %g", static_cast<double>(cls.size()));
    }
    return {ok, detail};
}

static std::pair<bool, std::string> criterion3_intersections() {
    const TorusRep rep = build_one_holed_torus(2.0 * kAsinh1, 2.0 * kAsinh1);
    bool ok = true;
    for (long k = 0; k <= 3; ++k) {
        for (long kp = 0; kp <= 3; ++kp) {
            const Word alpha = twist_word(1, 2, kp);
            const Word beta = twist_word(2, 1, k);
            const int geo = geometric_intersection_axes(rep, alpha, beta);
            const auto ha = homology_class(alpha), hb = homology_class(beta);
            const long alg = std::labs(algebraic_intersection({ha[0], ha[1]},
                                                              {hb[0], hb[1]}));
            if (geo != k * kp + 1 || alg != geo) ok = false;
        }
    }
    // the featured instance k' = 7, k = 2
    const int big = geometric_intersection_axes(rep, twist_word(1, 2, 7),
                                                twist_word(2, 1, 2));
    if (big != 15) ok = false;
    return {ok, fmt("i(alpha_7, beta_2) = %g", static_cast<double>(big))};
}

static std::pair<bool, std::string> criterion4_chain_inequalities() {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const double s = 0.5 * std::pow(0.01 / 0.5, i / 49.0);  // log-spaced in (0, 1/2]
        const ChainReport r = chain_check(s);
        ok &= r.all_hold;
    }
    return {ok, "50 log-spaced s values"};
}

static std::pair<bool, std::string> criterion5_twist_family_lower() {
    const AmalgamSpec spec = make_Xbsk(0.1);
    const ChainReport chain = chain_check(0.1);
    bool ok = true;
    bool any = false;
    for (double L = 2.0; L <= 3.0 * chain.B + 1e-9; L += 0.5) {
        XbskBreakdown bd;
        const CountRecord rec = count_lower_Xbsk(spec, L, &bd);
        const XbBound xb = xb_lower(chain.B, L);
        if (!xb.preconditions_met) continue;
        any = true;
        ok &= (rec.lower_log2 >= xb.log2_value - 1e-9);
        // homology distinctness of the contributing twist classes
        std::set<std::pair<long, long>> homs;
        for (long j = 1; j <= bd.kprime; ++j) {
            const auto h = homology_class(twist_word(1, 2, j));
            ok &= homs.insert({h[0], h[1]}).second;
        }
    }
    ok &= any;
    return {ok, fmt("B = %.4f, grid to 3B = %.2f", chain.B, 3.0 * chain.B)};
}

static std::pair<bool, std::string> criterion6_bound_consistency() {
    unsigned long long seed = 987654321;
    auto rnd = [&]() {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(seed >> 33) / 2147483648.0;
    };
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const double A = 4.0 * M_PI * (0.5 + 3.0 * rnd());
        const double sys = 0.05 + 2.0 * rnd();
        const double B = sys + 0.1 + 20.0 * rnd();
        const double L = 0.5 + 30.0 * rnd();
        const BoundsReport r = stepwise_report(A, B, sys, L);
        ok &= (r.upper_coarse_log10 >= r.upper_stepwise_log10 - 1e-9);
    }
    // certified lower bounds from the twist family stay below the stepwise upper
    const AmalgamSpec spec = make_Xbsk(0.1);
    for (double L = 8.0; L <= 24.0; L += 2.0) {
        const CountRecord rec = count_lower_Xbsk(spec, L);
        ok &= (rec.lower_log2 * std::log10(2.0) <= rec.upper_log10 + 1e-9);
    }
    // entropy bound versus the family's entropy lower bound on the s-grid
    for (double s : {0.5, 0.25, 0.1, 0.05, 0.02, 0.01}) {
        const ChainReport r = chain_check(s);
        ok &= entropy_upper(4.0 * M_PI, r.B, s) >=
              (std::log(2.0) / 96.0) * std::exp(r.B / 2.0) / r.B;
    }
    return {ok, ""};
}

static std::pair<bool, std::string> criterion7_huber_desk_check() {
    // The doubled square torus: the pentagon boundary pinches to a cusp,
    // so the double is nodal and its spectrum is the two factor spectra.
    const TorusRep sq = build_one_holed_torus(2.0 * kAsinh1, 2.0 * kAsinh1);
    const Genus2Rep d = double_across_boundary(sq);
    EnumOptions opt;
    opt.bfs_slack = 1.5;
    const double L = 8.0;
    const auto cls = enumerate_classes_genus2(d, L, opt);

    CountSeries series;
    for (double Lx = 5.0; Lx <= L + 1e-9; Lx += 0.5) {
        double n = 0;
        for (const auto& c : cls) n += (c.length <= Lx) ? 1.0 : 0.0;
        if (n >= 1.0) series.rows.emplace_back(Lx, n);
    }
    const HuberVerdict v = huber_check(series);

    // stability under doubling the search slack
    EnumOptions wide = opt;
    wide.bfs_slack = 3.0;
    const auto cls2 = enumerate_classes_genus2(d, L, wide);
    const bool stable = (cls.size() == cls2.size());

    return {v.pass && stable,
            fmt("log(count)/L = %.4f with %g classes at L = %g",
                v.ratio, static_cast<double>(cls.size()), L)};
}

static std::pair<bool, std::string> criterion8_expected_intersections() {
    // Runs on the same surface as criterion 7.  At s = u = 2*arcsinh(1)
    // the boundary relation gives sinh(s/2) sinh(u/2) = 1, so the
    // separating curve of the double has length exactly 0: c_beta = 0 and
    // the collar width diverges, which leaves the cap i < L/(2 w(beta))
    // with no value to test.  The criterion is therefore unattainable at
    // this parameter and is reported red rather than reinterpreted; the
    // supplementary line below runs the identical statistic on a
    // nondegenerate double.
    const TorusRep sq = build_one_holed_torus(2.0 * kAsinh1, 2.0 * kAsinh1);
    const Genus2Rep d = double_across_boundary(sq);
    if (d.pinched) {
        return {false,
                "separating curve has length 0 at s = u = 2*arcsinh(1) "
                "(sinh(s/2)sinh(u/2) = 1): c_beta = 0 and the collar cap is undefined"};
    }
    const IntersectionStats st = empirical_intersection_stats(d, 8.0, 0.5, 7.0);
    const bool mean_ok = st.mean_ratio >= st.c_beta_ref / 2.0 &&
                         st.mean_ratio <= 2.0 * st.c_beta_ref;
    const bool cap_ok = st.collar_cap_fraction == 1.0;
    return {mean_ok && cap_ok, fmt("mean i/L = %.4f vs c_beta = %.4f",
                                   st.mean_ratio, st.c_beta_ref)};
}

static void supplementary_expected_intersections() {
    // Same statistic on the nondegenerate double with s = u = 2.
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        const Genus2Rep d = double_across_boundary(build_one_holed_torus(2.0, 2.0));
        const double L = 6.8;
        const IntersectionStats st = empirical_intersection_stats(d, L, 0.5, L - 1.5);
        ok = st.mean_ratio >= st.c_beta_ref / 2.0 &&
             st.mean_ratio <= 2.0 * st.c_beta_ref && st.collar_cap_fraction == 1.0;
        detail = fmt("mean i/L = %.4f vs c_beta = %.4f, cap fraction %.2f",
                     st.mean_ratio, st.c_beta_ref, st.collar_cap_fraction);
    } catch (const std::exception& e) {
        detail = std::string{"exception: "} + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    // not a numbered criterion; does not count toward the tally
    std::printf("supplementary  expected-intersection (s=u=2) %s  (%.2fs)  -- %s\n",
                ok ? "PASS" : "FAIL", secs, detail.c_str());
}

static std::pair<bool, std::string> criterion9_entropy_estimator() {
    bool ok = true;
    for (double h : {0.5, 1.0, 2.0}) {
        CountSeries s;
        for (double L = 6.0; L <= 14.0; L += 1.0)
            s.rows.emplace_back(L, std::round(std::exp(h * L) / (h * L)));
        const EntropyFit fit = estimate_entropy(s, EntropyMode::ricks);
        ok &= std::fabs(fit.h - h) / h <= 0.05;
    }
    // slope of the twist-family lower-bound series
    const AmalgamSpec spec = make_Xbsk(0.1);
    const ChainReport chain = chain_check(0.1);
    CountSeries xb;
    for (double L = 8.0; L <= 40.0; L += 2.0)
        xb.rows.emplace_back(L, std::max(1.0, count_lower_Xbsk(spec, L).lower));
    const double slope = estimate_entropy(xb, EntropyMode::plain).h;
    const double target = (std::log(2.0) / 96.0) * std::exp(chain.B / 2.0) / chain.B;
    const bool slope_ok = slope >= target * 0.95;
    return {ok && slope_ok, fmt("series slope %.4f vs target %.4f", slope, target)};
}

static std::pair<bool, std::string> criterion10_determinism() {
    const AmalgamSpec spec = make_Xbsk(0.1);
    auto make_csv = [&]() {
        std::vector<CountRecord> rows;
        for (double L = 8.0; L <= 22.0; L += 2.0)
            rows.push_back(count_lower_Xbsk(spec, L));
        return count_records_to_csv(rows);
    };
    const std::string a = make_csv(), b = make_csv();
    return {a == b && !a.empty(), "library-level; the ctest cli_determinism case "
                                  "repeats this through the binary"};
}

int main() {
    std::printf("acceptance criteria\n===================\n");
    run(1, "formula identity suite", 1.0, criterion1_formula_identities);
    run(2, "free enumeration exactness", 10.0, criterion2_enumeration_exactness);
    run(3, "twist intersection numbers", 60.0, criterion3_intersections);
    run(4, "construction chain inequalities", 1.0, criterion4_chain_inequalities);
    run(5, "twist-family lower bound", 10.0, criterion5_twist_family_lower);
    run(6, "bound consistency", 5.0, criterion6_bound_consistency);
    run(7, "surface-growth desk check", 600.0, criterion7_huber_desk_check);
    run(8, "expected-intersection trend", 0.0, criterion8_expected_intersections);
    supplementary_expected_intersections();
    run(9, "entropy estimator recovery", 0.0, criterion9_entropy_estimator);
    run(10, "deterministic count output", 0.0, criterion10_determinism);
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
