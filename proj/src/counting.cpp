#include "amalgam/counting.hpp"
#include "amalgam/bounds.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/hyp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace amalgam {

LiftCount lift_count(int i, int m) {
    if (i < 0) throw domain_error("lift_count: intersection number must be nonnegative");
    if (m < 2) throw domain_error("lift_count: need at least 2 copies");
    if (i == 0) {
        const double v = static_cast<double>(m);
        return {v, v};
    }
    const double v = std::exp2(static_cast<double>(i - 1));
    if (m == 2) return {v, v};
    return {std::nullopt, v};
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// Scientific notation from a log10 value; exact enough for reports and
// safe for magnitudes far beyond double range.
std::string format_from_log10(double log10_value) {
    if (!std::isfinite(log10_value)) return "inf";
    const double e = std::floor(log10_value);
    double mant = std::pow(10.0, log10_value - e);
    long long ei = static_cast<long long>(e);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6fe+%lld", mant, ei);
    return buf;
}

double xbsk_upper_log10(const AmalgamSpec& spec, double L) {
    // For the twist family the metrics are closed-form: A = 4*pi, sys = s.
    const double s = spec.base.s;
    double B = 0.0;
    for (const Gluing& g : spec.gluings)
        if (g.singular) B += g.length;
    return stepwise_report(4.0 * M_PI, B, s, L).upper_stepwise_log10;
}

} // namespace

CountRecord count_lower_Xbsk(const AmalgamSpec& spec, double L,
                             XbskBreakdown* breakdown) {
    if (spec.base.kind != "torus" || spec.distinguished != "beta_k")
        throw domain_error("count_lower_Xbsk: spec is not a twist-family amalgam");
    const double s = spec.base.s;
    const double u = spec.base.u;
    if (L < s) {
        CountRecord r;
        r.L = L;
        r.family = "xb";
        r.lower = 0.0;
        r.lower_log2 = -HUGE_VAL;
        r.upper_log10 = xbsk_upper_log10(spec, L);
        return r;
    }
    const long k = static_cast<long>(std::floor(1.0 / s + 1e-9));
    const long kprime = static_cast<long>(std::floor((L - s) / u + 1e-12));

    // Twist classes alpha_j = a b^-j have homology (1, -j); distinctness of
    // the classes is what lets the per-class bounds add up.
    std::set<std::pair<long, long>> homs;
    for (long j = 1; j <= kprime; ++j)
        if (!homs.insert({1L, -j}).second)
            throw domain_error("count_lower_Xbsk: twist classes not pairwise distinct");

    XbskBreakdown bd;
    bd.k = k;
    bd.kprime = kprime;
    bd.u = u;
    bd.B = hyp::twisted_length(k, s, u);
    double sum = 0.0;
    double sum_log2 = -HUGE_VAL;
    for (long j = 1; j <= kprime; ++j) {
        const double t = static_cast<double>(j * k + 1);
        bd.term_log2.push_back(t);
        sum += std::exp2(t);
    }
    if (kprime >= 1) {
        // log2 of the sum of powers, accurate also when exp2 overflows
        double acc = 0.0;
        const double top = bd.term_log2.back();
        for (double t : bd.term_log2) acc += std::exp2(t - top);
        sum_log2 = top + std::log2(acc);
        bd.single_term_log2 = static_cast<double>(k * kprime + 1);
    }

    CountRecord r;
    r.L = L;
    r.family = "xb";
    r.lower = std::isfinite(sum) ? sum : HUGE_VAL;
    r.lower_log2 = sum_log2;
    r.upper_log10 = xbsk_upper_log10(spec, L);
    if (breakdown) *breakdown = bd;
    return r;
}

CountRecord count_lower_XSbm(const AmalgamSpec& spec, int m, double L,
                             std::vector<LedgerRow>* ledger, bool include_i0,
                             const EnumOptions& opt) {
    if (spec.base.kind != "genus2_double")
        throw domain_error("count_lower_XSbm: spec is not an m-copy amalgam over a double");
    if (m < 2) throw domain_error("count_lower_XSbm: m must be at least 2");

    const Genus2Rep S = base_double(spec);
    const std::vector<GeodesicClass> classes = enumerate_classes_genus2(S, L, opt);

    double beta_len = 0.0;
    for (const Gluing& g : spec.gluings)
        if (g.id == spec.distinguished) beta_len = g.length;

    std::vector<int> inters(classes.size(), 0);
    const bool beta_is_separating = !S.pinched &&
        std::fabs(beta_len - S.bdry) < 1e-9;
    if (beta_is_separating) {
        inters = separating_intersections(S, classes, L, opt);
    } else if (std::fabs(beta_len - spec.base.s) < 1e-9) {
        // pasting along the factor curve a
        if (S.pinched) {
            const TorusRep factor = S.left;
            for (std::size_t ci = 0; ci < classes.size(); ++ci) {
                if (classes[ci].factor != 0) continue;  // right copy never meets a
                Word w = classes[ci].word;
                inters[ci] = geometric_intersection_axes(factor, w, Word{1});
            }
        } else {
            inters = curve_intersections(S, classes, S.left.A, L, opt);
        }
    } else if (S.pinched) {
        // separating curve of a pinched double: nothing crosses the node
    } else {
        throw domain_error("count_lower_XSbm: distinguished curve is neither the "
                           "separating curve nor the factor curve");
    }

    double lower = 0.0;
    double enumerated = 0.0;
    bool exact_known = true;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const int i = inters[ci];
        if (i == 0 && !include_i0) continue;
        const LiftCount lc = lift_count(i, m);
        lower += lc.lower;
        if (lc.exact) enumerated += *lc.exact;
        else exact_known = false;
        if (ledger)
            ledger->push_back(LedgerRow{word_to_string(classes[ci].word),
                                        classes[ci].length, i, lc.exact, lc.lower});
    }

    AmalgamMetrics met = metrics(spec, opt);
    CountRecord r;
    r.L = L;
    r.family = "sbm";
    r.lower = lower;
    r.lower_log2 = lower > 0 ? std::log2(lower) : -HUGE_VAL;
    if (exact_known) r.enumerated = enumerated;
    r.upper_log10 = stepwise_report(met.A, met.B, met.sys, L).upper_stepwise_log10;
    return r;
}

IntersectionStats empirical_intersection_stats(const Genus2Rep& S, double L, double eps,
                                               double band_lo,
                                               std::optional<double> beta_length_override,
                                               const EnumOptions& opt) {
    if (!(eps > 0.0 && eps < 1.0))
        throw domain_error("empirical_intersection_stats: eps must lie in (0,1)");
    const double beta_len = beta_length_override.value_or(S.bdry);
    // Collar width of the separating curve; zero-length (pinched) input
    // has no collar and no meaningful crossing cap.
    const double w_beta = hyp::collar_width(beta_len);
    const double cb = c_beta(beta_len, 2);

    const std::vector<GeodesicClass> classes = enumerate_classes_genus2(S, L, opt);
    const std::vector<int> inters = separating_intersections(S, classes, L, opt);

    IntersectionStats st;
    st.c_beta_ref = cb;
    st.n_total = static_cast<int>(classes.size());
    double sum_i = 0.0;
    int n_good = 0, n_cap = 0, n_band = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const int i = inters[ci];
        if (i < L / (2.0 * w_beta)) ++n_cap;
        if (classes[ci].length > band_lo) {
            ++n_band;
            sum_i += i;
            if (i >= (1.0 - eps) * cb * L) ++n_good;
        }
    }
    st.n_band = n_band;
    st.small_sample = (n_band < 20);
    if (n_band > 0) {
        st.mean_ratio = (sum_i / n_band) / L;
        st.good_fraction = static_cast<double>(n_good) / n_band;
    }
    if (st.n_total > 0)
        st.collar_cap_fraction = static_cast<double>(n_cap) / st.n_total;
    return st;
}

// ---- CSV ----

std::string count_records_to_csv(const std::vector<CountRecord>& rows) {
    std::string out = "L,lower,enumerated,upper,family\n";
    for (const CountRecord& r : rows) {
        out += format_double(r.L);
        out += ',';
        if (std::isfinite(r.lower)) out += format_double(r.lower);
        else out += format_from_log10(r.lower_log2 * std::log10(2.0));
        out += ',';
        if (r.enumerated) out += format_double(*r.enumerated);
        out += ',';
        out += format_from_log10(r.upper_log10);
        out += ',';
        out += r.family;
        out += '\n';
    }
    return out;
}

namespace {
// Parses plain doubles and the wide-range "m.mmmmmme+EEE" form.
double parse_wide(const std::string& s, double* log10_out) {
    const auto epos = s.find('e');
    if (epos != std::string::npos) {
        const double mant = std::stod(s.substr(0, epos));
        const double expo = std::stod(s.substr(epos + 1));
        if (log10_out) *log10_out = std::log10(mant) + expo;
        if (expo > 300.0) return HUGE_VAL;
        return mant * std::pow(10.0, expo);
    }
    const double v = std::stod(s);
    if (log10_out) *log10_out = v > 0 ? std::log10(v) : -HUGE_VAL;
    return v;
}
} // namespace

std::vector<CountRecord> count_records_from_csv(const std::string& text) {
    std::vector<CountRecord> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) { first = false; continue; }  // header
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') { f.push_back(cur); cur.clear(); }
            else cur.push_back(ch);
        }
        f.push_back(cur);
        if (f.size() != 5) throw domain_error("count_records_from_csv: bad row '" + line + "'");
        CountRecord r;
        r.L = std::stod(f[0]);
        double l10 = 0.0;
        r.lower = parse_wide(f[1], &l10);
        r.lower_log2 = l10 / std::log10(2.0);
        if (!f[2].empty()) r.enumerated = std::stod(f[2]);
        parse_wide(f[3], &r.upper_log10);
        r.family = f[4];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string ledger_to_csv(const std::vector<LedgerRow>& rows) {
    std::string out = "class_word,length,i_beta,lifts_exact,lifts_lower\n";
    for (const LedgerRow& r : rows) {
        out += r.word;
        out += ',';
        out += format_double(r.length);
        out += ',';
        out += std::to_string(r.i_beta);
        out += ',';
        if (r.lifts_exact) out += format_double(*r.lifts_exact);
        out += ',';
        out += format_double(r.lifts_lower);
        out += '\n';
    }
    return out;
}

} // namespace amalgam
