#include "amalgam/entropy.hpp"
#include "amalgam/counting.hpp"
#include "amalgam/errors.hpp"

#include <algorithm>
#include <cmath>

namespace amalgam {

namespace {

void check_series(const CountSeries& s) {
    if (s.rows.size() < 3)
        throw domain_error("estimate_entropy: need at least 3 rows");
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (!(s.rows[i].second >= 1.0))
            throw domain_error("estimate_entropy: counts must be >= 1");
        if (i > 0 && !(s.rows[i].first > s.rows[i - 1].first))
            throw domain_error("estimate_entropy: L must be strictly increasing");
    }
}

double plain_slope(const CountSeries& s) {
    const std::size_t n = s.rows.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [L, c] : s.rows) {
        const double y = std::log(c);
        sx += L; sy += y; sxx += L * L; sxy += L * y;
    }
    const double nn = static_cast<double>(n);
    const double denom = nn * sxx - sx * sx;
    if (denom <= 0.0) throw domain_error("estimate_entropy: degenerate L grid");
    return (nn * sxy - sx * sy) / denom;
}

// Misfit of log(count) against h L - log(h L) + c, with the free level c
// profiled out; the asymptotic fixes the shape, not the constant in front.
double ricks_sse(const CountSeries& s, double h) {
    double mean = 0.0;
    for (const auto& [L, c] : s.rows) mean += std::log(c) - (h * L - std::log(h * L));
    mean /= static_cast<double>(s.rows.size());
    double sse = 0.0;
    for (const auto& [L, c] : s.rows) {
        const double r = std::log(c) - (h * L - std::log(h * L)) - mean;
        sse += r * r;
    }
    return sse;
}

} // namespace

EntropyFit estimate_entropy(const CountSeries& series, EntropyMode mode) {
    check_series(series);
    EntropyFit fit;
    fit.mode = mode;
    const double slope = plain_slope(series);
    if (slope <= 1e-12)
        throw domain_error("estimate_entropy: series shows no growth");
    if (mode == EntropyMode::plain) {
        fit.h = slope;
    } else {
        // golden-section search; the misfit is unimodal in h for growing series
        double lo = 1e-9, hi = std::max(2.0 * slope, 1e-6);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = ricks_sse(series, x1), f2 = ricks_sse(series, x2);
        for (int it = 0; it < 200; ++it) {
            if (f1 < f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = ricks_sse(series, x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = ricks_sse(series, x2);
            }
        }
        fit.h = (lo + hi) / 2.0;
    }
    const auto& last = series.rows.back();
    fit.tail = std::log(last.second) / last.first;
    double sse = 0.0;
    for (const auto& [L, c] : series.rows) {
        const double pred = (mode == EntropyMode::plain)
                                ? fit.h * L
                                : fit.h * L - std::log(fit.h * L);
        fit.residuals.push_back(std::log(c) - pred);
    }
    // both fits carry a free level; report residuals around the mean
    double mean = 0.0;
    for (double r : fit.residuals) mean += r;
    mean /= static_cast<double>(fit.residuals.size());
    for (double& r : fit.residuals) r -= mean;
    for (double r : fit.residuals) sse += r * r;
    fit.residual_rms = std::sqrt(sse / static_cast<double>(fit.residuals.size()));
    return fit;
}

HuberVerdict huber_check(const CountSeries& series, double lo, double hi) {
    if (series.rows.empty()) throw domain_error("huber_check: empty series");
    const auto& last = series.rows.back();
    HuberVerdict v;
    v.lo = lo;
    v.hi = hi;
    v.ratio = std::log(last.second) / last.first;
    v.pass = (v.ratio >= lo && v.ratio <= hi);
    return v;
}

CountSeries series_from_csv(const std::string& text) {
    CountSeries s;
    for (const CountRecord& r : count_records_from_csv(text)) {
        const double c = r.enumerated ? *r.enumerated : r.lower;
        s.rows.emplace_back(r.L, c);
    }
    std::sort(s.rows.begin(), s.rows.end());
    return s;
}

} // namespace amalgam
