#pragma once

// Entropy estimation from (L, count) series: least-squares slope of
// log(count), and the orbit-growth fit count ~ e^{hL}/(hL).

#include <string>
#include <vector>

namespace amalgam {

struct CountSeries {
    std::vector<std::pair<double, double>> rows;  // (L, count), L increasing
};

enum class EntropyMode { plain, ricks };

struct EntropyFit {
    double h = 0.0;
    double tail = 0.0;        // log(count_max) / L_max
    double residual_rms = 0.0;
    std::vector<double> residuals;
    EntropyMode mode = EntropyMode::plain;
};

// plain: slope of log(count) against L.  ricks: h minimizing the squared
// misfit of log(count) against hL - log(hL), by golden-section search on
// (0, 2 * plain slope].  Requires >= 3 rows with counts >= 1 and growth.
EntropyFit estimate_entropy(const CountSeries& series, EntropyMode mode);

struct HuberVerdict {
    double ratio = 0.0;   // log(count(L_max)) / L_max
    bool pass = false;
    double lo = 0.0, hi = 0.0;
};

// Desk-scale surface check: the ratio should sit in a wide window around
// 1 (the closed-surface growth rate); convergence is slow, hence the
// generous default window.
HuberVerdict huber_check(const CountSeries& series, double lo = 0.5, double hi = 1.3);

// Series I/O against the count-record CSV (uses the `enumerated` column
// when present, else `lower`).
CountSeries series_from_csv(const std::string& text);

} // namespace amalgam
