#include "amalgam/fuchsian.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/hyp.hpp"

#include "crossing_accumulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

namespace amalgam {

double max_seconds_from_env() {
    const char* v = std::getenv("AMALGAM_MAX_SECONDS");
    if (!v) return 0.0;
    const double s = std::atof(v);
    return s > 0.0 ? s : 0.0;
}

TorusRep build_one_holed_torus(double s, double u) {
    if (s <= 0.0 || u <= 0.0)
        throw domain_error("build_one_holed_torus: curve lengths must be positive");
    TorusRep rep;
    rep.s = s;
    rep.u = u;
    const double es = std::exp(s / 2.0);
    rep.A = {es, 0.0, 0.0, 1.0 / es};
    const double ch = std::cosh(u / 2.0), sh = std::sinh(u / 2.0);
    rep.B = {ch, sh, sh, ch};
    const double p = std::sinh(s / 2.0) * std::sinh(u / 2.0);
    if (p < 1.0 - hyp::kIdentityTol)
        throw domain_error("build_one_holed_torus: sinh(s/2)*sinh(u/2) < 1, "
                           "commutator is elliptic (no hyperbolic structure)");
    rep.pinched = (p <= 1.0 + hyp::kIdentityTol);
    rep.bdry = rep.pinched ? 0.0 : 4.0 * hyp::acosh_stable(p);
    return rep;
}

Mat2 word_to_matrix(const Word& w, const std::array<Mat2, 8>& lets) {
    Mat2 m = Mat2::identity();
    for (Letter l : w) {
        const int g = (l > 0 ? l : -l);
        if (g < 1 || g > 4) throw domain_error("word_to_matrix: letter outside alphabet");
        m = m * lets[static_cast<size_t>(2 * (g - 1) + (l < 0 ? 1 : 0))];
    }
    return m;
}

Mat2 word_to_matrix(const Word& w, const TorusRep& rep) {
    const auto l4 = rep.letters();
    return word_to_matrix(w, {l4[0], l4[1], l4[2], l4[3], Mat2{}, Mat2{}, Mat2{}, Mat2{}});
}

double free_horizon_delta(const TorusRep& rep) {
    const auto lets = rep.letters();
    double best = HUGE_VAL;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if ((i ^ 1) == j) continue;  // skip v * v^-1
            const Mat2 m = lets[static_cast<size_t>(i)] * lets[static_cast<size_t>(j)];
            if (!m.is_hyperbolic())
                throw budget_error("free_horizon_delta: a two-letter word is not "
                                   "hyperbolic; no certified horizon exists");
            best = std::min(best, trace_to_length(m) / 2.0);
        }
    }
    return best;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    double max_seconds = 0.0;
    void check(const char* what) const {
        if (max_seconds <= 0.0) return;
        const double el = std::chrono::duration<double>(Clock::now() - start).count();
        if (el > max_seconds)
            throw budget_error(std::string(what) + ": wall-clock budget of " +
                               std::to_string(max_seconds) + "s exceeded");
    }
};

} // namespace

std::vector<GeodesicClass> enumerate_classes_free(const TorusRep& rep, double L,
                                                  const EnumOptions& opt) {
    if (L <= 0.0) throw domain_error("enumerate_classes_free: L must be positive");
    const double delta = free_horizon_delta(rep);
    const int horizon = static_cast<int>(std::ceil(L / delta - 1e-12));
    if (horizon > opt.max_word_length)
        throw budget_error("enumerate_classes_free: certified horizon ceil(L/delta) = " +
                           std::to_string(horizon) + " exceeds max word length " +
                           std::to_string(opt.max_word_length));
    Deadline dl{Clock::now(), opt.max_seconds > 0 ? opt.max_seconds : max_seconds_from_env()};

    const auto lets = rep.letters();
    std::vector<GeodesicClass> out;

    // DFS over reduced words of each length with path matrices; keep words
    // that are cyclically reduced, canonical, primitive and short enough.
    Word w;
    std::vector<Mat2> path{Mat2::identity()};
    auto consider = [&](const Word& word, const Mat2& m) {
        if (cyclic_reduce(word) != word) return;
        if (canonical_cyclic(word) != word) return;
        if (!is_primitive(word)) return;
        if (!m.is_hyperbolic()) return;
        const double ell = trace_to_length(m);
        if (ell > L + hyp::kTol) return;
        GeodesicClass c;
        c.word = word;
        c.length = ell;
        c.trace = m.trace();
        c.homology = homology_class(word, 2);
        c.factor = 0;
        out.push_back(std::move(c));
    };
    // iterative DFS: letters coded 0..3 in rank order
    for (int n = 1; n <= horizon; ++n) {
        dl.check("enumerate_classes_free");
        std::vector<int> stack{-1};
        w.clear();
        while (!stack.empty()) {
            int& top = stack.back();
            ++top;
            if (top >= 4) {
                stack.pop_back();
                if (!w.empty()) w.pop_back();
                continue;
            }
            static const Letter kByRank[4] = {1, -1, 2, -2};
            const Letter l = kByRank[top];
            if (!w.empty() && w.back() == -l) continue;
            w.push_back(l);
            path.resize(w.size());
            path[w.size() - 1] = (w.size() == 1 ? Mat2::identity() : path[w.size() - 2]) *
                                 lets[static_cast<size_t>(letter_rank(l))];
            if (static_cast<int>(w.size()) == n) {
                consider(w, path[w.size() - 1]);
                w.pop_back();
            } else {
                stack.push_back(-1);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const GeodesicClass& x, const GeodesicClass& y) {
        if (x.length != y.length) return x.length < y.length;
        return word_rank_less(x.word, y.word);
    });
    return out;
}

int geometric_intersection_axes(const TorusRep& rep, const Word& gamma,
                                const Word& beta, int depth, int max_extra_depth) {
    const Word g = cyclic_reduce(gamma), b = cyclic_reduce(beta);
    if (g.empty() || b.empty())
        throw domain_error("geometric_intersection_axes: trivial word");
    const Mat2 Mg = word_to_matrix(g, rep);
    const Mat2 Mb = word_to_matrix(b, rep);
    if (!Mg.is_hyperbolic() || !Mb.is_hyperbolic())
        throw not_hyperbolic_error("geometric_intersection_axes: words must be hyperbolic");
    if (depth <= 0) depth = static_cast<int>(g.size() + b.size()) + 4;

    const auto ax_g = axis_endpoints(Mg);
    const auto ax_b = axis_endpoints(Mb);
    const double ell = trace_to_length(Mg);
    const double offset = 0.2347 * ell;  // keep symmetric crossings off the fold
    const auto lets = rep.letters();
    Deadline dl{Clock::now(), max_seconds_from_env()};

    // Conjugators ending in the beta word give the same translate as their
    // prefix but evaluate beta's own fixed points, where the floating
    // error grows like exp(k * ell(beta)); their visits are skipped (the
    // subtree is still explored).
    const Word b_inv = inverse_word(b);
    auto ends_with = [](const Word& w, const Word& suf) {
        if (w.size() < suf.size()) return false;
        return std::equal(suf.rbegin(), suf.rend(), w.rbegin());
    };

    auto count_at_depth = [&](int d) {
        detail::CrossingSet crossings;
        // DFS over all reduced conjugator words h of length <= d.
        std::vector<int> stack{-1};
        std::vector<Mat2> path{Mat2::identity()};
        Word hw;
        long nodes = 0;
        auto visit = [&](const Mat2& h) {
            const double p = mobius_boundary(h, ax_b.repelling);
            const double q = mobius_boundary(h, ax_b.attracting);
            double t, lr;
            bool neg;
            if (!geodesic_crossing(ax_g.repelling, ax_g.attracting, p, q, &t, &lr, &neg))
                return;
            // far periodic shifts of in-window crossings lose precision to
            // endpoint cancellation; their short-conjugator copies are the
            // ones counted
            if (std::fabs(t) > 1.5 * ell + 6.0) return;
            const double tf = t - offset;
            const double tmod = tf - ell * std::floor(tf / ell);
            crossings.insert(tmod, lr, neg);
        };
        visit(Mat2::identity());
        while (!stack.empty()) {
            int& top = stack.back();
            ++top;
            if (top >= 4) {
                stack.pop_back();
                if (!hw.empty()) { hw.pop_back(); path.pop_back(); }
                continue;
            }
            static const Letter kByRank[4] = {1, -1, 2, -2};
            const Letter l = kByRank[top];
            if (!hw.empty() && hw.back() == -l) continue;
            hw.push_back(l);
            path.push_back(path.back() * lets[static_cast<size_t>(letter_rank(l))]);
            if (!ends_with(hw, b) && !ends_with(hw, b_inv)) visit(path.back());
            if (static_cast<int>(hw.size()) < d) {
                stack.push_back(-1);
            } else {
                hw.pop_back();
                path.pop_back();
            }
            if ((++nodes & 0xfffff) == 0) dl.check("geometric_intersection_axes");
        }
        return static_cast<int>(crossings.size());
    };

    int prev = count_at_depth(depth);
    for (int extra = 2; extra <= max_extra_depth; extra += 2) {
        dl.check("geometric_intersection_axes");
        const int cur = count_at_depth(depth + extra);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw convergence_error("geometric_intersection_axes: crossing count did not "
                            "stabilize by depth " + std::to_string(depth + max_extra_depth));
}

} // namespace amalgam
