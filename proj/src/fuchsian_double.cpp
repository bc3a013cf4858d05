#include "amalgam/fuchsian.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/hyp.hpp"

#include "crossing_accumulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace amalgam {

namespace {

using Clock = std::chrono::steady_clock;

Mat2 commutator(const Mat2& x, const Mat2& y) {
    return x * y * x.inverse() * y.inverse();
}

// Conjugation by the boundary reflection z -> -conj(z).
Mat2 mirror(const Mat2& m) { return {m.a, -m.b, -m.c, m.d}; }

Mat2 conj_by(const Mat2& t, const Mat2& m) { return t * m * t.inverse(); }

double axis_dist(const Mat2& m) {
    const auto ax = axis_endpoints(m);
    return dist_i_to_geodesic(ax.repelling, ax.attracting);
}

} // namespace

Genus2Rep double_across_boundary(const TorusRep& rep) {
    Genus2Rep d;
    d.bdry = rep.bdry;
    d.pinched = rep.pinched;
    if (rep.pinched) {
        // Boundary is a cusp; the double is nodal and the factors are
        // mirror-isometric copies sharing no gluing axis.
        d.left = rep;
        d.right = rep;
        d.right.A = mirror(rep.A);
        d.right.B = mirror(rep.B);
        d.glue = commutator(rep.A, rep.B);
        return d;
    }

    Mat2 A = rep.A, B = rep.B;
    Mat2 C = commutator(A, B);
    if (!C.is_hyperbolic())
        throw construction_error("double_across_boundary: boundary element is not "
                                 "hyperbolic (conjugation failure, degenerate axis)");
    auto ax = axis_endpoints(C);
    if (std::isinf(ax.repelling) || std::isinf(ax.attracting)) {
        // Move the axis off infinity with z -> -1/z first.
        const Mat2 w{0.0, -1.0, 1.0, 0.0};
        A = conj_by(w, A);
        B = conj_by(w, B);
        C = commutator(A, B);
        ax = axis_endpoints(C);
    }
    const double p = ax.repelling, q = ax.attracting;
    Mat2 t;
    if (p > q) {
        const double s = 1.0 / std::sqrt(p - q);
        t = {s, -s * p, s, -s * q};
    } else {
        const double s = 1.0 / std::sqrt(q - p);
        t = {s, -s * p, -s, s * q};
    }
    d.left = rep;
    d.left.A = conj_by(t, A);
    d.left.B = conj_by(t, B);
    d.glue = commutator(d.left.A, d.left.B);
    if (std::fabs(d.glue.b) > 1e-7 || std::fabs(d.glue.c) > 1e-7)
        throw construction_error("double_across_boundary: failed to diagonalize the "
                                 "boundary element (degenerate axis)");
    d.glue.b = 0.0;
    d.glue.c = 0.0;
    d.right = rep;
    d.right.A = mirror(d.left.A);
    d.right.B = mirror(d.left.B);
    const Mat2 c2 = commutator(d.right.A, d.right.B);
    const double dev = std::fabs(c2.a - d.glue.a) + std::fabs(c2.b - d.glue.b) +
                       std::fabs(c2.c - d.glue.c) + std::fabs(c2.d - d.glue.d);
    if (dev > 1e-9 * (1.0 + std::fabs(d.glue.a)))
        throw construction_error("double_across_boundary: factor commutators disagree");
    return d;
}

namespace {

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

struct MatKey {
    std::int64_t k[4];
    bool operator==(const MatKey& o) const {
        return k[0] == o.k[0] && k[1] == o.k[1] && k[2] == o.k[2] && k[3] == o.k[3];
    }
};

struct MatKeyHash {
    std::size_t operator()(const MatKey& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < 4; ++i) {
            h ^= static_cast<std::uint64_t>(m.k[i]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

MatKey mat_key(const Mat2& m, double sign) {
    const double q = 1e6;
    return {{static_cast<std::int64_t>(std::llround(sign * m.a * q)),
             static_cast<std::int64_t>(std::llround(sign * m.b * q)),
             static_cast<std::int64_t>(std::llround(sign * m.c * q)),
             static_cast<std::int64_t>(std::llround(sign * m.d * q))}};
}

// Breadth-first ball of group elements with d(i, g i) <= radius, deduped
// as matrices up to sign.  Parent links reconstruct a word per element.
struct OrbitBall {
    std::vector<Mat2> elems;
    std::vector<int> parent;
    std::vector<Letter> via;
    int num_letters = 0;

    Word word_of(int idx) const {
        Word w;
        for (int j = idx; j > 0; j = parent[static_cast<size_t>(j)])
            w.push_back(via[static_cast<size_t>(j)]);
        std::reverse(w.begin(), w.end());
        return w;
    }
};

OrbitBall build_ball(const std::vector<Mat2>& lets, const std::vector<Letter>& codes,
                     double radius, const EnumOptions& opt, const char* what) {
    OrbitBall ball;
    ball.num_letters = static_cast<int>(lets.size());
    Deadline dl{Clock::now(), opt.max_seconds > 0 ? opt.max_seconds : max_seconds_from_env()};
    std::unordered_map<MatKey, int, MatKeyHash> seen;
    seen.reserve(1 << 16);
    auto insert = [&](const Mat2& m, int parent, Letter via) {
        const MatKey kp = mat_key(m, 1.0);
        if (seen.find(kp) != seen.end()) return false;
        const int id = static_cast<int>(ball.elems.size());
        seen.emplace(kp, id);
        seen.emplace(mat_key(m, -1.0), id);
        ball.elems.push_back(m);
        ball.parent.push_back(parent);
        ball.via.push_back(via);
        return true;
    };
    insert(Mat2::identity(), -1, 0);
    for (std::size_t head = 0; head < ball.elems.size(); ++head) {
        if ((head & 0xfff) == 0) dl.check(what);
        if (ball.elems.size() > opt.max_elements)
            throw budget_error(std::string(what) + ": element budget " +
                               std::to_string(opt.max_elements) + " exceeded");
        const Mat2 m = ball.elems[head];
        for (std::size_t j = 0; j < lets.size(); ++j) {
            const Mat2 n = m * lets[j];
            if (n.displacement() > radius) continue;
            insert(n, static_cast<int>(head), codes[j]);
        }
    }
    return ball;
}

// Length-preserving rewriting with the doubling relation abAB = cdCD:
// any four consecutive letters matching half of the relator (cyclically,
// in either direction) may be swapped for the inverse of the other half.
// Searching the swap orbit finds a single-factor spelling whenever the
// class is conjugate into a factor.
std::optional<Word> single_factor_respelling(const Word& start, std::size_t cap = 4096) {
    static const std::vector<std::pair<Word, Word>> kSwaps = [] {
        std::vector<std::pair<Word, Word>> swaps;
        const Word relator = word_from_string("abABdcDC");
        for (const Word& base : {relator, inverse_word(relator)}) {
            for (std::size_t r = 0; r < base.size(); ++r) {
                Word rot(base.begin() + static_cast<long>(r), base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
                const Word u(rot.begin(), rot.begin() + 4);
                const Word v(rot.begin() + 4, rot.end());
                swaps.emplace_back(u, inverse_word(v));
            }
        }
        return swaps;
    }();
    auto is_single = [](const Word& w) {
        const bool left = std::all_of(w.begin(), w.end(),
                                      [](Letter l) { return std::abs(l) <= 2; });
        const bool right = std::all_of(w.begin(), w.end(),
                                       [](Letter l) { return std::abs(l) >= 3; });
        return left || right;
    };
    std::set<Word> seen;
    std::deque<Word> queue;
    const Word w0 = canonical_cyclic(start);
    if (w0.empty()) return std::nullopt;
    if (is_single(w0)) return w0;
    seen.insert(w0);
    queue.push_back(w0);
    while (!queue.empty() && seen.size() < cap) {
        const Word w = queue.front();
        queue.pop_front();
        if (w.size() < 4 || w.size() > 16) continue;
        for (std::size_t rot = 0; rot < w.size(); ++rot) {
            Word r(w.begin() + static_cast<long>(rot), w.end());
            r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(rot));
            for (const auto& [u, repl] : kSwaps) {
                if (r.size() < u.size()) continue;
                if (!std::equal(u.begin(), u.end(), r.begin())) continue;
                Word next = repl;
                next.insert(next.end(), r.begin() + static_cast<long>(u.size()), r.end());
                next = canonical_cyclic(next);
                if (next.empty() || seen.count(next)) continue;
                if (is_single(next)) return next;
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

void sort_classes(std::vector<GeodesicClass>& out) {
    std::sort(out.begin(), out.end(), [](const GeodesicClass& x, const GeodesicClass& y) {
        if (x.length != y.length) return x.length < y.length;
        return word_rank_less(x.word, y.word);
    });
}

// --- pinched path: exact word-level conjugacy on one free factor ---

std::vector<GeodesicClass> factor_classes(const TorusRep& rep, double L,
                                          const EnumOptions& opt) {
    const auto l4 = rep.letters();
    const std::vector<Mat2> lets{l4[0], l4[1], l4[2], l4[3]};
    const std::vector<Letter> codes{1, -1, 2, -2};
    const OrbitBall ball = build_ball(lets, codes, L + 2.0 * opt.bfs_slack, opt,
                                      "enumerate_classes_genus2(factor)");
    std::map<Word, GeodesicClass> classes;
    for (std::size_t idx = 1; idx < ball.elems.size(); ++idx) {
        const Mat2& m = ball.elems[idx];
        if (!m.is_hyperbolic()) continue;
        const double ell = trace_to_length(m);
        if (ell > L + hyp::kTol) continue;
        const Word cw = canonical_cyclic(ball.word_of(static_cast<int>(idx)));
        if (cw.empty() || !is_primitive(cw)) continue;
        auto it = classes.find(cw);
        if (it != classes.end()) continue;
        GeodesicClass c;
        c.word = cw;
        c.length = ell;
        c.trace = m.trace();
        c.homology = homology_class(cw, 4);
        c.factor = 0;
        classes.emplace(cw, std::move(c));
    }
    std::vector<GeodesicClass> out;
    out.reserve(classes.size());
    for (auto& [w, c] : classes) out.push_back(c);
    return out;
}

Word mirror_word(const Word& w) {
    Word r = w;
    for (Letter& l : r) l = static_cast<Letter>(l > 0 ? l + 2 : l - 2);
    return r;
}

// --- nondegenerate path: conjugacy classes via axis-orbit matching ---

struct AxKey {
    std::int64_t lo, hi;
    bool operator<(const AxKey& o) const {
        return lo != o.lo ? lo < o.lo : hi < o.hi;
    }
    bool operator==(const AxKey& o) const { return lo == o.lo && hi == o.hi; }
};

AxKey ax_key(const Mat2& m) {
    const auto ax = axis_endpoints(m);
    auto comp = [](double x) {
        // compactified coordinate, monotone and safe for huge endpoints
        const double c = std::isinf(x) ? 50.0 : (x < 0 ? -1.0 : 1.0) * std::log1p(std::fabs(x));
        return static_cast<std::int64_t>(std::llround(c / 3e-8));
    };
    const std::int64_t a = comp(ax.lo()), b = comp(ax.hi());
    return {std::min(a, b), std::max(a, b)};
}

// Groups group elements into conjugacy classes by matching translates of
// their axes.  Every translate key visited while walking a candidate
// around its conjugation orbit is recorded; two candidates belong to the
// same class as soon as their walks share a single translate, so no
// global minimization is required.
struct ClassRegistry {
    std::array<Mat2, 8> lets;
    int n = 8;
    std::vector<Mat2> steps;      // 1- and 2-letter conjugators for walking
    std::vector<Mat2> deep_steps; // 3-letter conjugators, descent fallback
    double lambda = 0.0;          // largest letter displacement
    std::size_t node_cap = 20000;
    long cap_hits = 0;

    std::map<AxKey, int> memo;    // translate key -> class slot
    std::vector<int> parent;      // union-find over slots

    struct Entry {
        double length;
        Word word;
        double trace;
    };
    struct Slot {
        std::vector<Entry> entries;
        Mat2 best_rep;            // conjugate with the closest axis seen
        double best_dist = HUGE_VAL;
    };
    std::vector<Slot> slots;

    void set_letters(const std::array<Mat2, 8>& l, int count) {
        lets = l;
        n = count;
        steps.clear();
        deep_steps.clear();
        for (int i = 0; i < n; ++i) {
            steps.push_back(lets[static_cast<size_t>(i)]);
            lambda = std::max(lambda, lets[static_cast<size_t>(i)].displacement());
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                steps.push_back(lets[static_cast<size_t>(i)] * lets[static_cast<size_t>(j)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    deep_steps.push_back(lets[static_cast<size_t>(i)] *
                                         lets[static_cast<size_t>(j)] *
                                         lets[static_cast<size_t>(k)]);
    }

    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        Slot& sa = slots[static_cast<size_t>(a)];
        Slot& sb = slots[static_cast<size_t>(b)];
        for (auto& e : sb.entries) sa.entries.push_back(std::move(e));
        sb.entries.clear();
        if (sb.best_dist < sa.best_dist) {
            sa.best_dist = sb.best_dist;
            sa.best_rep = sb.best_rep;
        }
    }

    // memo lookup with +-1 bucket probing against rounding jitter
    int lookup(const AxKey& k) {
        for (std::int64_t dl = -1; dl <= 1; ++dl) {
            for (std::int64_t dh = -1; dh <= 1; ++dh) {
                const auto it = memo.find(AxKey{k.lo + dl, k.hi + dh});
                if (it != memo.end()) return find(it->second);
            }
        }
        return -1;
    }

    int add_candidate(const Mat2& m0, double ell, Word word) {
        // greedy descent toward the basepoint, stopping early on a memo hit
        Mat2 cur = m0;
        double d = axis_dist(cur);
        std::vector<std::pair<AxKey, std::pair<Mat2, double>>> trail;
        trail.push_back({ax_key(cur), {cur, d}});
        int hit = lookup(trail.back().first);
        while (hit < 0) {
            Mat2 best = cur;
            double bd = d;
            for (const Mat2& q : steps) {
                const Mat2 c = q * cur * q.inverse();
                const double dc = axis_dist(c);
                if (dc < bd - 1e-12) { bd = dc; best = c; }
            }
            if (bd >= d - 1e-12) {
                for (const Mat2& q : deep_steps) {
                    const Mat2 c = q * cur * q.inverse();
                    const double dc = axis_dist(c);
                    if (dc < bd - 1e-12) { bd = dc; best = c; break; }
                }
            }
            if (bd >= d - 1e-12) break;
            cur = best;
            d = bd;
            trail.push_back({ax_key(cur), {cur, d}});
            hit = lookup(trail.back().first);
        }

        // breadth-first walk of the translate tube around the local minimum
        std::map<AxKey, std::pair<Mat2, double>> visited;
        for (auto& t : trail) visited.emplace(t.first, t.second);
        if (hit < 0) {
            std::deque<Mat2> queue{cur};
            double dmin = d;
            while (!queue.empty()) {
                const Mat2 x = queue.front();
                queue.pop_front();
                for (const Mat2& q : steps) {
                    const Mat2 y = q * x * q.inverse();
                    const double dy = axis_dist(y);
                    if (dy > dmin + lambda + 0.8) continue;
                    const AxKey k = ax_key(y);
                    if (visited.count(k)) continue;
                    if (visited.size() >= node_cap) { ++cap_hits; break; }
                    visited.emplace(k, std::make_pair(y, dy));
                    if (hit < 0) hit = lookup(k);
                    queue.push_back(y);
                    dmin = std::min(dmin, dy);
                }
                if (hit >= 0) break;  // trails below join an existing class
            }
        }

        if (hit < 0) {
            hit = static_cast<int>(slots.size());
            slots.push_back({});
            parent.push_back(hit);
        }
        int slot = find(hit);
        for (const auto& [k, md] : visited) {
            const auto it = memo.find(k);
            if (it == memo.end()) {
                memo.emplace(k, slot);
            } else if (find(it->second) != slot) {
                unite(find(it->second), slot);
                slot = find(slot);
            }
        }
        Slot& s = slots[static_cast<size_t>(slot)];
        for (const auto& [k, md] : visited) {
            if (md.second < s.best_dist) {
                s.best_dist = md.second;
                s.best_rep = md.first;
            }
        }
        s.entries.push_back(Entry{ell, std::move(word), m0.trace()});
        return slot;
    }
};
} // namespace

std::vector<GeodesicClass> enumerate_classes_genus2(const Genus2Rep& rep, double L,
                                                    const EnumOptions& opt) {
    if (L <= 0.0) throw domain_error("enumerate_classes_genus2: L must be positive");
    if (rep.pinched) {
        std::vector<GeodesicClass> out = factor_classes(rep.left, L, opt);
        const std::size_t nleft = out.size();
        for (std::size_t i = 0; i < nleft; ++i) {
            GeodesicClass c = out[i];
            c.word = mirror_word(c.word);
            c.homology = homology_class(c.word, 4);
            c.factor = 1;
            out.push_back(std::move(c));
        }
        sort_classes(out);
        return out;
    }

    const auto l8 = rep.letters();
    const std::vector<Mat2> lets(l8.begin(), l8.end());
    const std::vector<Letter> codes{1, -1, 2, -2, 3, -3, 4, -4};
    const OrbitBall ball = build_ball(lets, codes, L + 2.0 * opt.bfs_slack, opt,
                                      "enumerate_classes_genus2");

    ClassRegistry reg;
    reg.set_letters(l8, 8);
    for (std::size_t idx = 1; idx < ball.elems.size(); ++idx) {
        const Mat2& m = ball.elems[idx];
        if (!m.is_hyperbolic()) continue;
        const double ell = trace_to_length(m);
        if (ell > L + hyp::kTol) continue;
        Word w = canonical_cyclic(ball.word_of(static_cast<int>(idx)));
        reg.add_candidate(m, ell, std::move(w));
    }

    // representative preference: a spelling inside one factor identifies
    // the class as factor-confined even when the relation admits mixed
    // spellings of the same length; then shortest, then rank order
    auto single_factor = [](const Word& w) {
        const bool left = std::all_of(w.begin(), w.end(),
                                      [](Letter l) { return std::abs(l) <= 2; });
        const bool right = std::all_of(w.begin(), w.end(),
                                       [](Letter l) { return std::abs(l) >= 3; });
        return left || right;
    };
    auto better_word = [&](const Word& x, const Word& y) {
        const bool sx = single_factor(x), sy = single_factor(y);
        if (sx != sy) return sx;
        if (x.size() != y.size()) return x.size() < y.size();
        return word_rank_less(x, y);
    };

    std::vector<GeodesicClass> out;
    for (std::size_t si = 0; si < reg.slots.size(); ++si) {
        if (reg.find(static_cast<int>(si)) != static_cast<int>(si)) continue;
        auto& entries = reg.slots[si].entries;
        if (entries.empty()) continue;
        std::sort(entries.begin(), entries.end(),
                  [&](const ClassRegistry::Entry& a, const ClassRegistry::Entry& b) {
                      if (std::fabs(a.length - b.length) > 1e-9) return a.length < b.length;
                      return better_word(a.word, b.word);
                  });
        std::vector<double> kept_lengths;
        for (const auto& e : entries) {
            bool known = false;
            bool is_power = false;
            for (double root : kept_lengths) {
                const double ratio = e.length / root;
                const double nearest = std::round(ratio);
                if (std::fabs(ratio - nearest) < 1e-6) {
                    if (nearest >= 2.0) is_power = true;
                    else known = true;  // another representative of the root
                    break;
                }
            }
            if (known || is_power) continue;
            if (!kept_lengths.empty() && opt.warnings)
                opt.warnings->push_back("dedupe collision: axis orbit shared by lengths " +
                                        std::to_string(kept_lengths.front()) + " and " +
                                        std::to_string(e.length));
            kept_lengths.push_back(e.length);
            GeodesicClass c;
            c.word = e.word;
            if (!single_factor(c.word)) {
                // the relation may hide a factor-confined spelling
                if (auto respelt = single_factor_respelling(c.word)) c.word = *respelt;
            }
            c.length = e.length;
            c.trace = e.trace;
            c.homology = homology_class(c.word, 4);
            const bool left_only = std::all_of(c.word.begin(), c.word.end(),
                                               [](Letter l) { return std::abs(l) <= 2; });
            const bool right_only = std::all_of(c.word.begin(), c.word.end(),
                                                [](Letter l) { return std::abs(l) >= 3; });
            c.factor = left_only ? 0 : (right_only ? 1 : -1);
            out.push_back(std::move(c));
        }
    }
    sort_classes(out);
    return out;
}

std::vector<int> curve_intersections(const Genus2Rep& rep,
                                     const std::vector<GeodesicClass>& classes,
                                     const Mat2& curve, double L,
                                     const EnumOptions& opt) {
    if (rep.pinched)
        throw domain_error("curve_intersections: pinched double has no global axis "
                           "orbit; use factor-level intersection counts");
    std::vector<int> out(classes.size(), 0);

    const auto l8 = rep.letters();
    const std::vector<Mat2> lets(l8.begin(), l8.end());
    const std::vector<Letter> codes{1, -1, 2, -2, 3, -3, 4, -4};
    const double window = L / 2.0 + opt.bfs_slack + 1.0;
    const OrbitBall ball = build_ball(lets, codes, L + 2.0 * opt.bfs_slack, opt,
                                      "curve_intersections");

    // Distinct translates of the curve axis passing near the basepoint.
    const auto gax = axis_endpoints(curve);
    std::map<AxKey, std::pair<double, double>> translates;
    for (const Mat2& h : ball.elems) {
        const double r1 = mobius_boundary(h, gax.repelling);
        const double r2 = mobius_boundary(h, gax.attracting);
        auto comp = [](double x) {
            const double c = std::isinf(x) ? 50.0
                                           : (x < 0 ? -1.0 : 1.0) * std::log1p(std::fabs(x));
            return static_cast<std::int64_t>(std::llround(c * 1e7));
        };
        AxKey k{std::min(comp(r1), comp(r2)), std::max(comp(r1), comp(r2))};
        if (translates.count(k)) continue;
        if (dist_i_to_geodesic(r1, r2) > window) continue;
        translates.emplace(k, std::make_pair(r1, r2));
    }

    ClassRegistry reg;
    reg.set_letters(l8, 8);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        // a conjugate whose axis passes near i keeps the fundamental
        // segment inside the translate window
        const Mat2 m0 = word_to_matrix(classes[ci].word, l8);
        if (!m0.is_hyperbolic()) continue;
        const int slot = reg.add_candidate(m0, trace_to_length(m0), classes[ci].word);
        const Mat2 mc = reg.slots[static_cast<size_t>(slot)].best_rep;
        const auto ax = axis_endpoints(mc);
        const double ell = classes[ci].length;
        const double offset = 0.2347 * ell;
        detail::CrossingSet seenx;
        for (const auto& [k, pq] : translates) {
            double t, lr;
            bool neg;
            if (!geodesic_crossing(ax.repelling, ax.attracting, pq.first, pq.second,
                                   &t, &lr, &neg))
                continue;
            const double tf = t - offset;
            const double tmod = tf - ell * std::floor(tf / ell);
            seenx.insert(tmod, lr, neg);
        }
        out[ci] = static_cast<int>(seenx.size());
    }
    return out;
}

std::vector<int> separating_intersections(const Genus2Rep& rep,
                                          const std::vector<GeodesicClass>& classes,
                                          double L, const EnumOptions& opt) {
    if (rep.pinched)
        return std::vector<int>(classes.size(), 0);  // nothing crosses the node
    return curve_intersections(rep, classes, rep.glue, L, opt);
}

} // namespace amalgam

