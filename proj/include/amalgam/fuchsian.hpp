#pragma once

// Matrix representations of the one-holed torus and its genus-2 double,
// exact enumeration of primitive closed geodesics, and geometric
// intersection numbers computed from axis crossings.

#include "amalgam/mat2.hpp"
#include "amalgam/words.hpp"

#include <array>
#include <optional>
#include <vector>

namespace amalgam {

// One-holed torus group <A, B> with orthogonal axes through the basepoint
// i; A translates the imaginary axis by s, B the unit semicircle by u.
// The boundary geodesic has length bdry, with cosh(bdry/4) =
// sinh(s/2) sinh(u/2); bdry = 0 flags the pinched (cusped) parameter.
struct TorusRep {
    Mat2 A, B;
    double s = 0.0, u = 0.0;
    double bdry = 0.0;
    bool pinched = false;

    std::array<Mat2, 4> letters() const {  // a, A, b, B in rank order
        return {A, A.inverse(), B, B.inverse()};
    }
};

TorusRep build_one_holed_torus(double s, double u);

// Genus-2 double of a one-holed torus across its boundary.  In the
// nondegenerate case the factors are conjugated so the shared boundary
// element `glue` translates the imaginary axis, and the right factor is
// the entry-sign mirror (a,-b;-c,d) of the left; the two commutators are
// then equal as matrices.  At the pinched parameter (bdry = 0) the
// boundary is a cusp: no gluing axis exists and the length spectrum is
// the disjoint union of the two factor spectra.
struct Genus2Rep {
    TorusRep left, right;
    Mat2 glue;          // [A,B] = [A',B']; meaningful when !pinched
    double bdry = 0.0;
    bool pinched = false;

    std::array<Mat2, 8> letters() const {  // a, A, b, B, c, C, d, D
        return {left.A, left.A.inverse(), left.B, left.B.inverse(),
                right.A, right.A.inverse(), right.B, right.B.inverse()};
    }
};

Genus2Rep double_across_boundary(const TorusRep& rep);

// Product of generator matrices along a word (letters +-1..+-4 select
// from `lets` in rank order).
Mat2 word_to_matrix(const Word& w, const std::array<Mat2, 8>& lets);
Mat2 word_to_matrix(const Word& w, const TorusRep& rep);

// One unoriented primitive conjugacy class realized by a closed geodesic.
struct GeodesicClass {
    Word word;                   // canonical cyclic word (free factors) or
                                 // a freely reduced representative (genus 2)
    double length = 0.0;
    double trace = 0.0;
    std::vector<long> homology;  // exponent sums (2 or 4 entries)
    bool primitive = true;
    int factor = -1;             // 0/1 = confined to that factor, -1 = mixed
};

struct EnumOptions {
    int max_word_length = 24;     // horizon cap for word-length enumeration
    double bfs_slack = 1.5;       // Delta: displacement slack for orbit BFS
    std::size_t max_elements = 30'000'000;
    double max_seconds = 0.0;     // 0 = no wall-clock cap
    std::vector<std::string>* warnings = nullptr;  // dedupe-collision reports
};

// Wall-clock cap from AMALGAM_MAX_SECONDS, or 0 when unset.
double max_seconds_from_env();

// Minimal certified per-letter displacement: half the smallest
// translation length among the reduced two-letter words of the rep.
double free_horizon_delta(const TorusRep& rep);

// All unoriented primitive conjugacy classes of <A,B> with translation
// length <= L, found by generating canonical cyclic words up to the
// horizon ceil(L/delta).  Sorted by (length, word).  The horizon is a
// per-letter displacement bound; near the pinched parameter, classes
// whose words wind around the almost-parabolic commutator exceed any
// word-length horizon, and enumerate_classes_genus2 on the pinched
// double (an orbit search) is the displacement-complete alternative.
std::vector<GeodesicClass> enumerate_classes_free(const TorusRep& rep, double L,
                                                  const EnumOptions& opt = {});

// All unoriented primitive classes of the doubled surface with length
// <= L.  Breadth-first orbit search pruned at displacement L + 2*slack;
// conjugacy deduplication is by canonical axis position for the
// nondegenerate double and by exact cyclic words on the factors of a
// pinched double.  Sorted by (length, word).
std::vector<GeodesicClass> enumerate_classes_genus2(const Genus2Rep& rep, double L,
                                                    const EnumOptions& opt = {});

// Geometric intersection number i(gamma, beta) on the one-holed torus:
// counts group translates of beta's axis crossing one fundamental period
// of gamma's axis.  Enumerates conjugators to word length `depth`
// (default |gamma| + |beta| + 4) and accepts only counts that are stable
// under depth + 2; raises convergence_error otherwise.
int geometric_intersection_axes(const TorusRep& rep, const Word& gamma,
                                const Word& beta, int depth = 0,
                                int max_extra_depth = 6);

// Crossing counts of enumerated classes with the axis orbit of a
// hyperbolic element `curve` of the doubled group: translates of the
// curve axis crossing one fundamental period of each class axis.
std::vector<int> curve_intersections(const Genus2Rep& rep,
                                     const std::vector<GeodesicClass>& classes,
                                     const Mat2& curve, double L,
                                     const EnumOptions& opt = {});

// i(class, separating curve) for classes enumerated on a nondegenerate
// double: crossings of each class axis with translates of the glue axis.
// All zero on a pinched double.
std::vector<int> separating_intersections(const Genus2Rep& rep,
                                          const std::vector<GeodesicClass>& classes,
                                          double L, const EnumOptions& opt = {});

} // namespace amalgam
