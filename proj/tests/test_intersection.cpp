#include <doctest.h>

#include "amalgam/errors.hpp"
#include "amalgam/fuchsian.hpp"

#include <cstdlib>

using namespace amalgam;

namespace {
constexpr double kAsinh1 = 0.8813735870195430;
TorusRep square() { return build_one_holed_torus(2.0 * kAsinh1, 2.0 * kAsinh1); }
} // namespace

TEST_CASE("dual curves meet once") {
    CHECK(geometric_intersection_axes(square(), word_from_string("a"),
                                      word_from_string("b")) == 1);
}

TEST_CASE("twist families meet k k' + 1 times") {
    const TorusRep rep = square();
    for (long k = 0; k <= 2; ++k) {
        for (long kp = 0; kp <= 2; ++kp) {
            const Word alpha = twist_word(1, 2, kp);
            const Word beta = twist_word(2, 1, k);
            CHECK(geometric_intersection_axes(rep, alpha, beta) == k * kp + 1);
        }
    }
    // also on a thicker torus
    const TorusRep rep2 = build_one_holed_torus(1.9, 2.6);
    CHECK(geometric_intersection_axes(rep2, twist_word(1, 2, 2),
                                      twist_word(2, 1, 1)) == 3);
}

TEST_CASE("like-signed twists are homologous and can miss") {
    // a b^2 vs b a: homology (1,2) vs (1,1), pairing 1
    CHECK(geometric_intersection_axes(square(), word_from_string("abb"),
                                      word_from_string("ba")) == 1);
}

TEST_CASE("a simple curve does not cross its own translates") {
    const Word b1 = twist_word(2, 1, 1);
    CHECK(geometric_intersection_axes(square(), b1, b1) == 0);
}

TEST_CASE("homology bounds geometric intersection from below") {
    const TorusRep rep = build_one_holed_torus(1.8, 2.4);
    const char* words[] = {"a", "b", "ab", "aB", "abb", "aab", "abaB",
                           "aabb", "aaab", "abbb"};
    for (const char* ws : words) {
        for (const char* vs : {"a", "b", "ab", "aB", "abb"}) {
            const Word w = word_from_string(ws), v = word_from_string(vs);
            const auto hw = homology_class(w), hv = homology_class(v);
            const long alg = std::labs(algebraic_intersection({hw[0], hw[1]},
                                                              {hv[0], hv[1]}));
            const int geo = geometric_intersection_axes(rep, w, v);
            CHECK(alg <= geo);
        }
    }
}

TEST_CASE("rejects non-hyperbolic input") {
    CHECK_THROWS_AS(geometric_intersection_axes(square(), word_from_string("abAB"),
                                                word_from_string("a")),
                    not_hyperbolic_error);
}
