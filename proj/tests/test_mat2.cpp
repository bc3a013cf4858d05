#include <doctest.h>

#include "amalgam/errors.hpp"
#include "amalgam/mat2.hpp"

#include <cmath>

using namespace amalgam;

TEST_CASE("trace to length") {
    const double t = 1.7;
    const Mat2 m{std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0)};
    CHECK(trace_to_length(m) == doctest::Approx(t).epsilon(1e-13));
    CHECK(trace_to_length(4.0) == doctest::Approx(2.6339157938496334).epsilon(1e-13));
    CHECK_THROWS_AS(trace_to_length(Mat2::identity()), not_hyperbolic_error);
    CHECK_THROWS_AS(trace_to_length(1.99), not_hyperbolic_error);
}

TEST_CASE("determinant stays normalized along long products") {
    // bounded walk: rotations plus a hyperbolic element and its inverse
    const double c = std::cos(0.7), s = std::sin(0.7);
    const Mat2 rot{c, s, -s, c};
    const Mat2 b{std::cosh(0.5), std::sinh(0.5), std::sinh(0.5), std::cosh(0.5)};
    Mat2 m = Mat2::identity();
    for (int i = 0; i < 100000; ++i) {
        m = m * rot;
        m = (i % 2 ? m * b : m * b.inverse());
    }
    CHECK(std::fabs(m.det() - 1.0) < 1e-9);
    CHECK(std::isfinite(m.a + m.b + m.c + m.d));
}

TEST_CASE("displacement identity") {
    const Mat2 m{std::exp(0.8), 0.0, 0.0, std::exp(-0.8)};
    // moving i along the imaginary axis by 1.6
    CHECK(m.displacement() == doctest::Approx(1.6).epsilon(1e-13));
    CHECK(Mat2::identity().displacement() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("axis endpoints") {
    const Mat2 a{std::exp(0.5), 0.0, 0.0, std::exp(-0.5)};
    const auto ax = axis_endpoints(a);
    CHECK(ax.repelling == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::isinf(ax.attracting));
    const Mat2 b{std::cosh(0.5), std::sinh(0.5), std::sinh(0.5), std::cosh(0.5)};
    const auto bx = axis_endpoints(b);
    CHECK(bx.repelling == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(bx.attracting == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distances and crossings") {
    CHECK(dist_i_to_geodesic(-1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(dist_i_to_geodesic(0.0, HUGE_VAL) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dist_i_to_geodesic(3.0, HUGE_VAL) ==
          doctest::Approx(std::asinh(3.0)).epsilon(1e-12));

    // unit semicircle crosses the imaginary axis at i, the foot of the basepoint
    double t = 99.0;
    CHECK(geodesic_crossing(-1.0, 1.0, 0.0, HUGE_VAL, &t));
    CHECK(t == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(geodesic_crossing(0.0, HUGE_VAL, -1.0, 1.0, &t));
    CHECK(t == doctest::Approx(0.0).epsilon(1e-12));
    // disjoint geodesics
    CHECK_FALSE(geodesic_crossing(-1.0, 1.0, 2.0, 3.0, &t));
    // shared endpoint is not transverse
    CHECK_FALSE(geodesic_crossing(-1.0, 1.0, 1.0, 3.0, &t));
}
