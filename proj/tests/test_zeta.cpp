#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/zeta.hpp"

#include <cmath>

using namespace zetalab;

TEST_CASE("zeta at classical points") {
    const long double pi = 3.14159265358979323846L;
    ZetaValue z2 = zeta_real(2.0L, 1e-14L);
    CHECK(fabsl(z2.value - pi * pi / 6.0L) <= z2.abs_error_bound + 1e-17L);
    ZetaValue z0 = zeta_real(0.0L, 1e-13L);
    CHECK(fabsl(z0.value + 0.5L) <= z0.abs_error_bound + 1e-16L);
    ZetaValue zm1 = zeta_real(-1.0L, 1e-12L);
    CHECK(fabsl(zm1.value + 1.0L / 12.0L) <= zm1.abs_error_bound + 1e-15L);
    ZetaValue z4 = zeta_real(4.0L, 1e-14L);
    CHECK(fabsl(z4.value - pi * pi * pi * pi / 90.0L) <= z4.abs_error_bound + 1e-17L);
    CHECK_THROWS(zeta_real(1.0L, 1e-10L));
}

TEST_CASE("two independent methods agree inside (0,1)") {
    for (long double s : {0.1L, 0.25L, 0.5L, 0.75L, 0.9L}) {
        ZetaValue em = zeta_real(s, 1e-13L);
        ZetaValue alt = zeta_real_alternating(s, 1e-13L);
        CHECK(fabsl(em.value - alt.value) <= em.abs_error_bound + alt.abs_error_bound);
        CHECK(em.value < 0.0L); // zeta is negative on (0,1)
    }
    // spot value zeta(1/2) = -1.4603545088...
    CHECK(zeta_real(0.5L, 1e-13L).value == doctest::Approx(-1.4603545088095868).epsilon(1e-12));
}

TEST_CASE("zeta derivative: closed form at 0, finite differences elsewhere") {
    ZetaValue d0 = zeta_deriv_real(0.0L, 1e-11L);
    CHECK(fabsl(d0.value + 0.5L * logl(2.0L * 3.14159265358979323846L)) <= d0.abs_error_bound + 1e-14L);
    for (long double s : {2.0L, 3.0L, 4.0L, 1.5L, 0.5L}) {
        ZetaValue d = zeta_deriv_real(s, 1e-11L);
        const long double h = 1e-5L;
        long double fd = (zeta_real(s + h, 1e-15L).value - zeta_real(s - h, 1e-15L).value) / (2.0L * h);
        CHECK(fabsl(d.value - fd) <= 10.0L * 1e-11L + 1e-7L * fabsl(d.value) * h + 1e-8L * h); // h^2 curvature slack
    }
    // decreasing on the right of the pole
    CHECK(zeta_deriv_real(2.0L, 1e-11L).value < 0.0L);
    CHECK(zeta_deriv_real(3.0L, 1e-11L).value < 0.0L);
    CHECK(zeta_deriv_real(4.0L, 1e-11L).value < 0.0L);
}

TEST_CASE("partial-sum decomposition: exact single-term case") {
    // y = 1, theta = 2: R(1) = 1 - zeta(2) + 1 - 1/2
    PartialSumDecomposition d = euler_maclaurin_partial(1, 2.0L, 1e-13L);
    long double expect = 1.0L - d.zeta_value - (-1.0L) + (-0.5L);
    CHECK(fabsl(d.residual - expect) <= 1e-15L);
    CHECK(d.partial_sum == 1.0L);
}

TEST_CASE("partial-sum residual scaled by y^(1+theta) stays bounded") {
    for (long double theta : {1.5L, 2.0L, 2.5L, 3.0L}) {
        long double prev = 1e30L;
        for (u64 y : {u64(100), u64(1000), u64(10000), u64(100000)}) {
            PartialSumDecomposition d = euler_maclaurin_partial(y, theta, 1e-14L);
            CHECK(fabsl(d.scaled_residual) <= 2.0L);
            CHECK(fabsl(d.residual) <= prev + 1e-18L); // |R| decreasing in y
            prev = fabsl(d.residual);
        }
    }
}

TEST_CASE("tolerance control") {
    ZetaValue loose = zeta_real(1.5L, 1e-6L);
    CHECK(loose.abs_error_bound <= 1e-6L);
    ZetaValue tight = zeta_real(1.5L, 1e-14L);
    CHECK(tight.abs_error_bound <= 1e-14L);
    CHECK(fabsl(loose.value - tight.value) <= loose.abs_error_bound + tight.abs_error_bound);
    CHECK_THROWS(euler_maclaurin_partial(100, 1.0L, 1e-10L));
}
