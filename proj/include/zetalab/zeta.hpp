#pragma once

// Controlled-precision zeta(s) and zeta'(s) on the real line (s > -2,
// s != 1) via Euler-Maclaurin with an explicit remainder:
//
//   zeta(s) = sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2
//             + B2/2! s N^(-s-1) + B4/4! s(s+1)(s+2) N^(-s-3) + R
//
//   |R| <= |B6/6! s(s+1)...(s+4)| N^(-s-5) |s+5|/(s+5)    (real s > -5)
//
// N grows until the bound meets the requested tolerance.  An independent
// alternating-series route (eta(s)/(1-2^(1-s)), accelerated) cross-checks
// 0 < s < 1.  zeta' runs the same truncation in forward-mode dual numbers
// with a Cauchy-disc bound on the remainder derivative.

#include "zetalab/common.hpp"

namespace zetalab {

enum class ZetaMethod { euler_maclaurin, alternating_series };

struct ZetaValue {
    long double s = 0;
    long double value = 0;
    long double abs_error_bound = 0;
    ZetaMethod method = ZetaMethod::euler_maclaurin;
};

ZetaValue zeta_real(long double s, long double tol = 1e-13L);
ZetaValue zeta_real_alternating(long double s, long double tol = 1e-13L); // s > 0, s != 1
ZetaValue zeta_deriv_real(long double s, long double tol = 1e-12L);

// Partial-sum decomposition sum_{d<=y} d^-theta = zeta(theta)
// + y^(1-theta)/(1-theta) - psi(y) y^-theta - R(y): reports R(y) and the
// scaled residual R(y) y^(1+theta), which stays O(theta/12).
struct PartialSumDecomposition {
    long double partial_sum = 0;
    long double zeta_value = 0;
    long double power_term = 0;   // y^(1-theta)/(1-theta)
    long double psi_term = 0;     // -psi(y) y^-theta with psi(y) = -1/2 at integer y
    long double residual = 0;     // R(y)
    long double scaled_residual = 0; // R(y) * y^(1+theta)
    long double zeta_error = 0;
};

PartialSumDecomposition euler_maclaurin_partial(u64 y, long double theta, long double tol = 1e-13L);

inline constexpr long double kEulerGamma = 0.57721566490153286060651209008L;

} // namespace zetalab
