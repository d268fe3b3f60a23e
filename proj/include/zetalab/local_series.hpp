#pragma once

// Exact power-series algebra at a generic prime (z = p^-s) and the Euler
// products built from it.
//
// A multiplicative f with f(p^e) = h(e) has local factor
// F(z) = 1 + sum h(e) z^e.  When its Dirichlet series factors as
//
//     sum f(n)/n^s = prod_j zeta(m_j s)^{e_j} * W(s),
//
// the local factor of W is F(z) * prod_j (1 - z^{m_j})^{e_j}, since each
// zeta(ms) contributes (1 - z^m)^{-1} locally.  residual_series computes
// that product with exact rational coefficients; for the examples in this
// code base:
//
//   mu^(e)  against zeta(s)/zeta^2(2s):   1 - z^5 - ...
//   mu^(e)* against zeta(s)/zeta^2(2s):   1 - z^4 - ...
//   q_r^(e) against zeta(s)zeta((2^r+1)s)
//             / (zeta(2^r s) zeta(2^{r+1} s)):  1 + C z^{2^{r+1}+1} + ...

#include "zetalab/arith.hpp"
#include "zetalab/common.hpp"
#include "zetalab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetalab {

struct LocalSeries {
    std::vector<Rat> c; // c[0..M]
    std::string label;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

LocalSeries series_const_one(int M);
LocalSeries series_one_minus_zpow(int m, int M);      // 1 - z^m
LocalSeries series_geom(int m, int M);                // (1 - z^m)^-1
LocalSeries series_mul(const LocalSeries& a, const LocalSeries& b);
LocalSeries series_div(const LocalSeries& a, const LocalSeries& b); // b.c[0] != 0
LocalSeries series_zpow_power(int m, int e, int M);   // (1 - z^m)^e, e in Z

// zeta(m s)^e appearing in the generating shape; e > 0 numerator,
// e < 0 denominator (zeta^k(cs) below the line is {c, -k}).
struct ZetaShapeFactor {
    int m;
    int e;
};
using ZetaShape = std::vector<ZetaShapeFactor>;

// local factor 1 + sum_e h(e) z^e of the rule itself
LocalSeries local_factor(const ExponentRule& rule, int M);
// local factor of the zeta shape: prod (1 - z^m)^{-e}
LocalSeries shape_local_factor(const ZetaShape& shape, int M);
// local factor of W = (series of rule) / (zeta shape)
LocalSeries residual_series(const ExponentRule& rule, const ZetaShape& shape, int M);

// smallest m >= 1 with c_m != 0, or nullopt if all computed orders vanish
std::optional<int> first_nonzero_order(const LocalSeries& s);

struct EulerConstant {
    std::string name;
    long double value = 0;
    long double tail_bound = 0; // certified |reported - true|
    u64 prime_cutoff = 0;
    long double s = 0;
    std::string definition;
};

// prod_{p <= P} W_local(p^-s) with a certified tail.  Requires nu*s > 1
// where nu is the first nonzero residual order (absolute convergence);
// P = 0 lets the integral-test bound pick the cutoff for tol.
EulerConstant euler_product(const ExponentRule& rule, const ZetaShape& shape,
                            long double s, long double tol, u64 P = 0,
                            const std::string& name = "");

// sum_p d/ds log W_local(p^-s): log-derivative of the product, used in the
// double-pole residues.
struct LogDerivative {
    long double value = 0;
    long double tail_bound = 0;
    u64 prime_cutoff = 0;
};
LogDerivative euler_product_log_deriv(const ExponentRule& rule, const ZetaShape& shape,
                                      long double s, long double tol, u64 P = 0);

// named constants; the *_direct variants evaluate the defining product
// factor by factor while the plain ones go through the residual series
// and zeta values, giving two independent routes.
EulerConstant constant_A1(long double tol);
EulerConstant constant_A1_direct(long double tol);
EulerConstant constant_A2(long double tol);
EulerConstant constant_A2_direct(long double tol);
EulerConstant constant_C1(int r, long double tol);
EulerConstant constant_C2(int r, long double tol);
// names: A1, A1_direct, A2, A2_direct, C1_2, C2_2, C1_3, C2_3, ...
EulerConstant constant_by_name(const std::string& name, long double tol);

} // namespace zetalab
