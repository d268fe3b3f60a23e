#include "zetalab/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalab {

namespace {

constexpr long double kB2 = 1.0L / 6.0L;
constexpr long double kB4 = -1.0L / 30.0L;
constexpr long double kB6 = 1.0L / 42.0L;
constexpr long double kLdEps = 1.1e-19L; // 64-bit significand ulp

void check_domain(long double s) {
    if (fabsl(s - 1.0L) < 1e-12L) throw std::domain_error("zeta: pole at s = 1");
    if (s <= -2.0L) throw std::domain_error("zeta: s <= -2 outside supported range");
}

// forward-mode dual numbers, enough for d/ds of the truncation
struct Dual {
    long double v, d;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
Dual dconst(long double c) { return {c, 0.0L}; }
Dual npow_minus(u64 n, Dual s) { // n^-s
    long double ln = logl(static_cast<long double>(n));
    long double val = expl(-s.v * ln);
    return {val, -ln * val * s.d};
}

long double em_truncation(long double s, u64 N) {
    KahanSum ks;
    for (u64 n = N; n >= 2; --n) ks.add(powl(static_cast<long double>(n), -s));
    ks.add(1.0L);
    long double Nr = static_cast<long double>(N);
    long double Ns = powl(Nr, -s);
    long double sum = ks.value();
    sum += Ns * Nr / (s - 1.0L) - Ns / 2.0L;
    sum += kB2 / 2.0L * s * Ns / Nr;
    sum += kB4 / 24.0L * s * (s + 1.0L) * (s + 2.0L) * Ns / (Nr * Nr * Nr);
    return sum;
}

Dual em_truncation_dual(Dual s, u64 N) {
    Dual sum{0.0L, 0.0L};
    for (u64 n = N; n >= 1; --n) sum = sum + npow_minus(n, s);
    Dual Ns = npow_minus(N, s);
    Dual Nld = dconst(static_cast<long double>(N));
    sum = sum + Ns * Nld / (s - dconst(1.0L)) - Ns / dconst(2.0L);
    sum = sum + dconst(kB2 / 2.0L) * s * Ns / Nld;
    sum = sum + dconst(kB4 / 24.0L) * s * (s + dconst(1.0L)) * (s + dconst(2.0L)) * Ns / (Nld * Nld * Nld);
    return sum;
}

// |R| for the truncation above at real argument sigma, magnitudes taken at
// |s| <= smax (used directly and on the Cauchy disc for the derivative)
long double em_remainder_bound(long double sigma, long double smax, u64 N) {
    long double prod = fabsl(kB6) / 720.0L;
    for (int i = 0; i <= 4; ++i) prod *= smax + i;
    long double scale = (smax + 5.0L) / (sigma + 5.0L);
    return prod * scale * powl(static_cast<long double>(N), -sigma - 5.0L);
}

u64 pick_N(long double sigma, long double smax, long double tol) {
    u64 N = 16;
    while (em_remainder_bound(sigma, smax, N) > tol && N < (u64(1) << 24)) N *= 2;
    if (em_remainder_bound(sigma, smax, N) > tol)
        throw std::runtime_error("zeta: tolerance unachievable at configured precision");
    return N;
}

} // namespace

ZetaValue zeta_real(long double s, long double tol) {
    check_domain(s);
    if (tol <= 0) throw std::invalid_argument("zeta_real: tol > 0 required");
    u64 N = pick_N(s, fabsl(s), tol / 2);
    long double v = em_truncation(s, N);
    long double bound = em_remainder_bound(s, fabsl(s), N) + 8 * kLdEps * (fabsl(v) + 1) * log2l(static_cast<long double>(N) + 2);
    if (bound > tol) throw std::runtime_error("zeta_real: tolerance unachievable at configured precision");
    return {s, v, bound, ZetaMethod::euler_maclaurin};
}

ZetaValue zeta_real_alternating(long double s, long double tol) {
    check_domain(s);
    if (s <= 0) throw std::domain_error("zeta_real_alternating: needs s > 0");
    // Cohen-Rodriguez Villegas-Zagier acceleration of eta(s)
    const int n = 96;
    long double d = powl(3.0L + sqrtl(8.0L), n);
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L, c = -d, sum = 0.0L;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * powl(static_cast<long double>(k + 1), -s);
        b = (k + n) * (k - n) * b / ((k + 0.5L) * (k + 1.0L));
    }
    long double eta = sum / d;
    long double denom = 1.0L - powl(2.0L, 1.0L - s);
    long double v = eta / denom;
    long double bound = (3.0L / powl(3.0L + sqrtl(8.0L), n) + 64 * n * kLdEps) / fabsl(denom);
    if (bound > tol) throw std::runtime_error("zeta_real_alternating: tolerance unachievable");
    return {s, v, bound, ZetaMethod::alternating_series};
}

ZetaValue zeta_deriv_real(long double s, long double tol) {
    check_domain(s);
    // remainder derivative via a Cauchy disc of radius rho around s
    long double rho = std::min(0.5L, (s + 2.0L) / 4.0L + 0.25L);
    if (s - rho <= -4.5L) rho = (s + 4.5L) / 2.0L;
    long double sigma_min = s - rho;
    long double smax = fabsl(s) + rho;
    u64 N = 16;
    auto deriv_bound = [&](u64 NN) { return em_remainder_bound(sigma_min, smax, NN) / rho; };
    while (deriv_bound(N) > tol / 2 && N < (u64(1) << 24)) N *= 2;
    if (deriv_bound(N) > tol / 2)
        throw std::runtime_error("zeta_deriv_real: tolerance unachievable");
    Dual r = em_truncation_dual({s, 1.0L}, N);
    long double bound = deriv_bound(N) + 16 * kLdEps * (fabsl(r.d) + 1) * log2l(static_cast<long double>(N) + 2);
    if (bound > tol) throw std::runtime_error("zeta_deriv_real: tolerance unachievable");
    return {s, r.d, bound, ZetaMethod::euler_maclaurin};
}

PartialSumDecomposition euler_maclaurin_partial(u64 y, long double theta, long double tol) {
    if (y < 1) throw std::invalid_argument("euler_maclaurin_partial: y >= 1");
    if (fabsl(theta - 1.0L) < 1e-12L)
        throw std::domain_error("euler_maclaurin_partial: theta = 1 excluded");
    PartialSumDecomposition out;
    KahanSum ks;
    for (u64 d = y; d >= 1; --d) ks.add(powl(static_cast<long double>(d), -theta));
    out.partial_sum = ks.value();
    ZetaValue z = zeta_real(theta, tol);
    out.zeta_value = z.value;
    out.zeta_error = z.abs_error_bound;
    long double yl = static_cast<long double>(y);
    out.power_term = powl(yl, 1.0L - theta) / (1.0L - theta);
    out.psi_term = 0.5L * powl(yl, -theta); // -psi(y) y^-theta, psi(integer) = -1/2
    out.residual = out.partial_sum - out.zeta_value - out.power_term + (-0.5L) * powl(yl, -theta);
    out.scaled_residual = out.residual * powl(yl, 1.0L + theta);
    return out;
}

} // namespace zetalab
