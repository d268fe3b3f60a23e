#include "zetalab/local_series.hpp"
#include "zetalab/zeta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetalab {

// ---------------------------------------------------------------------------
// exact series algebra
// ---------------------------------------------------------------------------

LocalSeries series_const_one(int M) {
    LocalSeries s;
    s.c.assign(M + 1, Rat(0));
    s.c[0] = 1;
    s.label = "1";
    return s;
}

LocalSeries series_one_minus_zpow(int m, int M) {
    LocalSeries s = series_const_one(M);
    if (m <= M) s.c[m] = -1;
    s.label = "(1-z^" + std::to_string(m) + ")";
    return s;
}

LocalSeries series_geom(int m, int M) {
    LocalSeries s;
    s.c.assign(M + 1, Rat(0));
    for (int i = 0; i <= M; i += m) s.c[i] = 1;
    s.label = "(1-z^" + std::to_string(m) + ")^-1";
    return s;
}

LocalSeries series_mul(const LocalSeries& a, const LocalSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: truncation orders differ");
    const int M = a.order();
    LocalSeries out;
    out.c.assign(M + 1, Rat(0));
    for (int i = 0; i <= M; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= M; ++j)
            if (b.c[j] != 0) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.label = a.label + "*" + b.label;
    return out;
}

LocalSeries series_div(const LocalSeries& a, const LocalSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_div: truncation orders differ");
    if (b.c[0] == 0) throw std::invalid_argument("series_div: divisor has zero constant term");
    const int M = a.order();
    LocalSeries out;
    out.c.assign(M + 1, Rat(0));
    for (int i = 0; i <= M; ++i) {
        Rat acc = a.c[i];
        for (int j = 1; j <= i; ++j)
            if (b.c[j] != 0) acc -= b.c[j] * out.c[i - j];
        out.c[i] = acc / b.c[0];
    }
    out.label = a.label + "/(" + b.label + ")";
    return out;
}

LocalSeries series_zpow_power(int m, int e, int M) {
    LocalSeries out = series_const_one(M);
    if (e >= 0) {
        for (int i = 0; i < e; ++i) out = series_mul(out, series_one_minus_zpow(m, M));
    } else {
        for (int i = 0; i < -e; ++i) out = series_mul(out, series_geom(m, M));
    }
    out.label = "(1-z^" + std::to_string(m) + ")^" + std::to_string(e);
    return out;
}

LocalSeries local_factor(const ExponentRule& rule, int M) {
    LocalSeries s;
    s.c.assign(M + 1, Rat(0));
    s.c[0] = 1;
    for (int e = 1; e <= M; ++e) s.c[e] = rule.value_at_exponent(static_cast<unsigned>(e));
    s.label = "F[" + rule.id + "]";
    return s;
}

LocalSeries shape_local_factor(const ZetaShape& shape, int M) {
    LocalSeries s = series_const_one(M);
    for (const auto& f : shape) s = series_mul(s, series_zpow_power(f.m, -f.e, M));
    s.label = "shape";
    return s;
}

LocalSeries residual_series(const ExponentRule& rule, const ZetaShape& shape, int M) {
    LocalSeries s = local_factor(rule, M);
    for (const auto& f : shape) s = series_mul(s, series_zpow_power(f.m, f.e, M));
    s.label = "W[" + rule.id + "]";
    return s;
}

std::optional<int> first_nonzero_order(const LocalSeries& s) {
    for (int i = 1; i <= s.order(); ++i)
        if (s.c[i] != 0) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Euler products with certified tails
// ---------------------------------------------------------------------------

namespace {

// sum_{m >= m0} (1+m)^2 z^m, 0 < z < 1 (coefficient-growth majorant, B = 2)
long double tail_quadratic(long double z, int m0) {
    long double zm = powl(z, static_cast<long double>(m0));
    long double a = 1.0L + m0;
    long double S0 = 1.0L / (1.0L - z);
    long double S1 = z / ((1.0L - z) * (1.0L - z));
    long double S2 = z * (1.0L + z) / ((1.0L - z) * (1.0L - z) * (1.0L - z));
    return zm * (a * a * S0 + 2.0L * a * S1 + S2);
}

// sum_{m >= m0} (1+m)^3 z^m (for the log-derivative m*|c_m| majorant)
long double tail_cubic(long double z, int m0) {
    long double zm = powl(z, static_cast<long double>(m0));
    long double a = 1.0L + m0;
    long double S0 = 1.0L / (1.0L - z);
    long double S1 = z / ((1.0L - z) * (1.0L - z));
    long double S2 = z * (1.0L + z) / ((1.0L - z) * (1.0L - z) * (1.0L - z));
    long double S3 = z * (1.0L + 4.0L * z + z * z) / ((1.0L - z) * (1.0L - z) * (1.0L - z) * (1.0L - z));
    return zm * (a * a * a * S0 + 3.0L * a * a * S1 + 3.0L * a * S2 + S3);
}

struct ResidualData {
    std::vector<long double> c; // c[0] = 1
    int nu = 0;                 // first nonzero order
    long double C2 = 0;         // |c_m| <= C2 (1+m)^2 fitted over computed range, x2 safety
    bool exactly_one = false;
};

ResidualData prepare_residual(const ExponentRule& rule, const ZetaShape& shape,
                              long double s, long double inner_eps) {
    // grow the truncation until the coefficient tail at the worst prime
    // (p = 2) drops below inner_eps
    int M = 64;
    for (;;) {
        LocalSeries w = residual_series(rule, shape, M);
        auto nu = first_nonzero_order(w);
        if (!nu.has_value()) {
            bool one = true;
            for (int i = 1; i <= w.order(); ++i)
                if (w.c[i] != 0) one = false;
            if (one && M >= 256) {
                ResidualData rd;
                rd.exactly_one = true;
                rd.c = {1.0L};
                return rd;
            }
            if (M >= 4096)
                throw std::runtime_error("residual series: no nonzero coefficient through order 4096");
            M *= 2;
            continue;
        }
        ResidualData rd;
        rd.nu = *nu;
        rd.c.resize(M + 1);
        long double fit = 0;
        for (int i = 0; i <= M; ++i) {
            rd.c[i] = rat_ld(w.c[i]);
            if (i >= rd.nu) {
                long double g = fabsl(rd.c[i]) / ((1.0L + i) * (1.0L + i));
                if (g > fit) fit = g;
            }
        }
        rd.C2 = 2.0L * fit; // safety factor over the fitted growth
        long double z2 = powl(2.0L, -s);
        if (rd.C2 * tail_quadratic(z2, M + 1) <= inner_eps || M >= 4096) {
            if (rd.C2 * tail_quadratic(z2, M + 1) > inner_eps)
                throw std::runtime_error("residual series: truncation cannot reach requested precision");
            return rd;
        }
        M *= 2;
    }
}

// F(z) = 1 + sum c_m z^m, early-stopped; returns value and a bound on the
// dropped part
std::pair<long double, long double> eval_factor(const ResidualData& rd, long double z) {
    long double acc = 1.0L, zm = powl(z, static_cast<long double>(rd.nu));
    int m = rd.nu;
    const int M = static_cast<int>(rd.c.size()) - 1;
    for (; m <= M; ++m) {
        acc += rd.c[m] * zm;
        if (rd.C2 * tail_quadratic(z, m + 1) < 1e-19L) { ++m; break; }
        zm *= z;
    }
    return {acc, rd.C2 * tail_quadratic(z, m)};
}

u64 choose_cutoff(const ResidualData& rd, long double s, long double budget) {
    u64 P = 64;
    while (P < (u64(1) << 33)) {
        long double z0 = powl(static_cast<long double>(P), -s);
        if (rd.nu * s * log2l(static_cast<long double>(P)) > 4.0L && z0 < 0.5L) {
            long double G = rd.C2 * tail_quadratic(z0, rd.nu) / powl(z0, static_cast<long double>(rd.nu));
            long double S = 2.0L * G * powl(static_cast<long double>(P), 1.0L - rd.nu * s) / (rd.nu * s - 1.0L);
            if (S <= budget) return P;
        }
        P *= 2;
    }
    throw std::runtime_error("euler_product: tolerance needs a prime cutoff beyond 2^33");
}

} // namespace

EulerConstant euler_product(const ExponentRule& rule, const ZetaShape& shape,
                            long double s, long double tol, u64 P,
                            const std::string& name) {
    EulerConstant out;
    out.name = name.empty() ? ("prod[" + rule.id + "]") : name;
    out.s = s;
    out.definition = "prod_p W_" + rule.id + "(p^-s) at s=" + std::to_string(static_cast<double>(s));

    ResidualData rd = prepare_residual(rule, shape, s, tol * 1e-4L);
    if (rd.exactly_one) {
        out.value = 1.0L;
        out.tail_bound = 0.0L;
        out.prime_cutoff = 0;
        return out;
    }
    if (rd.nu * s <= 1.0L)
        throw std::domain_error("euler_product: nu*s <= 1, product diverges");

    long double prime_tail_budget = 0.45L * tol;
    if (P == 0) P = choose_cutoff(rd, s, prime_tail_budget);

    const std::vector<u64> base = primes_up_to(integer_kth_root(P, 2) + 1);
    Segmenter grid(2, P, u64(1) << 22);
    const i64 nseg = static_cast<i64>(grid.count());
    std::vector<long double> partial(nseg, 1.0L);
    std::vector<long double> inner(nseg, 0.0L);   // sum of relative truncation bounds
    std::vector<u64> counts(nseg, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
#endif
    for (i64 i = 0; i < nseg; ++i) {
        std::vector<u64> ps = primes_in_range(grid.seg_lo(i), grid.seg_hi(i), base);
        long double prod = 1.0L, itr = 0.0L;
        for (u64 p : ps) {
            long double z = powl(static_cast<long double>(p), -s);
            auto [f, trunc] = eval_factor(rd, z);
            if (fabsl(f) < 8.0L * trunc || f == 0.0L)
                throw std::runtime_error("euler_product: factor too close to zero for certified bound");
            prod *= f;
            itr += trunc / fabsl(f);
        }
        partial[i] = prod;
        inner[i] = itr;
        counts[i] = ps.size();
    }
    long double value = 1.0L, inner_total = 0.0L;
    u64 nprimes = 0;
    for (i64 i = 0; i < nseg; ++i) { // fixed ascending order: thread-count independent
        value *= partial[i];
        inner_total += inner[i];
        nprimes += counts[i];
    }

    // certified pieces: primes beyond P, dropped series terms, rounding
    long double z0 = powl(static_cast<long double>(P), -s);
    long double G = rd.C2 * tail_quadratic(z0, rd.nu) / powl(z0, static_cast<long double>(rd.nu));
    long double S_prime = 2.0L * G * powl(static_cast<long double>(P), 1.0L - rd.nu * s) / (rd.nu * s - 1.0L);
    long double rounding = 4e-19L * static_cast<long double>(nprimes + 16) * fabsl(value);
    out.value = value;
    out.tail_bound = fabsl(value) * (expm1l(S_prime) + expm1l(2.0L * inner_total)) + rounding;
    out.prime_cutoff = P;
    if (out.tail_bound > tol)
        throw std::runtime_error("euler_product: certified bound exceeds requested tolerance");
    return out;
}

LogDerivative euler_product_log_deriv(const ExponentRule& rule, const ZetaShape& shape,
                                      long double s, long double tol, u64 P) {
    ResidualData rd = prepare_residual(rule, shape, s, tol * 1e-4L);
    if (rd.exactly_one) return {0.0L, 0.0L, 0};
    if (rd.nu * s <= 1.0L)
        throw std::domain_error("euler_product_log_deriv: nu*s <= 1");

    // per-prime term: d/ds log F(p^-s) = -ln p * z F'(z)/F(z)
    if (P == 0) {
        P = 64;
        for (;;) {
            long double z0 = powl(static_cast<long double>(P), -s);
            if (z0 < 0.5L) {
                long double K = rd.C2 * tail_cubic(z0, rd.nu) / powl(z0, static_cast<long double>(rd.nu));
                long double a = rd.nu * s - 1.0L;
                long double lp = logl(static_cast<long double>(P));
                long double S = 2.0L * K * powl(static_cast<long double>(P), -a) * (lp / a + 1.0L / (a * a));
                if (S <= 0.45L * tol) break;
            }
            P *= 2;
            if (P > (u64(1) << 33))
                throw std::runtime_error("euler_product_log_deriv: cutoff beyond 2^33");
        }
    }
    const std::vector<u64> base = primes_up_to(integer_kth_root(P, 2) + 1);
    Segmenter grid(2, P, u64(1) << 22);
    const i64 nseg = static_cast<i64>(grid.count());
    std::vector<long double> partial(nseg, 0.0L);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
#endif
    for (i64 i = 0; i < nseg; ++i) {
        std::vector<u64> ps = primes_in_range(grid.seg_lo(i), grid.seg_hi(i), base);
        KahanSum ks;
        for (u64 p : ps) {
            long double z = powl(static_cast<long double>(p), -s);
            auto [f, trunc] = eval_factor(rd, z);
            (void)trunc;
            long double df = 0.0L, zm = powl(z, static_cast<long double>(rd.nu));
            const int M = static_cast<int>(rd.c.size()) - 1;
            for (int m = rd.nu; m <= M; ++m) {
                df += rd.c[m] * m * zm;
                if (rd.C2 * tail_cubic(z, m + 1) < 1e-19L) break;
                zm *= z;
            }
            ks.add(-logl(static_cast<long double>(p)) * df / f);
        }
        partial[i] = ks.value();
    }
    long double value = 0.0L;
    for (i64 i = 0; i < nseg; ++i) value += partial[i];
    long double z0 = powl(static_cast<long double>(P), -s);
    long double K = rd.C2 * tail_cubic(z0, rd.nu) / powl(z0, static_cast<long double>(rd.nu));
    long double a = rd.nu * s - 1.0L;
    long double lp = logl(static_cast<long double>(P));
    long double tail = 2.0L * K * powl(static_cast<long double>(P), -a) * (lp / a + 1.0L / (a * a));
    return {value, tail + 1e-16L, P};
}

// ---------------------------------------------------------------------------
// named constants
// ---------------------------------------------------------------------------

namespace {
const ZetaShape kShapeMuExp = {{1, 1}, {2, -2}}; // zeta(s)/zeta^2(2s)

ZetaShape shape_qre(int r) {
    int R = 1 << r;
    return {{1, 1}, {R + 1, 1}, {R, -1}, {2 * R, -1}};
}
} // namespace

EulerConstant constant_A1(long double tol) {
    // W1(1)/zeta^2(2)
    ZetaValue z2 = zeta_real(2.0L, 1e-16L);
    long double denom = z2.value * z2.value;
    EulerConstant w = euler_product(rule_mu_exp(256), kShapeMuExp, 1.0L, tol * denom * 0.5L, 0, "W1(1)");
    EulerConstant out;
    out.name = "A1";
    out.s = 1.0L;
    out.definition = "W1(1)/zeta(2)^2, residual-series route";
    out.value = w.value / denom;
    out.tail_bound = w.tail_bound / denom + fabsl(w.value) * 2.0L * z2.abs_error_bound / (denom * z2.value) + 1e-18L;
    out.prime_cutoff = w.prime_cutoff;
    return out;
}

EulerConstant constant_A1_direct(long double tol) {
    // prod_p (1 + sum_{n>=2} (mu(n)-mu(n-1)) p^-n): the mu^(e) local factor
    // with only the zeta(s) pole removed
    EulerConstant out = euler_product(rule_mu_exp(256), {{1, 1}}, 1.0L, tol, 0, "A1");
    out.definition = "prod_p (1 + sum_{n>=2} (mu(n)-mu(n-1)) p^-n)";
    return out;
}

EulerConstant constant_A2(long double tol) {
    ZetaValue z2 = zeta_real(2.0L, 1e-16L);
    long double denom = z2.value * z2.value;
    EulerConstant w = euler_product(rule_mu_exp_star(256), kShapeMuExp, 1.0L, tol * denom * 0.5L, 0, "W2(1)");
    EulerConstant out;
    out.name = "A2";
    out.s = 1.0L;
    out.definition = "W2(1)/zeta(2)^2, residual-series route";
    out.value = w.value / denom;
    out.tail_bound = w.tail_bound / denom + fabsl(w.value) * 2.0L * z2.abs_error_bound / (denom * z2.value) + 1e-18L;
    out.prime_cutoff = w.prime_cutoff;
    return out;
}

EulerConstant constant_A2_direct(long double tol) {
    EulerConstant out = euler_product(rule_mu_exp_star(256), {{1, 1}}, 1.0L, tol, 0, "A2");
    out.definition = "prod_p (1 + sum_{n>=2} ((-1)^omega(n) - (-1)^omega(n-1)) p^-n)";
    return out;
}

EulerConstant constant_C1(int r, long double tol) {
    const int R = 1 << r;
    EulerConstant u = euler_product(rule_q_r_exp(r, 512), shape_qre(r), 1.0L, tol * 0.2L, 0, "U_r(1)");
    ZetaValue za = zeta_real(static_cast<long double>(R + 1), 1e-16L);
    ZetaValue zb = zeta_real(static_cast<long double>(R), 1e-16L);
    ZetaValue zc = zeta_real(static_cast<long double>(2 * R), 1e-16L);
    EulerConstant out;
    out.name = "C1_" + std::to_string(r);
    out.s = 1.0L;
    out.definition = "zeta(2^r+1) U_r(1) / (zeta(2^r) zeta(2^{r+1}))";
    long double denom = zb.value * zc.value;
    out.value = za.value * u.value / denom;
    out.tail_bound = (za.value * u.tail_bound + fabsl(u.value) * za.abs_error_bound) / denom +
                     fabsl(out.value) * (zb.abs_error_bound / zb.value + zc.abs_error_bound / zc.value) + 1e-18L;
    out.prime_cutoff = u.prime_cutoff;
    return out;
}

EulerConstant constant_C2(int r, long double tol) {
    const int R = 1 << r;
    const long double s = 1.0L / (R + 1);
    EulerConstant u = euler_product(rule_q_r_exp(r, 2048), shape_qre(r), s, tol * 0.2L, 0, "U_r(1/(2^r+1))");
    ZetaValue za = zeta_real(s, 1e-15L);
    ZetaValue zb = zeta_real(static_cast<long double>(R) * s, 1e-15L);
    ZetaValue zc = zeta_real(static_cast<long double>(2 * R) * s, 1e-15L);
    EulerConstant out;
    out.name = "C2_" + std::to_string(r);
    out.s = s;
    out.definition = "zeta(1/(2^r+1)) U_r(1/(2^r+1)) / (zeta(2^r/(2^r+1)) zeta(2^{r+1}/(2^r+1)))";
    long double denom = zb.value * zc.value;
    out.value = za.value * u.value / denom;
    out.tail_bound = (fabsl(za.value) * u.tail_bound + fabsl(u.value) * za.abs_error_bound) / fabsl(denom) +
                     fabsl(out.value) * (zb.abs_error_bound / fabsl(zb.value) + zc.abs_error_bound / fabsl(zc.value)) +
                     1e-18L;
    out.prime_cutoff = u.prime_cutoff;
    return out;
}

EulerConstant constant_by_name(const std::string& name, long double tol) {
    if (name == "A1") return constant_A1(tol);
    if (name == "A1_direct") return constant_A1_direct(tol);
    if (name == "A2") return constant_A2(tol);
    if (name == "A2_direct") return constant_A2_direct(tol);
    if (name.rfind("C1_", 0) == 0) return constant_C1(std::stoi(name.substr(3)), tol);
    if (name.rfind("C2_", 0) == 0) return constant_C2(std::stoi(name.substr(3)), tol);
    throw std::invalid_argument("unknown constant: " + name);
}

} // namespace zetalab
