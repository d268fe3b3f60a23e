#include "zetalab/summatory.hpp"
#include "zetalab/local_series.hpp"
#include "zetalab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetalab {

// ---------------------------------------------------------------------------
// counting kernels
// ---------------------------------------------------------------------------

i64 hyperbola_count(int a, int b, u64 x) {
    if (a < 1 || b < 1) throw std::invalid_argument("hyperbola_count: a,b >= 1");
    if (x == 0) return 0;
    if (a > b) std::swap(a, b);
    if (a == b) {
        // m1^a m2^a <= x  <=>  m1 m2 <= floor(x^(1/a))
        u64 y = integer_kth_root(x, static_cast<unsigned>(a));
        u64 q = integer_kth_root(y, 2);
        i64 s = 0;
        for (u64 d = 1; d <= q; ++d) s += static_cast<i64>(y / d);
        return 2 * s - static_cast<i64>(q * q);
    }
    // split at Y = floor(x^(1/(a+b))): m2 <= Y directly, m2 > Y through m1
    const u64 Y = integer_kth_root(x, static_cast<unsigned>(a + b));
    i64 total = 0;
    for (u64 m2 = 1; m2 <= Y; ++m2)
        total += static_cast<i64>(root_of_quotient(x, pow_saturating(m2, static_cast<unsigned>(b)), static_cast<unsigned>(a)));
    const u64 X1 = root_of_quotient(x, pow_saturating(Y + 1, static_cast<unsigned>(b)), static_cast<unsigned>(a));
    for (u64 m1 = 1; m1 <= X1; ++m1)
        total += static_cast<i64>(root_of_quotient(x, pow_saturating(m1, static_cast<unsigned>(a)), static_cast<unsigned>(b)) - Y);
    return total;
}

i64 hyperbola_count_reference(int a, int b, u64 x) {
    i64 total = 0;
    for (u64 m1 = 1; pow_saturating(m1, static_cast<unsigned>(a)) <= x; ++m1)
        for (u64 m2 = 1; pow_saturating(m1, static_cast<unsigned>(a)) * pow_saturating(m2, static_cast<unsigned>(b)) <= x &&
                         pow_saturating(m2, static_cast<unsigned>(b)) <= x; ++m2)
            ++total;
    return total;
}

i64 summatory_abc(const ProblemSpec& spec, u64 x) {
    if (x == 0) return 0;
    const u64 lmax = integer_kth_root(x, static_cast<unsigned>(spec.c));
    const FuncTable mu = sieve_mu_k(spec.k, 1, std::max<u64>(lmax, 1));
    i128 total = 0;
    for (u64 l = 1; l <= lmax; ++l) {
        const i64 mul = mu.at(l);
        if (mul == 0) continue;
        total += static_cast<i128>(mul) *
                 hyperbola_count(spec.a, spec.b, x / pow_saturating(l, static_cast<unsigned>(spec.c)));
    }
    if (total > std::numeric_limits<i64>::max() || total < std::numeric_limits<i64>::min())
        throw std::overflow_error("summatory_abc: result exceeds 64 bits");
    return static_cast<i64>(total);
}

i64 summatory_abc_from_table(const FuncTable& f, u64 x) {
    if (f.lo != 1 || x > f.hi) throw std::invalid_argument("summatory_abc_from_table: table must cover [1,x]");
    i128 s = 0;
    for (u64 n = 1; n <= x; ++n) s += f.values[n - 1];
    return static_cast<i64>(s);
}

i64 summatory_ac(int a, int c, int k, u64 x) {
    if (!(1 <= a && a < c)) throw std::invalid_argument("summatory_ac: needs 1 <= a < c");
    if (x == 0) return 0;
    const u64 dmax = integer_kth_root(x, static_cast<unsigned>(c));
    const FuncTable mu = sieve_mu_k(k, 1, std::max<u64>(dmax, 1));
    i128 total = 0;
    for (u64 d = 1; d <= dmax; ++d) {
        const i64 mud = mu.at(d);
        if (mud == 0) continue;
        total += static_cast<i128>(mud) *
                 static_cast<i128>(root_of_quotient(x, pow_saturating(d, static_cast<unsigned>(c)), static_cast<unsigned>(a)));
    }
    return static_cast<i64>(total);
}

i64 summatory_rule_sum(const ExponentRule& rule, u64 x, bool parallel) {
    if (x == 0) return 0;
    const auto base = primes_up_to(integer_kth_root(x, 2) + 1);
    Segmenter grid(1, x);
    const i64 nseg = static_cast<i64>(grid.count());
    std::vector<i128> partial(nseg, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel ? thread_count() : 1)
#endif
    for (i64 i = 0; i < nseg; ++i) {
        const u64 L = grid.seg_lo(i), R = grid.seg_hi(i);
        FuncTable seg = sieve_rule(rule, L, R, false);
        i128 s = 0;
        for (i64 v : seg.values) s += v;
        partial[i] = s;
    }
    i128 total = 0;
    for (i64 i = 0; i < nseg; ++i) total += partial[i];
    if (total > std::numeric_limits<i64>::max() || total < std::numeric_limits<i64>::min())
        throw std::overflow_error("summatory_rule_sum overflows 64 bits");
    return static_cast<i64>(total);
}

// segmented u_k values over [L, R] written into out[0..R-L]
static void uk_segment(int a, int c, const FuncTable& mu, u64 dmax, u64 L, u64 R, i64* out) {
    std::fill(out, out + (R - L + 1), 0);
    for (u64 d = 1; d <= dmax; ++d) {
        const i64 mud = mu.at(d);
        if (mud == 0) continue;
        const u64 dc = pow_saturating(d, static_cast<unsigned>(c));
        if (dc > R) break;
        u64 l = integer_kth_root((L + dc - 1) / dc, static_cast<unsigned>(a));
        while (pow_saturating(l, static_cast<unsigned>(a)) <= (L - 1) / dc) ++l;
        for (;; ++l) {
            const u64 la = pow_saturating(l, static_cast<unsigned>(a));
            if (la > R / dc) break;
            const u64 n = la * dc;
            if (n >= L) out[n - L] += mud;
        }
    }
}

i128 uk_weighted_tail_sum(int a, int c, int k, u64 x, u64 mmax, int b, u64 y) {
    if (mmax == 0) return 0;
    const u64 dmax = integer_kth_root(mmax, static_cast<unsigned>(c));
    const FuncTable mu = sieve_mu_k(k, 1, std::max<u64>(dmax, 1));
    Segmenter grid(1, mmax, u64(1) << 21);
    const i64 nseg = static_cast<i64>(grid.count());
    std::vector<i128> partial(nseg, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
#endif
    for (i64 i = 0; i < nseg; ++i) {
        const u64 L = grid.seg_lo(i), R = grid.seg_hi(i);
        std::vector<i64> seg(R - L + 1);
        uk_segment(a, c, mu, dmax, L, R, seg.data());
        i128 s = 0;
        for (u64 m = L; m <= R; ++m) {
            const i64 u = seg[m - L];
            if (u == 0) continue;
            s += static_cast<i128>(u) * static_cast<i128>(root_of_quotient(x, m, static_cast<unsigned>(b)) - y);
        }
        partial[i] = s;
    }
    i128 total = 0;
    for (i64 i = 0; i < nseg; ++i) total += partial[i];
    return total;
}

UkPartialSums uk_partial_sums(int a, int c, int k, u64 mmax, long double s) {
    UkPartialSums out;
    out.prefix.assign(mmax + 1, 0);
    FuncTable u = sieve_u_k(a, c, k, 1, std::max<u64>(mmax, 1));
    KahanSum ks;
    i64 run = 0;
    for (u64 m = 1; m <= mmax; ++m) {
        const i64 v = u.at(m);
        run += v;
        out.prefix[m] = run;
        if (v != 0) ks.add(static_cast<long double>(v) * powl(static_cast<long double>(m), -s));
    }
    out.weighted_sum = ks.value();
    return out;
}

// ---------------------------------------------------------------------------
// main terms
// ---------------------------------------------------------------------------

long double eval_main_terms(const std::vector<MainTerm>& terms, u64 x) {
    long double lx = logl(static_cast<long double>(x));
    long double total = 0;
    for (const auto& t : terms) {
        long double xe = powl(static_cast<long double>(x), rat_ld(t.exponent));
        total += t.coeff * xe * powl(lx, static_cast<long double>(t.log_power));
    }
    return total;
}

long double main_terms_allowance(const std::vector<MainTerm>& terms, u64 x) {
    long double lx = logl(static_cast<long double>(x));
    long double total = 0;
    for (const auto& t : terms) {
        long double xe = powl(static_cast<long double>(x), rat_ld(t.exponent));
        total += t.coeff_err * xe * powl(std::max(lx, 1.0L), static_cast<long double>(t.log_power));
    }
    return total + 1e-15L * fabsl(eval_main_terms(terms, x));
}

// ---------------------------------------------------------------------------
// problem registry
// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ':') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

Problem spec_problem(const std::string& id, int a, int b, int c, int k) {
    Problem p;
    p.kind = Problem::Kind::spec_abc;
    p.id = id;
    p.spec = ProblemSpec(a, b, c, k);
    p.main_kind = (a == b) ? Problem::MainKind::zeta_double_pole : Problem::MainKind::zeta_pair;
    return p;
}

Problem ukac_problem(const std::string& id, int a, int c, int k) {
    Problem p;
    p.kind = Problem::Kind::uk_ac;
    p.id = id;
    p.a = a;
    p.c = c;
    p.k = k;
    p.main_kind = Problem::MainKind::uk_power;
    return p;
}

} // namespace

Problem problem_from_id(const std::string& id) {
    if (id == "squarefull") return spec_problem(id, 2, 3, 6, 1);
    if (id == "lr32") return spec_problem(id, 1, 3, 2, 1);
    if (id == "esqfree") return spec_problem(id, 1, 5, 4, 1);
    if (id == "dd2") return spec_problem(id, 1, 1, 2, 3);
    if (id == "dd3") return spec_problem(id, 1, 1, 3, 4);
    if (id == "sqfree") return ukac_problem(id, 1, 2, 1);
    if (id == "cubefree") return ukac_problem(id, 1, 3, 1);
    if (id.rfind("abck:", 0) == 0) {
        auto v = parse_ints(id.substr(5));
        if (v.size() != 4) throw std::invalid_argument("abck:a,b,c,k expects four integers");
        return spec_problem(id, v[0], v[1], v[2], v[3]);
    }
    if (id.rfind("ukac:", 0) == 0) {
        auto v = parse_ints(id.substr(5));
        if (v.size() != 3) throw std::invalid_argument("ukac:a,c,k expects three integers");
        return ukac_problem(id, v[0], v[1], v[2]);
    }
    Problem p;
    p.kind = Problem::Kind::rule_sum;
    p.id = id;
    if (id == "mue") {
        p.rule = rule_mu_exp();
        p.main_kind = Problem::MainKind::mue_linear;
        return p;
    }
    if (id == "mue_star") {
        p.rule = rule_mu_exp_star();
        p.main_kind = Problem::MainKind::mue_star_linear;
        return p;
    }
    if (id.rfind("qre:", 0) == 0) {
        p.r = std::stoi(id.substr(4));
        p.rule = rule_q_r_exp(p.r);
        p.main_kind = Problem::MainKind::qre_linear;
        return p;
    }
    if (id.rfind("taurfree:", 0) == 0) {
        p.r = std::stoi(id.substr(9));
        p.rule = rule_tau_times_q_r(p.r);
        p.main_kind = Problem::MainKind::tau_rfree_pole;
        return p;
    }
    throw std::invalid_argument("unknown problem id: " + id);
}

std::vector<MainTerm> problem_main_terms(const Problem& p, long double tol) {
    std::vector<MainTerm> terms;
    switch (p.main_kind) {
    case Problem::MainKind::zeta_pair: {
        const auto& sp = *p.spec;
        ZetaValue zb = zeta_real(static_cast<long double>(sp.b) / sp.a, tol);
        ZetaValue zca = zeta_real(static_cast<long double>(sp.c) / sp.a, tol);
        ZetaValue za = zeta_real(static_cast<long double>(sp.a) / sp.b, tol);
        ZetaValue zcb = zeta_real(static_cast<long double>(sp.c) / sp.b, tol);
        long double d1 = powl(zca.value, sp.k);
        long double c1 = zb.value / d1;
        long double e1 = (zb.abs_error_bound + fabsl(zb.value) * sp.k * zca.abs_error_bound / fabsl(zca.value)) / fabsl(d1);
        terms.push_back({c1, e1, Rat(1, sp.a), 0});
        long double d2 = powl(zcb.value, sp.k);
        long double c2 = za.value / d2;
        long double e2 = (za.abs_error_bound + fabsl(za.value) * sp.k * zcb.abs_error_bound / fabsl(zcb.value)) / fabsl(d2);
        terms.push_back({c2, e2, Rat(1, sp.b), 0});
        break;
    }
    case Problem::MainKind::zeta_double_pole: {
        // residue of zeta(as)^2/zeta^k(cs) x^s/s at s = 1/a:
        // x^(1/a) [ ln x / a + 2 gamma - 1 - (k c / a) zeta'(c/a)/zeta(c/a) ] / zeta^k(c/a)
        const auto& sp = *p.spec;
        long double ca = static_cast<long double>(sp.c) / sp.a;
        ZetaValue z = zeta_real(ca, tol);
        ZetaValue zd = zeta_deriv_real(ca, tol);
        long double zk = powl(z.value, sp.k);
        long double c_log = 1.0L / (sp.a * zk);
        long double logratio = zd.value / z.value;
        long double c0 = (2.0L * kEulerGamma - 1.0L - (static_cast<long double>(sp.k) * sp.c / sp.a) * logratio) / zk;
        long double rel_z = z.abs_error_bound / fabsl(z.value);
        long double e_log = c_log * sp.k * rel_z;
        long double e0 = fabsl(c0) * sp.k * rel_z +
                         (static_cast<long double>(sp.k) * sp.c / sp.a) *
                             (zd.abs_error_bound / fabsl(z.value) + fabsl(logratio) * rel_z) / zk;
        terms.push_back({c_log, e_log, Rat(1, sp.a), 1});
        terms.push_back({c0, e0, Rat(1, sp.a), 0});
        break;
    }
    case Problem::MainKind::uk_power: {
        ZetaValue z = zeta_real(static_cast<long double>(p.c) / p.a, tol);
        long double zk = powl(z.value, p.k);
        long double coeff = 1.0L / zk;
        long double err = fabsl(coeff) * p.k * z.abs_error_bound / fabsl(z.value);
        terms.push_back({coeff, err, Rat(1, p.a), 0});
        break;
    }
    case Problem::MainKind::qre_linear: {
        EulerConstant c1 = constant_C1(p.r, std::min<long double>(tol, 1e-8L));
        EulerConstant c2 = constant_C2(p.r, 1e-4L);
        terms.push_back({c1.value, c1.tail_bound, Rat(1), 0});
        terms.push_back({c2.value, c2.tail_bound, Rat(1, (1 << p.r) + 1), 0});
        break;
    }
    case Problem::MainKind::mue_linear: {
        EulerConstant a1 = constant_A1(std::min<long double>(tol, 1e-8L));
        terms.push_back({a1.value, a1.tail_bound, Rat(1), 0});
        break;
    }
    case Problem::MainKind::mue_star_linear: {
        EulerConstant a2 = constant_A2(std::min<long double>(tol, 1e-8L));
        terms.push_back({a2.value, a2.tail_bound, Rat(1), 0});
        break;
    }
    case Problem::MainKind::tau_rfree_pole: {
        // Res_{s=1} zeta^2(s) G(s) x^s / s with G = V_r / zeta^{r+1}(rs):
        // x [ G(1) ln x + (2 gamma - 1) G(1) + G'(1) ]
        const int r = p.r;
        EulerConstant v = euler_product(rule_tau_times_q_r(r, 256), {{1, 2}, {r, -(r + 1)}}, 1.0L,
                                        std::min<long double>(tol, 1e-9L), 0, "V_r(1)");
        LogDerivative ld = euler_product_log_deriv(rule_tau_times_q_r(r, 256), {{1, 2}, {r, -(r + 1)}}, 1.0L, 1e-9L);
        ZetaValue z = zeta_real(static_cast<long double>(r), tol);
        ZetaValue zd = zeta_deriv_real(static_cast<long double>(r), tol);
        long double zk = powl(z.value, r + 1);
        long double G1 = v.value / zk;
        long double rel = v.tail_bound / fabsl(v.value) + (r + 1) * z.abs_error_bound / fabsl(z.value);
        long double Gp_over_G = ld.value - static_cast<long double>(r) * (r + 1) * zd.value / z.value;
        long double c1 = G1;
        long double c0 = (2.0L * kEulerGamma - 1.0L + Gp_over_G) * G1;
        long double e1 = fabsl(G1) * rel;
        long double e0 = fabsl(c0) * rel +
                         fabsl(G1) * (ld.tail_bound + static_cast<long double>(r) * (r + 1) *
                                                                (zd.abs_error_bound / fabsl(z.value) +
                                                                 fabsl(zd.value / z.value) * z.abs_error_bound / fabsl(z.value)));
        terms.push_back({c1, e1, Rat(1), 1});
        terms.push_back({c0, e0, Rat(1), 0});
        break;
    }
    }
    return terms;
}

i64 problem_exact_sum(const Problem& p, u64 x) {
    switch (p.kind) {
    case Problem::Kind::spec_abc:
        return summatory_abc(*p.spec, x);
    case Problem::Kind::uk_ac:
        return summatory_ac(p.a, p.c, p.k, x);
    case Problem::Kind::rule_sum:
        return summatory_rule_sum(*p.rule, x);
    }
    throw std::logic_error("problem_exact_sum: unreachable");
}

SummatoryReport delta_report(const Problem& p, u64 x, const std::vector<MainTerm>& terms) {
    SummatoryReport rep;
    rep.problem = p.id;
    rep.x = x;
    rep.exact_sum = problem_exact_sum(p, x);
    rep.main_terms = terms;
    rep.main_total = eval_main_terms(terms, x);
    rep.delta = static_cast<long double>(rep.exact_sum) - rep.main_total;
    rep.delta_allowance = main_terms_allowance(terms, x);
    return rep;
}

SummatoryReport delta_report(const Problem& p, u64 x, long double tol) {
    return delta_report(p, x, problem_main_terms(p, tol));
}

// ---------------------------------------------------------------------------
// psi-sum identity
// ---------------------------------------------------------------------------

namespace {
// psi((x/w)^(1/a)) with the integer part taken exactly
long double psi_of_root_quotient(u64 x, u64 w, int a) {
    const u64 R = root_of_quotient(x, w, static_cast<unsigned>(a));
    if (pow_saturating(R, static_cast<unsigned>(a)) == x / w && x % w == 0)
        return -0.5L; // exact a-th power: fractional part 0
    long double t = powl(static_cast<long double>(x) / w, 1.0L / a);
    long double frac = t - static_cast<long double>(R);
    if (frac < 0) frac = 0;
    if (frac >= 1) frac = nextafterl(1.0L, 0.0L);
    return frac - 0.5L;
}
} // namespace

Theorem2Report theorem2_psi_sum(int a, int c, int k, u64 x, u64 y, long double tol) {
    if (!(1 <= a && a < c)) throw std::invalid_argument("theorem2_psi_sum: needs 1 <= a < c");
    const u64 dmax = integer_kth_root(x, static_cast<unsigned>(c));
    if (y > std::max<u64>(dmax, 1)) throw std::invalid_argument("theorem2_psi_sum: y out of range");
    const u64 D1 = 10 * std::max<u64>(dmax, 1);
    const FuncTable mu = sieve_mu_k(k, 1, D1);
    Theorem2Report rep;

    KahanSum psum;
    for (u64 l = 1; l <= y; ++l) {
        const i64 m = mu.at(l);
        if (m == 0) continue;
        psum.add(static_cast<long double>(m) * psi_of_root_quotient(x, pow_saturating(l, static_cast<unsigned>(c)), a));
    }
    rep.psi_sum = psum.value();

    KahanSum half;
    i128 count = 0;
    for (u64 d = 1; d <= dmax; ++d) {
        const i64 m = mu.at(d);
        if (m == 0) continue;
        const u64 dc = pow_saturating(d, static_cast<unsigned>(c));
        half.add(static_cast<long double>(m) * (psi_of_root_quotient(x, dc, a) + 0.5L));
        count += static_cast<i128>(m) * static_cast<i128>(root_of_quotient(x, dc, static_cast<unsigned>(a)));
    }
    rep.half_sum = half.value();

    ZetaValue z = zeta_real(static_cast<long double>(c) / a, tol);
    long double zk = powl(z.value, k);
    long double x1a = powl(static_cast<long double>(x), 1.0L / a);
    rep.delta_value = static_cast<long double>(static_cast<i64>(count)) - x1a / zk;

    // tail sum_{d > dmax} mu_k(d) d^(-c/a): the stretch to D1 directly, the
    // rest by Abel summation against the observed Mertens-type bound
    const long double s = static_cast<long double>(c) / a;
    KahanSum tail;
    i64 M_run = 0;
    long double mert = 0; // max |sum_{d<=t} mu_k(d)| / sqrt(t) over the sieved range
    for (u64 d = 1; d <= D1; ++d) {
        const i64 m = mu.at(d);
        M_run += m;
        if (d > dmax && m != 0) tail.add(static_cast<long double>(m) * powl(static_cast<long double>(d), -s));
        long double ratio = fabsl(static_cast<long double>(M_run)) / sqrtl(static_cast<long double>(d));
        if (ratio > mert) mert = ratio;
    }
    rep.tail_estimate = tail.value();
    // |sum_{d>D1} mu_k d^-s| = |s int_D1^inf (M(t)-M(D1)) t^(-s-1) dt|
    //                       <= s * 2 * (3 mert) sqrt(t) tail integral
    rep.tail_uncertainty = 6.0L * mert * s / (s - 0.5L) * powl(static_cast<long double>(D1), 0.5L - s);

    rep.identity_residual = rep.delta_value + rep.half_sum + x1a * rep.tail_estimate;
    rep.identity_allowance = x1a * rep.tail_uncertainty +
                             x1a * k * z.abs_error_bound / fabsl(z.value) / zk + 1e-9L * x1a;
    return rep;
}

PartialSumIdentityReport partial_sum_identity(int a, int c, int k, u64 x, u64 T, long double s) {
    if (!(1 <= a && a < c)) throw std::invalid_argument("partial_sum_identity: needs 1 <= a < c");
    if (!(x >= 2 && T > 2 * x)) throw std::invalid_argument("partial_sum_identity: needs T > 2x");
    if (fabsl(s * a - 1.0L) < 1e-9L || fabsl(s * c - 1.0L) < 1e-9L)
        throw std::domain_error("partial_sum_identity: s at a pole of the closed form");

    UkPartialSums ps = uk_partial_sums(a, c, k, T, s);
    // recompute the weighted sum only through x
    KahanSum lhs;
    for (u64 m = 1; m <= x; ++m) {
        i64 v = ps.prefix[m] - ps.prefix[m - 1];
        if (v != 0) lhs.add(static_cast<long double>(v) * powl(static_cast<long double>(m), -s));
    }

    ZetaValue zca = zeta_real(static_cast<long double>(c) / a, 1e-14L);
    ZetaValue zas = zeta_real(s * a, 1e-14L);
    ZetaValue zcs = zeta_real(s * c, 1e-14L);
    const long double zk_ca = powl(zca.value, k);
    const long double zk_cs = powl(zcs.value, k);

    auto delta_at = [&](u64 t) {
        return static_cast<long double>(ps.prefix[t]) - powl(static_cast<long double>(t), 1.0L / a) / zk_ca;
    };

    // I = int_x^T Delta(t) t^(-s-1) dt with A(t) piecewise constant
    KahanSum integral;
    for (u64 n = x; n < T; ++n) {
        long double u = static_cast<long double>(n), v = u + 1.0L;
        long double w = (powl(u, -s) - powl(v, -s)) / s; // int t^(-s-1)
        integral.add(static_cast<long double>(ps.prefix[n]) * w);
    }
    long double e = 1.0L / a - s;
    long double power_part;
    if (fabsl(e) > 1e-12L)
        power_part = (powl(static_cast<long double>(T), e) - powl(static_cast<long double>(x), e)) / e;
    else
        power_part = logl(static_cast<long double>(T) / x);
    long double I = integral.value() - power_part / zk_ca;

    // empirical bound max |Delta(t)| t^(-1/(a+c)) over [x, T], with slack
    long double theta = 1.0L / (a + c);
    long double C = 0;
    for (u64 t = x; t <= T; t += std::max<u64>(1, (T - x) / 4096)) {
        long double r = fabsl(delta_at(t)) * powl(static_cast<long double>(t), -theta);
        if (r > C) C = r;
    }
    C *= 3.0L;
    if (s <= theta) throw std::domain_error("partial_sum_identity: s too small for the tail bound");
    long double tail_bound = s * C * powl(static_cast<long double>(T), theta - s) / (s - theta);

    PartialSumIdentityReport rep;
    rep.lhs = lhs.value();
    rep.rhs = powl(static_cast<long double>(x), 1.0L / a - s) / ((1.0L - a * s) * zk_ca) +
              zas.value / zk_cs + delta_at(x) * powl(static_cast<long double>(x), -s) - s * I;
    rep.residual = rep.lhs - rep.rhs;
    rep.allowance = tail_bound +
                    (zas.abs_error_bound + fabsl(zas.value) * k * zcs.abs_error_bound / fabsl(zcs.value)) / fabsl(zk_cs) +
                    powl(static_cast<long double>(x), 1.0L / a - s) * k * zca.abs_error_bound /
                        (fabsl(1.0L - a * s) * fabsl(zca.value) * zk_ca) +
                    1e-12L * (fabsl(rep.lhs) + 1.0L) + 1e-10L;
    return rep;
}

// ---------------------------------------------------------------------------
// log-log slope fit
// ---------------------------------------------------------------------------

FitResult fit_error_exponent(const Problem& p, const std::vector<u64>& grid, long double tol) {
    if (grid.size() < 8) throw std::invalid_argument("fit_error_exponent: need >= 8 grid points");
    FitResult fr;
    std::vector<MainTerm> terms = problem_main_terms(p, tol);
    for (u64 x : grid) {
        SummatoryReport rep = delta_report(p, x, terms);
        FitPoint pt{x, rep.delta, fabsl(rep.delta) >= 1.0L};
        fr.table.push_back(pt);
    }
    long double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int n = 0;
    for (const auto& pt : fr.table) {
        if (!pt.used) continue;
        long double lx = logl(static_cast<long double>(pt.x));
        long double ly = logl(fabsl(pt.delta));
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; syy += ly * ly;
        ++n;
    }
    fr.used = n;
    if (n < 4) throw std::runtime_error("fit_error_exponent: fewer than 4 usable points");
    long double denom = n * sxx - sx * sx;
    fr.slope = static_cast<double>((n * sxy - sx * sy) / denom);
    fr.intercept = static_cast<double>((sy * sxx - sx * sxy) / denom);
    long double ssr = syy - (sy * sy) / n;
    long double sse = ssr - (n * sxy - sx * sy) * (n * sxy - sx * sy) / (n * denom);
    fr.r2 = ssr > 0 ? static_cast<double>(1.0L - sse / ssr) : 1.0;
    if (p.kind == Problem::Kind::spec_abc) {
        const auto& sp = *p.spec;
        fr.conjectured_exponent = std::max(1.0 / (2.0 * (sp.a + sp.b)), 1.0 / (2.0 * sp.c));
        fr.omega_exponent = fr.conjectured_exponent;
    } else {
        fr.conjectured_exponent = std::numeric_limits<double>::quiet_NaN();
        fr.omega_exponent = std::numeric_limits<double>::quiet_NaN();
    }
    return fr;
}

} // namespace zetalab
