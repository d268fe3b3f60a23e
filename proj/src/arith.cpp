#include "zetalab/arith.hpp"
#include "zetalab/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetalab {

// ---------------------------------------------------------------------------
// rational helpers (declared in rational.hpp)
// ---------------------------------------------------------------------------

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
    return Rat(num, den);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string rat_pair_common_den(const Rat& a, const Rat& b) {
    BigInt da = denominator(a), db = denominator(b);
    BigInt l = da / gcd(da, db) * db;
    std::ostringstream os;
    os << numerator(a) * (l / da) << "/" << l << " " << numerator(b) * (l / db) << "/" << l;
    return os.str();
}

long double rat_ld(const Rat& r) {
    return numerator(r).convert_to<long double>() / denominator(r).convert_to<long double>();
}

// ---------------------------------------------------------------------------
// ProblemSpec
// ---------------------------------------------------------------------------

ProblemSpec::ProblemSpec(int a_, int b_, int c_, int k_, bool relaxed)
    : a(a_), b(b_), c(c_), k(k_) {
    if (a < 1 || b < 1 || c < 1 || k < 1)
        throw std::invalid_argument("ProblemSpec: parameters must be positive");
    if (relaxed) return;
    std::string why;
    if (!(a <= b)) why = "requires a <= b";
    else if (!(a < c && c < 2 * (a + b))) why = "requires a < c < 2(a+b)";
    else if (c == b) why = "requires c != b";
    else if (std::gcd(std::gcd(a, b), c) != 1) why = "requires gcd(a,b,c) = 1";
    if (!why.empty())
        throw std::invalid_argument("ProblemSpec(" + name() + "): " + why);
}

std::string ProblemSpec::name() const {
    std::ostringstream os;
    os << "f_" << k << "(" << a << "," << b << ";" << c << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// FuncTable
// ---------------------------------------------------------------------------

i64 FuncTable::at(u64 n) const {
    if (n < lo || n > hi) throw std::out_of_range("FuncTable::at: n outside [lo,hi]");
    return values[n - lo];
}

i64 FuncTable::sum() const {
    i128 acc = 0;
    for (i64 v : values) acc += v;
    if (acc > std::numeric_limits<i64>::max() || acc < std::numeric_limits<i64>::min())
        throw std::overflow_error("FuncTable::sum overflows 64 bits");
    return static_cast<i64>(acc);
}

// ---------------------------------------------------------------------------
// exponent rules
// ---------------------------------------------------------------------------

namespace {

int small_omega(unsigned m) {
    int w = 0;
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ++w;
            while (m % p == 0) m /= p;
        }
    if (m > 1) ++w;
    return w;
}

int small_mobius(unsigned m) {
    int sign = 1;
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
    if (m > 1) sign = -sign;
    return sign;
}

bool exponent_is_r_free(unsigned m, int r) {
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e >= r) return false;
        }
    return true;
}

int small_tau(unsigned m) {
    int t = 1;
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            t *= e + 1;
        }
    if (m > 1) t *= 2;
    return t;
}
} // namespace

i64 ExponentRule::value_at_exponent(unsigned e) const {
    if (e >= h.size()) throw std::out_of_range("ExponentRule: exponent beyond table");
    return h[e];
}

i64 binomial_i64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    i128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<i64>::max()) throw std::overflow_error("binomial_i64");
    }
    return static_cast<i64>(r);
}

ExponentRule rule_mobius(unsigned emax) {
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    h[1] = -1;
    return {"mobius", h};
}

ExponentRule rule_mu_k(int k, unsigned emax) {
    if (k < 1) throw std::invalid_argument("rule_mu_k: k >= 1");
    std::vector<i64> h(emax, 0);
    for (int e = 0; e <= k && e < static_cast<int>(emax); ++e)
        h[e] = (e % 2 == 0 ? 1 : -1) * binomial_i64(k, e);
    return {"mu_" + std::to_string(k), h};
}

ExponentRule rule_tau_k(int k, unsigned emax) {
    if (k < 1) throw std::invalid_argument("rule_tau_k: k >= 1");
    std::vector<i64> h(emax, 0);
    for (unsigned e = 0; e < emax; ++e) h[e] = binomial_i64(static_cast<int>(e) + k - 1, k - 1);
    return {"tau_" + std::to_string(k), h};
}

ExponentRule rule_q_r(int r, unsigned emax) {
    if (r < 2) throw std::invalid_argument("rule_q_r: r >= 2");
    std::vector<i64> h(emax, 0);
    for (unsigned e = 0; e < emax; ++e) h[e] = (static_cast<int>(e) < r) ? 1 : 0;
    return {"q_" + std::to_string(r), h};
}

ExponentRule rule_q_r_exp(int r, unsigned emax) {
    if (r < 2) throw std::invalid_argument("rule_q_r_exp: r >= 2");
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    for (unsigned e = 1; e < emax; ++e) h[e] = exponent_is_r_free(e, r) ? 1 : 0;
    return {"q_" + std::to_string(r) + "^(e)", h};
}

ExponentRule rule_tau_exp(unsigned emax) {
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    for (unsigned e = 1; e < emax; ++e) h[e] = small_tau(e);
    return {"tau^(e)", h};
}

ExponentRule rule_mu_exp(unsigned emax) {
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    for (unsigned e = 1; e < emax; ++e) h[e] = small_mobius(e);
    return {"mu^(e)", h};
}

ExponentRule rule_mu_exp_star(unsigned emax) {
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    for (unsigned e = 1; e < emax; ++e) h[e] = (small_omega(e) % 2 == 0) ? 1 : -1;
    return {"mu^(e)*", h};
}

ExponentRule rule_f_ab(int a, int b, unsigned emax) {
    if (a < 1 || b < 1 || b % a == 0)
        throw std::invalid_argument("rule_f_ab: needs a,b >= 1 with a not dividing b");
    std::vector<i64> h(emax, 0);
    h[0] = 1;
    for (unsigned e = 1; e < emax; ++e) {
        int ei = static_cast<int>(e);
        h[e] = (ei % a == 0 || (ei >= b && (ei - b) % a == 0)) ? 1 : 0;
    }
    return {"f_(" + std::to_string(a) + "," + std::to_string(b) + ")", h};
}

ExponentRule rule_g_lr(int l, int r, unsigned emax) {
    if (!(1 < r && r < l)) throw std::invalid_argument("rule_g_lr: needs 1 < r < l");
    std::vector<i64> h(emax, 0);
    // p^e = (p^t)^l * p^(e - lt); the smallest reachable residue is e mod l
    for (unsigned e = 0; e < emax; ++e) h[e] = (static_cast<int>(e % l) < r) ? 1 : 0;
    return {"g_{" + std::to_string(l) + "," + std::to_string(r) + "}", h};
}

ExponentRule rule_squarefull(unsigned emax) {
    ExponentRule rule = rule_f_ab(2, 3, emax);
    rule.id = "squarefull";
    return rule;
}

ExponentRule rule_tau_times_q_r(int r, unsigned emax) {
    if (r < 2) throw std::invalid_argument("rule_tau_times_q_r: r >= 2");
    std::vector<i64> h(emax, 0);
    for (unsigned e = 0; e < emax; ++e) h[e] = (static_cast<int>(e) < r) ? (static_cast<i64>(e) + 1) : 0;
    return {"tau*q_" + std::to_string(r), h};
}

ExponentRule rule_by_name(const std::string& name, int p1, int p2, unsigned emax) {
    if (name == "mobius") return rule_mobius(emax);
    if (name == "mu_k") return rule_mu_k(p1, emax);
    if (name == "tau_k") return rule_tau_k(p1, emax);
    if (name == "qr") return rule_q_r(p1, emax);
    if (name == "qre") return rule_q_r_exp(p1, emax);
    if (name == "taue") return rule_tau_exp(emax);
    if (name == "mue") return rule_mu_exp(emax);
    if (name == "mue_star") return rule_mu_exp_star(emax);
    if (name == "fab") return rule_f_ab(p1, p2, emax);
    if (name == "glr") return rule_g_lr(p1, p2, emax);
    if (name == "squarefull") return rule_squarefull(emax);
    if (name == "tau_qr") return rule_tau_times_q_r(p1, emax);
    throw std::invalid_argument("unknown function family: " + name);
}

// ---------------------------------------------------------------------------
// segmented multiplicative sieve
// ---------------------------------------------------------------------------

namespace {

// One segment [L, R]: peel prime powers off every entry, multiply h[e].
void sieve_segment(const ExponentRule& rule, u64 L, u64 R,
                   const std::vector<u64>& base_primes, i64* out) {
    const u64 len = R - L + 1;
    std::vector<u64> rem(len);
    for (u64 i = 0; i < len; ++i) { rem[i] = L + i; out[i] = 1; }
    if (L == 0) { rem[0] = 1; out[0] = 0; } // n = 0 never requested; guard anyway
    for (u64 p : base_primes) {
        if (p * p > R) break;
        for (u64 n = ((L + p - 1) / p) * p; n >= L && n <= R; n += p) {
            u64 i = n - L;
            unsigned e = 0;
            while (rem[i] % p == 0) { rem[i] /= p; ++e; }
            out[i] *= rule.h[e];
            if (n + p < n) break; // wrap guard
        }
    }
    for (u64 i = 0; i < len; ++i)
        if (rem[i] > 1) out[i] *= rule.h[1]; // one prime factor > sqrt(R) left
    if (L <= 1 && 1 <= R) out[1 - L] = 1;    // f(1) = 1 for every rule
}

} // namespace

FuncTable sieve_rule(const ExponentRule& rule, u64 lo, u64 hi, bool parallel) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("sieve_rule: need 1 <= lo <= hi");
    FuncTable t;
    t.function_id = rule.id;
    t.lo = lo;
    t.hi = hi;
    t.values.assign(hi - lo + 1, 0);
    const auto base = primes_up_to(integer_kth_root(hi, 2) + 1);
    Segmenter grid(lo, hi);
    const i64 nseg = static_cast<i64>(grid.count());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel ? thread_count() : 1)
#endif
    for (i64 s = 0; s < nseg; ++s) {
        u64 L = grid.seg_lo(s), R = grid.seg_hi(s);
        sieve_segment(rule, L, R, base, t.values.data() + (L - lo));
    }
    return t;
}

FuncTable sieve_mobius(u64 lo, u64 hi) { return sieve_rule(rule_mobius(), lo, hi); }

FuncTable sieve_mu_k(int k, u64 lo, u64 hi) { return sieve_rule(rule_mu_k(k), lo, hi); }

// ---------------------------------------------------------------------------
// pointwise evaluation
// ---------------------------------------------------------------------------

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

i64 eval_rule_at(const ExponentRule& rule, u64 n) {
    if (n == 0) throw std::invalid_argument("eval_rule_at: n >= 1");
    i64 v = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        v *= rule.value_at_exponent(static_cast<unsigned>(e));
        if (v == 0) return 0;
    }
    return v;
}

i64 mu_k_point(int k, u64 n) { return eval_rule_at(rule_mu_k(k), n); }

// ---------------------------------------------------------------------------
// d(a,b;n), u_k, f_k
// ---------------------------------------------------------------------------

i64 d_ab_point(int a, int b, u64 n) {
    if (a < 1 || b < 1 || n < 1) throw std::invalid_argument("d_ab_point: bad arguments");
    if (a == b) {
        // m1^a m2^a = n needs n = t^a, then count ordered pairs m1 m2 = t
        u64 t = integer_kth_root(n, static_cast<unsigned>(a));
        if (pow_saturating(t, static_cast<unsigned>(a)) != n) return 0;
        i64 cnt = 0;
        for (auto [p, e] : factorize(t)) { (void)p; cnt = (cnt == 0 ? e + 1 : cnt * (e + 1)); }
        return t == 1 ? 1 : cnt;
    }
    i64 cnt = 0;
    for (u64 m2 = 1;; ++m2) {
        u64 q = pow_saturating(m2, static_cast<unsigned>(b));
        if (q > n) break;
        if (n % q != 0) continue;
        u64 m = n / q;
        u64 r = integer_kth_root(m, static_cast<unsigned>(a));
        if (pow_saturating(r, static_cast<unsigned>(a)) == m) ++cnt;
    }
    return cnt;
}

std::vector<i64> d_ab_dense(int a, int b, u64 n_max) {
    std::vector<i64> d(n_max + 1, 0);
    for (u64 m1 = 1;; ++m1) {
        u64 pa = pow_saturating(m1, static_cast<unsigned>(a));
        if (pa > n_max) break;
        for (u64 m2 = 1;; ++m2) {
            u64 pb = pow_saturating(m2, static_cast<unsigned>(b));
            if (pb > n_max / pa) break;
            d[pa * pb] += 1;
        }
    }
    return d;
}

i64 u_k_eval(int a, int c, int k, u64 n) {
    if (!(1 <= a && a < c)) throw std::invalid_argument("u_k_eval: needs 1 <= a < c");
    i64 s = 0;
    const ExponentRule mu = rule_mu_k(k);
    for (u64 d = 1;; ++d) {
        u64 q = pow_saturating(d, static_cast<unsigned>(c));
        if (q > n) break;
        if (n % q != 0) continue;
        u64 m = n / q;
        u64 r = integer_kth_root(m, static_cast<unsigned>(a));
        if (pow_saturating(r, static_cast<unsigned>(a)) == m) s += eval_rule_at(mu, d);
    }
    return s;
}

FuncTable sieve_u_k(int a, int c, int k, u64 lo, u64 hi) {
    if (!(1 <= a && a < c)) throw std::invalid_argument("sieve_u_k: needs 1 <= a < c");
    if (lo < 1 || hi < lo) throw std::invalid_argument("sieve_u_k: need 1 <= lo <= hi");
    FuncTable t;
    t.function_id = "u_" + std::to_string(k) + "(" + std::to_string(a) + ";" + std::to_string(c) + ")";
    t.lo = lo;
    t.hi = hi;
    t.values.assign(hi - lo + 1, 0);
    const u64 dmax = integer_kth_root(hi, static_cast<unsigned>(c));
    const FuncTable mu = sieve_mu_k(k, 1, std::max<u64>(dmax, 1));
    Segmenter grid(lo, hi);
    const i64 nseg = static_cast<i64>(grid.count());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
#endif
    for (i64 s = 0; s < nseg; ++s) {
        const u64 L = grid.seg_lo(s), R = grid.seg_hi(s);
        i64* out = t.values.data() + (L - lo);
        for (u64 d = 1; d <= dmax; ++d) {
            const i64 mud = mu.at(d);
            if (mud == 0) continue;
            const u64 dc = pow_saturating(d, static_cast<unsigned>(c));
            if (dc > R) break;
            // l^a dc in [L, R]; l^a dc < L  <=>  l^a <= (L-1)/dc
            u64 l = integer_kth_root((L + dc - 1) / dc, static_cast<unsigned>(a));
            while (pow_saturating(l, static_cast<unsigned>(a)) <= (L - 1) / dc) ++l;
            for (;; ++l) {
                u64 la = pow_saturating(l, static_cast<unsigned>(a));
                if (la > R / dc) break;
                u64 n = la * dc;
                if (n > R) break;
                if (n >= L) out[n - L] += mud;
            }
        }
    }
    return t;
}

i64 f_k_eval(const ProblemSpec& spec, u64 n) {
    i64 s = 0;
    const ExponentRule mu = rule_mu_k(spec.k);
    for (u64 m2 = 1;; ++m2) {
        u64 q = pow_saturating(m2, static_cast<unsigned>(spec.c));
        if (q > n) break;
        if (n % q != 0) continue;
        i64 mud = eval_rule_at(mu, m2);
        if (mud != 0) s += mud * d_ab_point(spec.a, spec.b, n / q);
    }
    return s;
}

FuncTable sieve_f_k(const ProblemSpec& spec, u64 hi) {
    FuncTable t;
    t.function_id = spec.name();
    t.lo = 1;
    t.hi = hi;
    t.values.assign(hi, 0);
    const std::vector<i64> d = d_ab_dense(spec.a, spec.b, hi);
    const u64 m2max = integer_kth_root(hi, static_cast<unsigned>(spec.c));
    const FuncTable mu = sieve_mu_k(spec.k, 1, std::max<u64>(m2max, 1));
    for (u64 m2 = 1; m2 <= m2max; ++m2) {
        const i64 mud = mu.at(m2);
        if (mud == 0) continue;
        const u64 q = pow_saturating(m2, static_cast<unsigned>(spec.c));
        for (u64 m1 = 1; m1 <= hi / q; ++m1)
            t.values[m1 * q - 1] += mud * d[m1];
    }
    return t;
}

FuncTable indicator_family(const std::string& name, int p1, int p2, u64 lo, u64 hi) {
    return sieve_rule(rule_by_name(name, p1, p2), lo, hi);
}

std::vector<i64> dirichlet_convolve(const std::vector<i64>& f, const std::vector<i64>& g) {
    const u64 n = std::min(f.size(), g.size()) - 1;
    std::vector<i64> out(n + 1, 0);
    for (u64 a = 1; a <= n; ++a) {
        if (f[a] == 0) continue;
        for (u64 b = 1; a * b <= n; ++b) out[a * b] += f[a] * g[b];
    }
    return out;
}

} // namespace zetalab
