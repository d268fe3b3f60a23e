#pragma once

// Sieve-based and direct evaluation of the arithmetic functions generated
// by zeta(as) zeta(bs) / zeta^k(cs) and their relatives:
//
//   mu_k      coefficients of 1/zeta^k(s); mu_k(p^e) = (-1)^e C(k,e), e <= k
//   tau_k     k-dimensional divisor function, tau_1 == 1
//   d(a,b;n)  #{(m1,m2) : m1^a m2^b = n}
//   u_k       u_k(a;c;n) = sum_{n = l^a d^c} mu_k(d)
//   f_k       f_k(a,b;c;n) = sum_{n = m1 m2^c} d(a,b;m1) mu_k(m2)
//
// plus the indicator/exponential families (q_r, q_r^(e), f_{(a,b)},
// g_{l,r}, tau^(e), mu^(e), mu^(e)*).  Every one of these is multiplicative
// with a prime-power value depending only on the exponent, so a single
// segmented sieve engine covers all of them.

#include "zetalab/common.hpp"

#include <string>
#include <vector>

namespace zetalab {

// Parameter quadruple of zeta(as) zeta(bs) / zeta^k(cs).
// Admissible when 1 <= a <= b, a < c < 2(a+b), c != b, gcd(a,b,c) = 1.
struct ProblemSpec {
    int a = 1, b = 1, c = 2, k = 1;
    ProblemSpec(int a_, int b_, int c_, int k_, bool relaxed = false);
    std::string name() const;
};

struct FuncTable {
    std::string function_id;
    u64 lo = 1, hi = 0;
    std::vector<i64> values; // values[i] = f(lo + i)

    i64 at(u64 n) const;
    i64 sum() const; // overflow-checked accumulation
};

// f(p^e) = h[e] for all primes p: the shape shared by every family here.
// h[0] must be 1; exponents >= h.size() are invalid (guarded at sieve time,
// h always extends to e = 63 in the built-in rules).
struct ExponentRule {
    std::string id;
    std::vector<i64> h;
    i64 value_at_exponent(unsigned e) const;
};

// Built-in rules.  emax = number of tabulated exponents; 64 covers any
// u64 argument, the series code asks for more.
ExponentRule rule_mobius(unsigned emax = 64);
ExponentRule rule_mu_k(int k, unsigned emax = 64);
ExponentRule rule_tau_k(int k, unsigned emax = 64);
ExponentRule rule_q_r(int r, unsigned emax = 64);           // r-free indicator
ExponentRule rule_q_r_exp(int r, unsigned emax = 64);       // e-r-free: every exponent r-free
ExponentRule rule_tau_exp(unsigned emax = 64);              // number of exponential divisors
ExponentRule rule_mu_exp(unsigned emax = 64);               // e-convolution inverse of 1
ExponentRule rule_mu_exp_star(unsigned emax = 64);          // e-unitary analogue
ExponentRule rule_f_ab(int a, int b, unsigned emax = 64);   // exponents in aZ union (at+b), a does not divide b
ExponentRule rule_g_lr(int l, int r, unsigned emax = 64);   // (l,r)-integers, 1 < r < l
ExponentRule rule_squarefull(unsigned emax = 64);           // alias of rule_f_ab(2,3)
ExponentRule rule_tau_times_q_r(int r, unsigned emax = 64); // tau(n) q_r(n)

// Named dispatch used by the CLI: mobius, mu_k, tau_k, qr, qre, taue, mue,
// mue_star, fab, glr, squarefull, tau_qr.  p1/p2 carry the family params.
ExponentRule rule_by_name(const std::string& name, int p1, int p2, unsigned emax = 64);

// Segmented sieve of any exponent rule over [lo, hi]; OpenMP across fixed
// segments, bit-identical to the serial pass.
FuncTable sieve_rule(const ExponentRule& rule, u64 lo, u64 hi, bool parallel = true);

FuncTable sieve_mobius(u64 lo, u64 hi);
FuncTable sieve_mu_k(int k, u64 lo, u64 hi);

// Pointwise evaluation by trial-division factorization (test oracle and
// spot checks; fine up to ~1e14).
std::vector<std::pair<u64, int>> factorize(u64 n);
i64 eval_rule_at(const ExponentRule& rule, u64 n);
i64 mu_k_point(int k, u64 n);

// d(a,b;n), exact count of m1^a m2^b = n
i64 d_ab_point(int a, int b, u64 n);
// dense table d(a,b;n) for n = 1..n_max (index 0 unused)
std::vector<i64> d_ab_dense(int a, int b, u64 n_max);

i64 u_k_eval(int a, int c, int k, u64 n);
FuncTable sieve_u_k(int a, int c, int k, u64 lo, u64 hi);

i64 f_k_eval(const ProblemSpec& spec, u64 n);
// dense over [1, hi] via the d(a,b) table convolved with mu_k along c-th powers
FuncTable sieve_f_k(const ProblemSpec& spec, u64 hi);

FuncTable indicator_family(const std::string& name, int p1, int p2, u64 lo, u64 hi);

// Dirichlet convolution of dense tables (index n = 1..N), the oracle for
// sieved mu_k and the (4.5) identity checks.
std::vector<i64> dirichlet_convolve(const std::vector<i64>& f, const std::vector<i64>& g);

i64 binomial_i64(int n, int k);

} // namespace zetalab
