#pragma once

// Exact summatory functions, main-term evaluation, and error terms.
//
//   D(a,b;x)      = #{ m1^a m2^b <= x }        (hyperbola split)
//   A_k(a,b;c;x)  = sum_{l^c<=x} mu_k(l) D(a,b; x/l^c)
//   A_k(a;c;x)    = sum_{d^c<=x} mu_k(d) floor((x/d^c)^(1/a))
//
// plus linear passes for the indicator families.  Every floor of a
// fractional root goes through root_of_quotient, so the sums are exact
// integers; main terms carry propagated zeta-error bounds and delta is
// reported with its allowance.

#include "zetalab/arith.hpp"
#include "zetalab/common.hpp"
#include "zetalab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zetalab {

i64 hyperbola_count(int a, int b, u64 x);
i64 hyperbola_count_reference(int a, int b, u64 x); // brute double loop

i64 summatory_abc(const ProblemSpec& spec, u64 x);
i64 summatory_abc_from_table(const FuncTable& f, u64 x); // prefix sum of a dense sieve
i64 summatory_ac(int a, int c, int k, u64 x);

// streamed sum_{n<=x} f(n) for an exponent rule; OpenMP over fixed
// segments, deterministic combine
i64 summatory_rule_sum(const ExponentRule& rule, u64 x, bool parallel = true);

// sum_{m<=mmax} u_k(a;c;m) * (floor((x/m)^(1/b)) - y), streamed u_k sieve
i128 uk_weighted_tail_sum(int a, int c, int k, u64 x, u64 mmax, int b, u64 y);
// sum_{m<=mmax} u_k(a;c;m) m^(-s) and prefix data, for the partial-sum identity
struct UkPartialSums {
    long double weighted_sum = 0; // sum u(m) m^-s
    std::vector<i64> prefix;      // A_k(a;c;n) for n = 0..mmax
};
UkPartialSums uk_partial_sums(int a, int c, int k, u64 mmax, long double s);

struct MainTerm {
    long double coeff = 0;
    long double coeff_err = 0;
    Rat exponent;
    int log_power = 0;
};
long double eval_main_terms(const std::vector<MainTerm>& terms, u64 x);
long double main_terms_allowance(const std::vector<MainTerm>& terms, u64 x);

// ---------------------------------------------------------------------------
// problem registry
// ---------------------------------------------------------------------------

struct Problem {
    enum class Kind { spec_abc, uk_ac, rule_sum };
    Kind kind = Kind::spec_abc;
    std::string id;
    std::optional<ProblemSpec> spec; // spec_abc
    int a = 0, c = 0, k = 0;         // uk_ac
    std::optional<ExponentRule> rule; // rule_sum
    enum class MainKind { zeta_pair, zeta_double_pole, uk_power, qre_linear, mue_linear, mue_star_linear, tau_rfree_pole };
    MainKind main_kind = MainKind::zeta_pair;
    int r = 0; // qre / tau_rfree parameter
};

// squarefull, lr32, esqfree, dd2, dd3, sqfree, cubefree, mue, mue_star,
// qre:R, taurfree:R, abck:a,b,c,k, ukac:a,c,k
Problem problem_from_id(const std::string& id);

std::vector<MainTerm> problem_main_terms(const Problem& p, long double tol);
i64 problem_exact_sum(const Problem& p, u64 x);

struct SummatoryReport {
    std::string problem;
    u64 x = 0;
    i64 exact_sum = 0;
    std::vector<MainTerm> main_terms;
    long double main_total = 0;
    long double delta = 0;
    long double delta_allowance = 0;
};
SummatoryReport delta_report(const Problem& p, u64 x, long double tol = 1e-10L);
SummatoryReport delta_report(const Problem& p, u64 x, const std::vector<MainTerm>& terms);

// ---------------------------------------------------------------------------
// psi-sum expression of Delta_k(a;c;x) and its exact complement identity:
// Delta + sum_{d<=x^(1/c)} mu_k(d)(psi((x/d^c)^(1/a)) + 1/2)
//       + x^(1/a) sum_{d>x^(1/c)} mu_k(d) d^(-c/a)  =  0,
// the infinite tail estimated through 10 x^(1/c) with an Abel-summation
// remainder bound from the observed mu_k partial sums.
// ---------------------------------------------------------------------------

struct Theorem2Report {
    long double psi_sum = 0;            // sum_{l<=y} mu_k(l) psi((x/l^c)^(1/a))
    long double delta_value = 0;        // Delta_k(a;c;x)
    long double half_sum = 0;           // full-range sum of mu_k (psi + 1/2)
    long double tail_estimate = 0;      // sum_{x^(1/c)<d<=10 x^(1/c)} mu_k(d) d^(-c/a)
    long double tail_uncertainty = 0;   // Abel remainder beyond the sieved range
    long double identity_residual = 0;  // delta + half_sum + x^(1/a) tail_estimate
    long double identity_allowance = 0; // x^(1/a) tail_uncertainty + zeta error
};
Theorem2Report theorem2_psi_sum(int a, int c, int k, u64 x, u64 y, long double tol = 1e-10L);

// partial-sum identity sum_{m<=x} u_k m^-s = x^(1/a-s)/((1-as) zeta^k(c/a))
// + zeta(as)/zeta^k(cs) + Delta(x) x^-s - s int_x^inf Delta(t) t^(-s-1) dt,
// integral evaluated exactly on [x,T], the rest bounded empirically
struct PartialSumIdentityReport {
    long double lhs = 0;
    long double rhs = 0;
    long double residual = 0;
    long double allowance = 0;
};
PartialSumIdentityReport partial_sum_identity(int a, int c, int k, u64 x, u64 T, long double s);

// ---------------------------------------------------------------------------
// slope fit of log|Delta| against log x
// ---------------------------------------------------------------------------

struct FitPoint {
    u64 x;
    long double delta;
    bool used;
};
struct FitResult {
    double slope = 0, intercept = 0, r2 = 0;
    int used = 0;
    std::vector<FitPoint> table;
    double conjectured_exponent = 0; // max(1/(2(a+b)), 1/(2c)) for spec problems, NaN otherwise
    double omega_exponent = 0;       // the matching lower-bound exponent
};
FitResult fit_error_exponent(const Problem& p, const std::vector<u64>& grid, long double tol = 1e-10L);

} // namespace zetalab
