#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/summatory.hpp"
#include "zetalab/zeta.hpp"

#include <cmath>
#include <random>

using namespace zetalab;

TEST_CASE("hyperbola count against the brute double loop") {
    CHECK(hyperbola_count(1, 1, 10) == 27);
    CHECK(hyperbola_count(1, 1, 1) == 1);
    CHECK(hyperbola_count(2, 3, 100) == hyperbola_count_reference(2, 3, 100));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        int a = 1 + static_cast<int>(rng() % 3);
        int b = a + static_cast<int>(rng() % 3);
        u64 x = 1 + rng() % 50000;
        REQUIRE(hyperbola_count(a, b, x) == hyperbola_count_reference(a, b, x));
    }
}

TEST_CASE("summatory_abc: squarefull count and sieve agreement") {
    ProblemSpec sq(2, 3, 6, 1);
    CHECK(summatory_abc(sq, 100) == 14);
    CHECK(summatory_abc(sq, 1) == 1);
    FuncTable f = sieve_f_k(sq, 200000);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        u64 x = 1 + rng() % 200000;
        REQUIRE(summatory_abc(sq, x) == summatory_abc_from_table(f, x));
    }
}

TEST_CASE("summatory_ac: squarefree count and u_k sieve") {
    CHECK(summatory_ac(1, 2, 1, 100) == 61);
    CHECK(summatory_ac(1, 2, 1, 1) == 1);
    FuncTable u = sieve_u_k(2, 4, 1, 1, 100000);
    i64 run = 0;
    std::mt19937_64 rng(31);
    std::vector<i64> prefix(100001, 0);
    for (u64 n = 1; n <= 100000; ++n) { run += u.at(n); prefix[n] = run; }
    for (int i = 0; i < 50; ++i) {
        u64 x = 1 + rng() % 100000;
        REQUIRE(summatory_ac(2, 4, 1, x) == prefix[x]);
    }
}

TEST_CASE("summatory over rules: lr32 sum matches the abc route") {
    Problem lr = problem_from_id("lr32");
    FuncTable g = indicator_family("glr", 3, 2, 1, 10000);
    i64 run = 0;
    for (u64 n = 1; n <= 10000; ++n) run += g.at(n);
    CHECK(summatory_abc(*lr.spec, 10000) == run);
    CHECK(summatory_rule_sum(rule_g_lr(3, 2), 10000) == run);
}

TEST_CASE("main terms for the squarefull problem match the zeta quotients") {
    Problem p = problem_from_id("squarefull");
    auto terms = problem_main_terms(p, 1e-12L);
    REQUIRE(terms.size() == 2);
    ZetaValue z32 = zeta_real(1.5L, 1e-14L), z3 = zeta_real(3.0L, 1e-14L);
    ZetaValue z23 = zeta_real(2.0L / 3, 1e-14L), z2 = zeta_real(2.0L, 1e-14L);
    CHECK(static_cast<double>(terms[0].coeff) == doctest::Approx(static_cast<double>(z32.value / z3.value)).epsilon(1e-10));
    CHECK(terms[0].exponent == Rat(1, 2));
    CHECK(static_cast<double>(terms[1].coeff) == doctest::Approx(static_cast<double>(z23.value / z2.value)).epsilon(1e-10));
    CHECK(terms[1].exponent == Rat(1, 3));
    CHECK(terms[1].coeff < 0); // zeta(2/3) < 0
}

TEST_CASE("double-pole residue validated against numerical differentiation") {
    // residue of zeta(s)^2/zeta^k(2s) x^s/s at s = 1 equals
    // d/de [ e^2 zeta(1+e)^2 x^(1+e) / ((1+e) zeta^k(2+2e)) ] at e = 0
    Problem p = problem_from_id("dd2"); // (1,1,2,3)
    auto terms = problem_main_terms(p, 1e-12L);
    REQUIRE(terms.size() == 2);
    const double x = 1e6;
    long double direct = eval_main_terms(terms, static_cast<u64>(x));
    auto phi = [&](long double e) {
        ZetaValue z = zeta_real(1.0L + e, 1e-16L);
        ZetaValue z2 = zeta_real(2.0L + 2.0L * e, 1e-16L);
        return e * e * z.value * z.value * powl((long double)x, 1.0L + e) /
               ((1.0L + e) * powl(z2.value, 3));
    };
    const long double h = 1e-4L;
    long double numeric = (phi(h) - phi(-h)) / (2.0L * h);
    CHECK(static_cast<double>(direct) == doctest::Approx(static_cast<double>(numeric)).epsilon(1e-5));
}

TEST_CASE("delta at x = 1 is 1 minus the main terms") {
    for (const char* id : {"squarefull", "sqfree", "lr32"}) {
        Problem p = problem_from_id(id);
        SummatoryReport rep = delta_report(p, 1, 1e-10L);
        CHECK(rep.exact_sum == 1);
        CHECK(static_cast<double>(rep.delta) ==
              doctest::Approx(1.0 - static_cast<double>(rep.main_total)).epsilon(1e-12));
    }
}

TEST_CASE("squarefree delta at 100: 61 - 100/zeta(2)") {
    Problem p = problem_from_id("sqfree");
    SummatoryReport rep = delta_report(p, 100, 1e-12L);
    CHECK(rep.exact_sum == 61);
    ZetaValue z2 = zeta_real(2.0L, 1e-14L);
    CHECK(static_cast<double>(rep.delta) ==
          doctest::Approx(61.0 - 100.0 / static_cast<double>(z2.value)).epsilon(1e-10));
}

TEST_CASE("delta determinism across repeated runs") {
    Problem p = problem_from_id("squarefull");
    SummatoryReport a = delta_report(p, 1000000, 1e-10L);
    SummatoryReport b = delta_report(p, 1000000, 1e-10L);
    CHECK(a.delta == b.delta); // bitwise equal
    CHECK(a.exact_sum == b.exact_sum);
}

TEST_CASE("theorem-2 psi sum: pinned small cases") {
    // x = 1, y = 1: the only term is mu_k(1) psi(1) = -1/2
    Theorem2Report r = theorem2_psi_sum(1, 2, 1, 1, 1);
    CHECK(r.psi_sum == doctest::Approx(-0.5));
    // |psi| <= 1/2 so the partial sum over l <= 10 is at most sum |mu|/2
    Theorem2Report r2 = theorem2_psi_sum(1, 2, 1, 1000000, 10);
    CHECK(std::fabs(static_cast<double>(r2.psi_sum)) <= 0.5 * 7); // 7 squarefree l <= 10
}

TEST_CASE("theorem-2 exact complement identity holds within its allowance") {
    for (u64 x : {u64(10000), u64(100000), u64(1000000)}) {
        Theorem2Report r = theorem2_psi_sum(1, 2, 1, x, integer_kth_root(x, 2));
        INFO("x=", x, " residual=", static_cast<double>(r.identity_residual),
             " allowance=", static_cast<double>(r.identity_allowance));
        CHECK(std::fabs(static_cast<double>(r.identity_residual)) <=
              static_cast<double>(r.identity_allowance));
    }
    Theorem2Report r3 = theorem2_psi_sum(1, 4, 2, 500000, 10);
    CHECK(std::fabs(static_cast<double>(r3.identity_residual)) <=
          static_cast<double>(r3.identity_allowance));
}

TEST_CASE("partial-sum identity at real s") {
    for (long double s : {0.6L, 0.75L, 1.25L}) {
        PartialSumIdentityReport r = partial_sum_identity(1, 2, 1, 20000, 2000000, s);
        INFO("s=", static_cast<double>(s), " residual=", static_cast<double>(r.residual),
             " allowance=", static_cast<double>(r.allowance));
        CHECK(std::fabs(static_cast<double>(r.residual)) <= static_cast<double>(r.allowance));
    }
    CHECK_THROWS(partial_sum_identity(1, 2, 1, 20000, 2000000, 0.5L)); // pole of zeta(cs)
}

TEST_CASE("fit: degenerate inputs rejected") {
    Problem p = problem_from_id("squarefull");
    CHECK_THROWS(fit_error_exponent(p, {10, 20, 30})); // too few points
    // all-delta-below-1 grid: squarefull deltas are tiny for small x
    std::vector<u64> tiny = {10, 12, 14, 16, 18, 20, 22, 24};
    CHECK_THROWS_WITH_AS(fit_error_exponent(p, tiny), "fit_error_exponent: fewer than 4 usable points",
                         std::runtime_error);
}

TEST_CASE("fit: squarefree slope below 1/2 on a small grid") {
    Problem p = problem_from_id("sqfree");
    std::vector<u64> grid;
    for (int i = 0; i < 9; ++i) grid.push_back(static_cast<u64>(llroundl(powl(10.0L, 4.0L + 0.5L * i))));
    FitResult fr = fit_error_exponent(p, grid);
    CHECK(fr.used >= 4);
    CHECK(fr.slope < 0.5);
}
