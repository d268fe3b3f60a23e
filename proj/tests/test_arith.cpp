#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/arith.hpp"

#include <random>

using namespace zetalab;

namespace {

// trial-division mobius, the independent oracle
i64 mobius_ref(u64 n) {
    int count = 0;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++count;
        }
    if (n > 1) ++count;
    return (count % 2 == 0) ? 1 : -1;
}

} // namespace

TEST_CASE("integer kth root exact on random inputs") {
    CHECK(integer_kth_root(63, 3) == 3);
    CHECK(integer_kth_root(64, 3) == 4);
    CHECK(integer_kth_root(0, 5) == 0);
    CHECK(integer_kth_root(1, 7) == 1);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20000; ++i) {
        u64 x = rng() % (u64(1) << 62);
        unsigned k = 1 + rng() % 10;
        u64 r = integer_kth_root(x, k);
        u128 rk = 1, rk1 = 1;
        for (unsigned j = 0; j < k; ++j) { rk *= r; rk1 *= r + 1; }
        CHECK(rk <= x);
        CHECK(rk1 > x);
    }
    // perfect powers and their neighbours
    for (unsigned k = 2; k <= 10; ++k)
        for (u64 r = 1; r < 60; ++r) {
            u64 rk = pow_saturating(r, k);
            if (rk == ~u64(0)) continue;
            CHECK(integer_kth_root(rk, k) == r);
            CHECK(integer_kth_root(rk - 1, k) == r - 1);
            CHECK(integer_kth_root(rk + 1, k) == r);
        }
}

TEST_CASE("root_of_quotient matches the r^k w <= x contract") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        u64 x = rng() % (u64(1) << 60);
        u64 w = 1 + rng() % 100000;
        unsigned k = 1 + rng() % 6;
        u64 r = root_of_quotient(x, w, k);
        u128 rk = 1, rk1 = 1;
        for (unsigned j = 0; j < k; ++j) { rk *= r; rk1 *= r + 1; }
        CHECK(rk * w <= x);
        CHECK(rk1 * w > x);
    }
}

TEST_CASE("mobius sieve: first values and brute-force stretch") {
    FuncTable t = sieve_mobius(1, 4);
    CHECK(t.values == std::vector<i64>{1, -1, -1, 0});
    CHECK(sieve_mobius(30, 30).at(30) == -1);

    FuncTable big = sieve_mobius(1, 10000);
    i64 sum_sieve = 0, sum_ref = 0;
    for (u64 n = 1; n <= 10000; ++n) {
        sum_sieve += big.at(n);
        sum_ref += mobius_ref(n);
        REQUIRE(big.at(n) == mobius_ref(n));
    }
    CHECK(sum_sieve == sum_ref);
}

TEST_CASE("mu_k equals the k-fold Dirichlet convolution of mu") {
    const u64 N = 100000;
    FuncTable mu = sieve_mobius(1, N);
    std::vector<i64> mu_vec(N + 1, 0);
    for (u64 n = 1; n <= N; ++n) mu_vec[n] = mu.at(n);
    std::vector<i64> conv = mu_vec;
    for (int k = 1; k <= 3; ++k) {
        FuncTable mk = sieve_mu_k(k, 1, N);
        for (u64 n = 1; n <= N; ++n) REQUIRE(mk.at(n) == conv[n]);
        conv = dirichlet_convolve(conv, mu_vec);
    }
    CHECK(sieve_mu_k(2, 1, 10).at(1) == 1);
    CHECK(sieve_mu_k(2, 1, 10).at(2) == -2);
    CHECK(sieve_mu_k(2, 1, 10).at(4) == 1);
    CHECK(sieve_mu_k(2, 1, 10).at(8) == 0);
    CHECK(mu_k_point(3, 12) == -9);
}

TEST_CASE("tau_k * mu_k is the convolution identity") {
    const u64 N = 100000;
    for (int k = 1; k <= 3; ++k) {
        std::vector<i64> tk(N + 1, 0), mk(N + 1, 0);
        FuncTable t = sieve_rule(rule_tau_k(k), 1, N);
        FuncTable m = sieve_mu_k(k, 1, N);
        for (u64 n = 1; n <= N; ++n) { tk[n] = t.at(n); mk[n] = m.at(n); }
        std::vector<i64> e = dirichlet_convolve(tk, mk);
        REQUIRE(e[1] == 1);
        for (u64 n = 2; n <= N; ++n) REQUIRE(e[n] == 0);
    }
}

TEST_CASE("|mu_k| <= tau_k pointwise") {
    const u64 N = 20000;
    for (int k = 1; k <= 4; ++k) {
        FuncTable t = sieve_rule(rule_tau_k(k), 1, N);
        FuncTable m = sieve_mu_k(k, 1, N);
        for (u64 n = 1; n <= N; ++n) REQUIRE(std::abs(m.at(n)) <= t.at(n));
    }
}

TEST_CASE("d(a,b;n) counts decompositions") {
    CHECK(d_ab_point(1, 1, 6) == 4);
    CHECK(d_ab_point(1, 2, 4) == 2);
    CHECK(d_ab_point(2, 3, 64) == 2);
    // dense table vs pointwise
    auto dense = d_ab_dense(2, 3, 2000);
    for (u64 n = 1; n <= 2000; ++n) REQUIRE(dense[n] == d_ab_point(2, 3, n));
    auto tau = d_ab_dense(1, 1, 500);
    for (u64 n = 1; n <= 500; ++n) REQUIRE(tau[n] == d_ab_point(1, 1, n));
}

TEST_CASE("u_k values") {
    CHECK(u_k_eval(1, 2, 1, 4) == 0);  // squarefree indicator
    CHECK(u_k_eval(1, 2, 1, 6) == 1);
    CHECK(u_k_eval(1, 4, 1, 16) == 0); // mu(1) + mu(2)
    CHECK(u_k_eval(1, 2, 2, 12) == -1);
    FuncTable t = sieve_u_k(1, 2, 2, 1, 3000);
    for (u64 n = 1; n <= 3000; ++n) REQUIRE(t.at(n) == u_k_eval(1, 2, 2, n));
    FuncTable t2 = sieve_u_k(2, 5, 1, 1, 3000);
    for (u64 n = 1; n <= 3000; ++n) REQUIRE(t2.at(n) == u_k_eval(2, 5, 1, n));
}

TEST_CASE("f_k: squarefull indicator and leading coefficient") {
    ProblemSpec spec(2, 3, 6, 1);
    i64 count = 0;
    for (u64 n = 1; n <= 100; ++n) {
        i64 v = f_k_eval(spec, n);
        bool squarefull = true;
        for (auto [p, e] : factorize(n)) { (void)p; if (e < 2) squarefull = false; }
        REQUIRE(v == (squarefull ? 1 : 0));
        count += v;
    }
    CHECK(count == 14);
    CHECK(f_k_eval(spec, 12) == 0);
    CHECK(f_k_eval(ProblemSpec(1, 3, 2, 1), 1) == 1);
    CHECK(f_k_eval(ProblemSpec(1, 1, 2, 3), 1) == 1);
}

TEST_CASE("f_k sieve equals pointwise on random samples") {
    ProblemSpec spec(1, 1, 2, 3);
    FuncTable f = sieve_f_k(spec, 5000);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        u64 n = 1 + rng() % 5000;
        REQUIRE(f.at(n) == f_k_eval(spec, n));
    }
}

TEST_CASE("indicator families") {
    CHECK(indicator_family("qre", 2, 0, 16, 16).at(16) == 0); // exponent 4 = 2^2 not squarefree
    CHECK(indicator_family("qre", 2, 0, 12, 12).at(12) == 1);
    // f_{(2,3)} is the squarefull family
    FuncTable fab = indicator_family("fab", 2, 3, 1, 10000);
    FuncTable conv = sieve_f_k(ProblemSpec(2, 3, 6, 1), 10000);
    for (u64 n = 1; n <= 10000; ++n) REQUIRE(fab.at(n) == conv.at(n));
    // g_{3,2} against zeta(s) zeta(3s)/zeta(2s)
    FuncTable glr = indicator_family("glr", 3, 2, 1, 10000);
    FuncTable conv2 = sieve_f_k(ProblemSpec(1, 3, 2, 1), 10000);
    for (u64 n = 1; n <= 10000; ++n) REQUIRE(glr.at(n) == conv2.at(n));
    CHECK_THROWS(indicator_family("glr", 2, 3, 1, 10)); // needs r < l
    CHECK_THROWS(indicator_family("fab", 2, 4, 1, 10)); // needs a not dividing b
    CHECK_THROWS(indicator_family("qr", 1, 0, 1, 10));
}

TEST_CASE("batch sieves equal pointwise evaluation on random samples") {
    std::mt19937_64 rng(3);
    for (const char* name : {"qre", "taue", "mue", "mue_star", "qr"}) {
        ExponentRule rule = rule_by_name(name, 3, 0);
        FuncTable t = sieve_rule(rule, 1, 200000);
        for (int i = 0; i < 1000; ++i) {
            u64 n = 1 + rng() % 200000;
            REQUIRE(t.at(n) == eval_rule_at(rule, n));
        }
    }
}

TEST_CASE("windowed sieve equals full sieve") {
    FuncTable full = sieve_mu_k(2, 1, 200000);
    FuncTable win = sieve_mu_k(2, 123457, 150000);
    for (u64 n = win.lo; n <= win.hi; ++n) REQUIRE(win.at(n) == full.at(n));
}

TEST_CASE("parallel sieve is bit-identical to single-threaded") {
    FuncTable par = sieve_rule(rule_mu_k(3), 1, 300000, true);
    FuncTable ser = sieve_rule(rule_mu_k(3), 1, 300000, false);
    REQUIRE(par.values == ser.values);
}

TEST_CASE("ProblemSpec admissibility") {
    CHECK_NOTHROW(ProblemSpec(2, 3, 6, 1));
    CHECK_NOTHROW(ProblemSpec(1, 1, 2, 3));
    CHECK_THROWS(ProblemSpec(3, 2, 4, 1));  // a > b
    CHECK_THROWS(ProblemSpec(1, 2, 2, 1));  // c == b
    CHECK_THROWS(ProblemSpec(1, 2, 9, 1));  // c >= 2(a+b)
    CHECK_THROWS(ProblemSpec(2, 4, 6, 1));  // gcd > 1
    CHECK_NOTHROW(ProblemSpec(3, 2, 4, 1, true)); // relaxed for exploration
}
