#include "zetalab/exppair.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace zetalab {

bool ExponentPair::admissible() const {
    return kappa >= 0 && kappa <= Rat(1, 2) && lambda >= Rat(1, 2) && lambda <= 1;
}

ExponentPair process_A(const ExponentPair& p) {
    Rat den = 2 * p.kappa + 2;
    return {p.kappa / den, (p.kappa + p.lambda + 1) / den, "A" + p.word};
}

ExponentPair process_B(const ExponentPair& p) {
    return {p.lambda - Rat(1, 2), p.kappa + Rat(1, 2), "B" + p.word};
}

std::string expand_word(const std::string& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        char ch = word[i];
        if (ch == 'A' || ch == 'a' || ch == 'B' || ch == 'b') {
            char letter = static_cast<char>(std::toupper(ch));
            int rep = 1;
            if (i + 1 < word.size() && std::isdigit(static_cast<unsigned char>(word[i + 1]))) {
                rep = 0;
                while (i + 1 < word.size() && std::isdigit(static_cast<unsigned char>(word[i + 1]))) {
                    rep = rep * 10 + (word[++i] - '0');
                }
            }
            out.append(static_cast<size_t>(rep), letter);
        } else if (ch == '^') {
            continue;
        } else {
            throw std::invalid_argument("malformed exponent-pair word: " + word);
        }
    }
    return out;
}

ExponentPair eval_word(const std::string& word, const ExponentPair& base) {
    std::string w = expand_word(word);
    ExponentPair p = base;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        p = (*it == 'A') ? process_A(p) : process_B(p);
    return p;
}

ExponentPair base_trivial() { return {Rat(0), Rat(1), ""}; }
ExponentPair base_half() { return {Rat(1, 2), Rat(1, 2), ""}; }
ExponentPair base_sixth() { return {Rat(1, 6), Rat(4, 6), ""}; }

AlphaEntry alpha_r(const Rat& r) {
    if (r <= 1) throw std::domain_error("alpha_r: r > 1 required");
    AlphaEntry e;
    e.r = r;
    if (r <= 5) {
        if (r == 2) {
            e.alpha = Rat(17, 54);
            e.branch = "r=2";
        } else {
            e.alpha = Rat(7) / (8 * r + 6);
            e.branch = "1<r<=5, r!=2";
        }
        return e;
    }
    if (r <= 6) {
        e.alpha = Rat(67, 514);
        e.branch = "5<r<=6";
        return e;
    }
    if (r <= 12) {
        e.alpha = 11 * (r - 4) / (12 * r * r - 37 * r - 41);
        e.branch = "6<r<=12";
        return e;
    }
    if (r <= 20) {
        e.alpha = 23 * (r - 1) / (24 * r * r + 13 * r - 37);
        e.branch = "12<r<=20";
        return e;
    }
    // r > 20: the unique q >= 2 with (12Q-q-5)/2 < r <= (24Q-q-6)/2, Q = 2^q
    int found = 0, q_found = 0;
    for (int q = 2; q <= 62; ++q) {
        Rat Q = Rat(i64(1) << q);
        Rat lo = (12 * Q - q - 5) / 2;
        Rat hi = (24 * Q - q - 6) / 2;
        if (lo < r && r <= hi) {
            ++found;
            q_found = q;
        }
    }
    if (found == 0)
        throw std::domain_error("alpha_r: no q >= 2 brackets r (the interval (20, 20.5] has no branch)");
    if (found > 1) throw std::logic_error("alpha_r: bracketing q not unique");
    e.q = q_found;
    e.Q = i64(1) << q_found;
    Rat Q(e.Q);
    e.alpha = ((12 * Q - 1) * r - 12 * Q + 1) / (12 * Q * r * r + (6 * Q * q_found + 1) * r - (6 * Q * q_found + 12 * Q + 1));
    e.branch = "q=" + std::to_string(q_found);
    return e;
}

BetaEntry beta_r(const Rat& r) {
    if (r <= 1) throw std::domain_error("beta_r: r > 1 required");
    return {Rat(7) / (8 * r + 6), r <= Rat(9, 2)};
}

Rat corollary_c11(int a, int c, const Rat& alpha) {
    if (alpha >= Rat(1, c))
        throw std::domain_error("corollary_c11: requires alpha < 1/c");
    return (1 - a * alpha) / (a + c - 2 * a * c * alpha);
}

Rat corollary_c12(int a, int c) {
    if (!(1 <= a && a < c)) throw std::domain_error("corollary_c12: needs 1 <= a < c");
    return Rat(1, a + c);
}

Rat corollary_c13(int a, int b, const Rat& alpha) {
    if (alpha >= Rat(1, b))
        throw std::domain_error("corollary_c13: requires alpha < 1/b");
    return Rat(1) / (a + b - a * b * alpha);
}

Rat conjecture_exponent(int a, int b, int c) {
    Rat u(1, 2 * (a + b)), v(1, 2 * c);
    return u > v ? u : v;
}

std::vector<BoundRow> bounds_table() {
    std::vector<BoundRow> rows;
    auto push = [&rows](const std::string& name, const Rat& got, const Rat& want, const std::string& note) {
        rows.push_back({name, rat_str(got), rat_str(want), got == want, note});
    };

    ExponentPair p1 = eval_word("BA2BA", base_sixth());
    push("exppair_BA2BA_kappa", p1.kappa, Rat(13, 40), "BA2BA(1/6,4/6)");
    push("exppair_BA2BA_lambda", p1.lambda, Rat(22, 40), "BA2BA(1/6,4/6)");
    ExponentPair p2 = eval_word("A2BA", base_sixth());
    push("exppair_A2BA_kappa", p2.kappa, Rat(2, 40), "A2BA(1/6,4/6)");
    push("exppair_A2BA_lambda", p2.lambda, Rat(33, 40), "A2BA(1/6,4/6)");

    push("alpha_2", alpha_r(Rat(2)).alpha, Rat(17, 54), "exponent table");
    push("alpha_4", alpha_r(Rat(4)).alpha, Rat(7, 38), "exponent table");
    push("alpha_5", alpha_r(Rat(5)).alpha, Rat(7, 46), "endpoint of the first branch");
    push("alpha_6", alpha_r(Rat(6)).alpha, Rat(67, 514), "exponent table");
    push("beta_2", beta_r(Rat(2)).value, Rat(7, 22), "beta table; the mu^(e) error exponent");
    push("beta_4", beta_r(Rat(4)).value, Rat(7, 38), "beta table");
    push("beta_9_2", beta_r(Rat(9, 2)).value, Rat(1, 6), "range endpoint");

    push("tau_over_2free", corollary_c11(1, 2, Rat(131, 416)), Rat(285, 724),
         "divisor sum over squarefree, two-dimensional input 131/416");
    push("tau_over_3free", corollary_c11(1, 3, Rat(131, 416)), Rat(285, 878),
         "divisor sum over cubefree");
    push("e2free_rh", corollary_c13(1, 5, alpha_r(Rat(4)).alpha), Rat(38, 193),
         "e-squarefree via alpha(4)=7/38");
    push("e2free_bp", corollary_c13(1, 5, Rat(17, 94)), Rat(94, 479),
         "e-squarefree via the sharper alpha(4)=17/94");
    push("lr_32", corollary_c13(1, 3, alpha_r(Rat(2)).alpha), Rat(18, 55),
         "(3,2)-integers");
    push("sqfull_52", corollary_c13(2, 5, Rat(17, 54 * 2)), Rat(54, 37 * 5 + 54 * 2),
         "generalized squarefull, 54/(37a+54b) at (a,b)=(5,2)");
    push("sqfull_72", corollary_c13(2, 7, Rat(17, 54 * 2)), Rat(54, 37 * 7 + 54 * 2),
         "generalized squarefull at (a,b)=(7,2)");
    push("sqfull_93", corollary_c13(3, 9, Rat(17, 54 * 3)), Rat(54, 37 * 9 + 54 * 3),
         "generalized squarefull at (a,b)=(9,3)");
    push("conjecture_sqfull", conjecture_exponent(2, 3, 6), Rat(1, 10), "conjectured exponent");
    push("omega_sqfull", conjecture_exponent(2, 3, 6), Rat(1, 10), "matching lower-bound exponent");
    push("cor2_sqfree", corollary_c12(1, 2), Rat(1, 3), "u_k route, (a,c)=(1,2)");

    // e-square-free via exponential sums: target exponent, certified by the
    // budget rows below
    bool budget_ok = true;
    for (const auto& row : esqfree_budget())
        if (!row.holds) budget_ok = false;
    rows.push_back({"esqfree_expsum", "23/124", "23/124", budget_ok,
                    "all split-exponent budget terms stay <= 23/124"});
    return rows;
}

std::vector<BudgetRow> esqfree_budget() {
    const Rat target(23, 124);
    const Rat y(101, 744), y1(3, 62), y2(843, 10912);
    const Rat Y = 1 - 5 * y;          // x/y^5 as an exponent of x
    const Rat Z = (1 - Y) / 7;        // x^(1/7) Y^(-1/7)
    std::vector<BudgetRow> rows;
    auto push = [&](const std::string& label, const Rat& v) {
        rows.push_back({label, v, v <= target, v == target});
    };
    // head of the d <= y1 part, alpha(4) = 17/94 route
    push("S1: 17/94 + (9/94) y1", Rat(17, 94) + Rat(9, 94) * y1);
    // case y1 << D <= y2, after the (1/2,1/2) pair
    push("case1: 1/6", Rat(1, 6));
    push("case1: 1/5 - (3/10) y1", Rat(1, 5) - Rat(3, 10) * y1);
    push("case1: 1/10 + (3/5) y2", Rat(1, 10) + Rat(3, 5) * y2);
    push("case1: 1/10 + (11/10) y2", Rat(1, 10) + Rat(11, 10) * y2);
    // case y2 << D <= y, after BA2BA = (13/40, 22/40)
    {
        const Rat kappa(13, 40), lambda(22, 40);
        // the x-exponent 13/62 + (23/62 - alpha) kappa reduces to 1339/4960
        Rat lead = Rat(13, 62) + (Rat(23, 62) - target) * kappa;
        if (lead != Rat(1339, 4960)) throw std::logic_error("esqfree_budget: lead exponent mismatch");
        push("case2: 1339/4960 + (lambda - 2 kappa - 1) y2", lead + (lambda - 2 * kappa - 1) * y2);
        push("case2: 13/124 + (1/2) y", Rat(13, 124) + Rat(1, 2) * y);
        push("case2: 3/62 + y", Rat(3, 62) + y);
    }
    // the psi-sum over m <= x/y^5, pair A2BA = (2/40, 33/40)
    push("hyp: (1/4) Y + (3/4) Z", Rat(1, 4) * Y + Rat(3, 4) * Z);
    push("hyp: 1/8 + (1/8) Y - (1/8) Z", Rat(1, 8) + Rat(1, 8) * Y - Rat(1, 8) * Z);
    push("hyp: (6/5) Y - 1/5", Rat(6, 5) * Y - Rat(1, 5));
    push("hyp: 1/4 - (5/7) y", Rat(1, 4) - Rat(5, 7) * y);
    push("hyp: 1 - 6 y", Rat(1) - 6 * y);
    return rows;
}

WordSearchResult optimize_word(const std::vector<ExponentPair>& bases, int max_len,
                               const std::function<Rat(const Rat&, const Rat&)>& objective) {
    if (max_len > 20) throw std::invalid_argument("optimize_word: max_len <= 20");
    WordSearchResult best;
    bool have = false;
    for (const auto& base : bases) {
        // words in lexicographic order per length; empty word included
        for (int len = 0; len <= max_len; ++len) {
            std::string w(static_cast<size_t>(len), 'A');
            for (;;) {
                ExponentPair p = eval_word(w, base);
                ++best.evaluated;
                if (p.admissible()) {
                    Rat v = objective(p.kappa, p.lambda);
                    if (!have || v < best.best_value) {
                        have = true;
                        best.best_value = v;
                        best.best = p;
                    }
                }
                // next word: treat A < B as binary increment
                int i = len - 1;
                while (i >= 0 && w[i] == 'B') w[i--] = 'A';
                if (i < 0) break;
                w[i] = 'B';
            }
        }
    }
    if (!have) throw std::runtime_error("optimize_word: no admissible word");
    return best;
}

ExpSumReport empirical_exp_sum_check(double X, double nu, u64 N, const ExponentPair& pair) {
    if (X == 0 || nu == 0 || nu == 1) throw std::invalid_argument("empirical_exp_sum_check: X != 0, nu not in {0,1}");
    if (N < 16) throw std::invalid_argument("empirical_exp_sum_check: N >= 16");
    ExpSumReport rep;
    rep.X = X;
    rep.nu = nu;
    rep.N = N;
    long double re = 0, im = 0;
    for (u64 n = N + 1; n <= 2 * N; ++n) {
        long double phase = 2.0L * static_cast<long double>(M_PI) * static_cast<long double>(X) *
                            powl(static_cast<long double>(n), static_cast<long double>(nu));
        re += cosl(phase);
        im += sinl(phase);
    }
    rep.sum_abs = static_cast<double>(sqrtl(re * re + im * im));
    double kap = static_cast<double>(rat_ld(pair.kappa));
    double lam = static_cast<double>(rat_ld(pair.lambda));
    rep.bound = std::pow(std::fabs(X) * std::pow(static_cast<double>(N), nu - 1.0), kap) *
                    std::pow(static_cast<double>(N), lam) +
                std::pow(static_cast<double>(N), 1.0 - nu) / std::fabs(X);
    rep.ratio = rep.sum_abs / rep.bound;
    rep.degenerate = (std::fabs(X - std::round(X)) < 1e-12 && std::fabs(nu - std::round(nu)) < 1e-12);
    return rep;
}

} // namespace zetalab
