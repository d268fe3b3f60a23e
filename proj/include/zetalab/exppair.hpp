#pragma once

// Exact-rational exponent-pair calculus.  The van der Corput processes
//
//   A(kappa, lambda) = ( kappa/(2 kappa + 2), (kappa + lambda + 1)/(2 kappa + 2) )
//   B(kappa, lambda) = ( lambda - 1/2, kappa + 1/2 )
//
// applied rightmost-first to a word over {A, B}; the convention is pinned
// by BA2BA(1/6, 4/6) = (13/40, 22/40) and A2BA(1/6, 4/6) = (2/40, 33/40).
// Also the alpha(r)/beta(r) exponent tables, the corollary bound
// calculator, and a small search harness over the A/B semigroup.

#include "zetalab/common.hpp"
#include "zetalab/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetalab {

struct ExponentPair {
    Rat kappa, lambda;
    std::string word; // leftmost letter applied last, digits expand ("BA2BA" = B,A,A,B,A)
    bool admissible() const; // 0 <= kappa <= 1/2 <= lambda <= 1
};

ExponentPair process_A(const ExponentPair& p);
ExponentPair process_B(const ExponentPair& p);
// word over {A,B} with run-length digits; rightmost letter applied first
ExponentPair eval_word(const std::string& word, const ExponentPair& base);
std::string expand_word(const std::string& word);

ExponentPair base_trivial();   // (0, 1)
ExponentPair base_half();      // (1/2, 1/2)
ExponentPair base_sixth();     // (1/6, 4/6)

struct AlphaEntry {
    Rat r;
    Rat alpha;
    std::string branch;
    int q = 0;   // only the r > 20 branch
    i64 Q = 0;   // 2^q
};

// the exponent table: five printed branches on (1, 20], the (q, Q = 2^q)
// procedure beyond; r in (20, 20.5] has no valid q and is rejected.
AlphaEntry alpha_r(const Rat& r);

struct BetaEntry {
    Rat value;
    bool in_range; // stated for 1 < r <= 9/2
};
BetaEntry beta_r(const Rat& r);

// theta <= (1 - a alpha)/(a + c - 2 a c alpha), needs alpha < 1/c
Rat corollary_c11(int a, int c, const Rat& alpha);
// 1/(a + c)
Rat corollary_c12(int a, int c);
// 1/(a + b - a b alpha)
Rat corollary_c13(int a, int b, const Rat& alpha);
// max(1/(2(a+b)), 1/(2c))
Rat conjecture_exponent(int a, int b, int c);

struct BoundRow {
    std::string name;
    std::string value;    // exact rational
    std::string expected; // exact rational from the source table
    bool ok;
    std::string note;
};
// every exponent the bound calculator reproduces, with status
std::vector<BoundRow> bounds_table();

// exponent budget of the e-square-free estimate: each term of the final
// bound as a linear form in the split exponents, compared against 23/124
struct BudgetRow {
    std::string label;
    Rat value;
    bool holds;    // value <= 23/124
    bool equality; // value == 23/124 (the balancing terms)
};
std::vector<BudgetRow> esqfree_budget();

struct WordSearchResult {
    ExponentPair best;
    Rat best_value;
    u64 evaluated = 0;
};
// exhaustive search over words of length <= max_len (rightmost-first),
// deterministic lexicographic tie-break
WordSearchResult optimize_word(const std::vector<ExponentPair>& bases, int max_len,
                               const std::function<Rat(const Rat&, const Rat&)>& objective);

struct ExpSumReport {
    double X = 0, nu = 0;
    u64 N = 0;
    double sum_abs = 0; // |sum_{N<n<=2N} e(X n^nu)|
    double bound = 0;   // (X N^(nu-1))^kappa N^lambda + X^-1 N^(1-nu)
    double ratio = 0;
    bool degenerate = false; // integer phase collapse
};
ExpSumReport empirical_exp_sum_check(double X, double nu, u64 N, const ExponentPair& pair);

} // namespace zetalab
