#include "zetalab/common.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetalab {

int thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ZETALAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

static bool pow_leq(u64 r, unsigned k, u64 x) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > x) return false;
    }
    return true;
}

u64 integer_kth_root(u64 x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
    if (k == 1 || x <= 1) return x;
    if (k >= 64) return 1;
    u64 r = static_cast<u64>(powl(static_cast<long double>(x), 1.0L / k));
    if (r > 0) --r; // start below, then walk up; keeps the loop one-sided in the common case
    while (pow_leq(r + 1, k, x)) ++r;
    while (r > 0 && !pow_leq(r, k, x)) --r;
    return r;
}

u64 root_of_quotient(u64 x, u64 w, unsigned k) {
    if (w == 0) throw std::invalid_argument("root_of_quotient: w must be >= 1");
    // r^k <= x/w  <=>  r^k <= floor(x/w) for integer r^k, so the quotient
    // may be floored before the root without changing the result.
    return integer_kth_root(x / w, k);
}

u64 pow_saturating(u64 b, unsigned e) {
    u128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        acc *= b;
        if (acc > ~u64(0)) return ~u64(0);
    }
    return static_cast<u64>(acc);
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi, const std::vector<u64>& base) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    if (lo < 2) lo = 2;
    const u64 len = hi - lo + 1;
    std::vector<bool> comp(len, false);
    for (u64 p : base) {
        if (p * p > hi) break;
        u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (u64 j = start; j <= hi; j += p) comp[j - lo] = true;
    }
    for (u64 i = 0; i < len; ++i)
        if (!comp[i]) out.push_back(lo + i);
    return out;
}

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

Segmenter::Segmenter(u64 lo_, u64 hi_, u64 step_) : lo(lo_), hi(hi_), step(step_) {
    if (step == 0) throw std::invalid_argument("Segmenter: step must be positive");
}

u64 Segmenter::count() const {
    if (hi < lo) return 0;
    return (hi - lo) / step + 1;
}

u64 Segmenter::seg_lo(u64 i) const { return lo + i * step; }

u64 Segmenter::seg_hi(u64 i) const {
    u64 end = seg_lo(i) + step - 1;
    return end < hi ? end : hi;
}

} // namespace zetalab
