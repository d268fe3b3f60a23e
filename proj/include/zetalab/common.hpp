#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zetalab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Worker count for the OpenMP kernels.  ZETALAB_THREADS overrides the
// OpenMP default; results never depend on it (segment grids are fixed and
// reductions run in segment order).
int thread_count();

// floor(x^(1/k)).  A float guess followed by an integer correction loop;
// the returned r always satisfies r^k <= x < (r+1)^k exactly.
u64 integer_kth_root(u64 x, unsigned k);

// floor((x/w)^(1/k)) for integers x >= 0, w >= 1: the unique r with
// r^k * w <= x < (r+1)^k * w.  Equal to integer_kth_root(x / w, k), kept
// as its own entry point so every floor((x/l^c)^(1/a)) in the summatory
// code goes through one audited routine.
u64 root_of_quotient(u64 x, u64 w, unsigned k);

// b^e, or UINT64_MAX if the product leaves 64 bits.
u64 pow_saturating(u64 b, unsigned e);

std::vector<u64> primes_up_to(u64 n);

// Primes in [lo, hi], sieved with a base list that must cover sqrt(hi).
std::vector<u64> primes_in_range(u64 lo, u64 hi, const std::vector<u64>& base);

std::string i128_to_string(i128 v);

// Fixed segment grid over [lo, hi].  Parallel loops iterate segment
// indices and write disjoint ranges, so the merged result is identical to
// the single-threaded one.
struct Segmenter {
    u64 lo, hi, step;
    Segmenter(u64 lo_, u64 hi_, u64 step_ = u64(1) << 20);
    u64 count() const;
    // segment i covers [seg_lo(i), seg_hi(i)] inclusive
    u64 seg_lo(u64 i) const;
    u64 seg_hi(u64 i) const;
};

struct KahanSum {
    long double s = 0.0L, c = 0.0L;
    void add(long double v) {
        long double y = v - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    long double value() const { return s; }
};

} // namespace zetalab
