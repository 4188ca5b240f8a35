#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bier {

// Subsets of a ground set [1,n], n <= 64, as bit masks: element v <-> bit v-1.
using Mask = std::uint64_t;

inline constexpr Mask elem_bit(int v) { return Mask{1} << (v - 1); }
inline constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline constexpr Mask mask_lt(int x) { return elem_bit(x) - 1; }                   // [1,x)
inline constexpr Mask mask_le(int x) { return mask_lt(x) | elem_bit(x); }          // [1,x]
inline constexpr Mask mask_gt(int x, int n) { return full_mask(n) & ~mask_le(x); } // (x,n]
inline constexpr Mask mask_ge(int x, int n) { return full_mask(n) & ~mask_lt(x); } // [x,n]

inline int card(Mask m) { return std::popcount(m); }
inline bool subseteq(Mask a, Mask b) { return (a & ~b) == 0; }

// Elements of a mask, ascending, 1-based.
std::vector<int> mask_elems(Mask m);

// "{}" or "{1,3}".
std::string mask_to_string(Mask m);

// Binomial coefficient, exact for 0 <= n <= 64 (fits in long long).
long long binomial(int n, int k);

// Visits every subset of m, including m itself and the empty set.
template <typename F>
void for_each_subset(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

} // namespace bier
