#ifndef KSAT_BITS_HPP
#define KSAT_BITS_HPP

#include <bit>
#include <cstdint>

namespace ksat {

inline int popcount64(std::uint64_t w) { return std::popcount(w); }

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Visit the set bits of w in ascending order.
template <typename F>
inline void for_each_bit(std::uint64_t w, F&& f) {
    while (w) {
        f(std::countr_zero(w));
        w &= w - 1;
    }
}

// Unordered pairs {i, j} with i < j, indexed column by column:
// {0,1}, {0,2}, {1,2}, {0,3}, {1,3}, {2,3}, ...
// Column j occupies indices [j(j-1)/2, j(j-1)/2 + j).  This matches the bit
// order of the graph6 encoding.
inline long pair_index(int i, int j) { return static_cast<long>(j) * (j - 1) / 2 + i; }

inline long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

// C(a, 2) with the convention that it is 0 for a < 2.
inline long choose2(long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

}  // namespace ksat

#endif
