#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "p5lab/bitset.hpp"

namespace p5lab::detail {

// Word-mask helpers for the exhaustive engines (n <= 64 throughout).

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t open_nbrs(const std::vector<std::uint64_t>& rows, std::uint64_t m) {
    std::uint64_t nb = 0;
    for (std::uint64_t s = m; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        nb |= rows[v];
    }
    return nb & ~m;
}

inline std::uint64_t closed_nbrs(const std::vector<std::uint64_t>& rows, std::uint64_t m) {
    return open_nbrs(rows, m) | m;
}

// Vertices of `universe` reachable from `seed_mask` (graph restricted to universe).
inline std::uint64_t reach(const std::vector<std::uint64_t>& rows, std::uint64_t universe,
                           std::uint64_t seed_mask) {
    std::uint64_t seen = seed_mask & universe;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t s = frontier; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            next |= rows[v];
        }
        next &= universe & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool connected_mask(const std::vector<std::uint64_t>& rows, std::uint64_t m) {
    if (m == 0) return true;
    return reach(rows, m, m & (~m + 1)) == m;
}

// Does removing s from universe leave no path between a and b?
inline bool separates(const std::vector<std::uint64_t>& rows, std::uint64_t universe,
                      std::uint64_t s, std::uint64_t a, std::uint64_t b) {
    return (reach(rows, universe & ~s, a) & b) == 0;
}

// Lexicographic order on sorted vertex lists ({0,3} < {1,2}; prefixes first).
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline Bitset mask_to_set(int n, std::uint64_t m) { return Bitset::from_word(n, m); }

inline std::uint64_t set_to_mask(const Bitset& s) { return s.word0(); }

}  // namespace p5lab::detail
