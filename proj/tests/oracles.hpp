#pragma once

// Brute-force oracles for the test suites. Everything here is straight
// enumeration, independent of the production algorithms it checks.

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "p5lab/graph.hpp"
#include "p5lab/rational.hpp"

namespace oracle {

using p5lab::Graph;
using p5lab::Rational;
using p5lab::VertexSet;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

inline VertexSet set_of(const Graph& g, std::initializer_list<int> vs) {
    VertexSet s(g.size());
    for (int v : vs) s.set(v);
    return s;
}

inline bool stable_mask(const Graph& g, std::uint64_t m) {
    for (int i = 0; i < g.size(); ++i)
        if ((m >> i) & 1)
            for (int j = i + 1; j < g.size(); ++j)
                if (((m >> j) & 1) && g.has_edge(i, j)) return false;
    return true;
}

inline int alpha_brute(const Graph& g) {
    int best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.size()); ++m)
        if (stable_mask(g, m)) best = std::max(best, std::popcount(m));
    return best;
}

inline int omega_brute(const Graph& g) { return alpha_brute(complement(g)); }

inline long weighted_alpha_brute(const Graph& g, const std::vector<long>& w) {
    long best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.size()); ++m) {
        if (!stable_mask(g, m)) continue;
        long tot = 0;
        for (int i = 0; i < g.size(); ++i)
            if ((m >> i) & 1) tot += w[i];
        best = std::max(best, tot);
    }
    return best;
}

inline int chi_brute(const Graph& g) {
    int n = g.size();
    if (n == 0) return 0;
    std::vector<int> col(n, -1);
    for (int k = 1; k <= n; ++k) {
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v; ++u)
                    if (g.has_edge(u, v) && col[u] == c) ok = false;
                if (!ok) continue;
                col[v] = c;
                if (rec(v + 1)) return true;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

inline Rational psi_brute(const Graph& g) {
    if (g.size() == 0) return Rational(0);
    Rational q(g.size(), alpha_brute(g));
    q.canonicalize();
    return q;
}

inline Rational hall_brute(const Graph& g) {
    Rational best(0);
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << g.size()); ++m) {
        VertexSet s(g.size());
        for (int i = 0; i < g.size(); ++i)
            if ((m >> i) & 1) s.set(i);
        Rational p = psi_brute(induced(g, s));
        if (p > best) best = p;
    }
    return best;
}

// Every ordered 5-tuple of distinct vertices, checked for exactly the four
// path edges.
inline std::optional<std::array<int, 5>> p5_brute(const Graph& g) {
    int n = g.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::array<int, 5> v{};
    std::optional<std::array<int, 5>> best;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == 5) {
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    bool want = (j == i + 1);
                    if (g.has_edge(v[i], v[j]) != want) return;
                }
            if (!best || std::lexicographical_compare(v.begin(), v.end(), best->begin(),
                                                      best->end()))
                best = v;
            return;
        }
        for (int u = 0; u < n; ++u) {
            bool used = false;
            for (int i = 0; i < depth; ++i)
                if (v[i] == u) used = true;
            if (used) continue;
            v[depth] = u;
            rec(depth + 1);
        }
    };
    rec(0);
    return best;
}

inline bool p5_free_brute(const Graph& g) { return !p5_brute(g).has_value(); }

// isomorphism check by permutation enumeration (tiny n only)
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// graph6 hand-encoder used as the format oracle: upper triangle in column
// order, 6 bits per character, zero padding, chr(63 + v).
inline std::string graph6_hand(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.size(); ++j)
        for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
    while (bits.size() % 6) bits += '0';
    std::string out(1, char(63 + g.size()));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (int t = 0; t < 6; ++t) val = val * 2 + (bits[k + t] - '0');
        out += char(63 + val);
    }
    return out;
}

}  // namespace oracle
