#include "p5lab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "p5lab/errors.hpp"
#include "p5lab/simplex.hpp"
#include "p5lab/stable_sets.hpp"

namespace p5lab {

void check_cancel(const CancelToken* tok) {
    if (tok && tok->cancel.load(std::memory_order_relaxed)) throw OperationCancelled();
}

namespace {

// --------------------------------------------------------------------------
// Max clique branch-and-bound (San Segundo style): candidates are greedily
// colored, vertices processed in reverse color order, prune when the color
// bound cannot beat the incumbent. Templated so the same search runs on
// one-word sets (n <= 64) and wide bitsets (blow-ups).

struct WordSet {
    std::uint64_t w = 0;
    bool any() const { return w != 0; }
    int count() const { return std::popcount(w); }
    int lowest() const { return w ? std::countr_zero(w) : -1; }
    void reset(int i) { w &= ~(std::uint64_t{1} << i); }
    WordSet operator&(const WordSet& o) const { return {w & o.w}; }
    WordSet& operator-=(const WordSet& o) {
        w &= ~o.w;
        return *this;
    }
};

template <class Set>
struct CliqueSearch {
    const std::vector<Set>& adj;
    const CancelToken* tok;
    int best = 0;
    std::vector<int> best_members{};
    std::vector<int> current{};
    long nodes = 0;

    void expand(Set cand, int rsize) {
        if (((++nodes) & 0x3ff) == 0) check_cancel(tok);
        if (!cand.any()) {
            if (rsize > best) {
                best = rsize;
                best_members = current;
            }
            return;
        }
        // greedy coloring of candidates; color classes are stable sets here
        std::vector<int> order, color;
        Set un = cand;
        int c = 0;
        while (un.any()) {
            ++c;
            Set q = un;
            while (q.any()) {
                int v = q.lowest();
                q.reset(v);
                un.reset(v);
                q -= adj[v];
                order.push_back(v);
                color.push_back(c);
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best) return;
            int v = order[i];
            current.push_back(v);
            expand(cand & adj[v], rsize + 1);
            current.pop_back();
            cand.reset(v);
        }
    }
};

template <class Set>
std::pair<int, std::vector<int>> max_clique(const std::vector<Set>& adj, Set full,
                                            const CancelToken* tok) {
    CliqueSearch<Set> s{adj, tok};
    s.expand(full, 0);
    return {s.best, s.best_members};
}

// Vertices reordered by descending degree (ties by index) for stable, fast
// search; only the size is reported so no unmapping is needed.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> ord(g.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    return ord;
}

int max_clique_size_of(const Graph& g, const CancelToken* tok) {
    check_cancel(tok);
    int n = g.size();
    if (n == 0) return 0;
    auto ord = degree_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord[i]] = i;
    if (n <= 64) {
        std::vector<WordSet> adj(n);
        for (int v = 0; v < n; ++v) {
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.lowest(); u >= 0; u = nb.next(u)) adj[pos[v]].w |= std::uint64_t{1} << pos[u];
        }
        WordSet full{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        return max_clique<WordSet>(adj, full, tok).first;
    }
    std::vector<Bitset> adj(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) adj[pos[v]].set(pos[u]);
    }
    Bitset full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    return max_clique<Bitset>(adj, full, tok).first;
}

}  // namespace

int omega(const Graph& g, const CancelToken* tok) { return max_clique_size_of(g, tok); }

int alpha(const Graph& g, const CancelToken* tok) {
    if (g.size() == 0) return 0;
    return max_clique_size_of(complement(g), tok);
}

std::pair<int, VertexSet> omega_witness(const Graph& g, const CancelToken* tok) {
    int n = g.size();
    VertexSet w(n);
    if (n == 0) return {0, w};
    auto ord = degree_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord[i]] = i;
    if (n <= 64) {
        std::vector<WordSet> adj(n);
        for (int v = 0; v < n; ++v) {
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.lowest(); u >= 0; u = nb.next(u))
                adj[pos[v]].w |= std::uint64_t{1} << pos[u];
        }
        WordSet full{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        auto [sz, members] = max_clique<WordSet>(adj, full, tok);
        for (int m : members) w.set(ord[m]);
        return {sz, w};
    }
    std::vector<Bitset> adj(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) adj[pos[v]].set(pos[u]);
    }
    Bitset full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    auto [sz, members] = max_clique<Bitset>(adj, full, tok);
    for (int m : members) w.set(ord[m]);
    return {sz, w};
}

// --------------------------------------------------------------------------
// Chromatic number. Small graphs get a guaranteed subset-DP (cover by maximal
// stable sets); larger ones a backtracking search per color count.

namespace {

int chi_dp(const Graph& g) {
    int n = g.size();
    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.row_word(v);
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::int8_t> memo(std::size_t(1) << n, -1);
    memo[0] = 0;

    // enumerate maximal stable sets of g[mask] containing the lowest vertex
    auto solve = [&](auto&& self, std::uint64_t mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int v = std::countr_zero(mask);
        int best = 127;
        // Bron-Kerbosch on the complement restricted to mask, R seeded with v
        auto bk = [&](auto&& bkself, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
            if (!p && !x) {
                int sub = self(self, mask & ~r);
                if (sub + 1 < best) best = sub + 1;
                return;
            }
            std::uint64_t px = p | x;
            int pivot = -1, bestdeg = -1;
            for (std::uint64_t m = px; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                std::uint64_t co = mask & ~nbr[u] & ~(std::uint64_t{1} << u);
                int d = std::popcount(p & co);
                if (d > bestdeg) {
                    bestdeg = d;
                    pivot = u;
                }
            }
            std::uint64_t co_pivot = mask & ~nbr[pivot] & ~(std::uint64_t{1} << pivot);
            std::uint64_t cand = p & ~co_pivot;
            while (cand) {
                int u = std::countr_zero(cand);
                std::uint64_t bit = std::uint64_t{1} << u;
                cand &= cand - 1;
                std::uint64_t co = mask & ~nbr[u] & ~bit;
                bkself(bkself, r | bit, p & co, x & co);
                p &= ~bit;
                x |= bit;
            }
        };
        std::uint64_t vb = std::uint64_t{1} << v;
        bk(bk, vb, mask & ~nbr[v] & ~vb, 0);
        memo[mask] = std::int8_t(best);
        return best;
    };
    return solve(solve, full);
}

bool kcolorable(const Graph& g, int k, const CancelToken* tok) {
    int n = g.size();
    std::vector<int> color(n, -1);
    auto ord = degree_order(g);
    long nodes = 0;
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if ((((++nodes) & 0xfff) == 0)) check_cancel(tok);
        if (idx == n) return true;
        int v = ord[idx];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.lowest(); u >= 0; u = nb.next(u))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

int chi(const Graph& g, const CancelToken* tok) {
    int n = g.size();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (n <= 14) return chi_dp(g);
    int lo = omega(g, tok);
    for (int k = lo;; ++k)
        if (kcolorable(g, k, tok)) return k;
}

Rational psi(const Graph& g) {
    if (g.size() == 0) return Rational(0);
    Rational q(g.size(), alpha(g));
    q.canonicalize();
    return q;
}

// --------------------------------------------------------------------------
// Subset tables.

SubsetTables build_subset_tables(int n, const std::vector<std::uint64_t>& rows) {
    if (n > kSubsetTableCap)
        throw CapabilityError("subset tables cap at n <= " + std::to_string(kSubsetTableCap) +
                              ", got n = " + std::to_string(n));
    SubsetTables t;
    t.n = n;
    t.rows = rows;
    t.full = (n == 0) ? 0 : ((n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    std::size_t sz = std::size_t(1) << n;
    t.alpha.assign(sz, 0);
    t.best_size.assign(sz, 0);
    t.best_alpha.assign(sz, 1);  // psi(empty) treated as 0 via best_size = 0
    for (std::uint64_t m = 1; m < sz; ++m) {
        int v = std::countr_zero(m);
        std::uint64_t without = m & (m - 1);
        std::uint64_t rest = m & ~rows[v] & ~(std::uint64_t{1} << v);
        t.alpha[m] = std::uint8_t(std::max<int>(t.alpha[without], 1 + t.alpha[rest]));
        // best psi over submasks: compare own psi with one-vertex removals
        unsigned bs = std::uint8_t(std::popcount(m)), ba = t.alpha[m];
        for (std::uint64_t mm = m; mm;) {
            int u = std::countr_zero(mm);
            mm &= mm - 1;
            std::uint64_t sub = m & ~(std::uint64_t{1} << u);
            unsigned s2 = t.best_size[sub], a2 = t.best_alpha[sub];
            if (s2 == 0) continue;
            // s2/a2 > bs/ba ?
            if (s2 * ba > bs * a2) {
                bs = s2;
                ba = a2;
            }
        }
        t.best_size[m] = std::uint8_t(bs);
        t.best_alpha[m] = std::uint8_t(ba);
    }
    return t;
}

SubsetTables build_subset_tables(const Graph& g) {
    if (g.size() > kSubsetTableCap)
        throw CapabilityError("subset tables cap at n <= " + std::to_string(kSubsetTableCap) +
                              ", got n = " + std::to_string(g.size()));
    std::vector<std::uint64_t> rows(g.size());
    for (int v = 0; v < g.size(); ++v) rows[v] = g.row_word(v);
    return build_subset_tables(g.size(), rows);
}

Rational SubsetTables::rho(std::uint64_t mask) const {
    if (best_size[mask] == 0) return Rational(0);
    Rational q(int(best_size[mask]), int(best_alpha[mask]));
    q.canonicalize();
    return q;
}

bool SubsetTables::rho_ge(std::uint64_t mask, const Rational& t) const {
    // best_size/best_alpha >= t.num/t.den  <=>  best_size*den >= num*alpha
    return Rational(int(best_size[mask]), 1) * t.get_den() >= t.get_num() * int(best_alpha[mask]);
}

bool SubsetTables::rho_gt(std::uint64_t mask, const Rational& t) const {
    return Rational(int(best_size[mask]), 1) * t.get_den() > t.get_num() * int(best_alpha[mask]);
}

std::uint64_t SubsetTables::rho_witness(std::uint64_t mask) const {
    if (best_size[mask] == 0) return 0;
    std::uint64_t cur = mask;
    bool changed = true;
    while (changed) {
        changed = false;
        unsigned bs = best_size[cur], ba = best_alpha[cur];
        for (std::uint64_t mm = cur; mm;) {
            int u = std::countr_zero(mm);
            mm &= mm - 1;
            std::uint64_t sub = cur & ~(std::uint64_t{1} << u);
            if (best_size[sub] != 0 && best_size[sub] * ba == bs * best_alpha[sub]) {
                cur = sub;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

// --------------------------------------------------------------------------

HallRatioResult hall_ratio(const Graph& g, int cap) {
    int n = g.size();
    if (n == 0) return {Rational(0), VertexSet(0)};
    if (n > cap)
        throw CapabilityError("hall_ratio caps at n <= " + std::to_string(cap) + ", got n = " +
                              std::to_string(n));
    SubsetTables t = build_subset_tables(g);
    std::uint64_t w = t.rho_witness(t.full);
    VertexSet ws(n);
    for (std::uint64_t m = w; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        ws.set(v);
    }
    return {t.rho(t.full), ws};
}

// --------------------------------------------------------------------------

ChiStarResult chi_star(const Graph& g) {
    ChiStarResult out;
    if (g.size() == 0) {
        out.value = Rational(0);
        return out;
    }
    if (g.size() > 64) throw CapabilityError("chi_star caps at n <= 64");
    auto sets = maximal_stable_sets(g);
    auto lp = solve_stable_set_packing(g.size(), sets);

    // re-verify both sides before trusting the solver
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Rational ysum(0);
        for (int v = 0; v < g.size(); ++v)
            if ((sets[i] >> v) & 1) ysum += lp.y[v];
        if (ysum > 1) throw InvariantViolation("chi_star: dual solution infeasible");
        if (lp.x[i] < 0) throw InvariantViolation("chi_star: negative covering weight");
    }
    Rational ytotal(0);
    for (int v = 0; v < g.size(); ++v) {
        if (lp.y[v] < 0) throw InvariantViolation("chi_star: negative dual weight");
        ytotal += lp.y[v];
    }
    Rational xtotal(0);
    for (std::size_t i = 0; i < sets.size(); ++i) xtotal += lp.x[i];
    for (int v = 0; v < g.size(); ++v) {
        Rational cover(0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if ((sets[i] >> v) & 1) cover += lp.x[i];
        if (cover < 1) throw InvariantViolation("chi_star: vertex left uncovered by LP weights");
    }
    if (ytotal != lp.value || xtotal != lp.value)
        throw InvariantViolation("chi_star: primal/dual objective mismatch");

    out.value = lp.value;
    out.dual_y = lp.y;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (lp.x[i] > 0) out.weights.emplace_back(sets[i], lp.x[i]);
    return out;
}

DualWitness dual_weights(const Graph& g) {
    if (g.size() < 1) throw ArgumentError("dual_weights requires a non-null graph");
    ChiStarResult cs = chi_star(g);
    BigInt scale(1);
    for (const auto& y : cs.dual_y) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), y.get_den_mpz_t());

    DualWitness w;
    w.value = cs.value;
    w.f.resize(g.size());
    BigInt total(0);
    for (int v = 0; v < g.size(); ++v) {
        BigInt fv = BigInt(cs.dual_y[v].get_num() * (scale / cs.dual_y[v].get_den()));
        if (!fv.fits_slong_p()) throw CapabilityError("dual weight does not fit a machine long");
        w.f[v] = fv.get_si();
        total += fv;
    }
    if (total == 0) throw InvariantViolation("dual_weights: zero total weight");

    // s_star = first maximal stable set carrying positive covering weight;
    // complementary slackness makes it tight for the scaled f.
    if (cs.weights.empty()) throw InvariantViolation("dual_weights: no positive covering weight");
    std::uint64_t sstar = cs.weights.front().first;
    w.s_star = VertexSet(g.size());
    BigInt fs(0);
    for (int v = 0; v < g.size(); ++v)
        if ((sstar >> v) & 1) {
            w.s_star.set(v);
            fs += w.f[v];
        }
    if (Rational(total) != w.value * Rational(fs))
        throw InvariantViolation("dual_weights: f(V) != chi_star * f(s_star)");
    return w;
}

// --------------------------------------------------------------------------

std::optional<EmpiricalExponent> empirical_exponent_from(long n, long a, long w) {
    if (w <= 1 || n <= a) return std::nullopt;
    EmpiricalExponent e;
    e.n = n;
    e.alpha = a;
    e.omega = w;
    long double v = (std::log((long double)n) - std::log((long double)a)) /
                    std::log((long double)w);
    e.value = double(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    e.decimal = buf;
    return e;
}

std::optional<EmpiricalExponent> empirical_exponent(const Graph& g) {
    if (g.size() == 0) return std::nullopt;
    long a = alpha(g), w = omega(g);
    return empirical_exponent_from(g.size(), a, w);
}

bool exponent_at_most(long n, long a, long w, const Rational& bound) {
    // d_hat <= b  <=>  n/a <= w^b  <=>  n^q <= a^q * w^p  for b = p/q
    unsigned long p = bound.get_num().get_ui(), q = bound.get_den().get_ui();
    if (bound.get_num() < 0) throw ArgumentError("exponent bound must be nonnegative");
    return bigint_pow(BigInt(n), q) <= bigint_pow(BigInt(a), q) * bigint_pow(BigInt(w), p);
}

bool exponent_at_least(long n, long a, long w, const Rational& bound) {
    unsigned long p = bound.get_num().get_ui(), q = bound.get_den().get_ui();
    if (bound.get_num() < 0) throw ArgumentError("exponent bound must be nonnegative");
    return bigint_pow(BigInt(n), q) >= bigint_pow(BigInt(a), q) * bigint_pow(BigInt(w), p);
}

long weighted_alpha(const Graph& g, const WeightFunction& wf) {
    int n = g.size();
    if (int(wf.size()) != n) throw ArgumentError("weighted_alpha: weight length mismatch");
    if (n > kSubsetTableCap) throw CapabilityError("weighted_alpha caps at n <= 20");
    if (n == 0) return 0;
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
    std::vector<long> dp(std::size_t(1) << n, 0);
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        int v = std::countr_zero(m);
        std::uint64_t rest = m & ~rows[v] & ~(std::uint64_t{1} << v);
        dp[m] = std::max(dp[m & (m - 1)], wf[v] + dp[rest]);
    }
    return dp[(std::uint64_t(1) << n) - 1];
}

}  // namespace p5lab
