#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p5lab/graph.hpp"
#include "p5lab/rational.hpp"

namespace p5lab {

// Cooperative cancellation for long-running searches; pass nullptr for none.
struct CancelToken {
    std::atomic<bool> cancel{false};
};
void check_cancel(const CancelToken* tok);

// Exact stability and clique numbers via bitset branch-and-bound with greedy
// coloring bounds; deterministic (descending degree, ties by index). 0 for the
// null graph. Works for any n the adjacency fits in memory.
int alpha(const Graph& g, const CancelToken* tok = nullptr);
int omega(const Graph& g, const CancelToken* tok = nullptr);

// Clique witness variant (set of vertices of one maximum clique).
std::pair<int, VertexSet> omega_witness(const Graph& g, const CancelToken* tok = nullptr);

// Exact chromatic number; 0 for the null graph.
int chi(const Graph& g, const CancelToken* tok = nullptr);

// |G|/alpha(G), or 0 for the null graph.
Rational psi(const Graph& g);

// ---------------------------------------------------------------------------
// Subset tables: alpha and best-psi-over-submasks for every subset of a small
// graph (n <= 20). The workhorse behind hall_ratio and the exhaustive
// structure searches.
struct SubsetTables {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> rows;         // adjacency words
    std::vector<std::uint8_t> alpha;         // 2^n entries
    std::vector<std::uint8_t> best_size;     // argmax psi submask: its |S|
    std::vector<std::uint8_t> best_alpha;    // and its alpha

    Rational rho(std::uint64_t mask) const;  // max psi over submasks (0 for empty)
    bool rho_ge(std::uint64_t mask, const Rational& t) const;
    bool rho_gt(std::uint64_t mask, const Rational& t) const;
    int alpha_of(std::uint64_t mask) const { return alpha[mask]; }

    // Inclusion-minimal connected submask W with psi(W) = rho(mask);
    // deterministic (removes lowest removable vertex first).
    std::uint64_t rho_witness(std::uint64_t mask) const;
};

inline constexpr int kSubsetTableCap = 20;

SubsetTables build_subset_tables(const Graph& g);
SubsetTables build_subset_tables(int n, const std::vector<std::uint64_t>& rows);

// ---------------------------------------------------------------------------
struct HallRatioResult {
    Rational value;
    VertexSet witness;
};

inline constexpr int kHallRatioDefaultCap = 16;

// Exact Hall ratio: max psi over induced subgraphs (attained on a connected
// one). CapabilityError above the cap.
HallRatioResult hall_ratio(const Graph& g, int cap = kHallRatioDefaultCap);

// ---------------------------------------------------------------------------
struct ChiStarResult {
    Rational value;
    // optimal fractional coloring: weight per maximal stable set (only
    // nonzero entries), sets as low words
    std::vector<std::pair<std::uint64_t, Rational>> weights;
    // optimal dual vertex weights (LP packing side)
    std::vector<Rational> dual_y;
};

// Exact fractional chromatic number via the stable-set covering LP restricted
// to maximal stable sets. Primal and dual are both extracted and re-verified
// feasible with equal objectives before returning.
ChiStarResult chi_star(const Graph& g);

// ---------------------------------------------------------------------------
struct DualWitness {
    WeightFunction f;        // integer weights, scaled dual optimum
    VertexSet s_star;        // maximal stable set with f(V) = value * f(s_star)
    Rational value;          // = chi_star(g)
};

// LP-duality weight extraction: f(V) >= value * f(I) for every stable set I,
// with equality at s_star; blow_up(g, f) then satisfies psi = chi_star(g).
// Requires g.size() >= 1.
DualWitness dual_weights(const Graph& g);

// ---------------------------------------------------------------------------
struct EmpiricalExponent {
    double value = 0.0;       // display only; never used in exact comparisons
    std::string decimal;      // 12 significant digits
    long n = 0, alpha = 0, omega = 0;
};

// Smallest d with alpha * omega^d >= n, i.e. log(n/alpha)/log(omega).
// nullopt when omega <= 1 or n <= alpha.
std::optional<EmpiricalExponent> empirical_exponent(const Graph& g);
std::optional<EmpiricalExponent> empirical_exponent_from(long n, long a, long w);

// Exact d_hat <= bound test without logarithms: n <= alpha * omega^bound for
// integer bounds, and the cross-powered form for rational bounds.
bool exponent_at_most(long n, long a, long w, const Rational& bound);
bool exponent_at_least(long n, long a, long w, const Rational& bound);

// Maximum weighted stable set value (n <= 20).
long weighted_alpha(const Graph& g, const WeightFunction& w);

}  // namespace p5lab
