#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "p5lab/graph.hpp"
#include "p5lab/rational.hpp"

namespace p5lab {

// Counter-based deterministic randomness: SplitMix64 over (seed, stream,
// counter). Identical draws on every platform, independent streams safe to
// run concurrently.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    // uniform in [0, n), n >= 1; unbiased via rejection
    std::uint64_t next_below(std::uint64_t n);
    // exact Bernoulli(p) for rational p in [0,1]
    bool next_bernoulli(const Rational& p);

private:
    std::uint64_t seed_, stream_;
    std::uint64_t counter_ = 0;
};

inline constexpr int kAllGraphsCap = 8;
inline constexpr int kExhaustiveP5FreeCap = 7;
inline constexpr int kRandomGraphCap = 62;

enum class GenKind {
    AllGraphs,
    Gnp,
    Cograph,
    TriangleFreeComplement,
    BlowupClosure,
    RejectionP5Free,
};

// Corpus description, normally parsed from CLI flags.
struct GenSpec {
    GenKind kind = GenKind::AllGraphs;
    int n = 0;
    Rational p = Rational(1, 2);  // Gnp / RejectionP5Free only
    std::uint64_t seed = 0;
    int count = 1;       // random kinds
    int max_tries = 1000;  // RejectionP5Free
    int size_cap = 200;    // BlowupClosure
    std::string base_graph6;  // BlowupClosure base (default C5)

    // n >= 0; 0 <= p <= 1; count >= 1 for random kinds (ArgumentError).
    void check() const;
};

bool genspec_is_random(GenKind kind);
GenKind genspec_kind_from_name(const std::string& name);

// index-th instance of a random spec; deterministic in (spec, index).
Graph generate_instance(const GenSpec& spec, int index);

// All 2^(n choose 2) labelled graphs on n vertices in lexicographic bit order
// (graph6 column order), n <= 8. index in [0, 2^(n choose 2)).
long long all_graphs_count(int n);
Graph graph_from_index(int n, std::uint64_t index);

// Pull streams.
class AllGraphsStream {
public:
    explicit AllGraphsStream(int n);
    std::optional<Graph> next();

private:
    int n_;
    std::uint64_t index_ = 0, count_;
};

// All labelled P5-free graphs on n vertices (all_graphs filtered), n <= 7.
class P5FreeStream {
public:
    explicit P5FreeStream(int n);
    std::optional<Graph> next();

private:
    int n_;
    std::uint64_t index_ = 0, count_;
};

// G(n,p) with each edge decided independently from the seeded counter stream.
Graph random_gnp(int n, const Rational& p, std::uint64_t seed);

// Resamples G(n,p) until P5-free; fails after max_tries attempts.
Graph rejection_p5_free(int n, const Rational& p, std::uint64_t seed, int max_tries);

// Random series-parallel (union/join) recursion tree; always P5-free, which
// is re-verified before returning.
Graph random_cograph(int n, std::uint64_t seed);

// Random greedy triangle-free process, then complement; the result has
// alpha <= 2 (re-verified), hence is P5-free.
Graph triangle_free_complement(int n, std::uint64_t seed);

// Random composition of blow-ups, disjoint unions with fresh P5-free pieces,
// and joins, respecting size_cap; P5-freeness re-verified.
Graph blowup_closure(const Graph& base, std::uint64_t seed, int size_cap);

}  // namespace p5lab
