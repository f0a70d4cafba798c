#pragma once

#include <array>
#include <optional>
#include <vector>

#include "p5lab/graph.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/rational.hpp"

namespace p5lab {

// ---------------------------------------------------------------------------
// Induced P5 detection. Returns the lexicographically least ordered witness
// (v1..v5 with exactly the four path edges), or nullopt when g is P5-free.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);
bool is_p5_free(const Graph& g);

// Word-level variant used by the enumeration pipelines (n <= 64).
std::optional<std::array<int, 5>> find_induced_p5_words(int n,
                                                        const std::vector<std::uint64_t>& rows);

// ---------------------------------------------------------------------------
enum class SearchMode { Exhaustive, Heuristic };

struct PairSearchResult {
    std::optional<std::pair<VertexSet, VertexSet>> pair;
    bool complete_search = false;  // false = a None answer is inconclusive
};

inline constexpr int kPairSearchCap = 20;

// Disjoint anticomplete (A,B) with hall_ratio(A) >= min_rho_a and
// hall_ratio(B) >= min_rho_b. Exhaustive mode (n <= 20) is complete;
// heuristic mode may miss and says so via complete_search.
PairSearchResult find_anticomplete_pair(const Graph& g, const Rational& min_rho_a,
                                        const Rational& min_rho_b,
                                        SearchMode mode = SearchMode::Exhaustive);

// ---------------------------------------------------------------------------
// Inclusion-minimal nonempty cutset separating anticomplete a, b in connected
// g. Deterministic: seeded with the neighborhood of a, minimalized by
// attempting removals in ascending vertex order. Post-conditions (separates;
// minimal) are re-verified on every call.
VertexSet minimal_cutset(const Graph& g, const VertexSet& a, const VertexSet& b);

// ---------------------------------------------------------------------------
enum class Attachment { CompleteToA, CompleteToB, MixedOnA, MixedOnBoth };

struct AttachmentEntry {
    int v;
    Attachment kind;
    PairRelation to_a, to_b;
};

struct MixedWitness {
    int v;
    std::array<int, 5> p5;  // induced P5 certifying the violation
};

struct SplitReport {
    std::vector<AttachmentEntry> entries;
    // Nonempty only when some cutset vertex is complete to neither side while
    // mixed on both — impossible in a P5-free graph with connected sides.
    std::vector<MixedWitness> mixed_on_both;
};

// Classifies every cutset vertex by its attachment to a and b. Preconditions:
// s is a minimal cutset for the anticomplete pair (a,b), and g[a], g[b] are
// connected.
SplitReport cutset_attachment_split(const Graph& g, const VertexSet& s, const VertexSet& a,
                                    const VertexSet& b);

// ---------------------------------------------------------------------------
struct CombTeeth {
    std::vector<int> anchors;       // a_1..a_k
    std::vector<VertexSet> blocks;  // B_1..B_k, disjoint subsets of b
};

struct CombOutcome {
    bool small_b = false;  // |b|^2 < 400*gamma*delta (exact comparison of squares)
    std::optional<CombTeeth> teeth;
};

// Comb procedure: given anchors with at most delta neighbors each in b and
// every vertex of b seeing an anchor, returns SmallB only when
// |b|^2 < 400*gamma*delta; otherwise teeth with a_i complete to B_i,
// anticomplete to B_j (j != i), and |B_i| * k^2 >= gamma, all verified
// exactly before returning.
CombOutcome comb(const Graph& g, const VertexSet& anchors, const VertexSet& b,
                 const Rational& delta, const Rational& gamma);

// Exact re-validation of a teeth certificate (throws InvariantViolation).
void validate_comb_teeth(const Graph& g, const VertexSet& anchors, const VertexSet& b,
                         const Rational& gamma, const CombTeeth& teeth);

// ---------------------------------------------------------------------------
enum class BlockadeKind { Complete, Anticomplete };

struct Blockade {
    BlockadeKind kind = BlockadeKind::Complete;
    std::vector<VertexSet> blocks;
};

// Checks disjointness, nonemptiness, and the pairwise relation.
void validate_blockade(const Graph& g, const Blockade& blockade);

struct BlockadeSearchResult {
    std::optional<Blockade> blockade;
    bool complete_search = false;
};

inline constexpr int kBlockadeSearchCap = 14;

// Complete blockade with at least k_min blocks, each of hall ratio >=
// min_rho_per_block; exhaustive mode (n <= 14) maximizes the block count.
BlockadeSearchResult find_complete_blockade(const Graph& g, int k_min,
                                            const Rational& min_rho_per_block,
                                            SearchMode mode = SearchMode::Exhaustive);

// ---------------------------------------------------------------------------
struct EpsRestrictedResult {
    VertexSet set;
    SparsityClass cls;
};

inline constexpr int kEpsRestrictedExhaustiveCap = 18;

// Largest vertex set whose induced subgraph is eps-sparse or (1-eps)-dense.
// Exhaustive below n <= 18; vertex-deletion greedy (on g and its complement,
// better result kept) above. Always nonempty.
EpsRestrictedResult find_eps_restricted_subgraph(const Graph& g, const Rational& eps);

}  // namespace p5lab
