#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p5lab/bitset.hpp"
#include "p5lab/rational.hpp"

namespace p5lab {

// Subset of the vertices of a specific graph; all pair/blockade/cutset
// structures are built from these.
using VertexSet = Bitset;

// Immutable simple graph. Vertices are dense integers 0..n-1, adjacency is one
// bitset row per vertex. Loopless and symmetric by construction; every factory
// runs a validation pass.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_rows(std::vector<Bitset> rows);  // validates
    // Rows as low words; only for n <= 64.
    static Graph from_words(int n, const std::vector<std::uint64_t>& rows);

    int size() const { return n_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    std::uint64_t row_word(int v) const { return adj_[v].word0(); }

    long long edge_count() const;
    int max_degree() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // Checks looplessness, symmetry, and bit bounds; throws InvariantViolation.
    void validate() const;

    VertexSet full_set() const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

enum class PairRelation { Complete, Anticomplete, Mixed };
enum class SparsityClass { Sparse, Dense, Neither, Both };

Graph complement(const Graph& g);

// Relabels to 0..|s|-1 preserving ascending vertex order of s.
Graph induced(const Graph& g, const VertexSet& s);

// Non-negative per-vertex weights; length must equal g.size().
using WeightFunction = std::vector<long>;

// Replaces each vertex v by a stable set of f(v) fresh vertices, cross edges
// following g. New vertices are ordered by (original vertex, copy index).
// total_cap bounds the result size (CapabilityError above it).
Graph blow_up(const Graph& g, const WeightFunction& f, long total_cap = 100000);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

VertexSet neighborhood(const Graph& g, int v);

// Connected components in ascending order of minimum vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Component containing `seed` within the sub-universe `within`.
VertexSet component_of(const Graph& g, int seed, const VertexSet& within);
bool connected_within(const Graph& g, const VertexSet& s);

// a, b must be disjoint and nonempty.
PairRelation pair_relation(const Graph& g, const VertexSet& a, const VertexSet& b);

// Exact rational test of max degree against eps*|g| (and the same on the
// complement); requires 0 < eps <= 1/2.
SparsityClass sparsity_class(const Graph& g, const Rational& eps);

// Throws ArgumentError if s has bits at or above g.size().
void check_vertex_set(const Graph& g, const VertexSet& s, const char* what);

// Closed neighborhood of the set: s plus every neighbor of s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

std::string format_vertex_set(const VertexSet& s);

}  // namespace p5lab
