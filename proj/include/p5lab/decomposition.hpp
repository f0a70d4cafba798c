#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p5lab/graph.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/rational.hpp"
#include "p5lab/structure.hpp"

namespace p5lab {

// ---------------------------------------------------------------------------
// phi-constant schedule: phi(r,s) = prod_{r<i<=s} (1 - 2^(-2^(i+1))), exact.
Rational phi(int r, int s);

// phi(r,s) >= 1 - 2^(-1-2^r), exact; expected true always.
bool phi_lower_bound_check(int r, int s);

// 1 - 3y >= (1-y)^9 for y in (0, 1/4], exact.
bool induction_step_inequality(const Rational& y);

// ---------------------------------------------------------------------------
// (p,q)-sparsity: every induced subgraph F with rho(F) >= q contains an
// anticomplete pair with both sides of rho >= p. Exhaustive over connected F
// (sufficient: rho is attained on connected subgraphs); n <= 14.
bool check_pq_sparse(const Graph& g, const Rational& p, const Rational& q);

// ---------------------------------------------------------------------------
// Certificates.

struct AnticompletePairCert {
    VertexSet a, b;
    Rational rho_a, rho_b;
};

struct CompletePairCert {
    VertexSet x, y;
    Rational rho_x, rho_y;
    Rational y_param;  // in (0, 1/4]
};

struct CompleteBlockadeCert {
    Blockade blockade;
    std::vector<Rational> per_block_rho;
};

using Certificate = std::variant<AnticompletePairCert, CompletePairCert, CompleteBlockadeCert>;

const char* certificate_kind_name(const Certificate& c);

struct CheckLine {
    std::string inequality;
    Rational lhs, rhs;
    bool pass;
};

struct Verdict {
    std::vector<CheckLine> checks;
    bool all_pass = true;
    void add(std::string inequality, Rational lhs, Rational rhs, bool pass);
};

// Recomputes every structural relation and rho value from scratch and checks
// the headline thresholds: a complete pair must satisfy
// rho(X) >= y^9 rho(G), rho(Y) >= (1-3y) rho(G) at its recorded y in (0,1/4];
// a complete blockade must satisfy k >= 2 and rho(B_i) >= k^-d rho(G), with
// rational d decided by exact cross-powered integer comparison.
Verdict validate_certificate(const Graph& g, const Certificate& c, const Rational& rho_g,
                             const Rational& d);

// ---------------------------------------------------------------------------
// Trichotomy search (certificate realization of the three outcome shapes).

struct ShapeMetrics {
    bool found = false;
    // anticomplete: min(|A|,|B|)/|G|; complete pair: (rho_x, rho_y)/rho(G);
    // blockade: (k, min_i rho(B_i)/rho(G))
    std::optional<Rational> size_fraction;
    std::optional<Rational> rho_x_fraction, rho_y_fraction;
    std::optional<long> k;
    std::optional<Rational> min_block_rho_fraction;
};

struct TrichotomyResult {
    std::optional<Certificate> chosen;  // priority: CompletePair > CompleteBlockade > Anticomplete
    ShapeMetrics anticomplete, complete_pair, blockade;
    Rational rho_g;
    std::string failure_summary;  // set when chosen is empty
};

inline constexpr int kTrichotomyCap = 14;

// Requires g P5-free (ArgumentError carrying the induced P5 otherwise),
// |g| >= 2, 0 < eps <= 1/2; exhaustive, n <= 14. The blockade shape demands
// k >= max(2, 1/eps) and is validated at exponent d.
TrichotomyResult trichotomy_search(const Graph& g, const Rational& eps = Rational(1, 2),
                                   const Rational& d = Rational(9));

// ---------------------------------------------------------------------------
// Anticomplete-pair decomposition engine with machine-validated trace.

struct PartitionSnapshot {
    VertexSet a, d, e;
    std::vector<VertexSet> blocks;
    VertexSet attach;  // vertices of d with a neighbor in a
    std::string note;
};

struct DecompositionTrace {
    std::vector<PartitionSnapshot> snapshots;
    std::vector<std::string> events;
};

struct AntiDecomposeResult {
    std::optional<Certificate> certificate;
    DecompositionTrace trace;
    // which outcome shape the certificate realizes: 1 anticomplete pair,
    // 2 complete pair, 3 complete blockade
    int outcome = 0;
};

// Decomposition engine: on a connected P5-free (p,q)-sparse graph
// with 0 < p <= q <= (1-eps^2) rho(G), produces one of
//   1. an anticomplete pair (A,B), rho(A) >= q - 2 eps^8 rho(G),
//      rho(B) >= (1-eps^2) rho(G);
//   2. a complete pair (X,Y), rho(X) >= eps^8 rho(G), rho(Y) >= p;
//   3. a complete blockade, k >= 1/eps, rho(B_i) >= k^-8 rho(G);
// every intermediate partition is validated (disjoint, covering, cutset
// separation, connectivity, rho bounds) and recorded in the trace.
AntiDecomposeResult anti_decompose(const Graph& g, const Rational& eps, const Rational& p,
                                   const Rational& q);

// Validates one partition snapshot against the invariants above; throws a
// diagnostic naming the violated property.
void validate_partition(const Graph& g, const PartitionSnapshot& snap, const Rational& p,
                        const Rational& q, const Rational& eps, const Rational& rho_g);

}  // namespace p5lab
