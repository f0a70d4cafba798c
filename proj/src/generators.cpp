#include "p5lab/generators.hpp"

#include <algorithm>
#include <numeric>

#include "p5lab/errors.hpp"
#include "p5lab/graph6.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/structure.hpp"

namespace p5lab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    return splitmix64(splitmix64(seed_ ^ splitmix64(stream_)) + counter_++);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) throw ArgumentError("next_below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n) - 1;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v <= limit) return v % n;
    }
}

bool Rng::next_bernoulli(const Rational& p) {
    if (p < 0 || p > 1) throw ArgumentError("bernoulli probability out of [0,1]");
    // draw < p  <=>  draw * den < num * 2^64, all exact
    BigInt lhs = BigInt(p.get_den()) * mpz_class((unsigned long)next_u64());
    BigInt rhs = BigInt(p.get_num());
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 64);
    return lhs < rhs;
}

// ---------------------------------------------------------------------------

void GenSpec::check() const {
    if (n < 0) throw ArgumentError("GenSpec: n must be nonnegative");
    if (p < 0 || p > 1) throw ArgumentError("GenSpec: p must lie in [0, 1]");
    if (genspec_is_random(kind) && count < 1)
        throw ArgumentError("GenSpec: count must be >= 1 for random kinds");
}

bool genspec_is_random(GenKind kind) { return kind != GenKind::AllGraphs; }

GenKind genspec_kind_from_name(const std::string& name) {
    if (name == "all") return GenKind::AllGraphs;
    if (name == "gnp") return GenKind::Gnp;
    if (name == "cograph") return GenKind::Cograph;
    if (name == "tricomp") return GenKind::TriangleFreeComplement;
    if (name == "blowup") return GenKind::BlowupClosure;
    if (name == "rejp5") return GenKind::RejectionP5Free;
    throw ArgumentError("unknown generator kind '" + name +
                        "' (all|gnp|cograph|tricomp|blowup|rejp5)");
}

Graph generate_instance(const GenSpec& spec, int index) {
    spec.check();
    std::uint64_t seed = spec.seed + std::uint64_t(index);
    switch (spec.kind) {
        case GenKind::Gnp:
            return random_gnp(spec.n, spec.p, seed);
        case GenKind::RejectionP5Free:
            return rejection_p5_free(spec.n, spec.p, seed, spec.max_tries);
        case GenKind::Cograph:
            return random_cograph(spec.n, seed);
        case GenKind::TriangleFreeComplement:
            return triangle_free_complement(spec.n, seed);
        case GenKind::BlowupClosure: {
            Graph base = spec.base_graph6.empty()
                             ? Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})
                             : from_graph6(spec.base_graph6);
            return blowup_closure(base, seed, spec.size_cap);
        }
        case GenKind::AllGraphs:
            break;
    }
    throw ArgumentError("generate_instance: exhaustive kinds are streamed, not indexed");
}

long long all_graphs_count(int n) {
    if (n > kAllGraphsCap)
        throw CapabilityError("all_graphs caps at n <= " + std::to_string(kAllGraphsCap));
    if (n < 0) throw ArgumentError("negative n");
    return 1ll << (n * (n - 1) / 2);
}

Graph graph_from_index(int n, std::uint64_t index) {
    // bit order matches graph6: (0,1),(0,2),(1,2),(0,3),...
    std::vector<std::uint64_t> rows(n, 0);
    int bitpos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bitpos)
            if ((index >> bitpos) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    return Graph::from_words(n, rows);
}

AllGraphsStream::AllGraphsStream(int n) : n_(n), count_(std::uint64_t(all_graphs_count(n))) {}

std::optional<Graph> AllGraphsStream::next() {
    if (index_ >= count_) return std::nullopt;
    return graph_from_index(n_, index_++);
}

P5FreeStream::P5FreeStream(int n) : n_(n) {
    if (n > kExhaustiveP5FreeCap)
        throw CapabilityError("exhaustive_p5_free caps at n <= " +
                              std::to_string(kExhaustiveP5FreeCap));
    count_ = std::uint64_t(1) << (n * (n - 1) / 2);
}

std::optional<Graph> P5FreeStream::next() {
    while (index_ < count_) {
        Graph g = graph_from_index(n_, index_++);
        if (is_p5_free(g)) return g;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Graph random_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n > kRandomGraphCap)
        throw CapabilityError("random graphs cap at n <= " + std::to_string(kRandomGraphCap));
    if (n < 0) throw ArgumentError("negative n");
    Rng rng(seed, 0x676e70 /* "gnp" */);
    std::vector<std::uint64_t> rows(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.next_bernoulli(p)) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
    return Graph::from_words(n, rows);
}

Graph rejection_p5_free(int n, const Rational& p, std::uint64_t seed, int max_tries) {
    if (max_tries < 1) throw ArgumentError("rejection_p5_free: max_tries must be >= 1");
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_gnp(n, p, splitmix64(seed + std::uint64_t(t)));
        if (is_p5_free(g)) return g;
    }
    throw ArgumentError("rejection_p5_free: no P5-free sample in " + std::to_string(max_tries) +
                        " tries");
}

Graph random_cograph(int n, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("random_cograph requires n >= 1");
    if (n > kRandomGraphCap)
        throw CapabilityError("random graphs cap at n <= " + std::to_string(kRandomGraphCap));
    Rng rng(seed, 0x636f67 /* "cog" */);
    std::function<Graph(int)> build = [&](int m) -> Graph {
        if (m == 1) return Graph(1);
        int left = 1 + int(rng.next_below(std::uint64_t(m - 1)));
        Graph a = build(left), b = build(m - left);
        return rng.next_u64() & 1 ? join(a, b) : disjoint_union(a, b);
    };
    Graph g = build(n);
    if (!is_p5_free(g)) throw InvariantViolation("random_cograph produced a non-P5-free graph");
    return g;
}

Graph triangle_free_complement(int n, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("triangle_free_complement requires n >= 1");
    if (n > kRandomGraphCap)
        throw CapabilityError("random graphs cap at n <= " + std::to_string(kRandomGraphCap));
    Rng rng(seed, 0x746663 /* "tfc" */);
    // random greedy triangle-free process: shuffle all pairs, insert each edge
    // unless it closes a triangle, until every pair has been tried
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    for (std::size_t k = pairs.size(); k > 1; --k)
        std::swap(pairs[k - 1], pairs[rng.next_below(k)]);
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [i, j] : pairs) {
        if ((rows[i] & rows[j]) != 0) continue;  // common neighbor -> triangle
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
    }
    Graph g = complement(Graph::from_words(n, rows));
    if (alpha(g) > 2)
        throw InvariantViolation("triangle_free_complement: output has alpha > 2");
    return g;
}

Graph blowup_closure(const Graph& base, std::uint64_t seed, int size_cap) {
    if (!is_p5_free(base)) throw ArgumentError("blowup_closure requires a P5-free base");
    if (base.size() < 1) throw ArgumentError("blowup_closure requires a nonempty base");
    Rng rng(seed, 0x626c77 /* "blw" */);
    Graph g = base;
    int ops = 2 + int(rng.next_below(3));
    for (int t = 0; t < ops; ++t) {
        switch (rng.next_below(3)) {
            case 0: {  // blow up by small random weights
                WeightFunction f(g.size());
                long total = 0;
                for (auto& w : f) {
                    w = long(rng.next_below(3));  // weights 0..2
                    total += w;
                }
                if (total == 0 || total > size_cap) break;
                Graph h = blow_up(g, f, size_cap);
                if (h.size() >= 1) g = std::move(h);
                break;
            }
            case 1: {  // union with a fresh P5-free piece
                int m = 1 + int(rng.next_below(4));
                if (g.size() + m > size_cap) break;
                g = disjoint_union(g, random_cograph(m, rng.next_u64()));
                break;
            }
            default: {  // join with a fresh P5-free piece
                int m = 1 + int(rng.next_below(3));
                if (g.size() + m > size_cap) break;
                g = join(g, random_cograph(m, rng.next_u64()));
                break;
            }
        }
    }
    if (!is_p5_free(g))
        throw InvariantViolation("blowup_closure produced a non-P5-free graph");
    return g;
}

}  // namespace p5lab
