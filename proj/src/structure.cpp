#include "p5lab/structure.hpp"

#include <algorithm>

#include "p5lab/detail/masks.hpp"
#include "p5lab/errors.hpp"

namespace p5lab {

using namespace detail;

// ---------------------------------------------------------------------------
// Induced P5.

namespace {

// Ascending DFS over ordered walks; the first hit is the lexicographically
// least witness. Middle vertices need degree >= 2, which prunes most of the
// corpus graphs after one mask intersection.
template <class Set>
std::optional<std::array<int, 5>> p5_search(const std::vector<Set>& nbr,
                                            const std::vector<Set>& closed, const Set& mid) {
    const int n = int(nbr.size());
    for (int v1 = 0; v1 < n; ++v1) {
        Set c2 = nbr[v1] & mid;
        for (int v2 = c2.lowest(); v2 >= 0; v2 = c2.next(v2)) {
            Set c3 = (nbr[v2] & mid) - closed[v1];
            for (int v3 = c3.lowest(); v3 >= 0; v3 = c3.next(v3)) {
                Set c4 = ((nbr[v3] & mid) - closed[v1]) - closed[v2];
                for (int v4 = c4.lowest(); v4 >= 0; v4 = c4.next(v4)) {
                    Set c5 = ((nbr[v4] - closed[v1]) - closed[v2]) - closed[v3];
                    int v5 = c5.lowest();
                    if (v5 >= 0) return std::array<int, 5>{v1, v2, v3, v4, v5};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 5>> find_induced_p5_words(int n,
                                                        const std::vector<std::uint64_t>& rows) {
    struct W {
        std::uint64_t w = 0;
        bool any() const { return w; }
        int lowest() const { return w ? std::countr_zero(w) : -1; }
        int next(int i) const {
            std::uint64_t m = w & ~((i < 63) ? ((std::uint64_t{2} << i) - 1) : ~std::uint64_t{0});
            return m ? std::countr_zero(m) : -1;
        }
        W operator&(const W& o) const { return {w & o.w}; }
        W operator-(const W& o) const { return {w & ~o.w}; }
    };
    std::vector<W> nbr(n), closed(n);
    W mid{0};
    for (int v = 0; v < n; ++v) {
        nbr[v].w = rows[v];
        closed[v].w = rows[v] | bit(v);
        if (std::popcount(rows[v]) >= 2) mid.w |= bit(v);
    }
    return p5_search<W>(nbr, closed, mid);
}

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    int n = g.size();
    if (n < 5) return std::nullopt;
    if (n <= 64) {
        std::vector<std::uint64_t> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
        return find_induced_p5_words(n, rows);
    }
    std::vector<Bitset> nbr, closed;
    Bitset mid(n);
    nbr.reserve(n);
    closed.reserve(n);
    for (int v = 0; v < n; ++v) {
        nbr.push_back(g.neighbors(v));
        Bitset c = g.neighbors(v);
        c.set(v);
        closed.push_back(std::move(c));
        if (g.degree(v) >= 2) mid.set(v);
    }
    return p5_search<Bitset>(nbr, closed, mid);
}

bool is_p5_free(const Graph& g) { return !find_induced_p5(g).has_value(); }

// ---------------------------------------------------------------------------
// Anticomplete pair search.

PairSearchResult find_anticomplete_pair(const Graph& g, const Rational& min_rho_a,
                                        const Rational& min_rho_b, SearchMode mode) {
    int n = g.size();
    PairSearchResult out;
    if (mode == SearchMode::Exhaustive) {
        if (n > kPairSearchCap)
            throw CapabilityError("exhaustive anticomplete-pair search caps at n <= " +
                                  std::to_string(kPairSearchCap) + ", got n = " +
                                  std::to_string(n));
        out.complete_search = true;
        if (n < 2) return out;
        SubsetTables t = build_subset_tables(g);
        // (A, V \ N[A]) ranges over all maximal anticomplete pairs as A varies.
        for (std::uint64_t a = 1; a <= t.full; ++a) {
            if (!t.rho_ge(a, min_rho_a)) continue;
            std::uint64_t b = t.full & ~closed_nbrs(t.rows, a);
            if (b == 0) continue;
            if (!t.rho_ge(b, min_rho_b)) continue;
            out.pair = {mask_to_set(n, a), mask_to_set(n, b)};
            return out;
        }
        return out;
    }

    // Heuristic: candidate pairs with rho verified from below via exact psi of
    // connected pieces; may miss pairs (complete_search stays false).
    auto rho_lower_bound_ok = [&](const VertexSet& s, const Rational& need) {
        Graph h = induced(g, s);
        for (const VertexSet& comp : components(h)) {
            Graph hc = induced(h, comp);
            Rational p(hc.size(), alpha(hc));
            p.canonicalize();
            if (p >= need) return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        VertexSet a(n);
        a.set(v);
        VertexSet b = g.full_set() - closed_neighborhood(g, a);
        if (b.none()) continue;
        VertexSet comp = component_of(g, v, g.full_set() - open_neighborhood(g, b));
        // grow the a-side to the whole piece not seeing b
        if (pair_relation(g, comp, b) == PairRelation::Anticomplete) a = comp;
        if (rho_lower_bound_ok(a, min_rho_a) && rho_lower_bound_ok(b, min_rho_b)) {
            out.pair = {a, b};
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minimal cutsets.

namespace {

void require_anticomplete_pair(const Graph& g, const VertexSet& a, const VertexSet& b,
                               const char* who) {
    if (pair_relation(g, a, b) != PairRelation::Anticomplete)
        throw ArgumentError(std::string(who) + ": sides are not anticomplete");
}

}  // namespace

VertexSet minimal_cutset(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_anticomplete_pair(g, a, b, "minimal_cutset");
    if (!is_connected(g)) throw ArgumentError("minimal_cutset: graph is not connected");
    int n = g.size();
    if (n > 64) throw CapabilityError("minimal_cutset caps at n <= 64");
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
    std::uint64_t am = set_to_mask(a), bm = set_to_mask(b);
    std::uint64_t universe = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::uint64_t s = open_nbrs(rows, am);
    if (s & bm) throw InvariantViolation("minimal_cutset: seed touches b despite anticompleteness");
    for (std::uint64_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (separates(rows, universe, s & ~bit(v), am, bm)) s &= ~bit(v);
    }
    // postconditions, re-checked on every call
    if (s == 0) throw InvariantViolation("minimal_cutset: empty result");
    if (!separates(rows, universe, s, am, bm))
        throw InvariantViolation("minimal_cutset: result fails to separate");
    for (std::uint64_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (separates(rows, universe, s & ~bit(v), am, bm))
            throw InvariantViolation("minimal_cutset: result not inclusion-minimal at vertex " +
                                     std::to_string(v));
    }
    return mask_to_set(n, s);
}

// ---------------------------------------------------------------------------
// Attachment split.

namespace {

PairRelation singleton_relation(const Graph& g, int v, const VertexSet& side) {
    Bitset hit = g.neighbors(v) & side;
    int h = hit.count();
    if (h == 0) return PairRelation::Anticomplete;
    return h == side.count() ? PairRelation::Complete : PairRelation::Mixed;
}

// v is mixed on connected side: an adjacent pair (x seen, x' unseen) exists.
std::pair<int, int> mixed_edge(const Graph& g, int v, const VertexSet& side) {
    Bitset seen = g.neighbors(v) & side;
    for (int x = seen.lowest(); x >= 0; x = seen.next(x)) {
        Bitset unseen = (g.neighbors(x) & side) - g.neighbors(v);
        int x2 = unseen.lowest();
        if (x2 >= 0) return {x, x2};
    }
    throw InvariantViolation("mixed_edge: no boundary edge found (side not connected?)");
}

}  // namespace

SplitReport cutset_attachment_split(const Graph& g, const VertexSet& s, const VertexSet& a,
                                    const VertexSet& b) {
    require_anticomplete_pair(g, a, b, "cutset_attachment_split");
    if (!connected_within(g, a) || !connected_within(g, b))
        throw ArgumentError("cutset_attachment_split: sides must induce connected subgraphs");
    check_vertex_set(g, s, "cutset_attachment_split cutset");
    if (s.none()) throw ArgumentError("cutset_attachment_split: empty cutset");
    if (s.intersects(a) || s.intersects(b))
        throw ArgumentError("cutset_attachment_split: cutset meets a side");

    SplitReport rep;
    for (int v = s.lowest(); v >= 0; v = s.next(v)) {
        PairRelation ra = singleton_relation(g, v, a);
        PairRelation rb = singleton_relation(g, v, b);
        Attachment kind;
        if (ra == PairRelation::Complete)
            kind = Attachment::CompleteToA;
        else if (rb == PairRelation::Complete)
            kind = Attachment::CompleteToB;
        else if (ra == PairRelation::Mixed && rb == PairRelation::Mixed) {
            kind = Attachment::MixedOnBoth;
            auto [x, x2] = mixed_edge(g, v, a);
            auto [y, y2] = mixed_edge(g, v, b);
            rep.mixed_on_both.push_back({v, {x2, x, v, y, y2}});
        } else {
            kind = Attachment::MixedOnA;
        }
        rep.entries.push_back({v, kind, ra, rb});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Comb procedure.

namespace {

struct CombGreedyStep {
    int anchor;
    std::uint64_t tooth;  // coverage claimed at selection time
};

// teeth for anchor subset K: private neighborhoods within b
std::vector<std::uint64_t> private_teeth(const std::vector<std::uint64_t>& rows,
                                         const std::vector<int>& anchors, std::uint64_t bm) {
    std::vector<std::uint64_t> teeth(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::uint64_t t = rows[anchors[i]] & bm;
        for (std::size_t j = 0; j < anchors.size(); ++j)
            if (j != i) t &= ~rows[anchors[j]];
        teeth[i] = t;
    }
    return teeth;
}

bool teeth_sizes_ok(const std::vector<std::uint64_t>& teeth, const Rational& gamma) {
    long k = long(teeth.size());
    if (k == 0) return false;
    for (auto t : teeth)
        if (Rational(std::popcount(t)) * k * k < gamma) return false;
    return true;
}

}  // namespace

void validate_comb_teeth(const Graph& g, const VertexSet& anchors, const VertexSet& b,
                         const Rational& gamma, const CombTeeth& teeth) {
    long k = long(teeth.anchors.size());
    if (k == 0 || teeth.blocks.size() != teeth.anchors.size())
        throw InvariantViolation("comb teeth: malformed certificate");
    Bitset seen(g.size());
    for (std::size_t i = 0; i < teeth.blocks.size(); ++i) {
        const VertexSet& blk = teeth.blocks[i];
        if (!anchors.test(teeth.anchors[i])) throw InvariantViolation("comb teeth: anchor not in anchor set");
        if (!blk.subset_of(b)) throw InvariantViolation("comb teeth: block leaves b");
        if (blk.intersects(seen)) throw InvariantViolation("comb teeth: blocks overlap");
        seen |= blk;
        if (Rational(blk.count()) * k * k < gamma)
            throw InvariantViolation("comb teeth: block " + std::to_string(i) +
                                     " smaller than gamma/k^2");
        for (std::size_t j = 0; j < teeth.blocks.size(); ++j) {
            VertexSet av(g.size());
            av.set(teeth.anchors[j]);
            PairRelation rel = pair_relation(g, av, teeth.blocks[i]);
            PairRelation want = (i == j) ? PairRelation::Complete : PairRelation::Anticomplete;
            if (rel != want)
                throw InvariantViolation("comb teeth: anchor " + std::to_string(teeth.anchors[j]) +
                                         " has wrong relation to block " + std::to_string(i));
        }
    }
}

CombOutcome comb(const Graph& g, const VertexSet& anchors, const VertexSet& b,
                 const Rational& delta, const Rational& gamma) {
    check_vertex_set(g, anchors, "comb anchors");
    check_vertex_set(g, b, "comb b");
    if (anchors.none() || b.none()) throw ArgumentError("comb: empty anchors or b");
    if (anchors.intersects(b)) throw ArgumentError("comb: anchors and b overlap");
    if (delta <= 0 || gamma <= 0) throw ArgumentError("comb: delta and gamma must be positive");
    if (g.size() > 64) throw CapabilityError("comb caps at n <= 64");

    int n = g.size();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
    std::uint64_t am = set_to_mask(anchors), bm = set_to_mask(b);

    for (std::uint64_t m = am; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (Rational(std::popcount(rows[v] & bm)) > delta)
            throw ArgumentError("comb: anchor " + std::to_string(v) +
                                " has more than delta neighbors in b");
    }
    for (std::uint64_t m = bm; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((rows[v] & am) == 0)
            throw ArgumentError("comb: vertex " + std::to_string(v) + " of b sees no anchor");
    }

    long bsz = std::popcount(bm);
    bool small_allowed = Rational(bsz) * bsz < 400 * gamma * delta;

    auto finish = [&](const std::vector<int>& ank,
                      const std::vector<std::uint64_t>& teeth) -> CombOutcome {
        CombTeeth t;
        t.anchors = ank;
        for (auto tm : teeth) t.blocks.push_back(mask_to_set(n, tm));
        validate_comb_teeth(g, anchors, b, gamma, t);
        CombOutcome o;
        o.teeth = std::move(t);
        return o;
    };

    // greedy cover: repeatedly take the anchor with the most uncovered
    // neighbors; its fresh coverage is the tooth candidate
    std::vector<CombGreedyStep> seq;
    std::uint64_t r = bm;
    while (r) {
        int best = -1, bestcnt = -1;
        for (std::uint64_t m = am; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int c = std::popcount(rows[v] & r);
            if (c > bestcnt) {
                bestcnt = c;
                best = v;
            }
        }
        std::uint64_t tooth = rows[best] & r;
        seq.push_back({best, tooth});
        r &= ~tooth;
    }

    // prefix battery, longest first; later anchors may eat earlier teeth, so
    // each prefix is cleaned before the size test
    for (int k = int(seq.size()); k >= 1; --k) {
        std::vector<std::uint64_t> teeth(k);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            std::uint64_t t = seq[i].tooth;
            for (int m = i + 1; m < k; ++m) t &= ~rows[seq[m].anchor];
            teeth[i] = t;
            if (Rational(std::popcount(t)) * k * k < gamma) ok = false;
        }
        if (ok) {
            std::vector<int> ank(k);
            for (int i = 0; i < k; ++i) ank[i] = seq[i].anchor;
            return finish(ank, teeth);
        }
    }

    // drop-worst fixpoint on the full anchor set with recomputed private teeth
    {
        std::vector<int> ank;
        for (const auto& st : seq) ank.push_back(st.anchor);
        while (!ank.empty()) {
            auto teeth = private_teeth(rows, ank, bm);
            if (teeth_sizes_ok(teeth, gamma)) return finish(ank, teeth);
            std::size_t worst = 0;
            for (std::size_t i = 1; i < teeth.size(); ++i)
                if (std::popcount(teeth[i]) < std::popcount(teeth[worst])) worst = i;
            ank.erase(ank.begin() + long(worst));
        }
    }

    // teeth exhausted the cheap constructions; a small instance may still
    // admit them via exhaustive anchor subsets
    int na = std::popcount(am);
    if (!small_allowed && na <= 20) {
        std::vector<int> avs;
        for (std::uint64_t m = am; m;) {
            avs.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        std::vector<int> best_ank;
        std::vector<std::uint64_t> best_teeth;
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << na); ++sub) {
            std::vector<int> ank;
            for (int i = 0; i < na; ++i)
                if ((sub >> i) & 1) ank.push_back(avs[i]);
            if (ank.size() <= best_ank.size()) continue;
            auto teeth = private_teeth(rows, ank, bm);
            if (teeth_sizes_ok(teeth, gamma)) {
                best_ank = ank;
                best_teeth = teeth;
            }
        }
        if (!best_ank.empty()) return finish(best_ank, best_teeth);
    }

    if (small_allowed) {
        CombOutcome out;
        out.small_b = true;
        return out;
    }
    throw InvariantViolation(
        "comb: teeth construction failed although |b|^2 >= 400*gamma*delta (|b| = " +
        std::to_string(bsz) + ", gamma = " + rational_str(gamma) + ", delta = " +
        rational_str(delta) + ", anchors = " + std::to_string(std::popcount(am)) + ")");
}

// ---------------------------------------------------------------------------
// Complete blockades.

void validate_blockade(const Graph& g, const Blockade& blockade) {
    if (blockade.blocks.empty()) throw InvariantViolation("blockade: no blocks");
    Bitset seen(g.size());
    for (const auto& blk : blockade.blocks) {
        check_vertex_set(g, blk, "blockade block");
        if (blk.none()) throw InvariantViolation("blockade: empty block");
        if (blk.intersects(seen)) throw InvariantViolation("blockade: blocks overlap");
        seen |= blk;
    }
    PairRelation want =
        blockade.kind == BlockadeKind::Complete ? PairRelation::Complete : PairRelation::Anticomplete;
    for (std::size_t i = 0; i < blockade.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blockade.blocks.size(); ++j)
            if (pair_relation(g, blockade.blocks[i], blockade.blocks[j]) != want)
                throw InvariantViolation("blockade: wrong relation between blocks " +
                                         std::to_string(i) + " and " + std::to_string(j));
}

namespace {

// Max number of pairwise-complete disjoint blocks of rho >= min_rho inside
// `allowed`, by submask DP with memoization.
struct BlockadeDp {
    const SubsetTables& t;
    const Rational& min_rho;
    std::vector<std::int8_t> memo;

    explicit BlockadeDp(const SubsetTables& tables, const Rational& mr)
        : t(tables), min_rho(mr), memo(std::size_t(1) << tables.n, -1) {}

    int run(std::uint64_t allowed) {
        if (allowed == 0) return 0;
        std::int8_t& m = memo[allowed];
        if (m >= 0) return m;
        int best = 0;
        for (std::uint64_t blk = allowed; blk; blk = (blk - 1) & allowed) {
            if (t.rho_ge(blk, min_rho)) {
                std::uint64_t common = t.full;
                for (std::uint64_t s = blk; s;) {
                    int v = std::countr_zero(s);
                    s &= s - 1;
                    common &= t.rows[v];
                }
                int sub = 1 + run(allowed & ~blk & common);
                if (sub > best) best = sub;
            }
        }
        m = std::int8_t(best);
        return best;
    }

    // first submask (descending submask order) achieving the DP optimum
    std::vector<std::uint64_t> reconstruct(std::uint64_t allowed) {
        std::vector<std::uint64_t> blocks;
        while (allowed) {
            int want = run(allowed);
            if (want == 0) break;
            for (std::uint64_t blk = allowed; blk; blk = (blk - 1) & allowed) {
                if (t.rho_ge(blk, min_rho)) {
                    std::uint64_t common = t.full;
                    for (std::uint64_t s = blk; s;) {
                        int v = std::countr_zero(s);
                        s &= s - 1;
                        common &= t.rows[v];
                    }
                    std::uint64_t next = allowed & ~blk & common;
                    if (1 + run(next) == want) {
                        blocks.push_back(blk);
                        allowed = next;
                        break;
                    }
                }
            }
        }
        return blocks;
    }
};

}  // namespace

BlockadeSearchResult find_complete_blockade(const Graph& g, int k_min,
                                            const Rational& min_rho_per_block, SearchMode mode) {
    if (k_min < 1) throw ArgumentError("find_complete_blockade: k_min must be >= 1");
    BlockadeSearchResult out;
    int n = g.size();
    if (mode == SearchMode::Exhaustive) {
        if (n > kBlockadeSearchCap)
            throw CapabilityError("exhaustive blockade search caps at n <= " +
                                  std::to_string(kBlockadeSearchCap) + ", got n = " +
                                  std::to_string(n));
        out.complete_search = true;
        if (n == 0) return out;
        SubsetTables t = build_subset_tables(g);
        BlockadeDp dp(t, min_rho_per_block);
        if (dp.run(t.full) < k_min) return out;
        Blockade blockade;
        blockade.kind = BlockadeKind::Complete;
        for (auto m : dp.reconstruct(t.full)) blockade.blocks.push_back(mask_to_set(n, m));
        validate_blockade(g, blockade);
        out.blockade = std::move(blockade);
        return out;
    }
    // Heuristic: singleton blocks on a maximum clique.
    if (min_rho_per_block <= 1) {
        auto [w, clique] = omega_witness(g);
        if (w >= k_min) {
            Blockade blockade;
            blockade.kind = BlockadeKind::Complete;
            for (int v = clique.lowest(); v >= 0; v = clique.next(v)) {
                VertexSet s(n);
                s.set(v);
                blockade.blocks.push_back(std::move(s));
            }
            validate_blockade(g, blockade);
            out.blockade = std::move(blockade);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eps-restricted subgraphs.

namespace {

// induced max degree of mask, and classification against eps*|mask|
bool mask_is_sparse(const std::vector<std::uint64_t>& rows, std::uint64_t m, const Rational& eps) {
    int sz = std::popcount(m);
    int maxdeg = 0;
    for (std::uint64_t s = m; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        maxdeg = std::max(maxdeg, std::popcount(rows[v] & m));
    }
    return Rational(maxdeg) <= eps * sz;
}

bool mask_is_dense(const std::vector<std::uint64_t>& rows, std::uint64_t m, const Rational& eps) {
    int sz = std::popcount(m);
    int mindeg = sz;
    for (std::uint64_t s = m; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        mindeg = std::min(mindeg, std::popcount(rows[v] & m));
    }
    return Rational(sz - 1 - mindeg) <= eps * sz;
}

VertexSet greedy_restricted(const Graph& g, const Rational& eps, bool dense_side) {
    Graph h = dense_side ? complement(g) : g;
    VertexSet keep = h.full_set();
    while (true) {
        int sz = keep.count();
        int worst = -1, worstdeg = -1;
        for (int v = keep.lowest(); v >= 0; v = keep.next(v)) {
            int d = (h.neighbors(v) & keep).count();
            if (d > worstdeg) {
                worstdeg = d;
                worst = v;
            }
        }
        if (Rational(worstdeg) <= eps * sz) return keep;
        keep.reset(worst);
    }
}

}  // namespace

EpsRestrictedResult find_eps_restricted_subgraph(const Graph& g, const Rational& eps) {
    if (eps <= 0 || eps > Rational(1, 2))
        throw ArgumentError("find_eps_restricted_subgraph: eps must be in (0, 1/2]");
    int n = g.size();
    if (n == 0) throw ArgumentError("find_eps_restricted_subgraph: null graph");
    if (n <= kEpsRestrictedExhaustiveCap) {
        std::vector<std::uint64_t> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        std::uint64_t best = 0;
        for (std::uint64_t m = 1; m <= full; ++m) {
            if (std::popcount(m) <= std::popcount(best)) continue;
            if (mask_is_sparse(rows, m, eps) || mask_is_dense(rows, m, eps)) best = m;
        }
        VertexSet s = mask_to_set(n, best);
        return {s, sparsity_class(induced(g, s), eps)};
    }
    VertexSet sp = greedy_restricted(g, eps, false);
    VertexSet dn = greedy_restricted(g, eps, true);
    VertexSet pick = (dn.count() > sp.count()) ? dn : sp;
    return {pick, sparsity_class(induced(g, pick), eps)};
}

}  // namespace p5lab
