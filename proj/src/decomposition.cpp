#include "p5lab/decomposition.hpp"

#include <algorithm>

#include "p5lab/detail/masks.hpp"
#include "p5lab/errors.hpp"

namespace p5lab {

using namespace detail;

// ---------------------------------------------------------------------------
// Exact arithmetic facts used by the engines.

Rational phi(int r, int s) {
    if (r < 0 || r > s) throw ArgumentError("phi requires 0 <= r <= s");
    if (s > 24) throw CapabilityError("phi caps at s <= 24 (doubly exponential denominators)");
    Rational prod(1);
    for (int i = r + 1; i <= s; ++i)
        prod *= Rational(1) - pow2_inv(1ul << (i + 1));
    return prod;
}

bool phi_lower_bound_check(int r, int s) {
    return phi(r, s) >= Rational(1) - pow2_inv(1 + (1ul << r));
}

bool induction_step_inequality(const Rational& y) {
    if (y <= 0 || y > Rational(1, 4))
        throw ArgumentError("induction_step_inequality requires y in (0, 1/4]");
    return Rational(1) - 3 * y >= rational_pow(Rational(1) - y, 9);
}

// ---------------------------------------------------------------------------
// (p,q)-sparsity.

namespace {

// Is there an anticomplete pair inside mask f with both sides of rho >= p?
bool has_good_pair(const SubsetTables& t, std::uint64_t f, const Rational& p) {
    for (std::uint64_t a = f; a; a = (a - 1) & f) {
        if (t.rho_ge(a, p)) {
            std::uint64_t b = f & ~closed_nbrs(t.rows, a);
            if (b && t.rho_ge(b, p)) return true;
        }
    }
    return false;
}

}  // namespace

bool check_pq_sparse(const Graph& g, const Rational& p, const Rational& q) {
    if (!(p > 0) || p > q) throw ArgumentError("check_pq_sparse requires 0 < p <= q");
    if (g.size() > kBlockadeSearchCap)
        throw CapabilityError("check_pq_sparse caps at n <= " +
                              std::to_string(kBlockadeSearchCap));
    if (g.size() == 0) return true;
    SubsetTables t = build_subset_tables(g);
    // Connected F with |F| >= 2 suffices: rho is attained on a connected
    // subgraph, the pair propagates upward to any superset, and a single
    // vertex cannot hold a pair of disjoint nonempty sets.
    for (std::uint64_t f = 1; f <= t.full; ++f) {
        if (std::popcount(f) < 2) continue;
        if (!connected_mask(t.rows, f)) continue;
        if (!t.rho_ge(f, q)) continue;
        if (!has_good_pair(t, f, p)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Certificates and the validator.

const char* certificate_kind_name(const Certificate& c) {
    if (std::holds_alternative<AnticompletePairCert>(c)) return "anticomplete_pair";
    if (std::holds_alternative<CompletePairCert>(c)) return "complete_pair";
    return "complete_blockade";
}

void Verdict::add(std::string inequality, Rational lhs, Rational rhs, bool pass) {
    all_pass = all_pass && pass;
    checks.push_back({std::move(inequality), std::move(lhs), std::move(rhs), pass});
}

namespace {

Rational recomputed_rho(const Graph& g, const VertexSet& s) {
    if (s.none()) return Rational(0);
    return hall_ratio(induced(g, s), kSubsetTableCap).value;
}

void add_relation_check(Verdict& v, const Graph& g, const VertexSet& x, const VertexSet& y,
                        PairRelation want, const std::string& label) {
    bool ok = false;
    try {
        ok = pair_relation(g, x, y) == want;
    } catch (const ArgumentError&) {
        ok = false;  // empty or overlapping sides
    }
    v.add(label, Rational(ok ? 1 : 0), Rational(1), ok);
}

void add_rho_claim_check(Verdict& v, const Graph& g, const VertexSet& s, const Rational& claimed,
                         const std::string& label) {
    Rational actual = recomputed_rho(g, s);
    v.add(label + " == recomputed", claimed, actual, claimed == actual);
}

}  // namespace

Verdict validate_certificate(const Graph& g, const Certificate& c, const Rational& rho_g,
                             const Rational& d) {
    Verdict v;
    if (const auto* ac = std::get_if<AnticompletePairCert>(&c)) {
        add_relation_check(v, g, ac->a, ac->b, PairRelation::Anticomplete, "pair(a,b) anticomplete");
        add_rho_claim_check(v, g, ac->a, ac->rho_a, "rho(a)");
        add_rho_claim_check(v, g, ac->b, ac->rho_b, "rho(b)");
        return v;
    }
    if (const auto* cp = std::get_if<CompletePairCert>(&c)) {
        add_relation_check(v, g, cp->x, cp->y, PairRelation::Complete, "pair(x,y) complete");
        add_rho_claim_check(v, g, cp->x, cp->rho_x, "rho(x)");
        add_rho_claim_check(v, g, cp->y, cp->rho_y, "rho(y)");
        bool yrange = cp->y_param > 0 && cp->y_param <= Rational(1, 4);
        v.add("y in (0, 1/4]", cp->y_param, Rational(1, 4), yrange);
        Rational rx = recomputed_rho(g, cp->x), ry = recomputed_rho(g, cp->y);
        Rational y9 = rational_pow(cp->y_param, 9);
        v.add("rho(x) >= y^9 rho(G)", rx, y9 * rho_g, rx >= y9 * rho_g);
        Rational want_y = (Rational(1) - 3 * cp->y_param) * rho_g;
        v.add("rho(y) >= (1-3y) rho(G)", ry, want_y, ry >= want_y);
        return v;
    }
    const auto& cb = std::get<CompleteBlockadeCert>(c);
    long k = long(cb.blockade.blocks.size());
    v.add("k >= 2", Rational(k), Rational(2), k >= 2);
    bool structural = true;
    try {
        validate_blockade(g, cb.blockade);
    } catch (const InvariantViolation&) {
        structural = false;
    }
    v.add("blockade structurally complete", Rational(structural ? 1 : 0), Rational(1), structural);
    if (cb.per_block_rho.size() != cb.blockade.blocks.size()) {
        v.add("per-block rho list length", Rational(long(cb.per_block_rho.size())), Rational(k),
              false);
        return v;
    }
    if (d < 0) throw ArgumentError("validate_certificate: d must be nonnegative");
    unsigned long dnum = d.get_num().get_ui(), dden = d.get_den().get_ui();
    for (long i = 0; i < k; ++i) {
        Rational actual = recomputed_rho(g, cb.blockade.blocks[std::size_t(i)]);
        const Rational& claimed = cb.per_block_rho[std::size_t(i)];
        v.add("rho(B" + std::to_string(i + 1) + ") == recomputed", claimed, actual,
              claimed == actual);
        // rho(B_i) >= k^(-p/q) rho(G)  <=>  rho(B_i)^q k^p >= rho(G)^q, exact
        Rational lhs = rational_pow(actual, dden) * bigint_pow(BigInt(k), dnum);
        Rational rhs = rational_pow(rho_g, dden);
        std::string label = (dden == 1)
                                ? ("rho(B" + std::to_string(i + 1) + ") * k^d >= rho(G)")
                                : ("rho(B" + std::to_string(i + 1) + ")^q * k^p >= rho(G)^q");
        v.add(label, lhs, rhs, lhs >= rhs);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Trichotomy search.

namespace {

// Smallest valid y for a complete pair with rho fractions (r_x, r_y), if any:
// y must satisfy y^9 <= r_x, 1-3y <= r_y, 0 < y <= 1/4.
std::optional<Rational> pick_y_param(const Rational& r_x, const Rational& r_y) {
    if (!(r_x > 0)) return std::nullopt;
    if (r_y >= 1) {
        Rational y = std::min(Rational(1, 4), r_x);
        return y;  // y^9 <= y <= r_x since r_x <= 1
    }
    Rational y = (Rational(1) - r_y) / 3;
    if (y > Rational(1, 4)) return std::nullopt;
    if (rational_pow(y, 9) > r_x) return std::nullopt;
    return y;
}

}  // namespace

TrichotomyResult trichotomy_search(const Graph& g, const Rational& eps, const Rational& d) {
    if (auto p5 = find_induced_p5(g))
        throw ArgumentError("trichotomy_search: input not P5-free, induced P5 at (" +
                            std::to_string((*p5)[0]) + "," + std::to_string((*p5)[1]) + "," +
                            std::to_string((*p5)[2]) + "," + std::to_string((*p5)[3]) + "," +
                            std::to_string((*p5)[4]) + ")");
    if (g.size() < 2) throw ArgumentError("trichotomy_search requires |g| >= 2");
    if (eps <= 0 || eps > Rational(1, 2))
        throw ArgumentError("trichotomy_search: eps must be in (0, 1/2]");
    if (g.size() > kTrichotomyCap)
        throw CapabilityError("trichotomy_search caps at n <= " + std::to_string(kTrichotomyCap));

    int n = g.size();
    SubsetTables t = build_subset_tables(g);
    TrichotomyResult res;
    res.rho_g = t.rho(t.full);
    const Rational& rho_g = res.rho_g;

    // --- anticomplete pair: maximize min(|A|, |B|) ---
    std::uint64_t best_a = 0, best_b = 0;
    int best_min = 0;
    for (std::uint64_t a = 1; a < t.full; ++a) {
        std::uint64_t b = t.full & ~closed_nbrs(t.rows, a);
        if (!b) continue;
        int mn = std::min(std::popcount(a), std::popcount(b));
        if (mn > best_min) {
            best_min = mn;
            best_a = a;
            best_b = b;
        }
    }
    if (best_min > 0) {
        res.anticomplete.found = true;
        res.anticomplete.size_fraction = make_rational(best_min, n);
    }

    // --- complete pair (thm-main shape): maximize (r_y, r_x), lex-least X ---
    std::uint64_t best_x = 0, best_y = 0;
    Rational best_rx(0), best_ry(-1);
    std::optional<Rational> best_yp;
    for (std::uint64_t x = 1; x <= t.full; ++x) {
        std::uint64_t common = t.full & ~x;
        for (std::uint64_t s = x; s && common;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            common &= t.rows[v];
        }
        if (!common) continue;
        Rational rx = t.rho(x) / rho_g, ry = t.rho(common) / rho_g;
        auto yp = pick_y_param(rx, ry);
        if (!yp) continue;
        bool better = ry > best_ry || (ry == best_ry && rx > best_rx) ||
                      (ry == best_ry && rx == best_rx && lex_less(x, best_x));
        if (better) {
            best_x = x;
            best_y = common;
            best_rx = rx;
            best_ry = ry;
            best_yp = yp;
        }
    }
    if (best_yp) {
        res.complete_pair.found = true;
        res.complete_pair.rho_x_fraction = best_rx;
        res.complete_pair.rho_y_fraction = best_ry;
    }

    // --- complete blockade at exponent d: find the largest valid k ---
    long k_floor = 2;
    {
        Rational inv = 1 / eps;
        long c = long(mpz_class(inv.get_num() / inv.get_den()).get_si());
        if (Rational(c) < inv) ++c;  // ceil(1/eps)
        k_floor = std::max<long>(2, c);
    }
    std::optional<Blockade> best_blockade;
    if (d < 0) throw ArgumentError("trichotomy_search: d must be nonnegative");
    unsigned long dnum = d.get_num().get_ui(), dden = d.get_den().get_ui();
    auto tau_ok = [&](long k, std::uint64_t blk) {
        // rho(blk) >= k^(-d) rho_g, cross-powered
        Rational lhs = rational_pow(t.rho(blk), dden) * bigint_pow(BigInt(k), dnum);
        return lhs >= rational_pow(rho_g, dden);
    };
    for (long ktarget = n; ktarget >= k_floor && !best_blockade; --ktarget) {
        // singleton blocks have rho 1; when they pass the threshold the best
        // blockade is a maximum clique (k blocks pairwise complete always give
        // a k-clique by picking one vertex per block, so k <= omega)
        if (tau_ok(ktarget, 1)) {
            auto [w, clique] = omega_witness(g);
            if (w >= ktarget) {
                Blockade blockade;
                blockade.kind = BlockadeKind::Complete;
                for (int v = clique.lowest(); v >= 0; v = clique.next(v)) {
                    VertexSet s(n);
                    s.set(v);
                    blockade.blocks.push_back(std::move(s));
                }
                best_blockade = std::move(blockade);
            }
            continue;
        }
        // rho_g > ktarget^d: blocks need rho above 1. The threshold is an
        // exact rational for integer d; fractional d in this regime is not
        // supported.
        if (dden != 1)
            throw CapabilityError(
                "trichotomy_search: fractional d with rho(G) > k^d is unsupported");
        Rational tau = rho_g / bigint_pow(BigInt(ktarget), dnum);
        BlockadeSearchResult r =
            find_complete_blockade(g, int(ktarget), tau, SearchMode::Exhaustive);
        if (r.blockade && long(r.blockade->blocks.size()) >= ktarget) {
            bool all_ok = true;
            for (const auto& blk : r.blockade->blocks)
                if (!tau_ok(long(r.blockade->blocks.size()), set_to_mask(blk))) all_ok = false;
            if (all_ok) best_blockade = r.blockade;
        }
    }
    if (best_blockade) {
        long k = long(best_blockade->blocks.size());
        res.blockade.found = true;
        res.blockade.k = k;
        Rational mn(-1);
        for (const auto& blk : best_blockade->blocks) {
            Rational r = t.rho(set_to_mask(blk)) / rho_g;
            if (mn < 0 || r < mn) mn = r;
        }
        res.blockade.min_block_rho_fraction = mn;
    }

    // --- choose by fixed priority ---
    if (res.complete_pair.found) {
        CompletePairCert cp;
        cp.x = mask_to_set(n, best_x);
        cp.y = mask_to_set(n, best_y);
        cp.rho_x = t.rho(best_x);
        cp.rho_y = t.rho(best_y);
        cp.y_param = *best_yp;
        res.chosen = Certificate(std::move(cp));
    } else if (res.blockade.found) {
        CompleteBlockadeCert cb;
        cb.blockade = *best_blockade;
        for (const auto& blk : cb.blockade.blocks) cb.per_block_rho.push_back(t.rho(set_to_mask(blk)));
        res.chosen = Certificate(std::move(cb));
    } else if (res.anticomplete.found) {
        AnticompletePairCert ac;
        ac.a = mask_to_set(n, best_a);
        ac.b = mask_to_set(n, best_b);
        ac.rho_a = t.rho(best_a);
        ac.rho_b = t.rho(best_b);
        res.chosen = Certificate(std::move(ac));
    } else {
        res.failure_summary = "no certificate of any shape over " + std::to_string(n) +
                              " vertices: scanned " + std::to_string(t.full) +
                              " candidate sets per shape; omega = " + std::to_string(omega(g)) +
                              ", rho = " + rational_str(rho_g);
    }
    return res;
}

// ---------------------------------------------------------------------------
// anti_decompose.

namespace {

struct EngineCtx {
    const Graph& g;
    const SubsetTables& t;
    Rational eps, p, q, rho_g;
    Rational eps2_rho, eps8_rho;  // eps^2 rho(G), eps^8 rho(G)
    DecompositionTrace* trace;
    int n;
};

Certificate complete_pair_outcome(const EngineCtx& cx, std::uint64_t x_mask,
                                  std::uint64_t y_mask, const std::string& why) {
    CompletePairCert cp;
    std::uint64_t xw = cx.t.rho_witness(x_mask);
    cp.x = mask_to_set(cx.n, xw);
    cp.y = mask_to_set(cx.n, y_mask);
    cp.rho_x = cx.t.rho(xw);
    cp.rho_y = cx.t.rho(y_mask);
    // engine-level outcome 2 thresholds, checked exactly
    if (!(cp.rho_x >= cx.eps8_rho))
        throw InvariantViolation("anti_decompose: complete-pair X below eps^8 rho(G)");
    if (!(cp.rho_y >= cx.p))
        throw InvariantViolation("anti_decompose: complete-pair Y below p");
    if (pair_relation(cx.g, cp.x, cp.y) != PairRelation::Complete)
        throw InvariantViolation("anti_decompose: outcome-2 pair not complete");
    auto yp = pick_y_param(cp.rho_x / cx.rho_g, cp.rho_y / cx.rho_g);
    cp.y_param = yp ? *yp : Rational(1, 4);
    cx.trace->events.push_back("complete pair extracted: " + why);
    return Certificate(std::move(cp));
}

// Cut step: inside connected F with rho(F) >= q, find an anticomplete
// pair maximizing rho(A), take the minimal cutset between connected shrunken
// sides, and either split off a complete pair (when the cutset is rho-large)
// or hand back (A*, B*, S) with A*, B* full components of F minus S.
struct CutStepOut {
    bool produced_certificate = false;
    Certificate certificate;  // set when produced_certificate
    std::uint64_t a = 0, b = 0, s = 0;
};

CutStepOut cut_along_best_pair(const EngineCtx& cx, std::uint64_t f_mask) {
    const SubsetTables& t = cx.t;
    // best anticomplete pair: maximize rho(A) with both sides >= p
    std::uint64_t best_a = 0, best_b = 0;
    bool have = false;
    Rational best_rho(0);
    for (std::uint64_t a = f_mask; a; a = (a - 1) & f_mask) {
        std::uint64_t b = f_mask & ~closed_nbrs(t.rows, a);
        if (!b) continue;
        if (!t.rho_ge(a, cx.p) || !t.rho_ge(b, cx.p)) continue;
        Rational ra = t.rho(a);
        if (!have || ra > best_rho || (ra == best_rho && lex_less(a, best_a))) {
            have = true;
            best_rho = ra;
            best_a = a;
            best_b = b;
        }
    }
    if (!have)
        throw InvariantViolation(
            "anti_decompose: (p,q)-sparsity promised an anticomplete pair inside a subgraph of "
            "rho >= q but none exists; F = " +
            format_vertex_set(mask_to_set(cx.n, f_mask)));

    std::uint64_t aw = t.rho_witness(best_a);  // connected, psi = rho(A)
    std::uint64_t bw = t.rho_witness(best_b);

    // minimal cutset separating the witnesses inside F
    std::uint64_t s = open_nbrs(t.rows, aw) & f_mask;
    for (std::uint64_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (separates(t.rows, f_mask, s & ~bit(v), aw, bw)) s &= ~bit(v);
    }
    if (s == 0 || !separates(t.rows, f_mask, s, aw, bw))
        throw InvariantViolation("anti_decompose: cutset construction failed");

    std::uint64_t astar = reach(t.rows, f_mask & ~s, aw);
    std::uint64_t bstar = reach(t.rows, f_mask & ~s, bw);
    if (astar & bstar) throw InvariantViolation("anti_decompose: sides not separated");

    if (t.rho_gt(s, 2 * cx.eps8_rho)) {
        // split the cutset by completeness side; P5-freeness forbids the rest
        std::uint64_t s_a = 0, s_b = 0;
        for (std::uint64_t m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            bool comp_a = (astar & ~t.rows[v]) == 0;
            bool comp_b = (bstar & ~t.rows[v]) == 0;
            if (comp_a)
                s_a |= bit(v);
            else if (comp_b)
                s_b |= bit(v);
            else {
                // theorem-backed: impossible in a P5-free graph
                VertexSet av = mask_to_set(cx.n, astar), bv = mask_to_set(cx.n, bstar);
                VertexSet sv(cx.n);
                sv.set(v);
                SplitReport rep = cutset_attachment_split(cx.g, sv, av, bv);
                std::string msg = "anti_decompose: cutset vertex " + std::to_string(v) +
                                  " complete to neither side";
                if (!rep.mixed_on_both.empty()) {
                    const auto& w = rep.mixed_on_both.front().p5;
                    msg += "; induced P5 witness (" + std::to_string(w[0]) + "," +
                           std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                           std::to_string(w[3]) + "," + std::to_string(w[4]) + ")";
                }
                throw InvariantViolation(msg);
            }
        }
        // the rho-larger side exceeds eps^8 rho(G) by subadditivity; ties to A
        std::uint64_t pick_s, pick_side;
        if (t.rho(s_a) >= t.rho(s_b)) {
            pick_s = s_a;
            pick_side = astar;
        } else {
            pick_s = s_b;
            pick_side = bstar;
        }
        CutStepOut out;
        out.produced_certificate = true;
        out.certificate = complete_pair_outcome(
            cx, pick_s, pick_side, "cutset rho exceeds 2 eps^8 rho(G) during the cut step");
        return out;
    }

    // rho(A*) >= max(p, q - 2 eps^8 rho(G)) is forced by the max-rho choice
    Rational slack = cx.q - 2 * cx.eps8_rho;
    Rational need = cx.p >= slack ? cx.p : slack;
    if (!cx.t.rho_ge(astar, need))
        throw InvariantViolation("anti_decompose: cut-step A* misses its rho bound");
    CutStepOut out;
    out.a = astar;
    out.b = bstar;
    out.s = s;
    return out;
}

}  // namespace

void validate_partition(const Graph& g, const PartitionSnapshot& snap, const Rational& p,
                        const Rational& q, const Rational& eps, const Rational& rho_g) {
    int n = g.size();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::uint64_t am = set_to_mask(snap.a), dm = set_to_mask(snap.d), em = set_to_mask(snap.e);
    std::uint64_t cover = am | dm | em;
    std::uint64_t blocks_all = 0;
    if (am == 0) throw InvariantViolation("partition: A empty");
    if (snap.blocks.empty()) throw InvariantViolation("partition: no blocks");
    for (const auto& blk : snap.blocks) {
        std::uint64_t bm = set_to_mask(blk);
        if (bm == 0) throw InvariantViolation("partition: empty block");
        if (bm & blocks_all) throw InvariantViolation("partition: blocks overlap");
        blocks_all |= bm;
    }
    if ((am & dm) || (am & em) || (dm & em) || (blocks_all & cover))
        throw InvariantViolation("partition: parts overlap");
    cover |= blocks_all;
    if (cover != full) throw InvariantViolation("partition: parts do not cover V(G)");

    // D separates A, B_1..B_k, E: no component of G - D meets two parts
    std::uint64_t rest = full & ~dm;
    std::vector<std::uint64_t> parts{am};
    for (const auto& blk : snap.blocks) parts.push_back(set_to_mask(blk));
    // E may itself be a union of separated pieces; treat each E-component as a part
    std::uint64_t epend = em;
    while (epend) {
        std::uint64_t c = reach(rows, em, std::uint64_t{1} << std::countr_zero(epend));
        parts.push_back(c);
        epend &= ~c;
    }
    std::uint64_t seen = 0;
    while ((rest & ~seen) != 0) {
        int seed = std::countr_zero(rest & ~seen);
        std::uint64_t comp = reach(rows, rest, bit(seed));
        seen |= comp;
        int touched = 0;
        for (auto pm : parts)
            if (comp & pm) ++touched;
        if (touched > 1) throw InvariantViolation("partition: D fails to separate the parts");
    }

    if (!connected_mask(rows, am)) throw InvariantViolation("partition: A not connected");
    for (const auto& blk : snap.blocks)
        if (!connected_mask(rows, set_to_mask(blk)))
            throw InvariantViolation("partition: block not connected");

    SubsetTables t = build_subset_tables(g);
    if (em && t.rho_ge(em, p)) throw InvariantViolation("partition: rho(E) >= p");
    for (const auto& blk : snap.blocks)
        if (!t.rho_ge(set_to_mask(blk), p)) throw InvariantViolation("partition: rho(B_i) < p");
    Rational slack = q - 2 * rational_pow(eps, 8) * rho_g;
    Rational need = p >= slack ? p : slack;
    if (!t.rho_ge(am, need)) throw InvariantViolation("partition: rho(A) below its bound");

    for (std::uint64_t m = dm; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((rows[v] & blocks_all) == 0)
            throw InvariantViolation("partition: D vertex " + std::to_string(v) +
                                     " has no neighbor in the blocks");
    }

    // attach set: exactly the D vertices with a neighbor in A
    std::uint64_t attach = 0;
    for (std::uint64_t m = dm; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (rows[v] & am) attach |= bit(v);
    }
    if (attach != set_to_mask(snap.attach))
        throw InvariantViolation("partition: recorded attach set mismatch");
}

AntiDecomposeResult anti_decompose(const Graph& g, const Rational& eps, const Rational& p,
                                   const Rational& q) {
    if (!is_connected(g)) throw ArgumentError("anti_decompose requires a connected graph");
    if (auto p5 = find_induced_p5(g))
        throw ArgumentError("anti_decompose: input not P5-free");
    if (eps <= 0 || eps > Rational(1, 2))
        throw ArgumentError("anti_decompose: eps must be in (0, 1/2]");
    if (g.size() > kBlockadeSearchCap)
        throw CapabilityError("anti_decompose caps at n <= " + std::to_string(kBlockadeSearchCap));

    SubsetTables t = build_subset_tables(g);
    Rational rho_g = t.rho(t.full);
    if (!(p > 0) || p > q || q > (Rational(1) - eps * eps) * rho_g)
        throw ArgumentError("anti_decompose requires 0 < p <= q <= (1 - eps^2) rho(G)");
    if (!check_pq_sparse(g, p, q))
        throw ArgumentError("anti_decompose: graph is not (p,q)-sparse for these parameters");

    AntiDecomposeResult res;
    EngineCtx cx{g,
                 t,
                 eps,
                 p,
                 q,
                 rho_g,
                 eps * eps * rho_g,
                 rational_pow(eps, 8) * rho_g,
                 &res.trace,
                 g.size()};
    const int n = g.size();

    // ---- initial partition from one cut step on the whole graph ----
    CutStepOut first = cut_along_best_pair(cx, t.full);
    if (first.produced_certificate) {
        res.certificate = std::move(first.certificate);
        res.outcome = 2;
        return res;
    }
    std::uint64_t A = first.a, D = first.s;
    std::vector<std::uint64_t> blocks;
    std::uint64_t E = 0;
    {
        std::uint64_t rest = t.full & ~(A | D);
        while (rest) {
            std::uint64_t c = reach(t.rows, t.full & ~D, bit(std::countr_zero(rest)));
            rest &= ~c;
            if (t.rho_ge(c, p))
                blocks.push_back(c);
            else
                E |= c;
        }
    }

    auto snapshot = [&](const std::string& note) {
        PartitionSnapshot snap;
        snap.a = mask_to_set(n, A);
        snap.d = mask_to_set(n, D);
        snap.e = mask_to_set(n, E);
        for (auto bm : blocks) snap.blocks.push_back(mask_to_set(n, bm));
        std::uint64_t attach = 0;
        for (std::uint64_t m = D; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (t.rows[v] & A) attach |= bit(v);
        }
        snap.attach = mask_to_set(n, attach);
        snap.note = note;
        validate_partition(g, snap, p, q, eps, rho_g);
        res.trace.snapshots.push_back(std::move(snap));
        return attach;
    };

    std::uint64_t attach = snapshot("initial partition");

    // ---- grow: decompose A while its hall ratio stays at least q ----
    while (t.rho_ge(A, q)) {
        CutStepOut step = cut_along_best_pair(cx, A);
        if (step.produced_certificate) {
            res.certificate = std::move(step.certificate);
            res.outcome = 2;
            return res;
        }
        std::uint64_t Aold = A;
        A = step.a;
        D |= step.s;
        std::uint64_t rest = Aold & ~(step.a | step.s);
        while (rest) {
            std::uint64_t c = reach(t.rows, Aold & ~step.s, bit(std::countr_zero(rest)));
            rest &= ~c;
            if (t.rho_ge(c, p))
                blocks.push_back(c);
            else
                E |= c;
        }
        attach = snapshot("grow step: cut inside A");
    }
    res.trace.events.push_back("growth stopped: rho(A) < q");

    // ---- attachment set S = D vertices with a neighbor in A ----
    std::uint64_t S = attach;

    if (t.rho_gt(S, cx.eps2_rho)) {
        // S splits into vertices complete to A and vertices mixed on A
        std::uint64_t mixed = 0, comp = 0;
        for (std::uint64_t m = S; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if ((A & ~t.rows[v]) == 0)
                comp |= bit(v);
            else
                mixed |= bit(v);
        }
        if (t.rho_gt(comp, cx.eps8_rho)) {
            res.certificate = complete_pair_outcome(cx, comp, A, "complete part of attach set");
            res.outcome = 2;
            return res;
        }
        if (!t.rho_gt(mixed, cx.eps2_rho - cx.eps8_rho))
            throw InvariantViolation("anti_decompose: rho subadditivity breach on attach split");

        std::uint64_t s0 = t.rho_witness(mixed);  // psi(S0) = rho(mixed)
        Rational psi_s0 = t.rho(s0);

        // every S0 vertex is mixed on A, hence complete or anticomplete to
        // each block (else an induced P5 exists)
        std::vector<std::uint64_t> s_i(blocks.size(), 0);
        for (std::uint64_t m = s0; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            bool covered = false;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                std::uint64_t hit = t.rows[v] & blocks[i];
                if (hit == 0) continue;
                if ((blocks[i] & ~t.rows[v]) != 0) {
                    VertexSet sv(n);
                    sv.set(v);
                    SplitReport rep =
                        cutset_attachment_split(g, sv, mask_to_set(n, A), mask_to_set(n, blocks[i]));
                    std::string msg = "anti_decompose: vertex " + std::to_string(v) +
                                      " mixed on A and on block " + std::to_string(i);
                    if (!rep.mixed_on_both.empty()) {
                        const auto& w = rep.mixed_on_both.front().p5;
                        msg += "; induced P5 (" + std::to_string(w[0]) + "," +
                               std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                               std::to_string(w[3]) + "," + std::to_string(w[4]) + ")";
                    }
                    throw InvariantViolation(msg);
                }
                s_i[i] |= bit(v);
                covered = true;
            }
            if (!covered)
                throw InvariantViolation("anti_decompose: S0 vertex sees no block");
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (s_i[i] && t.rho_gt(s_i[i], cx.eps8_rho)) {
                res.certificate =
                    complete_pair_outcome(cx, s_i[i], blocks[i], "block-complete slice of S0");
                res.outcome = 2;
                return res;
            }
        }

        // comb over block representatives against S0
        long s0_size = std::popcount(s0);
        Rational delta = Rational(16, 15) * rational_pow(eps, 6) * s0_size;
        Rational gamma = Rational(3, 1280) * s0_size / rational_pow(eps, 6);
        VertexSet anchors(n);
        std::vector<int> block_of_anchor(64, -1);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (s_i[i] == 0) continue;  // representative only needed where S0 attaches
            int b_i = std::countr_zero(blocks[i]);
            anchors.set(b_i);
            block_of_anchor[b_i] = int(i);
        }
        res.trace.events.push_back("comb invoked: |S0| = " + std::to_string(s0_size) +
                                   ", delta = " + rational_str(delta) +
                                   ", gamma = " + rational_str(gamma));
        CombOutcome combed = comb(g, anchors, mask_to_set(n, s0), delta, gamma);
        if (combed.small_b || !combed.teeth)
            throw InvariantViolation(
                "anti_decompose: comb returned SmallB although |S0|^2 = 400*gamma*delta");
        const CombTeeth& teeth = *combed.teeth;
        long ell = long(teeth.anchors.size());

        // teeth must be pairwise complete; a missing edge yields an induced P5
        // through A via the anchors
        for (std::size_t i = 0; i < teeth.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < teeth.blocks.size(); ++j) {
                std::uint64_t xi = set_to_mask(teeth.blocks[i]), xj = set_to_mask(teeth.blocks[j]);
                for (std::uint64_t mu = xi; mu;) {
                    int u = std::countr_zero(mu);
                    mu &= mu - 1;
                    std::uint64_t miss = xj & ~t.rows[u];
                    if (miss) {
                        int v2 = std::countr_zero(miss);
                        throw InvariantViolation(
                            "anti_decompose: teeth " + std::to_string(i) + "," +
                            std::to_string(j) + " not complete (u = " + std::to_string(u) +
                            ", v = " + std::to_string(v2) +
                            "); a P5 through A follows in a non-P5-free input");
                    }
                }
            }

        CompleteBlockadeCert cb;
        cb.blockade.kind = BlockadeKind::Complete;
        for (const auto& blk : teeth.blocks) {
            cb.blockade.blocks.push_back(blk);
            cb.per_block_rho.push_back(t.rho(set_to_mask(blk)));
        }
        validate_blockade(g, cb.blockade);
        if (Rational(ell) < 1 / eps)
            throw InvariantViolation("anti_decompose: comb produced fewer than 1/eps teeth");
        for (const auto& r : cb.per_block_rho)
            if (!(r * bigint_pow(BigInt(ell), 8) >= rho_g))
                throw InvariantViolation("anti_decompose: tooth below ell^-8 rho(G)");
        res.certificate = Certificate(std::move(cb));
        res.outcome = 3;
        res.trace.events.push_back("complete blockade with " + std::to_string(ell) + " teeth");
        return res;
    }

    // ---- final anticomplete outcome: A against everything but S ----
    std::uint64_t rest = t.full & ~(A | S);
    if (rest == 0) throw InvariantViolation("anti_decompose: nothing left outside A and S");
    if ((open_nbrs(t.rows, A) & rest) != 0)
        throw InvariantViolation("anti_decompose: A sees past its attach set");
    AnticompletePairCert ac;
    ac.a = mask_to_set(n, A);
    ac.b = mask_to_set(n, rest);
    ac.rho_a = t.rho(A);
    ac.rho_b = t.rho(rest);
    if (!(ac.rho_a >= q - 2 * cx.eps8_rho))
        throw InvariantViolation("anti_decompose: final rho(A) below q - 2 eps^8 rho(G)");
    if (!(ac.rho_b >= (Rational(1) - eps * eps) * rho_g))
        throw InvariantViolation("anti_decompose: final rho(B) below (1 - eps^2) rho(G)");
    res.certificate = Certificate(std::move(ac));
    res.outcome = 1;
    res.trace.events.push_back("anticomplete pair: rho(A) = " + rational_str(ac.rho_a) +
                               ", rho(B) = " + rational_str(ac.rho_b));
    return res;
}

}  // namespace p5lab
