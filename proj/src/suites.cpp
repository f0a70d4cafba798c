#include "p5lab/suites.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <mutex>

#include "p5lab/decomposition.hpp"
#include "p5lab/detail/masks.hpp"
#include "p5lab/errors.hpp"
#include "p5lab/generators.hpp"
#include "p5lab/golden.hpp"
#include "p5lab/graph6.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/report.hpp"
#include "p5lab/structure.hpp"

namespace p5lab {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Runs `check` on every labelled P5-free graph with n in [0, n_max]; check
// returns an error message or empty. Thread-safe failure collection.
void for_each_p5_free(int n_max, int jobs, SuiteResult& res,
                      const std::function<std::string(const Graph&)>& check) {
    std::mutex mu;
    std::atomic<long long> count{0};
    for (int n = 0; n <= n_max; ++n) {
        long long total = all_graphs_count(n);
        const long long chunk = 4096;
        long long nchunks = (total + chunk - 1) / chunk;
        parallel_for_ordered(nchunks, jobs, [&](long long ci) {
            for (long long idx = ci * chunk; idx < std::min(total, (ci + 1) * chunk); ++idx) {
                Graph g = graph_from_index(n, std::uint64_t(idx));
                if (!is_p5_free(g)) continue;
                count.fetch_add(1, std::memory_order_relaxed);
                std::string err;
                try {
                    err = check(g);
                } catch (const std::exception& e) {
                    err = std::string("exception: ") + e.what();
                }
                if (!err.empty()) {
                    std::lock_guard<std::mutex> lk(mu);
                    res.fail(to_graph6(g) + ": " + err);
                }
            }
        });
    }
    res.instances = count.load();
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, e);
}

// Independent small oracles (straight enumeration, no shared code with the
// production algorithms).
int alpha_brute(const Graph& g) {
    int n = g.size(), best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if ((m >> i) & 1)
                for (int j = i + 1; j < n && ok; ++j)
                    if (((m >> j) & 1) && g.has_edge(i, j)) ok = false;
        if (ok) best = std::max(best, std::popcount(m));
    }
    return best;
}

int omega_brute(const Graph& g) { return alpha_brute(complement(g)); }

int chi_brute(const Graph& g) {
    int n = g.size();
    if (n == 0) return 0;
    std::vector<int> col(n, 0);
    for (int k = 1; k <= n; ++k) {
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
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

Rational hall_brute(const Graph& g) {
    int n = g.size();
    Rational best(0);
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        VertexSet s(n);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) s.set(i);
        Graph h = induced(g, s);
        Rational p(h.size(), alpha_brute(h));
        p.canonicalize();
        if (p > best) best = p;
    }
    return best;
}

}  // namespace

long long count_p5_free(int n, int jobs) {
    std::atomic<long long> count{0};
    long long total = all_graphs_count(n);
    const long long chunk = 4096;
    long long nchunks = (total + chunk - 1) / chunk;
    parallel_for_ordered(nchunks, jobs, [&](long long ci) {
        long long local = 0;
        for (long long idx = ci * chunk; idx < std::min(total, (ci + 1) * chunk); ++idx) {
            Graph g = graph_from_index(n, std::uint64_t(idx));
            if (is_p5_free(g)) ++local;
        }
        count.fetch_add(local);
    });
    return count.load();
}

SuiteResult suite_chain(int n_max, int jobs) {
    SuiteResult res;
    res.name = "chain";
    Timer tm;
    for_each_p5_free(n_max, jobs, res, [](const Graph& g) -> std::string {
        Rational w(omega(g)), c(chi(g));
        Rational rho = g.size() ? hall_ratio(g).value : Rational(0);
        Rational cs = chi_star(g).value;
        if (!(w <= rho)) return "omega > hall_ratio";
        if (!(rho <= cs)) return "hall_ratio > chi_star";
        if (!(cs <= c)) return "chi_star > chi";
        return {};
    });
    res.seconds = tm.seconds();
    res.detail = "instances = " + std::to_string(res.instances);
    return res;
}

SuiteResult suite_trichotomy(int n_max, int jobs) {
    SuiteResult res;
    res.name = "trichotomy";
    Timer tm;
    std::atomic<long long> ran{0};
    std::mutex mu;
    SuiteResult inner;
    for_each_p5_free(n_max, jobs, inner, [&](const Graph& g) -> std::string {
        if (g.size() < 2 || !is_connected(g) || omega(g) < 2) return {};
        ran.fetch_add(1, std::memory_order_relaxed);
        TrichotomyResult tr = trichotomy_search(g);
        if (!tr.chosen) return "trichotomy Failure: " + tr.failure_summary;
        Verdict v = validate_certificate(g, *tr.chosen, tr.rho_g, Rational(9));
        if (!v.all_pass) {
            for (const auto& c : v.checks)
                if (!c.pass)
                    return std::string("certificate check failed: ") + c.inequality + " (" +
                           rational_str(c.lhs) + " vs " + rational_str(c.rhs) + ")";
            return "certificate verdict failed";
        }
        return {};
    });
    res.pass = inner.pass;
    res.failures = inner.failures;
    res.instances = ran.load();
    res.seconds = tm.seconds();
    res.detail = "connected omega>=2 instances = " + std::to_string(res.instances);
    return res;
}

SuiteResult suite_comb(int count, std::uint64_t seed) {
    SuiteResult res;
    res.name = "comb";
    Timer tm;
    for (int t = 0; t < count; ++t) {
        Rng rng(seed, 0xc0fb + std::uint64_t(t));
        int na = 1 + int(rng.next_below(8));
        int nb = 1 + int(rng.next_below(40));
        int n = na + nb;
        // random anchor-b bipartite adjacency; every b vertex keeps >= 1 anchor
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < nb; ++b) {
            int forced = int(rng.next_below(std::uint64_t(na)));
            for (int a = 0; a < na; ++a)
                if (a == forced || rng.next_below(4) == 0) edges.emplace_back(a, na + b);
        }
        Graph g = Graph::from_edges(n, edges);
        VertexSet anchors(n), bset(n);
        for (int a = 0; a < na; ++a) anchors.set(a);
        for (int b = 0; b < nb; ++b) bset.set(na + b);
        int maxdeg = 0;
        for (int a = 0; a < na; ++a) maxdeg = std::max(maxdeg, (g.neighbors(a) & bset).count());
        Rational delta(maxdeg);
        // gamma straddles the SmallB threshold |B|^2 / (400 delta)
        Rational gamma = Rational(nb) * nb * Rational(1 + long(rng.next_below(16)), 8) /
                         (400 * delta);
        ++res.instances;
        try {
            CombOutcome out = comb(g, anchors, bset, delta, gamma);
            bool small_allowed = Rational(nb) * nb < 400 * gamma * delta;
            if (out.small_b && !small_allowed)
                res.fail("instance " + std::to_string(t) + ": SmallB claimed with |B|^2 >= 400*gamma*delta");
            if (!out.small_b) {
                if (!out.teeth) {
                    res.fail("instance " + std::to_string(t) + ": neither SmallB nor teeth");
                } else {
                    validate_comb_teeth(g, anchors, bset, gamma, *out.teeth);
                }
            }
        } catch (const InvariantViolation& e) {
            res.fail("instance " + std::to_string(t) + ": " + e.what());
        }
    }
    res.seconds = tm.seconds();
    res.detail = "instances = " + std::to_string(res.instances);
    return res;
}

SuiteResult suite_blowup_equiv(int exhaustive_n_max, int random_n_max, int random_count,
                               std::uint64_t seed, int jobs) {
    SuiteResult res;
    res.name = "blowup-equiv";
    Timer tm;
    auto check = [](const Graph& g) -> std::string {
        if (g.size() < 1) return {};
        DualWitness dw = dual_weights(g);
        Graph j = blow_up(g, dw.f);
        if (!is_p5_free(g)) return {};  // only P5-free inputs are in scope
        if (!is_p5_free(j)) return "blow-up not P5-free";
        long aj = j.size() <= 64 ? alpha(j) : weighted_alpha(g, dw.f);
        Rational psi_j = j.size() == 0 ? Rational(0) : Rational(j.size(), aj);
        psi_j.canonicalize();
        Rational cs = chi_star(g).value;
        if (psi_j != cs)
            return "psi(blow_up) = " + rational_str(psi_j) + " != chi_star = " + rational_str(cs);
        // cross-check the two alpha routes when both are available
        if (j.size() <= 40 && g.size() <= kSubsetTableCap) {
            long via_weights = weighted_alpha(g, dw.f);
            if (via_weights != aj) return "alpha(blow_up) disagrees with weighted stable set";
        }
        return {};
    };
    SuiteResult inner;
    for_each_p5_free(exhaustive_n_max, jobs, inner, [&](const Graph& g) -> std::string {
        if (g.size() < 1) return {};
        return check(g);
    });
    res.pass = inner.pass;
    res.failures = inner.failures;
    res.instances = inner.instances;
    for (int t = 0; t < random_count; ++t) {
        int n = 1 + int(Rng(seed, 0xb10 + std::uint64_t(t)).next_below(std::uint64_t(random_n_max)));
        // sparse and dense samples alternate; both regimes keep the rejection
        // rate workable at n = 10
        Rational p = (t % 2 == 0) ? Rational(1, 10) : Rational(4, 5);
        Graph g = rejection_p5_free(n, p, seed + std::uint64_t(t) * 7919, 100000);
        ++res.instances;
        std::string err;
        try {
            err = check(g);
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        if (!err.empty()) res.fail(to_graph6(g) + ": " + err);
    }
    res.seconds = tm.seconds();
    res.detail = "instances = " + std::to_string(res.instances);
    return res;
}

SuiteResult suite_phi(int s_max) {
    SuiteResult res;
    res.name = "phi";
    Timer tm;
    for (int r = 0; r <= s_max; ++r)
        for (int s = r; s <= s_max; ++s) {
            ++res.instances;
            if (!phi_lower_bound_check(r, s))
                res.fail("phi lower bound fails at (" + std::to_string(r) + "," +
                         std::to_string(s) + ")");
            for (int u = s; u <= s_max; ++u)
                if (phi(r, s) * phi(s, u) != phi(r, u))
                    res.fail("phi multiplicativity fails at (" + std::to_string(r) + "," +
                             std::to_string(s) + "," + std::to_string(u) + ")");
        }
    if (phi(0, 0) != 1) res.fail("phi(0,0) != 1");
    if (phi(0, 1) != Rational(15, 16)) res.fail("phi(0,1) != 15/16");
    if (phi(1, 2) != Rational(255, 256)) res.fail("phi(1,2) != 255/256");
    res.seconds = tm.seconds();
    res.detail = "pairs checked up to s = " + std::to_string(s_max);
    return res;
}

SuiteResult suite_induction_step(int points) {
    SuiteResult res;
    res.name = "induction-step";
    Timer tm;
    for (int i = 1; i <= points; ++i) {
        Rational y(i, 4L * points);
        y.canonicalize();
        ++res.instances;
        if (!induction_step_inequality(y)) res.fail("fails at y = " + rational_str(y));
    }
    res.seconds = tm.seconds();
    res.detail = std::to_string(points) + "-point grid in (0, 1/4]";
    return res;
}

SuiteResult suite_named_values() {
    SuiteResult res;
    res.name = "named-values";
    Timer tm;
    Graph c5 = cycle(5), c7 = cycle(7);
    auto expect = [&](bool ok, const std::string& what) {
        ++res.instances;
        if (!ok) res.fail(what);
    };
    expect(chi_star(c5).value == Rational(5, 2), "chi_star(C5) != 5/2");
    expect(chi_star(c7).value == Rational(7, 3), "chi_star(C7) != 7/3");
    expect(hall_ratio(c5).value == Rational(5, 2), "rho(C5) != 5/2");
    expect(chi(c5) == 3, "chi(C5) != 3");
    // brute-force oracles on the same values
    expect(Rational(5, alpha_brute(c5)) == Rational(5, 2), "oracle: 5/alpha(C5) != 5/2");
    expect(Rational(7, alpha_brute(c7)) == Rational(7, 3), "oracle: 7/alpha(C7) != 7/3");
    expect(hall_brute(c5) == Rational(5, 2), "oracle: hall(C5) != 5/2");
    expect(chi_brute(c5) == 3, "oracle: chi(C5) != 3");
    Graph pc = complement(petersen());
    expect(alpha(pc) == 2 && omega(pc) == 4, "petersen complement (alpha, omega) != (2, 4)");
    expect(alpha_brute(pc) == 2 && omega_brute(pc) == 4,
           "oracle: petersen complement (alpha, omega) != (2, 4)");
    res.seconds = tm.seconds();
    return res;
}

SuiteResult suite_exponent(int n_max, int tightness_instances, int tightness_n,
                           std::uint64_t seed, int jobs) {
    SuiteResult res;
    res.name = "exponent";
    Timer tm;
    std::mutex mu;
    double max_d = 0;
    std::string argmax;
    SuiteResult inner;
    for_each_p5_free(n_max, jobs, inner, [&](const Graph& g) -> std::string {
        long a = alpha(g), w = omega(g);
        auto d = empirical_exponent_from(g.size(), a, w);
        if (!d) return {};
        // exact form of d_hat <= 2: n <= alpha * omega^2
        if (!exponent_at_most(g.size(), a, w, Rational(2)))
            return "d_hat exceeds 2 (n=" + std::to_string(g.size()) + ", alpha=" +
                   std::to_string(a) + ", omega=" + std::to_string(w) + ")";
        std::lock_guard<std::mutex> lk(mu);
        if (d->value > max_d) {
            max_d = d->value;
            argmax = to_graph6(g);
        }
        return {};
    });
    res.pass = inner.pass;
    res.failures = inner.failures;
    res.instances = inner.instances;
    // tightness family: triangle-free complements
    bool tight = false;
    double best_tight = 0;
    for (int t = 0; t < tightness_instances; ++t) {
        Graph g = triangle_free_complement(tightness_n, seed + std::uint64_t(t));
        long a = alpha(g), w = omega(g);
        if (exponent_at_least(g.size(), a, w, Rational(11, 10))) tight = true;
        if (auto d = empirical_exponent_from(g.size(), a, w))
            best_tight = std::max(best_tight, d->value);
        ++res.instances;
    }
    if (!tight)
        res.fail("no triangle-free complement instance reached d_hat >= 1.1 (best " +
                 std::to_string(best_tight) + ")");
    res.detail = "max d_hat over corpus = " + std::to_string(max_d) + " at " + argmax +
                 "; tightness family best = " + std::to_string(best_tight);
    res.seconds = tm.seconds();
    return res;
}

SuiteResult suite_structural(int n_max, int jobs) {
    SuiteResult res;
    res.name = "structural";
    Timer tm;
    std::atomic<long long> ran{0};
    SuiteResult inner;
    for_each_p5_free(n_max, jobs, inner, [&](const Graph& g) -> std::string {
        if (g.size() < 3 || !is_connected(g)) return {};
        int n = g.size();
        // canonical anticomplete pair with connected sides: first connected A
        // in mask order whose non-neighborhood is nonempty, paired with one
        // component of it
        std::vector<std::uint64_t> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = g.row_word(v);
        for (std::uint64_t am = 1; am < (std::uint64_t(1) << n); ++am) {
            if (!detail::connected_mask(rows, am)) continue;
            std::uint64_t bm = ((std::uint64_t(1) << n) - 1) & ~detail::closed_nbrs(rows, am);
            if (!bm) continue;
            std::uint64_t bc = detail::reach(rows, bm, bm & (~bm + 1));
            VertexSet a = detail::mask_to_set(n, am), b = detail::mask_to_set(n, bc);
            ran.fetch_add(1, std::memory_order_relaxed);
            // minimal_cutset re-verifies its own postconditions on every call
            VertexSet s = minimal_cutset(g, a, b);
            SplitReport rep = cutset_attachment_split(g, s, a, b);
            if (!rep.mixed_on_both.empty())
                return "MixedOnBoth vertex " + std::to_string(rep.mixed_on_both.front().v);
            break;
        }
        return {};
    });
    res.pass = inner.pass;
    res.failures = inner.failures;
    res.instances = ran.load();
    res.seconds = tm.seconds();
    res.detail = "cutset calls = " + std::to_string(res.instances);
    return res;
}

SuiteResult suite_determinism(int n_max, int jobs) {
    SuiteResult res;
    res.name = "determinism";
    Timer tm;
    std::mutex mu;
    std::atomic<long long> count{0};
    for (int n = 0; n <= n_max; ++n) {
        long long total = all_graphs_count(n);
        const long long chunk = 8192;
        long long nchunks = (total + chunk - 1) / chunk;
        parallel_for_ordered(nchunks, jobs, [&](long long ci) {
            for (long long idx = ci * chunk; idx < std::min(total, (ci + 1) * chunk); ++idx) {
                Graph g = graph_from_index(n, std::uint64_t(idx));
                count.fetch_add(1, std::memory_order_relaxed);
                std::string enc = to_graph6(g);
                Graph back = from_graph6(enc);
                if (!(back == g) || to_graph6(back) != enc) {
                    std::lock_guard<std::mutex> lk(mu);
                    res.fail("graph6 round-trip failed at n=" + std::to_string(n) + " index " +
                             std::to_string(idx));
                }
            }
        });
    }
    res.instances = count.load();

    // fixed-seed golden outputs, generated twice
    auto twice_equal = [&](const std::string& what, const std::function<Graph()>& gen,
                           const std::string& golden) {
        std::string a = to_graph6(gen()), b = to_graph6(gen());
        if (a != b) res.fail(what + ": two runs differ");
        if (!golden.empty() && a != golden)
            res.fail(what + ": got " + a + ", golden " + golden);
    };
    twice_equal("gnp(8, 1/4, seed 42)", [] { return random_gnp(8, Rational(1, 4), 42); },
                kGoldenGnp);
    twice_equal("cograph(10, seed 7)", [] { return random_cograph(10, 7); }, kGoldenCograph);
    twice_equal("triangle_free_complement(12, seed 3)",
                [] { return triangle_free_complement(12, 3); }, kGoldenTricomp);
    {
        Graph g = triangle_free_complement(12, 3);
        long a = alpha(g), w = omega(g);
        if (a != kGoldenTricompAlpha || w != kGoldenTricompOmega)
            res.fail("tricomp(12,3) invariants changed: alpha=" + std::to_string(a) +
                     " omega=" + std::to_string(w));
    }
    res.seconds = tm.seconds();
    res.detail = "graphs round-tripped = " + std::to_string(res.instances);
    return res;
}

}  // namespace p5lab
