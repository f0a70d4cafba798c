#include <doctest.h>

#include "oracles.hpp"
#include "p5lab/decomposition.hpp"
#include "p5lab/errors.hpp"
#include "p5lab/generators.hpp"
#include "p5lab/invariants.hpp"

using namespace p5lab;

TEST_CASE("phi values") {
    CHECK(phi(0, 0) == Rational(1));
    CHECK(phi(0, 1) == Rational(15, 16));
    CHECK(phi(1, 2) == Rational(255, 256));
    CHECK(phi(2, 2) == Rational(1));
    CHECK(phi(0, 3) == Rational(15, 16) * Rational(255, 256) * Rational(65535, 65536));
    CHECK_THROWS_AS(phi(3, 2), ArgumentError);
}

TEST_CASE("phi multiplicativity and lower bound") {
    for (int r = 0; r <= 8; ++r) {
        CHECK(phi_lower_bound_check(r, r));
        for (int s = r; s <= 8; ++s) {
            CHECK(phi_lower_bound_check(r, s));
            for (int t = s; t <= 8; ++t) CHECK(phi(r, s) * phi(s, t) == phi(r, t));
        }
    }
    // the bound it beats: phi(r,s) >= 1 - 2^(-1-2^r) >= 1/2
    CHECK(phi(0, 8) >= Rational(1, 2));
}

TEST_CASE("induction step inequality") {
    CHECK(induction_step_inequality(Rational(1, 4)));
    CHECK(induction_step_inequality(Rational(1, 1024)));
    CHECK_THROWS_AS(induction_step_inequality(Rational(1, 2)), ArgumentError);
    CHECK_THROWS_AS(induction_step_inequality(Rational(0)), ArgumentError);
    // (3/4)^9 = 19683/262144 < 1/4 makes y = 1/4 work
    CHECK(rational_pow(Rational(3, 4), 9) == Rational(19683, 262144));
    for (int i = 1; i <= 1000; ++i) {
        Rational y(i, 4000);
        y.canonicalize();
        CHECK(induction_step_inequality(y));
    }
}

TEST_CASE("check_pq_sparse") {
    CHECK(check_pq_sparse(oracle::edgeless(4), Rational(1), Rational(1)));
    CHECK(!check_pq_sparse(oracle::complete(4), Rational(1), Rational(1)));
    // C6: no induced subgraph reaches rho 3, so (2,3)-sparse vacuously
    CHECK(check_pq_sparse(oracle::cycle(6), Rational(2), Rational(3)));
    CHECK_THROWS_AS(check_pq_sparse(oracle::cycle(6), Rational(3), Rational(2)), ArgumentError);
    CHECK_THROWS_AS(check_pq_sparse(Graph(15), Rational(1), Rational(1)), CapabilityError);
}

TEST_CASE("trichotomy on C5 picks the complete pair") {
    Graph c5 = oracle::cycle(5);
    TrichotomyResult tr = trichotomy_search(c5);
    CHECK(tr.rho_g == Rational(5, 2));
    REQUIRE(tr.chosen.has_value());
    const auto* cp = std::get_if<CompletePairCert>(&*tr.chosen);
    REQUIRE(cp != nullptr);
    CHECK(cp->x == oracle::set_of(c5, {0}));
    CHECK(cp->y == oracle::set_of(c5, {1, 4}));
    CHECK(cp->y_param > 0);
    CHECK(cp->y_param <= Rational(1, 4));
    Verdict v = validate_certificate(c5, *tr.chosen, tr.rho_g, Rational(9));
    CHECK(v.all_pass);
}

TEST_CASE("trichotomy on a star matches the expected pair") {
    Graph star = join(oracle::complete(1), oracle::edgeless(3));
    TrichotomyResult tr = trichotomy_search(star);
    REQUIRE(tr.chosen.has_value());
    const auto* cp = std::get_if<CompletePairCert>(&*tr.chosen);
    REQUIRE(cp != nullptr);
    CHECK(cp->x == oracle::set_of(star, {0}));
    CHECK(cp->y == oracle::set_of(star, {1, 2, 3}));
    CHECK(validate_certificate(star, *tr.chosen, tr.rho_g, Rational(9)).all_pass);
}

TEST_CASE("trichotomy on a disjoint union reports the anticomplete shape") {
    Graph u = disjoint_union(oracle::complete(3), oracle::complete(3));
    TrichotomyResult tr = trichotomy_search(u);
    CHECK(tr.anticomplete.found);
    CHECK(*tr.anticomplete.size_fraction == Rational(1, 2));
    REQUIRE(tr.chosen.has_value());  // priority still prefers complete shapes if valid
    Verdict v = validate_certificate(u, *tr.chosen, tr.rho_g, Rational(9));
    CHECK(v.all_pass);
}

TEST_CASE("trichotomy rejects non-P5-free input") {
    CHECK_THROWS_AS(trichotomy_search(oracle::path(5)), ArgumentError);
    CHECK_THROWS_AS(trichotomy_search(oracle::complete(1)), ArgumentError);
}

TEST_CASE("validate_certificate passes K4 singleton blockade at d = 9") {
    Graph k4 = oracle::complete(4);
    CompleteBlockadeCert cb;
    cb.blockade.kind = BlockadeKind::Complete;
    for (int v = 0; v < 4; ++v) {
        VertexSet s(4);
        s.set(v);
        cb.blockade.blocks.push_back(s);
        cb.per_block_rho.push_back(Rational(1));
    }
    Verdict v = validate_certificate(k4, Certificate(cb), Rational(4), Rational(9));
    CHECK(v.all_pass);
}

TEST_CASE("validate_certificate detects corrupted certificates") {
    Graph c5 = oracle::cycle(5);
    TrichotomyResult tr = trichotomy_search(c5);
    REQUIRE(tr.chosen.has_value());
    CompletePairCert cp = std::get<CompletePairCert>(*tr.chosen);
    // swap one vertex of Y to break completeness: {1,4} -> {1,2}
    CompletePairCert bad = cp;
    bad.y = oracle::set_of(c5, {1, 2});
    Verdict v = validate_certificate(c5, Certificate(bad), tr.rho_g, Rational(9));
    CHECK(!v.all_pass);
    // wrong claimed rho is caught too
    CompletePairCert bad2 = cp;
    bad2.rho_x = Rational(7, 3);
    CHECK(!validate_certificate(c5, Certificate(bad2), tr.rho_g, Rational(9)).all_pass);
    // fractional d goes through the cross-powered route
    CompleteBlockadeCert cb;
    cb.blockade.kind = BlockadeKind::Complete;
    for (int v2 = 0; v2 < 2; ++v2) {
        VertexSet s(5);
        s.set(v2);
        // not complete in C5 unless adjacent; use {0} and {1}
    }
    VertexSet s0(5), s1(5);
    s0.set(0);
    s1.set(1);
    cb.blockade.blocks = {s0, s1};
    cb.per_block_rho = {Rational(1), Rational(1)};
    Verdict vf = validate_certificate(c5, Certificate(cb), Rational(5, 2), Rational(19, 2));
    CHECK(vf.all_pass);  // 1 >= 2^(-19/2) * 5/2 holds
}

TEST_CASE("anti_decompose on the Petersen complement") {
    // alpha = 2 makes the complement of the Petersen graph P5-free, and
    // rho = 5 > omega = 4 leaves room for a compliant q
    Graph pc = complement(oracle::petersen());
    Rational eps(1, 4), p(1);
    Rational rho = hall_ratio(pc).value;
    CHECK(rho == Rational(5));
    Rational q = (Rational(1) - eps * eps) * rho;  // 75/16 > omega = 4
    REQUIRE(check_pq_sparse(pc, p, q));
    AntiDecomposeResult r = anti_decompose(pc, eps, p, q);
    REQUIRE(r.certificate.has_value());
    CHECK(r.outcome >= 1);
    CHECK(r.outcome <= 3);
    CHECK((!r.trace.snapshots.empty() || !r.trace.events.empty()));

    // a non-(p,q)-sparse parameterization is rejected: any edge subgraph has
    // rho = 2 and no anticomplete pair, so q <= 2 never works
    Graph p4 = oracle::path(4);
    CHECK(!check_pq_sparse(p4, Rational(1), Rational(3, 2)));
    CHECK_THROWS_AS(anti_decompose(p4, Rational(1, 2), Rational(1), Rational(3, 2)),
                    ArgumentError);

    // disconnected input rejected
    Graph u = disjoint_union(oracle::complete(2), oracle::complete(2));
    CHECK_THROWS_AS(anti_decompose(u, eps, p, Rational(1)), ArgumentError);
    // out-of-range q rejected
    CHECK_THROWS_AS(anti_decompose(p4, Rational(1, 2), Rational(1), Rational(2)),
                    ArgumentError);
}

TEST_CASE("anti_decompose outcomes satisfy the engine thresholds") {
    // corpus: blow-ups of C5 (rho >= 5/2, omega = 2) keep omega below
    // (1 - eps^2) rho, which is what (1, q)-sparsity needs
    Graph c5 = oracle::cycle(5);
    int ran = 0;
    for (std::uint64_t seed = 0; seed < 60 && ran < 25; ++seed) {
        Rng rng(seed, 0xdec0);
        WeightFunction f(5);
        long total = 0;
        for (auto& w : f) {
            w = 1 + long(rng.next_below(2));
            total += w;
        }
        if (total > 9) continue;
        Graph g = blow_up(c5, f);
        if (!is_connected(g)) continue;
        Rational eps(1, 4), p(1);
        Rational rho_g = hall_ratio(g).value;
        Rational q = (Rational(1) - eps * eps) * rho_g;
        if (!(p <= q)) continue;
        if (!check_pq_sparse(g, p, q)) continue;
        ++ran;
        AntiDecomposeResult r = anti_decompose(g, eps, p, q);
        REQUIRE(r.certificate.has_value());
        Rational eps8 = rational_pow(eps, 8);
        if (const auto* ac = std::get_if<AnticompletePairCert>(&*r.certificate)) {
            CHECK(pair_relation(g, ac->a, ac->b) == PairRelation::Anticomplete);
            CHECK(ac->rho_a >= q - 2 * eps8 * rho_g);
            CHECK(ac->rho_b >= (Rational(1) - eps * eps) * rho_g);
            CHECK(hall_ratio(induced(g, ac->a)).value == ac->rho_a);
            CHECK(hall_ratio(induced(g, ac->b)).value == ac->rho_b);
        } else if (const auto* cp = std::get_if<CompletePairCert>(&*r.certificate)) {
            CHECK(pair_relation(g, cp->x, cp->y) == PairRelation::Complete);
            CHECK(cp->rho_x >= eps8 * rho_g);
            CHECK(cp->rho_y >= p);
        } else {
            const auto& cb = std::get<CompleteBlockadeCert>(*r.certificate);
            long k = long(cb.blockade.blocks.size());
            CHECK(Rational(k) >= 1 / eps);
            validate_blockade(g, cb.blockade);
            for (const auto& rr : cb.per_block_rho)
                CHECK(rr * bigint_pow(BigInt(k), 8) >= rho_g);
        }
        // every trace snapshot was validated during the run; spot-check the
        // validator rejects a corrupted snapshot
        if (!r.trace.snapshots.empty()) {
            PartitionSnapshot bad = r.trace.snapshots.front();
            bad.e = bad.a;  // overlap
            CHECK_THROWS_AS(validate_partition(g, bad, p, q, eps, rho_g), InvariantViolation);
        }
    }
    CHECK(ran >= 10);
    // the engine also runs on the Petersen complement corpus member
    Graph pc = complement(oracle::petersen());
    Rational eps(1, 4);
    Rational q = (Rational(1) - eps * eps) * Rational(5);
    AntiDecomposeResult r = anti_decompose(pc, eps, Rational(1), q);
    CHECK(r.certificate.has_value());
}

TEST_CASE("trichotomy falls back to the anticomplete shape on edgeless input") {
    Graph e4 = oracle::edgeless(4);
    TrichotomyResult tr = trichotomy_search(e4);
    CHECK(!tr.complete_pair.found);  // no edges, no complete pair
    CHECK(!tr.blockade.found);       // omega = 1
    REQUIRE(tr.chosen.has_value());
    const auto* ac = std::get_if<AnticompletePairCert>(&*tr.chosen);
    REQUIRE(ac != nullptr);
    CHECK(validate_certificate(e4, *tr.chosen, tr.rho_g, Rational(9)).all_pass);
}

TEST_CASE("trichotomy blockade metric respects the 1/eps floor") {
    Graph k4 = oracle::complete(4);
    TrichotomyResult loose = trichotomy_search(k4, Rational(1, 2));
    REQUIRE(loose.blockade.found);
    CHECK(*loose.blockade.k == 4);
    // eps = 1/5 demands k >= 5 > omega, so no blockade qualifies
    TrichotomyResult tight = trichotomy_search(k4, Rational(1, 5));
    CHECK(!tight.blockade.found);
    CHECK(tight.chosen.has_value());  // the complete pair shape still exists
}

TEST_CASE("validate_partition accepts a hand-built partition and names violations") {
    // A = {0,1}, D = {2}, B1 = {3,4}, E = {5}; D separates the three parts
    Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {3, 4}});
    Rational rho_g = hall_ratio(g).value;
    Rational p(3, 2), eps(1, 2);
    Rational q = p;  // rho(A) = 2 >= max(p, q - ...) holds
    PartitionSnapshot snap;
    snap.a = oracle::set_of(g, {0, 1});
    snap.d = oracle::set_of(g, {2});
    snap.blocks = {oracle::set_of(g, {3, 4})};
    snap.e = oracle::set_of(g, {5});
    snap.attach = oracle::set_of(g, {2});
    validate_partition(g, snap, p, q, eps, rho_g);  // must not throw

    auto expect_reject = [&](PartitionSnapshot bad, const char* what) {
        INFO(what);
        CHECK_THROWS_AS(validate_partition(g, bad, p, q, eps, rho_g), InvariantViolation);
    };
    {
        PartitionSnapshot bad = snap;  // E overlaps A
        bad.e = oracle::set_of(g, {0, 5});
        expect_reject(bad, "overlap");
    }
    {
        PartitionSnapshot bad = snap;  // vertex 5 uncovered
        bad.e = oracle::set_of(g, {});
        expect_reject(bad, "cover");
    }
    {
        PartitionSnapshot bad = snap;  // {1,3} is not connected in g
        bad.a = oracle::set_of(g, {1});
        bad.blocks = {oracle::set_of(g, {3})};
        bad.e = oracle::set_of(g, {0, 4, 5});
        expect_reject(bad, "separation: 0 links 1 and 3 through no cutset");
    }
    {
        PartitionSnapshot bad = snap;  // block with rho below p
        bad.blocks = {oracle::set_of(g, {3}), oracle::set_of(g, {4})};
        expect_reject(bad, "block rho");
    }
    {
        PartitionSnapshot bad = snap;  // rho(E) >= p
        bad.e = oracle::set_of(g, {4, 5});
        bad.blocks = {oracle::set_of(g, {3})};
        expect_reject(bad, "E rho");
    }
    {
        PartitionSnapshot bad = snap;  // attach set wrong
        bad.attach = oracle::set_of(g, {});
        expect_reject(bad, "attach");
    }
    {
        // D vertex without a block neighbor, on a path with two cut vertices
        Graph h = Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
        PartitionSnapshot bad;
        bad.a = oracle::set_of(h, {0, 1});
        bad.d = oracle::set_of(h, {2, 3});  // vertex 2 sees only A and D
        bad.blocks = {oracle::set_of(h, {4, 5})};
        bad.e = VertexSet(6);
        bad.attach = oracle::set_of(h, {2});
        CHECK_THROWS_AS(
            validate_partition(h, bad, p, q, eps, hall_ratio(h).value),
            InvariantViolation);
    }
}

TEST_CASE("trichotomy across the exhaustive n <= 5 connected corpus") {
    P5FreeStream stream(5);
    long checked = 0;
    while (auto g = stream.next()) {
        if (g->size() < 2 || !is_connected(*g) || omega(*g) < 2) continue;
        TrichotomyResult tr = trichotomy_search(*g);
        REQUIRE(tr.chosen.has_value());
        Verdict v = validate_certificate(*g, *tr.chosen, tr.rho_g, Rational(9));
        if (!v.all_pass) {
            for (const auto& c : v.checks)
                if (!c.pass) MESSAGE(c.inequality, ": ", rational_str(c.lhs), " vs ",
                                     rational_str(c.rhs));
        }
        REQUIRE(v.all_pass);
        ++checked;
    }
    CHECK(checked > 300);
}
