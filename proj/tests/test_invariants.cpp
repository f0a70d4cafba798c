#include <doctest.h>

#include <bit>
#include <cmath>

#include "oracles.hpp"
#include "p5lab/errors.hpp"
#include "p5lab/generators.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/stable_sets.hpp"
#include "p5lab/structure.hpp"

using namespace p5lab;

TEST_CASE("alpha and omega") {
    Graph c5 = oracle::cycle(5);
    CHECK(alpha(c5) == 2);
    CHECK(omega(c5) == 2);
    CHECK(alpha(oracle::complete(6)) == 1);
    CHECK(omega(oracle::complete(6)) == 6);
    CHECK(alpha(Graph(0)) == 0);
    CHECK(omega(Graph(0)) == 0);
    Graph pc = complement(oracle::petersen());
    CHECK(alpha(pc) == 2);
    CHECK(omega(pc) == 4);
}

TEST_CASE("alpha agrees with brute force on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_gnp(1 + int(seed % 9), Rational(1, 2), seed);
        CHECK(alpha(g) == oracle::alpha_brute(g));
        CHECK(omega(g) == oracle::omega_brute(g));
        CHECK(alpha(g) == omega(complement(g)));
    }
}

TEST_CASE("chi") {
    CHECK(chi(oracle::cycle(5)) == 3);
    CHECK(chi(oracle::edgeless(4)) == 1);
    CHECK(chi(oracle::complete(4)) == 4);
    CHECK(chi(Graph(0)) == 0);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_gnp(1 + int(seed % 8), Rational(1, 2), seed ^ 0xc);
        CHECK(chi(g) == oracle::chi_brute(g));
    }
}

TEST_CASE("psi") {
    CHECK(psi(Graph(0)) == Rational(0));
    CHECK(psi(oracle::complete(4)) == Rational(4));
    CHECK(psi(oracle::cycle(5)) == Rational(5, 2));
}

TEST_CASE("chi_star named values") {
    CHECK(chi_star(oracle::complete(5)).value == Rational(5));
    CHECK(chi_star(oracle::cycle(5)).value == Rational(5, 2));
    CHECK(chi_star(oracle::cycle(7)).value == Rational(7, 3));
    CHECK(chi_star(Graph(0)).value == Rational(0));
    CHECK(chi_star(oracle::edgeless(3)).value == Rational(1));
    // Kneser(5,2) is the Petersen graph: chi* = 5/2
    CHECK(chi_star(oracle::petersen()).value == Rational(5, 2));
    // complement of an odd cycle: chi* = n/2
    CHECK(chi_star(complement(oracle::cycle(7))).value == Rational(7, 2));
    CHECK(chi_star(complement(oracle::cycle(9))).value == Rational(9, 2));
}

TEST_CASE("chi_star sits in the chain on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnp(1 + int(seed % 9), Rational(2, 5), seed ^ 0x5);
        Rational cs = chi_star(g).value;
        Rational rho = hall_ratio(g).value;
        CHECK(Rational(omega(g)) <= rho);
        CHECK(rho <= cs);
        CHECK(cs <= Rational(chi(g)));
    }
}

TEST_CASE("chi_star of the Mycielskian of C5") {
    // Mycielski construction: chi_f(M(G)) = chi_f(G) + 1/chi_f(G), so the
    // 11-vertex Mycielskian of C5 has chi* = 5/2 + 2/5 = 29/10.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        e.emplace_back(i, j);          // original C5
        e.emplace_back(5 + i, j);      // shadow vertices copy adjacencies
        e.emplace_back(5 + j, i);
        e.emplace_back(5 + i, 10);     // apex
    }
    Graph m = Graph::from_edges(11, e);
    CHECK(chi_star(m).value == Rational(29, 10));
    CHECK(chi(m) == 4);
    CHECK(omega(m) == 2);
}

TEST_CASE("chi_star float cross-check") {
    // test-only float route: the exact optimum evaluated in doubles must be
    // close to a float summation of the weights
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_gnp(7, Rational(1, 2), seed ^ 0xf10a7);
        ChiStarResult r = chi_star(g);
        double total = 0;
        for (const auto& [mask, w] : r.weights) total += w.get_d();
        CHECK(std::abs(total - r.value.get_d()) < 1e-9);
    }
}

TEST_CASE("hall ratio") {
    auto [v4, w4] = hall_ratio(oracle::complete(4));
    CHECK(v4 == Rational(4));
    CHECK(w4.count() == 4);
    auto [v5, w5] = hall_ratio(oracle::cycle(5));
    CHECK(v5 == Rational(5, 2));
    CHECK(w5.count() == 5);
    Graph u = disjoint_union(oracle::cycle(5), oracle::complete(1));
    CHECK(hall_ratio(u).value == Rational(5, 2));
    CHECK(hall_ratio(Graph(0)).value == Rational(0));
    CHECK_THROWS_AS(hall_ratio(Graph(17)), CapabilityError);
    // singleton rule
    CHECK(hall_ratio(Graph(1)).value == Rational(1));
}

TEST_CASE("hall ratio agrees with brute force") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnp(1 + int(seed % 8), Rational(1, 2), seed ^ 0x4a11);
        CHECK(hall_ratio(g).value == oracle::hall_brute(g));
    }
}

TEST_CASE("psi below hall ratio; witness attains the maximum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnp(1 + int(seed % 9), Rational(1, 2), seed ^ 0xa11);
        auto [rho, witness] = hall_ratio(g);
        Rational ps = psi(g);
        CHECK(ps <= rho);
        CHECK(psi(induced(g, witness)) == rho);
        // equality holds exactly when no subset beats the whole graph
        CHECK((ps == rho) == (oracle::hall_brute(g) == ps));
        if (ps < rho) CHECK(psi(induced(g, witness)) > ps);
    }
}

TEST_CASE("rationals round-trip through their string form") {
    for (long num = -20; num <= 20; ++num)
        for (long den = 1; den <= 12; ++den) {
            Rational q(num, den);
            q.canonicalize();
            CHECK(parse_rational(rational_str(q)) == q);
        }
    CHECK(rational_str(Rational(5, 2)) == "5/2");
    CHECK(rational_str(Rational(3)) == "3/1");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_rational("abc"), ArgumentError);
}

TEST_CASE("hall ratio algebra on unions") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph a = random_gnp(4, Rational(1, 2), seed);
        Graph b = random_gnp(4, Rational(1, 2), seed ^ 0xbb);
        Graph u = disjoint_union(a, b);
        Rational ra = hall_ratio(a).value, rb = hall_ratio(b).value;
        Rational ru = hall_ratio(u).value;
        CHECK(ru == std::max(ra, rb));  // anticomplete parts: equality
        CHECK(ru <= ra + rb);
    }
}

TEST_CASE("dual weights") {
    // K1
    DualWitness w1 = dual_weights(oracle::complete(1));
    CHECK(w1.value == Rational(1));
    CHECK(w1.f == WeightFunction{1});
    CHECK(w1.s_star.count() == 1);
    // C5: uniform weights, value 5/2
    DualWitness w5 = dual_weights(oracle::cycle(5));
    CHECK(w5.value == Rational(5, 2));
    CHECK(w5.f == WeightFunction{1, 1, 1, 1, 1});
    CHECK(w5.s_star.count() == 2);
    // P4: some valid witness with ratio chi_star = 2
    Graph p4 = oracle::path(4);
    DualWitness w4 = dual_weights(p4);
    CHECK(w4.value == Rational(2));
    long total = 0, sstar = 0;
    for (int v = 0; v < 4; ++v) {
        total += w4.f[v];
        if (w4.s_star.test(v)) sstar += w4.f[v];
    }
    CHECK(Rational(total) == Rational(2) * sstar);
    CHECK_THROWS_AS(dual_weights(Graph(0)), ArgumentError);
}

TEST_CASE("dual witness inequality over all maximal stable sets") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = rejection_p5_free(1 + int(seed % 8), Rational(1, 3), seed, 10000);
        DualWitness dw = dual_weights(g);
        long fv = 0;
        for (int v = 0; v < g.size(); ++v) fv += dw.f[v];
        CHECK(fv > 0);
        bool tight = false;
        for (std::uint64_t s : maximal_stable_sets(g)) {
            long fs = 0;
            for (int v = 0; v < g.size(); ++v)
                if ((s >> v) & 1) fs += dw.f[v];
            CHECK(Rational(fv) >= dw.value * fs);
            if (Rational(fv) == dw.value * fs) tight = true;
        }
        CHECK(tight);
        // duality consistency: psi of the blow-up equals chi_star exactly
        Graph j = blow_up(g, dw.f);
        Rational pj(j.size(), alpha(j));
        pj.canonicalize();
        CHECK(pj == dw.value);
    }
}

TEST_CASE("empirical exponent") {
    CHECK(!empirical_exponent(oracle::edgeless(5)).has_value());   // omega = 1
    CHECK(!empirical_exponent(oracle::complete(1)).has_value());   // n = alpha
    auto dk4 = empirical_exponent(oracle::complete(4));
    REQUIRE(dk4.has_value());
    CHECK(dk4->value == doctest::Approx(1.0));
    auto d5 = empirical_exponent(oracle::cycle(5));
    REQUIRE(d5.has_value());
    CHECK(d5->n == 5);
    CHECK(d5->alpha == 2);
    CHECK(d5->omega == 2);
    CHECK(d5->value == doctest::Approx(1.3219281).epsilon(1e-6));
    CHECK(d5->decimal.substr(0, 6) == "1.3219");
    auto dp = empirical_exponent(complement(oracle::petersen()));
    REQUIRE(dp.has_value());
    CHECK(dp->value == doctest::Approx(1.1609640).epsilon(1e-6));
    // exact comparisons
    CHECK(exponent_at_most(5, 2, 2, Rational(2)));
    CHECK(!exponent_at_most(5, 2, 2, Rational(1)));
    CHECK(exponent_at_least(10, 2, 4, Rational(11, 10)));
    CHECK(!exponent_at_least(10, 2, 4, Rational(6, 5)));
}

TEST_CASE("maximal stable sets") {
    auto sets = maximal_stable_sets(oracle::cycle(5));
    CHECK(sets.size() == 5);  // the five nonadjacent pairs
    for (auto s : sets) CHECK(std::popcount(s) == 2);
    auto single = maximal_stable_sets(oracle::complete(4));
    CHECK(single.size() == 4);
    auto whole = maximal_stable_sets(oracle::edgeless(3));
    REQUIRE(whole.size() == 1);
    CHECK(std::popcount(whole[0]) == 3);
}

TEST_CASE("weighted alpha") {
    Graph c5 = oracle::cycle(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed, 7);
        WeightFunction f(5);
        for (auto& w : f) w = long(rng.next_below(5));
        CHECK(weighted_alpha(c5, f) == oracle::weighted_alpha_brute(c5, f));
    }
}

TEST_CASE("cancellation") {
    CancelToken tok;
    tok.cancel = true;
    Graph big = random_gnp(40, Rational(1, 2), 3);
    CHECK_THROWS_AS(alpha(big, &tok), OperationCancelled);
}
