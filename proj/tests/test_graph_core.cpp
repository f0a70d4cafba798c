#include <doctest.h>

#include "oracles.hpp"
#include "p5lab/errors.hpp"
#include "p5lab/generators.hpp"
#include "p5lab/graph6.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/structure.hpp"

using namespace p5lab;

TEST_CASE("graph6 decoding") {
    CHECK(from_graph6("D??") == oracle::edgeless(5));
    CHECK(from_graph6("@") == oracle::edgeless(1));
    CHECK(from_graph6("?") == oracle::edgeless(0));
    // C5 hand-encodes to Dhc: column-order bits 1010011001 padded to 12
    CHECK(oracle::graph6_hand(oracle::cycle(5)) == "Dhc");
    CHECK(from_graph6("Dhc") == oracle::cycle(5));
    CHECK(from_graph6(">>graph6<<Dhc") == oracle::cycle(5));
    CHECK(from_graph6("Dhc\n") == oracle::cycle(5));
}

TEST_CASE("graph6 encoding") {
    CHECK(to_graph6(oracle::complete(1)) == "@");
    CHECK(to_graph6(oracle::edgeless(5)) == "D??");
    CHECK(to_graph6(oracle::cycle(5)) == "Dhc");
    CHECK(to_graph6(oracle::petersen()) == oracle::graph6_hand(oracle::petersen()));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("D?"), ParseError);       // truncated payload
    CHECK_THROWS_AS(from_graph6("D???"), ParseError);     // trailing garbage
    CHECK_THROWS_AS(from_graph6("D?\x1f"), ParseError);   // invalid character
    CHECK_THROWS_AS(from_graph6("D?~"), ParseError);      // nonzero padding? (~ = 126 valid char but bits)
    CHECK_THROWS_AS(from_graph6("~??"), CapabilityError);  // long form
    CHECK_THROWS_AS(to_graph6(Graph(63)), CapabilityError);
    try {
        from_graph6("Dh\x20");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.byte_offset == 2);
    }
}

TEST_CASE("graph6 round-trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_gnp(1 + int(seed % 20), Rational(1, 3), seed);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("complement") {
    CHECK(complement(oracle::complete(3)) == oracle::edgeless(3));
    Graph c5 = oracle::cycle(5);
    CHECK(complement(complement(c5)) == c5);
    // self-complementary: same edge count and isomorphic
    CHECK(complement(c5).edge_count() == 5);
    CHECK(oracle::isomorphic_brute(complement(c5), c5));
}

TEST_CASE("induced subgraphs") {
    Graph c5 = oracle::cycle(5);
    CHECK(induced(c5, c5.full_set()) == c5);
    CHECK(induced(c5, oracle::set_of(c5, {0, 1, 2})) == oracle::path(3));
    Graph p5 = oracle::path(5);
    CHECK(induced(p5, oracle::set_of(p5, {0, 2, 4})) == oracle::edgeless(3));
}

TEST_CASE("blow-up") {
    Graph k2 = oracle::complete(2);
    Graph b = blow_up(k2, {2, 3});
    CHECK(b.size() == 5);
    CHECK(alpha(b) == 3);
    CHECK(omega(b) == 2);
    // weight-1 blow-up is the graph itself under identity labels
    Graph c5 = oracle::cycle(5);
    CHECK(blow_up(c5, {1, 1, 1, 1, 1}) == c5);
    // C5 blown up at one vertex stays P5-free with alpha 3
    Graph j = blow_up(c5, {2, 1, 1, 1, 1});
    CHECK(j.size() == 6);
    CHECK(oracle::alpha_brute(j) == 3);
    CHECK(oracle::p5_free_brute(j));
    CHECK(is_p5_free(j));
    // zero total weight gives the null graph
    CHECK(blow_up(k2, {0, 0}).size() == 0);
    CHECK_THROWS_AS(blow_up(k2, {1}), ArgumentError);
    CHECK_THROWS_AS(blow_up(k2, {100000, 100000}), CapabilityError);
}

TEST_CASE("blow-up size and alpha against the weighted formula") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = rejection_p5_free(6, Rational(1, 4), seed, 1000);
        Rng rng(seed, 99);
        WeightFunction f(g.size());
        long total = 0;
        for (auto& w : f) {
            w = long(rng.next_below(3));
            total += w;
        }
        Graph j = blow_up(g, f);
        CHECK(j.size() == total);
        if (total > 0) CHECK(alpha(j) == oracle::weighted_alpha_brute(g, f));
        CHECK(is_p5_free(j));  // blow-ups preserve P5-freeness
    }
}

TEST_CASE("union and join") {
    CHECK(disjoint_union(oracle::complete(1), oracle::complete(1)) == oracle::edgeless(2));
    CHECK(oracle::isomorphic_brute(join(oracle::complete(1), oracle::edgeless(2)),
                                   oracle::path(3)));
    Graph jj = join(oracle::cycle(5), oracle::cycle(5));
    CHECK(oracle::p5_free_brute(jj));
    CHECK(is_p5_free(jj));
}

TEST_CASE("neighborhood, components, degrees") {
    Graph c5 = oracle::cycle(5);
    CHECK(neighborhood(c5, 0) == oracle::set_of(c5, {1, 4}));
    Graph u = disjoint_union(oracle::complete(2), oracle::complete(3));
    auto comps = components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == oracle::set_of(u, {0, 1}));
    CHECK(comps[1] == oracle::set_of(u, {2, 3, 4}));
    CHECK(!is_connected(u));
    CHECK(is_connected(c5));
    CHECK(oracle::path(5).max_degree() == 2);
    CHECK_THROWS_AS(neighborhood(c5, 7), ArgumentError);
}

TEST_CASE("pair relations") {
    Graph c5 = oracle::cycle(5);
    CHECK(pair_relation(c5, oracle::set_of(c5, {0}), oracle::set_of(c5, {1})) ==
          PairRelation::Complete);
    CHECK(pair_relation(c5, oracle::set_of(c5, {0}), oracle::set_of(c5, {2, 3})) ==
          PairRelation::Anticomplete);
    CHECK(pair_relation(c5, oracle::set_of(c5, {0}), oracle::set_of(c5, {1, 2})) ==
          PairRelation::Mixed);
    CHECK_THROWS_AS(pair_relation(c5, oracle::set_of(c5, {0}), oracle::set_of(c5, {0, 1})),
                    ArgumentError);
    CHECK_THROWS_AS(pair_relation(c5, oracle::set_of(c5, {}), oracle::set_of(c5, {1})),
                    ArgumentError);
}

TEST_CASE("sparsity classes") {
    CHECK(sparsity_class(oracle::edgeless(4), Rational(1, 2)) == SparsityClass::Sparse);
    CHECK(sparsity_class(oracle::complete(4), Rational(1, 2)) == SparsityClass::Dense);
    // C5 at eps = 1/4: max degree 2 > 5/4 on both sides
    CHECK(sparsity_class(oracle::cycle(5), Rational(1, 4)) == SparsityClass::Neither);
    CHECK(sparsity_class(oracle::complete(1), Rational(1, 2)) == SparsityClass::Both);
    CHECK_THROWS_AS(sparsity_class(oracle::cycle(5), Rational(3, 4)), ArgumentError);
    CHECK_THROWS_AS(sparsity_class(oracle::cycle(5), Rational(0)), ArgumentError);
}

TEST_CASE("graph validation rejects malformed structures") {
    std::vector<Bitset> rows(2, Bitset(2));
    rows[0].set(1);  // asymmetric
    CHECK_THROWS_AS(Graph::from_rows(std::move(rows)), InvariantViolation);
    std::vector<Bitset> rows2(1, Bitset(1));
    rows2[0].set(0);  // loop
    CHECK_THROWS_AS(Graph::from_rows(std::move(rows2)), InvariantViolation);
}
