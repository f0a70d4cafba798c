#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p5lab/graph.hpp"

namespace p5lab {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long instances = 0;
    std::vector<std::string> failures;  // capped; offending graph6 lines or messages
    std::string detail;
    double seconds = 0;

    void fail(const std::string& msg) {
        pass = false;
        if (failures.size() < 20) failures.push_back(msg);
    }
};

// Corpus-wide verification suites. All exhaustive corpora are the labelled
// P5-free graphs up to the given size; random corpora are seeded and
// deterministic.

// omega <= rho <= chi_star <= chi, exact, over the exhaustive corpus.
SuiteResult suite_chain(int n_max, int jobs);

// Every connected P5-free graph with omega >= 2 yields a certificate that the
// validator passes (complete pairs at their recorded y, blockades at d = 9).
SuiteResult suite_trichotomy(int n_max, int jobs);

// Comb procedure on seeded precondition-satisfying instances: SmallB only
// when |B|^2 < 400*gamma*delta; teeth always validate.
SuiteResult suite_comb(int count, std::uint64_t seed);

// psi(blow_up(G, dual_weights(G).f)) == chi_star(G), and the blow-up stays
// P5-free; exhaustive n <= 6 plus seeded random P5-free graphs.
SuiteResult suite_blowup_equiv(int exhaustive_n_max, int random_n_max, int random_count,
                               std::uint64_t seed, int jobs);

// phi multiplicativity and the phi lower bound for 0 <= r <= s <= s_max.
SuiteResult suite_phi(int s_max);

// 1 - 3y >= (1-y)^9 on a uniform rational grid in (0, 1/4].
SuiteResult suite_induction_step(int points);

// Named exact values checked against brute-force oracles.
SuiteResult suite_named_values();

// max d_hat <= 2 over the exhaustive corpus (exact integer comparison), and
// the triangle-free-complement family reaches d_hat >= 1.1.
SuiteResult suite_exponent(int n_max, int tightness_instances, int tightness_n,
                           std::uint64_t seed, int jobs);

// Minimal-cutset postconditions and zero MixedOnBoth attachments over the
// exhaustive corpus.
SuiteResult suite_structural(int n_max, int jobs);

// graph6 round-trips bit-exactly over all labelled graphs up to n_max, and
// fixed-seed generator outputs are identical across two runs and match the
// frozen golden strings.
SuiteResult suite_determinism(int n_max, int jobs);

// Number of labelled P5-free graphs on n vertices (n <= 7), for golden counts.
long long count_p5_free(int n, int jobs);

}  // namespace p5lab
