#pragma once

#include <cstdint>
#include <vector>

#include "p5lab/graph.hpp"

namespace p5lab {

// All maximal stable sets of g (= maximal cliques of the complement), as low
// words; requires n <= 64. Bron-Kerbosch with greedy pivoting, deterministic
// output order. max_count guards the LP column budget (CapabilityError).
std::vector<std::uint64_t> maximal_stable_sets(const Graph& g, std::size_t max_count = 200000);

std::vector<std::uint64_t> maximal_cliques(const Graph& g, std::size_t max_count = 200000);

}  // namespace p5lab
