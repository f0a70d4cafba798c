#pragma once

#include <cstdint>
#include <vector>

#include "p5lab/rational.hpp"

namespace p5lab {

// Exact rational LP core for the stable-set packing problem
//
//     maximize sum(y_v)  subject to  sum_{v in S} y_v <= 1 for each row set S,
//                                    y >= 0,
//
// solved by primal simplex with Bland's anti-cycling rule over a fraction-free
// integer tableau (all intermediate values are quotients of integer minors, so
// arithmetic is bit-exact). A 64-bit tableau is tried first and the solver
// transparently restarts on arbitrary-precision integers if any product would
// overflow.
struct PackingLpResult {
    Rational value;
    std::vector<Rational> y;       // one per variable (vertex)
    std::vector<Rational> x;       // one per row (stable set): covering weights
};

// rows[i] = membership mask of variable indices (n <= 64 variables).
PackingLpResult solve_stable_set_packing(int n_vars, const std::vector<std::uint64_t>& rows);

}  // namespace p5lab
