#pragma once

namespace p5lab {

// Frozen fixed-seed generator outputs; recorded at first build, identical on
// every platform by construction of the counter-based generator.
inline constexpr const char* kGoldenGnp = "GA?`T_";        // gnp(8, 1/4, seed 42)
inline constexpr const char* kGoldenCograph = "I?~~v~}~w"; // cograph(10, seed 7)
inline constexpr const char* kGoldenTricomp = "KTntzQz|ekhL";  // tricomp(12, seed 3)
inline constexpr long kGoldenTricompAlpha = 2;
inline constexpr long kGoldenTricompOmega = 6;

// Labelled P5-free graph counts per vertex count.
inline constexpr long long kGoldenP5FreeCounts[8] = {1, 1, 2, 8, 64, 964, 24968, 1019492};

}  // namespace p5lab
