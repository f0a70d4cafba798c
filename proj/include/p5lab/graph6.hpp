#pragma once

#include <string>
#include <string_view>

#include "p5lab/graph.hpp"

namespace p5lab {

// graph6 text format, short form only (n <= 62). One graph per line; the
// optional ">>graph6<<" header is accepted and stripped. Parsing is strict:
// wrong length, characters outside [63,126], nonzero padding bits, and
// trailing bytes are ParseErrors carrying the byte offset.
Graph from_graph6(std::string_view text);

// Canonical header-free encoding; round-trips with from_graph6.
std::string to_graph6(const Graph& g);

inline constexpr int kGraph6MaxVertices = 62;

}  // namespace p5lab
