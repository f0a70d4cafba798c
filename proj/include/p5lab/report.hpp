#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "p5lab/decomposition.hpp"
#include "p5lab/graph.hpp"
#include "p5lab/invariants.hpp"

namespace p5lab {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Rationals serialize as reduced "num/den" strings.
Json rational_json(const Rational& q);
Json vertex_set_json(const VertexSet& s);  // sorted integer array
Json certificate_json(const Certificate& c);
Json verdict_json(const Verdict& v);

struct RunHeader {
    std::string suite;
    std::uint64_t seed = 0;
    Json caps;
    double wall_time_s = 0;
};
Json run_header_json(const RunHeader& h);

struct InvariantCaps {
    int hall_cap = kHallRatioDefaultCap;
    int chi_star_cap = 24;
};

// Per-instance invariant record for cmd_invariants; fields above their caps
// are null with a reason.
Json instance_invariants_json(long id, const std::string& g6, const Graph& g,
                              const InvariantCaps& caps);

std::string instance_invariants_csv_row(const Json& rec);
std::string invariants_csv_header();

// Deterministic parallel map: applies fn to 0..count-1 on `jobs` workers and
// returns results in index order.
void parallel_for_ordered(long long count, int jobs,
                          const std::function<void(long long)>& fn);

// Reads one graph per line (graph6), returns (line_number, graph6) pairs;
// blank lines skipped.
std::vector<std::pair<long, std::string>> read_graph6_lines(const std::string& path);

}  // namespace p5lab
