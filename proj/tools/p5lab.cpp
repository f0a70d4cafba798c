// p5lab: exact desk-scale toolkit for the structure of P5-free graphs.
// Subcommands: gen, invariants, verify, estimate-d, decompose, blowup.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "p5lab/decomposition.hpp"
#include "p5lab/errors.hpp"
#include "p5lab/generators.hpp"
#include "p5lab/graph6.hpp"
#include "p5lab/invariants.hpp"
#include "p5lab/report.hpp"
#include "p5lab/structure.hpp"
#include "p5lab/suites.hpp"

using namespace p5lab;

namespace {

constexpr int kExitSuiteFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitCapability = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("P5LAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw ArgumentError("cannot open output file: " + path);
    return file;
}

// ---------------------------------------------------------------------------

struct GenOpts {
    std::string kind;
    int n = 5;
    std::string p = "1/2";
    std::uint64_t seed = default_seed();
    int count = 1;
    int max_tries = 1000;
    std::string out;
    std::string base_g6;
    int size_cap = 200;
};

int cmd_gen(const GenOpts& o) {
    std::ofstream file;
    std::ostream& os = open_out(file, o.out);
    auto emit = [&](const Graph& g) { os << to_graph6(g) << "\n"; };
    if (o.kind == "p5free") {  // exhaustive filtered stream, not a GenSpec kind
        P5FreeStream s(o.n);
        while (auto g = s.next()) emit(*g);
        return 0;
    }
    GenSpec spec;
    spec.kind = genspec_kind_from_name(o.kind);
    spec.n = o.n;
    spec.p = parse_rational(o.p);
    spec.seed = o.seed;
    spec.count = o.count;
    spec.max_tries = o.max_tries;
    spec.size_cap = o.size_cap;
    spec.base_graph6 = o.base_g6;
    spec.check();
    if (spec.kind == GenKind::AllGraphs) {
        AllGraphsStream s(spec.n);
        while (auto g = s.next()) emit(*g);
        return 0;
    }
    for (int i = 0; i < spec.count; ++i) emit(generate_instance(spec, i));
    return 0;
}

// ---------------------------------------------------------------------------

struct InvariantsOpts {
    std::string in, out, csv;
    int hall_cap = kHallRatioDefaultCap;
    int chi_star_cap = 24;
    int jobs = default_jobs();
};

int cmd_invariants(const InvariantsOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto lines = read_graph6_lines(o.in);
    InvariantCaps caps{o.hall_cap, o.chi_star_cap};
    std::vector<Json> recs(lines.size());
    parallel_for_ordered(long(lines.size()), o.jobs, [&](long long i) {
        const auto& [lineno, text] = lines[std::size_t(i)];
        try {
            Graph g = from_graph6(text);
            recs[std::size_t(i)] = instance_invariants_json(lineno, to_graph6(g), g, caps);
        } catch (const ArgumentError& e) {
            throw ArgumentError("line " + std::to_string(lineno) + ": " + e.what());
        }
    });
    RunHeader h;
    h.caps = Json{{"hall_cap", o.hall_cap}, {"chi_star_cap", o.chi_star_cap}};
    h.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json report{{"header", run_header_json(h)}, {"instances", recs}};
    std::ofstream file;
    open_out(file, o.out) << report.dump(2) << "\n";
    if (!o.csv.empty()) {
        std::ofstream cf(o.csv);
        if (!cf) throw ArgumentError("cannot open csv file: " + o.csv);
        cf << invariants_csv_header() << "\n";
        for (const auto& r : recs) cf << instance_invariants_csv_row(r) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
    std::string suite;
    int n_max = 7;
    int random = 200;
    std::uint64_t seed = default_seed() ? default_seed() : 1;
    int jobs = default_jobs();
};

int cmd_verify(const VerifyOpts& o) {
    SuiteResult r;
    if (o.suite == "chain")
        r = suite_chain(std::min(o.n_max, kExhaustiveP5FreeCap), o.jobs);
    else if (o.suite == "trichotomy")
        r = suite_trichotomy(std::min(o.n_max, kExhaustiveP5FreeCap), o.jobs);
    else if (o.suite == "comb")
        r = suite_comb(o.random ? o.random : 500, o.seed);
    else if (o.suite == "blowup-equiv")
        r = suite_blowup_equiv(std::min(o.n_max, 6), std::min(o.n_max, 10), o.random, o.seed,
                               o.jobs);
    else if (o.suite == "phi")
        r = suite_phi(8);
    else if (o.suite == "induction-step")
        r = suite_induction_step(1000);
    else
        throw ArgumentError("unknown --suite '" + o.suite +
                            "' (chain|trichotomy|comb|blowup-equiv|phi|induction-step)");
    std::cout << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
              << r.instances << " instances, " << r.detail << ", " << r.seconds << "s)\n";
    for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
    return r.pass ? 0 : kExitSuiteFailure;
}

// ---------------------------------------------------------------------------

struct EstimateOpts {
    std::string in, out;
    int jobs = default_jobs();
};

int cmd_estimate_d(const EstimateOpts& o) {
    auto lines = read_graph6_lines(o.in);
    struct Row {
        bool skip = false;
        std::string why;
        std::optional<EmpiricalExponent> d;
        std::string g6;
    };
    std::vector<Row> rows(lines.size());
    parallel_for_ordered(long(lines.size()), o.jobs, [&](long long i) {
        const auto& [lineno, text] = lines[std::size_t(i)];
        Row& row = rows[std::size_t(i)];
        Graph g = from_graph6(text);
        row.g6 = to_graph6(g);
        if (!is_p5_free(g)) {
            row.skip = true;
            row.why = "not P5-free";
            return;
        }
        row.d = empirical_exponent(g);
    });
    double maxd = -1;
    std::string argmax;
    Json histogram = Json::object();
    long counted = 0, skipped = 0, trivial = 0;
    for (const auto& row : rows) {
        if (row.skip) {
            ++skipped;
            std::cerr << "warning: skipping " << row.g6 << " (" << row.why << ")\n";
            continue;
        }
        if (!row.d) {
            ++trivial;
            continue;
        }
        ++counted;
        if (row.d->value > maxd) {
            maxd = row.d->value;
            argmax = row.g6;
        }
        char bucket[32];
        std::snprintf(bucket, sizeof bucket, "[%.1f,%.1f)", std::floor(row.d->value * 10) / 10,
                      std::floor(row.d->value * 10) / 10 + 0.1);
        histogram[bucket] = histogram.value(bucket, 0) + 1;
    }
    Json j;
    j["instances"] = lines.size();
    j["skipped_non_p5_free"] = skipped;
    j["trivial"] = trivial;
    if (counted) {
        j["max_d_hat"] = maxd;
        j["argmax_graph6"] = argmax;
        j["histogram"] = histogram;
    } else {
        j["max_d_hat"] = nullptr;
        j["note"] = "no nontrivial instances";
    }
    std::ofstream file;
    open_out(file, o.out) << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------

struct DecomposeOpts {
    std::string in, out;
    std::string eps = "1/2";
    std::string d = "9";
    bool trace = false;
    int jobs = default_jobs();
};

int cmd_decompose(const DecomposeOpts& o) {
    auto lines = read_graph6_lines(o.in);
    Rational eps = parse_rational(o.eps), d = parse_rational(o.d);
    std::vector<Json> recs(lines.size());
    std::atomic<long> failures{0};
    parallel_for_ordered(long(lines.size()), o.jobs, [&](long long i) {
        const auto& [lineno, text] = lines[std::size_t(i)];
        Json rec;
        rec["id"] = lineno;
        Graph g = from_graph6(text);
        rec["graph6"] = to_graph6(g);
        rec["n"] = g.size();
        if (!is_p5_free(g)) {
            rec["skipped"] = "not P5-free";
            recs[std::size_t(i)] = rec;
            return;
        }
        if (!is_connected(g)) {
            rec["skipped"] = "disconnected";
            recs[std::size_t(i)] = rec;
            return;
        }
        if (g.size() < 2 || omega(g) < 2) {
            rec["skipped"] = "needs at least one edge";
            recs[std::size_t(i)] = rec;
            return;
        }
        if (g.size() > kTrichotomyCap) {
            rec["skipped"] = "n exceeds exhaustive cap " + std::to_string(kTrichotomyCap);
            recs[std::size_t(i)] = rec;
            return;
        }
        TrichotomyResult tr = trichotomy_search(g, eps, d);
        rec["rho"] = rational_json(tr.rho_g);
        if (!tr.chosen) {
            rec["FAILURE"] = tr.failure_summary;
            failures.fetch_add(1);
            recs[std::size_t(i)] = rec;
            return;
        }
        Json cert = certificate_json(*tr.chosen);
        cert["verdict"] = verdict_json(validate_certificate(g, *tr.chosen, tr.rho_g, d));
        rec["certificates"] = Json::array({cert});
        if (!cert["verdict"]["all_pass"].get<bool>()) failures.fetch_add(1);
        if (o.trace) {
            // decomposition trace via the anticomplete-pair engine when its
            // preconditions hold for the default parameterization
            Rational rho = tr.rho_g;
            Rational q = (Rational(1) - eps * eps) * rho;
            Rational p(1);
            if (p <= q && check_pq_sparse(g, p, q)) {
                AntiDecomposeResult ar = anti_decompose(g, eps, p, q);
                Json tj;
                tj["outcome"] = ar.outcome;
                if (ar.certificate) tj["certificate"] = certificate_json(*ar.certificate);
                tj["events"] = ar.trace.events;
                Json snaps = Json::array();
                for (const auto& s : ar.trace.snapshots) {
                    Json sj;
                    sj["a"] = vertex_set_json(s.a);
                    sj["d"] = vertex_set_json(s.d);
                    sj["e"] = vertex_set_json(s.e);
                    Json blocks = Json::array();
                    for (const auto& blk : s.blocks) blocks.push_back(vertex_set_json(blk));
                    sj["blocks"] = blocks;
                    sj["attach"] = vertex_set_json(s.attach);
                    sj["note"] = s.note;
                    snaps.push_back(sj);
                }
                tj["snapshots"] = snaps;
                rec["trace"] = tj;
            } else {
                rec["trace"] = Json{{"skipped", "not (p,q)-sparse for p=1, q=(1-eps^2) rho"}};
            }
        }
        recs[std::size_t(i)] = rec;
    });
    Json report{{"header", run_header_json(RunHeader{"decompose", 0, Json::object(), 0})},
                {"instances", recs}};
    std::ofstream file;
    open_out(file, o.out) << report.dump(2) << "\n";
    if (failures.load()) {
        std::cerr << "FAILURE: " << failures.load()
                  << " instance(s) without a passing certificate (would contradict the theory)\n";
        return kExitSuiteFailure;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct BlowupOpts {
    std::string in, out;
    bool dual = false;
    std::string weights;
    long cap = 100000;
};

int cmd_blowup(const BlowupOpts& o) {
    auto lines = read_graph6_lines(o.in);
    std::ofstream file;
    std::ostream& os = open_out(file, o.out);
    for (const auto& [lineno, text] : lines) {
        Graph g = from_graph6(text);
        WeightFunction f;
        if (o.dual) {
            f = dual_weights(g).f;
        } else if (!o.weights.empty()) {
            std::string cur;
            for (char c : o.weights + ",") {
                if (c == ',') {
                    if (!cur.empty()) f.push_back(std::stol(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (int(f.size()) != g.size())
                throw ArgumentError("line " + std::to_string(lineno) + ": weight count " +
                                    std::to_string(f.size()) + " != n = " +
                                    std::to_string(g.size()));
        } else {
            throw ArgumentError("blowup needs --dual or --weights");
        }
        os << to_graph6(blow_up(g, f, o.cap)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p5lab: exact toolkit for P5-free graph structure"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GenOpts gen;
    auto* cg = app.add_subcommand("gen", "generate graph6 corpora");
    cg->add_option("--kind", gen.kind, "all|p5free|gnp|rejp5|cograph|tricomp|blowup")->required();
    cg->add_option("--n", gen.n, "vertex count");
    cg->add_option("--p", gen.p, "edge probability a/b (gnp, rejp5)");
    cg->add_option("--seed", gen.seed, "random seed (default env P5LAB_SEED)");
    cg->add_option("--count", gen.count, "number of instances");
    cg->add_option("--max-tries", gen.max_tries, "rejection cap (rejp5)");
    cg->add_option("--out", gen.out, "output file (default stdout)");
    cg->add_option("--base", gen.base_g6, "base graph6 line (blowup)");
    cg->add_option("--size-cap", gen.size_cap, "vertex cap (blowup)");

    InvariantsOpts inv;
    auto* ci = app.add_subcommand("invariants", "exact invariants per instance");
    ci->add_option("--in", inv.in, "graph6 input file")->required();
    ci->add_option("--out", inv.out, "JSON output (default stdout)");
    ci->add_option("--csv", inv.csv, "CSV output file");
    ci->add_option("--hall-cap", inv.hall_cap, "hall ratio size cap");
    ci->add_option("--chi-star-cap", inv.chi_star_cap, "chi_star size cap");
    ci->add_option("--jobs", inv.jobs, "worker threads");

    VerifyOpts ver;
    auto* cv = app.add_subcommand("verify", "run a verification suite");
    cv->add_option("--suite", ver.suite, "chain|trichotomy|comb|blowup-equiv|phi|induction-step")
        ->required();
    cv->add_option("--n-max", ver.n_max, "corpus size bound");
    cv->add_option("--random", ver.random, "random instance count");
    cv->add_option("--seed", ver.seed, "random seed");
    cv->add_option("--jobs", ver.jobs, "worker threads");

    EstimateOpts est;
    auto* ce = app.add_subcommand("estimate-d", "empirical exponent summary");
    ce->add_option("--in", est.in, "graph6 input file")->required();
    ce->add_option("--out", est.out, "JSON output (default stdout)");
    ce->add_option("--jobs", est.jobs, "worker threads");

    DecomposeOpts dec;
    auto* cd = app.add_subcommand("decompose", "certificates and traces");
    cd->add_option("--in", dec.in, "graph6 input file")->required();
    cd->add_option("--out", dec.out, "JSON output (default stdout)");
    cd->add_option("--eps", dec.eps, "epsilon as a/b");
    cd->add_option("--d", dec.d, "blockade exponent (rational)");
    cd->add_flag("--trace", dec.trace, "emit decomposition traces");
    cd->add_option("--jobs", dec.jobs, "worker threads");

    BlowupOpts blo;
    auto* cb = app.add_subcommand("blowup", "blow up each input graph");
    cb->add_option("--in", blo.in, "graph6 input file")->required();
    cb->add_option("--out", blo.out, "graph6 output (default stdout)");
    cb->add_flag("--dual", blo.dual, "use LP dual weights");
    cb->add_option("--weights", blo.weights, "comma-separated integer weights");
    cb->add_option("--cap", blo.cap, "total size cap");

    try {
        app.parse(argc, argv);
        if (cg->parsed()) return cmd_gen(gen);
        if (ci->parsed()) return cmd_invariants(inv);
        if (cv->parsed()) return cmd_verify(ver);
        if (ce->parsed()) return cmd_estimate_d(est);
        if (cd->parsed()) return cmd_decompose(dec);
        if (cb->parsed()) return cmd_blowup(blo);
        return kExitArgument;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitArgument : 0;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitSuiteFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSuiteFailure;
    }
}
