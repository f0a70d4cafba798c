#include "p5lab/report.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "p5lab/errors.hpp"

namespace p5lab {

Json rational_json(const Rational& q) { return rational_str(q); }

Json vertex_set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v = s.lowest(); v >= 0; v = s.next(v)) arr.push_back(v);
    return arr;
}

Json certificate_json(const Certificate& c) {
    Json j;
    j["kind"] = certificate_kind_name(c);
    if (const auto* ac = std::get_if<AnticompletePairCert>(&c)) {
        j["a"] = vertex_set_json(ac->a);
        j["b"] = vertex_set_json(ac->b);
        j["rho_a"] = rational_json(ac->rho_a);
        j["rho_b"] = rational_json(ac->rho_b);
    } else if (const auto* cp = std::get_if<CompletePairCert>(&c)) {
        j["x"] = vertex_set_json(cp->x);
        j["y"] = vertex_set_json(cp->y);
        j["rho_x"] = rational_json(cp->rho_x);
        j["rho_y"] = rational_json(cp->rho_y);
        j["y_param"] = rational_json(cp->y_param);
    } else {
        const auto& cb = std::get<CompleteBlockadeCert>(c);
        Json blocks = Json::array();
        for (const auto& blk : cb.blockade.blocks) blocks.push_back(vertex_set_json(blk));
        j["blocks"] = blocks;
        Json rhos = Json::array();
        for (const auto& r : cb.per_block_rho) rhos.push_back(rational_json(r));
        j["per_block_rho"] = rhos;
        j["k"] = cb.blockade.blocks.size();
    }
    return j;
}

Json verdict_json(const Verdict& v) {
    Json arr = Json::array();
    for (const auto& c : v.checks)
        arr.push_back(Json{{"inequality", c.inequality},
                           {"lhs", rational_json(c.lhs)},
                           {"rhs", rational_json(c.rhs)},
                           {"pass", c.pass}});
    return Json{{"all_pass", v.all_pass}, {"checks", arr}};
}

Json run_header_json(const RunHeader& h) {
    return Json{{"tool", "p5lab"},
                {"version", kToolVersion},
                {"suite", h.suite.empty() ? Json() : Json(h.suite)},
                {"seed", h.seed},
                {"caps", h.caps},
                {"wall_time_s", h.wall_time_s}};
}

Json instance_invariants_json(long id, const std::string& g6, const Graph& g,
                              const InvariantCaps& caps) {
    Json j;
    j["id"] = id;
    j["graph6"] = g6;
    j["n"] = g.size();
    long a = alpha(g), w = omega(g);
    int c = chi(g);
    j["alpha"] = a;
    j["omega"] = w;
    j["chi"] = c;
    std::optional<Rational> cs, rho;
    if (g.size() <= caps.chi_star_cap) {
        cs = chi_star(g).value;
        j["chi_star"] = rational_json(*cs);
    } else {
        j["chi_star"] = nullptr;
        j["chi_star_reason"] = "n exceeds chi_star cap " + std::to_string(caps.chi_star_cap);
    }
    if (g.size() <= caps.hall_cap) {
        rho = hall_ratio(g, caps.hall_cap).value;
        j["hall_ratio"] = rational_json(*rho);
    } else {
        j["hall_ratio"] = nullptr;
        j["hall_ratio_reason"] = "n exceeds hall ratio cap " + std::to_string(caps.hall_cap);
    }
    // omega <= rho <= chi* <= chi must hold for every graph; a violation here
    // is a bug worth aborting on
    if (rho && !(Rational(w) <= *rho))
        throw InvariantViolation("chain violated (omega > hall_ratio) at " + g6);
    if (rho && cs && !(*rho <= *cs))
        throw InvariantViolation("chain violated (hall_ratio > chi_star) at " + g6);
    if (cs && !(*cs <= Rational(c)))
        throw InvariantViolation("chain violated (chi_star > chi) at " + g6);
    if (auto d = empirical_exponent_from(g.size(), a, w)) {
        j["d_hat"] = d->value;
        j["d_hat_decimal"] = d->decimal;
    } else {
        j["d_hat"] = nullptr;
    }
    j["certificates"] = Json::array();
    j["verdicts"] = Json::array();
    return j;
}

std::string invariants_csv_header() {
    return "id,graph6,n,alpha,omega,chi,chi_star,hall_ratio,d_hat";
}

std::string instance_invariants_csv_row(const Json& rec) {
    std::ostringstream os;
    auto field = [&](const char* k) -> std::string {
        if (!rec.contains(k) || rec[k].is_null()) return "";
        if (rec[k].is_string()) return rec[k].get<std::string>();
        return rec[k].dump();
    };
    os << field("id") << ',' << field("graph6") << ',' << field("n") << ',' << field("alpha")
       << ',' << field("omega") << ',' << field("chi") << ',' << field("chi_star") << ','
       << field("hall_ratio") << ',' << field("d_hat");
    return os.str();
}

void parallel_for_ordered(long long count, int jobs,
                          const std::function<void(long long)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<std::pair<long, std::string>> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open input file: " + path);
    std::vector<std::pair<long, std::string>> out;
    std::string line;
    long no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.emplace_back(no, line);
    }
    return out;
}

}  // namespace p5lab
