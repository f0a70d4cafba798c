#include "p5lab/stable_sets.hpp"

#include <bit>

#include "p5lab/errors.hpp"

namespace p5lab {

namespace {

struct BkState {
    const std::vector<std::uint64_t>& adj;
    std::vector<std::uint64_t>& out;
    std::size_t max_count;
};

// Bron-Kerbosch with a max-degree pivot; emits maximal cliques of `adj`.
void bk(BkState& st, std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
        if (st.out.size() >= st.max_count)
            throw CapabilityError("maximal stable set enumeration exceeded " +
                                  std::to_string(st.max_count) + " sets");
        st.out.push_back(r);
        return;
    }
    // pivot u in p|x maximizing |p & N(u)|
    std::uint64_t px = p | x;
    int best = -1, bestdeg = -1;
    for (std::uint64_t m = px; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(p & st.adj[v]);
        if (d > bestdeg) {
            bestdeg = d;
            best = v;
        }
    }
    std::uint64_t cand = p & ~st.adj[best];
    while (cand) {
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        cand &= cand - 1;
        bk(st, r | bit, p & st.adj[v], x & st.adj[v]);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<std::uint64_t> rows_of(const Graph& g) {
    std::vector<std::uint64_t> rows(g.size());
    for (int v = 0; v < g.size(); ++v) rows[v] = g.row_word(v);
    return rows;
}

}  // namespace

std::vector<std::uint64_t> maximal_cliques(const Graph& g, std::size_t max_count) {
    if (g.size() > 64) throw CapabilityError("maximal clique enumeration caps at n <= 64");
    if (g.size() == 0) return {};
    std::vector<std::uint64_t> out;
    auto rows = rows_of(g);
    BkState st{rows, out, max_count};
    std::uint64_t full = (g.size() == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << g.size()) - 1);
    bk(st, 0, full, 0);
    return out;
}

std::vector<std::uint64_t> maximal_stable_sets(const Graph& g, std::size_t max_count) {
    return maximal_cliques(complement(g), max_count);
}

}  // namespace p5lab
