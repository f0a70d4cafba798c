#include "p5lab/graph.hpp"

#include <algorithm>

#include "p5lab/errors.hpp"

namespace p5lab {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw ArgumentError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ArgumentError("edge endpoint out of range");
        if (u == v) throw ArgumentError("loop edge rejected");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    g.validate();
    return g;
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
    Graph g;
    g.n_ = int(rows.size());
    g.adj_ = std::move(rows);
    g.validate();
    return g;
}

Graph Graph::from_words(int n, const std::vector<std::uint64_t>& rows) {
    if (n > 64) throw ArgumentError("from_words supports n <= 64");
    std::vector<Bitset> b;
    b.reserve(n);
    for (int v = 0; v < n; ++v) b.push_back(Bitset::from_word(n, rows[v]));
    return from_rows(std::move(b));
}

long long Graph::edge_count() const {
    long long deg2 = 0;
    for (int v = 0; v < n_; ++v) deg2 += degree(v);
    return deg2 / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

void Graph::validate() const {
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].size_bits() != n_) throw InvariantViolation("adjacency row width mismatch");
        if (adj_[v].test(v)) throw InvariantViolation("loop at vertex " + std::to_string(v));
        for (int u = adj_[v].lowest(); u >= 0; u = adj_[v].next(u)) {
            if (u >= n_) throw InvariantViolation("neighbor index out of range");
            if (!adj_[u].test(v))
                throw InvariantViolation("asymmetric edge " + std::to_string(v) + "-" +
                                         std::to_string(u));
        }
    }
}

VertexSet Graph::full_set() const {
    Bitset s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
}

Graph complement(const Graph& g) {
    int n = g.size();
    std::vector<Bitset> rows;
    rows.reserve(n);
    for (int v = 0; v < n; ++v) {
        Bitset r = g.neighbors(v).flipped();
        r.reset(v);
        rows.push_back(std::move(r));
    }
    return Graph::from_rows(std::move(rows));
}

Graph induced(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s, "induced");
    std::vector<int> verts = s.to_vector();
    int m = int(verts.size());
    std::vector<int> pos(g.size(), -1);
    for (int i = 0; i < m; ++i) pos[verts[i]] = i;
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
        Bitset nb = g.neighbors(verts[i]) & s;
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) rows[i].set(pos[u]);
    }
    return Graph::from_rows(std::move(rows));
}

Graph blow_up(const Graph& g, const WeightFunction& f, long total_cap) {
    if (int(f.size()) != g.size()) throw ArgumentError("weight function length mismatch");
    long total = 0;
    for (long w : f) {
        if (w < 0) throw ArgumentError("negative blow-up weight");
        total += w;
    }
    if (total > total_cap)
        throw CapabilityError("blow-up size " + std::to_string(total) + " exceeds cap " +
                              std::to_string(total_cap));
    // offsets[v] = first new index of v's stable copy block
    std::vector<long> offset(g.size() + 1, 0);
    for (int v = 0; v < g.size(); ++v) offset[v + 1] = offset[v] + f[v];
    int m = int(total);
    std::vector<Bitset> rows(m, Bitset(m));
    for (int v = 0; v < g.size(); ++v) {
        if (f[v] == 0) continue;
        Bitset nb = g.neighbors(v);
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) {
            if (u <= v || f[u] == 0) continue;
            for (long i = offset[v]; i < offset[v + 1]; ++i)
                for (long j = offset[u]; j < offset[u + 1]; ++j) {
                    rows[i].set(int(j));
                    rows[j].set(int(i));
                }
        }
    }
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.size(), n2 = g2.size(), n = n1 + n2;
    std::vector<Bitset> rows(n, Bitset(n));
    for (int v = 0; v < n1; ++v) {
        const Bitset& nb = g1.neighbors(v);
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) rows[v].set(u);
    }
    for (int v = 0; v < n2; ++v) {
        const Bitset& nb = g2.neighbors(v);
        for (int u = nb.lowest(); u >= 0; u = nb.next(u)) rows[n1 + v].set(n1 + u);
    }
    return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.size(), n2 = g2.size(), n = n1 + n2;
    Graph u = disjoint_union(g1, g2);
    std::vector<Bitset> rows;
    rows.reserve(n);
    for (int v = 0; v < n; ++v) rows.push_back(u.neighbors(v));
    for (int v = 0; v < n1; ++v)
        for (int w = n1; w < n; ++w) {
            rows[v].set(w);
            rows[w].set(v);
        }
    return Graph::from_rows(std::move(rows));
}

VertexSet neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw ArgumentError("vertex out of range");
    return g.neighbors(v);
}

VertexSet component_of(const Graph& g, int seed, const VertexSet& within) {
    Bitset comp(g.size());
    if (!within.test(seed)) return comp;
    std::vector<int> stack{seed};
    comp.set(seed);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset fresh = (g.neighbors(v) & within) - comp;
        for (int u = fresh.lowest(); u >= 0; u = fresh.next(u)) {
            comp.set(u);
            stack.push_back(u);
        }
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    Bitset seen(g.size());
    for (int v = 0; v < g.size(); ++v) {
        if (seen.test(v)) continue;
        VertexSet comp = component_of(g, v, g.full_set() - seen);
        seen |= comp;
        out.push_back(std::move(comp));  // seeds visited in ascending order
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    return component_of(g, 0, g.full_set()).count() == g.size();
}

bool connected_within(const Graph& g, const VertexSet& s) {
    int seed = s.lowest();
    if (seed < 0) return true;
    return component_of(g, seed, s) == s;
}

PairRelation pair_relation(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_vertex_set(g, a, "pair_relation side a");
    check_vertex_set(g, b, "pair_relation side b");
    if (a.none() || b.none()) throw ArgumentError("pair_relation: empty side");
    if (a.intersects(b)) throw ArgumentError("pair_relation: overlapping sides");
    bool all = true, some = false;
    for (int v = a.lowest(); v >= 0; v = a.next(v)) {
        Bitset hit = g.neighbors(v) & b;
        int h = hit.count();
        if (h > 0) some = true;
        if (h != b.count()) all = false;
        if (some && !all) return PairRelation::Mixed;
    }
    if (all) return PairRelation::Complete;
    return some ? PairRelation::Mixed : PairRelation::Anticomplete;
}

SparsityClass sparsity_class(const Graph& g, const Rational& eps) {
    if (eps <= 0 || eps > Rational(1, 2)) throw ArgumentError("sparsity_class: eps must be in (0, 1/2]");
    Rational bound = eps * g.size();
    bool sparse = Rational(g.max_degree()) <= bound;
    bool dense = Rational(complement(g).max_degree()) <= bound;
    if (sparse && dense) return SparsityClass::Both;
    if (sparse) return SparsityClass::Sparse;
    if (dense) return SparsityClass::Dense;
    return SparsityClass::Neither;
}

void check_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    if (s.size_bits() != g.size())
        throw ArgumentError(std::string(what) + ": vertex set width " +
                            std::to_string(s.size_bits()) + " does not match graph size " +
                            std::to_string(g.size()));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    Bitset nb(g.size());
    for (int v = s.lowest(); v >= 0; v = s.next(v)) nb |= g.neighbors(v);
    return nb - s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    Bitset nb = open_neighborhood(g, s);
    return nb | s;
}

std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v = s.lowest(); v >= 0; v = s.next(v)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace p5lab
