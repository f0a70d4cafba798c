#include "p5lab/simplex.hpp"

#include <limits>

#include "p5lab/errors.hpp"

namespace p5lab {

namespace {

struct Int64Overflow {};

// Arithmetic shims so the same pivoting code runs on 64-bit and GMP integers.
struct OpsI64 {
    using Int = long long;
    static Int mulsub_div(Int a, Int p, Int b, Int q, Int d) {
        // (a*p - b*q) / d, exact; throws on overflow or inexact division
        __int128 t = (__int128)a * p - (__int128)b * q;
        __int128 r = t / d;
        if (t % d != 0) throw InvariantViolation("fraction-free pivot: inexact division");
        if (r > std::numeric_limits<long long>::max() || r < std::numeric_limits<long long>::min())
            throw Int64Overflow{};
        return (Int)r;
    }
    // sign of a*d - b*c, for exact ratio comparisons
    static int cmp_cross(Int a, Int b, Int c, Int d) {
        __int128 l = (__int128)a * d, r = (__int128)b * c;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    static int sgn(Int a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
    static Rational to_rational(Int num, Int den) {
        Rational q{long(num), long(den)};
        q.canonicalize();
        return q;
    }
};

struct OpsMpz {
    using Int = mpz_class;
    static Int mulsub_div(const Int& a, const Int& p, const Int& b, const Int& q, const Int& d) {
        Int t = a * p - b * q;
        Int r;
        mpz_divexact(r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
        return r;
    }
    static int cmp_cross(const Int& a, const Int& b, const Int& c, const Int& d) {
        Int l = a * d, r = b * c;
        return mpz_cmp(l.get_mpz_t(), r.get_mpz_t());
    }
    static int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
    static Rational to_rational(const Int& num, const Int& den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
};

template <typename Ops>
PackingLpResult run_simplex(int n, const std::vector<std::uint64_t>& rows) {
    using Int = typename Ops::Int;
    const int m = int(rows.size());
    const int ncols = n + m + 1;  // structural | slack | rhs
    const int rhs = n + m;

    // T[0] = objective row (reduced costs), T[1..m] = constraints.
    std::vector<std::vector<Int>> T(m + 1, std::vector<Int>(ncols, Int(0)));
    Int den = Int(1);  // true value of cell (i,j) is T[i][j]/den, den > 0
    for (int j = 0; j < n; ++j) T[0][j] = Int(-1);
    for (int i = 0; i < m; ++i) {
        for (int v = 0; v < n; ++v)
            if ((rows[i] >> v) & 1) T[i + 1][v] = Int(1);
        T[i + 1][n + i] = Int(1);
        T[i + 1][rhs] = Int(1);
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering = least-index column with negative reduced cost
        int c = -1;
        for (int j = 0; j < n + m; ++j)
            if (Ops::sgn(T[0][j]) < 0) {
                c = j;
                break;
            }
        if (c < 0) break;  // optimal

        // ratio test: min T[i][rhs]/T[i][c] over T[i][c] > 0; ties -> least basis index
        int r = -1;
        for (int i = 1; i <= m; ++i) {
            if (Ops::sgn(T[i][c]) <= 0) continue;
            if (r < 0) {
                r = i;
                continue;
            }
            int cmp = Ops::cmp_cross(T[i][rhs], T[r][rhs], T[i][c], T[r][c]);
            if (cmp < 0 || (cmp == 0 && basis[i - 1] < basis[r - 1])) r = i;
        }
        if (r < 0) throw InvariantViolation("packing LP unbounded (impossible for this model)");

        // fraction-free pivot on (r, c); row r stays untouched, den becomes T[r][c]
        Int pivot = T[r][c];
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            for (int j = 0; j < ncols; ++j) {
                if (j == c) continue;
                T[i][j] = Ops::mulsub_div(T[i][j], pivot, T[i][c], T[r][j], den);
            }
            T[i][c] = Int(0);
        }
        den = pivot;
        basis[r - 1] = c;
    }

    PackingLpResult out;
    out.value = Ops::to_rational(T[0][rhs], den);
    out.y.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.y[basis[i]] = Ops::to_rational(T[i + 1][rhs], den);
    out.x.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) out.x[i] = Ops::to_rational(T[0][n + i], den);
    return out;
}

}  // namespace

PackingLpResult solve_stable_set_packing(int n_vars, const std::vector<std::uint64_t>& rows) {
    if (n_vars > 64) throw CapabilityError("packing LP caps at 64 variables");
    if (rows.size() > 2000)
        throw CapabilityError("packing LP caps at 2000 rows, got " + std::to_string(rows.size()));
    try {
        return run_simplex<OpsI64>(n_vars, rows);
    } catch (const Int64Overflow&) {
        return run_simplex<OpsMpz>(n_vars, rows);
    }
}

}  // namespace p5lab
