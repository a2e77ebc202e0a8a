#pragma once

// Weighted projective bookkeeping: weights, (weight, degree) pairings, the
// weighted tensor twist, the ten-term E8 table, determinant-twist arithmetic
// for the Levi blocks, and the gcd condition for unique extension.

#include "ellipstab/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ellipstab::moduli {

using rootsys::GroupId;
using rootsys::Series;

struct WeightedDecomposition {
    std::vector<std::pair<int, long>> pairs;  ///< (C*-weight, line bundle degree)

    WeightedDecomposition() = default;
    explicit WeightedDecomposition(std::vector<std::pair<int, long>> p) : pairs(std::move(p)) {
        for (const auto& [w, e] : pairs)
            if (w <= 0)
                throw Error("weights must be positive");
    }
    std::vector<int> weights() const {
        std::vector<int> w;
        for (const auto& p : pairs)
            w.push_back(p.first);
        return w;
    }
    std::vector<long> degrees() const {
        std::vector<long> d;
        for (const auto& p : pairs)
            d.push_back(p.second);
        return d;
    }
    friend bool operator==(const WeightedDecomposition&, const WeightedDecomposition&) = default;
};

inline std::vector<int> wp_weights(GroupId g) { return rootsys::comarks(rootsys::build_root_system(g)); }

/// (1, 0) for g_0, then comarks matched with Casimir degrees, both sorted.
/// D_n uses the order 1,1,1,1,2,...,2 against 0,2,4,n,6,...,2n-2.
inline WeightedDecomposition casimir_pairing(GroupId g) {
    if (g.series == Series::E && g.rank == 8)
        throw Error("E8 has no pairing of this shape; use the affine E8 table");
    const auto rs = rootsys::build_root_system(g);
    auto gs = rootsys::comarks(rs);
    std::sort(gs.begin(), gs.end());
    std::vector<long> ds{0};
    if (g.series == Series::D) {
        const int n = g.rank;
        ds.insert(ds.end(), {2, 4, n});
        for (int d = 6; d <= 2 * n - 2; d += 2)
            ds.push_back(d);
    } else {
        for (int d : rootsys::casimir_weights(rs))
            ds.push_back(d);
    }
    std::vector<std::pair<int, long>> out;
    for (std::size_t i = 0; i < gs.size(); ++i)
        out.emplace_back(gs[i], ds[i]);
    return WeightedDecomposition(out);
}

/// e_i -> e_i + w_i m / n.
inline WeightedDecomposition weighted_tensor(const WeightedDecomposition& dec, long m, long n) {
    if (n <= 0)
        throw Error("weighted tensor divisor must be positive");
    WeightedDecomposition out = dec;
    for (auto& [w, e] : out.pairs) {
        const long num = static_cast<long>(w) * m;
        if (num % n != 0)
            throw Error("weighted tensor not integral: " + std::to_string(n) + " does not divide " +
                        std::to_string(num));
        e += num / n;
    }
    return out;
}

inline WeightedDecomposition e8_affine_data() {
    return WeightedDecomposition(
        {{1, 4}, {1, 2}, {2, 2}, {2, 0}, {3, 0}, {3, -2}, {4, -2}, {4, -4}, {5, -4}, {6, -6}});
}

/// True iff no prime divides r of the r + 1 weights.
inline bool admits_unique_extension(const std::vector<int>& weights) {
    if (weights.size() < 2)
        throw Error("need at least two weights");
    for (int w : weights)
        if (w <= 0)
            throw Error("weights must be positive");
    const std::size_t r = weights.size() - 1;
    const int top = *std::max_element(weights.begin(), weights.end());
    for (int p = 2; p <= top; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0)
                prime = false;
        if (!prime)
            continue;
        const auto divisible = static_cast<std::size_t>(
            std::count_if(weights.begin(), weights.end(), [p](int w) { return w % p == 0; }));
        if (divisible >= r)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Integer linear systems M a = b.

struct IntSystem {
    std::vector<std::vector<mpz_class>> m;
    std::vector<mpz_class> b;
    std::size_t rows() const { return m.size(); }
    std::size_t cols() const { return m.empty() ? 0 : m[0].size(); }
};

/// Smith form S = P M Q with unimodular P, Q.
struct SmithForm {
    std::vector<std::vector<mpz_class>> s, p, q;
};

namespace detail {

using IMat = std::vector<std::vector<mpz_class>>;

inline IMat identity(std::size_t n) {
    IMat m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline void swap_rows(IMat& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
inline void swap_cols(IMat& a, std::size_t i, std::size_t j) {
    for (auto& row : a)
        std::swap(row[i], row[j]);
}
inline void add_row(IMat& a, std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t k = 0; k < a[dst].size(); ++k)
        a[dst][k] += f * a[src][k];
}
inline void add_col(IMat& a, std::size_t dst, std::size_t src, const mpz_class& f) {
    for (auto& row : a)
        row[dst] += f * row[src];
}

} // namespace detail

inline SmithForm smith_form(const std::vector<std::vector<mpz_class>>& m) {
    using namespace detail;
    const std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
    SmithForm f{m, identity(r), identity(c)};
    auto& s = f.s;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (sgn(s[i][j]) != 0 && (!best || abs(s[i][j]) < abs(s[best->first][best->second])))
                        best = {i, j};
            if (!best)
                return f;
            swap_rows(s, t, best->first);
            swap_rows(f.p, t, best->first);
            swap_cols(s, t, best->second);
            swap_cols(f.q, t, best->second);
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                mpz_class k;
                mpz_fdiv_q(k.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
                add_row(s, i, t, -k);
                add_row(f.p, i, t, -k);
                clean = clean && sgn(s[i][t]) == 0;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                mpz_class k;
                mpz_fdiv_q(k.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
                add_col(s, j, t, -k);
                add_col(f.q, j, t, -k);
                clean = clean && sgn(s[t][j]) == 0;
            }
            if (!clean)
                continue;
            // Divisibility of the remaining block keeps the diagonal a divisor chain.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < r && !bad_row; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            add_row(s, t, *bad_row, 1);
            add_row(f.p, t, *bad_row, 1);
        }
    }
    return f;
}

struct IntSolveResult {
    std::optional<std::vector<mpz_class>> particular;
    std::vector<std::vector<mpz_class>> kernel_basis;
    /// When unsolvable: rational y with y^T M integral and y^T b not integral.
    std::vector<Rational> certificate;
};

inline IntSolveResult solve_integer(const IntSystem& sys) {
    const std::size_t r = sys.rows(), c = sys.cols();
    const SmithForm f = smith_form(sys.m);
    std::vector<mpz_class> pb(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            pb[i] += f.p[i][k] * sys.b[k];
    IntSolveResult res;
    std::vector<mpz_class> y(c, 0);
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class d = i < c ? f.s[i][i] : mpz_class(0);
        const bool ok = sgn(d) != 0 ? pb[i] % d == 0 : sgn(pb[i]) == 0;
        if (!ok) {
            const Rational scale = sgn(d) != 0 ? Rational(1) / Rational(d) : Rational(1) / Rational(2 * pb[i]);
            for (std::size_t k = 0; k < r; ++k)
                res.certificate.push_back(Rational(f.p[i][k]) * scale);
            return res;
        }
        if (sgn(d) != 0)
            y[i] = pb[i] / d;
    }
    std::vector<mpz_class> a(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t k = 0; k < c; ++k)
            a[i] += f.q[i][k] * y[k];
    res.particular = a;
    for (std::size_t k = 0; k < c; ++k)
        if (k >= r || sgn(f.s[k][k]) == 0) {
            std::vector<mpz_class> v(c);
            for (std::size_t i = 0; i < c; ++i)
                v[i] = f.q[i][k];
            res.kernel_basis.push_back(v);
        }
    return res;
}

// ---------------------------------------------------------------------------
// Determinant twists on Levi blocks.

/// N_i = n_i (n_i - 1) / 2 + a_i n_i.
inline long block_value(int n, long a) { return static_cast<long>(n) * (n - 1) / 2 + a * n; }

struct ConformalRelation {
    /// Each row r asks sum_i r[i] N_i = 0.
    std::vector<std::vector<long>> rows;

    static ConformalRelation pairwise(std::size_t t) {
        ConformalRelation rel;
        for (std::size_t i = 1; i < t; ++i) {
            std::vector<long> row(t, 0);
            row[0] = 1;
            row[i] = -1;
            rel.rows.push_back(row);
        }
        return rel;
    }
    static ConformalRelation single(std::vector<long> coeffs) { return {{std::move(coeffs)}}; }
};

/// det B_2 det B_3 = (det B_1)^2 on E7's blocks (2, 3, 4).
inline ConformalRelation e7_conformal_relation() { return ConformalRelation::single({-2, 1, 1}); }

struct ConformalResult {
    std::optional<std::vector<long>> twists;
    std::vector<long> values;  ///< N_i at the returned twists
    bool found_in_window = false;
    std::vector<Rational> certificate;  ///< set when no integer solution exists
    std::string certificate_text;
};

namespace detail {

inline bool relation_holds(const std::vector<int>& blocks, const ConformalRelation& rel, const std::vector<long>& a) {
    for (const auto& row : rel.rows) {
        long s = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s += row[i] * block_value(blocks[i], a[i]);
        if (s != 0)
            return false;
    }
    return true;
}

} // namespace detail

/// Integer twists a_i with the relation among the N_i. Existence is decided
/// exactly over Z; a solution of least L1 norm (lexicographically first among
/// those) is searched in |a_i| <= 4 max(n_i)^2.
inline ConformalResult conformal_twists(const std::vector<int>& blocks, std::optional<ConformalRelation> relation = {}) {
    if (blocks.empty())
        throw Error("need at least one block");
    for (int n : blocks)
        if (n < 1)
            throw Error("block sizes must be positive");
    const std::size_t t = blocks.size();
    const ConformalRelation rel = relation ? *relation : ConformalRelation::pairwise(t);
    for (const auto& row : rel.rows)
        if (row.size() != t)
            throw Error("relation length does not match the number of blocks");

    IntSystem sys;
    for (const auto& row : rel.rows) {
        std::vector<mpz_class> mr(t);
        mpz_class rhs = 0;
        for (std::size_t i = 0; i < t; ++i) {
            mr[i] = mpz_class(row[i]) * blocks[i];
            rhs -= mpz_class(row[i]) * (static_cast<long>(blocks[i]) * (blocks[i] - 1) / 2);
        }
        sys.m.push_back(mr);
        sys.b.push_back(rhs);
    }
    ConformalResult res;
    if (sys.m.empty()) {
        res.twists = std::vector<long>(t, 0);
    } else {
        const auto sol = solve_integer(sys);
        if (!sol.particular) {
            res.certificate = sol.certificate;
            Rational yb = 0;
            for (std::size_t k = 0; k < sys.rows(); ++k)
                yb += res.certificate[k] * Rational(sys.b[k]);
            std::string y;
            for (std::size_t k = 0; k < res.certificate.size(); ++k)
                y += (k ? "," : "") + to_string(res.certificate[k]);
            res.certificate_text = "y = (" + y + ") makes every coefficient of y.M integral but y.b = " +
                                   to_string(yb) + ", so no integer solution exists";
            return res;
        }
        const long bound = 4L * *std::max_element(blocks.begin(), blocks.end()) *
                           *std::max_element(blocks.begin(), blocks.end());
        // Shells of increasing L1 norm, each scanned in lexicographic order.
        std::vector<long> cur(t, 0);
        auto scan = [&](auto&& self, std::size_t pos, long left) -> bool {
            if (pos + 1 == t) {
                for (long v : {-left, left}) {
                    if (std::labs(v) > bound)
                        continue;
                    cur[pos] = v;
                    if (detail::relation_holds(blocks, rel, cur))
                        return true;
                    if (left == 0)
                        break;
                }
                return false;
            }
            for (long v = -std::min(left, bound); v <= std::min(left, bound); ++v) {
                cur[pos] = v;
                if (self(self, pos + 1, left - std::labs(v)))
                    return true;
            }
            return false;
        };
        for (long s = 0; s <= bound * static_cast<long>(t); ++s)
            if (scan(scan, 0, s)) {
                res.twists = cur;
                res.found_in_window = true;
                break;
            }
        if (!res.twists) {
            std::vector<long> a;
            for (const auto& x : *sol.particular)
                a.push_back(x.get_si());
            res.twists = a;
        }
    }
    if (!detail::relation_holds(blocks, rel, *res.twists))
        throw Error("internal: conformal twist failed verification");
    for (std::size_t i = 0; i < t; ++i)
        res.values.push_back(block_value(blocks[i], (*res.twists)[i]));
    return res;
}

} // namespace ellipstab::moduli
