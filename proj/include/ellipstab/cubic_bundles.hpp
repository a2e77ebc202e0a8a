#pragma once

// Vector bundles on nodal and cuspidal Weierstrass cubics.
//
// The normalization is P^1 with affine coordinate t, the marked point p0 at
// t = infinity, the cusp preimage at t = 0, the node preimages at t = 0 and
// t = 1. A bundle is the pullback sum of O(a_i p0), trivialized near finite
// points by the section 1, together with one matrix A:
//   cuspidal: sections p satisfy p'(0) = A p(0)
//   nodal:    sections p satisfy p(1) = A p(0), A invertible
// Sections of O(a p0) are polynomials of degree <= a in t.

#include "ellipstab/matrix.hpp"
#include "ellipstab/polynomial.hpp"
#include "ellipstab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ellipstab {

enum class CurveKind { Nodal, Cuspidal };

inline std::string to_string(CurveKind c) { return c == CurveKind::Nodal ? "nodal" : "cuspidal"; }

inline CurveKind parse_curve_kind(const std::string& s) {
    if (s == "nodal")
        return CurveKind::Nodal;
    if (s == "cuspidal")
        return CurveKind::Cuspidal;
    throw Error("unknown curve kind '" + s + "' (expected nodal or cuspidal)");
}

template <class F>
struct BasicBundle {
    CurveKind curve = CurveKind::Nodal;
    std::vector<int> twists;
    Matrix<F> glue;

    BasicBundle() = default;
    BasicBundle(CurveKind c, std::vector<int> a, Matrix<F> g) : curve(c), twists(std::move(a)), glue(std::move(g)) {
        if (glue.rows() != twists.size() || glue.cols() != twists.size())
            throw Error("glue matrix size does not match the number of twists");
    }

    std::size_t rank() const { return twists.size(); }
    long degree() const { return std::accumulate(twists.begin(), twists.end(), 0L); }

    std::vector<int> sorted_twists() const {
        auto t = twists;
        std::sort(t.begin(), t.end());
        return t;
    }
};

using BundleOnCubic = BasicBundle<Rational>;
using SymbolicBundle = BasicBundle<RationalFunction>;

namespace detail {

inline void require_same_curve(CurveKind a, CurveKind b) {
    if (a != b)
        throw Error("curve-kind mismatch: " + to_string(a) + " vs " + to_string(b));
}

template <class F>
Matrix<F> require_inverse(const Matrix<F>& m) {
    auto inv = inverse(m);
    if (!inv)
        throw Error("nodal glue matrix is not invertible");
    return *inv;
}

inline void enumerate_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Exponent vectors of total degree k in n variables, in lexicographically
// decreasing order (x1^k first).
inline void enumerate_monomials(std::size_t n, std::size_t k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (n == 0)
        return;
    rec(rec, 0, static_cast<int>(k));
}

} // namespace detail

template <class F = Rational>
BasicBundle<F> line_bundle(CurveKind c, int m) {
    Matrix<F> g(1, 1);
    g(0, 0) = c == CurveKind::Nodal ? F(1) : F(0);
    return {c, {m}, g};
}

template <class F = Rational>
BasicBundle<F> structure_sheaf(CurveKind c) {
    return line_bundle<F>(c, 0);
}

/// Trivial pullback with the given matrix: X (cuspidal) or g (nodal).
template <class F>
BasicBundle<F> trivial_pullback_bundle(CurveKind c, const Matrix<F>& a) {
    if (!a.square())
        throw Error("glue matrix must be square");
    BasicBundle<F> v(c, std::vector<int>(a.rows(), 0), a);
    if (c == CurveKind::Nodal)
        detail::require_inverse(a);
    return v;
}

/// W_n^vee: pullback O(-p0) + O^{n-1}; glue is a single Jordan block,
/// nilpotent (A e_i = e_{i-1}) or unipotent (A e_i = e_i + e_{i-1}).
template <class F = Rational>
BasicBundle<F> w_dual(CurveKind c, int n) {
    if (n < 1)
        throw Error("W_n requires n >= 1");
    const std::size_t r = static_cast<std::size_t>(n);
    Matrix<F> a = c == CurveKind::Nodal ? Matrix<F>::identity(r) : Matrix<F>(r, r);
    for (std::size_t i = 1; i < r; ++i)
        a(i - 1, i) = F(1);
    std::vector<int> tw(r, 0);
    tw[0] = -1;
    return {c, tw, a};
}

template <class F>
BasicBundle<F> dual(const BasicBundle<F>& v) {
    std::vector<int> tw = v.twists;
    for (auto& t : tw)
        t = -t;
    if (v.curve == CurveKind::Cuspidal)
        return {v.curve, tw, (-v.glue).transpose()};
    return {v.curve, tw, detail::require_inverse(v.glue).transpose()};
}

/// W_n, the dual of W_n^vee.
template <class F = Rational>
BasicBundle<F> w_bundle(CurveKind c, int n) {
    return dual(w_dual<F>(c, n));
}

template <class F>
BasicBundle<F> twist(const BasicBundle<F>& v, int m) {
    BasicBundle<F> out = v;
    for (auto& t : out.twists)
        t += m;
    return out;
}

template <class F>
BasicBundle<F> tensor(const BasicBundle<F>& v, const BasicBundle<F>& w) {
    detail::require_same_curve(v.curve, w.curve);
    std::vector<int> tw;
    tw.reserve(v.rank() * w.rank());
    for (int a : v.twists)
        for (int b : w.twists)
            tw.push_back(a + b);
    Matrix<F> g;
    if (v.curve == CurveKind::Cuspidal)
        g = kron(v.glue, Matrix<F>::identity(w.rank())) + kron(Matrix<F>::identity(v.rank()), w.glue);
    else
        g = kron(v.glue, w.glue);
    return {v.curve, tw, g};
}

/// k-th exterior power; basis e_S for increasing k-subsets S.
template <class F>
BasicBundle<F> wedge(const BasicBundle<F>& v, int k) {
    const std::size_t n = v.rank();
    if (k < 0 || static_cast<std::size_t>(k) > n)
        throw Error("wedge power out of range");
    std::vector<std::vector<std::size_t>> subsets;
    detail::enumerate_subsets(n, static_cast<std::size_t>(k), subsets);
    if (k == 0)
        return structure_sheaf<F>(v.curve);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        index[subsets[i]] = i;
    std::vector<int> tw;
    for (const auto& s : subsets) {
        int t = 0;
        for (auto i : s)
            t += v.twists[i];
        tw.push_back(t);
    }
    const std::size_t m = subsets.size();
    Matrix<F> g(m, m);
    if (v.curve == CurveKind::Cuspidal) {
        // D(e_S) = sum_j e_{s_1} ^ ... ^ A e_{s_j} ^ ... ^ e_{s_k}.
        for (std::size_t col = 0; col < m; ++col) {
            const auto& s = subsets[col];
            for (std::size_t j = 0; j < s.size(); ++j)
                for (std::size_t t = 0; t < n; ++t) {
                    const F& coef = v.glue(t, s[j]);
                    if (is_zero(coef))
                        continue;
                    auto rep = s;
                    rep[j] = t;
                    // Sort with sign; a repeated index kills the term.
                    int sign = 1;
                    bool repeated = false;
                    for (std::size_t a = 0; a < rep.size(); ++a)
                        for (std::size_t b = a + 1; b < rep.size(); ++b) {
                            if (rep[a] == rep[b])
                                repeated = true;
                            else if (rep[a] > rep[b])
                                sign = -sign;
                        }
                    if (repeated)
                        continue;
                    std::sort(rep.begin(), rep.end());
                    const std::size_t row = index.at(rep);
                    g(row, col) = F(g(row, col) + (sign > 0 ? coef : F(-coef)));
                }
        }
    } else {
        // A e_S = sum_T det A[T, S] e_T.
        const std::size_t kk = static_cast<std::size_t>(k);
        for (std::size_t row = 0; row < m; ++row)
            for (std::size_t col = 0; col < m; ++col) {
                Matrix<F> minor(kk, kk);
                for (std::size_t a = 0; a < kk; ++a)
                    for (std::size_t b = 0; b < kk; ++b)
                        minor(a, b) = v.glue(subsets[row][a], subsets[col][b]);
                g(row, col) = determinant(minor);
            }
    }
    return {v.curve, tw, g};
}

/// k-th symmetric power; basis of monomials e^m, |m| = k.
template <class F>
BasicBundle<F> sym(const BasicBundle<F>& v, int k) {
    const std::size_t n = v.rank();
    if (k < 0)
        throw Error("symmetric power must be non-negative");
    if (k == 0 || n == 0)
        return structure_sheaf<F>(v.curve);
    std::vector<std::vector<int>> monos;
    detail::enumerate_monomials(n, static_cast<std::size_t>(k), monos);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = i;
    std::vector<int> tw;
    for (const auto& mo : monos) {
        int t = 0;
        for (std::size_t i = 0; i < n; ++i)
            t += mo[i] * v.twists[i];
        tw.push_back(t);
    }
    const std::size_t m = monos.size();
    Matrix<F> g(m, m);
    if (v.curve == CurveKind::Cuspidal) {
        // D(e^m) = sum_i m_i e^{m - e_i} (A e_i).
        for (std::size_t col = 0; col < m; ++col)
            for (std::size_t i = 0; i < n; ++i) {
                if (monos[col][i] == 0)
                    continue;
                for (std::size_t t = 0; t < n; ++t) {
                    const F& coef = v.glue(t, i);
                    if (is_zero(coef))
                        continue;
                    auto mo = monos[col];
                    --mo[i];
                    ++mo[t];
                    const std::size_t row = index.at(mo);
                    g(row, col) = F(g(row, col) + F(monos[col][i]) * coef);
                }
            }
    } else {
        // A(e^m) = prod_i (A e_i)^{m_i}, expanded.
        for (std::size_t col = 0; col < m; ++col) {
            std::map<std::vector<int>, F> poly{{std::vector<int>(n, 0), F(1)}};
            for (std::size_t i = 0; i < n; ++i)
                for (int rep = 0; rep < monos[col][i]; ++rep) {
                    std::map<std::vector<int>, F> next;
                    for (const auto& [mono, c] : poly)
                        for (std::size_t t = 0; t < n; ++t) {
                            const F& coef = v.glue(t, i);
                            if (is_zero(coef))
                                continue;
                            auto mo = mono;
                            ++mo[t];
                            auto it = next.find(mo);
                            if (it == next.end())
                                next.emplace(mo, F(c * coef));
                            else
                                it->second = F(it->second + c * coef);
                        }
                    poly = std::move(next);
                }
            for (const auto& [mono, c] : poly)
                g(index.at(mono), col) = c;
        }
    }
    return {v.curve, tw, g};
}

/// Trace-free endomorphisms ad V. Basis: E_ij (i != j) in row-major order,
/// then H_i = E_ii - E_nn for i < n.
template <class F>
BasicBundle<F> end0(const BasicBundle<F>& v) {
    const std::size_t n = v.rank();
    if (n < 2)
        throw Error("ad of a line bundle is zero");
    std::vector<std::pair<std::size_t, std::size_t>> offdiag;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                offdiag.emplace_back(i, j);
    const std::size_t m = n * n - 1;
    std::vector<int> tw;
    for (auto [i, j] : offdiag)
        tw.push_back(v.twists[i] - v.twists[j]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        tw.push_back(0);

    auto basis_matrix = [&](std::size_t idx) {
        Matrix<F> e(n, n);
        if (idx < offdiag.size()) {
            e(offdiag[idx].first, offdiag[idx].second) = F(1);
        } else {
            const std::size_t i = idx - offdiag.size();
            e(i, i) = F(1);
            e(n - 1, n - 1) = F(-1);
        }
        return e;
    };
    std::optional<Matrix<F>> inv;
    if (v.curve == CurveKind::Nodal)
        inv = detail::require_inverse(v.glue);
    Matrix<F> g(m, m);
    for (std::size_t col = 0; col < m; ++col) {
        const Matrix<F> e = basis_matrix(col);
        const Matrix<F> img = v.curve == CurveKind::Cuspidal ? Matrix<F>(v.glue * e - e * v.glue)
                                                             : Matrix<F>(v.glue * e * *inv);
        for (std::size_t idx = 0; idx < offdiag.size(); ++idx)
            g(idx, col) = img(offdiag[idx].first, offdiag[idx].second);
        for (std::size_t i = 0; i + 1 < n; ++i)
            g(offdiag.size() + i, col) = img(i, i);
    }
    return {v.curve, tw, g};
}

/// A degree-zero line bundle: multiplicative gluing mu (nodal) or additive
/// derivative c (cuspidal).
template <class F = Rational>
struct Pic0Element {
    CurveKind curve = CurveKind::Nodal;
    F param = F(1);

    static Pic0Element identity(CurveKind c) { return {c, c == CurveKind::Nodal ? F(1) : F(0)}; }
};

template <class F>
BasicBundle<F> twist_pic0(const BasicBundle<F>& v, const Pic0Element<F>& lambda) {
    detail::require_same_curve(v.curve, lambda.curve);
    BasicBundle<F> out = v;
    if (v.curve == CurveKind::Nodal) {
        if (is_zero(lambda.param))
            throw Error("nodal Pic0 parameter must be nonzero");
        out.glue = lambda.param * v.glue;
    } else {
        out.glue = v.glue + lambda.param * Matrix<F>::identity(v.rank());
    }
    return out;
}

/// V tensored with the generic degree-zero line bundle, parameter x.
inline SymbolicBundle twist_generic(const BundleOnCubic& v) {
    SymbolicBundle s(v.curve, v.twists, v.glue.cast<RationalFunction>());
    return twist_pic0(s, Pic0Element<RationalFunction>{v.curve, RationalFunction::x()});
}

/// The linear system cutting out H^0: one unknown per polynomial
/// coefficient q_{i,d}, d <= a_i, one row per summand.
template <class F>
Matrix<F> section_system(const BasicBundle<F>& v) {
    const std::size_t n = v.rank();
    std::vector<std::size_t> offset(n, 0);
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < n; ++i) {
        offset[i] = unknowns;
        if (v.twists[i] >= 0)
            unknowns += static_cast<std::size_t>(v.twists[i]) + 1;
    }
    Matrix<F> sys(n, unknowns);
    for (std::size_t j = 0; j < n; ++j) {
        const int a = v.twists[j];
        if (v.curve == CurveKind::Cuspidal) {
            if (a >= 1)
                sys(j, offset[j] + 1) = F(1);
        } else if (a >= 0) {
            for (int d = 0; d <= a; ++d)
                sys(j, offset[j] + d) = F(1);
        }
        for (std::size_t l = 0; l < n; ++l)
            if (v.twists[l] >= 0 && !is_zero(v.glue(j, l)))
                sys(j, offset[l]) = F(sys(j, offset[l]) - v.glue(j, l));
    }
    return sys;
}

template <class F>
long h0(const BasicBundle<F>& v) {
    const Matrix<F> sys = section_system(v);
    return static_cast<long>(sys.cols()) - static_cast<long>(rank(sys));
}

/// Serre duality with trivial dualizing sheaf: h1(V) = h0(V^vee). Computed
/// independently of h0(V), so h0 - h1 = deg is a genuine check.
template <class F>
long h1(const BasicBundle<F>& v) {
    return h0(dual(v));
}

/// Basis of H^0 as coefficient vectors, summand by summand (q_{i,0..a_i}).
template <class F>
std::vector<std::vector<F>> sections(const BasicBundle<F>& v) {
    return kernel(section_system(v));
}

struct GenericH0 {
    long h0 = 0;
    bool generic = true;
    bool used_symbolic = false;
    std::vector<Rational> sample_points;
};

/// h0(V tensor lambda) for generic lambda in Pic^0. Three seeded rational
/// samples; disagreement falls back to rank over Q(x).
inline GenericH0 generic_h0(const BundleOnCubic& v, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenericH0 out;
    std::vector<long> values;
    for (int s = 0; s < 3; ++s) {
        Rational p = random_rational(rng, 1000003, v.curve == CurveKind::Nodal);
        if (v.curve == CurveKind::Nodal && p == 1)
            p = 2;
        out.sample_points.push_back(p);
        values.push_back(h0(twist_pic0(v, Pic0Element<Rational>{v.curve, p})));
    }
    if (std::all_of(values.begin(), values.end(), [&](long x) { return x == values[0]; })) {
        out.h0 = values[0];
        return out;
    }
    out.used_symbolic = true;
    out.h0 = h0(twist_generic(v));
    return out;
}

/// A degree-zero bundle is unstable iff h0(V tensor lambda) > 0 for every
/// degree-zero lambda, i.e. for generic lambda.
inline bool is_unstable_deg0(const BundleOnCubic& v, std::uint64_t seed = 0x5eed) {
    if (v.degree() != 0)
        throw Error("instability test requires degree 0, got " + std::to_string(v.degree()));
    return generic_h0(v, seed).h0 > 0;
}

enum class WeierstrassKind { Smooth, Nodal, Cuspidal };

inline std::string to_string(WeierstrassKind k) {
    switch (k) {
    case WeierstrassKind::Smooth: return "smooth";
    case WeierstrassKind::Nodal: return "nodal";
    case WeierstrassKind::Cuspidal: return "cuspidal";
    }
    return "?";
}

/// Singularity type of y^2 = x^3 + g2 x + g3; the discriminant is 4 g2^3 + 27 g3^2.
inline WeierstrassKind classify_weierstrass(const Rational& g2, const Rational& g3) {
    if (is_zero(g2) && is_zero(g3))
        return WeierstrassKind::Cuspidal;
    const Rational disc = 4 * g2 * g2 * g2 + 27 * g3 * g3;
    return is_zero(disc) ? WeierstrassKind::Nodal : WeierstrassKind::Smooth;
}

} // namespace ellipstab
