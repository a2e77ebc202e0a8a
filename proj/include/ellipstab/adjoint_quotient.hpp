#pragma once

// Type A adjoint quotient: characteristic-polynomial invariants of sl_n and
// SL_n elements, regularity, companion-matrix sections, and the bridge to
// bundles with trivial pullback.

#include "ellipstab/cubic_bundles.hpp"
#include "ellipstab/rootsys.hpp"

#include <random>
#include <type_traits>
#include <vector>

namespace ellipstab::adjquot {

struct CuspidalDatum {
    RationalMatrix x;

    explicit CuspidalDatum(RationalMatrix m) : x(std::move(m)) {
        if (!x.square() || x.rows() == 0)
            throw Error("sl_n datum must be a nonempty square matrix");
        if (!is_zero(x.trace()))
            throw Error("sl_n datum must be traceless");
    }
    std::size_t n() const { return x.rows(); }
};

struct NodalDatum {
    RationalMatrix g;

    explicit NodalDatum(RationalMatrix m) : g(std::move(m)) {
        if (!g.square() || g.rows() == 0)
            throw Error("SL_n datum must be a nonempty square matrix");
        if (determinant(g) != 1)
            throw Error("SL_n datum must have determinant 1");
    }
    std::size_t n() const { return g.rows(); }
};

/// Coefficients c_1..c_n of det(tI - M) = t^n + c_1 t^{n-1} + ... + c_n;
/// c_d has degree d in the entries of M.
struct InvariantVector {
    std::vector<Rational> c;

    std::size_t n() const { return c.size(); }
    const Rational& coeff(std::size_t d) const { return c.at(d - 1); }
    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector char_invariants(const RationalMatrix& m) {
    auto p = charpoly(m);
    return {std::vector<Rational>(p.begin() + 1, p.end())};
}

inline InvariantVector invariants_cuspidal(const CuspidalDatum& d) { return char_invariants(d.x); }
inline InvariantVector invariants_nodal(const NodalDatum& d) { return char_invariants(d.g); }

/// Cuspidal invariants from (c_2, ..., c_n); c_1 = 0.
inline InvariantVector cuspidal_invariants_from_tail(const std::vector<Rational>& tail) {
    InvariantVector v;
    v.c.push_back(0);
    v.c.insert(v.c.end(), tail.begin(), tail.end());
    return v;
}

/// Nodal invariants from (c_1, ..., c_{n-1}); c_n = (-1)^n forces det = 1.
inline InvariantVector nodal_invariants_from_head(const std::vector<Rational>& head) {
    InvariantVector v{head};
    v.c.push_back((head.size() + 1) % 2 == 0 ? Rational(1) : Rational(-1));
    return v;
}

/// dim of {Y in gl_n : MY = YM}.
inline std::size_t centralizer_dimension(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    const auto id = RationalMatrix::identity(n);
    // vec(MY - YM) = (M kron I - I kron M^T) vec(Y), row-major vec.
    return n * n - rank(RationalMatrix(kron(m, id) - kron(id, m.transpose())));
}

inline bool is_regular_cuspidal(const CuspidalDatum& d) { return centralizer_dimension(d.x) == d.n(); }

/// The kernel of Ad g - Id equals the centralizer of g.
inline bool is_regular_nodal(const NodalDatum& d) { return centralizer_dimension(d.g) == d.n(); }

/// Companion matrix of t^n + c_1 t^{n-1} + ... + c_n.
inline RationalMatrix companion(const InvariantVector& c) {
    const std::size_t n = c.n();
    if (n == 0)
        throw Error("empty invariant vector");
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i)
        m(i, n - 1) = -c.c[n - 1 - i];
    return m;
}

inline CuspidalDatum kostant_section(const InvariantVector& c) {
    if (c.n() == 0 || !is_zero(c.c[0]))
        throw Error("cuspidal invariants must have c_1 = 0");
    return CuspidalDatum(companion(c));
}

inline NodalDatum steinberg_section(const InvariantVector& c) {
    if (c.n() == 0)
        throw Error("empty invariant vector");
    const Rational want = c.n() % 2 == 0 ? Rational(1) : Rational(-1);
    if (c.c.back() != want)
        throw Error("nodal invariants must have c_n = (-1)^n");
    return NodalDatum(companion(c));
}

inline BundleOnCubic bundle_from_datum(const CuspidalDatum& d) {
    return trivial_pullback_bundle(CurveKind::Cuspidal, d.x);
}

inline BundleOnCubic bundle_from_datum(const NodalDatum& d) {
    return trivial_pullback_bundle(CurveKind::Nodal, d.g);
}

/// invariants(mu^{-1} X) has c_d scaled by mu^{-d} for every Casimir degree
/// d of A_{n-1}, and c_1 stays 0.
inline bool scaling_check(const CuspidalDatum& d, const Rational& mu) {
    if (is_zero(mu))
        throw Error("scaling factor must be nonzero");
    const auto base = invariants_cuspidal(d);
    const auto scaled = invariants_cuspidal(CuspidalDatum(Rational(1 / mu) * d.x));
    if (!is_zero(scaled.c[0]))
        return false;
    if (d.n() < 2)
        return true;
    const auto rs = rootsys::build_root_system({rootsys::Series::A, static_cast<int>(d.n()) - 1});
    for (int deg : rootsys::casimir_weights(rs)) {
        Rational factor = 1;
        for (int i = 0; i < deg; ++i)
            factor /= mu;
        if (scaled.coeff(static_cast<std::size_t>(deg)) != factor * base.coeff(static_cast<std::size_t>(deg)))
            return false;
    }
    return true;
}

template <class Datum>
bool sequivalence_equal(const Datum& a, const Datum& b) {
    if (a.n() != b.n())
        throw Error("S-equivalence comparison needs equal rank");
    if constexpr (std::is_same_v<Datum, CuspidalDatum>)
        return invariants_cuspidal(a) == invariants_cuspidal(b);
    else
        return invariants_nodal(a) == invariants_nodal(b);
}

inline CuspidalDatum random_traceless(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 5) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = random_rational(rng, bound);
    const Rational shift = m.trace() / static_cast<long>(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) -= shift;
    return CuspidalDatum(m);
}

/// Random element of SL_n as L * D * U with unit-triangular L, U.
inline NodalDatum random_unimodular(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 4) {
    RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n), dg(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = random_rational(rng, bound);
            u(j, i) = random_rational(rng, bound);
        }
    Rational prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dg(i, i) = random_rational(rng, bound, true);
        prod *= dg(i, i);
    }
    dg(n - 1, n - 1) = 1 / prod;
    return NodalDatum(l * dg * u);
}

/// Random invertible change of basis.
inline RationalMatrix random_gl(std::mt19937_64& rng, std::size_t n, std::int64_t bound = 4) {
    for (;;) {
        RationalMatrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t(i, j) = random_rational(rng, bound);
        if (!is_zero(determinant(t)))
            return t;
    }
}

} // namespace ellipstab::adjquot
