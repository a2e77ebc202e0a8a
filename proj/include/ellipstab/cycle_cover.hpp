#pragma once

// Line bundles on the connected degree-n etale cover of a nodal cubic (a
// cycle of n projective lines), their pushforwards, and exterior powers of
// those pushforwards via the induced covers.

#include "ellipstab/cubic_bundles.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace ellipstab::cyclecover {

struct MultiDegree {
    std::vector<int> degrees;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> d) : degrees(std::move(d)) {
        if (degrees.size() < 2)
            throw Error("a multidegree needs n >= 2 entries");
    }
    std::size_t n() const { return degrees.size(); }
    int operator[](std::size_t i) const { return degrees[i % degrees.size()]; }
    long total() const {
        long s = 0;
        for (int d : degrees)
            s += d;
        return s;
    }
};

inline MultiDegree rotate(const MultiDegree& d, std::size_t by) {
    std::vector<int> out(d.n());
    for (std::size_t i = 0; i < d.n(); ++i)
        out[i] = d[i + by];
    return MultiDegree(out);
}

inline MultiDegree reflect(const MultiDegree& d) {
    auto v = d.degrees;
    std::reverse(v.begin(), v.end());
    return MultiDegree(v);
}

inline MultiDegree negate(const MultiDegree& d) {
    auto v = d.degrees;
    for (auto& x : v)
        x = -x;
    return MultiDegree(v);
}

namespace detail {

inline void require_unit_range(const std::vector<int>& d) {
    long s = 0;
    for (int x : d) {
        if (x < -1 || x > 1)
            throw Error("alternation criterion needs entries in {-1,0,1}, got " + std::to_string(x));
        s += x;
    }
    if (s != 0)
        throw Error("alternation criterion needs total degree 0");
}

// Cyclic sequence: consecutive nonzero entries have opposite signs.
inline bool alternates(const std::vector<int>& d) {
    std::vector<int> nz;
    for (int x : d)
        if (x != 0)
            nz.push_back(x);
    for (std::size_t i = 0; i < nz.size(); ++i)
        if (nz[i] == nz[(i + 1) % nz.size()])
            return false;
    return true;
}

} // namespace detail

inline bool is_semistable(const MultiDegree& d) {
    detail::require_unit_range(d.degrees);
    return detail::alternates(d.degrees);
}

inline bool is_strongly_indecomposable(const MultiDegree& d) {
    detail::require_unit_range(d.degrees);
    return std::count(d.degrees.begin(), d.degrees.end(), 1) == 1 &&
           std::count(d.degrees.begin(), d.degrees.end(), -1) == 1;
}

struct WedgeCycle {
    std::vector<std::vector<std::size_t>> components;  ///< S, S+1, ..., in shift order
    std::vector<int> degrees;                          ///< sum of d over each component
    std::size_t length() const { return components.size(); }
};

/// Shift orbits of k-subsets of Z/n, each starting at its smallest subset.
inline std::vector<WedgeCycle> wedge_cycles(const MultiDegree& d, int k) {
    const std::size_t n = d.n();
    if (k < 1 || static_cast<std::size_t>(k) > n - 1)
        throw Error("wedge power must satisfy 1 <= k <= n-1");
    std::vector<std::vector<std::size_t>> subsets;
    ellipstab::detail::enumerate_subsets(n, static_cast<std::size_t>(k), subsets);
    std::set<std::vector<std::size_t>> seen;
    std::vector<WedgeCycle> out;
    for (const auto& s : subsets) {
        if (seen.count(s))
            continue;
        WedgeCycle cyc;
        auto cur = s;
        while (seen.insert(cur).second) {
            int deg = 0;
            for (auto i : cur)
                deg += d[i];
            cyc.components.push_back(cur);
            cyc.degrees.push_back(deg);
            for (auto& i : cur)
                i = (i + 1) % n;
            std::sort(cur.begin(), cur.end());
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

/// Each cycle is a connected cover; a component degree of absolute value >= 2
/// already destabilizes, otherwise the alternation test applies per cycle.
inline bool wedge_is_semistable(const MultiDegree& d, int k) {
    for (const auto& cyc : wedge_cycles(d, k)) {
        for (int x : cyc.degrees)
            if (x < -1 || x > 1)
                return false;
        if (!detail::alternates(cyc.degrees))
            return false;
    }
    return true;
}

/// Pushforward as a bundle on the nodal cubic: twists d, and sections glued by
/// p_i(1) = g_i p_{i+1}(0), i.e. A(i, i+1 mod n) = g_i.
inline BundleOnCubic pushforward_bundle(const MultiDegree& d, const std::vector<Rational>& gluings) {
    const std::size_t n = d.n();
    if (gluings.size() != n)
        throw Error("need one gluing scalar per node of the cycle");
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(gluings[i]))
            throw Error("gluing scalars must be nonzero");
        a(i, (i + 1) % n) = gluings[i];
    }
    return {CurveKind::Nodal, d.degrees, a};
}

inline std::vector<Rational> random_gluings(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> g;
    for (std::size_t i = 0; i < n; ++i)
        g.push_back(random_rational(rng, 97, true));
    return g;
}

/// All multidegrees of length n with entries in {-1,0,1} and total 0.
inline std::vector<MultiDegree> unit_multidegrees(std::size_t n) {
    std::vector<MultiDegree> out;
    std::vector<int> cur(n, -1);
    for (;;) {
        long s = 0;
        for (int x : cur)
            s += x;
        if (s == 0)
            out.emplace_back(cur);
        std::size_t i = 0;
        while (i < n && cur[i] == 1)
            cur[i++] = -1;
        if (i == n)
            break;
        ++cur[i];
    }
    return out;
}

struct OracleComparison {
    std::size_t checked = 0;
    std::size_t agreements = 0;
    std::vector<MultiDegree> disagreements;
};

/// Alternation criterion against h0 of the pushforward twisted by a generic
/// degree-zero line bundle, over `samples` random gluing choices each.
inline OracleComparison compare_with_oracle(std::size_t n_max, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OracleComparison out;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (const auto& d : unit_multidegrees(n)) {
            const bool criterion = is_semistable(d);
            bool all_agree = true;
            for (int s = 0; s < samples; ++s) {
                const auto v = pushforward_bundle(d, random_gluings(rng, n));
                ++out.checked;
                if (criterion == !is_unstable_deg0(v, rng()))
                    ++out.agreements;
                else
                    all_agree = false;
            }
            if (!all_agree)
                out.disagreements.push_back(d);
        }
    return out;
}

struct WedgeReport {
    int a = 0, b = 0;
    std::vector<int> ks;
    std::vector<bool> semistable;
    std::vector<std::optional<bool>> oracle_unstable;  ///< bundle-level check, when requested
    bool expect_semistable = false;                    ///< min(a, b) = 1
    /// Every k agrees with the expected dichotomy, and with the oracle where run.
    bool consistent() const {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (semistable[i] != expect_semistable)
                return false;
            if (oracle_unstable[i] && *oracle_unstable[i] == semistable[i])
                return false;
        }
        return true;
    }
    /// a, b >= 2 but some k came out alternating: worth a manual look.
    bool needs_review() const { return !expect_semistable && !consistent(); }
};

/// d = (1 at 0, -1 at a) on the cycle of length a + b; scans 2 <= k <= n-2.
inline WedgeReport sln_wedge_report(int a, int b, bool with_oracle = false, std::uint64_t seed = 0x5eed) {
    if (a < 1 || b < 1)
        throw Error("sln_wedge_report needs a, b >= 1");
    const int n = a + b;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    deg[0] = 1;
    deg[static_cast<std::size_t>(a)] = -1;
    const MultiDegree d(deg);
    WedgeReport rep;
    rep.a = a;
    rep.b = b;
    rep.expect_semistable = std::min(a, b) == 1;
    std::mt19937_64 rng(seed);
    for (int k = 2; k <= n - 2; ++k) {
        rep.ks.push_back(k);
        rep.semistable.push_back(wedge_is_semistable(d, k));
        if (with_oracle) {
            const auto v = wedge(pushforward_bundle(d, random_gluings(rng, static_cast<std::size_t>(n))), k);
            rep.oracle_unstable.push_back(is_unstable_deg0(v, rng()));
        } else {
            rep.oracle_unstable.push_back(std::nullopt);
        }
    }
    return rep;
}

} // namespace ellipstab::cyclecover
