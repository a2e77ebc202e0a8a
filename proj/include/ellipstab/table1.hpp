#pragma once

// The graded pieces u^k of the unipotent radical, as bundles on a singular
// cubic, and the sweep comparing them with the root data.

#include "ellipstab/bundle_expr.hpp"
#include "ellipstab/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellipstab::table1 {

using rootsys::GroupId;
using rootsys::RootSystem;
using rootsys::Series;

namespace detail {

inline std::string n(int v) { return std::to_string(v); }

} // namespace detail

/// Expression for u^k in the bundle language. `alpha` matters only in type A,
/// where it selects the split (alpha+1, r-alpha).
inline std::string expression(GroupId g, std::size_t alpha, int k) {
    using detail::n;
    const int r = g.rank;
    auto missing = [&]() -> Error {
        return Error("no table row for " + g.name() + " k=" + std::to_string(k));
    };
    switch (g.series) {
    case Series::A: {
        if (k != 1)
            throw missing();
        const int a = static_cast<int>(alpha) + 1;
        return "Wd" + n(a) + "*Wd" + n(r + 1 - a);
    }
    case Series::B:
        if (k == 1)
            return "Wd" + n(r - 1) + "*ad(W2)";
        if (k == 2 && r >= 3)
            return "wedge(Wd" + n(r - 1) + ",2)";
        throw missing();
    case Series::C:
        if (k == 1)
            return "sym(Wd" + n(r) + ",2)";
        throw missing();
    case Series::D:
        if (k == 1)
            return "Wd" + n(r - 2) + "*(W2*Wd2)";
        if (k == 2 && r >= 4)
            return "wedge(Wd" + n(r - 2) + ",2)";
        throw missing();
    case Series::E: {
        static const std::vector<std::vector<std::string>> rows{
            {"W2*Wd3*Wd3", "W3*W3*O(-1)", "Wd2"},
            {"W2*Wd3*Wd4", "W3*wedge(W4,2)*O(-1)", "W4*Wd2", "Wd3"},
            {"W2*Wd3*Wd5", "wedge(Wd5,2)*W3", "wedge(W5,2)*Wd2", "W5*Wd3", "Wd2*W3", "Wd5"}};
        const auto& row = rows[static_cast<std::size_t>(r - 6)];
        if (k < 1 || k > static_cast<int>(row.size()))
            throw missing();
        return row[static_cast<std::size_t>(k - 1)];
    }
    case Series::F: {
        static const std::vector<std::string> row{"Wd2*sym(Wd3,2)*O(1)", "sym(W3,2)*O(-1)", "Wd2"};
        if (k < 1 || k > 3)
            throw missing();
        return row[static_cast<std::size_t>(k - 1)];
    }
    case Series::G:
        if (k == 1)
            return "sym(Wd2,3)*O(1)";
        if (k == 2)
            return "O(-1)";
        throw missing();
    }
    throw missing();
}

/// The unsimplified product form for rows whose expression was rewritten by
/// an isomorphism such as wedge^{n-1} W_n^vee (p0) = W_n.
inline std::optional<std::string> unsimplified_expression(GroupId g, int k) {
    if (g.series != Series::E)
        return std::nullopt;
    static const std::vector<std::vector<std::string>> rows{
        {"Wd2*Wd3*Wd3*O(1)", "wedge(Wd3,2)*wedge(Wd3,2)*O(1)", ""},
        {"Wd2*Wd3*Wd4*O(1)", "wedge(Wd3,2)*wedge(Wd4,2)*O(1)", "wedge(Wd4,3)*Wd2*O(1)", ""},
        {"Wd2*Wd3*Wd5*O(1)", "wedge(Wd3,2)*wedge(Wd5,2)*O(1)", "Wd2*wedge(Wd5,3)*O(1)", "Wd3*wedge(Wd5,4)*O(1)",
         "Wd2*wedge(Wd3,2)*O(1)", ""}};
    const auto& row = rows[static_cast<std::size_t>(g.rank - 6)];
    if (k < 1 || k > static_cast<int>(row.size()) || row[static_cast<std::size_t>(k - 1)].empty())
        return std::nullopt;
    return row[static_cast<std::size_t>(k - 1)];
}

/// Row labels of the table as printed: one row per (series, k).
struct RowLabel {
    std::string group;
    int k;
};

inline std::vector<RowLabel> row_labels() {
    return {{"A_{n-1}", 1}, {"B_n", 1}, {"B_n", 2}, {"C_n", 1}, {"D_n", 1}, {"D_n", 2}, {"E6", 1}, {"E6", 2},
            {"E6", 3},      {"E7", 1},  {"E7", 2},  {"E7", 3},  {"E7", 4},  {"E8", 1},  {"E8", 2}, {"E8", 3},
            {"E8", 4},      {"E8", 5},  {"E8", 6},  {"F4", 1},  {"F4", 2},  {"F4", 3},  {"G2", 1}, {"G2", 2}};
}

inline BundleOnCubic table1_bundle(GroupId g, std::size_t alpha, int k, CurveKind c) {
    return evaluate_bundle(expression(g, alpha, k), c);
}

/// Expected h0: zero everywhere except E8, k=1 on the cuspidal curve.
inline long expected_h0(GroupId g, int k, CurveKind c) {
    return (g.series == Series::E && g.rank == 8 && k == 1 && c == CurveKind::Cuspidal) ? 1 : 0;
}

struct RowResult {
    GroupId group;
    std::size_t alpha = 0;
    int k = 0;
    CurveKind curve = CurveKind::Nodal;
    std::string expression;
    std::size_t rank = 0, expected_rank = 0;
    long degree = 0, expected_degree = 0;
    std::vector<int> twists, expected_twists;
    long h0 = 0, expected_h0 = 0;
    long h1 = 0;
    std::optional<long> unsimplified_h0;

    bool rank_ok() const { return rank == expected_rank; }
    bool degree_ok() const { return degree == expected_degree; }
    bool twists_ok() const { return twists == expected_twists; }
    bool h0_ok() const { return h0 == expected_h0 && (!unsimplified_h0 || *unsimplified_h0 == h0); }
    bool pass() const { return rank_ok() && degree_ok() && twists_ok() && h0_ok(); }
};

struct SumResult {
    GroupId group;
    std::size_t alpha = 0;
    CurveKind curve = CurveKind::Nodal;
    long sum_h1 = 0, expected = 0;
    bool pass() const { return sum_h1 == expected; }
};

struct Report {
    std::vector<RowResult> rows;
    std::vector<SumResult> sums;
    bool pass() const {
        for (const auto& r : rows)
            if (!r.pass())
                return false;
        for (const auto& s : sums)
            if (!s.pass())
                return false;
        return true;
    }
};

inline RowResult check_row(const RootSystem& rs, std::size_t alpha, int k, CurveKind c) {
    const GroupId g = *rs.group();
    RowResult res;
    res.group = g;
    res.alpha = alpha;
    res.k = k;
    res.curve = c;
    res.expression = expression(g, alpha, k);
    const BundleOnCubic v = evaluate_bundle(res.expression, c);
    res.rank = v.rank();
    res.expected_rank = rootsys::uk_dimension(rs, alpha, k);
    res.degree = v.degree();
    res.expected_degree = -rootsys::i_of_k(rs, k);
    res.twists = v.sorted_twists();
    res.expected_twists = rootsys::pullback_degree_multiset(rs, alpha, k);
    res.h0 = h0(v);
    res.h1 = h1(v);
    res.expected_h0 = expected_h0(g, k, c);
    if (auto alt = unsimplified_expression(g, k))
        res.unsimplified_h0 = h0(evaluate_bundle(*alt, c));
    return res;
}

/// (group, special root) instances covered by the sweep; A and the classical
/// series are swept over a range of ranks.
struct Instance {
    GroupId group;
    std::size_t alpha;
};

inline std::vector<Instance> sweep_instances(std::optional<GroupId> only = std::nullopt) {
    std::vector<GroupId> groups;
    if (only) {
        groups.push_back(*only);
    } else {
        for (int r = 1; r <= 8; ++r)
            groups.push_back({Series::A, r});
        for (int r = 2; r <= 8; ++r)
            groups.push_back({Series::B, r});
        for (int r = 2; r <= 8; ++r)
            groups.push_back({Series::C, r});
        for (int r = 4; r <= 8; ++r)
            groups.push_back({Series::D, r});
        for (int r = 6; r <= 8; ++r)
            groups.push_back({Series::E, r});
        groups.push_back({Series::F, 4});
        groups.push_back({Series::G, 2});
    }
    std::vector<Instance> out;
    for (const auto& g : groups) {
        const auto rs = rootsys::build_root_system(g);
        for (const auto& sp : rootsys::special_roots(rs))
            out.push_back({g, sp.alpha});
    }
    return out;
}

inline Report verify_table1(CurveKind c, std::optional<GroupId> only = std::nullopt) {
    Report rep;
    for (const auto& inst : sweep_instances(only)) {
        const auto rs = rootsys::build_root_system(inst.group);
        SumResult sum;
        sum.group = inst.group;
        sum.alpha = inst.alpha;
        sum.curve = c;
        const int top = static_cast<int>(rootsys::max_level(rs, inst.alpha));
        for (int k = 1; k <= top; ++k) {
            rep.rows.push_back(check_row(rs, inst.alpha, k, c));
            sum.sum_h1 += rep.rows.back().h1;
        }
        const bool e8_cusp = inst.group.series == Series::E && inst.group.rank == 8 && c == CurveKind::Cuspidal;
        sum.expected = e8_cusp ? 10 : inst.group.rank + 1;
        rep.sums.push_back(sum);
    }
    return rep;
}

/// Maps a concrete row back to its printed label.
inline RowLabel label_of(GroupId g, int k) {
    switch (g.series) {
    case Series::A: return {"A_{n-1}", k};
    case Series::B: return {"B_n", k};
    case Series::C: return {"C_n", k};
    case Series::D: return {"D_n", k};
    default: return {g.name(), k};
    }
}

} // namespace ellipstab::table1
