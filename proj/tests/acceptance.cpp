// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.

#include "ellipstab/ellipstab.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace ellipstab;
using rootsys::GroupId;
using rootsys::Series;

namespace {

constexpr CurveKind kCurves[] = {CurveKind::Nodal, CurveKind::Cuspidal};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

Outcome table1_rows() {
    Outcome o;
    std::size_t rows = 0;
    std::set<std::pair<std::string, int>> labels;
    for (auto c : kCurves) {
        const auto rep = table1::verify_table1(c);
        for (const auto& r : rep.rows) {
            ++rows;
            labels.insert({table1::label_of(r.group, r.k).group, r.k});
            const std::string id = r.group.name() + " k=" + std::to_string(r.k) + " " + to_string(c);
            o.require(r.rank_ok(), id + " rank");
            o.require(r.degree_ok(), id + " degree");
            o.require(r.twists_ok(), id + " twists");
            o.require(r.h0_ok(), id + " h0=" + std::to_string(r.h0));
        }
    }
    for (const auto& l : table1::row_labels())
        o.require(labels.count({l.group, l.k}) == 1, "row " + l.group + " k=" + std::to_string(l.k) + " not swept");
    o.detail << rows << " rows over both curves, " << labels.size() << "/24 table rows covered";
    return o;
}

Outcome h1_sums() {
    Outcome o;
    std::size_t n = 0;
    for (auto c : kCurves)
        for (const auto& s : table1::verify_table1(c).sums) {
            ++n;
            o.require(s.pass(), s.group.name() + " " + to_string(c) + " sum " + std::to_string(s.sum_h1));
        }
    o.detail << n << " (group, special root, curve) sums";
    return o;
}

Outcome specific_values() {
    Outcome o;
    auto h0s = [](const std::string& e, CurveKind c) { return h0(evaluate_bundle(e, c)); };
    auto h1s = [](const std::string& e, CurveKind c) { return h1(evaluate_bundle(e, c)); };
    for (auto c : kCurves) {
        for (int n = 1; n <= 4; ++n) {
            const std::string e = "W" + std::to_string(n) + "*Wd" + std::to_string(n + 1);
            o.require(h0s(e, c) == 1 && h1s(e, c) == 0, e + " " + to_string(c));
        }
        o.require(h1s("W2*Wd3*Wd3", c) == 3, "h1(W2*Wd3*Wd3) " + to_string(c));
    }
    o.require(h1s("W2*Wd3*Wd4", CurveKind::Cuspidal) == 2, "h1(W2*Wd3*Wd4) cuspidal");
    o.require(h0s("W2*Wd3*Wd5", CurveKind::Cuspidal) == 1, "h0(W2*Wd3*Wd5) cuspidal");
    o.require(h0s("W2*Wd3*Wd5", CurveKind::Nodal) == 0, "h0(W2*Wd3*Wd5) nodal");
    o.detail << "section-space values of the W_n products";
    return o;
}

Outcome riemann_roch() {
    Outcome o;
    std::mt19937_64 rng(0xacce55);
    std::size_t n = 0;
    for (auto c : kCurves)
        for (int i = 0; i < 500; ++i) {
            const auto e = random_bundle_expr(rng, 3, 24);
            const auto v = evaluate<Rational>(*e, c);
            o.require(h0(v) - h1(v) == v.degree(), to_string(*e) + " " + to_string(c));
            ++n;
        }
    o.detail << n << " random expressions, h1 computed as h0 of the dual";
    return o;
}

Outcome semistability_bridge() {
    Outcome o;
    std::mt19937_64 rng(0x5e415);
    std::size_t checks = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        const auto v = i % 2 ? adjquot::bundle_from_datum(adjquot::random_traceless(rng, n))
                             : adjquot::bundle_from_datum(adjquot::random_unimodular(rng, n));
        for (int k = 1; k <= static_cast<int>(n); ++k) {
            o.require(!is_unstable_deg0(wedge(v, k), rng()), "wedge^" + std::to_string(k) + " sample " + std::to_string(i));
            ++checks;
        }
        for (int k = 1; k <= 3; ++k) {
            o.require(!is_unstable_deg0(sym(v, k), rng()), "sym^" + std::to_string(k) + " sample " + std::to_string(i));
            ++checks;
        }
    }
    // Pullback twists (a, -1, ..., ) with some a >= 2, arbitrary gluing.
    std::size_t unstable = 0;
    for (int i = 0; i < 50; ++i) {
        const CurveKind c = kCurves[i % 2];
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        std::vector<int> tw(n, 0);
        tw[0] = 2 + i % 2;
        int left = -tw[0];
        for (std::size_t j = 1; j < n; ++j) {
            const int share = j + 1 == n ? left : std::uniform_int_distribution<int>(left, 1)(rng);
            tw[j] = share;
            left -= share;
        }
        std::shuffle(tw.begin(), tw.end(), rng);
        const RationalMatrix glue = c == CurveKind::Nodal ? adjquot::random_gl(rng, n) : [&] {
            RationalMatrix m(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    m(a, b) = random_rational(rng, 5);
            return m;
        }();
        o.require(is_unstable_deg0(BundleOnCubic(c, tw, glue), rng()), "twist>=2 bundle " + std::to_string(i));
        ++unstable;
    }
    o.detail << checks << " power checks on 50 trivial-pullback data, " << unstable << " twist>=2 bundles";
    return o;
}

Outcome etale_oracle() {
    Outcome o;
    const auto cmp = cyclecover::compare_with_oracle(6, 3, 0xe7a1e);
    o.require(cmp.disagreements.empty() && cmp.agreements == cmp.checked, "oracle disagreement");
    o.detail << cmp.agreements << "/" << cmp.checked << " samples agree";
    return o;
}

Outcome wedge_dichotomy() {
    Outcome o;
    std::size_t reports = 0;
    for (int n = 2; n <= 8; ++n)
        for (int a = 1; a < n; ++a) {
            const auto rep = cyclecover::sln_wedge_report(a, n - a, true, 0xd1c0 + static_cast<unsigned>(n * 10 + a));
            o.require(rep.consistent(), "a=" + std::to_string(a) + " b=" + std::to_string(n - a));
            ++reports;
        }
    o.detail << reports << " (a, b) pairs, each checked against the bundle oracle";
    return o;
}

Outcome sections_roundtrip() {
    Outcome o;
    std::mt19937_64 rng(0xc0ffee);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        std::vector<Rational> v;
        for (std::size_t j = 0; j + 1 < n; ++j)
            v.push_back(random_rational(rng, 20));
        if (i % 2) {
            const auto c = adjquot::cuspidal_invariants_from_tail(v);
            const auto s = adjquot::kostant_section(c);
            o.require(adjquot::invariants_cuspidal(s) == c && adjquot::is_regular_cuspidal(s), "kostant " + std::to_string(i));
        } else {
            const auto c = adjquot::nodal_invariants_from_head(v);
            const auto s = adjquot::steinberg_section(c);
            o.require(adjquot::invariants_nodal(s) == c && adjquot::is_regular_nodal(s), "steinberg " + std::to_string(i));
        }
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        o.require(adjquot::scaling_check(adjquot::random_traceless(rng, n), random_rational(rng, 9, true)),
                  "scaling " + std::to_string(i));
    }
    o.detail << "100 section round trips (n <= 6), 100 scaling checks";
    return o;
}

Outcome root_identities() {
    Outcome o;
    std::size_t groups = 0, surgeries = 0;
    for (const auto& g : rootsys::all_groups(8)) {
        ++groups;
        const auto rs = rootsys::build_root_system(g);
        const auto cm = rootsys::comarks(rs);
        int ik = 0;
        for (int k = 1; k <= *std::max_element(cm.begin(), cm.end()); ++k)
            ik += rootsys::i_of_k(rs, k);
        o.require(ik == g.rank + 1, g.name() + " sum i(k)");
        int ex = 0;
        for (int d : rootsys::casimir_weights(rs))
            ex += d - 1;
        o.require(static_cast<std::size_t>(ex) == rs.positive_roots().size(), g.name() + " exponents");
        for (const auto& sp : rootsys::special_roots(rs)) {
            o.require(rootsys::lambda1_coroot_identity(rs, sp.alpha), g.name() + " lambda_1 coroot");
            for (std::size_t j = 0; j < rs.rank(); ++j)
                if (rs.adjacent(sp.alpha, j) && rs.simple_length(j) == rs.long_length()) {
                    const auto res = rootsys::parabolic_induction_surgery(rs, sp.alpha, j);
                    o.require(res.violations == 0, g.name() + " surgery");
                    ++surgeries;
                }
        }
        for (std::size_t d = 0; d < rs.rank(); ++d)
            if (rootsys::is_minuscule(rs, d))
                o.require(cm[d + 1] == 1, g.name() + " minuscule comark");
    }
    const auto e6 = rootsys::build_root_system({Series::E, 6});
    const auto e7 = rootsys::build_root_system({Series::E, 7});
    o.require(rootsys::weight_orbit_size(e6, 0) == 27, "E6 orbit");
    o.require(rootsys::weight_orbit_size(e7, 6) == 56, "E7 orbit");
    o.detail << groups << " groups, " << surgeries << " surgeries";
    return o;
}

Outcome numerology() {
    Outcome o;
    using namespace moduli;
    const auto a = conformal_twists({2, 3, 5});
    o.require(a.twists && *a.twists == std::vector<long>{7, 4, 1} && a.values == std::vector<long>{15, 15, 15},
              "(2,3,5)");
    const auto e7 = conformal_twists({2, 3, 4}, e7_conformal_relation());
    o.require(e7.twists && *e7.twists == std::vector<long>{0, -1, -1}, "E7 relation");
    for (int n = 3; n <= 64; ++n) {
        const auto b = conformal_twists({2, n - 1});
        o.require(!b.twists == (n % 4 == 1) && (b.twists || !b.certificate.empty()), "B" + std::to_string(n));
    }
    for (int n = 4; n <= 64; ++n) {
        const auto d = conformal_twists({2, 2, n - 2});
        o.require(!d.twists == (n % 4 == 2) && (d.twists || !d.certificate.empty()), "D" + std::to_string(n));
    }
    o.require(weighted_tensor(e8_affine_data(), -4, 1).degrees() ==
                  std::vector<long>{0, -2, -6, -8, -12, -14, -18, -20, -24, -30},
              "E8 normalization");
    o.detail << "B_n and D_n scanned for n <= 64";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table rows", table1_rows},
        {"h1 sums", h1_sums},
        {"specific values", specific_values},
        {"Riemann-Roch", riemann_roch},
        {"semistability of associated bundles", semistability_bridge},
        {"etale oracle", etale_oracle},
        {"wedge dichotomy", wedge_dichotomy},
        {"section round trips and scaling", sections_roundtrip},
        {"root identities", root_identities},
        {"numerology", numerology},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail.str() << " [" << std::fixed << std::setprecision(2) << secs << "s]\n";
    }
    return failures == 0 ? 0 : 1;
}
