// Command-line front end. Every subcommand builds a Report; the exit code is 0
// iff every check in it passed.

#include "ellipstab/ellipstab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace ellipstab;
using rootsys::GroupId;
using rootsys::Series;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::string join(const auto& v, const char* sep = ",") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : v) {
        if (!first)
            os << sep;
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
            os << to_string(x);
        else
            os << x;
    }
    return os.str();
}

std::string set_str(const auto& v) { return "{" + join(v) + "}"; }

std::string matrix_str(const RationalMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ";" : "";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? "," : "") + to_string(m(i, j));
    }
    return s + "]";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size())
            throw Error("malformed integer '" + t + "' in '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    if (s.empty())
        return out;
    for (const auto& t : split(s, ','))
        out.push_back(parse_rational(t));
    return out;
}

RationalMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : split(s, ';'))
        rows.push_back(parse_rationals(r));
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw Error("matrix rows have different lengths");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<CurveKind> parse_curves(const std::string& s) {
    if (s == "both")
        return {CurveKind::Nodal, CurveKind::Cuspidal};
    return {parse_curve_kind(s)};
}

/// 1-based node index from the command line to the library's 0-based one.
std::optional<std::size_t> node_index(int one_based, const rootsys::RootSystem& rs) {
    if (one_based == 0)
        return std::nullopt;
    if (one_based < 1 || static_cast<std::size_t>(one_based) > rs.rank())
        throw Error("node index " + std::to_string(one_based) + " out of range 1.." + std::to_string(rs.rank()));
    return static_cast<std::size_t>(one_based - 1);
}

// --- roots -----------------------------------------------------------------

struct RootsOpts {
    std::string group;
    bool special = false, comarks = false, casimir = false, minuscule = false;
};

void cmd_roots(const RootsOpts& o, Report& rep) {
    const auto g = GroupId::parse(o.group);
    const auto rs = rootsys::build_root_system(g);
    const bool all = !(o.special || o.comarks || o.casimir || o.minuscule);
    rep.query("group", g.name());
    rep.query("positive roots", std::to_string(rs.positive_roots().size()));
    rep.check("positive root count", std::to_string(rootsys::expected_positive_count(g)),
              std::to_string(rs.positive_roots().size()));
    if (all || o.comarks) {
        const auto cm = rootsys::comarks(rs);
        rep.query("comarks g0..gr", join(cm));
        auto sorted = cm;
        std::sort(sorted.begin(), sorted.end());
        rep.query("comark multiset", set_str(sorted));
        std::vector<int> ik;
        for (int k = 1; k <= sorted.back(); ++k)
            ik.push_back(rootsys::i_of_k(rs, k));
        rep.query("i(k), k = 1..", join(ik));
    }
    if (all || o.casimir) {
        const auto d = rootsys::casimir_weights(rs);
        rep.query("casimir weights", join(d));
        int ex = 0;
        for (int x : d)
            ex += x - 1;
        rep.check("exponent sum = |R+|", std::to_string(rs.positive_roots().size()), std::to_string(ex));
    }
    if (all || o.special) {
        const auto sp = rootsys::special_roots(rs);
        std::vector<std::size_t> nodes;
        for (const auto& s : sp)
            nodes.push_back(s.alpha + 1);
        rep.query("special nodes", nodes.empty() ? "none" : join(nodes));
        for (const auto& s : sp) {
            const std::string tag = "node " + std::to_string(s.alpha + 1);
            rep.query(tag + " levi blocks", join(s.levi_blocks));
            rep.check_bool(tag + " lambda_1 coroot = sum of simple coroots",
                           rootsys::lambda1_coroot_identity(rs, s.alpha));
        }
    }
    if (all || o.minuscule) {
        std::vector<std::size_t> mins;
        for (std::size_t d = 0; d < rs.rank(); ++d)
            if (rootsys::is_minuscule(rs, d))
                mins.push_back(d + 1);
        rep.query("minuscule nodes", mins.empty() ? "none" : join(mins));
        std::vector<std::string> quasi;
        for (const auto& a : rootsys::admissible_fundamental_weights(rs))
            if (a.quasi_minuscule)
                quasi.push_back(std::to_string(a.delta + 1) + " (dim " + a.dimension.get_str() + ")");
        rep.query("quasi-minuscule admissible nodes", quasi.empty() ? "none" : join(quasi, ", "));
        const auto cm = rootsys::comarks(rs);
        for (auto m : mins)
            rep.check("node " + std::to_string(m) + " minuscule comark", "1", std::to_string(cm[m]));
    }
}

// --- table1 ----------------------------------------------------------------

struct Table1Opts {
    std::string group, curve = "both";
    int alpha = 0;
};

void cmd_table1(const Table1Opts& o, Report& rep, nlohmann::json& extra) {
    std::optional<GroupId> only;
    if (o.alpha && o.group.empty())
        throw Error("--alpha needs --group");
    if (!o.group.empty())
        only = GroupId::parse(o.group);
    auto& rows = extra["rows"] = nlohmann::json::array();
    for (auto c : parse_curves(o.curve)) {
        table1::Report tr;
        if (only && o.alpha) {
            const auto rs = rootsys::build_root_system(*only);
            const auto a = rootsys::resolve_special(rs, node_index(o.alpha, rs));
            table1::SumResult sum{*only, a, c, 0, table1::verify_table1(c, only).sums.front().expected};
            for (int k = 1; k <= static_cast<int>(rootsys::max_level(rs, a)); ++k) {
                tr.rows.push_back(table1::check_row(rs, a, k, c));
                sum.sum_h1 += tr.rows.back().h1;
            }
            tr.sums.push_back(sum);
        } else {
            tr = table1::verify_table1(c, only);
        }
        for (const auto& r : tr.rows) {
            const std::string id = r.group.name() + " node " + std::to_string(r.alpha + 1) + " k=" +
                                   std::to_string(r.k) + " " + to_string(c);
            std::ostringstream want, got;
            want << "rank=" << r.expected_rank << " deg=" << r.expected_degree << " twists="
                 << set_str(r.expected_twists) << " h0=" << r.expected_h0;
            got << "rank=" << r.rank << " deg=" << r.degree << " twists=" << set_str(r.twists) << " h0=" << r.h0;
            rep.check(id + " " + r.expression, want.str(), got.str());
            if (r.unsimplified_h0)
                rep.check(id + " unsimplified form h0", std::to_string(r.h0), std::to_string(*r.unsimplified_h0));
            rows.push_back({{"group", r.group.name()},
                            {"node", std::to_string(r.alpha + 1)},
                            {"k", std::to_string(r.k)},
                            {"curve", to_string(c)},
                            {"expression", r.expression},
                            {"rank", std::to_string(r.rank)},
                            {"degree", std::to_string(r.degree)},
                            {"h0", std::to_string(r.h0)},
                            {"h1", std::to_string(r.h1)}});
        }
        for (const auto& s : tr.sums)
            rep.check(s.group.name() + " node " + std::to_string(s.alpha + 1) + " " + to_string(c) + " sum h1",
                      std::to_string(s.expected), std::to_string(s.sum_h1));
    }
}

// --- bundle ----------------------------------------------------------------

struct BundleOpts {
    std::string expr, curve = "nodal";
    bool h0 = false, h1 = false, deg = false, unstable = false;
};

void cmd_bundle(const BundleOpts& o, Report& rep) {
    const auto e = parse_bundle_expr(o.expr);
    const bool all = !(o.h0 || o.h1 || o.deg || o.unstable);
    for (auto c : parse_curves(o.curve)) {
        const auto v = evaluate<Rational>(*e, c);
        const std::string p = to_string(c) + " ";
        if (all) {
            rep.query(p + "expression", to_string(*e));
            rep.query(p + "rank", std::to_string(v.rank()));
            rep.query(p + "pullback twists", set_str(v.sorted_twists()));
        }
        if (all || o.deg)
            rep.query(p + "degree", std::to_string(v.degree()));
        const long a = h0(v), b = h1(v);
        if (all || o.h0)
            rep.query(p + "h0", std::to_string(a));
        if (all || o.h1)
            rep.query(p + "h1", std::to_string(b));
        if (all)
            rep.check(p + "h0 - h1 = deg", std::to_string(v.degree()), std::to_string(a - b));
        if (o.unstable || (all && v.degree() == 0)) {
            const auto g = generic_h0(v, rep.seed);
            rep.query(p + "generic h0", std::to_string(g.h0) + (g.used_symbolic ? " (symbolic)" : ""));
            rep.query(p + "unstable", g.h0 > 0 ? "true" : "false");
            if (v.degree() != 0)
                throw Error("instability test requires degree 0, got " + std::to_string(v.degree()));
        }
    }
}

// --- etale -----------------------------------------------------------------

struct EtaleOpts {
    std::string degrees, gluings;
    int wedge = 0;
    bool oracle = false;
};

void cmd_etale(const EtaleOpts& o, Report& rep) {
    const cyclecover::MultiDegree d(parse_ints(o.degrees));
    std::mt19937_64 rng(rep.seed);
    std::vector<Rational> gl = o.gluings.empty() ? cyclecover::random_gluings(rng, d.n()) : parse_rationals(o.gluings);
    if (!o.gluings.empty())
        cyclecover::pushforward_bundle(d, gl);
    rep.query("multidegree", join(d.degrees));
    if (o.wedge == 0) {
        const bool ss = cyclecover::is_semistable(d);
        rep.query("semistable", ss ? "true" : "false");
        rep.query("strongly indecomposable", cyclecover::is_strongly_indecomposable(d) ? "true" : "false");
        if (o.oracle) {
            const auto v = cyclecover::pushforward_bundle(d, gl);
            rep.query("gluings", join(gl));
            rep.check("bundle oracle agrees", ss ? "semistable" : "unstable",
                      is_unstable_deg0(v, rng()) ? "unstable" : "semistable");
        }
        return;
    }
    const auto cycles = cyclecover::wedge_cycles(d, o.wedge);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        rep.query("cycle " + std::to_string(i + 1) + " degrees", join(cycles[i].degrees));
    const bool ss = cyclecover::wedge_is_semistable(d, o.wedge);
    rep.query("wedge " + std::to_string(o.wedge), ss ? "semistable" : "unstable");
    if (o.oracle) {
        const auto v = wedge(cyclecover::pushforward_bundle(d, gl), o.wedge);
        rep.check("bundle oracle agrees", ss ? "semistable" : "unstable",
                  is_unstable_deg0(v, rng()) ? "unstable" : "semistable");
    }
}

// --- adjoint ---------------------------------------------------------------

struct AdjointOpts {
    std::string mode, invariants, matrix, curve = "cuspidal";
    int n = 0;
};

void cmd_adjoint(const AdjointOpts& o, Report& rep) {
    if (o.mode == "kostant" || o.mode == "steinberg") {
        const auto vals = parse_rationals(o.invariants);
        if (o.n < 1 || vals.size() + 1 != static_cast<std::size_t>(o.n))
            throw Error("--invariants needs n-1 values for --n " + std::to_string(o.n));
        if (o.mode == "kostant") {
            const auto c = adjquot::cuspidal_invariants_from_tail(vals);
            const auto s = adjquot::kostant_section(c);
            rep.query("section", matrix_str(s.x));
            rep.check("invariants round trip", join(c.c), join(adjquot::invariants_cuspidal(s).c));
            rep.check_bool("regular", adjquot::is_regular_cuspidal(s));
        } else {
            const auto c = adjquot::nodal_invariants_from_head(vals);
            const auto s = adjquot::steinberg_section(c);
            rep.query("section", matrix_str(s.g));
            rep.check("invariants round trip", join(c.c), join(adjquot::invariants_nodal(s).c));
            rep.check_bool("regular", adjquot::is_regular_nodal(s));
        }
        return;
    }
    if (o.mode == "invariants") {
        const auto m = parse_matrix(o.matrix);
        const bool cusp = parse_curve_kind(o.curve) == CurveKind::Cuspidal;
        const auto v = cusp ? adjquot::bundle_from_datum(adjquot::CuspidalDatum(m))
                            : adjquot::bundle_from_datum(adjquot::NodalDatum(m));
        const auto inv = adjquot::char_invariants(m);
        rep.query("invariants c1..cn", join(inv.c));
        rep.query("centralizer dimension", std::to_string(adjquot::centralizer_dimension(m)));
        rep.query("regular", adjquot::centralizer_dimension(m) == m.rows() ? "true" : "false");
        rep.query("h0 of bundle", std::to_string(h0(v)));
        for (int k = 1; k <= static_cast<int>(m.rows()); ++k)
            rep.check_bool("wedge " + std::to_string(k) + " semistable", !is_unstable_deg0(wedge(v, k), rep.seed));
        return;
    }
    if (o.mode == "scaling") {
        std::mt19937_64 rng(rep.seed);
        const std::size_t n = o.n > 0 ? static_cast<std::size_t>(o.n) : 3;
        for (int i = 0; i < 10; ++i) {
            const auto x = adjquot::random_traceless(rng, n);
            const auto mu = random_rational(rng, 9, true);
            rep.check_bool("scaling by " + to_string(mu), adjquot::scaling_check(x, mu));
        }
        return;
    }
    throw Error("unknown adjoint mode '" + o.mode + "' (kostant, steinberg, invariants, scaling)");
}

// --- moduli ----------------------------------------------------------------

struct ModuliOpts {
    std::string group, blocks, relation;
    bool weights = false, pairing = false, affine = false, unique = false, conformal = false;
    long tensor_m = 0, tensor_n = 1;
};

void decomposition_items(Report& rep, const std::string& name, const moduli::WeightedDecomposition& d) {
    std::vector<std::string> p;
    for (const auto& [w, e] : d.pairs)
        p.push_back("(" + std::to_string(w) + "," + std::to_string(e) + ")");
    rep.query(name, join(p));
}

void conformal_items(Report& rep, const std::vector<int>& blocks, std::optional<moduli::ConformalRelation> rel) {
    const auto r = moduli::conformal_twists(blocks, rel);
    rep.query("blocks", join(blocks));
    if (!r.twists) {
        rep.query("twists", "none");
        rep.query("certificate", r.certificate_text);
        return;
    }
    rep.query("twists", join(*r.twists));
    rep.query("values N_i", join(r.values));
}

void cmd_moduli(const ModuliOpts& o, Report& rep) {
    const bool none = !(o.weights || o.pairing || o.affine || o.unique || o.conformal || !o.blocks.empty());
    std::optional<GroupId> g;
    if (!o.group.empty())
        g = GroupId::parse(o.group);
    if (!o.blocks.empty()) {
        std::optional<moduli::ConformalRelation> rel;
        if (!o.relation.empty()) {
            std::vector<long> c;
            for (int x : parse_ints(o.relation))
                c.push_back(x);
            rel = moduli::ConformalRelation::single(c);
        }
        conformal_items(rep, parse_ints(o.blocks), rel);
    }
    if (!g) {
        if (o.blocks.empty())
            throw Error("moduli needs a group or --blocks");
        return;
    }
    const bool e8 = g->series == Series::E && g->rank == 8;
    if (none || o.weights) {
        const auto w = moduli::wp_weights(*g);
        rep.query("weights g0..gr", join(w));
    }
    if (none || o.unique)
        rep.query("unique extension", moduli::admits_unique_extension(moduli::wp_weights(*g)) ? "true" : "false");
    if (o.pairing || (none && !e8)) {
        if (e8)
            throw Error("E8 has no (g_i, d_i) pairing of this shape; use --affine");
        const auto p = moduli::casimir_pairing(*g);
        decomposition_items(rep, "pairing (weight, degree)", p);
        if (o.tensor_m != 0)
            decomposition_items(rep, "weighted tensor", moduli::weighted_tensor(p, o.tensor_m, o.tensor_n));
    }
    if (o.affine || (none && e8)) {
        if (!e8)
            throw Error("--affine is only defined for E8");
        const auto d = moduli::e8_affine_data();
        decomposition_items(rep, "affine data (weight, degree)", d);
        const auto norm = moduli::weighted_tensor(d, o.tensor_m ? o.tensor_m : -4, o.tensor_m ? o.tensor_n : 1);
        decomposition_items(rep, "normalized", norm);
        if (!o.tensor_m)
            rep.check("normalized degrees", "0,-2,-6,-8,-12,-14,-18,-20,-24,-30", join(norm.degrees()));
    }
    if (o.conformal) {
        const auto rs = rootsys::build_root_system(*g);
        const auto sp = rootsys::special_roots(rs);
        if (sp.size() != 1)
            throw Error("--conformal needs a type with a unique special root");
        std::optional<moduli::ConformalRelation> rel;
        if (g->series == Series::E && g->rank == 7)
            rel = moduli::e7_conformal_relation();
        conformal_items(rep, sp.front().levi_blocks, rel);
    }
}

nlohmann::json report_json(const Report& r, const nlohmann::json& extra) {
    nlohmann::json j;
    j["command"] = r.command;
    j["seed"] = std::to_string(r.seed);
    j["items"] = nlohmann::json::array();
    for (const auto& i : r.items)
        j["items"].push_back(
            {{"name", i.name}, {"expected", i.expected}, {"computed", i.computed}, {"pass", i.pass}, {"source", i.source}});
    j["summary"] = {{"total", std::to_string(r.items.size())},
                    {"passed", std::to_string(r.passed())},
                    {"failed", std::to_string(r.failed())}};
    for (auto it = extra.begin(); it != extra.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for bundles on singular cubics and root data"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("ELLIPSTAB_SEED"))
        seed = std::strtoull(env, nullptr, 0);
    app.add_flag("--json", json, "Emit one JSON object instead of text");
    app.add_option("--seed", seed, "Seed for every randomized evaluation (env ELLIPSTAB_SEED)");

    RootsOpts ro;
    auto* roots = app.add_subcommand("roots", "Root-system tables");
    roots->add_option("group", ro.group, "Group such as E8 or D5")->required();
    roots->add_flag("--special", ro.special, "Special nodes and Levi blocks");
    roots->add_flag("--comarks", ro.comarks, "Comarks and i(k)");
    roots->add_flag("--casimir", ro.casimir, "Casimir weights");
    roots->add_flag("--minuscule", ro.minuscule, "Minuscule and quasi-minuscule nodes");

    Table1Opts to;
    auto* t1 = app.add_subcommand("table1", "Sweep the graded pieces of the unipotent radical");
    t1->add_option("--group", to.group, "Restrict to one group");
    t1->add_option("--curve", to.curve, "nodal, cuspidal or both")->check(CLI::IsMember({"nodal", "cuspidal", "both"}));
    t1->add_option("--alpha", to.alpha, "Special node (1-based); needed to single out one node in type A");

    BundleOpts bo;
    auto* bundle = app.add_subcommand("bundle", "Evaluate a bundle expression");
    bundle->add_option("expr", bo.expr, "Expression, e.g. W2*dual(W3)")->required();
    bundle->add_option("--curve", bo.curve, "nodal, cuspidal or both")->check(CLI::IsMember({"nodal", "cuspidal", "both"}));
    bundle->add_flag("--h0", bo.h0);
    bundle->add_flag("--h1", bo.h1);
    bundle->add_flag("--deg", bo.deg);
    bundle->add_flag("--unstable", bo.unstable, "Generic degree-zero twist test (degree 0 only)");

    EtaleOpts eo;
    auto* etale = app.add_subcommand("etale", "Line bundles on the cycle cover of a nodal cubic");
    etale->add_option("degrees", eo.degrees, "Multidegree, e.g. 1,-1,0,0")->required();
    etale->add_option("--wedge", eo.wedge, "Exterior power k");
    etale->add_flag("--oracle", eo.oracle, "Compare with the bundle-level instability test");
    etale->add_option("--gluings", eo.gluings, "Nonzero gluing scalars (random if omitted)");

    AdjointOpts ao;
    auto* adjoint = app.add_subcommand("adjoint", "Type A adjoint quotient");
    adjoint->add_option("mode", ao.mode, "kostant, steinberg, invariants or scaling")->required();
    adjoint->add_option("--n", ao.n, "Matrix size");
    adjoint->add_option("--invariants", ao.invariants, "c2..cn (kostant) or c1..c(n-1) (steinberg)");
    adjoint->add_option("--matrix", ao.matrix, "Rows separated by ';', entries by ','");
    adjoint->add_option("--curve", ao.curve, "cuspidal (sl_n) or nodal (SL_n)");

    ModuliOpts mo;
    auto* mod = app.add_subcommand("moduli", "Weighted projective weights and twists");
    mod->add_option("group", mo.group, "Group such as E8");
    mod->add_flag("--weights", mo.weights);
    mod->add_flag("--pairing", mo.pairing, "(comark, Casimir degree) pairs");
    mod->add_flag("--affine", mo.affine, "The ten (weight, degree) pairs of E8");
    mod->add_flag("--unique", mo.unique, "gcd condition for unique extension");
    mod->add_flag("--conformal", mo.conformal, "Determinant twists on the Levi blocks of the special node");
    mod->add_option("--blocks", mo.blocks, "Explicit block sizes for the twist problem");
    mod->add_option("--relation", mo.relation, "Coefficients c_i of sum c_i N_i = 0 (default: all N_i equal)");
    mod->add_option("--tensor-m", mo.tensor_m, "Weighted tensor numerator m");
    mod->add_option("--tensor-n", mo.tensor_n, "Weighted tensor divisor n");

    CLI11_PARSE(app, argc, argv);

    Report rep;
    rep.seed = seed;
    for (int i = 1; i < argc; ++i)
        rep.command += (i > 1 ? " " : "") + std::string(argv[i]);
    nlohmann::json extra = nlohmann::json::object();
    try {
        if (*roots)
            cmd_roots(ro, rep);
        else if (*t1)
            cmd_table1(to, rep, extra);
        else if (*bundle)
            cmd_bundle(bo, rep);
        else if (*etale)
            cmd_etale(eo, rep);
        else if (*adjoint)
            cmd_adjoint(ao, rep);
        else if (*mod)
            cmd_moduli(mo, rep);
    } catch (const ParseError& e) {
        if (json)
            std::cout << nlohmann::json{{"command", rep.command},
                                        {"error", e.what()},
                                        {"position", std::to_string(e.position())}}
                             .dump(2)
                      << '\n';
        else
            std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        if (json)
            std::cout << nlohmann::json{{"command", rep.command}, {"error", e.what()}}.dump(2) << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    if (json)
        std::cout << report_json(rep, extra).dump(2) << '\n';
    else
        print_text(std::cout, rep);
    return rep.pass() ? 0 : 1;
}
