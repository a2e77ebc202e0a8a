#pragma once

// Simple root systems of types A-G and the root combinatorics of the
// parabolic construction: comarks, special roots, Casimir weights, the
// graded pieces of the unipotent radical, minuscule tests and the
// parabolic-induction surgery nu = alpha + m alpha_1.
//
// Simple roots follow Bourbaki numbering; the public API is 0-based, so
// Bourbaki node i is index i-1.
//   A_r  chain 1-2-...-r
//   B_r  chain, node r short
//   C_r  chain, nodes 1..r-1 short, node r long
//   D_r  chain 1-...-(r-1), plus the edge (r-2)-r
//   E_r  1-3-4-5-6-7-8 with 2 attached to 4
//   F_4  1-2=>3-4, nodes 1,2 long
//   G_2  1<=2, node 1 short
// The invariant form is normalized so long roots have squared length 2.

#include "ellipstab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ellipstab::rootsys {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct GroupId {
    Series series = Series::A;
    int rank = 1;

    static bool valid(Series s, int r) {
        switch (s) {
        case Series::A: return r >= 1;
        case Series::B: return r >= 2;
        case Series::C: return r >= 2;
        case Series::D: return r >= 3;
        case Series::E: return r >= 6 && r <= 8;
        case Series::F: return r == 4;
        case Series::G: return r == 2;
        }
        return false;
    }

    static GroupId make(Series s, int r) {
        if (!valid(s, r))
            throw Error("invalid group " + std::string(1, static_cast<char>(s)) + std::to_string(r));
        return {s, r};
    }

    /// Parses "E8", "d5", "A12".
    static GroupId parse(std::string_view text) {
        if (text.size() < 2)
            throw Error("malformed group '" + std::string(text) + "'");
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        if (c < 'A' || c > 'G')
            throw Error("unknown series in '" + std::string(text) + "'");
        int r = 0;
        for (char d : text.substr(1)) {
            if (d < '0' || d > '9' || r > 1000)
                throw Error("malformed rank in '" + std::string(text) + "'");
            r = r * 10 + (d - '0');
        }
        return make(static_cast<Series>(c), r);
    }

    std::string name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
    bool simply_laced() const {
        return series == Series::A || series == Series::D || series == Series::E;
    }
    friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Positive or negative root, in simple-root coordinates c_gamma(beta).
struct RootVector {
    std::vector<int> coeffs;
    Rational length_sq;

    int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
    int coeff(std::size_t i) const { return coeffs.at(i); }
    friend bool operator==(const RootVector& a, const RootVector& b) { return a.coeffs == b.coeffs; }
};

/// Coroot in simple-coroot coordinates.
struct CorootVector {
    std::vector<Rational> coeffs;
    friend bool operator==(const CorootVector&, const CorootVector&) = default;
};

struct SpecialRootData {
    std::size_t alpha = 0;
    std::vector<int> levi_blocks;
    std::size_t t() const { return levi_blocks.size(); }
};

class RootSystem {
  public:
    static RootSystem build(GroupId g) {
        g = GroupId::make(g.series, g.rank);
        const int r = g.rank;
        std::vector<Rational> len(r, Rational(2));
        std::vector<std::pair<int, int>> edges;
        auto chain = [&](int upto) {
            for (int i = 0; i + 1 < upto; ++i)
                edges.emplace_back(i, i + 1);
        };
        switch (g.series) {
        case Series::A: chain(r); break;
        case Series::B:
            chain(r);
            len[r - 1] = 1;
            break;
        case Series::C:
            chain(r);
            for (int i = 0; i + 1 < r; ++i)
                len[i] = 1;
            break;
        case Series::D:
            chain(r - 1);
            edges.emplace_back(r - 3, r - 1);
            break;
        case Series::E:
            edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
            for (int i = 4; i + 1 < r; ++i)
                edges.emplace_back(i, i + 1);
            break;
        case Series::F:
            chain(4);
            len[2] = len[3] = 1;
            break;
        case Series::G:
            chain(2);
            len[0] = Rational(2, 3);
            break;
        }
        // Every bond has (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2.
        std::vector<std::vector<int>> cartan(r, std::vector<int>(r, 0));
        for (int i = 0; i < r; ++i)
            cartan[i][i] = 2;
        for (auto [i, j] : edges) {
            const Rational ip = -std::max(len[i], len[j]) / 2;
            cartan[i][j] = cartan_entry(ip, len[j]);
            cartan[j][i] = cartan_entry(ip, len[i]);
        }
        RootSystem rs(std::move(cartan), std::move(len));
        rs.group_ = g;
        return rs;
    }

    /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
    /// lengths are the squared lengths of the simple roots.
    RootSystem(std::vector<std::vector<int>> cartan, std::vector<Rational> lengths)
        : cartan_(std::move(cartan)), lengths_(std::move(lengths)) {
        validate();
        const std::size_t r = rank();
        form_.assign(r, std::vector<Rational>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                form_[i][j] = Rational(cartan_[i][j]) * lengths_[j] / 2;
        enumerate();
    }

    const std::optional<GroupId>& group() const { return group_; }
    std::size_t rank() const { return cartan_.size(); }
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const Rational& simple_length(std::size_t i) const { return lengths_[i]; }
    const std::vector<RootVector>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }

    Rational inner(const std::vector<int>& a, const std::vector<int>& b) const {
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                if (a[i] && b[j])
                    s += a[i] * b[j] * form_[i][j];
        return s;
    }

    Rational long_length() const { return *std::max_element(lengths_.begin(), lengths_.end()); }
    bool is_long(const RootVector& b) const { return b.length_sq == long_length(); }

    /// <beta, alpha_i^vee>.
    int pairing_simple(const std::vector<int>& beta, std::size_t i) const {
        int s = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            s += beta[j] * cartan_[j][i];
        return s;
    }

    /// <beta, gamma^vee> for a coroot given in simple-coroot coordinates.
    Rational pairing(const std::vector<int>& beta, const CorootVector& cv) const {
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            if (!is_zero(cv.coeffs[i]))
                s += cv.coeffs[i] * pairing_simple(beta, i);
        return s;
    }

    /// beta^vee = 2 beta / (beta, beta); coefficient on alpha_i^vee is c_i |alpha_i|^2 / |beta|^2.
    CorootVector coroot(const RootVector& beta) const {
        CorootVector cv;
        cv.coeffs.resize(rank());
        for (std::size_t i = 0; i < rank(); ++i)
            cv.coeffs[i] = beta.coeffs[i] * lengths_[i] / beta.length_sq;
        return cv;
    }

    bool is_root(const std::vector<int>& coeffs) const { return roots_.count(coeffs) > 0; }

    std::optional<RootVector> find_root(const std::vector<int>& coeffs) const {
        if (!is_root(coeffs))
            return std::nullopt;
        return RootVector{coeffs, inner(coeffs, coeffs)};
    }

    const RootVector& highest_root() const { return positive_.back(); }

    /// The highest short root (the highest root when simply laced).
    RootVector highest_short_root() const {
        const Rational shortest = *std::min_element(lengths_.begin(), lengths_.end());
        const RootVector* best = nullptr;
        for (const auto& b : positive_)
            if (b.length_sq == shortest && (!best || b.height() > best->height()))
                best = &b;
        return *best;
    }

    /// Simple-root adjacency in the Dynkin diagram.
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && cartan_[i][j] != 0; }

  private:
    static int cartan_entry(const Rational& ip, const Rational& len_j) {
        Rational v = 2 * ip / len_j;
        if (v.get_den() != 1)
            throw Error("non-integral Cartan entry");
        return static_cast<int>(v.get_num().get_si());
    }

    void validate() const {
        const std::size_t r = cartan_.size();
        if (r == 0 || lengths_.size() != r)
            throw Error("Cartan matrix and length vector disagree in size");
        for (std::size_t i = 0; i < r; ++i) {
            if (cartan_[i].size() != r || cartan_[i][i] != 2)
                throw Error("Cartan matrix must be square with diagonal 2");
            if (sgn(lengths_[i]) <= 0)
                throw Error("simple root lengths must be positive");
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j)
                    continue;
                if (cartan_[i][j] > 0)
                    throw Error("Cartan off-diagonal entries must be <= 0");
                if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw Error("Cartan matrix zero pattern is not symmetric");
                if (cartan_[i][j] * lengths_[j] != cartan_[j][i] * lengths_[i])
                    throw Error("Cartan matrix is not symmetrized by the given lengths");
            }
        }
    }

    // Reflection-closure BFS over all roots; finite type keeps this <= 240.
    void enumerate() {
        const std::size_t r = rank();
        std::queue<std::vector<int>> todo;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<int> e(r, 0);
            e[i] = 1;
            roots_.insert(e);
            todo.push(e);
            for (auto& x : e)
                x = -x;
            roots_.insert(e);
            todo.push(e);
        }
        while (!todo.empty()) {
            std::vector<int> b = todo.front();
            todo.pop();
            for (std::size_t i = 0; i < r; ++i) {
                const int p = pairing_simple(b, i);
                if (p == 0)
                    continue;
                std::vector<int> s = b;
                s[i] -= p;
                if (roots_.insert(s).second) {
                    if (roots_.size() > 100000)
                        throw Error("root enumeration does not terminate: not of finite type");
                    todo.push(std::move(s));
                }
            }
        }
        for (const auto& c : roots_)
            if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }))
                positive_.push_back(RootVector{c, inner(c, c)});
        std::stable_sort(positive_.begin(), positive_.end(),
                         [](const RootVector& a, const RootVector& b) { return a.height() < b.height(); });
    }

    std::vector<std::vector<int>> cartan_;
    std::vector<Rational> lengths_;
    std::vector<std::vector<Rational>> form_;
    std::set<std::vector<int>> roots_;
    std::vector<RootVector> positive_;
    std::optional<GroupId> group_;
};

inline RootSystem build_root_system(GroupId g) { return RootSystem::build(g); }

/// Known |R+| for a group.
inline std::size_t expected_positive_count(GroupId g) {
    const std::size_t r = g.rank;
    switch (g.series) {
    case Series::A: return r * (r + 1) / 2;
    case Series::B:
    case Series::C: return r * r;
    case Series::D: return r * (r - 1);
    case Series::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
    }
    return 0;
}

/// Connected components of the Dynkin diagram restricted to `nodes`.
inline std::vector<std::vector<std::size_t>> components(const RootSystem& rs,
                                                        const std::vector<std::size_t>& nodes) {
    std::set<std::size_t> left(nodes.begin(), nodes.end());
    std::vector<std::vector<std::size_t>> out;
    while (!left.empty()) {
        std::vector<std::size_t> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto it = left.begin(); it != left.end();) {
                if (rs.adjacent(comp[k], *it)) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Dynkin type of a connected system, read off from (rank, |R+|, #short positive roots).
inline std::optional<GroupId> identify_type(const RootSystem& rs) {
    std::vector<std::size_t> all(rs.rank());
    std::iota(all.begin(), all.end(), 0);
    if (components(rs, all).size() != 1)
        return std::nullopt;
    const int r = static_cast<int>(rs.rank());
    std::size_t n_short = 0;
    for (const auto& b : rs.positive_roots())
        if (!rs.is_long(b))
            ++n_short;
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
        if (!GroupId::valid(s, r))
            continue;
        const GroupId g{s, r};
        if (g.series == Series::D && r == 3)
            continue; // D3 = A3
        if (g.series == Series::C && r == 2)
            continue; // C2 = B2
        if (expected_positive_count(g) != rs.num_positive())
            continue;
        std::size_t want_short = 0;
        switch (s) {
        case Series::B: want_short = r; break;
        case Series::C: want_short = r * (r - 1); break;
        case Series::F: want_short = 12; break;
        case Series::G: want_short = 3; break;
        default: break;
        }
        if (want_short == n_short)
            return g;
    }
    return std::nullopt;
}

/// Comarks (g_0 = 1, g_1, ..., g_r): coefficients of the coroot of the highest root.
inline std::vector<int> comarks(const RootSystem& rs) {
    const CorootVector cv = rs.coroot(rs.highest_root());
    std::vector<int> g{1};
    for (const auto& c : cv.coeffs) {
        if (c.get_den() != 1)
            throw Error("non-integral comark");
        g.push_back(static_cast<int>(c.get_num().get_si()));
    }
    return g;
}

/// Number of affine nodes (g_0 included) with comark k.
inline int i_of_k(const RootSystem& rs, int k) {
    if (k < 1)
        throw Error("i(k) requires k >= 1");
    const auto g = comarks(rs);
    return static_cast<int>(std::count(g.begin(), g.end(), k));
}

/// Degrees d_i = m_i + 1 of the basic invariants, non-decreasing. The
/// exponents are the conjugate partition of the height histogram of R+.
inline std::vector<int> casimir_weights(const RootSystem& rs) {
    std::map<int, int> by_height;
    for (const auto& b : rs.positive_roots())
        ++by_height[b.height()];
    std::vector<int> d;
    const int top = rs.highest_root().height();
    for (int h = 1; h <= top; ++h) {
        const int here = by_height[h];
        const int above = h < top ? by_height[h + 1] : 0;
        for (int k = 0; k < here - above; ++k)
            d.push_back(h + 1);
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// Simple roots alpha such that Delta - {alpha} is a union of A-type diagrams,
/// alpha meets each at an end, and alpha is long.
inline bool is_special(const RootSystem& rs, std::size_t alpha, std::vector<int>* blocks = nullptr) {
    const std::size_t r = rs.rank();
    if (alpha >= r)
        throw Error("simple root index out of range");
    if (rs.simple_length(alpha) != rs.long_length())
        return false;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < r; ++i)
        if (i != alpha)
            rest.push_back(i);
    std::vector<int> sizes;
    for (const auto& comp : components(rs, rest)) {
        // A-type: a simply-laced path.
        std::size_t ends = 0;
        std::size_t edges = 0;
        for (auto i : comp) {
            std::size_t deg = 0;
            for (auto j : comp)
                if (rs.adjacent(i, j)) {
                    ++deg;
                    if (rs.cartan(i, j) != -1)
                        return false;
                }
            if (deg > 2)
                return false;
            edges += deg;
            if (deg <= 1)
                ++ends;
        }
        if (edges / 2 + 1 != comp.size())
            return false;
        std::size_t meets = 0;
        for (auto i : comp)
            if (rs.adjacent(alpha, i)) {
                ++meets;
                std::size_t deg = 0;
                for (auto j : comp)
                    if (rs.adjacent(i, j))
                        ++deg;
                if (deg > 1)
                    return false;
            }
        if (meets != 1)
            return false;
        sizes.push_back(static_cast<int>(comp.size()) + 1);
    }
    if (blocks) {
        // Type A keeps two GL factors even when alpha is an end node, the
        // missing side being GL_1; the order follows the chain.
        const auto type = identify_type(rs);
        if (type && type->series == Series::A) {
            blocks->clear();
            const int left = static_cast<int>(alpha) + 1;
            blocks->push_back(left);
            blocks->push_back(static_cast<int>(r) + 1 - left);
        } else {
            std::sort(sizes.begin(), sizes.end());
            *blocks = sizes;
        }
    }
    return true;
}

inline std::vector<SpecialRootData> special_roots(const RootSystem& rs) {
    std::vector<SpecialRootData> out;
    for (std::size_t a = 0; a < rs.rank(); ++a) {
        SpecialRootData d;
        d.alpha = a;
        if (is_special(rs, a, &d.levi_blocks))
            out.push_back(std::move(d));
    }
    return out;
}

/// Resolves "the" special root: type A needs an explicit index, other types
/// have exactly one.
inline std::size_t resolve_special(const RootSystem& rs, std::optional<std::size_t> alpha) {
    if (alpha) {
        if (!is_special(rs, *alpha))
            throw Error("simple root " + std::to_string(*alpha + 1) + " is not special");
        return *alpha;
    }
    const auto sp = special_roots(rs);
    if (sp.size() != 1)
        throw Error("special root is not unique for this type; pass an explicit index");
    return sp.front().alpha;
}

inline std::size_t max_level(const RootSystem& rs, std::size_t alpha) {
    return static_cast<std::size_t>(rs.highest_root().coeffs.at(alpha));
}

/// dim u^k = #{beta > 0 : c_alpha(beta) = k}.
inline std::size_t uk_dimension(const RootSystem& rs, std::size_t alpha, int k) {
    return static_cast<std::size_t>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                                                  [&](const RootVector& b) { return b.coeffs[alpha] == k; }));
}

/// The highest root with c_alpha = k; it dominates every other root at that level.
inline RootVector lambda_k(const RootSystem& rs, std::size_t alpha, int k) {
    const RootVector* best = nullptr;
    for (const auto& b : rs.positive_roots())
        if (b.coeffs[alpha] == k && (!best || b.height() > best->height()))
            best = &b;
    if (!best)
        throw Error("no root at level " + std::to_string(k));
    for (const auto& b : rs.positive_roots()) {
        if (b.coeffs[alpha] != k)
            continue;
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (b.coeffs[i] > best->coeffs[i])
                throw Error("level " + std::to_string(k) + " has no unique maximal root");
    }
    return *best;
}

inline CorootVector sum_simple_coroots(const RootSystem& rs) {
    return CorootVector{std::vector<Rational>(rs.rank(), Rational(1))};
}

/// lambda_1(alpha)^vee equals the sum of all simple coroots.
inline bool lambda1_coroot_identity(const RootSystem& rs, std::size_t alpha) {
    return rs.coroot(lambda_k(rs, alpha, 1)) == sum_simple_coroots(rs);
}

/// Pullback degrees {-<beta, lambda_1(alpha)^vee> : c_alpha(beta) = k}, sorted.
inline std::vector<int> pullback_degree_multiset(const RootSystem& rs, std::size_t alpha, int k) {
    const CorootVector lam = rs.coroot(lambda_k(rs, alpha, 1));
    std::vector<int> out;
    for (const auto& b : rs.positive_roots()) {
        if (b.coeffs[alpha] != k)
            continue;
        const Rational p = rs.pairing(b.coeffs, lam);
        out.push_back(-static_cast<int>(p.get_num().get_si()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// h^1 on the projective line of the sum of O(d) over the given degrees.
inline int h1_on_line(const std::vector<int>& degrees) {
    int h = 0;
    for (int d : degrees)
        if (d <= -2)
            h += -d - 1;
    return h;
}

/// <varpi_delta, beta^vee> is the alpha_delta^vee coefficient of beta^vee.
inline Rational fundamental_pairing(const RootSystem& rs, std::size_t delta, const RootVector& beta) {
    return rs.coroot(beta).coeffs.at(delta);
}

inline bool is_minuscule(const RootSystem& rs, std::size_t delta) {
    if (delta >= rs.rank())
        throw Error("simple root index out of range");
    for (const auto& b : rs.positive_roots())
        if (abs(fundamental_pairing(rs, delta, b)) > 1)
            return false;
    return true;
}

/// Highest weight in the fundamental-weight basis: (<lambda, alpha_i^vee>)_i.
inline std::vector<int> to_weight_basis(const RootSystem& rs, const std::vector<int>& root_coeffs) {
    std::vector<int> w(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i)
        w[i] = rs.pairing_simple(root_coeffs, i);
    return w;
}

/// Weyl dimension formula for the irreducible module with highest weight
/// given in the fundamental-weight basis.
inline mpz_class weyl_dimension(const RootSystem& rs, const std::vector<int>& highest_weight) {
    Rational num = 1;
    Rational den = 1;
    for (const auto& b : rs.positive_roots()) {
        const CorootVector cv = rs.coroot(b);
        Rational lr = 0;
        Rational rr = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            lr += (highest_weight[i] + 1) * cv.coeffs[i];
            rr += cv.coeffs[i];
        }
        num *= lr;
        den *= rr;
    }
    Rational d = num / den;
    if (d.get_den() != 1)
        throw Error("non-integral Weyl dimension");
    return d.get_num();
}

/// Size of the Weyl orbit of varpi_delta; defined for minuscule delta only,
/// where it equals the dimension of the representation.
inline std::size_t weight_orbit_size(const RootSystem& rs, std::size_t delta) {
    if (!is_minuscule(rs, delta))
        throw Error("fundamental weight " + std::to_string(delta + 1) + " is not minuscule");
    std::vector<int> start(rs.rank(), 0);
    start[delta] = 1;
    std::set<std::vector<int>> seen{start};
    std::queue<std::vector<int>> todo;
    todo.push(start);
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (w[i] == 0)
                continue;
            // s_i(w) = w - w_i alpha_i, with alpha_i = sum_j cartan(i, j) varpi_j.
            auto s = w;
            for (std::size_t j = 0; j < rs.rank(); ++j)
                s[j] -= w[i] * rs.cartan(i, j);
            if (seen.insert(s).second)
                todo.push(std::move(s));
        }
    }
    return seen.size();
}

struct AdmissibleWeight {
    std::size_t delta = 0;
    bool minuscule = false;
    bool quasi_minuscule = false;
    mpz_class dimension;
};

/// Fundamental weights with comark 1 and varpi(beta^vee) <= 1 on every short
/// coroot (the coroots of long roots).
inline std::vector<AdmissibleWeight> admissible_fundamental_weights(const RootSystem& rs) {
    const auto g = comarks(rs);
    const auto theta_s = to_weight_basis(rs, rs.highest_short_root().coeffs);
    std::vector<AdmissibleWeight> out;
    for (std::size_t d = 0; d < rs.rank(); ++d) {
        if (g[d + 1] != 1)
            continue;
        bool ok = true;
        for (const auto& b : rs.positive_roots())
            if (rs.is_long(b) && fundamental_pairing(rs, d, b) > 1)
                ok = false;
        if (!ok)
            continue;
        AdmissibleWeight a;
        a.delta = d;
        a.minuscule = is_minuscule(rs, d);
        std::vector<int> w(rs.rank(), 0);
        w[d] = 1;
        a.quasi_minuscule = !a.minuscule && w == theta_s;
        a.dimension = weyl_dimension(rs, w);
        out.push_back(a);
    }
    return out;
}

struct SurgeryResult {
    int m = 0;
    RootVector nu;
    std::vector<std::vector<int>> subsystem_simple;  ///< Delta', in simple-root coordinates of R
    std::size_t nu_index = 0;                        ///< position of nu inside Delta'
    std::optional<GroupId> subsystem_type;
    bool nu_is_long_root = false;
    bool nu_special = false;
    bool subsystem_matches_level_set = false;  ///< |R'| equals #{beta : m c_alpha = c_alpha1}
    std::vector<std::size_t> arm;              ///< alpha_1, ..., alpha_k
    std::size_t roots_checked = 0;
    std::size_t violations = 0;
};

/// Replaces alpha, alpha_1 by nu = alpha + m alpha_1 (m = -<alpha, alpha_1^vee>),
/// and sweeps the decreasing-coefficient property along the arm through alpha_1.
inline SurgeryResult parabolic_induction_surgery(const RootSystem& rs, std::size_t alpha, std::size_t alpha1) {
    const std::size_t r = rs.rank();
    if (!is_special(rs, alpha))
        throw Error("simple root " + std::to_string(alpha + 1) + " is not special");
    if (alpha1 >= r || !rs.adjacent(alpha, alpha1))
        throw Error("alpha_1 must be adjacent to alpha");
    SurgeryResult res;
    res.m = -rs.cartan(alpha, alpha1);

    std::vector<int> nu(r, 0);
    nu[alpha] = 1;
    nu[alpha1] = res.m;
    if (!rs.is_root(nu))
        throw Error("alpha + m alpha_1 is not a root");
    res.nu = RootVector{nu, rs.inner(nu, nu)};
    res.nu_is_long_root = rs.is_long(res.nu);

    for (std::size_t i = 0; i < r; ++i)
        if (i != alpha && i != alpha1) {
            std::vector<int> e(r, 0);
            e[i] = 1;
            res.subsystem_simple.push_back(e);
        }
    res.nu_index = res.subsystem_simple.size();
    res.subsystem_simple.push_back(nu);

    const std::size_t rp = res.subsystem_simple.size();
    std::vector<Rational> lens(rp);
    for (std::size_t i = 0; i < rp; ++i)
        lens[i] = rs.inner(res.subsystem_simple[i], res.subsystem_simple[i]);
    std::vector<std::vector<int>> cart(rp, std::vector<int>(rp));
    for (std::size_t i = 0; i < rp; ++i)
        for (std::size_t j = 0; j < rp; ++j) {
            const Rational v = 2 * rs.inner(res.subsystem_simple[i], res.subsystem_simple[j]) / lens[j];
            if (v.get_den() != 1)
                throw Error("surgery produced a non-integral Cartan matrix");
            cart[i][j] = static_cast<int>(v.get_num().get_si());
        }
    const RootSystem sub(cart, lens);
    res.subsystem_type = identify_type(sub);
    res.nu_special = is_special(sub, res.nu_index);

    std::size_t level_set = 0;
    for (const auto& b : rs.positive_roots())
        if (res.m * b.coeffs[alpha] == b.coeffs[alpha1])
            ++level_set;
    res.subsystem_matches_level_set = level_set == sub.num_positive();

    // The arm: the component of Delta - {alpha} through alpha_1, walked as a path.
    res.arm.push_back(alpha1);
    for (;;) {
        const std::size_t cur = res.arm.back();
        std::optional<std::size_t> next;
        for (std::size_t j = 0; j < r; ++j)
            if (j != alpha && rs.adjacent(cur, j) &&
                std::find(res.arm.begin(), res.arm.end(), j) == res.arm.end())
                next = j;
        if (!next)
            break;
        res.arm.push_back(*next);
    }

    for (const auto& b : rs.positive_roots()) {
        if (b.coeffs[alpha] <= 0)
            continue;
        ++res.roots_checked;
        bool ok = res.m * b.coeffs[alpha] >= b.coeffs[alpha1];
        for (std::size_t i = 0; i + 1 < res.arm.size(); ++i)
            ok = ok && b.coeffs[res.arm[i]] >= b.coeffs[res.arm[i + 1]];
        if (!ok)
            ++res.violations;
    }
    return res;
}

/// Every group of rank <= max_rank, in a fixed order.
inline std::vector<GroupId> all_groups(int max_rank = 8) {
    std::vector<GroupId> out;
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G})
        for (int r = 1; r <= max_rank; ++r) {
            if (!GroupId::valid(s, r))
                continue;
            if ((s == Series::D && r == 3) || (s == Series::C && r == 2))
                continue;
            out.push_back({s, r});
        }
    return out;
}

} // namespace ellipstab::rootsys
