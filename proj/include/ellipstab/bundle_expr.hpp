#pragma once

// Bundle expressions:
//   expr := term ('*' term)*
//   term := W<n> | Wd<n> | O(<int>) | dual(expr) | wedge(expr,<k>)
//         | sym(expr,<k>) | ad(expr) | twist(expr,<int>) | '(' expr ')'
// Whitespace is ignored everywhere.

#include "ellipstab/cubic_bundles.hpp"

#include <cctype>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ellipstab {

class ParseError : public Error {
  public:
    ParseError(std::string input, std::size_t position, std::vector<std::string> expected, std::string found)
        : Error(render(input, position, expected, found)), input_(std::move(input)), position_(position),
          expected_(std::move(expected)), found_(std::move(found)) {}

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }
    const std::string& input() const { return input_; }

  private:
    static std::string render(const std::string& input, std::size_t pos, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::ostringstream os;
        os << "parse error at position " << pos << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            os << (i ? (i + 1 == expected.size() ? " or " : ", ") : "") << expected[i];
        os << ", found " << found << "\n  " << input << "\n  " << std::string(pos, ' ') << '^';
        return os.str();
    }

    std::string input_;
    std::size_t position_;
    std::vector<std::string> expected_;
    std::string found_;
};

struct BundleExpr {
    enum class Kind { W, Wd, O, Dual, Tensor, Wedge, Sym, Ad, Twist };
    Kind kind = Kind::O;
    int value = 0;  // n for W/Wd, degree for O/twist, k for wedge/sym
    std::vector<std::shared_ptr<const BundleExpr>> args;
};

using ExprPtr = std::shared_ptr<const BundleExpr>;

inline ExprPtr make_expr(BundleExpr::Kind k, int value, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = k;
    e->value = value;
    e->args = std::move(args);
    return e;
}

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail({"'*'", "end of input"});
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(std::string(text_), pos_, std::move(expected), found);
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail({"'" + std::string(1, c) + "'"});
    }

    int integer(bool allow_sign, const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({what});
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) {
                pos_ = start;
                fail({"an integer of at most 7 digits"});
            }
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (accept('*'))
            lhs = make_expr(BundleExpr::Kind::Tensor, 0, {lhs, term()});
        return lhs;
    }

    ExprPtr term() {
        static const std::vector<std::string> starts{"W<n>", "Wd<n>", "O(", "dual(", "wedge(", "sym(", "ad(",
                                                     "twist(", "'('"};
        skip_ws();
        if (accept('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        const std::size_t start = pos_;
        std::string ident;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ident += text_[pos_++];
        using K = BundleExpr::Kind;
        if (ident == "W" || ident == "Wd") {
            const int n = integer(false, "a rank n >= 1");
            if (n < 1) {
                pos_ = start;
                fail({"a rank n >= 1"});
            }
            return make_expr(ident == "W" ? K::W : K::Wd, n);
        }
        if (ident == "O") {
            expect('(');
            const int m = integer(true, "an integer");
            expect(')');
            return make_expr(K::O, m);
        }
        if (ident == "dual" || ident == "ad") {
            expect('(');
            auto e = expr();
            expect(')');
            return make_expr(ident == "dual" ? K::Dual : K::Ad, 0, {e});
        }
        if (ident == "wedge" || ident == "sym" || ident == "twist") {
            expect('(');
            auto e = expr();
            expect(',');
            const bool is_twist = ident == "twist";
            const int v = integer(is_twist, is_twist ? "an integer" : "a power k >= 0");
            expect(')');
            return make_expr(ident == "wedge" ? K::Wedge : ident == "sym" ? K::Sym : K::Twist, v, {e});
        }
        pos_ = start;
        fail(starts);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse_bundle_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string to_string(const BundleExpr& e) {
    using K = BundleExpr::Kind;
    switch (e.kind) {
    case K::W: return "W" + std::to_string(e.value);
    case K::Wd: return "Wd" + std::to_string(e.value);
    case K::O: return "O(" + std::to_string(e.value) + ")";
    case K::Dual: return "dual(" + to_string(*e.args[0]) + ")";
    case K::Ad: return "ad(" + to_string(*e.args[0]) + ")";
    case K::Tensor: {
        const auto& r = *e.args[1];
        const std::string rhs = r.kind == K::Tensor ? "(" + to_string(r) + ")" : to_string(r);
        return to_string(*e.args[0]) + "*" + rhs;
    }
    case K::Wedge: return "wedge(" + to_string(*e.args[0]) + "," + std::to_string(e.value) + ")";
    case K::Sym: return "sym(" + to_string(*e.args[0]) + "," + std::to_string(e.value) + ")";
    case K::Twist: return "twist(" + to_string(*e.args[0]) + "," + std::to_string(e.value) + ")";
    }
    return "?";
}

/// Rank, computed without building the bundle.
inline std::size_t expr_rank(const BundleExpr& e) {
    using K = BundleExpr::Kind;
    auto binom = [](std::size_t n, std::size_t k) {
        if (k > n)
            return std::size_t{0};
        std::size_t r = 1;
        for (std::size_t i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    };
    switch (e.kind) {
    case K::W:
    case K::Wd: return static_cast<std::size_t>(e.value);
    case K::O: return 1;
    case K::Dual:
    case K::Twist: return expr_rank(*e.args[0]);
    case K::Ad: {
        const auto r = expr_rank(*e.args[0]);
        return r * r - 1;
    }
    case K::Tensor: return expr_rank(*e.args[0]) * expr_rank(*e.args[1]);
    case K::Wedge: return binom(expr_rank(*e.args[0]), static_cast<std::size_t>(e.value));
    case K::Sym: {
        const auto r = expr_rank(*e.args[0]);
        return e.value == 0 ? 1 : binom(r + e.value - 1, static_cast<std::size_t>(e.value));
    }
    }
    return 0;
}

template <class F = Rational>
BasicBundle<F> evaluate(const BundleExpr& e, CurveKind c) {
    using K = BundleExpr::Kind;
    switch (e.kind) {
    case K::W: return w_bundle<F>(c, e.value);
    case K::Wd: return w_dual<F>(c, e.value);
    case K::O: return line_bundle<F>(c, e.value);
    case K::Dual: return dual(evaluate<F>(*e.args[0], c));
    case K::Ad: return end0(evaluate<F>(*e.args[0], c));
    case K::Tensor: return tensor(evaluate<F>(*e.args[0], c), evaluate<F>(*e.args[1], c));
    case K::Wedge: return wedge(evaluate<F>(*e.args[0], c), e.value);
    case K::Sym: return sym(evaluate<F>(*e.args[0], c), e.value);
    case K::Twist: return twist(evaluate<F>(*e.args[0], c), e.value);
    }
    throw Error("unknown expression node");
}

inline BundleOnCubic evaluate_bundle(std::string_view text, CurveKind c) {
    return evaluate<Rational>(*parse_bundle_expr(text), c);
}

/// Random well-formed expression of rank at most max_rank.
inline ExprPtr random_bundle_expr(std::mt19937_64& rng, int depth, std::size_t max_rank) {
    using K = BundleExpr::Kind;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        ExprPtr e;
        const int choice = depth <= 0 ? pick(0, 2) : pick(0, 8);
        switch (choice) {
        case 0: e = make_expr(K::W, pick(1, 4)); break;
        case 1: e = make_expr(K::Wd, pick(1, 4)); break;
        case 2: e = make_expr(K::O, pick(-2, 2)); break;
        case 3: e = make_expr(K::Dual, 0, {random_bundle_expr(rng, depth - 1, max_rank)}); break;
        case 4:
        case 5:
            e = make_expr(K::Tensor, 0,
                          {random_bundle_expr(rng, depth - 1, max_rank), random_bundle_expr(rng, depth - 1, max_rank)});
            break;
        case 6: {
            auto inner = random_bundle_expr(rng, depth - 1, max_rank);
            const int r = static_cast<int>(expr_rank(*inner));
            e = make_expr(pick(0, 1) ? K::Wedge : K::Sym, pick(1, std::max(1, std::min(r, 3))), {inner});
            break;
        }
        case 7: {
            auto inner = random_bundle_expr(rng, depth - 1, max_rank);
            if (expr_rank(*inner) < 2)
                continue;
            e = make_expr(K::Ad, 0, {inner});
            break;
        }
        default: e = make_expr(K::Twist, pick(-2, 2), {random_bundle_expr(rng, depth - 1, max_rank)}); break;
        }
        if (expr_rank(*e) <= max_rank)
            return e;
    }
}

} // namespace ellipstab
