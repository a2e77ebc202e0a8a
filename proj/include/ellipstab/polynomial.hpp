#pragma once

#include "ellipstab/rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ellipstab {

/// Dense univariate polynomial over Q; coeffs_[i] is the coefficient of x^i.
/// The zero polynomial has no coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!ellipstab::is_zero(c))
            coeffs_.push_back(c);
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial x() { return Polynomial(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& at) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero())
            throw Error("polynomial division by zero");
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quot;
        const int db = b.degree();
        if (a.degree() >= db)
            quot.assign(a.degree() - db + 1, Rational(0));
        for (int d = a.degree(); d >= db; --d) {
            const Rational c = rem[d] / b.leading();
            if (ellipstab::is_zero(c))
                continue;
            quot[d - db] = c;
            for (int j = 0; j <= db; ++j)
                rem[d - db + j] -= c * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const {
        if (is_zero())
            return *this;
        Polynomial r = *this;
        const Rational lc = leading();
        for (auto& c : r.coeffs_)
            c /= lc;
        return r;
    }

    /// Monic gcd (zero if both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    std::string str(const char* var = "x") const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const Rational& c = coeffs_[d];
            if (ellipstab::is_zero(c))
                continue;
            Rational mag = abs(c);
            os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (d == 0 || mag != 1)
                os << to_string(mag);
            if (d > 0)
                os << var;
            if (d > 1)
                os << '^' << d;
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && ellipstab::is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Element of Q(x), kept as num/den with gcd 1 and den monic.
class RationalFunction {
  public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator()(const Rational& at) const {
        const Rational d = den_(at);
        if (ellipstab::is_zero(d))
            throw Error("rational function evaluated at a pole");
        return num_(at) / d;
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, raw_tag{}); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_)
            return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw Error("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_ == Polynomial(1))
            return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    struct raw_tag {};
    RationalFunction(Polynomial num, Polynomial den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero())
            throw Error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
        const Rational lc = den_.leading();
        if (lc != 1) {
            num_ = num_ * Polynomial(Rational(1 / lc));
            den_ = den_.monic();
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::string to_string(const RationalFunction& f) { return f.str(); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

} // namespace ellipstab
