#pragma once

#include "ellipstab/polynomial.hpp"
#include "ellipstab/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace ellipstab {

/// Dense row-major matrix over an exact field F (Rational or RationalFunction).
template <class F>
class Matrix {
  public:
    using value_type = F;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols)
            throw Error("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise conversion, e.g. Rational -> RationalFunction.
    template <class G>
    Matrix<G> cast() const {
        Matrix<G> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = G((*this)(i, j));
        return out;
    }

    /// Entrywise map through a callable returning another scalar type.
    template <class Fn>
    auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const F&>()))> {
        using G = decltype(fn(std::declval<const F&>()));
        Matrix<G> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = fn((*this)(i, j));
        return out;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = F(-x);
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix m = a;
        for (std::size_t k = 0; k < m.data_.size(); ++k)
            m.data_[k] = F(m.data_[k] + b.data_[k]);
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j)))
                        m(i, j) = F(m(i, j) + aik * b(k, j));
            }
        return m;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix m = a;
        for (auto& x : m.data_)
            x = F(s * x);
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    F trace() const {
        F t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t = F(t + (*this)(i, i));
        return t;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x))
                return false;
        return true;
    }

  private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw Error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j)))
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = F(a(i, j) * b(k, l));
        }
    return m;
}

/// Rank by fraction-free (Bareiss) elimination. Every division is exact, so
/// polynomial entries stay polynomial throughout.
template <class F>
std::size_t rank(Matrix<F> m) {
    F prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const F pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const F lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = F((pivot * m(i, j) - lead * m(r, j)) / prev);
            m(i, c) = F(0);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Determinant by Bareiss elimination.
template <class F>
F determinant(Matrix<F> m) {
    if (!m.square())
        throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    F prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m(p, k)))
            ++p;
        if (p == n)
            return F(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = F((m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev);
            m(i, k) = F(0);
        }
        prev = m(k, k);
    }
    return negate ? F(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const F inv = F(F(1) / m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = F(m(r, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = F(m(i, j) - f * m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right nullspace {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F(-m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (!m.square())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

/// Coefficients (1, c_1, ..., c_n) of det(t I - m) = t^n + c_1 t^{n-1} + ... + c_n,
/// by Berkowitz's division-free algorithm.
template <class F>
std::vector<F> charpoly(const Matrix<F>& m) {
    if (!m.square())
        throw Error("characteristic polynomial of a non-square matrix");
    std::vector<F> poly{F(1)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., for the leading r x r block M.
        std::vector<F> col{F(1), F(-m(r, r))};
        std::vector<F> v(r);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            F dot(0);
            for (std::size_t j = 0; j < r; ++j)
                dot = F(dot + m(r, j) * v[j]);
            col.push_back(F(-dot));
            std::vector<F> next(r, F(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    next[i] = F(next[i] + m(i, j) * v[j]);
            v = std::move(next);
        }
        std::vector<F> out(poly.size() + 1, F(0));
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
                if (i - j < col.size())
                    out[i] = F(out[i] + col[i - j] * poly[j]);
        poly = std::move(out);
    }
    return poly;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << to_string(m(i, j));
        os << "]\n";
    }
    return os;
}

using RationalMatrix = Matrix<Rational>;
using FunctionMatrix = Matrix<RationalFunction>;

} // namespace ellipstab
