#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "twh/cyclotomic.hpp"
#include "twh/errors.hpp"
#include "twh/rational.hpp"

namespace twh {

// Dense row-major matrix over an exact field (Rat or Cyc).
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, K(0)) {}
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) throw PreconditionError("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.r_; ++i) {
            if (rows[i].size() != m.c_) throw PreconditionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::vector<K> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
    std::vector<K> column(std::size_t j) const {
        std::vector<K> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    // Entries in row-major order.
    const std::vector<K>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!twh::is_zero(x)) return false;
        return true;
    }
    bool is_identity() const { return is_square() && *this == identity(r_); }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    K trace() const {
        K t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const K& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
    friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw PreconditionError("matrix shapes do not compose");
        Matrix out(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& x = a(i, k);
                if (twh::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (!twh::is_zero(b(k, j))) out(i, j) += x * b(k, j);
            }
        return out;
    }
    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != c_) throw PreconditionError("vector length mismatch");
        std::vector<K> out(r_, K(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!twh::is_zero(v[j]) && !twh::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    bool operator==(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t p = row;
            while (p < r_ && twh::is_zero((*this)(p, col))) ++p;
            if (p == r_) continue;
            if (p != row)
                for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            K inv = inverse((*this)(row, col));
            for (std::size_t j = col; j < c_; ++j)
                if (!twh::is_zero((*this)(row, j))) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row || twh::is_zero((*this)(i, col))) continue;
                K f = (*this)(i, col);
                for (std::size_t j = col; j < c_; ++j)
                    if (!twh::is_zero((*this)(row, j))) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of the right null space, as column vectors.
    std::vector<std::vector<K>> kernel() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < c_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(c_, K(0));
            v[f] = K(1);
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    K det() const {
        if (!is_square()) throw PreconditionError("determinant of a non-square matrix");
        Matrix m = *this;
        K d(1);
        for (std::size_t col = 0; col < c_; ++col) {
            std::size_t p = col;
            while (p < r_ && twh::is_zero(m(p, col))) ++p;
            if (p == r_) return K(0);
            if (p != col) {
                for (std::size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            K inv = inverse(m(col, col));
            for (std::size_t i = col + 1; i < r_; ++i) {
                if (twh::is_zero(m(i, col))) continue;
                K f = m(i, col) * inv;
                for (std::size_t j = col; j < c_; ++j)
                    if (!twh::is_zero(m(col, j))) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    // Throws PreconditionError when singular.
    Matrix inverse_matrix() const {
        if (!is_square()) throw PreconditionError("inverse of a non-square matrix");
        Matrix aug(r_, 2 * c_);
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = K(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() < r_ || pivots[r_ - 1] >= c_) throw PreconditionError("matrix is singular");
        Matrix inv(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
        return inv;
    }

    // Some x with (*this) x = b, if one exists.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (b.size() != r_) throw PreconditionError("right-hand side length mismatch");
        Matrix aug(r_, c_ + 1);
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
        std::vector<K> x(c_, K(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, c_);
        return x;
    }

    std::vector<std::vector<std::string>> str_rows() const {
        std::vector<std::vector<std::string>> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) {
                if constexpr (std::is_same_v<K, Rat>)
                    out[i].push_back(to_string((*this)(i, j)));
                else
                    out[i].push_back((*this)(i, j).str());
            }
        return out;
    }

private:
    void same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw PreconditionError("matrix shapes differ");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

using QMatrix = Matrix<Rat>;
using CMatrix = Matrix<Cyc>;

// Row space of a list of vectors kept in reduced echelon form; supports incremental insertion.
template <class K>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t size() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }
    const std::vector<std::vector<K>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates of v against rows(); v must lie in the span.
    std::vector<K> coordinates(const std::vector<K>& v) const {
        std::vector<K> out;
        out.reserve(rows_.size());
        for (auto p : pivots_) out.push_back(v[p]);
        return out;
    }

    // Reduces v against the basis; returns the residual.
    std::vector<K> reduce(std::vector<K> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& f = v[pivots_[r]];
            if (twh::is_zero(f)) continue;
            K factor = f;
            for (std::size_t j = pivots_[r]; j < dim_; ++j)
                if (!twh::is_zero(rows_[r][j])) v[j] -= factor * rows_[r][j];
        }
        return v;
    }
    bool contains(const std::vector<K>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!twh::is_zero(x)) return false;
        return true;
    }
    // Adds v if independent; returns whether it was added.
    bool insert(const std::vector<K>& v) {
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && twh::is_zero(r[p])) ++p;
        if (p == dim_) return false;
        K inv = inverse(r[p]);
        for (std::size_t j = p; j < dim_; ++j)
            if (!twh::is_zero(r[j])) r[j] *= inv;
        // keep earlier rows reduced at the new pivot
        for (auto& row : rows_) {
            if (twh::is_zero(row[p])) continue;
            K f = row[p];
            for (std::size_t j = p; j < dim_; ++j)
                if (!twh::is_zero(r[j])) row[j] -= f * r[j];
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace twh
