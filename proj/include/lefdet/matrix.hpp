#pragma once

/*
 * Dense exact matrices, determinants, minors and a Cauchy-Binet verifier.
 *
 * det() picks fraction-free Bareiss elimination for Rational and a
 * subset-memoised cofactor expansion for every other ring (MultiPoly has no
 * exact division here). det_laplace() is available for every ring and is
 * the oracle the Bareiss path is tested against.
 */

#include "lefdet/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace lefdet {

template <ExactRing T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ring_zero<T>())
    {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows * cols)
            throw std::invalid_argument("matrix entry count does not match its shape");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one<T>();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<T>& entries() const { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(std::span<const std::size_t> rowset, std::span<const std::size_t> colset) const
    {
        Matrix s(rowset.size(), colset.size());
        for (std::size_t i = 0; i < rowset.size(); ++i)
            for (std::size_t j = 0; j < colset.size(); ++j) s(i, j) = (*this)(rowset[i], colset[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.cols_) +
                                        " vs " + std::to_string(b.rows_));
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = T(c(i, j) + aik * b(k, j));
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

template <ExactRing T>
void require_square(const Matrix<T>& m)
{
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + " matrix");
}

} // namespace detail

/// Cofactor expansion along rows, memoised over the set of columns still in use.
template <ExactRing T>
T det_laplace(const Matrix<T>& m)
{
    detail::require_square(m);
    const std::size_t n = m.rows();
    if (n == 0) return ring_one<T>();
    if (n > 20) throw std::invalid_argument("det_laplace limited to 20x20");

    // minor[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    std::vector<T> minor(std::size_t{1} << n, ring_zero<T>());
    minor[0] = ring_one<T>();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        T acc = ring_zero<T>();
        std::size_t higher = static_cast<std::size_t>(std::popcount(mask)) - 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            // columns of mask strictly greater than j
            const T& entry = m(row, j);
            const T& sub = minor[mask & ~(std::uint32_t{1} << j)];
            if (!is_zero(entry) && !is_zero(sub)) {
                if (higher % 2 == 0)
                    acc = T(acc + entry * sub);
                else
                    acc = T(acc - entry * sub);
            }
            --higher;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

/*
 * Bareiss elimination over the integers after clearing row denominators.
 * Pivot: first nonzero entry at or below the diagonal in the current column;
 * a column without one means det = 0. Every division in the elimination is
 * checked to be exact.
 */
inline Rational det_bareiss(const Matrix<Rational>& m)
{
    detail::require_square(m);
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("Bareiss step produced an inexact division");
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Rational result(mpz_class(sign * at(n - 1, n - 1)), scale);
    result.canonicalize();
    return result;
}

template <ExactRing T>
T det(const Matrix<T>& m)
{
    if constexpr (std::is_same_v<T, Rational>)
        return det_bareiss(m);
    else
        return det_laplace(m);
}

namespace detail {

inline void check_index_set(std::span<const std::size_t> set, std::size_t bound, const char* what)
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= bound)
            throw std::out_of_range(std::string(what) + " index " + std::to_string(set[i]) + " out of range");
        if (i && set[i] <= set[i - 1])
            throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    }
}

} // namespace detail

template <ExactRing T>
T minor_det(const Matrix<T>& m, std::span<const std::size_t> rowset, std::span<const std::size_t> colset)
{
    if (rowset.size() != colset.size())
        throw std::invalid_argument("minor needs as many rows as columns");
    detail::check_index_set(rowset, m.rows(), "row");
    detail::check_index_set(colset, m.cols(), "column");
    return det(m.submatrix(rowset, colset));
}

/// All strictly increasing k-subsets of {0..n-1}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

template <ExactRing T>
struct CauchyBinetResult {
    T lhs;
    T rhs;
    bool equal;
};

/// det(Y X) against the sum of det(Y_S) det(X^S) over p-subsets S of the inner index range.
template <ExactRing T>
CauchyBinetResult<T> cauchy_binet_check(const Matrix<T>& y, const Matrix<T>& x)
{
    const std::size_t p = y.rows();
    const std::size_t m = y.cols();
    if (x.rows() != m || x.cols() != p || p > m)
        throw std::invalid_argument("Cauchy-Binet needs Y p x m and X m x p with p <= m");

    T lhs = det(y * x);

    std::vector<std::size_t> all(p);
    for (std::size_t i = 0; i < p; ++i) all[i] = i;
    T rhs = ring_zero<T>();
    for (const auto& s : index_subsets(m, p)) {
        T ys = minor_det(y, all, s);
        if (is_zero(ys)) continue;
        rhs = T(rhs + ys * minor_det(x, s, all));
    }
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace lefdet
