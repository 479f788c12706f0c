#pragma once

/*
 * The graded algebra R = K[x,y] / <x^{d+1}, y^{q+1}>.
 *
 * R_k has the monomial basis x^i y^{k-i} (0 <= i <= d, 0 <= k-i <= q),
 * always listed by strictly decreasing x-exponent. Position p in that list
 * holds y-exponent y_min(k) + p, with y_min(k) = max(0, k - d).
 *
 * Multiplication maps are represented in these bases; the determinant of
 * x(l_1 ... l_{d+q-2k}) : R_k -> R_{d+q-k} computed here by brute force is
 * the reference value for every closed form in formulas.hpp.
 */

#include "lefdet/matrix.hpp"
#include "lefdet/rational.hpp"
#include "lefdet/symfunc.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefdet {

class RingParams {
public:
    /// Requires d >= q >= 1.
    RingParams(int d, int q) : d_(d), q_(q)
    {
        if (q < 1 || d < q)
            throw std::invalid_argument("ring parameters need d >= q >= 1, got d=" + std::to_string(d) +
                                        " q=" + std::to_string(q));
    }

    int d() const { return d_; }
    int q() const { return q_; }
    int socle() const { return d_ + q_; }

    /// The ring with the roles of x and y exchanged; may violate d >= q.
    RingParams transposed() const { return RingParams(q_, d_, Unchecked{}); }

    friend bool operator==(const RingParams&, const RingParams&) = default;

private:
    struct Unchecked {};
    RingParams(int d, int q, Unchecked) : d_(d), q_(q) {}

    int d_;
    int q_;
};

/// a x + b y, with (a, b) != (0, 0).
template <ExactRing T>
struct LinearForm {
    T a;
    T b;

    LinearForm(T a_, T b_) : a(std::move(a_)), b(std::move(b_))
    {
        if (lefdet::is_zero(a) && lefdet::is_zero(b))
            throw std::invalid_argument("linear form must be nonzero");
    }

    LinearForm transposed() const { return LinearForm(b, a); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

template <ExactRing T>
using FormList = std::vector<LinearForm<T>>;

template <ExactRing T>
HomogPair<T> coefficient_pair(std::span<const LinearForm<T>> forms)
{
    ValueVector<T> a, b;
    for (const auto& f : forms) {
        a.push_back(f.a);
        b.push_back(f.b);
    }
    return HomogPair<T>(std::move(a), std::move(b));
}

struct Monomial {
    int x;
    int y;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedBasis {
    int degree;
    std::vector<Monomial> monomials;
};

inline int y_min(const RingParams& rp, int k) { return std::max(0, k - rp.d()); }
inline int y_max(const RingParams& rp, int k) { return std::min(k, rp.q()); }

inline GradedBasis basis(const RingParams& rp, int k)
{
    if (k < 0 || k > rp.socle())
        throw std::out_of_range("degree " + std::to_string(k) + " outside 0.." + std::to_string(rp.socle()));
    GradedBasis b{k, {}};
    for (int j = y_min(rp, k); j <= y_max(rp, k); ++j) b.monomials.push_back({k - j, j});
    return b;
}

inline int dim(const RingParams& rp, int k)
{
    if (k < 0 || k > rp.socle()) return 0;
    int count = 0;
    for (int i = 0; i <= rp.d(); ++i)
        if (k - i >= 0 && k - i <= rp.q()) ++count;
    return count;
}

/// Coefficients of prod (a_t x + b_t y) indexed by y-exponent 0..u.
template <ExactRing T>
std::vector<T> product_coefficients(std::span<const LinearForm<T>> forms)
{
    // y^i carries E_{u-i}(a; b): the x-degree is u - i
    auto e = elementary_homog_all(coefficient_pair(forms));
    std::reverse(e.begin(), e.end());
    return e;
}

/// x form : R_k -> R_{k+1}, a dim(k+1) x dim(k) matrix.
template <ExactRing T>
Matrix<T> mult_matrix(const RingParams& rp, const LinearForm<T>& form, int k)
{
    if (k < 0 || k >= rp.socle())
        throw std::out_of_range("source degree " + std::to_string(k) + " outside 0.." +
                                std::to_string(rp.socle() - 1));
    const int src_lo = y_min(rp, k), tgt_lo = y_min(rp, k + 1), tgt_hi = y_max(rp, k + 1);
    Matrix<T> m(static_cast<std::size_t>(dim(rp, k + 1)), static_cast<std::size_t>(dim(rp, k)));
    for (int j = src_lo; j <= y_max(rp, k); ++j) {
        auto col = static_cast<std::size_t>(j - src_lo);
        // x * x^{k-j} y^j keeps y-exponent j; y * ... raises it to j+1
        if (k - j + 1 <= rp.d() && j >= tgt_lo && j <= tgt_hi)
            m(static_cast<std::size_t>(j - tgt_lo), col) = form.a;
        if (j + 1 <= rp.q() && j + 1 >= tgt_lo && j + 1 <= tgt_hi)
            m(static_cast<std::size_t>(j + 1 - tgt_lo), col) = form.b;
    }
    return m;
}

/// x (l_1 ... l_u) : R_k -> R_{k+u} built in one shot from the product coefficients.
template <ExactRing T>
Matrix<T> mult_matrix_block(const RingParams& rp, std::span<const LinearForm<T>> forms, int k)
{
    const int u = static_cast<int>(forms.size());
    if (k < 0 || k + u > rp.socle())
        throw std::out_of_range("block map R_" + std::to_string(k) + " -> R_" + std::to_string(k + u) +
                                " outside 0.." + std::to_string(rp.socle()));
    auto coeff = product_coefficients(forms);
    const int src_lo = y_min(rp, k), tgt_lo = y_min(rp, k + u);
    Matrix<T> m(static_cast<std::size_t>(dim(rp, k + u)), static_cast<std::size_t>(dim(rp, k)));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            int shift = (tgt_lo + static_cast<int>(r)) - (src_lo + static_cast<int>(c));
            if (shift >= 0 && shift <= u) m(r, c) = coeff[static_cast<std::size_t>(shift)];
        }
    return m;
}

template <ExactRing T>
Matrix<T> mult_matrix_block(const RingParams& rp, const FormList<T>& forms, int k)
{
    return mult_matrix_block(rp, std::span<const LinearForm<T>>(forms), k);
}

/// Ordered product of single-form matrices; the reference for mult_matrix_block.
template <ExactRing T>
Matrix<T> mult_matrix_chain(const RingParams& rp, std::span<const LinearForm<T>> forms, int k)
{
    Matrix<T> acc = Matrix<T>::identity(static_cast<std::size_t>(dim(rp, k)));
    for (std::size_t t = 0; t < forms.size(); ++t)
        acc = mult_matrix(rp, forms[t], k + static_cast<int>(t)) * acc;
    return acc;
}

/// D_{d,q}(a; b): determinant of x (l_1 ... l_{d+q-2k}) : R_k -> R_{d+q-k}.
template <ExactRing T>
T det_direct(const RingParams& rp, int k, std::span<const LinearForm<T>> forms)
{
    if (k < 0 || 2 * k > rp.socle())
        throw std::out_of_range("degree k=" + std::to_string(k) + " outside 0..(d+q)/2");
    if (static_cast<int>(forms.size()) != rp.socle() - 2 * k)
        throw std::invalid_argument("non-square multiplication map: need " + std::to_string(rp.socle() - 2 * k) +
                                    " forms, got " + std::to_string(forms.size()));
    return det(mult_matrix_block(rp, forms, k));
}

template <ExactRing T>
T det_direct(const RingParams& rp, int k, const FormList<T>& forms)
{
    return det_direct(rp, k, std::span<const LinearForm<T>>(forms));
}

struct SlpEntry {
    int k;
    Rational det;
    bool nonzero;
};

struct SlpReport {
    std::vector<SlpEntry> entries;
    bool holds;
    std::optional<int> first_failure;
};

/// Determinant of x l^{d+q-2k} : R_k -> R_{d+q-k} for every 0 <= k <= (d+q)/2.
inline SlpReport slp_check(const RingParams& rp, const LinearForm<Rational>& form)
{
    SlpReport report{{}, true, std::nullopt};
    for (int k = 0; 2 * k <= rp.socle(); ++k) {
        FormList<Rational> forms(static_cast<std::size_t>(rp.socle() - 2 * k), form);
        Rational d = det_direct(rp, k, forms);
        bool nz = sgn(d) != 0;
        if (!nz && report.holds) {
            report.holds = false;
            report.first_failure = k;
        }
        report.entries.push_back({k, d, nz});
    }
    return report;
}

} // namespace lefdet
