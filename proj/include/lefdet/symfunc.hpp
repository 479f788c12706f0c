#pragma once

/*
 * Pointwise evaluation of elementary symmetric and Schur polynomials.
 *
 * Three independent Schur evaluators:
 *   schur_jacobi_trudi(lam, x)  det(e_{lam_i + j - i}(x)), which is s of the
 *                               CONJUGATE of lam
 *   schur_bialternant(lam, x)   ratio of alternants, s_lam itself
 *   schur_tableaux(lam, x)      sum over semistandard tableaux, s_lam itself
 *
 * The homogenised forms take paired lists (a; b) and never divide:
 *   E_k(a; b) = sum over k-subsets S of prod_{S} a_i * prod_{not S} b_i
 * so that E_k(a; b) = (prod b) e_k(a / b) whenever every b_i is nonzero.
 */

#include "lefdet/matrix.hpp"
#include "lefdet/partition.hpp"
#include "lefdet/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefdet {

template <ExactRing T>
using ValueVector = std::vector<T>;

template <ExactRing T>
struct HomogPair {
    ValueVector<T> a;
    ValueVector<T> b;

    HomogPair() = default;
    HomogPair(ValueVector<T> a_, ValueVector<T> b_) : a(std::move(a_)), b(std::move(b_))
    {
        if (a.size() != b.size()) throw std::invalid_argument("homogeneous pair lists differ in length");
    }

    std::size_t size() const { return a.size(); }

    HomogPair swapped() const { return HomogPair(b, a); }
};

/// e_0..e_n of x, by multiplying out prod (1 + x_i t).
template <ExactRing T>
std::vector<T> elementary_all(std::span<const T> x)
{
    std::vector<T> e{ring_one<T>()};
    for (const auto& xi : x) {
        e.push_back(ring_zero<T>());
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] = T(e[k] + xi * e[k - 1]);
    }
    return e;
}

template <ExactRing T>
T elementary(int k, std::span<const T> x)
{
    if (k < 0 || static_cast<std::size_t>(k) > x.size()) return ring_zero<T>();
    return elementary_all(x)[static_cast<std::size_t>(k)];
}

template <ExactRing T>
T elementary(int k, const ValueVector<T>& x)
{
    return elementary(k, std::span<const T>(x));
}

/// E_0..E_n of (a; b): coefficients of prod (a_i t + b_i) by ascending power of t.
template <ExactRing T>
std::vector<T> elementary_homog_all(const HomogPair<T>& hp)
{
    std::vector<T> e{ring_one<T>()};
    for (std::size_t i = 0; i < hp.size(); ++i) {
        std::vector<T> next(e.size() + 1, ring_zero<T>());
        for (std::size_t k = 0; k < e.size(); ++k) {
            next[k] = T(next[k] + hp.b[i] * e[k]);
            next[k + 1] = T(next[k + 1] + hp.a[i] * e[k]);
        }
        e = std::move(next);
    }
    return e;
}

template <ExactRing T>
T elementary_homog(int k, const HomogPair<T>& hp)
{
    if (k < 0 || static_cast<std::size_t>(k) > hp.size()) return ring_zero<T>();
    return elementary_homog_all(hp)[static_cast<std::size_t>(k)];
}

namespace detail {

// det(values[seq_r + c - r]) over r, c < seq.size(); out-of-range indices read as zero.
template <ExactRing T>
T jacobi_trudi_det(std::span<const int> seq, const std::vector<T>& values)
{
    const std::size_t l = seq.size();
    Matrix<T> m(l, l);
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c) {
            long idx = static_cast<long>(seq[r]) + static_cast<long>(c) - static_cast<long>(r);
            if (idx >= 0 && static_cast<std::size_t>(idx) < values.size())
                m(r, c) = values[static_cast<std::size_t>(idx)];
        }
    return det(m);
}

} // namespace detail

/// s_{conjugate(lam)}(x) = det(e_{lam_i + j - i}(x)) over the parts of lam.
template <ExactRing T>
T schur_jacobi_trudi(const Partition& lam, std::span<const T> x)
{
    if (lam.empty()) return ring_one<T>();
    return detail::jacobi_trudi_det<T>(lam.parts(), elementary_all(x));
}

template <ExactRing T>
T schur_jacobi_trudi(const Partition& lam, const ValueVector<T>& x)
{
    return schur_jacobi_trudi(lam, std::span<const T>(x));
}

/// s_lam(x), via Jacobi-Trudi on the conjugate.
template <ExactRing T>
T schur(const Partition& lam, const ValueVector<T>& x)
{
    return schur_jacobi_trudi(conjugate(lam), x);
}

/// det(x_j^{lam_i + n - i}) / det(x_j^{n - i}); needs pairwise distinct x.
inline Rational schur_bialternant(const Partition& lam, const ValueVector<Rational>& x)
{
    const std::size_t n = x.size();
    if (lam.length() > n)
        throw std::invalid_argument("bialternant needs at most as many parts as variables");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[i] == x[j]) throw std::domain_error("bialternant undefined at non-distinct point");

    Matrix<Rational> num(n, n), den(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int shift = static_cast<int>(n - 1 - i);
            num(i, j) = power(x[j], static_cast<unsigned>(lam[i] + shift));
            den(i, j) = power(x[j], static_cast<unsigned>(shift));
        }
    return Rational(det(num) / det(den));
}

/// Sum over semistandard tableaux of shape lam with entries 1..|x|.
template <ExactRing T>
T schur_tableaux(const Partition& lam, const ValueVector<T>& x)
{
    if (lam.weight() > 10 || x.size() > 5)
        throw std::invalid_argument("schur_tableaux limited to 10 cells and 5 variables");

    const auto& shape = lam.parts();
    std::vector<std::vector<int>> tab(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(static_cast<std::size_t>(shape[r]), 0);
    const int n = static_cast<int>(x.size());

    T total = ring_zero<T>();
    // fill cells row by row; rows weakly increase, columns strictly increase
    auto fill = [&](auto& self, std::size_t r, std::size_t c, const T& weight) -> void {
        if (r == shape.size()) {
            total = T(total + weight);
            return;
        }
        if (c == static_cast<std::size_t>(shape[r])) {
            self(self, r + 1, 0, weight);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            self(self, r, c + 1, T(weight * x[static_cast<std::size_t>(v - 1)]));
        }
    };
    fill(fill, 0, 0, ring_one<T>());
    return total;
}

/*
 * det(E_{lam_i + j - i}(a; b)) of size `rows` (lam padded with zero parts).
 * Equals (prod b)^rows * s_{conjugate(lam)}(a / b) when every b_i != 0.
 * Without an explicit row count the size is the number of parts of lam.
 */
template <ExactRing T>
T schur_homog(const Partition& lam, const HomogPair<T>& hp, std::size_t rows)
{
    if (rows < lam.length()) throw std::invalid_argument("schur_homog row count below partition length");
    if (rows == 0) return ring_one<T>();
    auto seq = lam.padded(rows);
    return detail::jacobi_trudi_det<T>(seq, elementary_homog_all(hp));
}

template <ExactRing T>
T schur_homog(const Partition& lam, const HomogPair<T>& hp)
{
    return schur_homog(lam, hp, lam.length());
}

/// Homogenised Jacobi-Trudi on a raw integer sequence (entries may be negative).
template <ExactRing T>
T jacobi_trudi_homog_raw(std::span<const int> seq, const HomogPair<T>& hp)
{
    if (seq.empty()) return ring_one<T>();
    return detail::jacobi_trudi_det<T>(seq, elementary_homog_all(hp));
}

} // namespace lefdet
