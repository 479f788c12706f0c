#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library routine it is meant to check.

#include "lefdet/mpoly.hpp"
#include "lefdet/partition.hpp"
#include "lefdet/random.hpp"
#include "lefdet/rational.hpp"
#include "lefdet/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using lefdet::Rational;

/// Leibniz sum over all permutations.
template <class T>
T leibniz_det(const lefdet::Matrix<T>& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = lefdet::ring_zero<T>();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = lefdet::ring_one<T>();
        for (std::size_t i = 0; i < n; ++i) term = T(term * m(i, perm[i]));
        total = inversions % 2 ? T(total - term) : T(total + term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Young diagram as a set of (row, col) cells.
inline std::set<std::pair<int, int>> cells(const lefdet::Partition& p)
{
    std::set<std::pair<int, int>> out;
    for (std::size_t r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c) out.insert({static_cast<int>(r), c});
    return out;
}

inline lefdet::Partition from_cells(const std::set<std::pair<int, int>>& cs)
{
    std::map<int, int> rows;
    for (auto [r, c] : cs) rows[r] = std::max(rows[r], c + 1);
    std::vector<int> parts;
    for (auto [r, len] : rows) {
        if (static_cast<int>(parts.size()) != r) parts.resize(static_cast<std::size_t>(r), 0);
        parts.push_back(len);
    }
    return lefdet::Partition(parts);
}

inline lefdet::Partition transpose_diagram(const lefdet::Partition& p)
{
    std::set<std::pair<int, int>> t;
    for (auto [r, c] : cells(p)) t.insert({c, r});
    return from_cells(t);
}

/// Cells of the r x l box not in p, rotated by 180 degrees.
inline lefdet::Partition rotated_complement(const lefdet::Partition& p, int r, int l)
{
    auto in = cells(p);
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j)
            if (!in.count({i, j})) out.insert({l - 1 - i, r - 1 - j});
    return from_cells(out);
}

/// Every weakly decreasing sequence in [0, r]^l, by brute force over all of [0, r]^l.
inline std::set<std::vector<int>> brute_partitions_in_box(int r, int l)
{
    std::set<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(l), 0);
    for (;;) {
        if (std::is_sorted(cur.rbegin(), cur.rend())) out.insert(lefdet::Partition(cur).parts());
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == r) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return out;
}

template <class T>
T subset_elementary(int k, const std::vector<T>& x)
{
    T total = lefdet::ring_zero<T>();
    const std::size_t n = x.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        T term = lefdet::ring_one<T>();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) term = T(term * x[i]);
        total = T(total + term);
    }
    return total;
}

/// sum over |S| = k of prod_S a * prod_{not S} b
template <class T>
T subset_elementary_homog(int k, const std::vector<T>& a, const std::vector<T>& b)
{
    T total = lefdet::ring_zero<T>();
    const std::size_t n = a.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        T term = lefdet::ring_one<T>();
        for (std::size_t i = 0; i < n; ++i) term = T(term * ((mask & (1U << i)) ? a[i] : b[i]));
        total = T(total + term);
    }
    return total;
}

/*
 * Multiplication map built by literally multiplying each basis monomial by
 * the product of the forms in K[x,y] (as a bivariate polynomial map) and
 * reading off surviving coefficients.
 */
template <class T>
lefdet::Matrix<T> naive_block(int d, int q, const std::vector<lefdet::LinearForm<T>>& forms, int k)
{
    using Poly = std::map<std::pair<int, int>, T>; // (x-exp, y-exp) -> coeff
    auto basis_of = [&](int deg) {
        std::vector<std::pair<int, int>> b;
        for (int i = deg; i >= 0; --i)
            if (i <= d && deg - i <= q && deg - i >= 0) b.push_back({i, deg - i});
        return b;
    };
    const int u = static_cast<int>(forms.size());
    auto src = basis_of(k), tgt = basis_of(k + u);
    lefdet::Matrix<T> m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Poly p{{src[c], lefdet::ring_one<T>()}};
        for (const auto& f : forms) {
            Poly next;
            for (const auto& [e, v] : p) {
                auto add = [&](std::pair<int, int> key, const T& val) {
                    auto it = next.find(key);
                    if (it == next.end())
                        next.emplace(key, val);
                    else
                        it->second = T(it->second + val);
                };
                add({e.first + 1, e.second}, T(v * f.a));
                add({e.first, e.second + 1}, T(v * f.b));
            }
            p = std::move(next);
        }
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            auto it = p.find(tgt[r]);
            if (it != p.end()) m(r, c) = it->second;
        }
    }
    return m;
}

inline lefdet::Matrix<Rational> random_matrix(lefdet::CellRng& rng, std::size_t rows, std::size_t cols,
                                              std::int64_t bound = 5)
{
    lefdet::Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(true, bound);
    return m;
}

/// Polynomial in `arity` variables with a few small random terms.
inline lefdet::MultiPoly random_poly(lefdet::CellRng& rng, std::size_t arity, int max_terms, unsigned max_exp = 2)
{
    lefdet::MultiPoly::TermMap terms;
    int n = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < n; ++t) {
        lefdet::MultiPoly::Exponents e(arity);
        for (auto& x : e) x = static_cast<unsigned>(rng.uniform(0, max_exp));
        terms[e] += rng.rational(false, 5);
    }
    return lefdet::MultiPoly::from_terms(arity, terms);
}

} // namespace oracle
