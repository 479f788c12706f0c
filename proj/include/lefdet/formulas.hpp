#pragma once

/*
 * Closed forms for D_{d,q}(a; b) = det( x l_1 ... l_{d+q-2k} : R_k -> R_{d+q-k} ).
 *
 * det_schur_expansion
 *   Split the forms into a "check" group l_1..l_u and a "hat" group
 *   l_{u+1}..l_n (n = d+q-2k). With X : R_k -> R_{k+u} and
 *   Y : R_{k+u} -> R_{d+q-k}, Cauchy-Binet gives
 *     det(Y X) = sum_delta det(Y_delta) det(X^delta)
 *   over (p+1)-subsets delta of the y-exponents of R_{k+u}, p+1 = dim R_k.
 *   X[i][j] = E_{u+j-i}(a_check; b_check) and Y[i][j] = E_{i-j}(b_hat; a_hat),
 *   so both minors are Jacobi-Trudi determinants:
 *     det(X^delta) = det(E_{lam_r + c - r}(a_check; b_check)),  lam_r = u + r - delta_r
 *     det(Y_delta) = det(E_{nu_r + c - r}(b_hat; a_hat)),       nu_r = max(0, q-k) + r - delta_r
 *   i.e. beta_check^{p+1} s_{lam~}(a/b) and alpha_hat^{p+1} s_{nu~}(b/a).
 *   The homogenised E never divides, so no coefficient needs to be nonzero.
 *
 * det_corollary
 *   beta^{k+1} s_{((k+1)^{d-k})}(a/b) for k <= q and
 *   beta^{q+1} s_{((q+1)^{d+q-2k})}(a/b) for k >= q, again homogenised.
 *
 * det_paper_literal / det_paper_literal_homog
 *   The four published case statements, evaluated as written. They are an
 *   audit target only: for mixed splits they do not agree with det_direct
 *   (e.g. (d,q,k,u) = (2,2,1,1) with forms (2,1),(1,3) gives 36, not 43).
 */

#include "lefdet/matrix.hpp"
#include "lefdet/partition.hpp"
#include "lefdet/rational.hpp"
#include "lefdet/ring.hpp"
#include "lefdet/symfunc.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace lefdet {

template <ExactRing T>
struct SplitForms {
    FormList<T> check; // factored by b, applied first
    FormList<T> hat;   // factored by a

    SplitForms() = default;
    SplitForms(FormList<T> c, FormList<T> h) : check(std::move(c)), hat(std::move(h)) {}

    /// First u forms go to the check group.
    static SplitForms at(const FormList<T>& forms, std::size_t u)
    {
        if (u > forms.size()) throw std::invalid_argument("split point beyond the form list");
        return SplitForms(FormList<T>(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(u)),
                          FormList<T>(forms.begin() + static_cast<std::ptrdiff_t>(u), forms.end()));
    }

    std::size_t u() const { return check.size(); }

    FormList<T> all() const
    {
        FormList<T> out = check;
        out.insert(out.end(), hat.begin(), hat.end());
        return out;
    }
};

namespace detail {

inline int expect_square_split(const RingParams& rp, int k, std::size_t total)
{
    if (k < 0 || 2 * k > rp.socle())
        throw std::out_of_range("degree k=" + std::to_string(k) + " outside 0..(d+q)/2");
    const int n = rp.socle() - 2 * k;
    if (static_cast<int>(total) != n)
        throw std::invalid_argument("split sizes sum to " + std::to_string(total) + ", need d+q-2k = " +
                                    std::to_string(n));
    return n;
}

inline std::optional<Partition> as_partition(const std::vector<int>& seq)
{
    if (std::any_of(seq.begin(), seq.end(), [](int v) { return v < 0; })) return std::nullopt;
    return Partition(seq);
}

} // namespace detail

template <ExactRing T>
struct ExpansionTerm {
    std::vector<int> delta; // y-exponents in R_{k+u}, strictly increasing
    std::vector<int> lam;   // u + r - delta_r
    std::vector<int> nu;    // max(0, q-k) + r - delta_r
    T x_minor;
    T y_minor;
    T value;

    std::optional<Partition> lam_partition() const { return detail::as_partition(lam); }
    std::optional<Partition> nu_partition() const { return detail::as_partition(nu); }
};

template <ExactRing T>
struct Expansion {
    T value;
    std::size_t rows = 0; // dim R_k
    std::vector<ExpansionTerm<T>> terms;
};

template <ExactRing T>
Expansion<T> det_schur_expansion(const RingParams& rp, int k, const SplitForms<T>& sf)
{
    detail::expect_square_split(rp, k, sf.check.size() + sf.hat.size());
    if (y_min(rp, k) != 0) throw std::logic_error("expansion assumes R_k starts at y^0");

    const int u = static_cast<int>(sf.u());
    const int mid = k + u;
    const int lo = y_min(rp, mid), hi = y_max(rp, mid);
    const int hat_offset = std::max(0, rp.q() - k);
    const auto rows = static_cast<std::size_t>(dim(rp, k));

    const auto e_check = elementary_homog_all(coefficient_pair<T>(sf.check));
    const auto e_hat = elementary_homog_all(coefficient_pair<T>(sf.hat).swapped());

    Expansion<T> out{ring_zero<T>(), rows, {}};
    for (const auto& picked : index_subsets(static_cast<std::size_t>(hi - lo + 1), rows)) {
        ExpansionTerm<T> term;
        for (std::size_t r = 0; r < rows; ++r) {
            int delta = lo + static_cast<int>(picked[r]);
            term.delta.push_back(delta);
            term.lam.push_back(u + static_cast<int>(r) - delta);
            term.nu.push_back(hat_offset + static_cast<int>(r) - delta);
        }
        term.x_minor = detail::jacobi_trudi_det<T>(term.lam, e_check);
        term.y_minor = detail::jacobi_trudi_det<T>(term.nu, e_hat);
        term.value = T(term.x_minor * term.y_minor);
        out.value = T(out.value + term.value);
        out.terms.push_back(std::move(term));
    }
    return out;
}

/// Partition fed to schur_homog by det_corollary, with its row count.
inline std::pair<Partition, std::size_t> corollary_shape(const RingParams& rp, int k)
{
    if (k <= rp.q())
        return {Partition::rectangle(rp.d() - k, k + 1), static_cast<std::size_t>(k + 1)};
    return {Partition::rectangle(rp.socle() - 2 * k, rp.q() + 1), static_cast<std::size_t>(rp.q() + 1)};
}

template <ExactRing T>
T det_corollary(const RingParams& rp, int k, std::span<const LinearForm<T>> forms)
{
    detail::expect_square_split(rp, k, forms.size());
    auto [shape, rows] = corollary_shape(rp, k);
    return schur_homog(shape, coefficient_pair(forms), rows);
}

template <ExactRing T>
T det_corollary(const RingParams& rp, int k, const FormList<T>& forms)
{
    return det_corollary(rp, k, std::span<const LinearForm<T>>(forms));
}

/// Case numbers 1..4 whose hypotheses hold for (d, q, k, u); boundaries can match several.
inline std::vector<int> literal_cases(const RingParams& rp, int k, int u)
{
    const int d = rp.d(), q = rp.q();
    std::vector<int> out;
    if (q <= k && 2 * k <= q + d) out.push_back(1);
    if (0 <= k && k + u <= q) out.push_back(2);
    if (0 <= k && k <= q && d <= k + u) out.push_back(3);
    if (k <= q && q <= k + u && k + u <= d) out.push_back(4);
    return out;
}

template <ExactRing T>
struct LiteralCase {
    int case_id;
    T value;
};

namespace detail {

template <ExactRing T>
void require_literal_defined(const HomogPair<T>& check, const HomogPair<T>& hat)
{
    if (lefdet::is_zero(product(check.b)) || lefdet::is_zero(product(hat.a)))
        throw std::domain_error("literal formula undefined: a check-group b or hat-group a vanishes");
}

// Every literal sum ranges over lam inside (width^{k+1}). Terms where the
// factor carrying s_{lam~} has fewer than lam_1 variables vanish and are
// skipped; this also drops every lam that would not fit in (d^{k+1}).
inline int literal_width(int nominal, std::size_t lam_side_vars)
{
    return std::min(nominal, static_cast<int>(lam_side_vars));
}

} // namespace detail

/// The published case statements with ratio vectors, over the rationals.
inline std::vector<LiteralCase<Rational>> det_paper_literal(const RingParams& rp, int k, int u,
                                                            const SplitForms<Rational>& sf)
{
    const int n = detail::expect_square_split(rp, k, sf.check.size() + sf.hat.size());
    if (u != static_cast<int>(sf.u())) throw std::invalid_argument("u does not match the check group size");
    const auto check = coefficient_pair<Rational>(sf.check);
    const auto hat = coefficient_pair<Rational>(sf.hat);
    detail::require_literal_defined(check, hat);

    const int d = rp.d(), q = rp.q();
    ValueVector<Rational> a_over_b, b_over_a;
    for (std::size_t i = 0; i < check.size(); ++i) a_over_b.push_back(Rational(check.a[i] / check.b[i]));
    for (std::size_t i = 0; i < hat.size(); ++i) b_over_a.push_back(Rational(hat.b[i] / hat.a[i]));
    const Rational alpha_hat = product(hat.a), beta_check = product(check.b);

    std::vector<LiteralCase<Rational>> out;
    for (int id : literal_cases(rp, k, u)) {
        Rational value;
        if (id == 1) {
            value = power(alpha_hat, static_cast<unsigned>(q + 1)) * power(beta_check, static_cast<unsigned>(q + 1)) *
                    schur(Partition::rectangle(q + 1, u), a_over_b) *
                    schur(Partition::rectangle(q + 1, n - u), b_over_a);
        } else {
            const int nominal = id == 4 ? q - k : u;
            // s_{lam~} sits on the check side in cases 2 and 4, on the hat side in case 3
            const std::size_t lam_vars = id == 3 ? b_over_a.size() : a_over_b.size();
            Rational sum = 0;
            for (const auto& lam : enumerate_in_rectangle(detail::literal_width(nominal, lam_vars), k + 1)) {
                Partition mu = complement(lam, d, k + 1);
                if (id == 3)
                    sum += schur_jacobi_trudi(mu, a_over_b) * schur_jacobi_trudi(lam, b_over_a);
                else
                    sum += schur_jacobi_trudi(lam, a_over_b) * schur_jacobi_trudi(mu, b_over_a);
            }
            value = power(alpha_hat, static_cast<unsigned>(k + 1)) *
                    power(beta_check, static_cast<unsigned>(k + 1)) * sum;
        }
        out.push_back({id, value});
    }
    return out;
}

/*
 * Same case statements with every beta^r s(a/b) replaced by its
 * division-free Jacobi-Trudi determinant. Agrees with det_paper_literal
 * wherever that is defined and also works over MultiPoly.
 */
template <ExactRing T>
std::vector<LiteralCase<T>> det_paper_literal_homog(const RingParams& rp, int k, int u, const SplitForms<T>& sf)
{
    const int n = detail::expect_square_split(rp, k, sf.check.size() + sf.hat.size());
    if (u != static_cast<int>(sf.u())) throw std::invalid_argument("u does not match the check group size");
    const auto check = coefficient_pair<T>(sf.check);
    const auto hat = coefficient_pair<T>(sf.hat);
    detail::require_literal_defined(check, hat);
    const auto hat_swapped = hat.swapped();
    const int d = rp.d(), q = rp.q();
    const auto rows = static_cast<std::size_t>(k + 1);

    std::vector<LiteralCase<T>> out;
    for (int id : literal_cases(rp, k, u)) {
        T value = ring_zero<T>();
        if (id == 1) {
            const auto qrows = static_cast<std::size_t>(q + 1);
            value = T(schur_homog(Partition::rectangle(u, q + 1), check, qrows) *
                      schur_homog(Partition::rectangle(n - u, q + 1), hat_swapped, qrows));
        } else {
            const int nominal = id == 4 ? q - k : u;
            const std::size_t lam_vars = id == 3 ? hat.size() : check.size();
            for (const auto& lam : enumerate_in_rectangle(detail::literal_width(nominal, lam_vars), k + 1)) {
                Partition mu = complement(lam, d, k + 1);
                if (id == 3)
                    value = T(value + schur_homog(mu, check, rows) * schur_homog(lam, hat_swapped, rows));
                else
                    value = T(value + schur_homog(lam, check, rows) * schur_homog(mu, hat_swapped, rows));
            }
        }
        out.push_back({id, std::move(value)});
    }
    return out;
}

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal;
};

namespace detail {

inline void require_nonzero_entries(const ValueVector<Rational>& v, const char* what)
{
    for (const auto& x : v)
        if (sgn(x) == 0) throw std::domain_error(std::string(what) + " has a zero entry");
}

inline ValueVector<Rational> ratios(const ValueVector<Rational>& num, const ValueVector<Rational>& den)
{
    ValueVector<Rational> out;
    for (std::size_t i = 0; i < num.size(); ++i) out.push_back(Rational(num[i] / den[i]));
    return out;
}

} // namespace detail

/// beta^r s_{(r^m)}(a/b) against alpha^r s_{(r^m)}(b/a), with |a| = |b| = 2m.
inline IdentityCheck duality_check(int r, int m, const ValueVector<Rational>& a, const ValueVector<Rational>& b)
{
    if (r < 1 || m < 1) throw std::invalid_argument("duality needs r, m >= 1");
    if (a.size() != static_cast<std::size_t>(2 * m) || b.size() != static_cast<std::size_t>(2 * m))
        throw std::invalid_argument("duality needs |a| = |b| = 2m");
    detail::require_nonzero_entries(a, "a");
    detail::require_nonzero_entries(b, "b");

    // s_{(r^m)} through Jacobi-Trudi on its conjugate (m^r)
    const Partition conj_rect = Partition::rectangle(m, r);
    Rational lhs = power(product(b), static_cast<unsigned>(r)) *
                   schur_jacobi_trudi(conj_rect, detail::ratios(a, b));
    Rational rhs = power(product(a), static_cast<unsigned>(r)) *
                   schur_jacobi_trudi(conj_rect, detail::ratios(b, a));
    bool eq = lhs == rhs;
    return {lhs, rhs, eq};
}

/// (prod y)^r s_lam(x/y) against (prod x)^r s_mu(y/x), mu = (r^n) \ lam.
inline IdentityCheck ec2_check(const Partition& lam, int r, int n, const ValueVector<Rational>& x,
                               const ValueVector<Rational>& y)
{
    if (r < 1 || n < 1) throw std::invalid_argument("complement identity needs r, n >= 1");
    if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("complement identity needs |x| = |y| = n");
    detail::require_nonzero_entries(x, "x");
    detail::require_nonzero_entries(y, "y");
    Partition mu = complement(lam, r, n);

    Rational lhs = power(product(y), static_cast<unsigned>(r)) * schur(lam, detail::ratios(x, y));
    Rational rhs = power(product(x), static_cast<unsigned>(r)) * schur(mu, detail::ratios(y, x));
    bool eq = lhs == rhs;
    return {lhs, rhs, eq};
}

template <ExactRing T>
struct LiteralAudit {
    int case_id;
    T value;
    bool matches_direct;
};

template <ExactRing T>
struct DiscrepancyReport {
    int k = 0;
    int u = 0;
    T direct;
    Expansion<T> expansion;
    bool expansion_matches = false;
    std::optional<T> corollary;          // only for the trivial split (hat group empty)
    std::optional<bool> corollary_matches;
    std::vector<LiteralAudit<T>> literal;
    std::optional<std::string> literal_error;
};

template <ExactRing T>
DiscrepancyReport<T> discrepancy_report(const RingParams& rp, int k, int u, const SplitForms<T>& sf)
{
    detail::expect_square_split(rp, k, sf.check.size() + sf.hat.size());
    if (u != static_cast<int>(sf.u())) throw std::invalid_argument("u does not match the check group size");

    DiscrepancyReport<T> rep;
    rep.k = k;
    rep.u = u;
    const auto forms = sf.all();
    rep.direct = det_direct(rp, k, forms);
    rep.expansion = det_schur_expansion(rp, k, sf);
    rep.expansion_matches = rep.expansion.value == rep.direct;
    if (sf.hat.empty()) {
        rep.corollary = det_corollary(rp, k, forms);
        rep.corollary_matches = *rep.corollary == rep.direct;
    }
    try {
        std::vector<LiteralCase<T>> cases;
        if constexpr (std::is_same_v<T, Rational>)
            cases = det_paper_literal(rp, k, u, sf);
        else
            cases = det_paper_literal_homog(rp, k, u, sf);
        for (auto& c : cases) {
            bool m = c.value == rep.direct;
            rep.literal.push_back({c.case_id, std::move(c.value), m});
        }
    } catch (const std::domain_error& e) {
        rep.literal_error = e.what();
    }
    return rep;
}

} // namespace lefdet
