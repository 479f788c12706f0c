#pragma once

/*
 * Sparse multivariate polynomials with rational coefficients.
 *
 * Terms live in an ordered map from dense exponent vectors to nonzero
 * coefficients, so two polynomials are equal iff their maps are equal.
 * A polynomial of arity 0 is a scalar constant and adopts the arity of
 * whatever it is combined with; this is what ring_traits<MultiPoly>::zero()
 * and one() return.
 */

#include "lefdet/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefdet {

class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c, std::size_t arity = 0)
    {
        MultiPoly p;
        p.arity_ = arity;
        if (sgn(c) != 0) p.terms_.emplace(Exponents(arity, 0U), c);
        return p;
    }

    static MultiPoly variable(std::size_t arity, std::size_t index)
    {
        if (index >= arity) throw std::out_of_range("variable index exceeds arity");
        MultiPoly p;
        p.arity_ = arity;
        Exponents e(arity, 0U);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    /// Builds from explicit terms; zero coefficients are dropped.
    static MultiPoly from_terms(std::size_t arity, const TermMap& terms)
    {
        MultiPoly p;
        p.arity_ = arity;
        for (const auto& [e, c] : terms) {
            if (e.size() != arity) throw std::invalid_argument("exponent vector has wrong arity");
            if (sgn(c) != 0) p.terms_[e] += c;
        }
        std::erase_if(p.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q)
    {
        std::size_t n = common_arity(p, q);
        MultiPoly r = p.lifted(n);
        for (const auto& [e, c] : q.lifted(n).terms_) r.accumulate(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r = p;
        for (auto& kv : r.terms_) kv.second = -kv.second;
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q)
    {
        std::size_t n = common_arity(p, q);
        MultiPoly lp = p.lifted(n), lq = q.lifted(n);
        MultiPoly r;
        r.arity_ = n;
        Exponents e(n);
        for (const auto& [ep, cp] : lp.terms_) {
            for (const auto& [eq, cq] : lq.terms_) {
                for (std::size_t i = 0; i < n; ++i) e[i] = ep[i] + eq[i];
                r.accumulate(e, Rational(cp * cq));
            }
        }
        return r;
    }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q)
    {
        std::size_t n = common_arity(p, q);
        return p.lifted(n).terms_ == q.lifted(n).terms_;
    }

    Rational eval(std::span<const Rational> point) const
    {
        if (arity_ != 0 && point.size() != arity_)
            throw std::invalid_argument("evaluation point has wrong arity");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) {
                    mpq_class pw;
                    mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
                    mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
                    t *= pw;
                }
            total += t;
        }
        return total;
    }

    /// Text like `3*a1^2*b2 - a2 + 1/2`, highest exponent vectors first.
    std::string to_string(const std::vector<std::string>& names) const
    {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool negative = sgn(c) < 0;
            Rational mag = abs(c);
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;

            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += '*';
                mono += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += lefdet::to_string(mag);
            } else {
                if (mag != 1) out += lefdet::to_string(mag) + '*';
                out += mono;
            }
        }
        return out;
    }

private:
    static std::size_t common_arity(const MultiPoly& p, const MultiPoly& q)
    {
        if (p.arity_ == 0) return q.arity_;
        if (q.arity_ == 0 || q.arity_ == p.arity_) return p.arity_;
        throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(p.arity_) + " vs " +
                                    std::to_string(q.arity_));
    }

    MultiPoly lifted(std::size_t n) const
    {
        if (arity_ == n) return *this;
        MultiPoly r;
        r.arity_ = n;
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents(n, 0U), c);
        return r;
    }

    void accumulate(const Exponents& e, const Rational& c)
    {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::size_t arity_ = 0;
    TermMap terms_;
};

template <>
struct ring_traits<MultiPoly> {
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly::constant(Rational(1)); }
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
};

/// Variable names a1..an, b1..bn for a 2n-variable polynomial ring.
inline std::vector<std::string> form_variable_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
    return names;
}

} // namespace lefdet
