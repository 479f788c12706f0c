#pragma once

/*
 * Exact rationals and the ring contract shared by every algorithm in lefdet.
 *
 * A coefficient type T takes part in the generic code (matrices, symmetric
 * functions, multiplication maps, closed forms) when ring_traits<T> provides
 * zero(), one() and is_zero(), and T has the usual +, -, * and ==.
 * Rational and MultiPoly are the two instantiations.
 */

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lefdet {

using Rational = mpq_class;

template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <class T>
concept ExactRing = std::copyable<T> && requires(const T& a, const T& b) {
    { T(a + b) };
    { T(a - b) };
    { T(a * b) };
    { T(-a) };
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<T>::zero() } -> std::convertible_to<T>;
    { ring_traits<T>::one() } -> std::convertible_to<T>;
    { ring_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

template <ExactRing T>
T ring_zero() { return ring_traits<T>::zero(); }

template <ExactRing T>
T ring_one() { return ring_traits<T>::one(); }

template <ExactRing T>
bool is_zero(const T& x) { return ring_traits<T>::is_zero(x); }

template <ExactRing T>
T power(const T& base, unsigned exponent)
{
    T result = ring_one<T>();
    T b = base;
    while (exponent) {
        if (exponent & 1U) result = T(result * b);
        exponent >>= 1U;
        if (exponent) b = T(b * b);
    }
    return result;
}

template <ExactRing T>
T product(const std::vector<T>& xs)
{
    T result = ring_one<T>();
    for (const auto& x : xs) result = T(result * x);
    return result;
}

/// Canonical text form: `p` or `p/q`, lowest terms, q > 0.
inline std::string to_string(const Rational& x)
{
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace detail

/// Parses `p` or `p/q` with q > 0. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text)
{
    auto s = detail::trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!detail::is_integer_literal(num, true))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos) return Rational(mpz_class(num_str));

    std::string_view den = s.substr(slash + 1);
    if (!detail::is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(mpz_class(num_str), d);
    r.canonicalize();
    return r;
}

/// Comma-separated list of rationals, e.g. `2,1/3,-4`. The empty string is the empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    if (detail::trim(text).empty()) return out;
    for (auto piece : detail::split(text, ',')) out.push_back(parse_rational(piece));
    return out;
}

} // namespace lefdet
