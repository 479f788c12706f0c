#pragma once

/*
 * Seeded generators for sweeps. Each sweep cell gets its own engine derived
 * from (seed, coordinates...) through std::seed_seq, so results do not
 * depend on which worker evaluates the cell or in what order. Sampling uses
 * raw engine output with rejection rather than <random> distributions, whose
 * algorithms are implementation defined.
 */

#include "lefdet/mpoly.hpp"
#include "lefdet/rational.hpp"
#include "lefdet/ring.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace lefdet {

class CellRng {
public:
    CellRng(std::uint64_t seed, std::initializer_list<std::int64_t> coords)
    {
        std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        for (auto c : coords) {
            auto v = static_cast<std::uint64_t>(c);
            words.push_back(static_cast<std::uint32_t>(v));
            words.push_back(static_cast<std::uint32_t>(v >> 32));
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Nonzero integer in [-bound, bound].
    std::int64_t nonzero(std::int64_t bound)
    {
        std::int64_t v = uniform(-bound, bound - 1);
        return v >= 0 ? v + 1 : v;
    }

    /// p/q with p, q in [-bound, bound] \ {0}; p may be 0 when allow_zero.
    Rational rational(bool allow_zero, std::int64_t bound = 9)
    {
        std::int64_t num = allow_zero ? uniform(-bound, bound) : nonzero(bound);
        std::int64_t den = nonzero(bound);
        Rational r(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
        if (den < 0) r = -r;
        r.canonicalize();
        return r;
    }

    /// Nonzero distinct rationals; used as evaluation points.
    std::vector<Rational> distinct_nonzero(std::size_t n, std::int64_t bound = 9)
    {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = rational(false, bound);
            bool fresh = true;
            for (const auto& x : out) fresh = fresh && x != r;
            if (fresh) out.push_back(r);
        }
        return out;
    }

    LinearForm<Rational> form(bool allow_zero)
    {
        for (;;) {
            Rational a = rational(allow_zero), b = rational(allow_zero);
            if (sgn(a) != 0 || sgn(b) != 0) return LinearForm<Rational>(a, b);
        }
    }

    FormList<Rational> forms(std::size_t n, bool allow_zero)
    {
        FormList<Rational> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(form(allow_zero));
        return out;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// l_t = a_t x + b_t y with a_1..a_n, b_1..b_n as the 2n polynomial variables.
inline FormList<MultiPoly> symbolic_forms(std::size_t n)
{
    FormList<MultiPoly> out;
    for (std::size_t t = 0; t < n; ++t)
        out.emplace_back(MultiPoly::variable(2 * n, t), MultiPoly::variable(2 * n, n + t));
    return out;
}

} // namespace lefdet
