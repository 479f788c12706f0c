#pragma once

/*
 * Integer partitions stored as weakly decreasing positive parts.
 *
 * The empty vector is the empty partition; trailing zeros are trimmed on
 * construction, so equality is structural.
 */

#include "lefdet/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lefdet {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition has a negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// The partition (r^l): l copies of r.
    static Partition rectangle(int r, int l)
    {
        if (r < 0 || l < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
        return Partition(std::vector<int>(r == 0 ? 0 : static_cast<std::size_t>(l), r));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// i-th part, zero beyond the stored length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Parts padded with zeros to at least `n` entries.
    std::vector<int> padded(std::size_t n) const
    {
        std::vector<int> out = parts_;
        if (out.size() < n) out.resize(n, 0);
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// True iff inner[i] <= outer[i] for every i (zero padded).
inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

/// (r^l) \ p: parts r - p[l-1-i]. Requires p inside the r x l rectangle.
inline Partition complement(const Partition& p, int r, int l)
{
    if (r < 0 || l < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
    if (p.length() > static_cast<std::size_t>(l) || p.largest() > r)
        throw std::invalid_argument("partition does not fit in the (" + std::to_string(r) + "^" +
                                    std::to_string(l) + ") rectangle");
    std::vector<int> out(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) out[static_cast<std::size_t>(i)] = r - p[static_cast<std::size_t>(l - 1 - i)];
    return Partition(std::move(out));
}

/// All partitions inside (r^l), descending lexicographic on the zero-padded parts.
inline std::vector<Partition> enumerate_in_rectangle(int r, int l)
{
    if (r < 0 || l < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
    std::vector<Partition> out;
    if (r == 0 || l == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(l), 0);
    // depth-first, largest choice first
    auto rec = [&](auto& self, std::size_t pos, int cap) -> void {
        if (pos == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, r);
    return out;
}

/// `[3,1]`; the empty partition is `[]`.
inline std::string to_string(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    out += ']';
    return out;
}

inline Partition parse_partition(std::string_view text)
{
    auto s = detail::trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must be written as [p1,p2,...]: '" + std::string(text) + "'");
    s = detail::trim(s.substr(1, s.size() - 2));
    std::vector<int> parts;
    if (!s.empty()) {
        for (auto piece : detail::split(s, ',')) {
            piece = detail::trim(piece);
            if (!detail::is_integer_literal(piece, false))
                throw std::invalid_argument("malformed partition part: '" + std::string(piece) + "'");
            int v = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
            if (ec != std::errc{} || ptr != piece.data() + piece.size())
                throw std::invalid_argument("partition part out of range: '" + std::string(piece) + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

} // namespace lefdet
