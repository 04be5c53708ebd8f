#pragma once

// Exact integers and rationals, binomial coefficients, and the binomial
// inequalities used by the degree-capping and shifting arguments.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/error.hpp"

namespace ekr {

using BigCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline ExactRatio ratio(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw InvalidArgument("zero denominator");
    return ExactRatio(BigCount(num), BigCount(den));
}

/// "num/den", always with a slash.
inline std::string to_string(const ExactRatio& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const BigCount& v) { return v.str(); }

inline long double to_long_double(const ExactRatio& q) {
    return static_cast<long double>(q);
}

namespace detail {

inline BigCount parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) throw InvalidArgument("malformed number '" + std::string(whole) + "'");
    BigCount v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw InvalidArgument("malformed number '" + std::string(whole) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace detail

/// Parses "a/b", an integer, or a decimal such as "0.25" (read exactly as 25/100).
inline ExactRatio parse_ratio(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    ExactRatio q;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigCount num = detail::parse_digits(s.substr(0, slash), text);
        const BigCount den = detail::parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        q = ExactRatio(num, den);
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = s.substr(0, dot);
        const std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw InvalidArgument("malformed number '" + std::string(text) + "'");
        const BigCount whole = int_part.empty() ? BigCount(0) : detail::parse_digits(int_part, text);
        const BigCount frac = frac_part.empty() ? BigCount(0) : detail::parse_digits(frac_part, text);
        BigCount scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        q = ExactRatio(whole * scale + frac, scale);
    } else {
        q = ExactRatio(detail::parse_digits(s, text));
    }
    return negative ? ExactRatio(-q) : q;
}

/// Pascal-triangle memo up to a row bound; rows are grown on demand and then
/// only read. Larger arguments fall back to the multiplicative formula.
class BinomialTable {
public:
    explicit BinomialTable(int row_bound = 512) : bound_(row_bound) {}

    BigCount operator()(std::int64_t a, std::int64_t b) const {
        if (a < 0 || b < 0 || b > a) return 0;
        if (b > a - b) b = a - b;
        if (a > bound_) return multiplicative(a, b);
        {
            std::shared_lock lock(mutex_);
            if (a < static_cast<std::int64_t>(rows_.size())) return rows_[a][b];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<std::int64_t>(rows_.size()) <= a) {
            const std::size_t r = rows_.size();
            std::vector<BigCount> row(r / 2 + 1);
            row[0] = 1;
            for (std::size_t j = 1; j < row.size(); ++j) {
                // Row r-1 stores indices up to (r-1)/2; mirror past the middle.
                const auto& prev = rows_[r - 1];
                auto at = [&](std::size_t i) -> const BigCount& { return prev[std::min(i, r - 1 - i)]; };
                row[j] = at(j - 1) + (j <= r - 1 ? at(j) : BigCount(0));
            }
            rows_.push_back(std::move(row));
        }
        return rows_[a][b];
    }

    int bound() const { return bound_; }

private:
    static BigCount multiplicative(std::int64_t a, std::int64_t b) {
        BigCount v = 1;
        for (std::int64_t i = 1; i <= b; ++i) {
            v *= a - b + i;
            v /= i;
        }
        return v;
    }

    int bound_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigCount>> rows_;
};

inline const BinomialTable& default_binomials() {
    static const BinomialTable table;
    return table;
}

/// Exact binomial coefficient; 0 when b < 0 or b > a.
inline BigCount binom(std::int64_t a, std::int64_t b) { return default_binomials()(a, b); }

/// Both sides of an inequality together with whether the claimed relation holds.
struct BoundCheck {
    ExactRatio lhs;
    ExactRatio rhs;
    bool holds = false;
};

/// binom(b, r) <= (b/c)^r binom(c, r), for 0 <= b <= c, c >= 1, r >= 0.
inline BoundCheck binomial_scaling_bound(std::int64_t b, std::int64_t c, std::int64_t r) {
    if (b < 0 || c < 1 || b > c || r < 0)
        throw InvalidArgument("scaling bound needs 0 <= b <= c, c >= 1, r >= 0");
    const ExactRatio scale = ratio(b, c);
    ExactRatio power = 1;
    for (std::int64_t i = 0; i < r; ++i) power *= scale;
    BoundCheck out{ExactRatio(binom(b, r)), power * ExactRatio(binom(c, r)), false};
    out.holds = out.lhs <= out.rhs;
    return out;
}

struct CappedSum {
    BigCount lhs;
    ExactRatio rhs;
    bool holds = false;
};

/// Sum_i binom(n_i, r) against (S/M) binom(M, r), S = Sum_i n_i, each 0 <= n_i <= M.
inline CappedSum capped_sum_bound(std::span<const std::int64_t> values, std::int64_t cap, std::int64_t r) {
    if (r < 1 || cap < 1) throw InvalidArgument("capped sum bound needs r >= 1 and M > 0");
    CappedSum out;
    BigCount total = 0;
    for (std::int64_t v : values) {
        if (v < 0 || v > cap) throw InvalidArgument("capped sum bound needs 0 <= n_i <= M");
        out.lhs += binom(v, r);
        total += v;
    }
    out.rhs = ExactRatio(total, BigCount(cap)) * ExactRatio(binom(cap, r));
    out.holds = ExactRatio(out.lhs) <= out.rhs;
    return out;
}

/// [binom(b-a, r) + binom(c+a, r)] - [binom(b, r) + binom(c, r)] against
/// (1 - (b-a)/c) (a r / (c-r+1)) binom(c, r), for r >= 2, 0 <= a <= b <= c, c >= 1.
///
/// The right side is evaluated as (1 - (b-a)/c) a binom(c, r-1), which is the same
/// number whenever r <= c and stays finite at r = c+1.
inline BoundCheck binomial_transfer_bound(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r) {
    if (r < 2 || a < 0 || a > b || b > c || c < 1)
        throw InvalidArgument("transfer bound needs r >= 2 and 0 <= a <= b <= c, c >= 1");
    const BigCount diff = binom(b - a, r) + binom(c + a, r) - binom(b, r) - binom(c, r);
    const ExactRatio shrink = ExactRatio(1) - ExactRatio(BigCount(b - a), BigCount(c));
    BoundCheck out{ExactRatio(diff), shrink * ExactRatio(BigCount(a) * binom(c, r - 1)), false};
    out.holds = out.lhs >= out.rhs;
    return out;
}

enum class BoundPart { scaling, capped_sum, transfer };

struct BoundArgs {
    BoundPart part = BoundPart::scaling;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t r = 0;
    std::int64_t cap = 0;              // M, capped_sum only
    std::vector<std::int64_t> values{};  // n_i, capped_sum only
};

inline BoundCheck binomial_bound_check(const BoundArgs& args) {
    switch (args.part) {
    case BoundPart::scaling:
        return binomial_scaling_bound(args.b, args.c, args.r);
    case BoundPart::capped_sum: {
        const CappedSum s = capped_sum_bound(args.values, args.cap, args.r);
        return {ExactRatio(s.lhs), s.rhs, s.holds};
    }
    case BoundPart::transfer:
        return binomial_transfer_bound(args.a, args.b, args.c, args.r);
    }
    throw InvalidArgument("unknown inequality part");
}

}  // namespace ekr
