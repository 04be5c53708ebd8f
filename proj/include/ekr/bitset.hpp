#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <type_traits>

#include "ekr/error.hpp"

namespace ekr {

/// Fixed-width bitset over W 64-bit words, used for adjacency rows and candidate sets.
template <std::size_t W>
struct WordSet {
    std::array<std::uint64_t, W> w{};

    static constexpr std::size_t capacity = 64 * W;

    constexpr void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    constexpr bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    constexpr bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }

    constexpr std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    /// Index of the lowest set bit; capacity when empty.
    constexpr std::size_t first() const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i]) return 64 * i + static_cast<std::size_t>(std::countr_zero(w[i]));
        return capacity;
    }

    constexpr bool subset_of(const WordSet& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }

    constexpr WordSet operator&(const WordSet& o) const {
        WordSet r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    constexpr WordSet operator|(const WordSet& o) const {
        WordSet r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    constexpr WordSet minus(const WordSet& o) const {
        WordSet r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }

    /// Bits strictly above position i.
    static constexpr WordSet above(std::size_t i) {
        WordSet r;
        const std::size_t word = i >> 6;
        const std::size_t bit = i & 63;
        if (bit < 63) r.w[word] = ~std::uint64_t{0} << (bit + 1);
        for (std::size_t j = word + 1; j < W; ++j) r.w[j] = ~std::uint64_t{0};
        return r;
    }

    /// The first n positions.
    static constexpr WordSet prefix(std::size_t n) {
        WordSet r;
        for (std::size_t j = 0; j < W && n > 0; ++j) {
            const std::size_t take = n < 64 ? n : 64;
            r.w[j] = take == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << take) - 1;
            n -= take;
        }
        return r;
    }

    template <class Fn>
    constexpr void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < W; ++i)
            for (std::uint64_t x = w[i]; x; x &= x - 1)
                fn(64 * i + static_cast<std::size_t>(std::countr_zero(x)));
    }

    friend constexpr bool operator==(const WordSet&, const WordSet&) = default;
};

inline constexpr std::size_t kMaxWordSetBits = 512;

/// Calls fn(std::integral_constant<size_t, W>) for the smallest supported W holding `bits`.
template <class Fn>
decltype(auto) with_word_width(std::size_t bits, Fn&& fn) {
    if (bits <= 64) return fn(std::integral_constant<std::size_t, 1>{});
    if (bits <= 128) return fn(std::integral_constant<std::size_t, 2>{});
    if (bits <= 256) return fn(std::integral_constant<std::size_t, 4>{});
    if (bits <= kMaxWordSetBits) return fn(std::integral_constant<std::size_t, 8>{});
    throw InvalidArgument("at most 512 members are supported by the bitset kernels");
}

}  // namespace ekr
