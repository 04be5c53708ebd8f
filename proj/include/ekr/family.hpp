#pragma once

// k-uniform set families over the ground set [n] = {1, ..., n}.
//
// Elements are 1-based everywhere a caller can see them; internally element i
// lives at bit i-1 of a 64-bit word, which caps the ground set at 64.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ekr/error.hpp"

namespace ekr {

inline constexpr int kMaxGround = 64;

namespace detail {

struct SmallBinomTable {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> v{};

    constexpr SmallBinomTable() {
        for (int a = 0; a <= kMaxGround; ++a) {
            v[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                v[a][b] = v[a - 1][b - 1] + (b <= a - 1 ? v[a - 1][b] : 0);
        }
    }
};

inline constexpr SmallBinomTable kSmallBinom{};

}  // namespace detail

/// binom(a, b) for 0 <= a <= 64; zero outside 0 <= b <= a. Every value fits in 64 bits.
constexpr std::uint64_t small_binom(int a, int b) {
    if (a < 0 || b < 0 || b > a || a > kMaxGround) return 0;
    return detail::kSmallBinom.v[a][b];
}

/// A subset of [n] stored as a bit pattern.
struct KSet {
    std::uint64_t bits = 0;

    constexpr KSet() = default;
    constexpr explicit KSet(std::uint64_t b) : bits(b) {}

    /// Builds a set from 1-based elements. Throws on elements outside [1, n] or repeats.
    static KSet from_elements(std::span<const int> elements, int n) {
        KSet s;
        for (int e : elements) {
            if (e < 1 || e > n)
                throw InvalidArgument("element " + std::to_string(e) + " out of range [1," +
                                      std::to_string(n) + "]");
            const std::uint64_t bit = std::uint64_t{1} << (e - 1);
            if (s.bits & bit)
                throw InvalidArgument("element " + std::to_string(e) + " repeated");
            s.bits |= bit;
        }
        return s;
    }

    static KSet of(std::initializer_list<int> elements, int n = kMaxGround) {
        return from_elements(std::span<const int>(elements.begin(), elements.size()), n);
    }

    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    constexpr bool contains(int element) const {
        return element >= 1 && element <= kMaxGround && ((bits >> (element - 1)) & 1u);
    }

    constexpr bool meets(KSet other) const { return (bits & other.bits) != 0; }

    constexpr KSet with(int element) const { return KSet(bits | (std::uint64_t{1} << (element - 1))); }
    constexpr KSet without(int element) const {
        return KSet(bits & ~(std::uint64_t{1} << (element - 1)));
    }

    constexpr int min_element() const { return std::countr_zero(bits) + 1; }
    constexpr int max_element() const { return 64 - std::countl_zero(bits); }

    /// Elements in increasing order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr bool operator==(KSet, KSet) = default;
};

/// Lexicographic order: A < B iff the smallest element of A xor B lies in A.
constexpr bool lex_less(KSet a, KSet b) {
    const std::uint64_t diff = a.bits ^ b.bits;
    return diff != 0 && (a.bits & (diff & (~diff + 1))) != 0;
}

/// Colexicographic order: A < B iff the largest element of A xor B lies in B.
/// On bit patterns this is plain integer comparison.
constexpr bool colex_less(KSet a, KSet b) { return a.bits < b.bits; }

struct LexLess {
    constexpr bool operator()(KSet a, KSet b) const { return lex_less(a, b); }
};

/// Position of `set` in the lex order of all |set|-subsets of [n], starting at 0.
inline std::uint64_t lex_rank(KSet set, int n) {
    const int k = set.size();
    std::uint64_t rank = 0;
    int prev = 0;
    int i = 1;
    for (std::uint64_t b = set.bits; b; b &= b - 1, ++i) {
        const int e = std::countr_zero(b) + 1;
        for (int x = prev + 1; x < e; ++x) rank += small_binom(n - x, k - i);
        prev = e;
    }
    return rank;
}

/// Inverse of lex_rank.
inline KSet lex_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n || rank >= small_binom(n, k))
        throw InvalidArgument("lex rank " + std::to_string(rank) + " out of range for n=" +
                              std::to_string(n) + ", k=" + std::to_string(k));
    KSet out;
    int x = 1;
    for (int i = 1; i <= k; ++i) {
        // Skip elements whose block of completions lies entirely below `rank`.
        for (;; ++x) {
            const std::uint64_t block = small_binom(n - x, k - i);
            if (rank < block) break;
            rank -= block;
        }
        out = out.with(x);
        ++x;
    }
    return out;
}

/// Position of `set` in the colex order of all |set|-subsets (independent of n).
inline std::uint64_t colex_rank(KSet set) {
    std::uint64_t rank = 0;
    int i = 1;
    for (std::uint64_t b = set.bits; b; b &= b - 1, ++i) rank += small_binom(std::countr_zero(b), i);
    return rank;
}

inline KSet colex_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n || rank >= small_binom(n, k))
        throw InvalidArgument("colex rank out of range");
    KSet out;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (small_binom(c + 1, i) <= rank) ++c;
        rank -= small_binom(c, i);
        out = out.with(c + 1);
    }
    return out;
}

/// Number of member sets containing each element; position 0 is element 1.
struct DegreeSequence {
    std::vector<std::uint64_t> degrees;

    std::uint64_t max() const {
        return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    }
    std::uint64_t sum() const { return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0}); }
    std::uint64_t of(int element) const { return degrees.at(static_cast<std::size_t>(element - 1)); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// An m-element collection of distinct k-subsets of [n], kept in lex order.
class SetFamily {
public:
    SetFamily() = default;

    /// Validates and normalizes. Throws InvalidArgument on a wrong cardinality,
    /// an element outside [n], or a duplicate member.
    SetFamily(int n, int k, std::vector<KSet> sets) : n_(n), k_(k), sets_(std::move(sets)) {
        check_shape(n, k);
        const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (KSet s : sets_) {
            if (s.bits & ~universe)
                throw InvalidArgument("member has an element outside [1," + std::to_string(n) + "]");
            if (s.size() != k)
                throw InvalidArgument("member has " + std::to_string(s.size()) + " elements, expected " +
                                      std::to_string(k));
        }
        std::sort(sets_.begin(), sets_.end(), LexLess{});
        if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
            throw InvalidArgument("duplicate member");
    }

    /// Skips validation; `sets` must already be distinct, lex-sorted, valid k-subsets of [n].
    struct Trusted {};
    SetFamily(Trusted, int n, int k, std::vector<KSet> sets) : n_(n), k_(k), sets_(std::move(sets)) {}

    static SetFamily from_lists(int n, int k, const std::vector<std::vector<int>>& lists) {
        check_shape(n, k);
        std::vector<KSet> sets;
        sets.reserve(lists.size());
        for (const auto& l : lists) {
            if (static_cast<int>(l.size()) != k)
                throw InvalidArgument("member has " + std::to_string(l.size()) + " elements, expected " +
                                      std::to_string(k));
            sets.push_back(KSet::from_elements(l, n));
        }
        return SetFamily(n, k, std::move(sets));
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    std::span<const KSet> sets() const { return sets_; }
    KSet operator[](std::size_t i) const { return sets_[i]; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool contains(KSet s) const { return std::binary_search(sets_.begin(), sets_.end(), s, LexLess{}); }

    std::vector<std::vector<int>> to_lists() const {
        std::vector<std::vector<int>> out;
        out.reserve(sets_.size());
        for (KSet s : sets_) out.push_back(s.elements());
        return out;
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    static void check_shape(int n, int k) {
        if (n < 1 || n > kMaxGround)
            throw InvalidArgument("ground set size n=" + std::to_string(n) + " must lie in [1,64]");
        if (k < 1 || k > n)
            throw InvalidArgument("uniformity k=" + std::to_string(k) + " must lie in [1,n]");
    }

    int n_ = 1;
    int k_ = 1;
    std::vector<KSet> sets_;
};

inline SetFamily make_family(int n, int k, const std::vector<std::vector<int>>& lists) {
    return SetFamily::from_lists(n, k, lists);
}

inline void check_segment_args(int n, int k, std::uint64_t m) {
    if (n < 1 || n > kMaxGround || k < 1 || k > n)
        throw InvalidArgument("segment needs 1 <= k <= n <= 64");
    if (m > small_binom(n, k))
        throw InvalidArgument("segment length " + std::to_string(m) + " exceeds binom(" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
}

/// First m sets of binom([n], k) in lex order.
inline SetFamily lex_segment(int n, int k, std::uint64_t m) {
    check_segment_args(n, k, m);
    std::vector<KSet> sets;
    sets.reserve(m);
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    for (std::uint64_t r = 0; r < m; ++r) {
        sets.push_back(KSet::from_elements(c, n));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return SetFamily(n, k, std::move(sets));
}

/// First m sets of binom([n], k) in colex order.
inline SetFamily colex_segment(int n, int k, std::uint64_t m) {
    check_segment_args(n, k, m);
    std::vector<KSet> sets;
    sets.reserve(m);
    std::uint64_t bits = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    for (std::uint64_t r = 0; r < m; ++r) {
        sets.emplace_back(bits);
        // Gosper's hack: next integer with the same popcount.
        const std::uint64_t low = bits & (~bits + 1);
        const std::uint64_t ripple = bits + low;
        bits = ripple | (((bits ^ ripple) >> 2) / low);
    }
    return SetFamily(n, k, std::move(sets));
}

/// All of binom([n], k), in lex order.
inline SetFamily full_level(int n, int k) { return lex_segment(n, k, small_binom(n, k)); }

inline DegreeSequence degree_sequence(const SetFamily& f) {
    DegreeSequence d;
    d.degrees.assign(static_cast<std::size_t>(f.n()), 0);
    for (KSet s : f)
        for (std::uint64_t b = s.bits; b; b &= b - 1) ++d.degrees[static_cast<std::size_t>(std::countr_zero(b))];
    return d;
}

/// Unordered member pairs with empty intersection.
inline std::uint64_t disjoint_pairs(std::span<const KSet> sets) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!sets[i].meets(sets[j])) ++count;
    return count;
}

inline std::uint64_t disjoint_pairs(const SetFamily& f) { return disjoint_pairs(f.sets()); }

inline bool is_intersecting(const SetFamily& f) {
    const auto s = f.sets();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!s[i].meets(s[j])) return false;
    return true;
}

/// Intersection of all members; the full ground set for the empty family.
inline KSet common_intersection(const SetFamily& f) {
    std::uint64_t acc = f.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.n()) - 1;
    for (KSet s : f) acc &= s.bits;
    return KSet(acc);
}

/// True iff every member meets `cover`.
inline bool is_cover(const SetFamily& f, KSet cover) {
    return std::all_of(f.begin(), f.end(), [cover](KSet s) { return s.meets(cover); });
}

/// Swaps one member for an absent set. The input family is left untouched.
inline SetFamily replace_set(const SetFamily& f, KSet out, KSet in) {
    if (!f.contains(out)) throw InvalidArgument("set to remove is not a member");
    if (f.contains(in)) throw InvalidArgument("set to insert is already a member");
    std::vector<KSet> sets(f.begin(), f.end());
    *std::find(sets.begin(), sets.end(), out) = in;
    return SetFamily(f.n(), f.k(), std::move(sets));
}

/// Applies the element relabeling i -> perm[i-1] (perm holds 1-based images).
inline SetFamily relabel(const SetFamily& f, std::span<const int> perm) {
    std::vector<KSet> sets;
    sets.reserve(f.size());
    for (KSet s : f) {
        KSet image;
        for (std::uint64_t b = s.bits; b; b &= b - 1) image = image.with(perm[std::countr_zero(b)]);
        sets.push_back(image);
    }
    return SetFamily(f.n(), f.k(), std::move(sets));
}

/// {[n] \ A : A in f}, an (n-k)-uniform family.
inline SetFamily complement_family(const SetFamily& f) {
    if (f.k() == f.n()) throw InvalidArgument("complements of n-sets are empty");
    const std::uint64_t universe = f.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.n()) - 1;
    std::vector<KSet> sets;
    sets.reserve(f.size());
    for (KSet s : f) sets.emplace_back(universe & ~s.bits);
    return SetFamily(f.n(), f.n() - f.k(), std::move(sets));
}

}  // namespace ekr
