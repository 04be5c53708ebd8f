#pragma once

// Exact counts of intersecting subfamilies.
//
// inter(F, t) is the number of t-member subfamilies of F that are pairwise
// intersecting, i.e. the number of t-cliques of the intersection graph. The
// main counter walks cliques in descending-degree vertex order over bitset
// candidate sets and, whenever the remaining candidates already form a clique,
// adds all their subsets at once with binomial coefficients.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/error.hpp"
#include "ekr/exactmath.hpp"
#include "ekr/family.hpp"

namespace ekr {

/// inter(F, t) for t = 0..counts.size()-1. A bounded profile stops before t = m.
struct InterProfile {
    std::size_t members = 0;
    std::vector<BigCount> counts;

    bool complete() const { return counts.size() == members + 1; }
    std::size_t max_size() const { return counts.empty() ? 0 : counts.size() - 1; }
    const BigCount& operator[](std::size_t t) const { return counts.at(t); }

    friend bool operator==(const InterProfile&, const InterProfile&) = default;
};

/// Intersecting subfamilies split by whether their members share a common element.
struct ProfileSplit {
    std::vector<BigCount> trivial;
    std::vector<BigCount> nontrivial;

    friend bool operator==(const ProfileSplit&, const ProfileSplit&) = default;
};

struct CountingOptions {
    /// inter_profile refuses larger families; at most kMaxWordSetBits.
    std::size_t max_members = 64;
};

/// Adjacency over family members: row i has bit j set iff members i and j intersect.
class IntersectionGraph {
public:
    IntersectionGraph() = default;

    explicit IntersectionGraph(std::span<const KSet> sets)
        : m_(sets.size()), words_(std::max<std::size_t>(1, (sets.size() + 63) / 64)),
          rows_(m_ * words_, 0) {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = i + 1; j < m_; ++j)
                if (sets[i].meets(sets[j])) {
                    rows_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                    rows_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
                }
    }

    std::size_t size() const { return m_; }
    std::size_t words() const { return words_; }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[i * words_ + w]));
        return d;
    }

    std::span<const std::uint64_t> row(std::size_t i) const { return {rows_.data() + i * words_, words_}; }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t i = 0; i < m_; ++i) e += degree(i);
        return e / 2;
    }

    template <std::size_t W>
    std::vector<WordSet<W>> rows_as(std::span<const std::size_t> order) const {
        // order[p] is the original vertex placed at position p.
        std::vector<std::size_t> position(m_);
        for (std::size_t p = 0; p < m_; ++p) position[order[p]] = p;
        std::vector<WordSet<W>> out(m_);
        for (std::size_t p = 0; p < m_; ++p)
            for (std::size_t j = 0; j < m_; ++j)
                if (adjacent(order[p], j)) out[p].set(position[j]);
        return out;
    }

private:
    std::size_t m_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> rows_;
};

inline IntersectionGraph intersection_graph(const SetFamily& f) { return IntersectionGraph(f.sets()); }

namespace detail {

using Wide = unsigned __int128;

inline BigCount to_big(Wide v) {
    BigCount out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}
inline BigCount to_big(const BigCount& v) { return v; }

/// True when every binomial coefficient binom(m, j), j <= t_max, stays below 2^126.
inline bool fits_wide(std::size_t m, std::size_t t_max) {
    const std::size_t j = std::min(t_max, m / 2);
    return binom(static_cast<std::int64_t>(m), static_cast<std::int64_t>(j)) < (BigCount(1) << 126);
}

template <class Acc>
std::vector<std::vector<Acc>> choose_table(std::size_t m, std::size_t t_max) {
    std::vector<std::vector<Acc>> c(m + 1, std::vector<Acc>(t_max + 1, Acc(0)));
    for (std::size_t p = 0; p <= m; ++p) {
        c[p][0] = 1;
        for (std::size_t j = 1; j <= std::min(p, t_max); ++j) c[p][j] = c[p - 1][j - 1] + (j <= p - 1 ? c[p - 1][j] : Acc(0));
    }
    return c;
}

inline std::vector<std::size_t> descending_degree_order(const IntersectionGraph& g) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> deg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) deg[i] = g.degree(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    return order;
}

template <std::size_t W, class Acc>
class CliqueHistogram {
public:
    CliqueHistogram(std::vector<WordSet<W>> adj, std::size_t t_max)
        : adj_(std::move(adj)), t_max_(t_max), choose_(choose_table<Acc>(adj_.size(), t_max)),
          hist_(t_max + 1, Acc(0)) {}

    std::vector<BigCount> run() {
        hist_[0] = 1;
        if (t_max_ >= 1)
            for (std::size_t v = 0; v < adj_.size(); ++v) walk(1, adj_[v] & WordSet<W>::above(v));
        std::vector<BigCount> out;
        out.reserve(hist_.size());
        for (const auto& h : hist_) out.push_back(to_big(h));
        return out;
    }

private:
    bool is_clique(const WordSet<W>& p) const {
        bool ok = true;
        p.for_each([&](std::size_t u) {
            if (!ok) return;
            auto rest = p.minus(adj_[u]);
            rest.reset(u);
            if (rest.any()) ok = false;
        });
        return ok;
    }

    void walk(std::size_t size, const WordSet<W>& cand) {
        hist_[size] += 1;
        if (size == t_max_ || !cand.any()) return;
        if (is_clique(cand)) {
            const std::size_t p = cand.count();
            const std::size_t top = std::min(p, t_max_ - size);
            for (std::size_t j = 1; j <= top; ++j) hist_[size + j] += choose_[p][j];
            return;
        }
        cand.for_each([&](std::size_t u) { walk(size + 1, cand & adj_[u] & WordSet<W>::above(u)); });
    }

    std::vector<WordSet<W>> adj_;
    std::size_t t_max_;
    std::vector<std::vector<Acc>> choose_;
    std::vector<Acc> hist_;
};

inline std::vector<BigCount> clique_histogram(const IntersectionGraph& g, std::size_t t_max) {
    const std::size_t m = g.size();
    t_max = std::min(t_max, m);
    const auto order = descending_degree_order(g);
    return with_word_width(std::max<std::size_t>(m, 1), [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        auto rows = g.rows_as<W>(order);
        if (fits_wide(m, t_max)) return CliqueHistogram<W, Wide>(std::move(rows), t_max).run();
        return CliqueHistogram<W, BigCount>(std::move(rows), t_max).run();
    });
}

}  // namespace detail

/// Exact inter(F, t) for every t = 0..m.
inline InterProfile inter_profile(const SetFamily& f, const CountingOptions& opts = {}) {
    if (f.size() > opts.max_members) throw CapExceeded(f.size(), opts.max_members);
    return {f.size(), detail::clique_histogram(intersection_graph(f), f.size())};
}

/// inter(F, t) for t = 0..min(t_max, m). No member cap beyond the bitset width.
inline InterProfile bounded_profile(const SetFamily& f, std::size_t t_max) {
    return {f.size(), detail::clique_histogram(intersection_graph(f), t_max)};
}

inline BigCount inter_count(const SetFamily& f, std::size_t t) {
    if (t > f.size()) return 0;
    return bounded_profile(f, t).counts[t];
}

inline constexpr std::size_t kBruteForceMaxMembers = 20;

/// Reference profile from all 2^m subfamilies, testing each pair of members directly.
inline InterProfile brute_force_profile(const SetFamily& f) {
    const std::size_t m = f.size();
    if (m > kBruteForceMaxMembers)
        throw InvalidArgument("brute force profile supports at most 20 members, got " + std::to_string(m));
    const auto sets = f.sets();
    std::vector<std::uint64_t> hist(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < m; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (std::size_t j = i + 1; j < m; ++j)
                if (((mask >> j) & 1u) && !sets[i].meets(sets[j])) {
                    ok = false;
                    break;
                }
        }
        if (ok) ++hist[static_cast<std::size_t>(std::popcount(mask))];
    }
    InterProfile out{m, {}};
    for (auto h : hist) out.counts.emplace_back(h);
    return out;
}

/// Sum over all n elements of binom(d_i, t): stars of t members counted once per centre element.
inline BigCount star_count(const SetFamily& f, std::size_t t) {
    BigCount total = 0;
    for (auto d : degree_sequence(f).degrees) total += binom(static_cast<std::int64_t>(d), static_cast<std::int64_t>(t));
    return total;
}

inline void require_graph(const SetFamily& g) {
    if (g.k() != 2) throw InvalidArgument("operation needs a graph (k = 2), got k = " + std::to_string(g.k()));
}

/// Vertex triangles of the graph whose edges are the members of g.
inline BigCount triangle_count(const SetFamily& g) {
    require_graph(g);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n()), 0);
    for (KSet e : g) {
        const int u = e.min_element() - 1;
        const int v = e.max_element() - 1;
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t count = 0;
    for (KSet e : g) {
        const int v = e.max_element() - 1;
        const std::uint64_t above = v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);
        count += static_cast<std::uint64_t>(std::popcount(adj[e.min_element() - 1] & adj[v] & above));
    }
    return count;
}

struct GraphIdentity {
    BigCount lhs;
    BigCount rhs;
    bool holds = false;
};

/// inter(G, 3) against Sum_i binom(d_i, 3) + triangles(G).
inline GraphIdentity graph_inter3_identity(const SetFamily& g) {
    require_graph(g);
    GraphIdentity out{inter_count(g, 3), star_count(g, 3) + triangle_count(g), false};
    out.holds = out.lhs == out.rhs;
    return out;
}

enum class TrivialMethod { inclusion_exclusion, direct };

namespace detail {

/// Counts t-subfamilies with non-empty common intersection by inclusion-exclusion
/// over centre sets C: Sum_C (-1)^{|C|+1} binom(d_C, t), d_C = members containing C.
inline std::vector<BigCount> trivial_by_inclusion_exclusion(const SetFamily& f, std::size_t t_max) {
    if (f.k() > 20) throw InvalidArgument("inclusion-exclusion over centres needs k <= 20");
    std::unordered_map<std::uint64_t, std::uint64_t> containing;
    for (KSet s : f)
        for (std::uint64_t c = s.bits; c; c = (c - 1) & s.bits) ++containing[c];
    std::vector<BigCount> out(t_max + 1, 0);
    out[0] = 1;
    for (std::size_t t = 1; t <= t_max; ++t) {
        BigCount pos = 0;
        BigCount neg = 0;
        for (const auto& [centre, d] : containing) {
            const BigCount term = binom(static_cast<std::int64_t>(d), static_cast<std::int64_t>(t));
            (std::popcount(centre) % 2 == 1 ? pos : neg) += term;
        }
        out[t] = pos - neg;
    }
    return out;
}

template <std::size_t W, class Acc>
class StarWalker {
public:
    StarWalker(const SetFamily& f, std::size_t t_max)
        : sets_(f.begin(), f.end()), members_with_(static_cast<std::size_t>(f.n())), t_max_(t_max),
          choose_(choose_table<Acc>(f.size(), t_max)), hist_(t_max + 1, Acc(0)) {
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (std::uint64_t b = sets_[i].bits; b; b &= b - 1)
                members_with_[static_cast<std::size_t>(std::countr_zero(b))].set(i);
    }

    std::vector<BigCount> run() {
        hist_[0] = 1;
        if (t_max_ >= 1)
            for (std::size_t v = 0; v < sets_.size(); ++v)
                walk(1, sets_[v].bits, meeting(sets_[v].bits) & WordSet<W>::above(v));
        std::vector<BigCount> out;
        for (const auto& h : hist_) out.push_back(to_big(h));
        return out;
    }

private:
    WordSet<W> meeting(std::uint64_t centre) const {
        WordSet<W> r;
        for (std::uint64_t b = centre; b; b &= b - 1) r = r | members_with_[static_cast<std::size_t>(std::countr_zero(b))];
        return r;
    }

    // cand holds the later members that still meet the running intersection.
    void walk(std::size_t size, std::uint64_t centre, const WordSet<W>& cand) {
        hist_[size] += 1;
        if (size == t_max_ || !cand.any()) return;
        bool keeps_centre = true;
        cand.for_each([&](std::size_t u) { keeps_centre = keeps_centre && (sets_[u].bits & centre) == centre; });
        if (keeps_centre) {
            const std::size_t p = cand.count();
            for (std::size_t j = 1; j <= std::min(p, t_max_ - size); ++j) hist_[size + j] += choose_[p][j];
            return;
        }
        cand.for_each([&](std::size_t u) {
            const std::uint64_t next = centre & sets_[u].bits;
            walk(size + 1, next, cand & meeting(next) & WordSet<W>::above(u));
        });
    }

    std::vector<KSet> sets_;
    std::vector<WordSet<W>> members_with_;
    std::size_t t_max_;
    std::vector<std::vector<Acc>> choose_;
    std::vector<Acc> hist_;
};

inline std::vector<BigCount> trivial_by_walk(const SetFamily& f, std::size_t t_max) {
    const std::size_t m = f.size();
    return with_word_width(std::max<std::size_t>(m, 1), [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        if (fits_wide(m, t_max)) return StarWalker<W, Wide>(f, t_max).run();
        return StarWalker<W, BigCount>(f, t_max).run();
    });
}

inline ProfileSplit split_from(const InterProfile& p, const SetFamily& f, TrivialMethod method) {
    const std::size_t t_max = p.max_size();
    ProfileSplit out;
    out.trivial = method == TrivialMethod::direct ? trivial_by_walk(f, t_max)
                                                  : trivial_by_inclusion_exclusion(f, t_max);
    out.trivial.resize(t_max + 1, 0);
    out.nontrivial.reserve(t_max + 1);
    for (std::size_t t = 0; t <= t_max; ++t) out.nontrivial.push_back(p.counts[t] - out.trivial[t]);
    return out;
}

}  // namespace detail

/// Trivially / non-trivially intersecting subfamilies of every size 0..m.
inline ProfileSplit profile_split(const SetFamily& f, const CountingOptions& opts = {},
                                  TrivialMethod method = TrivialMethod::inclusion_exclusion) {
    return detail::split_from(inter_profile(f, opts), f, method);
}

/// As profile_split, restricted to sizes 0..min(t_max, m); no member cap.
inline ProfileSplit bounded_split(const SetFamily& f, std::size_t t_max,
                                  TrivialMethod method = TrivialMethod::inclusion_exclusion) {
    return detail::split_from(bounded_profile(f, t_max), f, method);
}

struct NontrivialMaximum {
    std::size_t size = 0;
    SetFamily witness;
    std::uint64_t maximal_cliques = 0;
};

namespace detail {

template <std::size_t W>
class NontrivialCliqueSearch {
public:
    explicit NontrivialCliqueSearch(const SetFamily& level)
        : sets_(level.begin(), level.end()), adj_(sets_.size()) {
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (std::size_t j = 0; j < sets_.size(); ++j)
                if (i != j && sets_[i].meets(sets_[j])) adj_[i].set(j);
    }

    /// Maximal cliques through member 0; any non-empty family can be relabeled to contain it.
    NontrivialMaximum run(int n, int k) {
        chosen_.push_back(0);
        WordSet<W> none;
        expand(sets_[0].bits, adj_[0], none);
        NontrivialMaximum out;
        out.size = best_.size();
        std::vector<KSet> members;
        for (auto i : best_) members.push_back(sets_[i]);
        out.witness = SetFamily(n, k, std::move(members));
        out.maximal_cliques = maximal_;
        return out;
    }

private:
    void expand(std::uint64_t centre, WordSet<W> cand, WordSet<W> excluded) {
        if (!cand.any()) {
            if (!excluded.any()) {
                ++maximal_;
                if (centre == 0 && chosen_.size() > best_.size()) best_ = chosen_;
            }
            return;
        }
        if (chosen_.size() + cand.count() <= best_.size()) return;
        // Tomita pivot: the vertex of cand | excluded with the most neighbours in cand.
        std::size_t pivot = 0;
        std::size_t pivot_hits = 0;
        bool have_pivot = false;
        (cand | excluded).for_each([&](std::size_t u) {
            const std::size_t hits = (cand & adj_[u]).count();
            if (!have_pivot || hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
                have_pivot = true;
            }
        });
        const WordSet<W> branch = cand.minus(adj_[pivot]);
        branch.for_each([&](std::size_t v) {
            chosen_.push_back(v);
            expand(centre & sets_[v].bits, cand & adj_[v], excluded & adj_[v]);
            chosen_.pop_back();
            cand.reset(v);
            excluded.set(v);
        });
    }

    std::vector<KSet> sets_;
    std::vector<WordSet<W>> adj_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    std::uint64_t maximal_ = 0;
};

}  // namespace detail

/// Largest intersecting family in binom([n], k) whose members share no common element,
/// found over maximal cliques of the full level's intersection graph.
inline NontrivialMaximum max_nontrivial_intersecting(int n, int k) {
    const SetFamily level = full_level(n, k);
    return with_word_width(level.size(), [&](auto width) {
        return detail::NontrivialCliqueSearch<decltype(width)::value>(level).run(n, k);
    });
}

}  // namespace ekr
