#pragma once

// Optimizers and verification harnesses over k-uniform families:
// exhaustive certification of maximizers at small n, single-set shifting
// local search, i,j-compressions, the full-star / almost-full-star structure
// classifier, and the scripted comparisons against lex and colex segments.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ekr/canonical.hpp"
#include "ekr/counting.hpp"
#include "ekr/exactmath.hpp"
#include "ekr/family.hpp"
#include "ekr/probability.hpp"

namespace ekr {

// ---------------------------------------------------------------------------
// Objectives

class Objective {
public:
    enum class Kind { inter_t, prob, disjoint_pairs_min };

    static Objective inter(std::size_t t) { return Objective(Kind::inter_t, t, ExactRatio(0)); }
    static Objective prob(const ExactRatio& p) {
        require_probability(p);
        return Objective(Kind::prob, 0, p);
    }
    static Objective disjoint_pairs() { return Objective(Kind::disjoint_pairs_min, 0, ExactRatio(0)); }

    /// "inter:T", "prob:P" (P as a/b or decimal) or "disjoint".
    static Objective parse(const std::string& text) {
        if (text == "disjoint" || text == "disjoint_pairs_min") return disjoint_pairs();
        const auto colon = text.find(':');
        if (colon != std::string::npos) {
            const std::string kind = text.substr(0, colon);
            const std::string arg = text.substr(colon + 1);
            if (kind == "inter") {
                const ExactRatio t = parse_ratio(arg);
                if (t < 0 || boost::multiprecision::denominator(t) != 1 || t > 1000000)
                    throw InvalidArgument("inter objective needs a non-negative integer size");
                return inter(static_cast<std::size_t>(boost::multiprecision::numerator(t)));
            }
            if (kind == "prob") return prob(parse_ratio(arg));
        }
        throw InvalidArgument("unknown objective '" + text + "' (use inter:T, prob:P or disjoint)");
    }

    Kind kind() const { return kind_; }
    std::size_t t() const { return t_; }
    const ExactRatio& p() const { return p_; }
    bool maximize() const { return kind_ != Kind::disjoint_pairs_min; }

    std::string name() const {
        switch (kind_) {
        case Kind::inter_t: return "inter:" + std::to_string(t_);
        case Kind::prob: return "prob:" + to_string(p_);
        case Kind::disjoint_pairs_min: return "disjoint";
        }
        return {};
    }

    ExactRatio evaluate(const SetFamily& f, const CountingOptions& opts = {}) const {
        switch (kind_) {
        case Kind::inter_t: return ExactRatio(inter_count(f, t_));
        case Kind::prob: return prob_intersecting_exact(f, p_, opts);
        case Kind::disjoint_pairs_min: return ExactRatio(BigCount(ekr::disjoint_pairs(f)));
        }
        return 0;
    }

    /// True when `a` is strictly better than `b` under this objective's sense.
    bool better(const ExactRatio& a, const ExactRatio& b) const { return maximize() ? a > b : a < b; }

private:
    Objective(Kind kind, std::size_t t, ExactRatio p) : kind_(kind), t_(t), p_(std::move(p)) {}

    Kind kind_;
    std::size_t t_;
    ExactRatio p_;
};

// ---------------------------------------------------------------------------
// Enumeration of m-subsets of binom([n], k)

struct EnumerationOptions {
    bool prune_isomorphic = true;
    /// Upper bound on families visited (unpruned) or canonical forms computed (pruned).
    std::uint64_t budget = 50'000'000;
    unsigned threads = 1;
};

namespace detail {

inline std::vector<KSet> level_sets(int n, int k) {
    const SetFamily level = full_level(n, k);
    return {level.begin(), level.end()};
}

/// Calls visit(family) for every m-subset whose largest level index is `top`,
/// in colex order of the index sets.
template <class Visit>
void visit_top_chunk(const std::vector<KSet>& level, int n, int k, std::size_t m, std::size_t top, Visit&& visit) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i + 1 < m; ++i) idx[i] = i;
    idx[m - 1] = top;
    std::vector<KSet> sets(m);
    for (;;) {
        for (std::size_t i = 0; i < m; ++i) sets[i] = level[idx[i]];
        visit(SetFamily(SetFamily::Trusted{}, n, k, sets));
        // next (m-1)-combination of [0, top) in colex order
        std::size_t i = 0;
        while (i + 1 < m && idx[i] + 1 == (i + 2 < m ? idx[i + 1] : top)) ++i;
        if (i + 1 >= m) return;
        ++idx[i];
        for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    }
}

/// Runs `work(chunk)` for chunk in [0, chunks) on up to `threads` workers.
template <class Work>
void run_chunks(std::size_t chunks, unsigned threads, Work&& work) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) work(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < chunks; c = next++) work(c);
        });
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Isomorphism-class representatives (canonical forms) of m-subsets of binom([n], k),
/// for every size 0..m_max, grown one member at a time.
struct OrbitLevels {
    std::vector<std::vector<SetFamily>> levels;
    std::uint64_t canonical_forms = 0;
};

inline OrbitLevels orbit_levels(int n, int k, std::size_t m_max, std::uint64_t budget) {
    check_segment_args(n, k, m_max);
    const auto level = detail::level_sets(n, k);
    OrbitLevels out;
    out.levels.push_back({SetFamily(n, k, {})});
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<SetFamily> next;
        for (const SetFamily& rep : out.levels.back()) {
            for (KSet s : level) {
                if (rep.contains(s)) continue;
                if (++out.canonical_forms > budget)
                    throw BudgetExceeded("more than " + std::to_string(budget) + " canonical", std::to_string(budget));
                std::vector<KSet> sets(rep.begin(), rep.end());
                sets.push_back(s);
                SetFamily canon = canonical_form(SetFamily(n, k, std::move(sets)));
                std::vector<std::uint64_t> key;
                key.reserve(canon.size());
                for (KSet c : canon) key.push_back(c.bits);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(canon));
            }
        }
        // Deterministic order: sort representatives by their member lists.
        std::sort(next.begin(), next.end(), [](const SetFamily& a, const SetFamily& b) {
            return detail::member_list_less({a.begin(), a.end()}, {b.begin(), b.end()});
        });
        out.levels.push_back(std::move(next));
    }
    return out;
}

/// Visits every family of size m (or one canonical representative per isomorphism class).
/// visit(chunk_index, family) may run concurrently for different chunks; the
/// return value is the chunk count, and chunk indices follow a fixed order.
template <class Visit>
std::size_t for_each_family(int n, int k, std::size_t m, const EnumerationOptions& opts, Visit&& visit,
                            std::uint64_t* examined = nullptr) {
    check_segment_args(n, k, m);
    if (opts.prune_isomorphic) {
        const OrbitLevels orbits = orbit_levels(n, k, m, opts.budget);
        const auto& reps = orbits.levels[m];
        if (examined) *examined = reps.size();
        const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(reps.size(), 64));
        detail::run_chunks(chunks, opts.threads, [&](std::size_t c) {
            const std::size_t lo = reps.size() * c / chunks;
            const std::size_t hi = reps.size() * (c + 1) / chunks;
            for (std::size_t i = lo; i < hi; ++i) visit(c, reps[i]);
        });
        return chunks;
    }
    const std::uint64_t total_sets = small_binom(n, k);
    const BigCount needed = binom(static_cast<std::int64_t>(total_sets), static_cast<std::int64_t>(m));
    if (needed > opts.budget) throw BudgetExceeded(needed.str(), std::to_string(opts.budget));
    if (examined) *examined = static_cast<std::uint64_t>(needed);
    if (m == 0) {
        visit(0, SetFamily(n, k, {}));
        return 1;
    }
    const auto level = detail::level_sets(n, k);
    const std::size_t chunks = static_cast<std::size_t>(total_sets) - m + 1;
    detail::run_chunks(chunks, opts.threads, [&](std::size_t c) {
        detail::visit_top_chunk(level, n, k, m, m - 1 + c, [&](const SetFamily& f) { visit(c, f); });
    });
    return chunks;
}

// ---------------------------------------------------------------------------
// Exhaustive search

struct SearchOptions {
    EnumerationOptions enumeration;
    CountingOptions counting;
    /// Maximizers kept in the report; the total is always counted.
    std::size_t max_reported = 1000;
};

struct SearchReport {
    std::string objective;
    bool maximize = true;
    ExactRatio best_value;
    std::vector<SetFamily> maximizers;
    std::uint64_t maximizer_count = 0;
    ExactRatio lex_value;
    ExactRatio colex_value;
    std::uint64_t families_examined = 0;
    bool pruning = false;
    double wall_time_seconds = 0.0;
    int n = 0;
    int k = 0;
    std::size_t m = 0;
};

inline SearchReport exhaustive_search(int n, int k, std::size_t m, const Objective& objective,
                                      const SearchOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    struct Chunk {
        bool any = false;
        ExactRatio best;
        std::vector<SetFamily> maximizers;
        std::uint64_t count = 0;
    };
    // One slot per chunk index; sized generously up front so workers never reallocate.
    const std::size_t max_chunks = std::max<std::size_t>(64, static_cast<std::size_t>(small_binom(n, k)) + 1);
    std::vector<Chunk> chunks(max_chunks);
    std::uint64_t examined = 0;
    const std::size_t used = for_each_family(
        n, k, m, opts.enumeration,
        [&](std::size_t c, const SetFamily& f) {
            Chunk& slot = chunks[c];
            const ExactRatio v = objective.evaluate(f, opts.counting);
            if (!slot.any || objective.better(v, slot.best)) {
                slot.any = true;
                slot.best = v;
                slot.maximizers.clear();
                slot.count = 0;
            }
            if (v == slot.best) {
                ++slot.count;
                if (slot.maximizers.size() < opts.max_reported) slot.maximizers.push_back(f);
            }
        },
        &examined);

    SearchReport report;
    report.objective = objective.name();
    report.maximize = objective.maximize();
    report.pruning = opts.enumeration.prune_isomorphic;
    report.families_examined = examined;
    report.n = n;
    report.k = k;
    report.m = m;
    bool any = false;
    for (std::size_t c = 0; c < used; ++c) {
        Chunk& slot = chunks[c];
        if (!slot.any) continue;
        if (!any || objective.better(slot.best, report.best_value)) {
            any = true;
            report.best_value = slot.best;
            report.maximizers.clear();
            report.maximizer_count = 0;
        }
        if (slot.best == report.best_value) {
            report.maximizer_count += slot.count;
            for (auto& f : slot.maximizers)
                if (report.maximizers.size() < opts.max_reported) report.maximizers.push_back(std::move(f));
        }
    }
    report.lex_value = objective.evaluate(lex_segment(n, k, m), opts.counting);
    report.colex_value = objective.evaluate(colex_segment(n, k, m), opts.counting);

    // Re-verify every reported maximizer before handing the report out.
    for (const auto& f : report.maximizers)
        if (objective.evaluate(f, opts.counting) != report.best_value)
            throw Error("internal error: reported maximizer does not attain the best value");
    if (objective.better(report.lex_value, report.best_value) || objective.better(report.colex_value, report.best_value))
        throw Error("internal error: a segment beats the exhaustive optimum");

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Shifting moves

struct ShiftMove {
    KSet out;
    KSet in;
    ExactRatio value;  // objective after the move
};

struct LocalSearchResult {
    SetFamily family;
    ExactRatio start_value;
    ExactRatio value;
    std::vector<ShiftMove> trace;
};

/// Steepest-ascent hill climbing over single-set replacements. Only strictly
/// improving moves are taken; among equally good moves the lex-smaller inserted
/// set wins, then the lex-smaller removed set.
inline LocalSearchResult shift_local_search(const SetFamily& start, const Objective& objective, std::size_t max_steps,
                                            const CountingOptions& opts = {}) {
    const auto level = detail::level_sets(start.n(), start.k());
    LocalSearchResult res{start, objective.evaluate(start, opts), {}, {}};
    res.value = res.start_value;
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::optional<ShiftMove> best;
        for (KSet in : level) {
            if (res.family.contains(in)) continue;
            for (KSet out : res.family) {
                const SetFamily candidate = replace_set(res.family, out, in);
                const ExactRatio v = objective.evaluate(candidate, opts);
                if (!objective.better(v, res.value)) continue;
                // Iteration runs in increasing lex order of (in, out), so only a strictly
                // better value displaces the incumbent.
                if (!best || objective.better(v, best->value)) best = ShiftMove{out, in, v};
            }
        }
        if (!best) break;
        res.family = replace_set(res.family, best->out, best->in);
        res.value = best->value;
        res.trace.push_back(*best);
    }
    return res;
}

/// Replaces j by i in every member containing j but not i, unless the result is already a member.
inline SetFamily compress_ij(const SetFamily& f, int i, int j) {
    if (i < 1 || j > f.n() || i >= j) throw InvalidArgument("compression needs 1 <= i < j <= n");
    std::vector<KSet> sets;
    sets.reserve(f.size());
    for (KSet s : f) {
        if (s.contains(j) && !s.contains(i)) {
            const KSet moved = s.without(j).with(i);
            sets.push_back(f.contains(moved) ? s : moved);
        } else {
            sets.push_back(s);
        }
    }
    return SetFamily(f.n(), f.k(), std::move(sets));
}

struct CoverShift {
    SetFamily shifted;
    BigCount stars_before;
    BigCount stars_after;
    BigCount gain;   // stars_after - stars_before, may be negative
    BigCount bound;  // the lower bound the move is guaranteed to clear
    bool holds = false;
};

/// The compound graph move that frees a low-degree cover vertex: remove the s-1
/// edges from v to `outside` and join a previously isolated vertex w to the
/// other s-1 cover vertices. Compares the change in Sum_i binom(d_i, t) with
///     Sum_{j=1}^{s-1} [binom(d_v, t-1) - binom(d_v - j, t-1)] - (s-1) binom(s-1, t-1),
/// which bounds it from below when every other cover vertex has degree >= d_v
/// and every vertex of `outside` has degree <= s.
inline CoverShift cover_shift(const SetFamily& g, const std::vector<int>& cover, int v, const std::vector<int>& outside,
                              int w, std::size_t t) {
    require_graph(g);
    const std::size_t s = cover.size();
    if (s < 2 || std::find(cover.begin(), cover.end(), v) == cover.end())
        throw InvalidArgument("cover shift needs a cover of size >= 2 containing v");
    if (outside.size() != s - 1) throw InvalidArgument("cover shift moves exactly s-1 edges");
    const DegreeSequence deg = degree_sequence(g);
    if (deg.of(w) != 0) throw InvalidArgument("target vertex w must be isolated");
    std::vector<KSet> sets(g.begin(), g.end());
    for (int u : outside) {
        if (std::find(cover.begin(), cover.end(), u) != cover.end())
            throw InvalidArgument("moved edges must leave the cover");
        const KSet e = KSet::of({v, u}, g.n());
        auto it = std::find(sets.begin(), sets.end(), e);
        if (it == sets.end()) throw InvalidArgument("edge {v,u} is not in the graph");
        sets.erase(it);
    }
    for (int x : cover)
        if (x != v) sets.push_back(KSet::of({std::min(x, w), std::max(x, w)}, g.n()));
    CoverShift out{SetFamily(g.n(), 2, std::move(sets)), star_count(g, t), 0, 0, 0, false};
    out.stars_after = star_count(out.shifted, t);
    out.gain = out.stars_after - out.stars_before;
    const auto dv = static_cast<std::int64_t>(deg.of(v));
    const auto tt = static_cast<std::int64_t>(t);
    const auto ss = static_cast<std::int64_t>(s);
    for (std::int64_t j = 1; j <= ss - 1; ++j) out.bound += binom(dv, tt - 1) - binom(dv - j, tt - 1);
    out.bound -= BigCount(ss - 1) * binom(ss - 1, tt - 1);
    out.holds = out.gain >= out.bound;
    return out;
}

// ---------------------------------------------------------------------------
// Structure classification

enum class StructureKind { contains_ell_full_stars, ell_plus_1_almost_full, other };

inline std::string to_string(StructureKind k) {
    switch (k) {
    case StructureKind::contains_ell_full_stars: return "contains_ell_full_stars";
    case StructureKind::ell_plus_1_almost_full: return "ell_plus_1_almost_full";
    case StructureKind::other: return "other";
    }
    return {};
}

struct StructureClass {
    std::vector<int> full_star_centres;
    std::vector<int> cover;  // an (ell+1)-cover of high-degree elements, when one exists
    StructureKind classification = StructureKind::other;
    ExactRatio alpha;        // m = binom(n,k) - binom(n-ell,k) + alpha binom(n-1,k-1)
    ExactRatio epsilon;
    int ell = 0;
};

inline StructureClass classify_structure(const SetFamily& f, int ell, const ExactRatio& epsilon) {
    if (!(epsilon > 0 && epsilon < 1)) throw InvalidArgument("epsilon must lie strictly between 0 and 1");
    if (ell < 0 || ell >= f.n()) throw InvalidArgument("ell must lie in [0, n)");
    const int n = f.n();
    const int k = f.k();
    const std::uint64_t full = small_binom(n - 1, k - 1);
    const DegreeSequence deg = degree_sequence(f);

    StructureClass out;
    out.ell = ell;
    out.epsilon = epsilon;
    for (int e = 1; e <= n; ++e)
        if (deg.of(e) == full) out.full_star_centres.push_back(e);

    const ExactRatio threshold = (ExactRatio(1) - epsilon) * ExactRatio(BigCount(full));
    std::vector<int> heavy;
    for (int e = 1; e <= n; ++e)
        if (ExactRatio(BigCount(deg.of(e))) >= threshold) heavy.push_back(e);
    const std::size_t want = static_cast<std::size_t>(ell) + 1;
    if (heavy.size() >= want) {
        // Combinations of `want` heavy elements in lex order.
        std::vector<std::size_t> pick(want);
        for (std::size_t i = 0; i < want; ++i) pick[i] = i;
        for (;;) {
            KSet x;
            for (auto i : pick) x = x.with(heavy[i]);
            if (is_cover(f, x)) {
                out.cover = x.elements();
                break;
            }
            std::size_t i = want;
            while (i > 0 && pick[i - 1] == heavy.size() - want + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < want; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    if (out.full_star_centres.size() >= static_cast<std::size_t>(ell))
        out.classification = StructureKind::contains_ell_full_stars;
    else if (!out.cover.empty())
        out.classification = StructureKind::ell_plus_1_almost_full;

    const BigCount base = binom(n, k) - binom(n - ell, k);
    out.alpha = ExactRatio(BigCount(f.size()) - base, BigCount(full));
    return out;
}

/// m range [binom(n,k) - binom(n-ell,k), binom(n,k) - binom(n-ell-1,k)] of the structure theorem.
inline std::pair<std::uint64_t, std::uint64_t> structure_range(int n, int k, int ell) {
    const std::uint64_t total = small_binom(n, k);
    return {total - small_binom(n - ell, k), total - small_binom(n - ell - 1, k)};
}

/// ell+1 stars centred at 1..ell+1, each missing about epsilon/2 of its full size.
inline SetFamily almost_full_stars(int n, int k, int ell, const ExactRatio& epsilon) {
    const std::uint64_t full = small_binom(n - 1, k - 1);
    const ExactRatio drop_exact = epsilon / 2 * ExactRatio(BigCount(full));
    std::uint64_t drop = static_cast<std::uint64_t>(boost::multiprecision::numerator(drop_exact) /
                                                    boost::multiprecision::denominator(drop_exact));
    drop = std::max<std::uint64_t>(drop, 1);
    KSet centres;
    for (int c = 1; c <= ell + 1; ++c) centres = centres.with(c);
    std::vector<KSet> sets;
    std::vector<std::uint64_t> dropped(static_cast<std::size_t>(ell) + 2, 0);
    for (KSet s : full_level(n, k)) {
        const KSet hit(s.bits & centres.bits);
        if (hit.empty()) continue;
        // Drop sets that meet the centres in a single element, spread over the centres.
        if (hit.size() == 1) {
            auto& d = dropped[static_cast<std::size_t>(hit.min_element())];
            if (d < drop) {
                ++d;
                continue;
            }
        }
        sets.push_back(s);
    }
    return SetFamily(n, k, std::move(sets));
}

// ---------------------------------------------------------------------------
// Verification tables

struct VerificationRow {
    std::size_t m = 0;
    std::size_t t = 0;
    BigCount best;  // optimum over all families (a minimum for disjoint pairs)
    BigCount lex;
    BigCount colex;
    bool lex_optimal = false;
    bool colex_optimal = false;
};

struct VerificationTable {
    std::string kind;
    int n = 0;
    int k = 0;
    std::vector<VerificationRow> rows;
    std::vector<std::string> failures;  // asserted claims that did not hold
    std::uint64_t families_examined = 0;

    bool passed() const { return failures.empty(); }
};

/// For every m, the minimum number of disjoint edge pairs over graphs on [n] with m edges,
/// compared with the lex and colex graphs.
inline VerificationTable verify_ahlswede_katona(int n, const EnumerationOptions& opts = {}) {
    if (n < 2 || n > 8) throw InvalidArgument("Ahlswede-Katona harness supports 2 <= n <= 8");
    const std::size_t total = static_cast<std::size_t>(small_binom(n, 2));
    VerificationTable table{"ahlswede-katona", n, 2, {}, {}, 0};

    std::vector<std::vector<std::uint64_t>> per_m;  // unused with pruning
    std::optional<OrbitLevels> orbits;
    if (opts.prune_isomorphic) orbits = orbit_levels(n, 2, total, opts.budget);

    for (std::size_t m = 0; m <= total; ++m) {
        std::uint64_t best = UINT64_MAX;
        if (orbits) {
            for (const auto& f : orbits->levels[m]) best = std::min(best, disjoint_pairs(f));
            table.families_examined += orbits->levels[m].size();
        } else {
            std::vector<std::uint64_t> chunk_best(static_cast<std::size_t>(total) + 1, UINT64_MAX);
            std::uint64_t examined = 0;
            const std::size_t used = for_each_family(
                n, 2, m, opts,
                [&](std::size_t c, const SetFamily& f) { chunk_best[c] = std::min(chunk_best[c], disjoint_pairs(f)); },
                &examined);
            for (std::size_t c = 0; c < used; ++c) best = std::min(best, chunk_best[c]);
            table.families_examined += examined;
        }
        VerificationRow row;
        row.m = m;
        row.t = 2;
        row.best = best;
        row.lex = disjoint_pairs(lex_segment(n, 2, m));
        row.colex = disjoint_pairs(colex_segment(n, 2, m));
        row.lex_optimal = row.lex == row.best;
        row.colex_optimal = row.colex == row.best;

        const std::string at = " at m=" + std::to_string(m);
        if (!row.lex_optimal && !row.colex_optimal) table.failures.push_back("neither segment is optimal" + at);
        // 2m < binom(n,2) - n  <=>  m < binom(n,2)/2 - n/2
        const auto twice_m = static_cast<std::int64_t>(2 * m);
        const auto pairs = static_cast<std::int64_t>(total);
        if (twice_m < pairs - n && !row.lex_optimal) table.failures.push_back("lex not optimal below threshold" + at);
        if (twice_m > pairs + n && !row.colex_optimal) table.failures.push_back("colex not optimal above threshold" + at);
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// For every m and t <= t_max, the exhaustive maximum of inter(., t) against the segments.
/// Asserted claims: lex is optimal whenever lex is itself intersecting (m <= binom(n-1,k-1)),
/// and, for graphs, whenever 2t >= n.
inline VerificationTable verify_lex_counting(int n, int k, std::size_t t_max, const EnumerationOptions& opts = {},
                                             std::optional<std::size_t> only_m = std::nullopt) {
    check_segment_args(n, k, 0);
    const std::size_t total = static_cast<std::size_t>(small_binom(n, k));
    VerificationTable table{"lex-counting", n, k, {}, {}, 0};

    std::optional<OrbitLevels> orbits;
    if (opts.prune_isomorphic) orbits = orbit_levels(n, k, only_m ? *only_m : total, opts.budget);

    const std::size_t m_lo = only_m ? *only_m : 0;
    const std::size_t m_hi = only_m ? *only_m : total;
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
        const std::size_t top = std::min(t_max, m);
        std::vector<BigCount> best(top + 1, 0);
        auto absorb = [&](std::vector<BigCount>& into, const SetFamily& f) {
            const InterProfile p = bounded_profile(f, top);
            for (std::size_t t = 0; t <= top; ++t) into[t] = std::max(into[t], p.counts[t]);
        };
        if (orbits) {
            for (const auto& f : orbits->levels[m]) absorb(best, f);
            table.families_examined += orbits->levels[m].size();
        } else {
            std::vector<std::vector<BigCount>> chunk_best(total + 1, std::vector<BigCount>(top + 1, 0));
            std::uint64_t examined = 0;
            const std::size_t used =
                for_each_family(n, k, m, opts, [&](std::size_t c, const SetFamily& f) { absorb(chunk_best[c], f); },
                                &examined);
            for (std::size_t c = 0; c < used; ++c)
                for (std::size_t t = 0; t <= top; ++t) best[t] = std::max(best[t], chunk_best[c][t]);
            table.families_examined += examined;
        }
        const InterProfile lex = bounded_profile(lex_segment(n, k, m), top);
        const InterProfile colex = bounded_profile(colex_segment(n, k, m), top);
        for (std::size_t t = 0; t <= top; ++t) {
            VerificationRow row{m, t, best[t], lex.counts[t], colex.counts[t], lex.counts[t] == best[t],
                                colex.counts[t] == best[t]};
            const std::string at = " at m=" + std::to_string(m) + ", t=" + std::to_string(t);
            if (!row.lex_optimal && m <= small_binom(n - 1, k - 1))
                table.failures.push_back("intersecting lex segment not optimal" + at);
            if (!row.lex_optimal && k == 2 && 2 * t >= static_cast<std::size_t>(n))
                table.failures.push_back("lex not optimal for t >= n/2" + at);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Lex segment against a star plus a lifted colex graph (k = 3)

struct CounterexampleReport {
    int n = 0;
    std::size_t m_prime = 0;
    std::size_t m = 0;
    SetFamily lex;
    SetFamily rival;
    BigCount lex_value;    // inter(lex, 3)
    BigCount rival_value;  // inter(rival, 3)
    bool rival_wins = false;
    bool above_threshold = false;  // m' > binom(n-2,2)/2 + (n-2)/2
};

/// Intersecting member triples, by direct enumeration.
inline BigCount intersecting_triples(const SetFamily& f) {
    const auto s = f.sets();
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (!s[a].meets(s[b])) continue;
            for (std::size_t c = b + 1; c < s.size(); ++c)
                if (s[c].meets(s[a]) && s[c].meets(s[b])) ++count;
        }
    return count;
}

/// Full star at 1 plus {2} joined to each of the first m' colex pairs of {3..n}.
inline SetFamily star_plus_colex(int n, std::size_t m_prime) {
    std::vector<KSet> sets;
    for (KSet s : full_level(n, 3))
        if (s.contains(1)) sets.push_back(s);
    const SetFamily pairs = colex_segment(n - 2, 2, m_prime);
    for (KSet e : pairs) sets.emplace_back((e.bits << 2) | 0b10u);  // shift {1..n-2} onto {3..n}, add 2
    return SetFamily(n, 3, std::move(sets));
}

inline CounterexampleReport star_colex_counterexample(int n, std::size_t m_prime) {
    if (n < 4 || n > kMaxGround) throw InvalidArgument("counterexample needs 4 <= n <= 64");
    const std::uint64_t room = small_binom(n - 2, 2);
    if (m_prime > room) throw InvalidArgument("m' must lie in [0, binom(n-2,2)]");
    CounterexampleReport out;
    out.n = n;
    out.m_prime = m_prime;
    out.m = static_cast<std::size_t>(small_binom(n - 1, 2)) + m_prime;
    out.lex = lex_segment(n, 3, out.m);
    out.rival = star_plus_colex(n, m_prime);
    out.lex_value = intersecting_triples(out.lex);
    out.rival_value = intersecting_triples(out.rival);
    out.rival_wins = out.rival_value > out.lex_value;
    // 2m' > binom(n-2,2) + (n-2)
    out.above_threshold = 2 * m_prime > room + static_cast<std::uint64_t>(n - 2);
    return out;
}

}  // namespace ekr
