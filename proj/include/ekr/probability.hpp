#pragma once

// P(F_p is intersecting), where F_p keeps each member independently with
// probability p. Conditioning on |F_p| = t gives
//
//     P = sum_t inter(F, t) p^t (1 - p)^(m - t),
//
// evaluated here exactly over rationals, in extended precision, and by
// Monte Carlo sampling as an independent statistical check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <tuple>
#include <vector>

#include "ekr/bitset.hpp"
#include "ekr/counting.hpp"
#include "ekr/exactmath.hpp"
#include "ekr/family.hpp"

namespace ekr {

inline void require_probability(const ExactRatio& p) {
    if (p < 0 || p > 1) throw InvalidArgument("probability " + to_string(p) + " outside [0,1]");
}

inline void require_probability(long double p) {
    if (!(p >= 0.0L && p <= 1.0L)) throw InvalidArgument("probability outside [0,1]");
}

inline void require_complete(const InterProfile& profile) {
    if (!profile.complete()) throw InvalidArgument("probability needs the profile for every size 0..m");
}

/// Exact sum over a complete profile.
inline ExactRatio prob_from_profile(const InterProfile& profile, const ExactRatio& p) {
    require_probability(p);
    require_complete(profile);
    const std::size_t m = profile.members;
    const ExactRatio q = ExactRatio(1) - p;
    // p^t and q^(m-t) for every t, built once.
    std::vector<ExactRatio> p_pow(m + 1, ExactRatio(1));
    std::vector<ExactRatio> q_pow(m + 1, ExactRatio(1));
    for (std::size_t t = 1; t <= m; ++t) {
        p_pow[t] = p_pow[t - 1] * p;
        q_pow[t] = q_pow[t - 1] * q;
    }
    ExactRatio total = 0;
    for (std::size_t t = 0; t <= m; ++t)
        if (profile.counts[t] != 0) total += ExactRatio(profile.counts[t]) * p_pow[t] * q_pow[m - t];
    return total;
}

/// Same sum in long double with compensated (Neumaier) accumulation.
inline long double prob_from_profile_float(const InterProfile& profile, long double p) {
    require_probability(p);
    require_complete(profile);
    const std::size_t m = profile.members;
    long double sum = 0.0L;
    long double carry = 0.0L;
    for (std::size_t t = 0; t <= m; ++t) {
        if (profile.counts[t] == 0) continue;
        const long double term = static_cast<long double>(profile.counts[t]) *
                                 std::pow(p, static_cast<long double>(t)) *
                                 std::pow(1.0L - p, static_cast<long double>(m - t));
        const long double next = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            carry += (sum - next) + term;
        else
            carry += (term - next) + sum;
        sum = next;
    }
    return sum + carry;
}

inline ExactRatio prob_intersecting_exact(const SetFamily& f, const ExactRatio& p,
                                          const CountingOptions& opts = {}) {
    require_probability(p);
    return prob_from_profile(inter_profile(f, opts), p);
}

inline long double prob_intersecting_float(const SetFamily& f, long double p, const CountingOptions& opts = {}) {
    require_probability(p);
    return prob_from_profile_float(inter_profile(f, opts), p);
}

/// Integer coefficients c_j of P(F_p intersecting) = sum_j c_j p^j.
inline std::vector<BigCount> intersecting_polynomial(const InterProfile& profile) {
    require_complete(profile);
    const std::size_t m = profile.members;
    std::vector<BigCount> coeff(m + 1, 0);
    for (std::size_t t = 0; t <= m; ++t) {
        if (profile.counts[t] == 0) continue;
        // (1 - p)^(m - t) = sum_j (-1)^j binom(m - t, j) p^j
        for (std::size_t j = 0; j + t <= m; ++j) {
            BigCount term = profile.counts[t] * binom(static_cast<std::int64_t>(m - t), static_cast<std::int64_t>(j));
            if (j % 2) term = -term;
            coeff[t + j] += term;
        }
    }
    return coeff;
}

struct McEstimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

/// 95% Wilson score interval for hits out of samples.
inline std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t samples, double z = 1.959963984540054) {
    const double n = static_cast<double>(samples);
    const double phat = static_cast<double>(hits) / n;
    const double z2n = z * z / n;
    const double centre = (phat + z2n / 2.0) / (1.0 + z2n);
    const double half = z / (1.0 + z2n) * std::sqrt(phat * (1.0 - phat) / n + z2n / (4.0 * n));
    double lo = std::clamp(centre - half, 0.0, 1.0);
    double hi = std::clamp(centre + half, 0.0, 1.0);
    return {std::min(lo, phat), std::max(hi, phat)};
}

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t splitmix64(std::uint64_t x) { return mix64(x + kGolden); }

/// Uniform doubles from a stream keyed by (seed, sample index); the stream for a
/// given index never depends on how samples are split across threads.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : state_(splitmix64(seed ^ splitmix64(index ^ 0x5851f42d4c957f2dULL))) {}

    double next_unit() {
        state_ += kGolden;
        return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

template <std::size_t W>
std::uint64_t count_hits(const std::vector<WordSet<W>>& closed_rows, double p, std::uint64_t seed,
                         std::uint64_t first, std::uint64_t last) {
    const std::size_t m = closed_rows.size();
    std::uint64_t hits = 0;
    for (std::uint64_t s = first; s < last; ++s) {
        SampleStream stream(seed, s);
        WordSet<W> kept;
        for (std::size_t i = 0; i < m; ++i)
            if (stream.next_unit() < p) kept.set(i);
        bool ok = true;
        kept.for_each([&](std::size_t i) { ok = ok && kept.subset_of(closed_rows[i]); });
        if (ok) ++hits;
    }
    return hits;
}

}  // namespace detail

/// Monte Carlo estimate of P(F_p intersecting). Results depend only on (seed, samples).
inline McEstimate mc_estimate(const SetFamily& f, double p, std::uint64_t samples, std::uint64_t seed,
                              unsigned threads = 1) {
    if (samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability outside [0,1]");
    const IntersectionGraph g = intersection_graph(f);
    const std::size_t m = g.size();
    const std::uint64_t hits = with_word_width(std::max<std::size_t>(m, 1), [&](auto width) {
        constexpr std::size_t W = decltype(width)::value;
        std::vector<WordSet<W>> rows(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (g.adjacent(i, j)) rows[i].set(j);
            rows[i].set(i);
        }
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(samples, 256))));
        if (workers == 1) return detail::count_hits<W>(rows, p, seed, 0, samples);
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                const std::uint64_t lo = samples * w / workers;
                const std::uint64_t hi = samples * (w + 1) / workers;
                partial[w] = detail::count_hits<W>(rows, p, seed, lo, hi);
            });
        for (auto& t : pool) t.join();
        std::uint64_t total = 0;
        for (auto h : partial) total += h;
        return total;
    });
    McEstimate out;
    out.samples = samples;
    out.hits = hits;
    out.seed = seed;
    out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    std::tie(out.ci_low, out.ci_high) = wilson_interval(hits, samples);
    return out;
}

}  // namespace ekr
