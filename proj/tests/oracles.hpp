#pragma once

// Slow reference implementations used only by the tests. They work on plain
// element lists so they share no code paths with the library kernels.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Set = std::vector<int>;
using Family = std::vector<Set>;

inline bool meet(const Set& a, const Set& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
}

/// Pascal's rule, row by row.
inline Big binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    std::vector<Big> row{1};
    for (long i = 1; i <= a; ++i) {
        std::vector<Big> next(static_cast<std::size_t>(i) + 1, 1);
        for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(b)];
}

/// All k-subsets of [n] in lex order, by recursion.
inline Family all_ksets(int n, int k) {
    Family out;
    Set cur;
    std::function<void(int)> go = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            go(x + 1);
            cur.pop_back();
        }
    };
    go(1);
    return out;
}

/// Colex comparison on sorted element lists: compare from the largest element down.
inline bool colex_before(const Set& a, const Set& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

inline Family lex_first(int n, int k, std::size_t m) {
    Family all = all_ksets(n, k);
    all.resize(m);
    return all;
}

inline Family colex_first(int n, int k, std::size_t m) {
    Family all = all_ksets(n, k);
    std::sort(all.begin(), all.end(), colex_before);
    all.resize(m);
    return all;
}

/// inter(F, t) for every t by depth-first enumeration of intersecting subfamilies.
inline std::vector<Big> profile(const Family& f) {
    std::vector<std::uint64_t> hist(f.size() + 1, 0);
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        ++hist[chosen.size()];
        for (std::size_t i = from; i < f.size(); ++i) {
            bool ok = true;
            for (auto c : chosen)
                if (!meet(f[c], f[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            go(i + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return {hist.begin(), hist.end()};
}

/// Splits intersecting subfamilies by whether all members share an element.
inline std::pair<std::vector<Big>, std::vector<Big>> split(const Family& f) {
    std::vector<std::uint64_t> triv(f.size() + 1, 0), non(f.size() + 1, 0);
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        bool common = chosen.empty();
        if (!chosen.empty())
            for (int x : f[chosen[0]]) {
                bool all = true;
                for (auto c : chosen) all = all && std::find(f[c].begin(), f[c].end(), x) != f[c].end();
                common = common || all;
            }
        ++(common ? triv : non)[chosen.size()];
        for (std::size_t i = from; i < f.size(); ++i) {
            bool ok = true;
            for (auto c : chosen) ok = ok && meet(f[c], f[i]);
            if (!ok) continue;
            chosen.push_back(i);
            go(i + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return {{triv.begin(), triv.end()}, {non.begin(), non.end()}};
}

inline std::uint64_t disjoint_pairs(const Family& f) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) c += !meet(f[i], f[j]);
    return c;
}

/// Sorted member lists of f under every permutation of [n]; the minimum is the
/// canonical form over all n! relabelings.
inline Family canonical_all_perms(const Family& f, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Family best;
    bool first = true;
    do {
        Family img;
        for (const auto& s : f) {
            Set t;
            for (int x : s) t.push_back(perm[x - 1]);
            std::sort(t.begin(), t.end());
            img.push_back(t);
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) best = img;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace oracle
