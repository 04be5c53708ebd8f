#pragma once

// Canonical representatives of set families under relabeling of the ground set.
//
// Elements are first split into classes by an iterated degree / codegree
// refinement. Only relabelings that send each class onto its block of labels
// are tried, and the canonical form is the lex-smallest sorted member list
// among those images. The admissible relabelings of isomorphic families are
// conjugate, so isomorphic families get the same canonical form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ekr/family.hpp"

namespace ekr {

namespace detail {

/// Lex comparison of two lex-sorted member lists of equal length.
inline bool member_list_less(const std::vector<KSet>& a, const std::vector<KSet>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

/// Element classes in label order: classes[0] receives the smallest labels.
inline std::vector<std::vector<int>> element_classes(const SetFamily& f) {
    const int n = f.n();
    std::vector<std::vector<std::int64_t>> codeg(n, std::vector<std::int64_t>(n, 0));
    for (KSet s : f) {
        const auto el = s.elements();
        for (int a : el)
            for (int b : el) ++codeg[a - 1][b - 1];  // diagonal holds the degree
    }
    std::vector<std::int64_t> rank(n, 0);
    std::size_t classes = 1;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<std::int64_t>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<std::int64_t, std::int64_t>> around;
            for (int j = 0; j < n; ++j)
                if (j != i) around.emplace_back(rank[j], -codeg[i][j]);
            std::sort(around.begin(), around.end());
            sig[i].push_back(rank[i]);
            sig[i].push_back(-codeg[i][i]);
            for (auto [r, c] : around) {
                sig[i].push_back(r);
                sig[i].push_back(c);
            }
        }
        std::map<std::vector<std::int64_t>, std::int64_t> order;
        for (const auto& s : sig) order.emplace(s, 0);
        std::int64_t next = 0;
        for (auto& [s, r] : order) r = next++;
        for (int i = 0; i < n; ++i) rank[i] = order[sig[i]];
        if (order.size() == classes && round > 0) break;
        classes = order.size();
    }
    std::vector<std::vector<int>> out(classes);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(rank[i])].push_back(i + 1);
    return out;
}

}  // namespace detail

struct CanonicalForm {
    SetFamily family;
    std::uint64_t relabelings_tried = 0;
};

inline CanonicalForm canonical_form_with_stats(const SetFamily& f) {
    auto classes = detail::element_classes(f);
    std::vector<int> perm(static_cast<std::size_t>(f.n()));  // perm[e-1] = new label of e
    std::vector<int> offset(classes.size());
    {
        int next = 1;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            offset[c] = next;
            next += static_cast<int>(classes[c].size());
        }
    }
    auto assign = [&] {
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t i = 0; i < classes[c].size(); ++i)
                perm[classes[c][i] - 1] = offset[c] + static_cast<int>(i);
    };

    std::vector<KSet> best;
    std::vector<KSet> image(f.size());
    std::uint64_t tried = 0;
    for (;;) {
        assign();
        for (std::size_t s = 0; s < f.size(); ++s) {
            KSet img;
            for (std::uint64_t b = f[s].bits; b; b &= b - 1) img = img.with(perm[std::countr_zero(b)]);
            image[s] = img;
        }
        std::sort(image.begin(), image.end(), LexLess{});
        if (tried == 0 || detail::member_list_less(image, best)) best = image;
        ++tried;
        // Odometer over the permutations of each class.
        std::size_t c = 0;
        for (; c < classes.size(); ++c)
            if (std::next_permutation(classes[c].begin(), classes[c].end())) break;
        if (c == classes.size()) break;
    }
    return {SetFamily(SetFamily::Trusted{}, f.n(), f.k(), std::move(best)), tried};
}

/// Lex-smallest member list over the admissible relabelings.
inline SetFamily canonical_form(const SetFamily& f) { return canonical_form_with_stats(f).family; }

inline bool isomorphic(const SetFamily& a, const SetFamily& b) {
    return a.n() == b.n() && a.k() == b.k() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace ekr
