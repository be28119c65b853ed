// Brute-force reference machinery for the test suite: explicit group
// elements, chain enumeration, and orbit computations small enough to
// check the canonical forms against.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qc/face.hpp"

namespace oracle {

using Chain = std::vector<std::set<int>>;

inline std::vector<std::vector<int>> symmetric_group(int k) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Elements of S_l wr S_m as one-line permutations of {1..lm}: g[v-1] is the
// image of v.  Row r (0-based) holds values rl+1 .. rl+l.
inline std::vector<std::vector<int>> wreath_elements(int l, int m) {
    auto sl = symmetric_group(l);
    auto sm = symmetric_group(m);
    std::vector<int> idx(m, 0);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, int row) -> void {
        if (row == m) {
            for (const auto& pi : sm) {
                std::vector<int> g(l * m);
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < l; ++s)
                        g[r * l + s] = pi[r] * l + sl[idx[r]][s] + 1;
                out.push_back(std::move(g));
            }
            return;
        }
        for (int i = 0; i < static_cast<int>(sl.size()); ++i) {
            idx[row] = i;
            self(self, row + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// The Young product S_l x ... x S_l (no row interchange).
inline std::vector<std::vector<int>> young_elements(int l, int m) {
    auto sl = symmetric_group(l);
    std::vector<int> idx(m, 0);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, int row) -> void {
        if (row == m) {
            std::vector<int> g(l * m);
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < l; ++s) g[r * l + s] = r * l + sl[idx[r]][s] + 1;
            out.push_back(std::move(g));
            return;
        }
        for (int i = 0; i < static_cast<int>(sl.size()); ++i) {
            idx[row] = i;
            self(self, row + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline Chain apply(const std::vector<int>& g, const Chain& c) {
    Chain out;
    for (const auto& s : c) {
        std::set<int> t;
        for (int v : s) t.insert(g[v - 1]);
        out.push_back(std::move(t));
    }
    return out;
}

// All chains of proper nonempty subsets of {1..n}, including the empty chain.
inline std::vector<Chain> all_chains(int n) {
    std::vector<unsigned> subsets;
    for (unsigned s = 1; s + 1 < (1u << n); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    auto as_set = [&](unsigned mask) {
        std::set<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) s.insert(v);
        return s;
    };
    std::vector<Chain> out;
    Chain cur;
    std::vector<unsigned> cur_masks;
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        for (size_t i = from; i < subsets.size(); ++i) {
            if (!cur_masks.empty()) {
                unsigned prev = cur_masks.back();
                if ((prev & subsets[i]) != prev || subsets[i] == prev) continue;
            }
            cur_masks.push_back(subsets[i]);
            cur.push_back(as_set(subsets[i]));
            self(self, i + 1);
            cur.pop_back();
            cur_masks.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// A canonical key for the true group orbit of a chain: the least sequence
// of subset bitmask lists over all group elements.
inline std::vector<std::vector<int>> orbit_key(const Chain& c,
                                               const std::vector<std::vector<int>>& group) {
    std::vector<std::vector<int>> best;
    bool first = true;
    for (const auto& g : group) {
        Chain moved = apply(g, c);
        std::vector<std::vector<int>> key;
        for (const auto& s : moved) key.emplace_back(s.begin(), s.end());
        if (first || key < best) {
            best = std::move(key);
            first = false;
        }
    }
    return best;
}

}  // namespace oracle
