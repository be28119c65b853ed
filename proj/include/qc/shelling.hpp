/*
  Lexicographic facet order, shelling verification and search, and the
  cone-point collapsibility checks (full complex and single-gap links),
  plus a generic elementary-collapse search as an independent oracle.
*/

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qc/complex.hpp"

namespace qc {

// Facets sorted by canonical word; enumeration already emits them in
// lexicographic order.
inline std::vector<FacetWord> lex_order(const Params& p) {
    return enumerate_facets(p);
}

// l = 2 orbit representatives: odd values increase left to right and each
// odd value appears before its even successor.
inline bool is_orbit_representative_l2(const std::vector<int>& perm) {
    std::vector<int> pos(perm.size() + 1, 0);
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    int prev_odd = -1;
    for (int v = 1; v <= static_cast<int>(perm.size()); v += 2) {
        if (pos[v] < prev_odd) return false;
        prev_odd = pos[v];
        if (v + 1 <= static_cast<int>(perm.size()) && pos[v + 1] < pos[v]) return false;
    }
    return true;
}

struct ShellingStep {
    FacetWord facet;
    bool ok = false;
    std::vector<int> minimal_new_ranks;           // when ok
    std::vector<std::vector<int>> maximal_old;    // supports of maximal shared faces
    std::string failure;                          // empty when ok
};

struct ShellingReport {
    bool success = false;
    std::vector<ShellingStep> steps;
    int failing_step = -1;
};

// Check Bjorner's condition along the given facet order: each facet must
// meet the union of its predecessors in a pure codimension-one complex,
// equivalently contribute a unique minimal new face.
inline ShellingReport verify_shelling(const Params& p, const std::vector<FacetWord>& order) {
    check_resource_guard(p);
    const int nbits = p.n() - 1;
    const size_t nmask = static_cast<size_t>(1) << nbits;
    std::vector<std::set<FaceOrbit>> seen(nmask);
    ShellingReport rep;
    rep.success = true;

    for (size_t j = 0; j < order.size(); ++j) {
        auto tab = detail::restriction_table(order[j], p);
        ShellingStep step;
        step.facet = order[j];
        if (j == 0) {
            step.ok = true;
            step.minimal_new_ranks = {};  // the empty face is new
        } else {
            std::vector<char> old_mask(nmask, 0);
            for (unsigned mask = 0; mask < nmask; ++mask)
                old_mask[mask] = seen[mask].count(tab[mask]) ? 1 : 0;
            // maximal old, minimal new
            std::vector<unsigned> maximal, minimal;
            for (unsigned mask = 0; mask < nmask; ++mask) {
                if (old_mask[mask]) {
                    bool is_max = true;
                    for (int b = 0; b < nbits && is_max; ++b)
                        if (!(mask & (1u << b)) && old_mask[mask | (1u << b)]) is_max = false;
                    if (is_max) maximal.push_back(mask);
                } else {
                    bool is_min = true;
                    for (int b = 0; b < nbits && is_min; ++b)
                        if ((mask & (1u << b)) && !old_mask[mask & ~(1u << b)]) is_min = false;
                    if (is_min) minimal.push_back(mask);
                }
            }
            for (unsigned mask : maximal)
                step.maximal_old.push_back(detail::mask_to_ranks(mask, nbits));
            bool pure = true;
            for (unsigned mask : maximal)
                if (__builtin_popcount(mask) != nbits - 1) pure = false;
            if (!pure) {
                step.failure = "intersection with earlier facets is not pure of codimension one";
            } else if (minimal.size() != 1) {
                step.failure = "no unique minimal new face";
            } else {
                step.ok = true;
                step.minimal_new_ranks = detail::mask_to_ranks(minimal[0], nbits);
            }
        }
        if (!step.ok && rep.failing_step < 0) {
            rep.failing_step = static_cast<int>(j);
            rep.success = false;
        }
        rep.steps.push_back(std::move(step));
        for (unsigned mask = 0; mask < nmask; ++mask) seen[mask].insert(tab[mask]);
    }
    return rep;
}

struct ShellingSearchResult {
    bool found = false;
    bool exhausted = false;  // full search space covered without success
    std::vector<FacetWord> order;
    long long nodes = 0;
};

// Backtracking search for any shelling order.  Each prefix is required to
// satisfy the shelling step condition, so the search is exact: if it
// exhausts, no shelling exists.
inline ShellingSearchResult search_shelling(const Params& p, long long budget = 50'000'000) {
    check_resource_guard(p);
    auto facets = enumerate_facets(p);
    const int nbits = p.n() - 1;
    const size_t nmask = static_cast<size_t>(1) << nbits;
    std::vector<std::vector<FaceOrbit>> tabs;
    tabs.reserve(facets.size());
    for (const auto& f : facets) tabs.push_back(detail::restriction_table(f, p));

    std::vector<std::map<FaceOrbit, int>> seen(nmask);
    std::vector<int> chosen;
    std::vector<char> used(facets.size(), 0);
    ShellingSearchResult res;

    auto step_ok = [&](int f) {
        if (chosen.empty()) return true;
        std::vector<char> old_mask(nmask, 0);
        for (unsigned mask = 0; mask < nmask; ++mask) {
            auto it = seen[mask].find(tabs[f][mask]);
            old_mask[mask] = (it != seen[mask].end() && it->second > 0) ? 1 : 0;
        }
        int minimal_count = 0;
        for (unsigned mask = 0; mask < nmask; ++mask) {
            if (old_mask[mask]) {
                bool is_max = true;
                for (int b = 0; b < nbits && is_max; ++b)
                    if (!(mask & (1u << b)) && old_mask[mask | (1u << b)]) is_max = false;
                if (is_max && __builtin_popcount(mask) != nbits - 1) return false;
            } else {
                bool is_min = true;
                for (int b = 0; b < nbits && is_min; ++b)
                    if ((mask & (1u << b)) && !old_mask[mask & ~(1u << b)]) is_min = false;
                if (is_min && ++minimal_count > 1) return false;
            }
        }
        return minimal_count == 1;
    };

    auto rec = [&](auto&& self) -> bool {
        if (res.nodes++ > budget) throw std::runtime_error("shelling search budget exceeded");
        if (chosen.size() == facets.size()) return true;
        for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
            if (used[f]) continue;
            if (!step_ok(f)) continue;
            used[f] = 1;
            chosen.push_back(f);
            for (unsigned mask = 0; mask < nmask; ++mask) ++seen[mask][tabs[f][mask]];
            if (self(self)) return true;
            for (unsigned mask = 0; mask < nmask; ++mask) --seen[mask][tabs[f][mask]];
            chosen.pop_back();
            used[f] = 0;
        }
        return false;
    };

    if (rec(rec)) {
        res.found = true;
        for (int f : chosen) res.order.push_back(facets[f]);
    } else {
        res.exhausted = true;
    }
    return res;
}

// ---------------------------------------------------------------------------
// collapsibility via cone points

// Rank just before the final appearance of the largest letter.
inline int cone_point(const FacetWord& w) {
    int m = 0;
    for (int c : w.letters) m = std::max(m, c);
    for (int i = static_cast<int>(w.letters.size()) - 1; i >= 0; --i)
        if (w.letters[i] == m) return i;  // position i+1, rank i
    return 0;
}

struct ConePointCertificate {
    bool success = true;
    struct Entry {
        FacetWord facet;
        int cone_rank;
        bool ok;
    };
    std::vector<Entry> entries;
};

// Walk the facets in lexicographic order and confirm that every maximal
// face shared with earlier facets contains the cone rank.
inline ConePointCertificate verify_collapsibility_lex(const Params& p) {
    check_resource_guard(p);
    if (!p.symmetrize)
        throw std::invalid_argument("cone-point verification expects the wreath quotient");
    auto facets = enumerate_facets(p);
    const int nbits = p.n() - 1;
    const size_t nmask = static_cast<size_t>(1) << nbits;
    std::vector<std::set<FaceOrbit>> seen(nmask);
    ConePointCertificate cert;

    for (size_t j = 0; j < facets.size(); ++j) {
        auto tab = detail::restriction_table(facets[j], p);
        if (j > 0) {
            int u = cone_point(facets[j]);
            bool ok = u >= 1;
            std::vector<char> old_mask(nmask, 0);
            for (unsigned mask = 0; mask < nmask; ++mask)
                old_mask[mask] = seen[mask].count(tab[mask]) ? 1 : 0;
            for (unsigned mask = 0; mask < nmask && ok; ++mask) {
                if (!old_mask[mask]) continue;
                bool is_max = true;
                for (int b = 0; b < nbits && is_max; ++b)
                    if (!(mask & (1u << b)) && old_mask[mask | (1u << b)]) is_max = false;
                if (is_max && !(mask & (1u << (u - 1)))) ok = false;
            }
            cert.entries.push_back({facets[j], u, ok});
            if (!ok) cert.success = false;
        }
        for (unsigned mask = 0; mask < nmask; ++mask) seen[mask].insert(tab[mask]);
    }
    return cert;
}

// Cone rank inside the link of a face omitting a single interval, from the
// interval's label word: the rank just before the last appearance of the
// largest label that does not live exclusively in the maximal strictly
// decreasing prefix.
inline int link_cone_rank(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("link_cone_rank: empty label word");
    size_t t = 1;
    while (t < labels.size() && labels[t] < labels[t - 1]) ++t;  // decreasing prefix [0, t)
    int best = -1;
    size_t best_pos = 0;
    for (size_t i = 0; i < labels.size(); ++i) {
        bool outside = false;
        for (size_t k = t; k < labels.size(); ++k)
            if (labels[k] == labels[i]) outside = true;
        if (!outside) continue;
        if (labels[i] > best) best = labels[i];
    }
    if (best < 0)
        throw std::invalid_argument(
            "link_cone_rank: every label lives in the rooted decreasing chain "
            "(no repeated label in the omitted interval)");
    for (size_t i = labels.size(); i-- > 0;)
        if (labels[i] == best) { best_pos = i; break; }
    if (best_pos == 0)
        throw std::invalid_argument("link_cone_rank: cone rank would precede the interval");
    return static_cast<int>(best_pos);  // rank within the interval (1-based positions)
}

// ---------------------------------------------------------------------------
// elementary collapses

struct CollapseResult {
    bool collapsed = false;
    bool exhausted = false;  // search space fully explored (definite failure)
    std::vector<std::pair<FaceOrbit, FaceOrbit>> steps;  // (free face, cofacet)
    long long nodes = 0;
};

// Free-face collapse search with backtracking.  Intended for desk-scale
// complexes; `budget` caps visited states, after which the result is
// inconclusive rather than a disproof.
inline CollapseResult elementary_collapse_search(const QuotientComplex& X,
                                                 long long budget = 2'000'000) {
    const int N = static_cast<int>(X.cells.size());
    std::vector<std::vector<int>> cofacets(N);
    for (int i = 0; i < N; ++i)
        for (auto [child, sign] : X.cells[i].boundary)
            if (X.cells[child].dim() >= 0) cofacets[child].push_back(i);

    std::vector<char> alive(N, 1);
    int alive_count = 0;
    for (int i = 0; i < N; ++i) {
        if (X.cells[i].dim() < 0) alive[i] = 0;
        else ++alive_count;
    }

    CollapseResult res;
    std::set<std::vector<unsigned long long>> visited;
    auto state_key = [&]() {
        std::vector<unsigned long long> key((N + 63) / 64, 0);
        for (int i = 0; i < N; ++i)
            if (alive[i]) key[i / 64] |= 1ull << (i % 64);
        return key;
    };

    std::vector<std::pair<int, int>> trail;
    auto rec = [&](auto&& self) -> bool {
        if (alive_count == 1) return true;  // a single vertex remains
        if (res.nodes++ > budget) throw std::runtime_error("collapse search budget exceeded");
        if (!visited.insert(state_key()).second) return false;
        bool any = false;
        for (int tau = 0; tau < N; ++tau) {
            if (!alive[tau]) continue;
            int cof = -1, count = 0;
            for (int s : cofacets[tau])
                if (alive[s]) { ++count; cof = s; }
            if (count != 1) continue;
            any = true;
            alive[tau] = alive[cof] = 0;
            alive_count -= 2;
            trail.emplace_back(tau, cof);
            if (self(self)) return true;
            trail.pop_back();
            alive[tau] = alive[cof] = 1;
            alive_count += 2;
        }
        (void)any;
        return false;
    };

    try {
        if (alive_count == 1 || (alive_count > 0 && rec(rec))) {
            res.collapsed = true;
            for (auto [t, s] : trail)
                res.steps.emplace_back(X.cells[t].face, X.cells[s].face);
        } else {
            res.exhausted = true;
        }
    } catch (const std::runtime_error&) {
        res.exhausted = false;  // budget hit: inconclusive
    }
    return res;
}

}  // namespace qc
