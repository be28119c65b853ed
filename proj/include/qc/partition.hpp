/*
  The descent partitioning of the wreath quotient complex.

  A facet word is scanned bottom to top.  A similarity block over a set of
  rows is a stretch of consecutive insertions made of equal-width runs, one
  run per row of the set, starting when those rows have been used equally
  often; rows stay similar while all their appearances tile into such
  blocks.  The row order sigma starts at the identity, and when an
  insertion opens a new block for its similarity class the inserted row
  moves directly in front of that class.  Labels are renormalized by the
  final row order (rho_r = sigma_final^-1 . sigma_r, so wrap-around
  descents come out of the renormalization), each insertion being labeled
  at its own lower endpoint; descents are ranks where the labels fail to
  strictly increase.  Minimal faces are the descent-rank restrictions.
*/

#pragma once

#include <cassert>
#include <vector>

#include "qc/complex.hpp"
#include "qc/snf.hpp"

namespace qc {

namespace sim {

// Online tiling automaton for one candidate set of rows: alive while every
// appearance of a member row tiles into similarity blocks over exactly this
// set (the last block may still be open).
struct SubsetAutomaton {
    unsigned members = 0;
    bool alive = true;
    bool in_block = false;
    int width = 0;     // run width; 0 while the first run is open
    int current = 0;   // row of the open run
    int run_len = 0;
    unsigned done = 0; // rows whose run in the open block is complete
    bool started_last = false;

    bool singleton() const { return (members & (members - 1)) == 0; }

    void feed(int x) {
        started_last = false;
        if (!alive) return;
        unsigned xb = 1u << (x - 1);
        if (!(members & xb)) {
            if (in_block) alive = false;  // foreign insertion inside a block
            return;
        }
        if (singleton()) {
            started_last = true;
            return;
        }
        if (!in_block) {
            in_block = true;
            width = 0;
            done = 0;
            current = x;
            run_len = 1;
            started_last = true;
        } else if (x == current) {
            ++run_len;
            if (width > 0 && run_len > width) {
                alive = false;
                return;
            }
        } else {
            if (width == 0) width = run_len;           // first run fixes the width
            else if (run_len != width) {               // switched rows mid-run
                alive = false;
                return;
            }
            done |= 1u << (current - 1);
            if (done & xb) {
                alive = false;                         // row already ran in this block
                return;
            }
            current = x;
            run_len = 1;
        }
        if (width > 0 && run_len == width && (done | (1u << (current - 1))) == members) {
            in_block = false;  // block complete: clean slate
            width = 0;
            done = 0;
            current = 0;
            run_len = 0;
        }
    }
};

}  // namespace sim

struct LabelSequence {
    FacetWord word;
    int m = 0, n = 0;
    std::vector<int> row;                    // [r-1]: row inserted at rank r
    std::vector<int> count;                  // [r-1]: occurrences of that row so far
    std::vector<std::vector<int>> sigma;     // sigma[r][j-1]: position of row j after rank r
    std::vector<std::vector<int>> rho;       // rho[r][j-1]: sigma_final^-1(sigma_r(j))
    std::vector<int> sigma_change_ranks;     // ranks where sigma moved
    std::vector<std::vector<unsigned>> classes;  // similarity classes after each rank (masks)

    std::vector<int> sigma_final() const { return sigma[n]; }
};

// Run the similarity tracking and row-order evolution over a facet word.
inline LabelSequence sigma_evolution(const FacetWord& w, const Params& p) {
    validate_word(w, p);
    const int m = p.m, n = p.n();
    LabelSequence L;
    L.word = w;
    L.m = m;
    L.n = n;

    const unsigned full = (1u << m) - 1;
    std::vector<sim::SubsetAutomaton> aut(full + 1);
    for (unsigned s = 1; s <= full; ++s) aut[s].members = s;

    std::vector<unsigned> classes{full};
    std::vector<int> pos(m);
    for (int j = 0; j < m; ++j) pos[j] = j + 1;
    std::vector<int> occ(m + 1, 0);

    L.sigma.push_back(pos);
    for (int r = 1; r <= n; ++r) {
        const int x = w.letters[r - 1];
        L.row.push_back(x);
        L.count.push_back(++occ[x]);
        for (unsigned s = 1; s <= full; ++s) aut[s].feed(x);

        // split every class whose automaton died; pieces are the largest
        // still-alive subsets, lowest mask first among equals
        std::vector<unsigned> next_classes;
        for (unsigned C : classes) {
            if (aut[C].alive) {
                next_classes.push_back(C);
                continue;
            }
            unsigned rem = C;
            while (rem) {
                unsigned best = 0;
                int best_pc = -1;
                for (unsigned s = rem; s; s = (s - 1) & rem) {
                    if (!aut[s].alive) continue;
                    int pc = __builtin_popcount(s);
                    if (pc > best_pc || (pc == best_pc && s < best)) {
                        best_pc = pc;
                        best = s;
                    }
                }
                assert(best);  // singletons are always alive
                next_classes.push_back(best);
                rem &= ~best;
            }
        }
        classes = std::move(next_classes);

        unsigned cx = 0;
        for (unsigned C : classes)
            if (C & (1u << (x - 1))) { cx = C; break; }
        if (aut[cx].started_last) {
            // move x directly in front of the rows similar to it
            int newpos = pos[x - 1];
            for (int j = 0; j < m; ++j)
                if (cx & (1u << j)) newpos = std::min(newpos, pos[j]);
            if (newpos != pos[x - 1]) {
                for (int j = 0; j < m; ++j)
                    if (pos[j] >= newpos && pos[j] < pos[x - 1]) ++pos[j];
                pos[x - 1] = newpos;
                L.sigma_change_ranks.push_back(r);
            }
        }
        L.sigma.push_back(pos);
        L.classes.push_back(classes);
    }

    // renormalize by the final order
    const auto& fin = L.sigma[n];
    std::vector<int> row_at_final_pos(m + 1, 0);
    for (int j = 0; j < m; ++j) row_at_final_pos[fin[j]] = j + 1;
    L.rho.resize(n + 1);
    for (int r = 0; r <= n; ++r) {
        L.rho[r].resize(m);
        for (int j = 0; j < m; ++j) L.rho[r][j] = row_at_final_pos[L.sigma[r][j]];
    }
    return L;
}

// Ranks where the insertion labels fail to strictly increase.  The label of
// insertion r is (rho_{r-1}(row), occurrence count), compared by renormalized
// row first; equal labels count as descents.
inline std::vector<int> descent_set(const FacetWord& w, const Params& p) {
    LabelSequence L = sigma_evolution(w, p);
    std::vector<int> descents;
    for (int r = 1; r < L.n; ++r) {
        int v1 = L.rho[r - 1][L.row[r - 1] - 1], i1 = L.count[r - 1];
        int v2 = L.rho[r][L.row[r] - 1], i2 = L.count[r];
        bool ascent = (v1 < v2) || (v1 == v2 && i1 < i2);
        if (!ascent) descents.push_back(r);
    }
    return descents;
}

struct Partitioning {
    std::vector<FacetWord> facets;           // lexicographic order
    std::vector<std::vector<int>> descents;  // minimal-face ranks per facet
    std::vector<FaceOrbit> minimal;          // G_j = restrict(F_j, descents_j)
};

inline Partitioning partition(const Params& p) {
    check_resource_guard(p);
    if (!p.symmetrize)
        throw std::invalid_argument("partitioning is defined for the wreath quotient");
    Partitioning P;
    P.facets = enumerate_facets(p);
    for (const auto& f : P.facets) {
        auto d = descent_set(f, p);
        P.minimal.push_back(restrict(f, d, p));
        P.descents.push_back(std::move(d));
    }
    return P;
}

// ---------------------------------------------------------------------------
// verification

struct PartitionCertificate {
    bool ok = true;
    struct Violation {
        FaceOrbit face;
        std::vector<int> intervals;  // facet indices whose interval holds the face
    };
    std::vector<Violation> violations;  // count != 1
};

// Exhaustive cover/disjointness check of the intervals [G_j, F_j] over the
// cells of X (the full complex, or a link when the partitioning's minimal
// faces contain the link's base face).
inline PartitionCertificate verify_partition(const QuotientComplex& X,
                                             const std::vector<FacetWord>& facets,
                                             const std::vector<FaceOrbit>& minimal) {
    std::vector<std::vector<FaceOrbit>> tab;
    tab.reserve(facets.size());
    for (const auto& f : facets) tab.push_back(detail::restriction_table(f, X.params));

    std::vector<unsigned> gmask(facets.size());
    for (size_t j = 0; j < facets.size(); ++j) {
        unsigned g = 0;
        for (int r : minimal[j].support) g |= 1u << (r - 1);
        gmask[j] = g;
    }

    PartitionCertificate cert;
    for (const auto& c : X.cells) {
        unsigned mask = 0;
        for (int r : c.face.support) mask |= 1u << (r - 1);
        std::vector<int> hits;
        for (size_t j = 0; j < facets.size(); ++j) {
            if ((gmask[j] & mask) != gmask[j]) continue;      // needs G_j's support
            if (tab[j][mask] == c.face) hits.push_back(static_cast<int>(j));
        }
        if (hits.size() != 1) {
            cert.ok = false;
            cert.violations.push_back({c.face, hits});
        }
    }
    return cert;
}

inline PartitionCertificate verify_partition(const QuotientComplex& X, const Partitioning& P) {
    return verify_partition(X, P.facets, P.minimal);
}

// ---------------------------------------------------------------------------
// locating a face in its interval

struct LocateTrace {
    FaceOrbit face;
    FacetWord extension;            // increasing extension of the face as given
    std::vector<int> extension_final_order;  // sigma_final of it (row -> position)
    FacetWord relabeled_extension;
    std::vector<Profile> relabeled_face;     // profiles indexed by row after relabeling
    FacetWord facet_raw;            // increasing extension of the relabeled face
    FacetWord facet;                // canonical form: the facet F_j
    std::vector<int> descents;
    FaceOrbit minimal;              // G_j
    bool consistent = false;        // face lies in [G_j, F_j]
};

namespace detail_loc {

// Fill each gap of the support with the missing insertions, smaller rows
// first; this realizes the increasing extension of a row-indexed profile
// table.
inline FacetWord fill_sorted(const std::vector<Profile>& prof, const std::vector<int>& support,
                             const Params& p) {
    FacetWord w;
    const int k = static_cast<int>(support.size());
    for (int t = 0; t <= k; ++t) {
        for (int i = 0; i < p.m; ++i) {
            int before = (t == 0) ? 0 : prof[i][t - 1];
            int after = (t == k) ? p.l : prof[i][t];
            for (int c = 0; c < after - before; ++c) w.letters.push_back(i + 1);
        }
    }
    return w;
}

}  // namespace detail_loc

inline LocateTrace locate_face(const FaceOrbit& face, const Params& p) {
    if (!p.symmetrize)
        throw std::invalid_argument("locate_face is defined for the wreath quotient");
    LocateTrace T;
    T.face = face;

    // (1) extend to a facet, each gap increasing as if the final order were trivial
    T.extension = detail_loc::fill_sorted(face.profiles, face.support, p);
    LabelSequence L = sigma_evolution(T.extension, p);
    T.extension_final_order = L.sigma_final();

    // (2) relabel rows so the final order becomes the identity
    const auto& sf = T.extension_final_order;
    T.relabeled_extension.letters.reserve(p.n());
    for (int c : T.extension.letters) T.relabeled_extension.letters.push_back(sf[c - 1]);

    // (3) the face in the relabeled rows
    T.relabeled_face.assign(p.m, {});
    for (int j = 0; j < p.m; ++j) T.relabeled_face[sf[j] - 1] = face.profiles[j];

    // (4) increasing extension of the relabeled representation
    T.facet_raw = detail_loc::fill_sorted(T.relabeled_face, face.support, p);
    T.facet = canonical_word(T.facet_raw, p);
    T.descents = descent_set(T.facet, p);
    T.minimal = restrict(T.facet, T.descents, p);

    // the located interval must contain the face
    bool sup_ok = std::includes(face.support.begin(), face.support.end(),
                                T.minimal.support.begin(), T.minimal.support.end());
    T.consistent = sup_ok && contains(T.facet, face, p) &&
                   (face.support.empty() || restrict(face, T.minimal.support, p) == T.minimal);
    return T;
}

// ---------------------------------------------------------------------------
// the distinguished flag link

// The face 0 < {1..m} < {1^2..m^2} < ... with support {m, 2m, ..., (l-1)m}.
inline FaceOrbit flag_face(const Params& p) {
    std::vector<Profile> rows(p.m);
    for (int i = 0; i < p.m; ++i)
        for (int t = 1; t < p.l; ++t) rows[i].push_back(t);
    if (p.l == 1) return empty_face(p);
    return face_from_counts(std::move(rows), p);
}

struct FlagLinkPartition {
    FaceOrbit base;
    std::vector<std::vector<std::vector<int>>> tuples;  // facet -> l insertion orders
    std::vector<FacetWord> facets;                      // global facet words
    std::vector<std::vector<int>> descents;             // global ranks im+j, 0<j<m
    std::vector<FaceOrbit> minimal;                     // global orbits containing the base
};

// Facets of the flag link are l-tuples of insertion orders (the first is the
// identity); the minimal face takes rank im+j when rows placed j-th and
// (j+1)-th in layer i+1 appear out of order in layer i (layer 0 wraps to
// layer l).
inline FlagLinkPartition partition_flag_link(const Params& p) {
    check_resource_guard(p);
    if (!p.symmetrize)
        throw std::invalid_argument("flag-link partitioning expects the wreath quotient");
    FlagLinkPartition F;
    F.base = flag_face(p);

    std::vector<std::vector<int>> perms;  // one-line, position -> row
    std::vector<int> idp(p.m);
    for (int i = 0; i < p.m; ++i) idp[i] = i + 1;
    perms.push_back(idp);
    {
        std::vector<int> q = idp;
        while (std::next_permutation(q.begin(), q.end())) perms.push_back(q);
        std::sort(perms.begin(), perms.end());
    }

    std::vector<int> choice(p.l, 0);  // index into perms per layer; layer 0 fixed to identity
    auto emit = [&]() {
        std::vector<std::vector<int>> tup;
        for (int i = 0; i < p.l; ++i) tup.push_back(perms[choice[i]]);
        FacetWord w;
        for (const auto& layer : tup)
            for (int row : layer) w.letters.push_back(row);
        std::vector<int> inv_prev(p.m + 1);  // position of each row in the previous layer
        std::vector<int> d;
        for (int i = 0; i < p.l; ++i) {
            const auto& prev = (i == 0) ? tup[p.l - 1] : tup[i - 1];
            for (int t = 0; t < p.m; ++t) inv_prev[prev[t]] = t + 1;
            for (int j = 1; j < p.m; ++j)
                if (inv_prev[tup[i][j - 1]] > inv_prev[tup[i][j]])
                    d.push_back(i * p.m + j);
        }
        std::vector<int> ranks = F.base.support;
        for (int r : d) ranks.push_back(r);
        std::sort(ranks.begin(), ranks.end());
        F.tuples.push_back(std::move(tup));
        F.minimal.push_back(restrict(w, ranks, p));
        F.facets.push_back(std::move(w));
        F.descents.push_back(std::move(d));
    };
    auto rec = [&](auto&& self, int layer) -> void {
        if (layer == p.l) {
            emit();
            return;
        }
        for (size_t q = 0; q < perms.size(); ++q) {
            choice[layer] = static_cast<int>(q);
            self(self, layer + 1);
        }
        choice[layer] = 0;
    };
    if (p.l == 1) emit();
    else rec(rec, 1);
    return F;
}

// ---------------------------------------------------------------------------
// incidence matrices

struct IncidenceMatrix {
    std::vector<std::vector<Int>> entries;  // rows: facets, cols: minimal faces

    int size() const { return static_cast<int>(entries.size()); }
};

inline IncidenceMatrix incidence(const std::vector<FacetWord>& facets,
                                 const std::vector<FaceOrbit>& minimal, const Params& p) {
    IncidenceMatrix M;
    M.entries.assign(facets.size(), std::vector<Int>(minimal.size(), 0));
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < minimal.size(); ++j)
            M.entries[i][j] = contains(facets[i], minimal[j], p) ? 1 : 0;
    for (size_t j = 0; j < facets.size() && j < minimal.size(); ++j)
        if (M.entries[j][j] != 1)
            throw std::logic_error("incidence: diagonal entry is not 1");
    return M;
}

inline Int incidence_determinant(const IncidenceMatrix& M) { return determinant(M.entries); }

inline long long incidence_rank_mod_p(const IncidenceMatrix& M, long long p) {
    SparseIntMatrix S(M.size(), M.size());
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j)
            if (M.entries[i][j] != 0) S.set(i, j, M.entries[i][j]);
    return rank_mod_p(S, p);
}

}  // namespace qc
