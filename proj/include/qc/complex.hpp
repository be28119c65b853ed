/*
  Boolean cell complexes realized as graded cell lists with signed
  boundary incidences.  Cells carry the chain-orbit payload and their
  rank colors; the full quotient complex and links of its faces share
  this representation.
*/

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qc/face.hpp"

namespace qc {

struct Cell {
    FaceOrbit face;                            // global chain-orbit payload
    std::vector<int> colors;                   // rank colors of this cell in this complex
    std::vector<std::pair<int, int>> boundary; // (cell id, sign), one per deleted color

    int dim() const { return static_cast<int>(colors.size()) - 1; }
};

class QuotientComplex {
public:
    Params params;
    FaceOrbit base;             // the face whose link this is; empty face for the full complex
    std::vector<Cell> cells;    // cell 0 is the (-1)-dimensional cell
    std::map<FaceOrbit, int> index;

    int top_dim() const {
        int d = -1;
        for (const auto& c : cells) d = std::max(d, c.dim());
        return d;
    }

    std::vector<int> cells_of_dim(int d) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            if (cells[i].dim() == d) out.push_back(i);
        return out;
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> f(top_dim() + 1 < 0 ? 0 : top_dim() + 1, 0);
        for (const auto& c : cells)
            if (c.dim() >= 0) ++f[c.dim()];
        return f;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const auto& c : cells)
            if (c.dim() >= 0) chi += (c.dim() % 2 == 0) ? 1 : -1;
        return chi;
    }

    int cell_id(const FaceOrbit& f) const {
        auto it = index.find(f);
        if (it == index.end()) throw std::invalid_argument("face not in complex");
        return it->second;
    }
};

namespace detail {

// Wire up boundaries: deleting the i-th color (by position, 1-based) of a
// cell gives the face at the remaining colors with sign (-1)^(i-1).
inline void build_boundaries(QuotientComplex& X) {
    for (auto& c : X.cells) {
        if (c.dim() < 0) continue;
        c.boundary.clear();
        for (size_t i = 0; i < c.colors.size(); ++i) {
            std::vector<int> sub;
            for (size_t j = 0; j < c.colors.size(); ++j)
                if (j != i) sub.push_back(c.colors[j]);
            // colors are a subset of the global support offsets
            std::vector<int> ranks = X.base.support;
            for (int col : sub) ranks.push_back(col);
            std::sort(ranks.begin(), ranks.end());
            FaceOrbit child = restrict(c.face, ranks, X.params);
            int sign = (i % 2 == 0) ? 1 : -1;
            c.boundary.emplace_back(X.cell_id(child), sign);
        }
    }
}

inline void check_boundary_squared(const QuotientComplex& X) {
    for (const auto& c : X.cells) {
        if (c.dim() < 1) continue;
        std::map<int, long long> acc;
        for (auto [mid, s1] : c.boundary)
            for (auto [low, s2] : X.cells[mid].boundary) acc[low] += s1 * s2;
        for (auto& [id, v] : acc)
            if (v != 0) throw std::logic_error("boundary composition is nonzero");
    }
}

// Restriction table of a facet over all rank subsets (bitmask over ranks
// 1..n-1, bit r-1 for rank r).
inline std::vector<FaceOrbit> restriction_table(const FacetWord& w, const Params& p) {
    const int nbits = p.n() - 1;
    std::vector<FaceOrbit> tab(static_cast<size_t>(1) << nbits);
    for (unsigned mask = 0; mask < tab.size(); ++mask) {
        std::vector<int> ranks;
        for (int b = 0; b < nbits; ++b)
            if (mask & (1u << b)) ranks.push_back(b + 1);
        tab[mask] = restrict(w, ranks, p);
    }
    return tab;
}

inline std::vector<int> mask_to_ranks(unsigned mask, int nbits) {
    std::vector<int> out;
    for (int b = 0; b < nbits; ++b)
        if (mask & (1u << b)) out.push_back(b + 1);
    return out;
}

}  // namespace detail

// The full quotient complex on all face orbits.
inline QuotientComplex build(const Params& p) {
    check_resource_guard(p);
    QuotientComplex X;
    X.params = p;
    X.base = empty_face(p);
    for (auto& f : enumerate_faces(p)) {
        Cell c;
        c.colors = f.support;
        c.face = std::move(f);
        X.index[c.face] = static_cast<int>(X.cells.size());
        X.cells.push_back(std::move(c));
    }
    detail::build_boundaries(X);
    detail::check_boundary_squared(X);
    return X;
}

// The link of a face: all cells whose restriction to the face's support is
// the face itself, re-colored by the ranks above it.
inline QuotientComplex link(const QuotientComplex& X, const FaceOrbit& face) {
    X.cell_id(face);  // must be a cell
    QuotientComplex L;
    L.params = X.params;
    L.base = face;
    for (const auto& c : X.cells) {
        if (c.face.support.size() < face.support.size()) continue;
        std::vector<int> extra;
        bool above = std::includes(c.face.support.begin(), c.face.support.end(),
                                   face.support.begin(), face.support.end());
        if (!above) continue;
        if (!(restrict(c.face, face.support, X.params) == face)) continue;
        for (int r : c.face.support)
            if (!std::binary_search(face.support.begin(), face.support.end(), r))
                extra.push_back(r);
        Cell lc;
        lc.face = c.face;
        lc.colors = std::move(extra);
        L.index[lc.face] = static_cast<int>(L.cells.size());
        L.cells.push_back(std::move(lc));
    }
    detail::build_boundaries(L);
    detail::check_boundary_squared(L);
    return L;
}

// ---------------------------------------------------------------------------
// flag vectors

struct FlagVectors {
    std::map<std::vector<int>, long long> flag_f;  // color set -> face count
    std::map<std::vector<int>, long long> flag_h;  // inclusion-exclusion transform
};

inline FlagVectors flag_vectors(const QuotientComplex& X) {
    FlagVectors fv;
    for (const auto& c : X.cells) fv.flag_f[c.colors] += 1;
    for (const auto& [S, fS] : fv.flag_f) {
        long long h = 0;
        const int k = static_cast<int>(S.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> T;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) T.push_back(S[i]);
            auto it = fv.flag_f.find(T);
            long long fT = (it == fv.flag_f.end()) ? 0 : it->second;
            int missing = k - __builtin_popcount(mask);
            h += (missing % 2 == 0) ? fT : -fT;
        }
        fv.flag_h[S] = h;
    }
    return fv;
}

}  // namespace qc
