/*
  Cellular homology of boolean cell complexes, reduced (augmentation
  included: the (-1)-cell is part of every chain complex here).
*/

#pragma once

#include <map>
#include <vector>

#include "qc/complex.hpp"
#include "qc/snf.hpp"

namespace qc {

struct Coefficients {
    enum Kind { Z, Q, Fp } kind = Z;
    long long p = 0;

    static Coefficients integers() { return {Z, 0}; }
    static Coefficients rationals() { return {Q, 0}; }
    static Coefficients mod(long long p) { return {Fp, p}; }
};

struct HomologySummary {
    Coefficients coeff;
    int top_dim = -1;
    std::map<int, long long> betti;          // reduced betti numbers (free rank / field dim)
    std::map<int, std::vector<Int>> torsion; // Z coefficients only: invariant factors > 1

    bool trivial_below(int d) const {
        for (auto& [k, b] : betti)
            if (k < d && b != 0) return false;
        for (auto& [k, t] : torsion)
            if (k < d && !t.empty()) return false;
        return true;
    }
    bool all_trivial() const { return trivial_below(top_dim + 1); }
};

// Boundary matrix from (d)-cells to (d-1)-cells; d = 0 is the augmentation.
inline SparseIntMatrix boundary_matrix(const QuotientComplex& X, int d) {
    auto rows_ids = X.cells_of_dim(d - 1);
    auto col_ids = X.cells_of_dim(d);
    std::map<int, int> row_pos;
    for (size_t i = 0; i < rows_ids.size(); ++i) row_pos[rows_ids[i]] = static_cast<int>(i);
    SparseIntMatrix M(static_cast<int>(rows_ids.size()), static_cast<int>(col_ids.size()));
    for (size_t j = 0; j < col_ids.size(); ++j)
        for (auto [child, sign] : X.cells[col_ids[j]].boundary)
            M.add(row_pos.at(child), static_cast<int>(j), sign);
    return M;
}

inline HomologySummary homology(const QuotientComplex& X, Coefficients coeff) {
    if (coeff.kind == Coefficients::Fp && !is_prime(coeff.p))
        throw std::invalid_argument("homology: modulus must be prime");
    HomologySummary H;
    H.coeff = coeff;
    H.top_dim = X.top_dim();
    const int top = H.top_dim;

    std::vector<long long> ncells(top + 2, 0);   // index d+1
    for (const auto& c : X.cells)
        if (c.dim() >= -1) ++ncells[c.dim() + 1];

    std::vector<long long> rank(top + 3, 0);       // rank of boundary_d, index d+1
    std::vector<std::vector<Int>> factors(top + 3);
    for (int d = 0; d <= top; ++d) {
        SparseIntMatrix B = boundary_matrix(X, d);
        if (coeff.kind == Coefficients::Fp) {
            rank[d + 1] = rank_mod_p(B, coeff.p);
        } else {
            factors[d + 1] = smith_normal_form(B);
            rank[d + 1] = static_cast<long long>(factors[d + 1].size());
        }
    }

    for (int d = -1; d <= top; ++d) {
        long long b = ncells[d + 1] - rank[d + 1] - rank[d + 2];
        if (d >= 0 || b != 0) H.betti[d] = b;
        if (coeff.kind == Coefficients::Z && d + 2 <= top + 1) {
            std::vector<Int> tor;
            for (const Int& f : factors[d + 2])
                if (f > 1) tor.push_back(f);
            if (d >= 0 || !tor.empty()) H.torsion[d] = tor;
        }
    }
    return H;
}

// Cohen-Macaulayness probe: for every face up to the dimension bound,
// compute the homology of its link and flag any nonzero reduced homology
// below the link's top dimension.
struct TorsionScanEntry {
    FaceOrbit face;
    HomologySummary link_homology;
    int link_top;
};

inline std::vector<TorsionScanEntry> torsion_scan(const QuotientComplex& X,
                                                  int face_dimension_bound,
                                                  Coefficients coeff) {
    std::vector<TorsionScanEntry> flagged;
    for (const auto& c : X.cells) {
        if (c.dim() > face_dimension_bound) continue;
        QuotientComplex L = link(X, c.face);
        int ltop = L.top_dim();
        if (ltop < 0) continue;  // facets: nothing below top
        HomologySummary H = homology(L, coeff);
        if (!H.trivial_below(ltop)) flagged.push_back({c.face, std::move(H), ltop});
    }
    return flagged;
}

}  // namespace qc
