/*
  Exact integer linear algebra on sparse matrices: Smith normal form,
  rank over Z/p, and fraction-free determinants.  Arbitrary-precision
  integers throughout; no modular shortcuts on the Z path.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace qc {

using Int = boost::multiprecision::cpp_int;

struct SparseIntMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::map<int, Int>> rows;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : nrows(r), ncols(c), rows(r) {}

    void add(int i, int j, const Int& v) {
        if (v == 0) return;
        Int& e = rows[i][j];
        e += v;
        if (e == 0) rows[i].erase(j);
    }
    void set(int i, int j, const Int& v) {
        if (v == 0) rows[i].erase(j);
        else rows[i][j] = v;
    }
    long long nnz() const {
        long long t = 0;
        for (const auto& r : rows) t += static_cast<long long>(r.size());
        return t;
    }
};

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
// Pivot choice: least absolute value, ties broken by lowest (row, col).
inline std::vector<Int> smith_normal_form(SparseIntMatrix M) {
    std::vector<std::set<int>> col_rows(M.ncols);
    for (int i = 0; i < M.nrows; ++i)
        for (auto& [j, v] : M.rows[i]) col_rows[j].insert(i);

    auto row_sub = [&](int dst, int src, const Int& q) {
        // row_dst -= q * row_src
        if (q == 0) return;
        for (auto& [j, v] : M.rows[src]) {
            Int& e = M.rows[dst][j];
            bool was_zero = (e == 0);
            e -= q * v;
            if (e == 0) {
                M.rows[dst].erase(j);
                col_rows[j].erase(dst);
            } else if (was_zero) {
                col_rows[j].insert(dst);
            }
        }
    };

    std::vector<char> row_done(M.nrows, 0), col_done(M.ncols, 0);
    std::vector<Int> diag;

    while (true) {
        // find pivot
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = 0; i < M.nrows; ++i) {
            if (row_done[i]) continue;
            for (auto& [j, v] : M.rows[i]) {
                if (col_done[j]) continue;
                Int a = abs(v);
                if (pr < 0 || a < best) { best = a; pr = i; pc = j; }
                if (best == 1) break;
            }
            if (pr >= 0 && best == 1 && !col_done[pc]) {
                // a unit pivot cannot be improved; stop scanning early only
                // when ties cannot matter (first unit found in scan order)
                break;
            }
        }
        if (pr < 0) break;

        // clear the pivot column with row operations
        bool dirty = false;
        Int piv = M.rows[pr].at(pc);
        std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
        for (int i : others) {
            if (i == pr || row_done[i]) continue;
            auto it = M.rows[i].find(pc);
            if (it == M.rows[i].end()) continue;
            Int q = it->second / piv;  // truncated: remainder has |.| < |piv|
            row_sub(i, pr, q);
            if (M.rows[i].count(pc)) dirty = true;
        }
        if (dirty) continue;  // smaller entries appeared; re-select pivot

        // clear the pivot row with column operations (as row ops on the transpose)
        std::vector<int> cols;
        for (auto& [j, v] : M.rows[pr])
            if (j != pc && !col_done[j]) cols.push_back(j);
        for (int j : cols) {
            Int q = M.rows[pr].at(j) / piv;
            if (q != 0) {
                // col_j -= q * col_pc
                std::vector<int> rows_pc(col_rows[pc].begin(), col_rows[pc].end());
                for (int i : rows_pc) {
                    if (row_done[i]) continue;
                    Int delta = q * M.rows[i].at(pc);
                    Int& e = M.rows[i][j];
                    bool was_zero = (e == 0);
                    e -= delta;
                    if (e == 0) {
                        M.rows[i].erase(j);
                        col_rows[j].erase(i);
                    } else if (was_zero) {
                        col_rows[j].insert(i);
                    }
                }
            }
            if (M.rows[pr].count(j)) dirty = true;
        }
        if (dirty) continue;

        diag.push_back(abs(piv));
        row_done[pr] = 1;
        col_done[pc] = 1;
    }

    // fix up divisibility: SNF of a diagonal matrix by pairwise gcd/lcm
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < diag.size(); ++i)
            for (size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Int g = gcd(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

inline long long rank_over_q(const SparseIntMatrix& M) {
    return static_cast<long long>(smith_normal_form(M).size());
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Rank over Z/p by sparse Gaussian elimination (independent of the SNF path).
inline long long rank_mod_p(const SparseIntMatrix& M, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: p must be prime");
    std::vector<std::map<int, long long>> rows;
    rows.reserve(M.nrows);
    for (const auto& r : M.rows) {
        std::map<int, long long> rr;
        for (auto& [j, v] : r) {
            long long x = static_cast<long long>(v % p);
            if (x < 0) x += p;
            if (x) rr[j] = x;
        }
        rows.push_back(std::move(rr));
    }
    auto inv_mod = [&](long long a) {
        long long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::map<int, int> pivot_of_col;  // col -> row index in `pivots`
    std::vector<std::map<int, long long>> pivots;
    long long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = pivot_of_col.find(lead);
            if (it == pivot_of_col.end()) break;
            const auto& prow = pivots[it->second];
            long long c = row.begin()->second;  // pivot rows are normalized to 1
            for (auto& [j, v] : prow) {
                long long& e = row[j];
                e = (e - c * v) % p;
                if (e < 0) e += p;
                if (e == 0) row.erase(j);
            }
        }
        if (row.empty()) continue;
        long long c = inv_mod(row.begin()->second);
        for (auto& [j, v] : row) v = v * c % p;
        pivot_of_col[row.begin()->first] = static_cast<int>(pivots.size());
        pivots.push_back(row);
        ++rank;
    }
    return rank;
}

// Exact determinant of a dense square matrix (Bareiss fraction-free elimination).
inline Int determinant(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("determinant: matrix must be square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace qc
