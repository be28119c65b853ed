/*
  Canonical forms for chain orbits in B_{lm} under S_l wr S_m and under
  the Young product S_l x ... x S_l.

  A chain of subsets is recorded row by row: row r of the l x m table
  holds the values (r-1)l+1 .. rl, and only the count |S_t ^ row| matters
  within a row.  A face orbit is therefore a support (the ranks |S_t|)
  together with one count sequence per row; quotienting by S_m makes the
  count sequences a multiset, stored sorted larger-first.

  Facets (saturated chain orbits) are encoded as words over {1..m} of
  content {1^l,...,m^l}; under the full wreath product the canonical
  word has first appearances in increasing letter order.
*/

#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qc/params.hpp"

namespace qc {

using Profile = std::vector<int>;  // per-row counts along the chain, weakly increasing

struct FaceOrbit {
    std::vector<int> support;          // strictly increasing ranks in 1..n-1
    std::vector<Profile> profiles;     // one per row; sorted larger-first when symmetrized

    int dim() const { return static_cast<int>(support.size()) - 1; }
    bool is_empty() const { return support.empty(); }

    bool operator==(const FaceOrbit& o) const {
        return support == o.support && profiles == o.profiles;
    }
    bool operator<(const FaceOrbit& o) const {
        if (support != o.support) return support < o.support;
        return profiles < o.profiles;
    }
};

struct FacetWord {
    std::vector<int> letters;  // length l*m over 1..m

    bool operator==(const FacetWord& o) const { return letters == o.letters; }
    bool operator<(const FacetWord& o) const { return letters < o.letters; }
};

// ---------------------------------------------------------------------------
// construction and canonical forms

// Sort rows larger-first (pointwise lexicographic), the canonical order for
// the S_m-quotient.
inline void canonicalize_profiles(std::vector<Profile>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const Profile& a, const Profile& b) { return b < a; });
}

inline FaceOrbit face_from_counts(std::vector<Profile> rows, const Params& p) {
    const int k = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::vector<int> support(k, 0);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != k)
            throw std::invalid_argument("face: ragged count table");
        for (int t = 0; t < k; ++t) {
            if (r[t] < 0 || r[t] > p.l)
                throw std::invalid_argument("face: row count out of range");
            if (t > 0 && r[t] < r[t - 1])
                throw std::invalid_argument("face: row counts must be weakly increasing");
            support[t] += r[t];
        }
    }
    for (int t = 0; t < k; ++t) {
        if (support[t] < 1 || support[t] > p.n() - 1)
            throw std::invalid_argument("face: rank outside 1..n-1");
        if (t > 0 && support[t] <= support[t - 1])
            throw std::invalid_argument("face: ranks must strictly increase");
    }
    if (static_cast<int>(rows.size()) != p.m)
        throw std::invalid_argument("face: expected one count sequence per row");
    if (p.symmetrize) canonicalize_profiles(rows);
    return FaceOrbit{std::move(support), std::move(rows)};
}

inline FaceOrbit empty_face(const Params& p) {
    return FaceOrbit{{}, std::vector<Profile>(p.m)};
}

// Canonical form of a chain of subsets of {1..n}.  Elements equal to the
// empty set or to {1..n} are dropped; otherwise the chain must be strictly
// increasing under inclusion.
inline FaceOrbit canonicalize(const std::vector<std::set<int>>& raw_chain, const Params& p) {
    p.validate();
    const int n = p.n();
    std::vector<std::set<int>> chain;
    for (const auto& s : raw_chain) {
        for (int v : s)
            if (v < 1 || v > n) throw std::invalid_argument("chain: element out of range");
        if (s.empty() || static_cast<int>(s.size()) == n) continue;  // 0-hat / 1-hat
        chain.push_back(s);
    }
    for (size_t i = 1; i < chain.size(); ++i) {
        if (!std::includes(chain[i].begin(), chain[i].end(),
                           chain[i - 1].begin(), chain[i - 1].end()) ||
            chain[i].size() <= chain[i - 1].size())
            throw std::invalid_argument("chain: not strictly increasing under inclusion");
    }
    std::vector<Profile> rows(p.m, Profile(chain.size(), 0));
    for (size_t t = 0; t < chain.size(); ++t)
        for (int v : chain[t]) rows[(v - 1) / p.l][t] += 1;
    if (chain.empty()) return empty_face(p);
    return face_from_counts(std::move(rows), p);
}

// First-appearance canonical form of a word (relabel letters so that letter
// i first appears before letter j for i < j).
inline FacetWord canonical_word(const FacetWord& w, const Params& p) {
    std::vector<int> rename(p.m + 1, 0);
    int next = 0;
    FacetWord out;
    out.letters.reserve(w.letters.size());
    for (int c : w.letters) {
        if (c < 1 || c > p.m) throw std::invalid_argument("word: letter out of range");
        if (rename[c] == 0) rename[c] = ++next;
        out.letters.push_back(rename[c]);
    }
    return out;
}

inline void validate_word(const FacetWord& w, const Params& p) {
    if (static_cast<int>(w.letters.size()) != p.n())
        throw std::invalid_argument("word: wrong length");
    std::vector<int> cnt(p.m + 1, 0);
    for (int c : w.letters) {
        if (c < 1 || c > p.m) throw std::invalid_argument("word: letter out of range");
        ++cnt[c];
    }
    for (int r = 1; r <= p.m; ++r)
        if (cnt[r] != p.l) throw std::invalid_argument("word: wrong letter content");
}

// Decode a saturated-chain label permutation (one-line) into the facet word:
// the value v sits in row (v-1)/l, so it contributes letter (v-1)/l + 1.
inline FacetWord word_from_permutation(const std::vector<int>& perm, const Params& p) {
    p.validate();
    const int n = p.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation: wrong length");
    std::vector<char> seen(n + 1, 0);
    FacetWord w;
    for (int v : perm) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
        w.letters.push_back((v - 1) / p.l + 1);
    }
    return p.symmetrize ? canonical_word(w, p) : w;
}

// Lexicographically least permutation labeling a chain in the orbit of w:
// the t-th occurrence of letter c receives value (c-1)l + t.
inline std::vector<int> permutation_from_word(const FacetWord& w, const Params& p) {
    validate_word(w, p);
    std::vector<int> occ(p.m + 1, 0), perm;
    perm.reserve(w.letters.size());
    for (int c : w.letters) perm.push_back((c - 1) * p.l + ++occ[c]);
    return perm;
}

// ---------------------------------------------------------------------------
// restriction and containment

// Face of a facet at the given ranks (subset of 1..n-1).
inline FaceOrbit restrict(const FacetWord& w, const std::vector<int>& ranks, const Params& p) {
    validate_word(w, p);
    std::vector<int> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > p.n() - 1)
            throw std::invalid_argument("restrict: rank out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("restrict: duplicate rank");
    }
    if (sorted.empty()) return empty_face(p);
    std::vector<Profile> rows(p.m, Profile(sorted.size(), 0));
    std::vector<int> cnt(p.m + 1, 0);
    size_t t = 0;
    for (int r = 1; r <= p.n() && t < sorted.size(); ++r) {
        ++cnt[w.letters[r - 1]];
        if (r == sorted[t]) {
            for (int row = 0; row < p.m; ++row) rows[row][t] = cnt[row + 1];
            ++t;
        }
    }
    return face_from_counts(std::move(rows), p);
}

// Subchain of a face at a subset of its own support.
inline FaceOrbit restrict(const FaceOrbit& f, const std::vector<int>& ranks, const Params& p) {
    std::vector<int> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> cols;
    for (int r : sorted) {
        auto it = std::lower_bound(f.support.begin(), f.support.end(), r);
        if (it == f.support.end() || *it != r)
            throw std::invalid_argument("restrict: rank not in the face's support");
        cols.push_back(static_cast<int>(it - f.support.begin()));
    }
    if (cols.empty()) return empty_face(p);
    std::vector<Profile> rows(f.profiles.size());
    for (size_t i = 0; i < f.profiles.size(); ++i)
        for (int c : cols) rows[i].push_back(f.profiles[i][c]);
    return face_from_counts(std::move(rows), p);
}

inline bool contains(const FacetWord& w, const FaceOrbit& face, const Params& p) {
    return restrict(w, face.support, p) == face;
}

// The facet itself as a face orbit (restriction to all ranks).
inline FaceOrbit facet_as_face(const FacetWord& w, const Params& p) {
    std::vector<int> all(p.n() - 1);
    for (int r = 1; r < p.n(); ++r) all[r - 1] = r;
    return restrict(w, all, p);
}

// ---------------------------------------------------------------------------
// enumeration

// All facet orbits in lexicographic word order.  Counts are
// (lm)!/((l!)^m m!) when symmetrized and (lm)!/(l!)^m otherwise.
inline std::vector<FacetWord> enumerate_facets(const Params& p) {
    check_resource_guard(p);
    std::vector<FacetWord> out;
    std::vector<int> cnt(p.m + 1, 0), word;
    const int n = p.n();
    auto rec = [&](auto&& self, int used) -> void {
        if (static_cast<int>(word.size()) == n) {
            out.push_back(FacetWord{word});
            return;
        }
        int limit = p.symmetrize ? std::min(p.m, used + 1) : p.m;
        for (int c = 1; c <= limit; ++c) {
            if (cnt[c] == p.l) continue;
            ++cnt[c];
            word.push_back(c);
            self(self, std::max(used, c));
            word.pop_back();
            --cnt[c];
        }
    };
    rec(rec, 0);
    return out;
}

// All face orbits: the empty face first, then by dimension, support, and
// profile table.
inline std::vector<FaceOrbit> enumerate_faces(const Params& p) {
    check_resource_guard(p);
    const int n = p.n();
    std::vector<FaceOrbit> out;
    out.push_back(empty_face(p));

    std::vector<std::vector<int>> supports;  // grouped by size then lex
    std::vector<int> cur;
    auto gen_support = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            supports.push_back(cur);
            return;
        }
        for (int r = next; r + remaining - 1 <= n - 1; ++r) {
            cur.push_back(r);
            self(self, r + 1, remaining - 1);
            cur.pop_back();
        }
    };
    for (int k = 1; k <= n - 1; ++k) gen_support(gen_support, 1, k);

    // candidate profiles for one row: weakly increasing, entries <= l,
    // bounded by the remaining column sums and (optionally) lex-bounded by
    // the previous row
    auto row_candidates = [&p](const std::vector<int>& rem, const Profile* bound) {
        const int k = static_cast<int>(rem.size());
        std::vector<Profile> cands;
        Profile row(k);
        auto rec = [&](auto&& self, int t, bool tight) -> void {
            if (t == k) {
                cands.push_back(row);
                return;
            }
            int lo = (t > 0) ? row[t - 1] : 0;
            int hi = std::min({p.l, rem[t], (tight && bound) ? (*bound)[t] : p.l});
            for (int v = hi; v >= lo; --v) {
                // rows still to fill are weakly increasing, so leftover
                // column sums must be weakly increasing too
                if (t > 0 && rem[t] - v < rem[t - 1] - row[t - 1]) continue;
                row[t] = v;
                self(self, t + 1, tight && bound && v == (*bound)[t]);
            }
        };
        rec(rec, 0, true);
        return cands;
    };

    for (const auto& sup : supports) {
        const int k = static_cast<int>(sup.size());
        std::vector<int> rem(sup);  // remaining column sums
        std::vector<Profile> rows;
        rows.reserve(p.m);

        auto place = [&](auto&& self, int row_idx) -> void {
            if (row_idx == p.m) {
                bool done = true;
                for (int t = 0; t < k; ++t)
                    if (rem[t] != 0) { done = false; break; }
                if (done) out.push_back(FaceOrbit{sup, rows});
                return;
            }
            int rows_left = p.m - row_idx - 1;
            const Profile* bound = (p.symmetrize && row_idx > 0) ? &rows[row_idx - 1] : nullptr;
            for (const Profile& cand : row_candidates(rem, bound)) {
                bool feasible = true;
                for (int t = 0; t < k && feasible; ++t) {
                    int left = rem[t] - cand[t];
                    if (left < 0 || left > p.l * rows_left) feasible = false;
                }
                if (!feasible) continue;
                for (int t = 0; t < k; ++t) rem[t] -= cand[t];
                rows.push_back(cand);
                self(self, row_idx + 1);
                rows.pop_back();
                for (int t = 0; t < k; ++t) rem[t] += cand[t];
            }
        };
        place(place, 0);
    }

    std::sort(out.begin(), out.end(), [](const FaceOrbit& a, const FaceOrbit& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// text formats

// Face text: rows separated by ';', each row a comma-separated count
// sequence ("2,2;1,3").  The empty face prints as "".
inline std::string to_string(const FaceOrbit& f) {
    if (f.is_empty()) return "";
    std::string s;
    for (size_t i = 0; i < f.profiles.size(); ++i) {
        if (i) s += ';';
        for (size_t t = 0; t < f.profiles[i].size(); ++t) {
            if (t) s += ',';
            s += std::to_string(f.profiles[i][t]);
        }
    }
    return s;
}

inline std::string to_string(const FacetWord& w) {
    std::string s;
    for (int c : w.letters) {
        if (c > 9) throw std::invalid_argument("word printing supports m <= 9");
        s += static_cast<char>('0' + c);
    }
    return s;
}

inline FaceOrbit face_from_string(const std::string& text, const Params& p) {
    if (text.empty()) return empty_face(p);
    std::vector<Profile> rows;
    Profile row;
    std::string num;
    auto flush_num = [&]() {
        if (num.empty()) throw std::invalid_argument("face string: missing count");
        row.push_back(std::stoi(num));
        num.clear();
    };
    for (char c : text) {
        if (c == ',') flush_num();
        else if (c == ';') { flush_num(); rows.push_back(row); row.clear(); }
        else if (c >= '0' && c <= '9') num += c;
        else if (c == ' ') continue;
        else throw std::invalid_argument("face string: unexpected character");
    }
    flush_num();
    rows.push_back(row);
    if (static_cast<int>(rows.size()) != p.m)
        throw std::invalid_argument("face string: expected " + std::to_string(p.m) + " rows");
    return face_from_counts(std::move(rows), p);
}

inline FacetWord word_from_string(const std::string& text, const Params& p) {
    FacetWord w;
    for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("word string: expected digits 1-9");
        w.letters.push_back(c - '0');
    }
    validate_word(w, p);
    return w;
}

}  // namespace qc
