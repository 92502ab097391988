#pragma once

// Semistandard Young tableaux in the decreasing convention (rows weakly
// decreasing, columns strictly decreasing, entries in 1..n), row insertion
// and its inverse, multi-extraction, the odd-shape split, and the resulting
// SPP <-> even-SPP correspondences via row-wise conjugation.

#include "ppbij/pp.hpp"

namespace ppbij {

struct Tableau {
    int n = 0;  // entry bound; shape() is padded with zeros to length n
    Rows rows;  // nonempty rows only, top to bottom

    Row shape() const {
        Row s(n, 0);
        for (size_t i = 0; i < rows.size(); ++i) s[i] = int(rows[i].size());
        return s;
    }
    int cells() const {
        int c = 0;
        for (const Row& r : rows) c += int(r.size());
        return c;
    }
    bool operator==(const Tableau& o) const { return n == o.n && rows == o.rows; }
    bool operator<(const Tableau& o) const {
        return std::tie(n, rows) < std::tie(o.n, o.rows);
    }
};

inline bool is_ssyt(const Tableau& t) {
    if (int(t.rows.size()) > t.n) return false;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const Row& r = t.rows[i];
        if (r.empty()) return false;
        if (i + 1 < t.rows.size() && t.rows[i + 1].size() > r.size()) return false;
        for (size_t j = 0; j < r.size(); ++j) {
            if (r[j] < 1 || r[j] > t.n) return false;
            if (j + 1 < r.size() && r[j] < r[j + 1]) return false;
            if (i + 1 < t.rows.size() && j < t.rows[i + 1].size() &&
                r[j] <= t.rows[i + 1][j])
                return false;
        }
    }
    return true;
}

// Row-wise conjugation: shape is the diagonal of the shifted PP and
// T(i,j) = #{ i <= k <= n : pi(i,k) >= j }.
inline Tableau conj(const PP& p) {
    PPBIJ_REQUIRE(p.shifted && has_staircase_support(p, p.n(), true),
                  "conj expects a shifted staircase plane partition");
    PPBIJ_REQUIRE(is_plane_partition(p), "conj expects a plane partition");
    int n = p.n();
    Tableau t;
    t.n = n;
    for (int i = 1; i <= n; ++i) {
        int len = p.at(i, i);
        if (len == 0) break;  // diagonal decreases, later rows are empty too
        Row r(len);
        for (int j = 1; j <= len; ++j) {
            int c = 0;
            for (int k = i; k <= n; ++k)
                if (p.at(i, k) >= j) ++c;
            r[j - 1] = c;
        }
        t.rows.push_back(std::move(r));
    }
    PPBIJ_CHECK(is_ssyt(t), "conj produced a non-SSYT");
    return t;
}

inline PP conj_inverse(const Tableau& t) {
    PPBIJ_REQUIRE(is_ssyt(t), "conj_inverse expects a valid tableau");
    int n = t.n;
    PP p = zero_staircase(n, true);
    for (int i = 1; i <= n; ++i) {
        const Row* r = (i <= int(t.rows.size())) ? &t.rows[i - 1] : nullptr;
        for (int j = i; j <= n; ++j) {
            int c = 0;
            if (r)
                for (int v : *r)
                    if (v >= j - i + 1) ++c;
            p.at(i, j) = c;
        }
    }
    PPBIJ_CHECK(is_plane_partition(p), "conj_inverse produced a non-PP");
    return p;
}

struct BumpStep {
    int row;     // 1-based row the letter entered
    int bumped;  // entry pushed to the next row, 0 when appended
};

struct InsertResult {
    Tableau t;
    int row = 0, col = 0;  // the appended box
    std::vector<BumpStep> trace;
};

// Insert x by bumping the leftmost entry strictly less than x in each row.
inline InsertResult row_insert(const Tableau& t, int x) {
    PPBIJ_REQUIRE(x >= 1 && x <= t.n, "row_insert: letter out of range");
    InsertResult out;
    out.t = t;
    int cur = x;
    for (size_t r = 0;; ++r) {
        if (r == out.t.rows.size()) out.t.rows.emplace_back();
        Row& row = out.t.rows[r];
        auto it = std::find_if(row.begin(), row.end(), [&](int y) { return y < cur; });
        if (it == row.end()) {
            row.push_back(cur);
            out.row = int(r) + 1;
            out.col = int(row.size());
            out.trace.push_back({int(r) + 1, 0});
            break;
        }
        int bumped = *it;
        *it = cur;
        out.trace.push_back({int(r) + 1, bumped});
        cur = bumped;
    }
    PPBIJ_CHECK(is_ssyt(out.t), "row_insert broke semistandardness");
    return out;
}

struct ExtractResult {
    Tableau t;
    int x = 0;
};

// Inverse bumping starting from a removable corner box (row, col).
inline ExtractResult row_extract(const Tableau& t, int row, int col) {
    PPBIJ_REQUIRE(row >= 1 && row <= int(t.rows.size()), "row_extract: no such row");
    PPBIJ_REQUIRE(col == int(t.rows[row - 1].size()), "row_extract: box is not at row end");
    PPBIJ_REQUIRE(row == int(t.rows.size()) || int(t.rows[row].size()) < col,
                  "row_extract: box is not a removable corner");
    ExtractResult out;
    out.t = t;
    int cur = out.t.rows[row - 1].back();
    out.t.rows[row - 1].pop_back();
    if (out.t.rows[row - 1].empty()) out.t.rows.pop_back();
    for (int r = row - 1; r >= 1; --r) {
        Row& above = out.t.rows[r - 1];
        // rightmost entry strictly greater than the travelling value
        int pos = -1;
        for (int j = int(above.size()) - 1; j >= 0; --j)
            if (above[j] > cur) {
                pos = j;
                break;
            }
        PPBIJ_CHECK(pos >= 0, "row_extract: reverse bump found no larger entry");
        std::swap(above[pos], cur);
    }
    out.x = cur;
    PPBIJ_CHECK(is_ssyt(out.t), "row_extract broke semistandardness");
    return out;
}

struct InsertionRecord {
    Tableau base;
    std::vector<int> letters;  // strictly increasing
};

inline Tableau multi_insert(const Tableau& t, const std::vector<int>& letters) {
    PPBIJ_REQUIRE(std::is_sorted(letters.begin(), letters.end()) &&
                      std::adjacent_find(letters.begin(), letters.end()) == letters.end(),
                  "multi_insert: letters must be strictly increasing");
    Tableau cur = t;
    for (int x : letters) cur = row_insert(cur, x).t;
    return cur;
}

// Peel sh(U) \ lambda (at most one box per row) from bottom to top.
inline InsertionRecord multi_extract(const Tableau& u, const Row& lambda) {
    Row mu = u.shape();
    PPBIJ_REQUIRE(int(lambda.size()) == u.n, "multi_extract: shape must have n parts");
    for (int i = 0; i < u.n; ++i) {
        PPBIJ_REQUIRE(lambda[i] <= mu[i] && mu[i] - lambda[i] <= 1,
                      "multi_extract: sh(U) minus lambda must have at most one box per row");
        PPBIJ_REQUIRE(i == 0 || lambda[i] <= lambda[i - 1],
                      "multi_extract: lambda must be a partition");
    }
    InsertionRecord rec;
    rec.base = u;
    for (int i = u.n - 1; i >= 0; --i) {
        if (mu[i] == lambda[i]) continue;
        auto ext = row_extract(rec.base, i + 1, mu[i]);
        rec.base = ext.t;
        PPBIJ_CHECK(rec.letters.empty() || ext.x < rec.letters.back(),
                    "multi_extract: letters must come out decreasing");
        rec.letters.push_back(ext.x);
    }
    std::reverse(rec.letters.begin(), rec.letters.end());
    return rec;
}

struct OddSplit {
    Tableau t;             // even shape <= (2m)^n
    std::vector<int> tmap;  // size n, tmap[i-1] = 1 iff i was extracted
};

// Shape mu <= (2m+1)^n splits off the unique even lambda with
// lambda_i in {mu_i, mu_i - 1}.
inline OddSplit ssyt_odd_split(const Tableau& u, int m) {
    Row mu = u.shape();
    for (int i = 0; i < u.n; ++i)
        PPBIJ_REQUIRE(mu[i] <= 2 * m + 1, "ssyt_odd_split: shape exceeds (2m+1)^n");
    Row lambda(mu);
    for (int& v : lambda) v -= v % 2;
    auto rec = multi_extract(u, lambda);
    OddSplit out;
    out.t = rec.base;
    out.tmap.assign(u.n, 0);
    for (int x : rec.letters) out.tmap[x - 1] = 1;
    return out;
}

inline Tableau ssyt_odd_unsplit(const Tableau& t, const std::vector<int>& tmap, int m) {
    Row lambda = t.shape();
    for (int i = 0; i < t.n; ++i)
        PPBIJ_REQUIRE(lambda[i] % 2 == 0 && lambda[i] <= 2 * m,
                      "ssyt_odd_unsplit: shape must be even and <= (2m)^n");
    PPBIJ_REQUIRE(int(tmap.size()) == t.n, "ssyt_odd_unsplit: t-map must have n entries");
    std::vector<int> letters;
    for (int i = 1; i <= t.n; ++i)
        if (tmap[i - 1]) letters.push_back(i);
    return multi_insert(t, letters);
}

// S(T) = {T(1,2m)+1, ..., n}, reading T(1,2m) = 0 when lambda_1 < 2m.
inline std::set<int> stat_S_tableau(const Tableau& t, int m) {
    Row lambda = t.shape();
    for (int i = 0; i < t.n; ++i)
        PPBIJ_REQUIRE(lambda[i] % 2 == 0 && lambda[i] <= 2 * m,
                      "stat_S_tableau: shape must be even and <= (2m)^n");
    if (m == 0) return {};  // bound 2m = 0 forces the empty tableau and S = {}
    int top = (lambda[0] < 2 * m) ? 0 : t.rows[0][2 * m - 1];
    std::set<int> s;
    for (int j = top + 1; j <= t.n; ++j) s.insert(j);
    return s;
}

struct SppSplit {
    PP espp;                // in eSPP(n, m)
    std::vector<int> tmap;  // total map; for even M its support lies in S(espp)
};

// SPP(n,M) -> eSPP(n, floor(M/2)) with marks, via conjugation and the odd
// split. For even M the mark support is contained in S of the output.
inline SppSplit spp_split(const PP& p, int M) {
    int n = p.n(), m = M / 2;
    PPBIJ_REQUIRE(validate({PPClass::SPP, n, M}, p), "spp_split: not an SPP within bound");
    auto split = ssyt_odd_split(conj(p), m);
    SppSplit out;
    out.espp = conj_inverse(split.t);
    out.tmap = split.tmap;
    PPBIJ_CHECK(validate({PPClass::eSPP, n, m}, out.espp),
                "spp_split landed outside eSPP");
    if (M % 2 == 0) {
        auto dom = stat_S({PPClass::eSPP, n, m}, out.espp);
        for (int i = 1; i <= n; ++i)
            PPBIJ_CHECK(!out.tmap[i - 1] || dom.count(i),
                        "spp_split: mark outside S on even input");
    }
    return out;
}

inline PP spp_unsplit(const PP& espp, const std::vector<int>& tmap, int M) {
    int n = espp.n(), m = M / 2;
    PPBIJ_REQUIRE(validate({PPClass::eSPP, n, m}, espp), "spp_unsplit: not an eSPP");
    PPBIJ_REQUIRE(int(tmap.size()) == n, "spp_unsplit: t-map must have n entries");
    if (M % 2 == 0) {
        auto dom = stat_S({PPClass::eSPP, n, m}, espp);
        for (int i = 1; i <= n; ++i)
            PPBIJ_REQUIRE(!tmap[i - 1] || dom.count(i),
                          "spp_unsplit: mark outside S(pi') on even bound");
    }
    PP p = conj_inverse(ssyt_odd_unsplit(conj(espp), tmap, m));
    PPBIJ_CHECK(validate({PPClass::SPP, n, M}, p), "spp_unsplit landed outside SPP");
    return p;
}

}  // namespace ppbij
