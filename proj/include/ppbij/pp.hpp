#pragma once

// Plane partitions on staircase and shifted-staircase supports, the five
// classes (SPP, eSPP, stairPP, pstairPP, QTCPP), their validators, exhaustive
// enumerators, an independent row-DP counter, and the set statistics S / S~.
//
// Conventions. Cells are addressed 1-based as (i,j). A plain staircase of
// size n has row i covering columns 1..n+1-i; a shifted staircase has row i
// covering columns i..n. SPPs are kept in their shifted-staircase form and
// QTCPPs in their staircase-identified form throughout.

#include <map>
#include <optional>

#include "ppbij/common.hpp"

namespace ppbij {

struct PP {
    bool shifted = false;
    Rows rows;

    int n() const { return int(rows.size()); }

    // column span of row i (1-based, inclusive)
    int col_lo(int i) const { return shifted ? i : 1; }
    int col_hi(int i) const { return col_lo(i) + int(rows[i - 1].size()) - 1; }

    bool has_cell(int i, int j) const {
        return i >= 1 && i <= n() && j >= col_lo(i) && j <= col_hi(i);
    }
    int at(int i, int j) const { return rows[i - 1][j - col_lo(i)]; }
    int& at(int i, int j) { return rows[i - 1][j - col_lo(i)]; }

    bool operator==(const PP& o) const { return shifted == o.shifted && rows == o.rows; }
    bool operator<(const PP& o) const {
        if (shifted != o.shifted) return shifted < o.shifted;
        return rows < o.rows;
    }
};

inline PP zero_staircase(int n, bool shifted) {
    PP p;
    p.shifted = shifted;
    p.rows.resize(n);
    for (int i = 1; i <= n; ++i) p.rows[i - 1].assign(n + 1 - i, 0);
    return p;
}

inline bool has_staircase_support(const PP& p, int n, bool shifted) {
    if (p.shifted != shifted || p.n() != n) return false;
    for (int i = 1; i <= n; ++i)
        if (int(p.rows[i - 1].size()) != n + 1 - i) return false;
    return true;
}

// Row/column monotonicity on the support; entries must be >= 0.
inline bool is_plane_partition(const PP& p) {
    int n = p.n();
    for (int i = 1; i <= n; ++i)
        for (int j = p.col_lo(i); j <= p.col_hi(i); ++j) {
            if (p.at(i, j) < 0) return false;
            if (j + 1 <= p.col_hi(i) && p.at(i, j) < p.at(i, j + 1)) return false;
            if (p.has_cell(i + 1, j) && p.at(i, j) < p.at(i + 1, j)) return false;
        }
    return true;
}

enum class PPClass { SPP, eSPP, stairPP, pstairPP, QTCPP };

inline const char* class_name(PPClass c) {
    switch (c) {
        case PPClass::SPP: return "SPP";
        case PPClass::eSPP: return "eSPP";
        case PPClass::stairPP: return "stairPP";
        case PPClass::pstairPP: return "pstairPP";
        case PPClass::QTCPP: return "QTCPP";
    }
    return "?";
}

inline std::optional<PPClass> class_from_name(const std::string& s) {
    for (PPClass c : {PPClass::SPP, PPClass::eSPP, PPClass::stairPP, PPClass::pstairPP,
                      PPClass::QTCPP})
        if (s == class_name(c)) return c;
    return std::nullopt;
}

// bound is M for SPP/pstairPP/QTCPP and m for eSPP/stairPP (eSPP entries are
// bounded by 2m).
struct ClassTag {
    PPClass cls;
    int n;
    int bound;
};

inline bool class_is_shifted(PPClass c) { return c == PPClass::SPP || c == PPClass::eSPP; }
inline int entry_bound(const ClassTag& t) {
    return t.cls == PPClass::eSPP ? 2 * t.bound : t.bound;
}

inline bool validate(const ClassTag& tag, const PP& p) {
    PPBIJ_REQUIRE(tag.n >= 1 && tag.bound >= 0, "class parameters out of range");
    PPBIJ_REQUIRE(has_staircase_support(p, tag.n, class_is_shifted(tag.cls)),
                  "support is not the required (shifted) staircase");
    if (!is_plane_partition(p)) return false;
    int n = tag.n;
    if (p.at(1, 1) > entry_bound(tag)) return false;
    switch (tag.cls) {
        case PPClass::SPP:
        case PPClass::stairPP:
            return true;
        case PPClass::eSPP:
            for (int i = 1; i <= n; ++i)
                if (p.at(i, i) % 2 != 0) return false;
            return true;
        case PPClass::pstairPP: {
            int M = tag.bound;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; i + j < n + 1; ++j)
                    if ((p.at(i, j) - M) % 2 != 0) return false;
            return true;
        }
        case PPClass::QTCPP: {
            int M = tag.bound;
            for (int i = 2; i <= n; ++i)
                if (p.at(i, n + 1 - i) < M - p.at(i - 1, n + 1 - i)) return false;
            for (int j = 2; j <= n; ++j)
                if (p.at(n + 1 - j, j) < M - p.at(n + 1 - j, j - 1)) return false;
            return true;
        }
    }
    return false;
}

namespace detail {

// Cell-by-cell lister in row-major order with ascending values; the output
// is lexicographic on the row-major entry sequence by construction.
inline void enumerate_staircase(int n, bool shifted, int bound,
                                const std::function<void(const PP&)>& emit) {
    PP p = zero_staircase(n, shifted);
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i > n) {
            emit(p);
            return;
        }
        int jn = j + 1, in = i;
        if (jn > p.col_hi(i)) {
            in = i + 1;
            jn = in <= n ? p.col_lo(in) : 0;
        }
        int cap = bound;
        if (j > p.col_lo(i)) cap = std::min(cap, p.at(i, j - 1));
        if (p.has_cell(i - 1, j)) cap = std::min(cap, p.at(i - 1, j));
        for (int v = 0; v <= cap; ++v) {
            p.at(i, j) = v;
            rec(in, jn);
        }
        p.at(i, j) = 0;
    };
    rec(1, n >= 1 ? p.col_lo(1) : 0);
}

}  // namespace detail

inline std::vector<PP> enumerate_class(const ClassTag& tag) {
    PPBIJ_REQUIRE(tag.n >= 1 && tag.n <= 6 && tag.bound >= 0 && tag.bound <= 8,
                  "enumeration guard: need n <= 6 and bound <= 8");
    std::vector<PP> out;
    detail::enumerate_staircase(tag.n, class_is_shifted(tag.cls), entry_bound(tag),
                                [&](const PP& p) {
                                    if (validate(tag, p)) out.push_back(p);
                                });
    return out;
}

// Independent counting route: row-by-row DP, memoized on the previous row.
// Shares nothing with the recursive lister above beyond the class predicate.
namespace detail {

inline void decreasing_rows(int len, int bound, Row& cur,
                            const std::function<void(const Row&)>& emit) {
    if (int(cur.size()) == len) {
        emit(cur);
        return;
    }
    int hi = cur.empty() ? bound : cur.back();
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        decreasing_rows(len, bound, cur, emit);
        cur.pop_back();
    }
}

}  // namespace detail

inline long long count_class_dp(const ClassTag& tag) {
    PPBIJ_REQUIRE(tag.n >= 1 && tag.n <= 6 && tag.bound >= 0 && tag.bound <= 8,
                  "counting guard: need n <= 6 and bound <= 8");
    const int n = tag.n;
    const bool shifted = class_is_shifted(tag.cls);
    const int B = entry_bound(tag);
    const int M = tag.bound;

    // dominance of row i+1 under row i: plain rows align at column 1,
    // shifted rows shift right by one.
    auto fits_under = [&](const Row& above, const Row& below) {
        for (size_t k = 0; k < below.size(); ++k) {
            int up = shifted ? above[k + 1] : above[k];
            if (below[k] > up) return false;
        }
        return true;
    };
    auto row_ok = [&](const Row& r) {
        switch (tag.cls) {
            case PPClass::eSPP:
                return r[0] % 2 == 0;  // r[0] is the diagonal cell (i,i)
            case PPClass::pstairPP: {
                // strict upper triangle of row i: columns j with i + j < n+1
                for (int k = 0; k < int(r.size()) - 1; ++k)
                    if ((r[k] - M) % 2 != 0) return false;
                return true;
            }
            case PPClass::QTCPP:
                return true;  // anti-diagonal coupling handled in the DP step
            default:
                return true;
        }
    };

    std::vector<std::vector<Row>> rows_of(n + 1);
    for (int i = 1; i <= n; ++i) {
        Row cur;
        detail::decreasing_rows(n + 1 - i, B, cur, [&](const Row& r) {
            if (row_ok(r)) rows_of[i].push_back(r);
        });
    }

    // QTCPP couples consecutive rows through the anti-diagonal cells
    // (i,n+1-i) >= M - (i-1,n+1-i) and (i,n+1-i) >= M - (i,n-i).
    auto qtcpp_pair_ok = [&](const Row& above, const Row& below) {
        if (tag.cls != PPClass::QTCPP) return true;
        // below = row i+1 with anti-diagonal cell at column n-i (its last)
        int anti = below.back();
        if (anti < M - above[int(below.size()) - 1]) return false;  // above same column
        return true;
    };
    auto qtcpp_row_ok = [&](const Row& r) {
        if (tag.cls != PPClass::QTCPP) return true;
        // condition (2): (i, n+1-i) >= M - (i, n-i) needs the left neighbour
        if (int(r.size()) >= 2 && r.back() < M - r[int(r.size()) - 2]) return false;
        return true;
    };

    std::map<Row, long long> cur;
    for (const Row& r : rows_of[1])
        if (qtcpp_row_ok(r)) cur[r] += 1;
    for (int i = 2; i <= n; ++i) {
        std::map<Row, long long> next;
        for (const Row& below : rows_of[i]) {
            if (!qtcpp_row_ok(below)) continue;
            long long acc = 0;
            for (const auto& [above, ways] : cur)
                if (fits_under(above, below) && qtcpp_pair_ok(above, below))
                    acc += ways;
            if (acc) next[below] += acc;
        }
        cur = std::move(next);
    }
    long long total = 0;
    for (const auto& [r, ways] : cur) total += ways;
    return total;
}

// S on stairPP: anti-diagonal cells with nonzero entry.
// S on eSPP(n,m): first-row columns with entry != 2m.
inline std::set<int> stat_S(const ClassTag& tag, const PP& p) {
    PPBIJ_REQUIRE(validate(tag, p), "stat_S: value not in the stated class");
    std::set<int> s;
    switch (tag.cls) {
        case PPClass::stairPP:
            for (int i = 1; i <= tag.n; ++i)
                if (p.at(i, tag.n + 1 - i) != 0) s.insert(i);
            return s;
        case PPClass::eSPP:
            for (int j = 1; j <= tag.n; ++j)
                if (p.at(1, j) != 2 * tag.bound) s.insert(j);
            return s;
        default:
            throw structural_error("stat_S: defined for stairPP and eSPP only");
    }
}

// S~ on stairPP(n,m): first-row columns with entry != m.
inline std::set<int> stat_S_tilde(const ClassTag& tag, const PP& p) {
    PPBIJ_REQUIRE(tag.cls == PPClass::stairPP, "S~ is a stairPP statistic");
    PPBIJ_REQUIRE(validate(tag, p), "stat_S_tilde: value not in the stated class");
    std::set<int> s;
    for (int j = 1; j <= tag.n; ++j)
        if (p.at(1, j) != tag.bound) s.insert(j);
    return s;
}

}  // namespace ppbij
