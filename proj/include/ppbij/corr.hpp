#pragma once

// The staircase-side correspondences: the parity-staircase <-> QTCPP
// bijection and the 1:2^#S correspondences between QTCPPs and stair-PPs
// for odd and even bound.

#include <map>

#include "ppbij/pp.hpp"

namespace ppbij {

namespace detail {

// min of the up/left neighbours of an anti-diagonal cell, using the single
// available neighbour on the edge rows/columns
inline int neighbour_min(const PP& p, int i, int j) {
    if (j == 1) return p.at(i - 1, j);
    if (i == 1) return p.at(i, j - 1);
    return std::min(p.at(i - 1, j), p.at(i, j - 1));
}

}  // namespace detail

inline PP pstair_to_qtcpp(const PP& p, int M) {
    int n = p.n();
    PPBIJ_REQUIRE(validate({PPClass::pstairPP, n, M}, p),
                  "pstair_to_qtcpp: input not in pstairPP(n,M)");
    if (n == 1) return p;
    PP q = zero_staircase(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i + j < n + 1) {
                PPBIJ_CHECK((p.at(i, j) + M) % 2 == 0, "parity violated off-diagonal");
                q.at(i, j) = (p.at(i, j) + M) / 2;
            } else {
                int mm = detail::neighbour_min(p, i, j);
                PPBIJ_CHECK((M - mm) % 2 == 0, "parity violated on the anti-diagonal");
                q.at(i, j) = p.at(i, j) + (M - mm) / 2;
            }
        }
    PPBIJ_CHECK(validate({PPClass::QTCPP, n, M}, q), "pstair_to_qtcpp left QTCPP");
    return q;
}

inline PP qtcpp_to_pstair(const PP& q, int M) {
    int n = q.n();
    PPBIJ_REQUIRE(validate({PPClass::QTCPP, n, M}, q),
                  "qtcpp_to_pstair: input not in QTCPP(n,M)");
    if (n == 1) return q;
    PP p = zero_staircase(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i + j < n + 1)
                p.at(i, j) = 2 * q.at(i, j) - M;
            else
                p.at(i, j) = q.at(i, j) - M + detail::neighbour_min(q, i, j);
        }
    PPBIJ_CHECK(validate({PPClass::pstairPP, n, M}, p), "qtcpp_to_pstair left pstairPP");
    return p;
}

// Odd bound M = 2m+1: QTCPP(n,M) <-> stairPP(n,m) x {0,1}^n.
struct StairWithBits {
    PP stair;
    std::vector<int> t;  // length n
};

inline StairWithBits qtcpp_to_stair_odd(const PP& q, int M) {
    int n = q.n(), m = (M - 1) / 2;
    PPBIJ_REQUIRE(M % 2 == 1, "qtcpp_to_stair_odd: bound must be odd");
    PPBIJ_REQUIRE(validate({PPClass::QTCPP, n, M}, q),
                  "qtcpp_to_stair_odd: input not in QTCPP(n,M)");
    StairWithBits out;
    out.stair = zero_staircase(n, false);
    out.t.assign(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i + j < n + 1)
                out.stair.at(i, j) = q.at(i, j) - m - 1;
            else {
                out.stair.at(i, j) = std::max(q.at(i, j) - m - 1, m - q.at(i, j));
                out.t[i - 1] = q.at(i, j) >= m + 1 ? 0 : 1;
            }
        }
    PPBIJ_CHECK(validate({PPClass::stairPP, n, m}, out.stair),
                "qtcpp_to_stair_odd left stairPP");
    return out;
}

inline PP stair_to_qtcpp_odd(const PP& s, const std::vector<int>& t, int M) {
    int n = s.n(), m = (M - 1) / 2;
    PPBIJ_REQUIRE(M % 2 == 1, "stair_to_qtcpp_odd: bound must be odd");
    PPBIJ_REQUIRE(validate({PPClass::stairPP, n, m}, s),
                  "stair_to_qtcpp_odd: input not in stairPP(n,m)");
    PPBIJ_REQUIRE(int(t.size()) == n, "stair_to_qtcpp_odd: t must have n entries");
    PP q = zero_staircase(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            bool anti = (i + j == n + 1);
            if (anti && t[i - 1] == 1)
                q.at(i, j) = m - s.at(i, j);
            else
                q.at(i, j) = m + 1 + s.at(i, j);
        }
    PPBIJ_CHECK(validate({PPClass::QTCPP, n, M}, q), "stair_to_qtcpp_odd left QTCPP");
    return q;
}

// Even bound M = 2m: marks live only on S(base) = nonzero anti-diagonal cells.
struct MarkedStair {
    PP base;
    std::map<int, int> marks;  // i in S(base) -> {0,1}

    bool operator==(const MarkedStair& o) const {
        return base == o.base && marks == o.marks;
    }
    bool operator<(const MarkedStair& o) const {
        return std::tie(base, marks) < std::tie(o.base, o.marks);
    }
};

inline MarkedStair qtcpp_to_stair_even(const PP& q, int M) {
    int n = q.n(), m = M / 2;
    PPBIJ_REQUIRE(M % 2 == 0, "qtcpp_to_stair_even: bound must be even");
    PPBIJ_REQUIRE(validate({PPClass::QTCPP, n, M}, q),
                  "qtcpp_to_stair_even: input not in QTCPP(n,M)");
    MarkedStair out;
    out.base = zero_staircase(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i + j < n + 1)
                out.base.at(i, j) = q.at(i, j) - m;
            else {
                out.base.at(i, j) = std::max(q.at(i, j) - m, m - q.at(i, j));
                if (out.base.at(i, j) != 0) out.marks[i] = q.at(i, j) > m ? 0 : 1;
            }
        }
    PPBIJ_CHECK(validate({PPClass::stairPP, n, m}, out.base),
                "qtcpp_to_stair_even left stairPP");
    return out;
}

inline PP stair_to_qtcpp_even(const MarkedStair& ms, int M) {
    int n = ms.base.n(), m = M / 2;
    PPBIJ_REQUIRE(M % 2 == 0, "stair_to_qtcpp_even: bound must be even");
    PPBIJ_REQUIRE(validate({PPClass::stairPP, n, m}, ms.base),
                  "stair_to_qtcpp_even: base not in stairPP(n,m)");
    auto dom = stat_S({PPClass::stairPP, n, m}, ms.base);
    PPBIJ_REQUIRE(ms.marks.size() == dom.size(), "mark domain must equal S(base)");
    for (const auto& [i, v] : ms.marks)
        PPBIJ_REQUIRE(dom.count(i) && (v == 0 || v == 1), "mark domain must equal S(base)");
    PP q = zero_staircase(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1 - i; ++j) {
            if (i + j < n + 1)
                q.at(i, j) = m + ms.base.at(i, j);
            else if (dom.count(i))
                q.at(i, j) = m + (ms.marks.at(i) == 0 ? ms.base.at(i, j) : -ms.base.at(i, j));
            else
                q.at(i, j) = m;
        }
    PPBIJ_CHECK(validate({PPClass::QTCPP, n, M}, q), "stair_to_qtcpp_even left QTCPP");
    return q;
}

}  // namespace ppbij
