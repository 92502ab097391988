#pragma once

// Test-only brute-force enumerators used as independent oracles.

#include <functional>
#include <vector>

#include "ppbij/tableau.hpp"

namespace ppbij::testing {

// All SSYT (decreasing convention) of exactly the given shape, entries <= n.
inline std::vector<Tableau> all_ssyt_of_shape(const Row& shape, int n) {
    std::vector<Tableau> out;
    Tableau t;
    t.n = n;
    for (int len : shape)
        if (len > 0) t.rows.emplace_back(len, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == t.rows.size()) {
            out.push_back(t);
            return;
        }
        size_t in = i, jn = j + 1;
        if (jn == t.rows[i].size()) {
            ++in;
            jn = 0;
        }
        int hi = n;
        if (j > 0) hi = std::min(hi, t.rows[i][j - 1]);
        if (i > 0 && j < t.rows[i - 1].size()) hi = std::min(hi, t.rows[i - 1][j] - 1);
        for (int v = 1; v <= hi; ++v) {
            t.rows[i][j] = v;
            rec(in, jn);
        }
        t.rows[i][j] = 0;
    };
    if (t.rows.empty())
        out.push_back(t);
    else
        rec(0, 0);
    return out;
}

// All partition shapes with at most `parts` parts, each part <= cap,
// and total size <= cells.
inline std::vector<Row> all_shapes(int parts, int cap, int cells) {
    std::vector<Row> out;
    Row cur;
    std::function<void(int, int)> rec = [&](int left, int hi) {
        out.push_back(cur);
        if (int(cur.size()) == parts) return;
        for (int v = std::min(hi, left); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(cells, cap);
    return out;
}

inline std::vector<Tableau> all_ssyt(int parts, int cap, int cells, int n) {
    std::vector<Tableau> out;
    for (const Row& sh : all_shapes(parts, cap, cells))
        for (auto& t : all_ssyt_of_shape(sh, n)) out.push_back(t);
    return out;
}

}  // namespace ppbij::testing
