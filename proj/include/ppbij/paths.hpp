#pragma once

// Monotone lattice paths as step words over {E, N}, where the ambient graph
// fixes what the two letters mean geometrically (up-right or down-right).
// Provides the binomial path sets C(u,v), the LGV tail-swap involution on
// path configurations, the 180-degree path rotation, and the mirror
// reflection across x - y = 2m + 2.

#include <optional>

#include "ppbij/common.hpp"

namespace ppbij {

struct Pt {
    int x = 0, y = 0;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
};

using Word = std::string;

struct StepGeom {
    Pt e, n;
};
inline constexpr StepGeom kUpRight{{1, 0}, {0, 1}};
inline constexpr StepGeom kDownRight{{1, 0}, {0, -1}};

inline Pt advance(const Pt& p, char letter, const StepGeom& g) {
    PPBIJ_CHECK(letter == 'E' || letter == 'N', "bad step letter");
    return p + (letter == 'E' ? g.e : g.n);
}

inline std::vector<Pt> vertices(Pt start, const Word& w, const StepGeom& g) {
    std::vector<Pt> out{start};
    for (char c : w) out.push_back(advance(out.back(), c, g));
    return out;
}

inline Pt endpoint(Pt start, const Word& w, const StepGeom& g) {
    for (char c : w) start = advance(start, c, g);
    return start;
}

inline int letter_count(const Word& w, char c) {
    return int(std::count(w.begin(), w.end(), c));
}

inline int trailing_run(const Word& w, char c) {
    int k = 0;
    for (auto it = w.rbegin(); it != w.rend() && *it == c; ++it) ++k;
    return k;
}

inline int leading_run(const Word& w, char c) {
    int k = 0;
    for (char x : w) {
        if (x != c) break;
        ++k;
    }
    return k;
}

// Reverse the word and swap E <-> N. Geometrically this reflects the path
// across the anti-diagonal through the midpoint of its endpoints, reversing
// orientation; it realizes the canonical C(u,v) = C(u,u-v) identification.
inline Word reversed_complement(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (char& c : out) c = (c == 'E') ? 'N' : 'E';
    return out;
}

// ------------------------------------------------------------------------
// C(u, v): up-right paths from the origin to (u-v, v)

inline long long count_C(int u, int v) {
    if (v < 0 || v > u || u < 0) return 0;  // out-of-range convention
    long long r = 1;
    v = std::min(v, u - v);
    for (int i = 1; i <= v; ++i) r = r * (u - v + i) / i;
    return r;
}

inline std::vector<Word> enumerate_C(int u, int v) {
    PPBIJ_REQUIRE(u >= 0, "enumerate_C: path length must be non-negative");
    std::vector<Word> out;
    if (v < 0 || v > u) return out;
    Word w(u, 'E');
    std::fill(w.begin(), w.begin() + v, 'N');
    std::sort(w.begin(), w.end());  // 'E' < 'N': start at the lexicographic min
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline bool is_C_word(const Word& w, int u, int v) {
    return int(w.size()) == u && letter_count(w, 'N') == v;
}

// ------------------------------------------------------------------------
// path configurations and the LGV involution

using EdgeOk = std::function<bool(const Pt&, const Pt&)>;

inline bool word_in_region(Pt start, const Word& w, const StepGeom& g, const EdgeOk& ok) {
    Pt cur = start;
    for (char c : w) {
        Pt nxt = advance(cur, c, g);
        if (!ok(cur, nxt)) return false;
        cur = nxt;
    }
    return true;
}

inline void enumerate_paths(Pt a, Pt b, const StepGeom& g, const EdgeOk& ok,
                            const std::function<void(const Word&)>& emit) {
    Word w;
    std::function<void(Pt)> rec = [&](Pt cur) {
        int re = b.x - cur.x;            // E steps still needed
        int rn = (b.y - cur.y) * g.n.y;  // N steps still needed (n.y = +-1)
        if (re < 0 || rn < 0) return;
        if (re == 0 && rn == 0) {
            emit(w);
            return;
        }
        for (char c : {'E', 'N'}) {
            Pt nxt = advance(cur, c, g);
            if (!ok(cur, nxt)) continue;
            w.push_back(c);
            rec(nxt);
            w.pop_back();
        }
    };
    rec(a);
}

struct LgvConfig {
    StepGeom geom;
    std::vector<Pt> starts;   // one per slot
    std::vector<Word> words;  // one per slot
    Perm sigma;               // slot -> sink index; sgn(sigma) is the sign

    std::vector<Pt> ends() const {
        std::vector<Pt> out;
        for (size_t k = 0; k < words.size(); ++k)
            out.push_back(endpoint(starts[k], words[k], geom));
        return out;
    }
};

inline std::vector<std::pair<Pt, Pt>> edge_multiset(const LgvConfig& c) {
    std::vector<std::pair<Pt, Pt>> out;
    for (size_t k = 0; k < c.words.size(); ++k) {
        Pt cur = c.starts[k];
        for (char ch : c.words[k]) {
            Pt nxt = advance(cur, ch, c.geom);
            out.emplace_back(cur, nxt);
            cur = nxt;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct Crossing {
    Pt v;
    int slot_a, slot_b;  // two smallest slot indices through v
};

inline std::optional<Crossing> find_crossing(const LgvConfig& c) {
    std::map<Pt, std::vector<int>> seen;
    for (size_t k = 0; k < c.words.size(); ++k)
        for (const Pt& p : vertices(c.starts[k], c.words[k], c.geom))
            seen[p].push_back(int(k));
    std::optional<Crossing> best;
    for (auto& [p, slots] : seen) {
        if (slots.size() < 2) continue;
        std::sort(slots.begin(), slots.end());
        // maximal vertex: primary key x+y, secondary key x, both descending
        auto key = [](const Pt& q) { return std::pair<int, int>(q.x + q.y, q.x); };
        if (!best || key(p) > key(best->v)) best = Crossing{p, slots[0], slots[1]};
    }
    return best;
}

}  // namespace detail

inline bool non_intersecting(const LgvConfig& c) {
    return !detail::find_crossing(c).has_value();
}

// One application of the tail-swap involution: swap the suffixes after the
// selected crossing vertex between the two selected slots and transpose the
// corresponding sink assignments.  The selection (maximal vertex, then the
// two smallest slot indices) is itself invariant under the swap, which makes
// the map an involution.
inline LgvConfig lgv_step(const LgvConfig& c) {
    auto cr = detail::find_crossing(c);
    PPBIJ_REQUIRE(cr.has_value(), "lgv_step: configuration is non-intersecting");
    LgvConfig out = c;
    int a = cr->slot_a, b = cr->slot_b;
    auto split_at = [&](int slot) {
        auto verts = vertices(c.starts[slot], c.words[slot], c.geom);
        for (size_t t = 0; t < verts.size(); ++t)
            if (verts[t] == cr->v) return int(t);
        PPBIJ_CHECK(false, "crossing vertex not on selected path");
        return -1;
    };
    int ta = split_at(a), tb = split_at(b);
    Word pa = c.words[a].substr(0, ta), sa = c.words[a].substr(ta);
    Word pb = c.words[b].substr(0, tb), sb = c.words[b].substr(tb);
    out.words[a] = pa + sb;
    out.words[b] = pb + sa;
    std::swap(out.sigma[a], out.sigma[b]);
    return out;
}

// Rotate every path 180 degrees about the midpoint of its own endpoints;
// as a step word this is plain reversal and endpoints are unchanged.
inline LgvConfig rotate180(const LgvConfig& c) {
    LgvConfig out = c;
    for (Word& w : out.words) w.assign(w.rbegin(), w.rend());
    return out;
}

// ------------------------------------------------------------------------
// mirror reflection across x - y = 2m + 2 (up-right graph)

struct MirrorResult {
    Pt start;
    Word word;
};

inline Pt reflect_across(const Pt& p, int m) {
    return {p.y + 2 * m + 2, p.x - 2 * m - 2};
}

// Reflect the prefix of the path up to its last intersection with the line
// x - y = 2m + 2 (the crossing with maximum x + y). Self-inverse: the image
// crosses the line at the same step positions.
inline MirrorResult mirror_reflect(Pt start, const Word& w, int m) {
    auto verts = vertices(start, w, kUpRight);
    int t_star = -1;
    for (size_t t = 0; t < verts.size(); ++t)
        if (verts[t].x - verts[t].y == 2 * m + 2) t_star = int(t);
    PPBIJ_REQUIRE(t_star >= 0, "mirror_reflect: path does not meet x-y = 2m+2");
    MirrorResult out;
    out.start = reflect_across(start, m);
    out.word = w;
    for (int t = 0; t < t_star; ++t)
        out.word[t] = (w[t] == 'E') ? 'N' : 'E';
    return out;
}

}  // namespace ppbij
