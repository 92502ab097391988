#pragma once

// The staircase-side chain:
//
//   stairPP(n,m)  =>  level-set paths in the region x-y <= 2m+1
//                 =>  signed path configurations (LGV)
//                 =>  mirror-expanded configurations with e-flags
//                 =>  the I_m[m..1;m..1]-indexed products of C(2n, n+eta_i)
//                 =>  their |eta|-normalized form,
//
// plus the separate rotation chain on the first (column-path) configuration
// that exchanges the statistics S and S~ on stairPP itself.
//
// Path slots are listed by source: slot k starts at the k-th source anchor
// and ends at sink sigma_k.  Level sets follow the calibrated orientation:
// HighFirst makes path i the boundary of { entries >= m+1-i }.

#include "ppbij/chain_util.hpp"
#include "ppbij/imjm.hpp"

namespace ppbij {

struct StairParams {
    int n = 1, m = 1;
    LevelOrder order = LevelOrder::HighFirst;

    Pt a(int i) const { return {i, -i}; }                    // level-path sources
    Pt b(int i) const { return {i + n, n - i}; }             // level-path sinks
    Pt a_refl(int i) const { return reflect_across(a(i), m); }
    Pt col_a(int c) const { return {-c, -c}; }               // column-path sources
    Pt col_b(int j) const { return {n + 1 - 2 * j, -m - j}; }

    int level_of_slot(int i) const { return order == LevelOrder::HighFirst ? m + 1 - i : i; }

    EdgeOk region() const {
        int cap = 2 * m + 1;
        return [cap](const Pt& p, const Pt& q) {
            return std::max(p.x - p.y, q.x - q.y) <= cap;
        };
    }

    std::string suffix() const {
        return "[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "," +
               level_order_tag(order) + "]";
    }
    StageId pp_tag() const {
        return "stairPP[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]";
    }
    StageId ni_tag() const { return "stairNI" + suffix(); }
    StageId lgv_tag() const { return "stairLGV" + suffix(); }
    StageId mirror_tag() const { return "stairMirror" + suffix(); }
    StageId fac_tag() const { return "stairFac" + suffix(); }
    StageId facabs_tag() const { return "stairFacAbs" + suffix(); }
    StageId rot_ni_tag(bool second) const {
        return std::string("rotNI") + (second ? "2" : "") + suffix();
    }
    StageId rot_lgv_tag(bool second) const {
        return std::string("rotLGV") + (second ? "2" : "") + suffix();
    }
};

// ------------------------------------------------------------------------
// level-set boundary paths (the second configuration of the paper)

inline std::vector<Word> stair_level_words(const StairParams& P, const PP& p) {
    PPBIJ_REQUIRE(validate({PPClass::stairPP, P.n, P.m}, p),
                  "stair_level_words: input not in stairPP(n,m)");
    std::vector<Word> out;
    for (int i = 1; i <= P.m; ++i) {
        int theta = P.level_of_slot(i);
        std::vector<int> r(P.n + 2, 0);
        for (int j = 1; j <= P.n; ++j)
            for (int c = 1; c <= P.n + 1 - j; ++c)
                if (p.at(j, c) >= theta) ++r[j];
        Word w;
        for (int j = P.n; j >= 1; --j) {
            w.append(size_t(r[j] - r[j + 1]), 'E');
            w.push_back('N');
        }
        w.append(size_t(P.n - r[1]), 'E');
        out.push_back(std::move(w));
    }
    return out;
}

inline PP stair_from_level_words(const StairParams& P, const std::vector<Word>& words) {
    PPBIJ_REQUIRE(int(words.size()) == P.m, "expected one path per level");
    PP p = zero_staircase(P.n, false);
    for (int i = 1; i <= P.m; ++i) {
        const Word& w = words[i - 1];
        PPBIJ_REQUIRE(int(w.size()) == 2 * P.n && letter_count(w, 'N') == P.n,
                      "level path must have n east and n north steps");
        // r_j = number of east steps before the (n+1-j)-th north step
        int seen_e = 0, k = 0;
        std::vector<int> r(P.n + 1, 0);
        for (char c : w) {
            if (c == 'E') ++seen_e;
            else r[P.n - k++] = seen_e;
        }
        int theta = P.level_of_slot(i);
        for (int j = 1; j <= P.n; ++j) {
            PPBIJ_REQUIRE(r[j] <= P.n + 1 - j, "level region exceeds the staircase");
            for (int c = 1; c <= std::min(r[j], P.n + 1 - j); ++c)
                if (p.at(j, c) < theta) p.at(j, c) = theta;
        }
    }
    // levels must be nested and each level must reproduce its own path
    PPBIJ_REQUIRE(validate({PPClass::stairPP, P.n, P.m}, p) &&
                      stair_level_words(P, p) == words,
                  "path tuple is not the level encoding of a staircase PP");
    return p;
}

// ------------------------------------------------------------------------
// column paths (the first configuration), used by the rotation chain

inline std::vector<Word> stair_column_words(const StairParams& P, const PP& p) {
    PPBIJ_REQUIRE(validate({PPClass::stairPP, P.n, P.m}, p),
                  "stair_column_words: input not in stairPP(n,m)");
    std::vector<Word> out;
    for (int c = 1; c <= P.n; ++c) {
        int len = P.n + 1 - c;
        Word w;
        int prev = P.m;
        for (int r = 1; r <= len; ++r) {
            w.append(size_t(prev - p.at(r, c)), 'N');  // N = down step here
            w.push_back('E');
            prev = p.at(r, c);
        }
        w.append(size_t(prev), 'N');
        out.push_back(std::move(w));
    }
    return out;
}

inline PP stair_from_column_words(const StairParams& P, const std::vector<Word>& words) {
    PPBIJ_REQUIRE(int(words.size()) == P.n, "expected one path per column");
    PP p = zero_staircase(P.n, false);
    for (int c = 1; c <= P.n; ++c) {
        const Word& w = words[c - 1];
        int len = P.n + 1 - c;
        PPBIJ_REQUIRE(letter_count(w, 'E') == len && letter_count(w, 'N') == P.m,
                      "column path has the wrong step counts");
        int height = P.m, r = 1;
        for (char ch : w) {
            if (ch == 'N') --height;
            else p.at(r++, c) = height;
        }
    }
    PPBIJ_REQUIRE(validate({PPClass::stairPP, P.n, P.m}, p),
                  "path tuple is not the column encoding of a staircase PP");
    return p;
}

// ------------------------------------------------------------------------
// element builders

inline Element stair_pp_elt(const StairParams& P, const PP& p) {
    return {P.pp_tag(), +1, pp_payload(p)};
}

inline Element stair_ni_elt(const StairParams& P, const std::vector<Word>& ws) {
    return {P.ni_tag(), +1, words_payload(ws)};
}

inline Element stair_lgv_elt(const StairParams& P, const Perm& sigma,
                             const std::vector<Word>& ws) {
    return {P.lgv_tag(), perm_sign(sigma),
            Payload(PayloadVec{Payload(sigma), words_payload(ws)})};
}

inline Element stair_mirror_elt(const StairParams& P, const Perm& sigma,
                                const std::vector<int>& e, const std::vector<Word>& ws) {
    int s = perm_sign(sigma);
    for (int ei : e)
        if (ei) s = -s;
    return {P.mirror_tag(), s,
            Payload(PayloadVec{Payload(sigma), Payload(e), words_payload(ws)})};
}

inline Element stair_fac_elt(const StairParams& P, bool absform, const Perm& sigma,
                             const std::vector<int>& t, const std::vector<Word>& ws) {
    int s = perm_sign(sigma);
    for (int ti : t)
        if (ti) s = -s;
    return {absform ? P.facabs_tag() : P.fac_tag(), s,
            Payload(PayloadVec{Payload(sigma), Payload(t), words_payload(ws)})};
}

// ------------------------------------------------------------------------
// chain hops

class StairToPaths final : public Sijection {
  public:
    explicit StairToPaths(StairParams P)
        : P_(P), src_(P.pp_tag()), dst_(P.ni_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (at_src)
            return {stair_ni_elt(P_, stair_level_words(P_, payload_pp(e.val, false))),
                    true,
                    {}};
        return {stair_pp_elt(P_, stair_from_level_words(P_, payload_words(e.val))),
                true,
                {}};
    }

  private:
    StairParams P_;
    StageId src_, dst_;
};

class StairLgvHop final : public LgvHop {
  public:
    explicit StairLgvHop(StairParams P) : LgvHop(P.ni_tag(), P.lgv_tag()), P_(P) {}

  protected:
    LgvConfig decode(const Element& e) const override {
        const auto& parts = e.val.items();
        LgvConfig c;
        c.geom = kUpRight;
        c.sigma = parts[0].as_ints();
        c.words = payload_words(parts[1]);
        for (int i = 1; i <= P_.m; ++i) c.starts.push_back(P_.a(i));
        return c;
    }
    Element encode_lgv(const LgvConfig& c, const Element&) const override {
        return stair_lgv_elt(P_, c.sigma, c.words);
    }
    Element to_ni(const Element& e) const override {
        return stair_ni_elt(P_, payload_words(e.val.items()[1]));
    }
    Element to_lgv(const Element& e) const override {
        return stair_lgv_elt(P_, perm_identity(P_.m), payload_words(e.val));
    }

  private:
    StairParams P_;
};

// one slot of the mirror expansion: region paths versus e-flagged full paths
class MirrorFactor final : public Sijection {
  public:
    MirrorFactor(StairParams P, int slot, int sink)
        : P_(P), slot_(slot), sink_(sink),
          src_("stMFs" + P.suffix() + "#" + std::to_string(slot) + ">" +
               std::to_string(sink)),
          dst_("stMFd" + P.suffix() + "#" + std::to_string(slot) + ">" +
               std::to_string(sink)) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

    Element region_elt(const Word& w) const { return {src_, +1, Payload(w)}; }
    Element flagged_elt(int e, const Word& w) const {
        return {dst_, e ? -1 : +1, Payload(PayloadVec{Payload(e), Payload(w)})};
    }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (at_src) return {flagged_elt(0, e.val.as_str()), true, {}};
        int flag = int(e.val.items()[0].as_int());
        Word w = e.val.items()[1].as_str();
        if (flag == 0) {
            if (word_in_region(P_.a(slot_), w, kUpRight, P_.region()))
                return {region_elt(w), true, {}};
            auto mr = mirror_reflect(P_.a(slot_), w, P_.m);
            PPBIJ_CHECK(mr.start == P_.a_refl(slot_), "mirror image left its anchor");
            return {flagged_elt(1, mr.word), false, {}};
        }
        auto mr = mirror_reflect(P_.a_refl(slot_), w, P_.m);
        PPBIJ_CHECK(mr.start == P_.a(slot_), "mirror image left its anchor");
        return {flagged_elt(0, mr.word), false, {}};
    }

  private:
    StairParams P_;
    int slot_, sink_;
    StageId src_, dst_;
};

class MirrorHop final : public Sijection {
  public:
    explicit MirrorHop(StairParams P)
        : P_(P), src_(P.lgv_tag()), dst_(P.mirror_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        Perm sigma = parts[0].as_ints();
        std::vector<SijPtr> hops;
        std::vector<MirrorFactor*> raw;
        for (int k = 1; k <= P_.m; ++k) {
            auto f = std::make_shared<MirrorFactor>(P_, k, sigma[k - 1]);
            raw.push_back(f.get());
            hops.push_back(f);
        }
        std::vector<Element> fac;
        if (at_src) {
            auto words = payload_words(parts[1]);
            for (int k = 0; k < P_.m; ++k) fac.push_back(raw[k]->region_elt(words[k]));
            auto res = factor_zigzag(hops, std::move(fac), true, 10'000'000, trace);
            PPBIJ_CHECK(res.crossed, "plain products cannot bounce forward");
            return {rebuild_mirror(sigma, res.factors), true, {}};
        }
        auto flags = parts[1].as_ints();
        auto words = payload_words(parts[2]);
        for (int k = 0; k < P_.m; ++k)
            fac.push_back(raw[k]->flagged_elt(flags[k], words[k]));
        auto res = factor_zigzag(hops, std::move(fac), false, 10'000'000, trace);
        if (res.crossed) {
            std::vector<Word> ws;
            for (const Element& f : res.factors) ws.push_back(f.val.as_str());
            return {stair_lgv_elt(P_, sigma, ws), true, {}};
        }
        return {rebuild_mirror(sigma, res.factors), false, {}};
    }

  private:
    Element rebuild_mirror(const Perm& sigma, const std::vector<Element>& fac) const {
        std::vector<int> flags;
        std::vector<Word> ws;
        for (const Element& f : fac) {
            flags.push_back(int(f.val.items()[0].as_int()));
            ws.push_back(f.val.items()[1].as_str());
        }
        return stair_mirror_elt(P_, sigma, flags, ws);
    }

    StairParams P_;
    StageId src_, dst_;
};

// re-list the mirror configuration by sink and read off the I_m index
class StairFacRecode final : public Sijection {
  public:
    explicit StairFacRecode(StairParams P)
        : P_(P), src_(P.mirror_tag()), dst_(P.fac_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        if (at_src) {
            Perm by_src = parts[0].as_ints();
            auto flags = parts[1].as_ints();
            auto words = payload_words(parts[2]);
            Perm sigma = perm_inverse(by_src);  // sink i is fed by slot sigma_i
            std::vector<int> t(P_.m);
            std::vector<Word> ws(P_.m);
            auto sp = stair_params(P_.m);
            for (int i = 1; i <= P_.m; ++i) {
                int k = sigma[i - 1];
                t[i - 1] = flags[k - 1];
                ws[i - 1] = words[k - 1];
                int eta = eta_I(sp, sp, sigma, t, i);
                PPBIJ_CHECK(letter_count(ws[i - 1], 'N') == P_.n + eta,
                            "factor height disagrees with its eta value");
            }
            return {stair_fac_elt(P_, false, sigma, t, ws), true, {}};
        }
        Perm sigma = parts[0].as_ints();
        auto t = parts[1].as_ints();
        auto words = payload_words(parts[2]);
        Perm by_src = perm_inverse(sigma);
        std::vector<int> flags(P_.m);
        std::vector<Word> ws(P_.m);
        for (int k = 1; k <= P_.m; ++k) {
            flags[k - 1] = t[by_src[k - 1] - 1];
            ws[k - 1] = words[by_src[k - 1] - 1];
        }
        return {stair_mirror_elt(P_, by_src, flags, ws), true, {}};
    }

  private:
    StairParams P_;
    StageId src_, dst_;
};

// transpose the factors whose eta is negative (reversed complement)
class StairAbsNorm final : public Sijection {
  public:
    explicit StairAbsNorm(StairParams P)
        : P_(P), src_(P.fac_tag()), dst_(P.facabs_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        Perm sigma = parts[0].as_ints();
        auto t = parts[1].as_ints();
        auto words = payload_words(parts[2]);
        auto sp = stair_params(P_.m);
        for (int i = 1; i <= P_.m; ++i)
            if (eta_I(sp, sp, sigma, t, i) < 0)
                words[i - 1] = reversed_complement(words[i - 1]);
        return {stair_fac_elt(P_, at_src, sigma, t, words), true, {}};
    }

  private:
    StairParams P_;
    StageId src_, dst_;
};

inline SijPtr stair_chain_forward(const StairParams& P) {
    return compose({std::make_shared<StairToPaths>(P), std::make_shared<StairLgvHop>(P),
                    std::make_shared<MirrorHop>(P), std::make_shared<StairFacRecode>(P),
                    std::make_shared<StairAbsNorm>(P)});
}

// ------------------------------------------------------------------------
// the rotation chain on column paths

class StairToColumns final : public Sijection {
  public:
    StairToColumns(StairParams P, bool second)
        : P_(P), src_(P.pp_tag()), dst_(P.rot_ni_tag(second)) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (at_src)
            return {Element{dst_, +1,
                            words_payload(stair_column_words(P_, payload_pp(e.val, false)))},
                    true,
                    {}};
        return {stair_pp_elt(P_, stair_from_column_words(P_, payload_words(e.val))),
                true,
                {}};
    }

  private:
    StairParams P_;
    StageId src_, dst_;
};

class RotLgvHop final : public LgvHop {
  public:
    RotLgvHop(StairParams P, bool second)
        : LgvHop(P.rot_ni_tag(second), P.rot_lgv_tag(second)), P_(P) {}

    LgvConfig decode_config(const Element& e) const { return decode(e); }

  protected:
    LgvConfig decode(const Element& e) const override {
        const auto& parts = e.val.items();
        LgvConfig c;
        c.geom = kDownRight;
        c.sigma = parts[0].as_ints();
        c.words = payload_words(parts[1]);
        for (int i = 1; i <= P_.n; ++i) c.starts.push_back(P_.col_a(i));
        return c;
    }
    Element encode_lgv(const LgvConfig& c, const Element& proto) const override {
        return {proto.stage, perm_sign(c.sigma),
                Payload(PayloadVec{Payload(c.sigma), words_payload(c.words)})};
    }
    Element to_ni(const Element& e) const override {
        return {src(), +1, e.val.items()[1]};
    }
    Element to_lgv(const Element& e) const override {
        return {dst(), +1,
                Payload(PayloadVec{Payload(perm_identity(P_.n)), e.val})};
    }

  private:
    StairParams P_;
};

class RotateHop final : public Sijection {
  public:
    explicit RotateHop(StairParams P)
        : P_(P), src_(P.rot_lgv_tag(false)), dst_(P.rot_lgv_tag(true)) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        Perm sigma = parts[0].as_ints();
        auto words = payload_words(parts[1]);
        // anchor check: slot k must run from col_a(k) to col_b(sigma_k)
        for (int k = 1; k <= P_.n; ++k)
            PPBIJ_REQUIRE(endpoint(P_.col_a(k), words[k - 1], kDownRight) ==
                              P_.col_b(sigma[k - 1]),
                          "rotate180: anchor mismatch");
        for (Word& w : words) w.assign(w.rbegin(), w.rend());
        return {Element{at_src ? dst_ : src_, e.sign,
                        Payload(PayloadVec{Payload(sigma), words_payload(words)})},
                true,
                {}};
    }

  private:
    StairParams P_;
    StageId src_, dst_;
};

// (stairPP, S) => (stairPP, S~): column paths, LGV, rotate, and back.
inline SijPtr stair_rotation_sijection(const StairParams& P) {
    return compose({std::make_shared<StairToColumns>(P, false),
                    std::make_shared<RotLgvHop>(P, false), std::make_shared<RotateHop>(P),
                    reverse(std::make_shared<RotLgvHop>(P, true)),
                    reverse(std::make_shared<StairToColumns>(P, true))});
}

// ------------------------------------------------------------------------
// statistics

// S~ on the normalized factored stage: the trailing east steps of factor 1,
// returned as 1-based step indices.
inline std::set<int> stat_S_tilde_factored(const Element& e) {
    const Word w = e.val.items()[2].items()[0].as_str();
    int run = trailing_run(w, 'E');
    std::set<int> out;
    for (int i = int(w.size()) - run + 1; i <= int(w.size()); ++i) out.insert(i);
    return out;
}

// #S~ at every stage of the forward chain (used by the hop-by-hop checks)
inline int64_t stair_stat_card(const StairParams& P, const Element& e) {
    if (e.stage == P.pp_tag())
        return int64_t(stat_S_tilde({PPClass::stairPP, P.n, P.m},
                                    payload_pp(e.val, false))
                           .size());
    auto edges_high = [&](Pt start, const Word& w) {
        int cnt = 0;
        Pt cur = start;
        for (char c : w) {
            Pt nxt = advance(cur, c, kUpRight);
            if (std::min(cur.y, nxt.y) >= P.n - 1) ++cnt;
            cur = nxt;
        }
        return cnt;
    };
    if (e.stage == P.ni_tag()) {
        auto ws = payload_words(e.val);
        int c = 0;
        for (int k = 1; k <= P.m; ++k) c += edges_high(P.a(k), ws[k - 1]);
        return c;
    }
    if (e.stage == P.lgv_tag()) {
        auto ws = payload_words(e.val.items()[1]);
        int c = 0;
        for (int k = 1; k <= P.m; ++k) c += edges_high(P.a(k), ws[k - 1]);
        return c;
    }
    if (e.stage == P.mirror_tag()) {
        auto flags = e.val.items()[1].as_ints();
        auto ws = payload_words(e.val.items()[2]);
        int c = 0;
        for (int k = 1; k <= P.m; ++k)
            c += edges_high(flags[k - 1] ? P.a_refl(k) : P.a(k), ws[k - 1]);
        return c;
    }
    if (e.stage == P.fac_tag() || e.stage == P.facabs_tag()) {
        // factor 1 as a C-path from the origin: edges at its final height
        const Word w = e.val.items()[2].items()[0].as_str();
        return trailing_run(w, 'E');
    }
    throw structural_error("stair_stat_card: unknown stage " + e.stage);
}

// E1/E2 occurrence counts on the rotation chain (edges just above sinks /
// just below sources)
inline int64_t rot_stat_card(const StairParams& P, const Element& e, bool tilde) {
    PPBIJ_REQUIRE(e.stage != P.pp_tag(), "rot_stat_card expects a path stage");
    const auto& parts = e.val.items();
    // NI stages carry a bare word list, LGV stages a [sigma, words] pair
    std::vector<Word> ws =
        parts[0].is_str() ? payload_words(e.val) : payload_words(parts[1]);
    std::set<std::pair<Pt, Pt>> marks;
    for (int j = 1; j <= P.n; ++j) {
        if (tilde)  // E2: the edge from a_i one step down
            marks.insert({P.col_a(j), P.col_a(j) + Pt{0, -1}});
        else  // E1: the edge entering b_j from above
            marks.insert({P.col_b(j) + Pt{0, 1}, P.col_b(j)});
    }
    int cnt = 0;
    for (int k = 1; k <= P.n; ++k) {
        Pt cur = P.col_a(k);
        for (char c : ws[k - 1]) {
            Pt nxt = advance(cur, c, kDownRight);
            if (marks.count({cur, nxt})) ++cnt;
            cur = nxt;
        }
    }
    return cnt;
}

// ------------------------------------------------------------------------
// stage supports (exhaustive tests and the verification suites)

inline std::vector<Element> stair_supp_lgv(const StairParams& P) {
    std::vector<Element> out;
    for (const Perm& sigma : all_perms(P.m)) {
        std::vector<std::vector<Word>> per(P.m);
        bool empty = false;
        for (int k = 1; k <= P.m; ++k) {
            enumerate_paths(P.a(k), P.b(sigma[k - 1]), kUpRight, P.region(),
                            [&](const Word& w) { per[k - 1].push_back(w); });
            empty = empty || per[k - 1].empty();
        }
        if (empty) continue;
        std::vector<size_t> idx(P.m, 0);
        while (true) {
            std::vector<Word> ws;
            for (int k = 0; k < P.m; ++k) ws.push_back(per[k][idx[k]]);
            out.push_back(stair_lgv_elt(P, sigma, ws));
            size_t k = 0;
            while (k < size_t(P.m) && ++idx[k] == per[k].size()) idx[k++] = 0;
            if (k == size_t(P.m)) break;
        }
    }
    return out;
}

inline std::vector<Element> stair_supp_ni(const StairParams& P) {
    std::vector<Element> out;
    for (const Element& e : stair_supp_lgv(P)) {
        if (e.sign < 0) continue;
        const auto& parts = e.val.items();
        if (parts[0].as_ints() != perm_identity(P.m)) continue;
        LgvConfig c{kUpRight, {}, payload_words(parts[1]), parts[0].as_ints()};
        for (int i = 1; i <= P.m; ++i) c.starts.push_back(P.a(i));
        if (non_intersecting(c)) out.push_back(stair_ni_elt(P, c.words));
    }
    return out;
}

inline std::vector<Element> stair_supp_mirror(const StairParams& P) {
    std::vector<Element> out;
    auto no_region = [](const Pt&, const Pt&) { return true; };
    for (const Perm& sigma : all_perms(P.m))
        for (int mask = 0; mask < (1 << P.m); ++mask) {
            std::vector<int> flags(P.m);
            std::vector<std::vector<Word>> per(P.m);
            bool empty = false;
            for (int k = 1; k <= P.m; ++k) {
                flags[k - 1] = (mask >> (k - 1)) & 1;
                Pt from = flags[k - 1] ? P.a_refl(k) : P.a(k);
                enumerate_paths(from, P.b(sigma[k - 1]), kUpRight, no_region,
                                [&](const Word& w) { per[k - 1].push_back(w); });
                empty = empty || per[k - 1].empty();
            }
            if (empty) continue;
            std::vector<size_t> idx(P.m, 0);
            while (true) {
                std::vector<Word> ws;
                for (int k = 0; k < P.m; ++k) ws.push_back(per[k][idx[k]]);
                out.push_back(stair_mirror_elt(P, sigma, flags, ws));
                size_t k = 0;
                while (k < size_t(P.m) && ++idx[k] == per[k].size()) idx[k++] = 0;
                if (k == size_t(P.m)) break;
            }
        }
    return out;
}

inline std::vector<Element> stair_supp_fac(const StairParams& P, bool absform) {
    std::vector<Element> out;
    auto sp = stair_params(P.m);
    for (const Element& idx : supp_I(sp, sp)) {
        Perm sigma = idx.val.items()[0].as_ints();
        std::vector<int> t = idx.val.items()[1].as_ints();
        std::vector<std::vector<Word>> per(P.m);
        bool empty = false;
        for (int i = 1; i <= P.m; ++i) {
            int eta = eta_I(sp, sp, sigma, t, i);
            per[i - 1] = enumerate_C(2 * P.n, P.n + (absform ? std::abs(eta) : eta));
            empty = empty || per[i - 1].empty();
        }
        if (empty) continue;
        std::vector<size_t> ix(P.m, 0);
        while (true) {
            std::vector<Word> ws;
            for (int i = 0; i < P.m; ++i) ws.push_back(per[i][ix[i]]);
            out.push_back(stair_fac_elt(P, absform, sigma, t, ws));
            size_t i = 0;
            while (i < size_t(P.m) && ++ix[i] == per[i].size()) ix[i++] = 0;
            if (i == size_t(P.m)) break;
        }
    }
    return out;
}

inline std::vector<Element> rot_supp_lgv(const StairParams& P, bool second) {
    std::vector<Element> out;
    auto no_region = [](const Pt&, const Pt&) { return true; };
    for (const Perm& sigma : all_perms(P.n)) {
        std::vector<std::vector<Word>> per(P.n);
        bool empty = false;
        for (int k = 1; k <= P.n; ++k) {
            enumerate_paths(P.col_a(k), P.col_b(sigma[k - 1]), kDownRight, no_region,
                            [&](const Word& w) { per[k - 1].push_back(w); });
            empty = empty || per[k - 1].empty();
        }
        if (empty) continue;
        std::vector<size_t> idx(P.n, 0);
        while (true) {
            std::vector<Word> ws;
            for (int k = 0; k < P.n; ++k) ws.push_back(per[k][idx[k]]);
            out.push_back(Element{P.rot_lgv_tag(second), perm_sign(sigma),
                                  Payload(PayloadVec{Payload(sigma), words_payload(ws)})});
            size_t k = 0;
            while (k < size_t(P.n) && ++idx[k] == per[k].size()) idx[k++] = 0;
            if (k == size_t(P.n)) break;
        }
    }
    return out;
}

}  // namespace ppbij
