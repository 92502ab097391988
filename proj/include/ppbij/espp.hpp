#pragma once

// The even-SPP chain:
//
//   eSPP(n,m)  =>  2m level paths with paired movable starts a_tau on
//                  x+y = n (tau_{2i} = tau_{2i-1}+1)
//              =>  signed configurations (LGV), tau~ strictly increasing
//              =>  (tau~, sigma) re-paired to T_{n,m} x S'_{2m}
//              =>  tau~ range extended to all m-tuples; duplicates cancel
//              =>  pairs glued through a_tau~ into single paths
//                  b'_{sigma_{2i}-1} -> b_{sigma_{2i-1}}, i.e. the
//                  J_m<1..2m>-indexed products of C(2n, n+eta_i)
//              =>  their |eta|-normalized form.
//
// Slot k of a configuration starts at a_{tau_k} and ends at b_{sigma_k}.

#include "ppbij/chain_util.hpp"
#include "ppbij/imjm.hpp"

namespace ppbij {

struct EsppParams {
    int n = 1, m = 1;
    LevelOrder order = LevelOrder::HighFirst;

    Pt a(int i) const { return {i, n - i}; }       // i = 1..n+2m, on x+y = n
    Pt b(int i) const { return {i + n, n - i}; }   // i = 1..2m
    Pt bp(int i) const { return {i, -i}; }         // b'_i

    int level_of_slot(int i) const {
        return order == LevelOrder::HighFirst ? 2 * m + 1 - i : i;
    }
    int tau_of(const std::vector<int>& taut, int slot) const {
        return slot % 2 ? taut[(slot - 1) / 2] : taut[slot / 2 - 1] + 1;
    }

    std::string suffix() const {
        return "[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "," +
               level_order_tag(order) + "]";
    }
    StageId pp_tag() const {
        return "eSPP[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]";
    }
    StageId ni_tag() const { return "esppNI" + suffix(); }
    StageId lgv_tag() const { return "esppLGV" + suffix(); }
    StageId canon_tag() const { return "esppCanon" + suffix(); }
    StageId full_tag() const { return "esppFull" + suffix(); }
    StageId fac_tag() const { return "esppFac" + suffix(); }
    StageId facabs_tag() const { return "esppFacAbs" + suffix(); }
};

// ------------------------------------------------------------------------
// level paths of the shifted plane partition

struct TauWords {
    std::vector<int> taut;   // m paired starts
    std::vector<Word> words;  // 2m paths of n steps each
};

inline TauWords espp_level_paths(const EsppParams& P, const PP& p) {
    PPBIJ_REQUIRE(validate({PPClass::eSPP, P.n, P.m}, p),
                  "espp_level_paths: input not in eSPP(n,m)");
    TauWords out;
    std::vector<int> tau;
    for (int i = 1; i <= 2 * P.m; ++i) {
        int theta = P.level_of_slot(i);
        std::vector<int> len;  // strictly decreasing row lengths of the region
        for (int r = 1; r <= P.n; ++r) {
            int l = 0;
            for (int c = r; c <= P.n; ++c)
                if (p.at(r, c) >= theta) ++l;
            if (l == 0) break;
            len.push_back(l);
        }
        int rho = int(len.size());
        Word w;
        if (rho == 0) {
            w.assign(size_t(P.n), 'E');
        } else {
            w.append(size_t(len[rho - 1] - 1), 'E');
            for (int r = rho; r >= 2; --r) {
                w.push_back('N');
                w.append(size_t(len[r - 2] - len[r - 1] - 1), 'E');
            }
            w.push_back('N');
            w.append(size_t(P.n - len[0]), 'E');
        }
        tau.push_back(i + rho);
        out.words.push_back(std::move(w));
    }
    for (int i = 1; i <= P.m; ++i) {
        PPBIJ_CHECK(tau[2 * i - 1] == tau[2 * i - 2] + 1,
                    "even diagonal entries must pair the starts");
        out.taut.push_back(tau[2 * i - 2]);
    }
    return out;
}

inline PP espp_from_level_paths(const EsppParams& P, const TauWords& tw) {
    PPBIJ_REQUIRE(int(tw.taut.size()) == P.m && int(tw.words.size()) == 2 * P.m,
                  "espp_from_level_paths: arity mismatch");
    PP p = zero_staircase(P.n, true);
    for (int i = 1; i <= 2 * P.m; ++i) {
        const Word& w = tw.words[i - 1];
        PPBIJ_REQUIRE(int(w.size()) == P.n, "level path must have n steps");
        int rho = letter_count(w, 'N');
        PPBIJ_REQUIRE(P.tau_of(tw.taut, i) == i + rho,
                      "start anchor disagrees with the path's north count");
        if (rho == 0) continue;
        // e_0 N e_1 N ... N e_rho with lengths len[rho] = e_0+1,
        // len[r-1] = len[r] + e_{rho-r+1} + 1
        std::vector<int> runs;
        int cur = 0;
        for (char c : w) {
            if (c == 'E') ++cur;
            else {
                runs.push_back(cur);
                cur = 0;
            }
        }
        runs.push_back(cur);
        std::vector<int> len(rho);
        len[rho - 1] = runs[0] + 1;
        for (int r = rho - 1; r >= 1; --r) len[r - 1] = len[r] + runs[rho - r] + 1;
        PPBIJ_REQUIRE(runs[rho] == P.n - len[0], "level path has a malformed tail");
        int theta = P.level_of_slot(i);
        for (int r = 1; r <= rho; ++r)
            for (int c = r; c <= r + len[r - 1] - 1; ++c) {
                PPBIJ_REQUIRE(c <= P.n, "level region exceeds the shifted staircase");
                if (p.at(r, c) < theta) p.at(r, c) = theta;
            }
    }
    PPBIJ_REQUIRE(validate({PPClass::eSPP, P.n, P.m}, p),
                  "paths do not encode an even symmetric plane partition");
    TauWords back = espp_level_paths(P, p);
    PPBIJ_REQUIRE(back.taut == tw.taut && back.words == tw.words,
                  "path tuple is not a level encoding");
    return p;
}

// ------------------------------------------------------------------------
// element builders

inline Element espp_pp_elt(const EsppParams& P, const PP& p) {
    return {P.pp_tag(), +1, pp_payload(p)};
}

inline Element espp_ni_elt(const EsppParams& P, const TauWords& tw) {
    return {P.ni_tag(), +1,
            Payload(PayloadVec{Payload(tw.taut), words_payload(tw.words)})};
}

inline Element espp_cfg_elt([[maybe_unused]] const EsppParams& P, const StageId& tag,
                            const std::vector<int>& taut, const Perm& sigma,
                            const std::vector<Word>& ws) {
    return {tag, perm_sign(sigma),
            Payload(PayloadVec{Payload(taut), Payload(sigma), words_payload(ws)})};
}

inline Element espp_fac_elt(const EsppParams& P, bool absform, const Perm& sigma,
                            const std::vector<Word>& ws) {
    return {absform ? P.facabs_tag() : P.fac_tag(), perm_sign(sigma),
            Payload(PayloadVec{Payload(sigma), words_payload(ws)})};
}

// ------------------------------------------------------------------------
// block reordering (Construction "both sides are in bijection to ...")

struct TauSigmaWords {
    std::vector<int> taut;
    Perm sigma;
    std::vector<Word> words;  // may be empty when only the index pair matters
};

inline TauSigmaWords reorder_blocks(const std::vector<int>& order, TauSigmaWords v) {
    TauSigmaWords out;
    for (int l : order) {
        out.taut.push_back(v.taut[l - 1]);
        out.sigma.push_back(v.sigma[2 * l - 2]);
        out.sigma.push_back(v.sigma[2 * l - 1]);
        if (!v.words.empty()) {
            out.words.push_back(v.words[2 * l - 2]);
            out.words.push_back(v.words[2 * l - 1]);
        }
    }
    return out;
}

// representative with min(sigma_{2i-1}, sigma_{2i}) increasing
inline TauSigmaWords tau_sigma_reindex_canonical(TauSigmaWords v) {
    int m = int(v.taut.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int l, int r) {
        return std::min(v.sigma[2 * l - 2], v.sigma[2 * l - 1]) <
               std::min(v.sigma[2 * r - 2], v.sigma[2 * r - 1]);
    });
    return reorder_blocks(order, std::move(v));
}

// representative with tau~ increasing
inline TauSigmaWords tau_sigma_reindex_binom(TauSigmaWords v) {
    int m = int(v.taut.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return v.taut[l - 1] < v.taut[r - 1]; });
    return reorder_blocks(order, std::move(v));
}

// The duplicate-tau~ involution: swap sigma_{2j} and the second path of pair
// j with their pair-k counterparts, where (j,k) minimizes
// (tau~_j, sigma_{2j-1}, sigma_{2k-1}) lexicographically among equal pairs,
// then return to the block-min representative.
inline TauSigmaWords duplicate_tau_cancel(TauSigmaWords v) {
    int m = int(v.taut.size());
    int bj = 0, bk = 0;
    std::tuple<int, int, int> best{0, 0, 0};
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            if (j == k || v.taut[j - 1] != v.taut[k - 1]) continue;
            std::tuple<int, int, int> key{v.taut[j - 1], v.sigma[2 * j - 2],
                                          v.sigma[2 * k - 2]};
            if (!bj || key < best) {
                best = key;
                bj = j;
                bk = k;
            }
        }
    PPBIJ_REQUIRE(bj, "duplicate_tau_cancel: tau~ has no repeated value");
    std::swap(v.sigma[2 * bj - 1], v.sigma[2 * bk - 1]);
    if (!v.words.empty()) std::swap(v.words[2 * bj - 1], v.words[2 * bk - 1]);
    return tau_sigma_reindex_canonical(std::move(v));
}

// ------------------------------------------------------------------------
// chain hops

class EsppToPaths final : public Sijection {
  public:
    explicit EsppToPaths(EsppParams P) : P_(P), src_(P.pp_tag()), dst_(P.ni_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (at_src)
            return {espp_ni_elt(P_, espp_level_paths(P_, payload_pp(e.val, true))),
                    true,
                    {}};
        TauWords tw{e.val.items()[0].as_ints(), payload_words(e.val.items()[1])};
        return {espp_pp_elt(P_, espp_from_level_paths(P_, tw)), true, {}};
    }

  private:
    EsppParams P_;
    StageId src_, dst_;
};

class EsppLgvHop final : public LgvHop {
  public:
    explicit EsppLgvHop(EsppParams P) : LgvHop(P.ni_tag(), P.lgv_tag()), P_(P) {}

  protected:
    LgvConfig decode(const Element& e) const override {
        const auto& parts = e.val.items();
        auto taut = parts[0].as_ints();
        LgvConfig c;
        c.geom = kUpRight;
        c.sigma = parts[1].as_ints();
        c.words = payload_words(parts[2]);
        for (int k = 1; k <= 2 * P_.m; ++k) c.starts.push_back(P_.a(P_.tau_of(taut, k)));
        return c;
    }
    Element encode_lgv(const LgvConfig& c, const Element& proto) const override {
        return espp_cfg_elt(P_, P_.lgv_tag(), proto.val.items()[0].as_ints(), c.sigma,
                            c.words);
    }
    Element to_ni(const Element& e) const override {
        return {src(), +1,
                Payload(PayloadVec{e.val.items()[0], e.val.items()[2]})};
    }
    Element to_lgv(const Element& e) const override {
        return espp_cfg_elt(P_, P_.lgv_tag(), e.val.items()[0].as_ints(),
                            perm_identity(2 * P_.m), payload_words(e.val.items()[1]));
    }

  private:
    EsppParams P_;
};

class EsppReindexHop final : public Sijection {
  public:
    explicit EsppReindexHop(EsppParams P)
        : P_(P), src_(P.lgv_tag()), dst_(P.canon_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        TauSigmaWords v{parts[0].as_ints(), parts[1].as_ints(), payload_words(parts[2])};
        TauSigmaWords w = at_src ? tau_sigma_reindex_canonical(std::move(v))
                                 : tau_sigma_reindex_binom(std::move(v));
        return {espp_cfg_elt(P_, at_src ? dst_ : src_, w.taut, w.sigma, w.words),
                true,
                {}};
    }

  private:
    EsppParams P_;
    StageId src_, dst_;
};

class EsppExtendHop final : public Sijection {
  public:
    explicit EsppExtendHop(EsppParams P)
        : P_(P), src_(P.canon_tag()), dst_(P.full_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        TauSigmaWords v{parts[0].as_ints(), parts[1].as_ints(), payload_words(parts[2])};
        if (at_src)
            return {espp_cfg_elt(P_, dst_, v.taut, v.sigma, v.words), true, {}};
        std::set<int> distinct(v.taut.begin(), v.taut.end());
        if (distinct.size() == v.taut.size())
            return {espp_cfg_elt(P_, src_, v.taut, v.sigma, v.words), true, {}};
        TauSigmaWords w = duplicate_tau_cancel(std::move(v));
        return {espp_cfg_elt(P_, dst_, w.taut, w.sigma, w.words), false, {}};
    }

  private:
    EsppParams P_;
    StageId src_, dst_;
};

class EsppGlueHop final : public Sijection {
  public:
    explicit EsppGlueHop(EsppParams P)
        : P_(P), src_(P.full_tag()), dst_(P.fac_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        if (at_src) {
            auto taut = parts[0].as_ints();
            Perm sigma = parts[1].as_ints();
            auto words = payload_words(parts[2]);
            std::vector<Word> glued;
            for (int i = 1; i <= P_.m; ++i) {
                // reflect the even path across x+y = n, translate by (-1,1),
                // and concatenate through the shared start a_{tau~_i}
                Word w = reversed_complement(words[2 * i - 1]) + words[2 * i - 2];
                PPBIJ_CHECK(int(w.size()) == 2 * P_.n, "glued factor has wrong length");
                glued.push_back(std::move(w));
            }
            return {espp_fac_elt(P_, false, sigma, glued), true, {}};
        }
        Perm sigma = parts[0].as_ints();
        auto glued = payload_words(parts[1]);
        std::vector<int> taut;
        std::vector<Word> words;
        for (int i = 1; i <= P_.m; ++i) {
            const Word& w = glued[i - 1];
            Word first = w.substr(0, size_t(P_.n)), second = w.substr(size_t(P_.n));
            // the crossing of x+y = n happens after exactly n steps
            int tau = P_.bp(sigma[2 * i - 1] - 1).x + letter_count(first, 'E');
            PPBIJ_REQUIRE(tau >= 1 && tau <= P_.n + 2 * P_.m,
                          "glued factor crosses x+y=n outside the anchor range");
            taut.push_back(tau);
            words.push_back(second);
            words.push_back(reversed_complement(first));
        }
        return {espp_cfg_elt(P_, src_, taut, sigma, words), true, {}};
    }

  private:
    EsppParams P_;
    StageId src_, dst_;
};

class EsppAbsNorm final : public Sijection {
  public:
    explicit EsppAbsNorm(EsppParams P)
        : P_(P), src_(P.fac_tag()), dst_(P.facabs_tag()) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        Perm sigma = e.val.items()[0].as_ints();
        auto words = payload_words(e.val.items()[1]);
        auto x = iota_params(2 * P_.m);
        for (int i = 1; i <= P_.m; ++i)
            if (eta_J(x, sigma, i) < 0) words[i - 1] = reversed_complement(words[i - 1]);
        return {espp_fac_elt(P_, at_src, sigma, words), true, {}};
    }

  private:
    EsppParams P_;
    StageId src_, dst_;
};

inline SijPtr espp_chain_forward(const EsppParams& P) {
    return compose({std::make_shared<EsppToPaths>(P), std::make_shared<EsppLgvHop>(P),
                    std::make_shared<EsppReindexHop>(P),
                    std::make_shared<EsppExtendHop>(P), std::make_shared<EsppGlueHop>(P),
                    std::make_shared<EsppAbsNorm>(P)});
}

// ------------------------------------------------------------------------
// statistics

// S on the normalized factored stage: trailing east steps of factor 1.
inline std::set<int> stat_S_factored(const Element& e) {
    const Word w = e.val.items()[1].items()[0].as_str();
    int run = trailing_run(w, 'E');
    std::set<int> out;
    for (int i = int(w.size()) - run + 1; i <= int(w.size()); ++i) out.insert(i);
    return out;
}

// #S at every stage of the chain
inline int64_t espp_stat_card(const EsppParams& P, const Element& e) {
    if (e.stage == P.pp_tag())
        return int64_t(stat_S({PPClass::eSPP, P.n, P.m}, payload_pp(e.val, true)).size());
    auto high_edges = [&](Pt start, const Word& w) {
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
        auto taut = e.val.items()[0].as_ints();
        auto ws = payload_words(e.val.items()[1]);
        int c = 0;
        for (int k = 1; k <= 2 * P.m; ++k)
            c += high_edges(P.a(P.tau_of(taut, k)), ws[k - 1]);
        return c;
    }
    if (e.stage == P.lgv_tag() || e.stage == P.canon_tag() || e.stage == P.full_tag()) {
        auto taut = e.val.items()[0].as_ints();
        auto ws = payload_words(e.val.items()[2]);
        int c = 0;
        for (int k = 1; k <= 2 * P.m; ++k)
            c += high_edges(P.a(P.tau_of(taut, k)), ws[k - 1]);
        return c;
    }
    if (e.stage == P.fac_tag()) {
        Perm sigma = e.val.items()[0].as_ints();
        const Word w = e.val.items()[1].items()[0].as_str();
        if (sigma[0] == 1) return trailing_run(w, 'E');
        PPBIJ_CHECK(sigma[1] == 1, "the first block must contain the value 1");
        return leading_run(w, 'N');
    }
    if (e.stage == P.facabs_tag())
        return trailing_run(e.val.items()[1].items()[0].as_str(), 'E');
    throw structural_error("espp_stat_card: unknown stage " + e.stage);
}

// ------------------------------------------------------------------------
// stage supports

inline void espp_for_paired_taut(const EsppParams& P, bool strictly_separated,
                                 const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> taut;
    std::function<void(int)> rec = [&](int lo) {
        if (int(taut.size()) == P.m) {
            f(taut);
            return;
        }
        for (int t = lo; t + 1 <= P.n + 2 * P.m; ++t) {
            taut.push_back(t);
            rec(t + (strictly_separated ? 2 : 1));
            taut.pop_back();
        }
    };
    rec(1);
}

inline std::vector<Element> espp_supp_lgv(const EsppParams& P) {
    std::vector<Element> out;
    auto all = all_perms(2 * P.m);
    auto no_region = [](const Pt&, const Pt&) { return true; };
    espp_for_paired_taut(P, false, [&](const std::vector<int>& taut) {
        for (const Perm& sigma : all) {
            std::vector<std::vector<Word>> per(2 * P.m);
            bool empty = false;
            for (int k = 1; k <= 2 * P.m; ++k) {
                enumerate_paths(P.a(P.tau_of(taut, k)), P.b(sigma[k - 1]), kUpRight,
                                no_region,
                                [&](const Word& w) { per[k - 1].push_back(w); });
                empty = empty || per[k - 1].empty();
            }
            if (empty) continue;
            std::vector<size_t> idx(2 * P.m, 0);
            while (true) {
                std::vector<Word> ws;
                for (int k = 0; k < 2 * P.m; ++k) ws.push_back(per[k][idx[k]]);
                out.push_back(espp_cfg_elt(P, P.lgv_tag(), taut, sigma, ws));
                size_t k = 0;
                while (k < size_t(2 * P.m) && ++idx[k] == per[k].size()) idx[k++] = 0;
                if (k == size_t(2 * P.m)) break;
            }
        }
    });
    return out;
}

inline std::vector<Element> espp_supp_ni(const EsppParams& P) {
    std::vector<Element> out;
    for (const Element& e : espp_supp_lgv(P)) {
        if (e.sign < 0) continue;
        const auto& parts = e.val.items();
        if (parts[1].as_ints() != perm_identity(2 * P.m)) continue;
        auto taut = parts[0].as_ints();
        LgvConfig c{kUpRight, {}, payload_words(parts[2]), parts[1].as_ints()};
        for (int k = 1; k <= 2 * P.m; ++k) c.starts.push_back(P.a(P.tau_of(taut, k)));
        if (non_intersecting(c))
            out.push_back(espp_ni_elt(P, TauWords{taut, c.words}));
    }
    return out;
}

inline std::vector<Element> espp_supp_tausigma(const EsppParams& P, bool full) {
    std::vector<Element> out;
    auto sprime = enum_Sprime(2 * P.m);
    auto no_region = [](const Pt&, const Pt&) { return true; };
    std::vector<std::vector<int>> tauts;
    if (full) {
        std::vector<int> taut(P.m, 1);
        while (true) {
            tauts.push_back(taut);
            int j = 0;
            while (j < P.m && ++taut[j] > P.n + 2 * P.m) taut[j++] = 1;
            if (j == P.m) break;
        }
    } else {
        std::function<void(std::vector<int>&)> noop;
        // distinct tau~ in any order
        std::vector<int> taut;
        std::function<void()> rec = [&]() {
            if (int(taut.size()) == P.m) {
                tauts.push_back(taut);
                return;
            }
            for (int t = 1; t + 1 <= P.n + 2 * P.m; ++t) {
                if (std::find(taut.begin(), taut.end(), t) != taut.end()) continue;
                taut.push_back(t);
                rec();
                taut.pop_back();
            }
        };
        rec();
    }
    for (const auto& taut : tauts) {
        bool in_range = true;
        for (int t : taut) in_range = in_range && t + 1 <= P.n + 2 * P.m;
        if (!in_range) continue;
        for (const Perm& sigma : sprime) {
            std::vector<std::vector<Word>> per(2 * P.m);
            bool empty = false;
            for (int k = 1; k <= 2 * P.m; ++k) {
                enumerate_paths(P.a(P.tau_of(taut, k)), P.b(sigma[k - 1]), kUpRight,
                                no_region,
                                [&](const Word& w) { per[k - 1].push_back(w); });
                empty = empty || per[k - 1].empty();
            }
            if (empty) continue;
            std::vector<size_t> idx(2 * P.m, 0);
            while (true) {
                std::vector<Word> ws;
                for (int k = 0; k < 2 * P.m; ++k) ws.push_back(per[k][idx[k]]);
                out.push_back(espp_cfg_elt(P, full ? P.full_tag() : P.canon_tag(), taut,
                                           sigma, ws));
                size_t k = 0;
                while (k < size_t(2 * P.m) && ++idx[k] == per[k].size()) idx[k++] = 0;
                if (k == size_t(2 * P.m)) break;
            }
        }
    }
    return out;
}

inline std::vector<Element> espp_supp_fac(const EsppParams& P, bool absform) {
    std::vector<Element> out;
    auto x = iota_params(2 * P.m);
    for (const Perm& sigma : enum_Sprime(2 * P.m)) {
        std::vector<std::vector<Word>> per(P.m);
        bool empty = false;
        for (int i = 1; i <= P.m; ++i) {
            int eta = eta_J(x, sigma, i);
            per[i - 1] = enumerate_C(2 * P.n, P.n + (absform ? std::abs(eta) : eta));
            empty = empty || per[i - 1].empty();
        }
        if (empty) continue;
        std::vector<size_t> ix(P.m, 0);
        while (true) {
            std::vector<Word> ws;
            for (int i = 0; i < P.m; ++i) ws.push_back(per[i][ix[i]]);
            out.push_back(espp_fac_elt(P, absform, sigma, ws));
            size_t i = 0;
            while (i < size_t(P.m) && ++ix[i] == per[i].size()) ix[i++] = 0;
            if (i == size_t(P.m)) break;
        }
    }
    return out;
}

}  // namespace ppbij
