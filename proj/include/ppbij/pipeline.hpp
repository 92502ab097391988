#pragma once

// End-to-end assembly:
//
//   f : eSPP(n,m) -> stairPP(n,m), #S-compatible, realized as the zig-zag
//       through the espp chain, the I/J index transfer with slot-permuted
//       factors, the reversed stair chain, and the rotation that converts
//       S~ back to S;
//   g : the order-preserving refinement S(pi) -> S(f(pi));
//   spp_qtcpp : SPP(n,M) <-> QTCPP(n,M) for both parities of M.

#include "ppbij/corr.hpp"
#include "ppbij/espp.hpp"
#include "ppbij/stair.hpp"
#include "ppbij/tableau.hpp"

namespace ppbij {

// Moves the m path factors across the I_m/J_m sijection, permuting them by
// the slot family sigma_s reported by the assembly's steps.
class TransferHop final : public Sijection {
  public:
    TransferHop(EsppParams pe, StairParams ps)
        : pe_(pe), ps_(ps), psi_(c7_8_assemble(pe.m)), x_(iota_params(2 * pe.m)),
          sp_(stair_params(pe.m)), src_(pe.facabs_tag()), dst_(ps.facabs_tag()) {
        PPBIJ_REQUIRE(pe.n == ps.n && pe.m == ps.m, "transfer: parameter mismatch");
    }
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        Element idx = at_src ? make_J(x_, parts[0].as_ints())
                             : make_I(sp_, sp_, parts[0].as_ints(), parts[1].as_ints());
        auto words = payload_words(at_src ? parts[1] : parts[2]);
        Step st = psi_->step(idx, !at_src, trace);  // J is the assembly's dst
        std::vector<Word> moved(words.size());
        for (int i = 1; i <= pe_.m; ++i) {
            int slot = st.slots.empty() ? i : st.slots[i - 1];
            moved[slot - 1] = words[i - 1];
        }
        Element out = build(st.to, moved);
        // factor heights must match the |eta| values slot for slot
        for (int i = 1; i <= pe_.m; ++i)
            PPBIJ_CHECK(int(moved[i - 1].size()) == 2 * pe_.n &&
                            letter_count(moved[i - 1], 'N') == pe_.n + abs_eta(st.to, i),
                        "transferred factor disagrees with its |eta| slot");
        bool out_at_src = out.stage == src_;
        return {out, out_at_src != at_src, st.slots};
    }

  private:
    int abs_eta(const Element& idx, int i) const {
        if (idx.stage == psi_->dst()) return std::abs(eta_J(x_, idx.val.as_ints(), i));
        return std::abs(eta_I(sp_, sp_, idx.val.items()[0].as_ints(),
                              idx.val.items()[1].as_ints(), i));
    }
    Element build(const Element& idx, const std::vector<Word>& ws) const {
        if (idx.stage == psi_->dst())  // J side: the espp-factored stage
            return espp_fac_elt(pe_, true, idx.val.as_ints(), ws);
        return stair_fac_elt(ps_, true, idx.val.items()[0].as_ints(),
                             idx.val.items()[1].as_ints(), ws);
    }

    EsppParams pe_;
    StairParams ps_;
    SijPtr psi_;
    std::vector<int> x_, sp_;
    StageId src_, dst_;
};

inline SijPtr f_espp_stair_sijection(int n, int m,
                                     LevelOrder order = LevelOrder::HighFirst) {
    EsppParams pe{n, m, order};
    StairParams ps{n, m, order};
    return compose({espp_chain_forward(pe), std::make_shared<TransferHop>(pe, ps),
                    reverse(stair_chain_forward(ps)), stair_rotation_sijection(ps)});
}

// ------------------------------------------------------------------------
// f with memoization

class Pipeline {
  public:
    Pipeline(int n, int m) : n_(n), m_(m) {
        if (m_ > 0) f_ = f_espp_stair_sijection(n_, m_);
    }

    int n() const { return n_; }
    int m() const { return m_; }

    PP apply_f(const PP& p, Trace* trace = nullptr) const {
        PPBIJ_REQUIRE(validate({PPClass::eSPP, n_, m_}, p), "f: input not in eSPP(n,m)");
        if (m_ == 0) return zero_staircase(n_, false);  // both sides are singletons
        EsppParams pe{n_, m_};
        Step s = f_->step(espp_pp_elt(pe, p), true, trace);
        PPBIJ_CHECK(s.crossed, "f left an element on the even-SPP side");
        return payload_pp(s.to.val, false);
    }

    PP apply_f_inverse(const PP& q, Trace* trace = nullptr) const {
        PPBIJ_REQUIRE(validate({PPClass::stairPP, n_, m_}, q),
                      "f^{-1}: input not in stairPP(n,m)");
        if (m_ == 0) return zero_staircase(n_, true);
        StairParams ps{n_, m_};
        Step s = f_->step(stair_pp_elt(ps, q), false, trace);
        PPBIJ_CHECK(s.crossed, "f^{-1} left an element on the staircase side");
        return payload_pp(s.to.val, true);
    }

    bool table_feasible() const { return n_ <= 6 && m_ <= 8; }

    // cached full table (forward direction); built on first use
    const std::map<PP, PP>& table() const {
        if (table_.empty() && table_feasible()) {
            for (const PP& p : enumerate_class({PPClass::eSPP, n_, m_}))
                table_[p] = apply_f(p);
        }
        return table_;
    }

    PP f(const PP& p) const {
        if (!table_feasible()) return apply_f(p);
        auto& t = table();
        auto it = t.find(p);
        return it != t.end() ? it->second : apply_f(p);
    }

    PP f_inverse(const PP& q) const {
        if (table_feasible())
            for (const auto& [a, b] : table())
                if (b == q) return a;
        return apply_f_inverse(q);
    }

  private:
    int n_, m_;
    SijPtr f_;
    mutable std::map<PP, PP> table_;
};

// ------------------------------------------------------------------------
// the order-preserving refinement g

inline std::map<int, int> order_preserving_bijection(const std::set<int>& from,
                                                     const std::set<int>& to) {
    PPBIJ_CHECK(from.size() == to.size(),
                "refinement needs equal statistic cardinalities");
    std::map<int, int> g;
    auto it = to.begin();
    for (int v : from) g[v] = *it++;
    return g;
}

inline std::map<int, int> g_refine(const Pipeline& pl, const PP& espp) {
    ClassTag te{PPClass::eSPP, pl.n(), pl.m()};
    ClassTag ts{PPClass::stairPP, pl.n(), pl.m()};
    return order_preserving_bijection(stat_S(te, espp), stat_S(ts, pl.f(espp)));
}

// ------------------------------------------------------------------------
// SPP(n,M) <-> QTCPP(n,M)

inline PP spp_to_qtcpp(const Pipeline& pl, const PP& p, int M) {
    int n = pl.n();
    PPBIJ_REQUIRE(M / 2 == pl.m(), "pipeline parameters do not match M");
    PPBIJ_REQUIRE(validate({PPClass::SPP, n, M}, p), "input not in SPP(n,M)");
    auto sp = spp_split(p, M);
    PP image = pl.f(sp.espp);
    if (M % 2 == 1) return stair_to_qtcpp_odd(image, sp.tmap, M);
    auto g = g_refine(pl, sp.espp);
    MarkedStair ms;
    ms.base = image;
    for (const auto& [i, gi] : g) ms.marks[gi] = sp.tmap[i - 1];
    return stair_to_qtcpp_even(ms, M);
}

inline PP qtcpp_to_spp(const Pipeline& pl, const PP& q, int M) {
    int n = pl.n();
    PPBIJ_REQUIRE(M / 2 == pl.m(), "pipeline parameters do not match M");
    PPBIJ_REQUIRE(validate({PPClass::QTCPP, n, M}, q), "input not in QTCPP(n,M)");
    if (M % 2 == 1) {
        auto r = qtcpp_to_stair_odd(q, M);
        PP espp = pl.f_inverse(r.stair);
        return spp_unsplit(espp, r.t, M);
    }
    auto ms = qtcpp_to_stair_even(q, M);
    PP espp = pl.f_inverse(ms.base);
    auto g = g_refine(pl, espp);  // S(espp) -> S(ms.base)
    std::vector<int> tmap(n, 0);
    for (const auto& [i, gi] : g) tmap[i - 1] = ms.marks.at(gi);
    return spp_unsplit(espp, tmap, M);
}

// ------------------------------------------------------------------------
// verification report

struct BijectionReport {
    int n = 0, M = 0;
    size_t domain_size = 0, codomain_size = 0;
    std::vector<PP> roundtrip_failures;
    std::vector<PP> ledger_failures;  // #S mismatches of f
    size_t max_chain_hops = 0;

    bool ok() const {
        return domain_size == codomain_size && roundtrip_failures.empty() &&
               ledger_failures.empty();
    }
};

inline BijectionReport verify_spp_qtcpp(int n, int M) {
    BijectionReport rep;
    rep.n = n;
    rep.M = M;
    Pipeline pl(n, M / 2);
    auto dom = enumerate_class({PPClass::SPP, n, M});
    auto cod = enumerate_class({PPClass::QTCPP, n, M});
    rep.domain_size = dom.size();
    rep.codomain_size = cod.size();
    std::set<PP> image;
    for (const PP& p : dom) {
        PP q = spp_to_qtcpp(pl, p, M);
        image.insert(q);
        if (!(qtcpp_to_spp(pl, q, M) == p)) rep.roundtrip_failures.push_back(p);
    }
    if (image.size() != dom.size() ||
        image != std::set<PP>(cod.begin(), cod.end()))
        rep.roundtrip_failures.push_back(zero_staircase(n, true));
    for (const PP& e : enumerate_class({PPClass::eSPP, n, M / 2})) {
        Trace trace;
        PP q = pl.apply_f(e, &trace);
        rep.max_chain_hops = std::max(rep.max_chain_hops, trace.size());
        if (stat_S({PPClass::eSPP, n, M / 2}, e).size() !=
            stat_S({PPClass::stairPP, n, M / 2}, q).size())
            rep.ledger_failures.push_back(e);
    }
    return rep;
}

}  // namespace ppbij
