#pragma once

// The signed index sets I_m and J_m, their eta statistics, and the chain of
// constructions assembling the compatible sijection
//     I_m[m..1; m..1]  =>  J_m<1..2m>
// with slot-permutation tracking.
//
// Payload layouts (all 1-based permutation values):
//   I[a;b]      [sigma(m), t(m)]          sign sgn(sigma) * prod (-1)^t
//   J<x>        sigma(2q) in S'_{2q}      sign sgn(sigma)
//   M76[a;b]    [u(m), sigma(2m)]         sign sgn(sigma) * prod iv(u_j)
//   T3[x|b]     [u, rho(2)]               sign iv(u) * sgn(rho)
//   SP[p|q]     side (0 pos / 1 neg)      sign by side
//   T4[b1,b2|y] [u1, u2, rho(2)]          sign iv(u1) iv(u2) sgn(rho)
//   T5[..]      [u(mm), sigma(mm+kk)]     sign prod iv * sgn(sigma)
//   D72<x>      [i, rho(2), sigma'(2q-2)] sign (-1)^i sgn(rho) sgn(sigma')
// where iv(u) is the sign of u inside its signed interval ⟦1, b+1⟧.

#include "ppbij/sij.hpp"

namespace ppbij {

// ------------------------------------------------------------------------
// S'_{2q}: block-min-increasing representatives

inline bool is_block_min_sorted(const Perm& s) {
    if (s.size() % 2) return false;
    int prev = 0;
    for (size_t l = 0; l + 1 < s.size(); l += 2) {
        int mn = std::min(s[l], s[l + 1]);
        if (mn <= prev) return false;
        prev = mn;
    }
    return true;
}

inline std::vector<Perm> enum_Sprime(int two_q) {
    std::vector<Perm> out;
    for (const Perm& p : all_perms(two_q))
        if (is_block_min_sorted(p)) out.push_back(p);
    return out;
}

// Sort the blocks of sigma by their min value. Returns the representative
// and the slot permutation: old block l lands at slot perm[l-1].
inline std::pair<Perm, SlotPerm> canonical_blocks(const Perm& s) {
    int q = int(s.size()) / 2;
    std::vector<int> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int l, int r) {
        return std::min(s[2 * l], s[2 * l + 1]) < std::min(s[2 * r], s[2 * r + 1]);
    });
    Perm out;
    SlotPerm slots(q);
    for (int pos = 0; pos < q; ++pos) {
        int l = order[pos];
        out.push_back(s[2 * l]);
        out.push_back(s[2 * l + 1]);
        slots[l] = pos + 1;
    }
    return {out, slots};
}

// ------------------------------------------------------------------------
// eta statistics

inline int eta_J(const std::vector<int>& x, const Perm& sigma, int i) {
    return x[sigma[2 * i - 1] - 1] - x[sigma[2 * i - 2] - 1] - 1;
}

inline int eta_I(const std::vector<int>& a, const std::vector<int>& b, const Perm& sigma,
                 const std::vector<int>& t, int i) {
    int bv = b[sigma[i - 1] - 1];
    return a[i - 1] - (t[i - 1] ? -bv : bv);
}

// ------------------------------------------------------------------------
// stage tags, element builders, signs, supports

inline StageId stage_I(const std::vector<int>& a, const std::vector<int>& b) {
    return "I[" + join_ints(a) + ";" + join_ints(b) + "]";
}
inline StageId stage_J(const std::vector<int>& x) { return "J<" + join_ints(x) + ">"; }
inline StageId stage_M76(const std::vector<int>& a, const std::vector<int>& b) {
    return "M76[" + join_ints(a) + ";" + join_ints(b) + "]";
}
inline StageId stage_T3(int x, int b) {
    return "T3[" + std::to_string(x) + "|" + std::to_string(b) + "]";
}
inline StageId stage_SP(int vpos, int vneg) {
    return "SP[" + std::to_string(vpos) + "|" + std::to_string(vneg) + "]";
}
inline StageId stage_T4(int b1, int b2, int y) {
    return "T4[" + std::to_string(b1) + "," + std::to_string(b2) + "|" +
           std::to_string(y) + "]";
}
inline StageId stage_T5(int mm, int kk, const std::vector<int>& b,
                        const std::vector<int>& x, int y) {
    return "T5[" + std::to_string(mm) + "," + std::to_string(kk) + ";" + join_ints(x) +
           ";" + join_ints(b) + "|" + std::to_string(y) + "]";
}
inline StageId stage_D72(const std::vector<int>& x) { return "D72<" + join_ints(x) + ">"; }
inline const StageId kEmptyStage = "0";

inline int interval_sign_product(const std::vector<int>& b, const std::vector<int>& u) {
    int s = 1;
    for (size_t j = 0; j < u.size(); ++j) s *= union_range(b[j]).sign_of(u[j]);
    return s;
}

inline Element make_I(const std::vector<int>& a, const std::vector<int>& b,
                      const Perm& sigma, const std::vector<int>& t) {
    int s = perm_sign(sigma);
    for (int ti : t)
        if (ti) s = -s;
    return {stage_I(a, b), s, Payload(PayloadVec{Payload(sigma), Payload(t)})};
}

inline Element make_J(const std::vector<int>& x, const Perm& sigma) {
    PPBIJ_CHECK(is_block_min_sorted(sigma), "J element must be block-min sorted");
    return {stage_J(x), perm_sign(sigma), Payload(sigma)};
}

inline Element make_M76(const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& u, const Perm& sigma) {
    PPBIJ_CHECK(is_block_min_sorted(sigma), "M76 element must be block-min sorted");
    int s = perm_sign(sigma) * interval_sign_product(b, u);
    return {stage_M76(a, b), s, Payload(PayloadVec{Payload(u), Payload(sigma)})};
}

inline Element make_T3(int x, int b, int u, const Perm& rho) {
    int s = union_range(b).sign_of(u) * perm_sign(rho);
    return {stage_T3(x, b), s, Payload(PayloadVec{Payload(u), Payload(rho)})};
}

inline Element make_SP(int vpos, int vneg, int side) {
    return {stage_SP(vpos, vneg), side == 0 ? +1 : -1, Payload(side)};
}

inline Element make_T4(int b1, int b2, int y, int u1, int u2, const Perm& rho) {
    int s = union_range(b1).sign_of(u1) * union_range(b2).sign_of(u2) * perm_sign(rho);
    return {stage_T4(b1, b2, y), s, Payload(PayloadVec{Payload(u1), Payload(u2), Payload(rho)})};
}

inline Element make_T5(int mm, int kk, const std::vector<int>& b, const std::vector<int>& x,
                       int y, const std::vector<int>& u, const Perm& sigma) {
    PPBIJ_CHECK(is_block_min_sorted(sigma), "T5 element must be block-min sorted");
    int s = perm_sign(sigma) * interval_sign_product(b, u);
    return {stage_T5(mm, kk, b, x, y), s, Payload(PayloadVec{Payload(u), Payload(sigma)})};
}

// parameter vector of the J_m under the 7.6 union:
// (1, 1+a_1-a_2, ..., 1+a_1-a_m, a_1-b_m+2u_m, ..., a_1-b_1+2u_1)
inline std::vector<int> m76_params(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& u) {
    int m = int(a.size());
    std::vector<int> p;
    p.push_back(1);
    for (int l = 2; l <= m; ++l) p.push_back(1 + a[0] - a[l - 1]);
    for (int j = m; j >= 1; --j) p.push_back(a[0] - b[j - 1] + 2 * u[j - 1]);
    return p;
}

inline std::vector<Element> supp_I(const std::vector<int>& a, const std::vector<int>& b) {
    int m = int(a.size());
    std::vector<Element> out;
    for (const Perm& s : all_perms(m))
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> t(m);
            for (int i = 0; i < m; ++i) t[i] = (mask >> i) & 1;
            out.push_back(make_I(a, b, s, t));
        }
    return out;
}

inline std::vector<Element> supp_J(const std::vector<int>& x) {
    std::vector<Element> out;
    for (const Perm& s : enum_Sprime(int(x.size()))) out.push_back(make_J(x, s));
    return out;
}

inline void for_each_interval_tuple(const std::vector<int>& b,
                                    const std::function<void(const std::vector<int>&)>& f) {
    std::vector<std::vector<int>> choices;
    for (int bj : b) {
        choices.push_back(union_range(bj).elements());
        if (choices.back().empty()) return;
    }
    std::vector<size_t> idx(b.size(), 0);
    while (true) {
        std::vector<int> u;
        for (size_t j = 0; j < b.size(); ++j) u.push_back(choices[j][idx[j]]);
        f(u);
        size_t j = 0;
        while (j < b.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == b.size()) break;
    }
}

inline std::vector<Element> supp_M76(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<Element> out;
    auto sprime = enum_Sprime(2 * int(a.size()));
    for_each_interval_tuple(b, [&](const std::vector<int>& u) {
        for (const Perm& s : sprime) out.push_back(make_M76(a, b, u, s));
    });
    return out;
}

// ------------------------------------------------------------------------
// Construction 7.2: split off the block containing the value 1

struct Decomp72 {
    int i;        // partner of 1 in the first block
    Perm rho;     // (1,2) if sigma_1 = 1, else (2,1)
    Perm rest;    // remaining blocks, values renumbered to 1..2q-2
};

inline Decomp72 decompose72(const Perm& sigma) {
    PPBIJ_CHECK(std::min(sigma[0], sigma[1]) == 1,
                "block-min sorting puts the value 1 in the first block");
    Decomp72 d;
    d.i = std::max(sigma[0], sigma[1]);
    d.rho = sigma[0] == 1 ? Perm{1, 2} : Perm{2, 1};
    for (size_t k = 2; k < sigma.size(); ++k) {
        int v = sigma[k];
        d.rest.push_back(v < d.i ? v - 1 : v - 2);
    }
    return d;
}

inline Perm compose72(int i, const Perm& rho, const Perm& rest) {
    Perm s = rho == Perm{1, 2} ? Perm{1, i} : Perm{i, 1};
    for (int v : rest) s.push_back(v + 1 < i ? v + 1 : v + 2);
    return s;
}

// ------------------------------------------------------------------------
// Construction 7.1: parameter translation

inline SijPtr c7_1_translate(const std::vector<int>& x, int d) {
    std::vector<int> xd = x;
    for (int& v : xd) v += d;
    StageId from = stage_J(x), to = stage_J(xd);
    return std::make_shared<RecodeSijection>(
        from, to, [to](const Element& e) { return Element{to, e.sign, e.val}; },
        [from](const Element& e) { return Element{from, e.sign, e.val}; });
}

// Construction 7.2 as a standalone recode J<x> = ⨆_i (-1)^i J_1<x_1,x_i> x J'<rest>

inline SijPtr c7_2_decompose(const std::vector<int>& x) {
    StageId from = stage_J(x), to = stage_D72(x);
    auto fwd = [to](const Element& e) {
        Decomp72 d = decompose72(e.val.as_ints());
        return Element{to, e.sign,
                       Payload(PayloadVec{Payload(d.i), Payload(d.rho), Payload(d.rest)})};
    };
    auto bwd = [from](const Element& e) {
        const auto& parts = e.val.items();
        Perm s = compose72(int(parts[0].as_int()), parts[1].as_ints(), parts[2].as_ints());
        return Element{from, e.sign, Payload(s)};
    };
    return std::make_shared<RecodeSijection>(from, to, fwd, bwd);
}

// ------------------------------------------------------------------------
// Construction 7.3: the telescoping sijection
//   ⨆_{u=1}^{b} J_1<1, x+2u>  =>  ({|x|}, {|x+2b|})
//
// Internally (u, swap) pairs with (u+1, id); the unmatched boundary elements
// land on the survivors.  Works for signed ranges too: for b < 0 the interval
// is negative and the survivor sides trade places.

class Telescope final : public Sijection {
  public:
    Telescope(int x, int b)
        : x_(x), b_(b), iv_(union_range(b)), src_(stage_T3(x, b)),
          dst_(stage_SP(std::abs(x), std::abs(x + 2 * b))) {}

    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

    int value_of(const Element& e) const {  // |eta_1|
        if (e.stage == dst_) return e.val.as_int() == 0 ? std::abs(x_) : std::abs(x_ + 2 * b_);
        int u = int(e.val.items()[0].as_int());
        bool id = e.val.items()[1].as_ints() == std::vector<int>{1, 2};
        return id ? std::abs(x_ + 2 * u - 2) : std::abs(x_ + 2 * u);
    }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (!at_src) {
            int side = int(e.val.as_int());
            if (iv_.empty())  // forced self-pairing of the survivor pair
                return {make_SP(std::abs(x_), std::abs(x_ + 2 * b_), 1 - side), false, {}};
            bool positive_range = iv_.positive();
            // side 0 pairs with the unmatched (min, id) on positive ranges and
            // with (max, swap) on negative ones; side 1 with the other.
            bool to_min_id = (side == 0) == positive_range;
            int u = to_min_id ? iv_.elements().front() : iv_.elements().back();
            Perm rho = to_min_id ? Perm{1, 2} : Perm{2, 1};
            return {make_T3(x_, b_, u, rho), true, {}};
        }
        int u = int(e.val.items()[0].as_int());
        bool id = e.val.items()[1].as_ints() == std::vector<int>{1, 2};
        if (id) {
            if (iv_.contains(u - 1)) return {make_T3(x_, b_, u - 1, Perm{2, 1}), false, {}};
            bool side0 = iv_.positive();
            return {make_SP(std::abs(x_), std::abs(x_ + 2 * b_), side0 ? 0 : 1), true, {}};
        }
        if (iv_.contains(u + 1)) return {make_T3(x_, b_, u + 1, Perm{1, 2}), false, {}};
        bool side1 = iv_.positive();
        return {make_SP(std::abs(x_), std::abs(x_ + 2 * b_), side1 ? 1 : 0), true, {}};
    }

  private:
    int x_, b_;
    SignedInterval iv_;
    StageId src_, dst_;
};

inline SijPtr c7_3_telescope(int x, int b) { return std::make_shared<Telescope>(x, b); }

// ------------------------------------------------------------------------
// Construction 7.4: the double union cancels
//   ⨆_{u1=1}^{b1} ⨆_{u2=1}^{b2} J_1<y-b1+2u1, y-b2+2u2>  =>  (∅,∅)

class Cancel74 final : public Sijection {
  public:
    Cancel74(int b1, int b2, int y)
        : b1_(b1), b2_(b2), y_(y), src_(stage_T4(b1, b2, y)) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return kEmptyStage; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        PPBIJ_CHECK(at_src, "the empty stage has no elements");
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        int u1 = int(parts[0].as_int()), u2 = int(parts[1].as_int());
        Perm rho = parts[2].as_ints();
        // translated inner telescope over u2: J_1<1, x_in + 2 u2>
        auto xin = [&](int v1) { return 1 + b1_ - 2 * v1 - b2_; };
        Telescope tel(xin(u1), b2_);
        Step s = tel.step(make_T3(xin(u1), b2_, u2, rho), true, trace);
        if (!s.crossed) {
            const auto& q = s.to.val.items();
            return {make_T4(b1_, b2_, y_, u1, int(q[0].as_int()), q[1].as_ints()), false, {}};
        }
        // survivor: flip the outer stratum and the survivor side, then pull
        // back through the flipped stratum's telescope
        int side = int(s.to.val.as_int());
        int u1f = b1_ + 1 - u1;
        Telescope telf(xin(u1f), b2_);
        Step back = telf.step(make_SP(std::abs(xin(u1f)), std::abs(xin(u1f) + 2 * b2_),
                                      1 - side),
                              false, trace);
        PPBIJ_CHECK(back.crossed, "paired survivor must re-enter a stratum");
        const auto& q = back.to.val.items();
        return {make_T4(b1_, b2_, y_, u1f, int(q[0].as_int()), q[1].as_ints()), false, {}};
    }

  private:
    int b1_, b2_, y_;
    StageId src_;
};

inline SijPtr c7_4_cancel(int b1, int b2, int y) {
    return std::make_shared<Cancel74>(b1, b2, y);
}

// ------------------------------------------------------------------------
// Construction 7.5: the general cancellation
//   ⨆_{u} J_{(mm+kk)/2}<x_1..x_kk, y-b_mm+2u_mm, ..., y-b_1+2u_1> => (∅,∅)

class Cancel75 final : public Sijection {
  public:
    Cancel75(int mm, int kk, std::vector<int> b, std::vector<int> x, int y)
        : mm_(mm), kk_(kk), b_(std::move(b)), x_(std::move(x)), y_(y),
          src_(stage_T5(mm_, kk_, b_, x_, y_)) {
        PPBIJ_REQUIRE(mm_ >= 2 && kk_ >= 0 && kk_ < mm_ && (mm_ - kk_) % 2 == 0,
                      "cancel75 needs mm >= 2, 0 <= kk < mm, kk = mm (mod 2)");
        PPBIJ_REQUIRE(int(b_.size()) == mm_ && int(x_.size()) == kk_,
                      "cancel75 parameter arity");
    }
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return kEmptyStage; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        PPBIJ_CHECK(at_src, "the empty stage has no elements");
        expect_stage(e, at_src);
        std::vector<int> u = e.val.items()[0].as_ints();
        Perm sigma = e.val.items()[1].as_ints();
        auto [u2, s2] = act(u, sigma, trace);
        return {make_T5(mm_, kk_, b_, x_, y_, u2, s2), false, {}};
    }

  private:
    // the sign-reversing involution on (u, sigma)
    std::pair<std::vector<int>, Perm> act(std::vector<int> u, Perm sigma,
                                          Trace* trace) const {
        if (mm_ == 2 && kk_ == 0) {
            // J_1<y-b_2+2u_2, y-b_1+2u_1>: construction 7.4 with the roles of
            // the two unions exchanged
            Cancel74 c4(b_[1], b_[0], y_);
            Step s = c4.step(make_T4(b_[1], b_[0], y_, u[1], u[0], sigma), true, trace);
            const auto& q = s.to.val.items();
            return {{int(q[1].as_int()), int(q[0].as_int())}, q[2].as_ints()};
        }
        Decomp72 d = decompose72(sigma);
        // parameter positions: 1..kk are x's, kk+p is the u-parameter of
        // index j = mm+1-p
        if (d.i <= kk_) {
            std::vector<int> xr;
            for (int l = 2; l <= kk_; ++l)
                if (l != d.i) xr.push_back(x_[l - 1]);
            Cancel75 child(mm_, kk_ - 2, b_, xr, y_);
            auto [u2, s2] = child.act(std::move(u), d.rest, trace);
            return {u2, compose72(d.i, d.rho, s2)};
        }
        if (kk_ >= 1) {
            int p = d.i - kk_;
            int j = mm_ + 1 - p;
            std::vector<int> br = erase_at(b_, j - 1), ur = erase_at(u, j - 1);
            std::vector<int> xr(x_.begin() + 1, x_.end());
            Cancel75 child(mm_ - 1, kk_ - 1, br, xr, y_);
            auto [u2, s2] = child.act(std::move(ur), d.rest, trace);
            u2.insert(u2.begin() + (j - 1), u[j - 1]);
            return {u2, compose72(d.i, d.rho, s2)};
        }
        // kk == 0: both removed parameters are u-parameters (u_mm and u_j)
        int p = d.i;  // position of the second removed parameter
        int j = mm_ + 1 - p;
        std::vector<int> br = erase_at(erase_at(b_, mm_ - 1), j - 1);
        std::vector<int> ur = erase_at(erase_at(u, mm_ - 1), j - 1);
        Cancel75 child(mm_ - 2, 0, br, {}, y_);
        auto [u2, s2] = child.act(std::move(ur), d.rest, trace);
        u2.insert(u2.begin() + (j - 1), u[j - 1]);
        u2.insert(u2.begin() + (mm_ - 1), u[mm_ - 1]);
        return {u2, compose72(d.i, d.rho, s2)};
    }

    static std::vector<int> erase_at(std::vector<int> v, int idx) {
        v.erase(v.begin() + idx);
        return v;
    }

    friend class Rec76;
    int mm_, kk_;
    std::vector<int> b_, x_;
    int y_;
    StageId src_;
};

inline SijPtr c7_5_cancel(int mm, int kk, std::vector<int> b, std::vector<int> x, int y) {
    return std::make_shared<Cancel75>(mm, kk, std::move(b), std::move(x), y);
}

// ------------------------------------------------------------------------
// Construction 7.6: M76[a;b] => I[a;b]
//
// Strata after the 7.2 decomposition either cancel via 7.5 (an x-parameter
// was removed) or split off a telescoping factor and recurse (a u-parameter
// was removed).  The latter is a two-factor zig-zag between
//   T3(a_1 - b_j, b_j)  x  M76[a_2..; b \ b_j]     and
//   SP                  x  I[a_2..; b \ b_j],
// whose exit at the right end is decoded as an I[a;b] element with
// sigma*_1 = j and t_1 = the survivor side.

class Rec76 final : public Sijection {
  public:
    Rec76(std::vector<int> a, std::vector<int> b)
        : a_(std::move(a)), b_(std::move(b)), m_(int(a_.size())),
          src_(stage_M76(a_, b_)), dst_(stage_I(a_, b_)) {
        PPBIJ_REQUIRE(m_ >= 1 && int(b_.size()) == m_, "rec76 parameter arity");
        if (m_ >= 2) {
            for (int j = 1; j <= m_; ++j) {
                std::vector<int> ar(a_.begin() + 1, a_.end());
                std::vector<int> br = b_;
                br.erase(br.begin() + (j - 1));
                children_.push_back(std::make_shared<Rec76>(ar, br));
                tels_.push_back(std::make_shared<Telescope>(a_[0] - b_[j - 1], b_[j - 1]));
            }
            for (int i = 2; i <= m_; ++i) {
                std::vector<int> xr;
                for (int l = 2; l <= m_; ++l)
                    if (l != i) xr.push_back(1 + a_[0] - a_[l - 1]);
                cancels_.push_back(std::make_shared<Cancel75>(m_, m_ - 2, b_, xr, a_[0]));
            }
        } else {
            tels_.push_back(std::make_shared<Telescope>(a_[0] - b_[0], b_[0]));
        }
    }

    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        expect_stage(e, at_src);
        if (m_ == 1) return base_case(e, at_src, trace);
        if (at_src) {
            std::vector<int> u = e.val.items()[0].as_ints();
            Perm sigma = e.val.items()[1].as_ints();
            Decomp72 d = decompose72(sigma);
            if (d.i <= m_) {
                // removed an x-parameter: the whole stratum cancels via 7.5
                auto [u2, s2] = cancels_[d.i - 2]->act(u, d.rest, trace);
                return {make_M76(a_, b_, u2, compose72(d.i, d.rho, s2)), false, {}};
            }
            int j = 2 * m_ + 1 - d.i;
            std::vector<int> ur = u;
            ur.erase(ur.begin() + (j - 1));
            std::vector<Element> fac{
                make_T3(a_[0] - b_[j - 1], b_[j - 1], u[j - 1], d.rho),
                make_M76(children_[j - 1]->a_, children_[j - 1]->b_, ur, d.rest)};
            auto res = factor_zigzag(hops(j), std::move(fac), true, 10'000'000, trace);
            if (!res.crossed) return {reassemble_m76(j, res.factors), false, {}};
            return {decode_exit(j, res.factors), true, {}};
        }
        // from the I side
        Perm sigma = e.val.items()[0].as_ints();
        std::vector<int> t = e.val.items()[1].as_ints();
        int j = sigma[0];
        Perm srest;
        for (size_t k = 1; k < sigma.size(); ++k) {
            int v = sigma[k];
            srest.push_back(v < j ? v : v - 1);
        }
        std::vector<int> trest(t.begin() + 1, t.end());
        std::vector<Element> fac{
            make_SP(std::abs(a_[0] - b_[j - 1]), std::abs(a_[0] + b_[j - 1]), t[0]),
            make_I(children_[j - 1]->a_, children_[j - 1]->b_, srest, trest)};
        auto res = factor_zigzag(hops(j), std::move(fac), false, 10'000'000, trace);
        if (!res.crossed) return {decode_exit(j, res.factors), false, {}};
        return {reassemble_m76(j, res.factors), true, {}};
    }

  private:
    std::vector<SijPtr> hops(int j) const {
        return {tels_[j - 1], children_[j - 1]};
    }

    Step base_case(const Element& e, bool at_src, Trace* trace) const {
        const Telescope& tel = *tels_[0];
        if (at_src) {
            Step s = tel.step(
                make_T3(a_[0] - b_[0], b_[0], int(e.val.items()[0].as_ints()[0]),
                        e.val.items()[1].as_ints()),
                true, trace);
            if (!s.crossed) {
                const auto& q = s.to.val.items();
                return {make_M76(a_, b_, {int(q[0].as_int())}, q[1].as_ints()), false, {}};
            }
            return {make_I(a_, b_, {1}, {int(s.to.val.as_int())}), true, {}};
        }
        int side = int(e.val.items()[1].as_ints()[0]);
        Step s = tel.step(make_SP(std::abs(a_[0] - b_[0]), std::abs(a_[0] + b_[0]), side),
                          false, trace);
        if (s.crossed) {
            const auto& q = s.to.val.items();
            return {make_M76(a_, b_, {int(q[0].as_int())}, q[1].as_ints()), true, {}};
        }
        return {make_I(a_, b_, {1}, {int(s.to.val.as_int())}), false, {}};
    }

    Element reassemble_m76(int j, const std::vector<Element>& fac) const {
        const auto& f1 = fac[0].val.items();
        std::vector<int> u = fac[1].val.items()[0].as_ints();
        Perm rest = fac[1].val.items()[1].as_ints();
        u.insert(u.begin() + (j - 1), int(f1[0].as_int()));
        return make_M76(a_, b_, u, compose72(2 * m_ + 1 - j, f1[1].as_ints(), rest));
    }

    Element decode_exit(int j, const std::vector<Element>& fac) const {
        int side = int(fac[0].val.as_int());
        Perm srest = fac[1].val.items()[0].as_ints();
        std::vector<int> trest = fac[1].val.items()[1].as_ints();
        Perm sigma{j};
        for (int v : srest) sigma.push_back(v < j ? v : v + 1);
        std::vector<int> t{side};
        t.insert(t.end(), trest.begin(), trest.end());
        return make_I(a_, b_, sigma, t);
    }

    std::vector<int> a_, b_;
    int m_;
    StageId src_, dst_;
    std::vector<std::shared_ptr<Rec76>> children_;
    std::vector<std::shared_ptr<Telescope>> tels_;
    std::vector<std::shared_ptr<Cancel75>> cancels_;
};

// The spec'd direction: I[a;b] => union-of-J form.
inline SijPtr c7_6_expand(const std::vector<int>& a, const std::vector<int>& b) {
    return reverse(std::make_shared<Rec76>(a, b));
}

// ------------------------------------------------------------------------
// Construction 7.7: J_m<x> with x_i = x_j cancels by left-composing the
// transposition (i j) and re-sorting the blocks; the block re-sort is the
// slot permutation the final assembly reports.

class Cancel77 final : public Sijection {
  public:
    Cancel77(std::vector<int> x, int i, int j)
        : x_(std::move(x)), i_(i), j_(j), src_(stage_J(x_)) {
        PPBIJ_REQUIRE(1 <= i_ && i_ < j_ && j_ <= int(x_.size()), "bad parameter pair");
        PPBIJ_REQUIRE(x_[i_ - 1] == x_[j_ - 1], "parameters at (i,j) must be equal");
    }
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return kEmptyStage; }

    std::pair<Perm, SlotPerm> act(const Perm& sigma) const {
        Perm swapped = sigma;
        for (int& v : swapped) {
            if (v == i_) v = j_;
            else if (v == j_) v = i_;
        }
        return canonical_blocks(swapped);
    }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        PPBIJ_CHECK(at_src, "the empty stage has no elements");
        expect_stage(e, at_src);
        auto [s2, slots] = act(e.val.as_ints());
        return {make_J(x_, s2), false, slots};
    }

  private:
    std::vector<int> x_;
    int i_, j_;
    StageId src_;
};

inline SijPtr c7_7_equal_param_cancel(std::vector<int> x, int i, int j) {
    return std::make_shared<Cancel77>(std::move(x), i, j);
}

// ------------------------------------------------------------------------
// final assembly hop M76[m..1;m..1] => J<1..2m>

inline std::vector<int> stair_params(int m) {
    std::vector<int> a(m);
    for (int i = 0; i < m; ++i) a[i] = m - i;
    return a;
}

inline std::vector<int> iota_params(int k) {
    std::vector<int> x(k);
    std::iota(x.begin(), x.end(), 1);
    return x;
}

class Surv78 final : public Sijection {
  public:
    explicit Surv78(int m)
        : m_(m), a_(stair_params(m)), src_(stage_M76(a_, a_)),
          dst_(stage_J(iota_params(2 * m))) {}

    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

  protected:
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (!at_src) {
            // the surviving stratum has parameters exactly (1..2m)
            std::vector<int> u(m_);
            for (int j = 1; j <= m_; ++j) u[j - 1] = m_ + 1 - j;
            return {make_M76(a_, a_, u, e.val.as_ints()), true, {}};
        }
        std::vector<int> u = e.val.items()[0].as_ints();
        Perm sigma = e.val.items()[1].as_ints();
        std::vector<int> p = m76_params(a_, a_, u);
        // smallest repeated parameter pair, lexicographic on (i, j)
        int pi = 0, pj = 0;
        for (size_t i = 0; !pi && i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] == p[j]) {
                    pi = int(i) + 1;
                    pj = int(j) + 1;
                    break;
                }
        if (!pi) return {make_J(iota_params(2 * m_), sigma), true, {}};
        Cancel77 c(p, pi, pj);
        auto [s2, slots] = c.act(sigma);
        return {make_M76(a_, a_, u, s2), false, slots};
    }

  private:
    int m_;
    std::vector<int> a_;
    StageId src_, dst_;
};

// Construction 7.8: I_m[m..1;m..1] => J_m<1..2m> with slot tracking.
inline SijPtr c7_8_assemble(int m) {
    auto a = stair_params(m);
    return compose({reverse(std::make_shared<Rec76>(a, a)), std::make_shared<Surv78>(m)});
}

}  // namespace ppbij
