#pragma once

// Signed sets and sijections.
//
// A signed set S = (S+, S-) is never materialized as such; elements carry a
// stage tag, a sign and a payload, and a sijection S => T is an element
// transformer realizing the bijection S+ ⊔ T- -> S- ⊔ T+.  step(e, at_src)
// applies that bijection (or its inverse) to any element of supp S ⊔ supp T;
// `at_src` says which stage the element currently inhabits, which matters
// only when the two stage tags coincide.  The returned `crossed` flag says
// whether the image lives at the other stage; mis-wired chains therefore
// fail on the stage assertions of the next hop instead of silently looping.
//
// Composition is the usual zig-zag: bounce through the middle stages until
// the element exits at one of the ends.  A hop counter enforces the
// 2*|supp(middle)|+1 bound when the caller can estimate stage sizes, and a
// global cap otherwise.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>

#include "ppbij/common.hpp"

namespace ppbij {

// -------------------------------------------------------------------------
// payloads

class Payload;
using PayloadVec = std::vector<Payload>;

class Payload {
  public:
    Payload() : v_(int64_t{0}) {}
    Payload(int64_t x) : v_(x) {}
    Payload(int x) : v_(int64_t{x}) {}
    Payload(std::string s) : v_(std::move(s)) {}
    Payload(const char* s) : v_(std::string(s)) {}
    Payload(PayloadVec xs) : v_(std::move(xs)) {}
    Payload(const std::vector<int>& xs) {
        PayloadVec v(xs.begin(), xs.end());
        v_ = std::move(v);
    }

    bool is_int() const { return std::holds_alternative<int64_t>(v_); }
    bool is_str() const { return std::holds_alternative<std::string>(v_); }
    bool is_vec() const { return std::holds_alternative<PayloadVec>(v_); }

    int64_t as_int() const {
        PPBIJ_CHECK(is_int(), "payload is not an integer");
        return std::get<int64_t>(v_);
    }
    const std::string& as_str() const {
        PPBIJ_CHECK(is_str(), "payload is not a string");
        return std::get<std::string>(v_);
    }
    const PayloadVec& items() const {
        PPBIJ_CHECK(is_vec(), "payload is not a sequence");
        return std::get<PayloadVec>(v_);
    }
    std::vector<int> as_ints() const {
        std::vector<int> out;
        for (const Payload& p : items()) out.push_back(int(p.as_int()));
        return out;
    }

    bool operator==(const Payload& o) const { return v_ == o.v_; }
    bool operator<(const Payload& o) const {
        if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
        if (is_int()) return as_int() < o.as_int();
        if (is_str()) return as_str() < o.as_str();
        return items() < o.items();
    }

    std::string dump() const {
        if (is_int()) return std::to_string(as_int());
        if (is_str()) return "\"" + as_str() + "\"";
        std::string s = "[";
        const auto& xs = items();
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += xs[i].dump();
        }
        return s + "]";
    }

  private:
    std::variant<int64_t, std::string, PayloadVec> v_;
};

using StageId = std::string;

struct Element {
    StageId stage;
    int sign = +1;  // +1 or -1
    Payload val;

    bool operator==(const Element& o) const {
        return stage == o.stage && sign == o.sign && val == o.val;
    }
    bool operator<(const Element& o) const {
        return std::tie(stage, sign, val) < std::tie(o.stage, o.sign, o.val);
    }
    std::string dump() const {
        return stage + (sign > 0 ? "+" : "-") + val.dump();
    }
};

using Trace = std::vector<Element>;

// Slot permutation attached to a hop: maps eta-slot i of the input element
// to slot perm[i-1] of the output element.  Empty means identity.
using SlotPerm = std::vector<int>;

inline SlotPerm slot_compose(const SlotPerm& later, const SlotPerm& earlier) {
    if (later.empty()) return earlier;
    if (earlier.empty()) return later;
    return perm_compose(later, earlier);
}

struct Step {
    Element to;
    bool crossed = false;
    SlotPerm slots;  // identity when empty
};

class Sijection {
  public:
    virtual ~Sijection() = default;
    virtual const StageId& src() const = 0;
    virtual const StageId& dst() const = 0;

    // The element transformer; defined on supp(src) ⊔ supp(dst) and
    // involutive on it.  `at_src` selects the stage when src() == dst().
    Step step(const Element& e, bool at_src, Trace* trace = nullptr) const {
        return do_step(e, at_src, trace);
    }

  protected:
    virtual Step do_step(const Element& e, bool at_src, Trace* trace) const = 0;

    void expect_stage(const Element& e, bool at_src) const {
        const StageId& want = at_src ? src() : dst();
        PPBIJ_CHECK(e.stage == want,
                    "element stage '" + e.stage + "' fed to hop expecting '" + want + "'");
    }
};

using SijPtr = std::shared_ptr<const Sijection>;

// sign typing of the bijection S+ ⊔ T- -> S- ⊔ T+: on the same stage the
// sign flips, across stages it is preserved.
inline void check_step_signs(const Element& from, bool from_src, const Step& s) {
    bool in_domain = (from_src && from.sign > 0) || (!from_src && from.sign < 0);
    bool to_src = s.crossed ? !from_src : from_src;
    bool image_ok = in_domain ? (to_src ? s.to.sign < 0 : s.to.sign > 0)
                              : (to_src ? s.to.sign > 0 : s.to.sign < 0);
    PPBIJ_CHECK(image_ok, "sijection image has wrong sign type");
}

// -------------------------------------------------------------------------
// reversal and composition

class Reversed final : public Sijection {
  public:
    explicit Reversed(SijPtr inner) : inner_(std::move(inner)) {}
    const StageId& src() const override { return inner_->dst(); }
    const StageId& dst() const override { return inner_->src(); }
    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        return inner_->step(e, !at_src, trace);
    }

  private:
    SijPtr inner_;
};

inline SijPtr reverse(SijPtr s) { return std::make_shared<Reversed>(std::move(s)); }

class Compose final : public Sijection {
  public:
    Compose(std::vector<SijPtr> hops, long long max_hops = 10'000'000)
        : hops_(std::move(hops)), max_hops_(max_hops) {
        PPBIJ_REQUIRE(!hops_.empty(), "compose needs at least one hop");
        for (size_t i = 0; i + 1 < hops_.size(); ++i)
            PPBIJ_REQUIRE(hops_[i]->dst() == hops_[i + 1]->src(),
                          "compose: adjacent stages do not match");
    }

    const StageId& src() const override { return hops_.front()->src(); }
    const StageId& dst() const override { return hops_.back()->dst(); }

    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        const int k = int(hops_.size());
        int pos = at_src ? 0 : k;
        int hop = at_src ? 0 : k - 1;  // index of the hop to apply next
        Element cur = e;
        SlotPerm slots;
        long long count = 0;
        while (true) {
            PPBIJ_CHECK(++count <= max_hops_, "zig-zag exceeded its hop bound");
            bool hop_at_src = (hop == pos);
            Step s = hops_[hop]->step(cur, hop_at_src, trace);
            cur = s.to;
            slots = slot_compose(s.slots, slots);
            if (trace) trace->push_back(cur);
            if (s.crossed) pos = hop_at_src ? hop + 1 : hop;
            if (pos == 0 || pos == k)
                return {cur, at_src ? pos == k : pos == 0, slots};
            hop = (hop == pos) ? pos - 1 : pos;  // alternate adjacent hops
        }
    }

  private:
    std::vector<SijPtr> hops_;
    long long max_hops_;
};

inline SijPtr compose(std::vector<SijPtr> hops, long long max_hops = 10'000'000) {
    return std::make_shared<Compose>(std::move(hops), max_hops);
}

// -------------------------------------------------------------------------
// pure bijections as sijections

// A sign-preserving bijection between two stages, given by a pair of
// payload transformers; every step crosses.
class RecodeSijection final : public Sijection {
  public:
    using Fn = std::function<Element(const Element&)>;
    RecodeSijection(StageId src, StageId dst, Fn fwd, Fn bwd)
        : src_(std::move(src)), dst_(std::move(dst)), fwd_(std::move(fwd)),
          bwd_(std::move(bwd)) {}
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        Element out = at_src ? fwd_(e) : bwd_(e);
        PPBIJ_CHECK(out.sign == e.sign, "recode must preserve signs");
        return {out, true, {}};
    }

  private:
    StageId src_, dst_;
    Fn fwd_, bwd_;
};

// Materialized sijection over explicit supports; test and fuzz vehicle.
class MapSijection final : public Sijection {
  public:
    MapSijection(StageId src, StageId dst, std::vector<std::pair<Element, Element>> pairs)
        : src_(std::move(src)), dst_(std::move(dst)) {
        PPBIJ_REQUIRE(src_ != dst_, "map sijection needs distinct stage tags");
        for (auto& [a, b] : pairs) {
            PPBIJ_REQUIRE(!fwd_.count(a) && !bwd_.count(b),
                          "map sijection pairing is not a bijection");
            fwd_[a] = b;
            bwd_[b] = a;
        }
    }
    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        bool in_domain = (at_src && e.sign > 0) || (!at_src && e.sign < 0);
        const auto& table = in_domain ? fwd_ : bwd_;
        auto it = table.find(e);
        PPBIJ_CHECK(it != table.end(), "map sijection: element not in table");
        const Element& out = it->second;
        Step s{out, out.stage != (at_src ? src_ : dst_), {}};
        check_step_signs(e, at_src, s);
        return s;
    }

  private:
    StageId src_, dst_;
    std::map<Element, Element> fwd_, bwd_;
};

// -------------------------------------------------------------------------
// signed intervals (the [FK1] convention)

struct SignedInterval {
    int a = 1, b = 0;

    bool empty() const { return a == b + 1; }
    bool positive() const { return a <= b; }
    bool contains(int u) const {
        return positive() ? (a <= u && u <= b) : (b + 1 <= u && u <= a - 1);
    }
    int sign_of(int u) const {
        PPBIJ_CHECK(contains(u), "interval does not contain this index");
        return positive() ? +1 : -1;
    }
    std::vector<int> elements() const {
        std::vector<int> out;
        if (positive())
            for (int u = a; u <= b; ++u) out.push_back(u);
        else
            for (int u = b + 1; u <= a - 1; ++u) out.push_back(u);
        return out;
    }
};

// The paper's union range: ⨆_{u=1}^{b} means u over the interval ⟦1, b+1⟧.
inline SignedInterval union_range(int b) { return SignedInterval{1, b}; }

// -------------------------------------------------------------------------
// disjoint union with signed index

// Given ψ: T => T~ and a family φ_t (for t in T+ ⊔ T~-), build the sijection
// ⨆_{t in T} S_t  =>  ⨆_{t in T~} S_t.  Composite payloads are pairs
// [index payload, fiber payload]; composite sign is the product.  The sign
// of a bare index element cannot be recovered from the composite alone, so
// the caller provides it.
class DisjointUnionWithIndex final : public Sijection {
  public:
    using IndexSign = std::function<int(const Payload&, bool at_src)>;
    using Family = std::function<SijPtr(const Element& index, bool index_at_src)>;

    DisjointUnionWithIndex(StageId src, StageId dst, SijPtr psi, IndexSign index_sign,
                           Family family)
        : src_(std::move(src)), dst_(std::move(dst)), psi_(std::move(psi)),
          index_sign_(std::move(index_sign)), family_(std::move(family)) {}

    const StageId& src() const override { return src_; }
    const StageId& dst() const override { return dst_; }

    Step do_step(const Element& e, bool at_src, Trace* trace) const override {
        expect_stage(e, at_src);
        const auto& parts = e.val.items();
        PPBIJ_CHECK(parts.size() == 2, "indexed-union element must be a pair");
        int tsign = index_sign_(parts[0], at_src);
        Element idx{at_src ? psi_->src() : psi_->dst(), tsign, parts[0]};
        int fsign = e.sign * tsign;

        bool idx_given = (at_src && tsign > 0) || (!at_src && tsign < 0);
        SijPtr chi;            // fiber sijection S_t => S_{psi-partner(t)}
        bool fiber_at_src;     // which side of chi the fiber element is on
        std::optional<Step> partner_step;
        if (idx_given) {
            chi = family_(idx, at_src);
            fiber_at_src = true;
        } else {
            partner_step = psi_->step(idx, at_src, trace);
            bool p_at_src = partner_step->crossed ? !at_src : at_src;
            chi = family_(partner_step->to, p_at_src);
            fiber_at_src = false;
        }
        Element fib{fiber_at_src ? chi->src() : chi->dst(), fsign, parts[1]};
        Step fs = chi->step(fib, fiber_at_src, trace);

        Element out_idx = idx;
        bool out_at_src = at_src;
        if (fs.crossed) {
            if (!partner_step) partner_step = psi_->step(idx, at_src, trace);
            out_idx = partner_step->to;
            out_at_src = partner_step->crossed ? !at_src : at_src;
        }
        Element out{out_at_src ? src_ : dst_, out_idx.sign * fs.to.sign,
                    Payload(PayloadVec{out_idx.val, fs.to.val})};
        Step s{out, out_at_src != at_src, fs.slots};
        check_step_signs(e, at_src, s);
        return s;
    }

  private:
    StageId src_, dst_;
    SijPtr psi_;
    IndexSign index_sign_;
    Family family_;
};

// -------------------------------------------------------------------------
// factor-wise zig-zag (products of sijections)

// Apply hops[j] to factor j of a tuple, bouncing as in the chain zig-zag;
// factors enter all at src (enter_at_src) or all at dst.  Returns the final
// factors and whether the tuple exited at the opposite end.
struct FactorZigResult {
    std::vector<Element> factors;
    bool crossed = false;
};

inline FactorZigResult factor_zigzag(const std::vector<SijPtr>& hops,
                                     std::vector<Element> factors, bool enter_at_src,
                                     long long max_hops = 10'000'000, Trace* trace = nullptr) {
    const int k = int(hops.size());
    PPBIJ_CHECK(int(factors.size()) == k, "factor zig-zag: arity mismatch");
    int pos = enter_at_src ? 0 : k;
    int j = enter_at_src ? 0 : k - 1;  // factor to transform next
    long long count = 0;
    while (true) {
        PPBIJ_CHECK(++count <= max_hops, "factor zig-zag exceeded its hop bound");
        bool at_src = (j == pos);
        Step s = hops[size_t(j)]->step(factors[size_t(j)], at_src, trace);
        factors[size_t(j)] = s.to;
        if (s.crossed) pos = at_src ? j + 1 : j;
        if (pos == 0 || pos == k)
            return {std::move(factors), enter_at_src ? pos == k : pos == 0};
        j = (j == pos) ? pos - 1 : pos;  // alternate adjacent factors
    }
}

// -------------------------------------------------------------------------
// checking

struct SijReport {
    bool ok = true;
    std::string detail;
};

// Full bijection check over materialized supports.  Elements must be listed
// with correct signs; stage tags are taken from the sijection.
inline SijReport check_sijection(const Sijection& phi,
                                 const std::vector<Element>& src_support,
                                 const std::vector<Element>& dst_support) {
    std::vector<Element> domain, codomain;
    for (const Element& e : src_support) (e.sign > 0 ? domain : codomain).push_back(e);
    for (const Element& e : dst_support) (e.sign < 0 ? domain : codomain).push_back(e);
    if (domain.size() != codomain.size())
        return {false, "domain and codomain sizes differ"};
    std::set<Element> image, expected;
    for (const Element& e : codomain) expected.insert(e);
    auto probe = [&](const Element& e, bool at_src) -> std::optional<std::string> {
        Step s;
        try {
            s = phi.step(e, at_src, nullptr);
            check_step_signs(e, at_src, s);
        } catch (const internal_error& err) {
            return std::string(err.what()) + " at " + e.dump();
        }
        if (!expected.count(s.to)) return "image not in codomain: " + s.to.dump();
        if (!image.insert(s.to).second) return "image repeated: " + s.to.dump();
        bool to_at_src = s.crossed ? !at_src : at_src;
        Step back = phi.step(s.to, to_at_src, nullptr);
        if (!(back.to == e)) return "partner not involutive at " + e.dump();
        return std::nullopt;
    };
    for (const Element& e : src_support)
        if (e.sign > 0)
            if (auto err = probe(e, true)) return {false, *err};
    for (const Element& e : dst_support)
        if (e.sign < 0)
            if (auto err = probe(e, false)) return {false, *err};
    if (image.size() != expected.size()) return {false, "image does not cover codomain"};
    return {true, ""};
}

struct CompatReport {
    bool ok = true;
    std::optional<Element> witness;
};

// η(φ(s)) == η(s) over the listed supports; set-valued statistics are
// compared through their cardinality by the caller's η.
inline CompatReport check_compatibility(const Sijection& phi,
                                        const std::function<int64_t(const Element&)>& eta,
                                        const std::vector<Element>& src_support,
                                        const std::vector<Element>& dst_support) {
    auto run = [&](const std::vector<Element>& sup, bool at_src) -> std::optional<Element> {
        for (const Element& e : sup) {
            Step s = phi.step(e, at_src, nullptr);
            if (eta(s.to) != eta(e)) return e;
        }
        return std::nullopt;
    };
    if (auto w = run(src_support, true)) return {false, w};
    if (auto w = run(dst_support, false)) return {false, w};
    return {true, std::nullopt};
}

}  // namespace ppbij
