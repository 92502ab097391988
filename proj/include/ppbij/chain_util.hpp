#pragma once

// Shared plumbing for the two lattice-path chains: payload conversions and
// the generic NI <-> signed-paths hop built from the LGV involution.

#include "ppbij/paths.hpp"
#include "ppbij/pp.hpp"
#include "ppbij/sij.hpp"

namespace ppbij {

// Each chain owns the choice: which path index carries which level set.
// HighFirst means path i is the boundary of { entries >= bound+1-i }.
enum class LevelOrder { HighFirst, LowFirst };

inline const char* level_order_tag(LevelOrder o) {
    return o == LevelOrder::HighFirst ? "H" : "L";
}

inline Payload pp_payload(const PP& p) {
    PayloadVec rows;
    for (const Row& r : p.rows) rows.emplace_back(r);
    return Payload(rows);
}

inline PP payload_pp(const Payload& v, bool shifted) {
    PP p;
    p.shifted = shifted;
    for (const Payload& r : v.items()) p.rows.push_back(r.as_ints());
    return p;
}

inline Payload words_payload(const std::vector<Word>& ws) {
    PayloadVec out;
    for (const Word& w : ws) out.emplace_back(w);
    return Payload(out);
}

inline std::vector<Word> payload_words(const Payload& v) {
    std::vector<Word> out;
    for (const Payload& w : v.items()) out.push_back(w.as_str());
    return out;
}

// The NI stage embeds into the signed path stage; intersecting elements pair
// off under the tail-swap involution.  Subclasses supply the conversions.
class LgvHop : public Sijection {
  public:
    LgvHop(StageId ni, StageId lgv) : ni_(std::move(ni)), lgv_(std::move(lgv)) {}
    const StageId& src() const override { return ni_; }
    const StageId& dst() const override { return lgv_; }

  protected:
    // decode/encode of the signed stage; encode must recompute the sign
    virtual LgvConfig decode(const Element& e) const = 0;
    virtual Element encode_lgv(const LgvConfig& c, const Element& proto) const = 0;
    virtual Element to_ni(const Element& lgv_elt) const = 0;    // sigma = id only
    virtual Element to_lgv(const Element& ni_elt) const = 0;

    Step do_step(const Element& e, bool at_src, Trace*) const override {
        expect_stage(e, at_src);
        if (at_src) return {to_lgv(e), true, {}};
        LgvConfig c = decode(e);
        if (non_intersecting(c)) {
            PPBIJ_CHECK(c.sigma == perm_identity(int(c.sigma.size())),
                        "non-intersecting configuration with a non-identity pairing");
            return {to_ni(e), true, {}};
        }
        return {encode_lgv(lgv_step(c), e), false, {}};
    }

  private:
    StageId ni_, lgv_;
};

}  // namespace ppbij
