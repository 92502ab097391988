#include <catch_amalgamated.hpp>

#include <random>

#include "ppbij/sij.hpp"

using namespace ppbij;

namespace {

Element el(StageId st, int sign, int id) { return {std::move(st), sign, Payload(id)}; }

struct RandomSij {
    std::vector<Element> src_support, dst_support;
    SijPtr sij;
};

// A random valid sijection A => B over small supports; eta labels are encoded
// in the payload as id % eta_classes so fiber-wise pairing keeps it compatible.
RandomSij random_sijection(std::mt19937& rng, const StageId& a, const StageId& b,
                           int max_side = 6, int eta_classes = 0) {
    auto draw = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    RandomSij out;
    int next_id = 0;
    // per eta-class balanced sizes: |A+|+|B-| == |A-|+|B+| within each class
    int classes = eta_classes > 0 ? eta_classes : 1;
    std::vector<std::pair<Element, Element>> pairs;
    for (int c = 0; c < classes; ++c) {
        int ap = draw(0, max_side), am = draw(0, max_side), bp = draw(0, max_side);
        int bm = am + bp - ap;
        if (bm < 0) {
            bp += -bm;
            bm = 0;
        }
        std::vector<Element> dom, cod;
        auto fresh = [&](const StageId& st, int sg, std::vector<Element>& side) {
            Element e = el(st, sg, next_id * classes + c);
            ++next_id;
            side.push_back(e);
            return e;
        };
        for (int i = 0; i < ap; ++i) dom.push_back(fresh(a, +1, out.src_support));
        for (int i = 0; i < bm; ++i) dom.push_back(fresh(b, -1, out.dst_support));
        for (int i = 0; i < am; ++i) cod.push_back(fresh(a, -1, out.src_support));
        for (int i = 0; i < bp; ++i) cod.push_back(fresh(b, +1, out.dst_support));
        std::shuffle(cod.begin(), cod.end(), rng);
        for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
    }
    out.sij = std::make_shared<MapSijection>(a, b, std::move(pairs));
    return out;
}

int64_t eta_of(const Element& e) { return e.val.as_int() % 3; }

// A hop that is not a sijection at all: on the middle stage it only ever
// bounces, so a zig-zag through it ping-pongs forever.
struct BrokenHop final : Sijection {
    StageId s, d;
    BrokenHop(StageId s_, StageId d_) : s(std::move(s_)), d(std::move(d_)) {}
    const StageId& src() const override { return s; }
    const StageId& dst() const override { return d; }
    Step do_step(const Element& e, bool at_src, Trace*) const override {
        Element out = e;
        out.sign = -out.sign;
        if (e.stage == "B") return {out, false, {}};  // bounce on the middle
        out.stage = "B";
        return {out, true, {}};
    }
};

}  // namespace

TEST_CASE("payloads order, compare and dump") {
    Payload p(PayloadVec{Payload(1), Payload("EN"), Payload(PayloadVec{Payload(2)})});
    CHECK(p.dump() == "[1,\"EN\",[2]]");
    CHECK(Payload(1) < Payload(2));
    CHECK(Payload(2) < Payload("a"));
    CHECK(p == p);
}

TEST_CASE("signed intervals") {
    CHECK(union_range(3).elements() == std::vector<int>{1, 2, 3});
    CHECK(union_range(3).sign_of(2) == +1);
    CHECK(union_range(0).empty());
    SignedInterval neg = union_range(-3);  // a=1 > b+1=-2: negatives -2..0
    CHECK(neg.elements() == std::vector<int>{-2, -1, 0});
    CHECK(neg.sign_of(0) == -1);
    CHECK_FALSE(neg.contains(1));
}

TEST_CASE("identity compose on a plain set") {
    std::vector<std::pair<Element, Element>> ab, bc;
    for (int i = 0; i < 4; ++i) ab.emplace_back(el("A", 1, i), el("B", 1, i));
    for (int i = 0; i < 4; ++i) bc.emplace_back(el("B", 1, i), el("C", 1, i));
    auto phi = std::make_shared<MapSijection>("A", "B", ab);
    auto psi = std::make_shared<MapSijection>("B", "C", bc);
    auto both = compose({phi, psi});
    for (int i = 0; i < 4; ++i) {
        Step s = both->step(el("A", 1, i), true);
        CHECK(s.to == el("C", 1, i));
        CHECK(s.crossed);
        Step back = both->step(el("C", 1, i), false);
        CHECK(back.to == el("A", 1, i));
    }
}

TEST_CASE("sign-typing violations are rejected by validation") {
    // S = ({a}, {}), T = ({x},{y}) with a mapped to y: not a sijection, since
    // the image of S+ must land in S- or T+.
    auto bad = std::make_shared<MapSijection>(
        "A", "B", std::vector<std::pair<Element, Element>>{
                      {el("A", 1, 0), el("B", -1, 1)},
                      {el("B", -1, 1), el("B", 1, 2)}});
    // table constraints already refuse duplicated keys; probe the sign check
    auto report = check_sijection(*bad, {el("A", 1, 0)}, {el("B", 1, 2), el("B", -1, 1)});
    CHECK_FALSE(report.ok);
}

TEST_CASE("random sijections compose to valid sijections") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 300; ++round) {
        auto ab = random_sijection(rng, "A", "B");
        // build psi on exactly the same middle support
        std::vector<Element> bplus, bminus;
        for (const Element& e : ab.dst_support)
            (e.sign > 0 ? bplus : bminus).push_back(e);
        // C side sized to balance: |B+|+|C-| == |B-|+|C+|
        std::mt19937 rng2(rng());
        int cp = std::uniform_int_distribution<int>(0, 6)(rng2);
        int cm = int(bminus.size()) + cp - int(bplus.size());
        if (cm < 0) {
            cp += -cm;
            cm = 0;
        }
        std::vector<Element> cside;
        std::vector<Element> dom = bplus, cod = bminus;
        for (int i = 0; i < cm; ++i) {
            cside.push_back(el("C", -1, 1000 + i));
            dom.push_back(cside.back());
        }
        for (int i = 0; i < cp; ++i) {
            cside.push_back(el("C", 1, 2000 + i));
            cod.push_back(cside.back());
        }
        std::shuffle(cod.begin(), cod.end(), rng2);
        std::vector<std::pair<Element, Element>> pairs;
        for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
        auto bc = std::make_shared<MapSijection>("B", "C", pairs);

        auto whole = compose({ab.sij, bc});
        auto rep = check_sijection(*whole, ab.src_support, cside);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("compose is associative element-wise") {
    std::mt19937 rng(777);
    for (int round = 0; round < 100; ++round) {
        auto ab = random_sijection(rng, "A", "B");
        auto bc = random_sijection(rng, "B", "C");
        auto cd = random_sijection(rng, "C", "D");
        // rebuild bc/cd over the actual middle supports is overkill here: the
        // MapSijection throws when fed unknown elements, so associativity is
        // only probed on elements whose full orbit stays inside the tables.
        auto left = compose({compose({ab.sij, bc.sij}), cd.sij});
        auto right = compose({ab.sij, compose({bc.sij, cd.sij})});
        for (const Element& e : ab.src_support) {
            if (e.sign < 0) continue;
            Element l, r;
            bool okl = true, okr = true;
            try {
                l = left->step(e, true).to;
            } catch (const internal_error&) {
                okl = false;
            }
            try {
                r = right->step(e, true).to;
            } catch (const internal_error&) {
                okr = false;
            }
            CHECK(okl == okr);
            if (okl && okr) CHECK(l == r);
        }
    }
}

TEST_CASE("compatibility: identity, closure under composition, perturbation") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 100; ++round) {
        auto ab = random_sijection(rng, "A", "B", 4, 3);
        auto repa = check_compatibility(*ab.sij, eta_of, ab.src_support, ab.dst_support);
        REQUIRE(repa.ok);  // built fiber-wise

        // psi over the same middle support, also fiber-wise
        std::vector<std::pair<Element, Element>> pairs;
        std::vector<Element> cside;
        int next = 5000;
        for (int c = 0; c < 3; ++c) {
            std::vector<Element> dom, cod;
            for (const Element& e : ab.dst_support)
                if (eta_of(e) == c) (e.sign > 0 ? dom : cod).push_back(e);
            while (cod.size() < dom.size()) {
                // pad with C+ elements of the same class
                int id = next * 3 + c;
                next++;
                cside.push_back(el("C", 1, id));
                cod.push_back(cside.back());
            }
            while (dom.size() < cod.size()) {
                int id = next * 3 + c;
                next++;
                cside.push_back(el("C", -1, id));
                dom.push_back(cside.back());
            }
            std::shuffle(cod.begin(), cod.end(), rng);
            for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
        }
        auto bc = std::make_shared<MapSijection>("B", "C", pairs);
        auto repb = check_compatibility(*bc, eta_of, ab.dst_support, cside);
        REQUIRE(repb.ok);

        auto whole = compose({ab.sij, bc});
        auto repc = check_compatibility(*whole, eta_of, ab.src_support, cside);
        CHECK(repc.ok);
    }

    // negative control: a deliberately perturbed sijection yields a witness
    auto id3 = std::vector<std::pair<Element, Element>>{
        {el("A", 1, 0), el("B", 1, 1)},  // eta 0 -> 1 broken on purpose
        {el("A", 1, 1), el("B", 1, 0)},
        {el("A", 1, 2), el("B", 1, 2)}};
    MapSijection bad("A", "B", id3);
    auto rep = check_compatibility(
        bad, eta_of, {el("A", 1, 0), el("A", 1, 1), el("A", 1, 2)},
        {el("B", 1, 0), el("B", 1, 1), el("B", 1, 2)});
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    CHECK(eta_of(*rep.witness) != eta_of(bad.step(*rep.witness, true).to));
}

TEST_CASE("hop bound flags broken sijections") {
    auto head = std::make_shared<BrokenHop>("A", "B");
    auto tail = std::make_shared<BrokenHop>("B", "C");
    auto whole = compose({SijPtr(head), SijPtr(tail)}, 50);
    CHECK_THROWS_AS(whole->step(el("A", 1, 0), true), internal_error);
}

TEST_CASE("disjoint union with index: trivial and forced cases") {
    // identity psi and identity fibers give the identity
    std::vector<std::pair<Element, Element>> idx_pairs{{el("T", 1, 0), el("Tt", 1, 0)}};
    auto psi = std::make_shared<MapSijection>("T", "Tt", idx_pairs);
    std::vector<std::pair<Element, Element>> fib_pairs{{el("F", 1, 7), el("G", 1, 7)}};
    auto fib = std::make_shared<MapSijection>("F", "G", fib_pairs);
    DisjointUnionWithIndex dis(
        "U", "Ut", psi, [](const Payload&, bool) { return +1; },
        [&](const Element&, bool) { return SijPtr(fib); });
    Element e{"U", 1, Payload(PayloadVec{Payload(0), Payload(7)})};
    Step s = dis.step(e, true);
    CHECK(s.crossed);
    CHECK(s.to.stage == "Ut");
    CHECK(s.to.sign == 1);
    CHECK(s.to.val == Payload(PayloadVec{Payload(0), Payload(7)}));

    // T = ({1},{2}), singleton fibers, psi: 1 |-> 2: (s,1) cancels against (s,2)
    std::vector<std::pair<Element, Element>> psi2_pairs{{el("T2", 1, 1), el("T2", -1, 2)}};
    // note: psi maps T+ into T-; model it with distinct tags and an empty T~
    auto psi2 = std::make_shared<MapSijection>("T2", "T2e", psi2_pairs);
    std::vector<std::pair<Element, Element>> selfp{{el("F2", 1, 9), el("F2b", 1, 9)}};
    auto fib2 = std::make_shared<MapSijection>("F2", "F2b", selfp);
    DisjointUnionWithIndex dis2(
        "U2", "U2t", psi2,
        [](const Payload& p, bool) { return p.as_int() == 1 ? +1 : -1; },
        [&](const Element&, bool) { return SijPtr(fib2); });
    Element pos{"U2", 1, Payload(PayloadVec{Payload(1), Payload(9)})};
    Step t = dis2.step(pos, true);
    CHECK_FALSE(t.crossed);
    CHECK(t.to.sign == -1);
    CHECK(t.to.val == Payload(PayloadVec{Payload(2), Payload(9)}));
    // and back
    Step u = dis2.step(t.to, true);
    CHECK_FALSE(u.crossed);
    CHECK(u.to == pos);
}

TEST_CASE("factor zig-zag crosses products") {
    std::vector<std::pair<Element, Element>> p1{{el("A1", 1, 0), el("B1", 1, 5)}};
    std::vector<std::pair<Element, Element>> p2{{el("A2", 1, 1), el("B2", 1, 6)}};
    std::vector<SijPtr> hops{std::make_shared<MapSijection>("A1", "B1", p1),
                             std::make_shared<MapSijection>("A2", "B2", p2)};
    auto res = factor_zigzag(hops, {el("A1", 1, 0), el("A2", 1, 1)}, true);
    CHECK(res.crossed);
    CHECK(res.factors[0] == el("B1", 1, 5));
    CHECK(res.factors[1] == el("B2", 1, 6));
    auto back = factor_zigzag(hops, res.factors, false);
    CHECK(back.crossed);
    CHECK(back.factors[0] == el("A1", 1, 0));
}
