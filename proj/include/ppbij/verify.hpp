#pragma once

// The verification suites behind `ppbij verify --suite ...` and the
// acceptance runner.  Suite names group the acceptance criteria:
//
//   examples      pinned worked examples (bit-exact)
//   roundtrip     equinumerosity grid, end-to-end bijection, #S ledger,
//                 and the level-orientation calibration gates
//   lgv-counts    signed counts and involution properties of the three
//                 path configurations
//   imjm-fibers   telescoping, cancellations, the full I/J assembly and
//                 its slot conditions, |eta|-fiber equality
//   sij-kernel    kernel validity/termination/compatibility fuzzing

#include <chrono>
#include <random>

#include "ppbij/pipeline.hpp"

namespace ppbij {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteResult {
    std::string suite;
    double seconds = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace verify_detail {

inline void add(SuiteResult& r, const std::string& name, bool ok,
                const std::string& detail = "") {
    r.checks.push_back({name, ok, detail});
}

template <typename F>
inline void guarded(SuiteResult& r, const std::string& name, F&& body) {
    size_t before = r.checks.size();
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& ex) {
        add(r, name, false, ex.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (size_t i = before; i < r.checks.size(); ++i) r.checks[i].seconds = dt;
}

inline PP mk(bool shifted, Rows rows) {
    PP p;
    p.shifted = shifted;
    p.rows = std::move(rows);
    return p;
}

}  // namespace verify_detail

// ------------------------------------------------------------------------
// criterion 1: the five worked examples, bit-exact

inline SuiteResult run_examples_suite() {
    using namespace verify_detail;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{"examples"};

    guarded(r, "pstair->qtcpp", [&] {
        PP in = mk(false, {{8, 6, 6, 3}, {4, 4, 0}, {4, 2}, {1}});
        PP want = mk(false, {{8, 7, 7, 4}, {6, 6, 2}, {6, 4}, {3}});
        add(r, "pstair->qtcpp", pstair_to_qtcpp(in, 8) == want && qtcpp_to_pstair(want, 8) == in);
    });
    guarded(r, "qtcpp->stair odd", [&] {
        PP in = mk(false, {{7, 6, 4, 3}, {5, 5, 3}, {5, 2}, {4}});
        auto got = qtcpp_to_stair_odd(in, 7);
        add(r, "qtcpp->stair odd",
            got.stair == mk(false, {{3, 2, 0, 0}, {1, 1, 0}, {1, 1}, {0}}) &&
                got.t == std::vector<int>{1, 1, 1, 0});
    });
    guarded(r, "qtcpp->stair even", [&] {
        PP in = mk(false, {{8, 7, 5, 3}, {6, 6, 4}, {6, 2}, {5}});
        auto got = qtcpp_to_stair_even(in, 8);
        add(r, "qtcpp->stair even",
            got.base == mk(false, {{4, 3, 1, 1}, {2, 2, 0}, {2, 2}, {1}}) &&
                got.marks == std::map<int, int>{{1, 1}, {3, 1}, {4, 0}} &&
                stat_S({PPClass::stairPP, 4, 4}, got.base) == std::set<int>{1, 3, 4});
    });
    guarded(r, "conjugation", [&] {
        PP in = mk(true, {{4, 4, 3, 3}, {3, 3, 3}, {3, 1}, {0}});
        Tableau t = conj(in);
        add(r, "conjugation",
            t.rows == Rows{{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}} && conj_inverse(t) == in);
    });
    guarded(r, "double extraction", [&] {
        Tableau u;
        u.n = 4;
        u.rows = {{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}};
        auto rec = multi_extract(u, {4, 2, 2, 0});
        add(r, "double extraction",
            rec.base.rows == Rows{{4, 4, 3, 1}, {3, 3}, {2, 1}} &&
                rec.letters == std::vector<int>{2, 4});
    });
    guarded(r, "composite split", [&] {
        PP in = mk(true, {{4, 4, 3, 3}, {3, 3, 3}, {3, 1}, {0}});
        auto sp = spp_split(in, 4);
        add(r, "composite split",
            sp.espp == mk(true, {{4, 3, 3, 2}, {2, 2, 2}, {2, 1}, {0}}) &&
                sp.tmap == std::vector<int>{0, 1, 0, 1} &&
                stat_S({PPClass::eSPP, 4, 2}, sp.espp) == std::set<int>{2, 3, 4});
    });

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------------------
// criteria 2-4 and 8

inline bool stair_calibration_passes(LevelOrder o) {
    StairParams big{4, 6, o};
    PP example = verify_detail::mk(false, {{6, 4, 3, 3}, {4, 2, 1}, {3, 0}, {1}});
    std::vector<Word> ws;
    try {
        ws = stair_level_words(big, example);
    } catch (const std::exception&) {
        return false;
    }
    LgvConfig c{kUpRight, {}, ws, perm_identity(big.m)};
    for (int i = 1; i <= big.m; ++i) c.starts.push_back(big.a(i));
    if (!non_intersecting(c)) return false;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            StairParams P{n, m, o};
            for (const PP& p : enumerate_class({PPClass::stairPP, n, m})) {
                auto w = stair_level_words(P, p);
                LgvConfig cc{kUpRight, {}, w, perm_identity(m)};
                for (int i = 1; i <= m; ++i) cc.starts.push_back(P.a(i));
                if (!non_intersecting(cc)) return false;
                if (stair_stat_card(P, stair_ni_elt(P, w)) !=
                    int64_t(stat_S_tilde({PPClass::stairPP, n, m}, p).size()))
                    return false;
            }
        }
    return true;
}

inline bool espp_calibration_passes(LevelOrder o) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            EsppParams P{n, m, o};
            ClassTag tag{PPClass::eSPP, n, m};
            for (const PP& p : enumerate_class(tag)) {
                TauWords tw;
                try {
                    tw = espp_level_paths(P, p);
                } catch (const std::exception&) {
                    return false;
                }
                LgvConfig c{kUpRight, {}, tw.words, perm_identity(2 * m)};
                for (int k = 1; k <= 2 * m; ++k)
                    c.starts.push_back(P.a(P.tau_of(tw.taut, k)));
                if (!non_intersecting(c)) return false;
                if (espp_stat_card(P, espp_ni_elt(P, tw)) !=
                    int64_t(stat_S(tag, p).size()))
                    return false;
            }
        }
    return true;
}

inline SuiteResult run_roundtrip_suite(int jobs = 1) {
    using namespace verify_detail;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{"roundtrip"};

    // criterion 2: equinumerosity through two independent enumerators
    guarded(r, "equinumerosity", [&] {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 4 && ok; ++n)
            for (int M = 0; M <= 5 && ok; ++M) {
                ClassTag spp{PPClass::SPP, n, M}, qt{PPClass::QTCPP, n, M},
                    pst{PPClass::pstairPP, n, M};
                ClassTag es{PPClass::eSPP, n, M / 2}, st{PPClass::stairPP, n, M / 2};
                long long a1 = (long long)enumerate_class(spp).size();
                long long a2 = count_class_dp(spp);
                long long b1 = (long long)enumerate_class(qt).size();
                long long b2 = count_class_dp(qt);
                long long c1 = (long long)enumerate_class(pst).size();
                long long c2 = count_class_dp(pst);
                long long d1 = (long long)enumerate_class(es).size();
                long long d2 = count_class_dp(es);
                long long e1 = (long long)enumerate_class(st).size();
                long long e2 = count_class_dp(st);
                ok = a1 == a2 && b1 == b2 && c1 == c2 && d1 == d2 && e1 == e2 &&
                     a1 == b1 && a1 == c1 && d1 == e1;
                if (!ok)
                    detail = "mismatch at n=" + std::to_string(n) +
                             " M=" + std::to_string(M);
            }
        ok = ok && enumerate_class({PPClass::SPP, 2, 1}).size() == 4 &&
             enumerate_class({PPClass::QTCPP, 2, 1}).size() == 4;
        add(r, "equinumerosity", ok, detail);
    });

    // criterion 3: end-to-end round trips over the whole grid
    guarded(r, "spp<->qtcpp roundtrip", [&] {
        struct Cell {
            int n, M;
        };
        std::vector<Cell> cells;
        for (int n = 1; n <= 4; ++n)
            for (int M = 0; M <= 5; ++M) cells.push_back({n, M});
        std::vector<std::string> fail(cells.size());
        parallel_for(int(cells.size()), jobs, [&](int i) {
            auto rep = verify_spp_qtcpp(cells[i].n, cells[i].M);
            if (!rep.ok())
                fail[i] = "n=" + std::to_string(cells[i].n) +
                          " M=" + std::to_string(cells[i].M) + " (" +
                          std::to_string(rep.roundtrip_failures.size()) + " roundtrip, " +
                          std::to_string(rep.ledger_failures.size()) + " ledger)";
        });
        std::string detail;
        for (const std::string& f : fail)
            if (!f.empty()) detail += f + "; ";
        add(r, "spp<->qtcpp roundtrip", detail.empty(), detail);
    });

    // criterion 4: #S ledger and involutive refinements
    guarded(r, "statistic ledger", [&] {
        bool ok = true;
        for (int n = 1; n <= 4 && ok; ++n)
            for (int m = 0; m <= 2 && ok; ++m) {
                Pipeline pl(n, m);
                ClassTag te{PPClass::eSPP, n, m}, ts{PPClass::stairPP, n, m};
                for (const PP& e : enumerate_class(te)) {
                    PP q = pl.f(e);
                    ok = ok && stat_S(te, e).size() == stat_S(ts, q).size();
                    auto g = g_refine(pl, e);
                    auto back = order_preserving_bijection(stat_S(ts, q), stat_S(te, e));
                    for (const auto& [i, gi] : g) ok = ok && back.at(gi) == i;
                }
            }
        add(r, "statistic ledger", ok);
    });

    // criterion 8: the calibration gates
    guarded(r, "calibration gates", [&] {
        bool stair_high = stair_calibration_passes(LevelOrder::HighFirst);
        bool stair_low = stair_calibration_passes(LevelOrder::LowFirst);
        bool espp_high = espp_calibration_passes(LevelOrder::HighFirst);
        bool espp_low = espp_calibration_passes(LevelOrder::LowFirst);
        add(r, "calibration gates",
            stair_high && !stair_low && espp_high && !espp_low,
            "stair H/L=" + std::to_string(stair_high) + "/" + std::to_string(stair_low) +
                " espp H/L=" + std::to_string(espp_high) + "/" + std::to_string(espp_low));
    });

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------------------
// criterion 5: the three path configurations

inline SuiteResult run_lgv_suite() {
    using namespace verify_detail;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{"lgv-counts"};

    auto orbit_checks = [&](const std::vector<Element>& supp,
                            const std::function<LgvConfig(const Element&)>& dec,
                            long long ni_expected, const std::string& name) {
        long long signed_count = 0, ni_count = 0;
        bool ok = true;
        for (const Element& e : supp) {
            LgvConfig c = dec(e);
            signed_count += e.sign;
            if (non_intersecting(c)) {
                ++ni_count;
                continue;
            }
            LgvConfig d = lgv_step(c);
            ok = ok && perm_sign(d.sigma) == -perm_sign(c.sigma);
            ok = ok && edge_multiset(d) == edge_multiset(c);
            ok = ok && !(d.words == c.words && d.sigma == c.sigma);
            LgvConfig back = lgv_step(d);
            ok = ok && back.words == c.words && back.sigma == c.sigma;
        }
        add(r, name, ok && signed_count == ni_count && ni_count == ni_expected,
            "signed=" + std::to_string(signed_count) + " ni=" + std::to_string(ni_count) +
                " expected=" + std::to_string(ni_expected));
    };

    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            StairParams SP{n, m, LevelOrder::HighFirst};
            EsppParams EP{n, m, LevelOrder::HighFirst};
            long long stair_count = (long long)enumerate_class({PPClass::stairPP, n, m}).size();
            long long espp_count = (long long)enumerate_class({PPClass::eSPP, n, m}).size();
            std::string key = " n=" + std::to_string(n) + " m=" + std::to_string(m);

            guarded(r, "first configuration" + key, [&] {
                orbit_checks(
                    rot_supp_lgv(SP, false),
                    [&](const Element& e) {
                        LgvConfig c{kDownRight, {}, payload_words(e.val.items()[1]),
                                    e.val.items()[0].as_ints()};
                        for (int i = 1; i <= n; ++i) c.starts.push_back(SP.col_a(i));
                        return c;
                    },
                    stair_count, "first configuration" + key);
            });
            guarded(r, "second configuration" + key, [&] {
                orbit_checks(
                    stair_supp_lgv(SP),
                    [&](const Element& e) {
                        LgvConfig c{kUpRight, {}, payload_words(e.val.items()[1]),
                                    e.val.items()[0].as_ints()};
                        for (int i = 1; i <= m; ++i) c.starts.push_back(SP.a(i));
                        return c;
                    },
                    stair_count, "second configuration" + key);
            });
            guarded(r, "espp configuration" + key, [&] {
                orbit_checks(
                    espp_supp_lgv(EP),
                    [&](const Element& e) {
                        auto taut = e.val.items()[0].as_ints();
                        LgvConfig c{kUpRight, {}, payload_words(e.val.items()[2]),
                                    e.val.items()[1].as_ints()};
                        for (int k = 1; k <= 2 * m; ++k)
                            c.starts.push_back(EP.a(EP.tau_of(taut, k)));
                        return c;
                    },
                    espp_count, "espp configuration" + key);
            });
        }

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------------------
// criterion 6: the I/J machinery

inline SuiteResult run_imjm_suite() {
    using namespace verify_detail;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{"imjm-fibers"};

    guarded(r, "telescoping", [&] {
        bool ok = true;
        for (int x = -4; x <= 4 && ok; ++x)
            for (int b = 0; b <= 4 && ok; ++b) {
                auto tel = c7_3_telescope(x, b);
                std::vector<Element> sup;
                for (int u : union_range(b).elements()) {
                    sup.push_back(make_T3(x, b, u, {1, 2}));
                    sup.push_back(make_T3(x, b, u, {2, 1}));
                }
                std::vector<Element> sp{make_SP(std::abs(x), std::abs(x + 2 * b), 0),
                                        make_SP(std::abs(x), std::abs(x + 2 * b), 1)};
                ok = check_sijection(*tel, sup, sp).ok;
            }
        add(r, "telescoping", ok);
    });

    guarded(r, "double cancellation", [&] {
        bool ok = true;
        for (int b1 = 1; b1 <= 3 && ok; ++b1)
            for (int b2 = 1; b2 <= 3 && ok; ++b2)
                for (int y = -2; y <= 2 && ok; ++y) {
                    auto c = c7_4_cancel(b1, b2, y);
                    std::vector<Element> sup;
                    for (int u1 = 1; u1 <= b1; ++u1)
                        for (int u2 = 1; u2 <= b2; ++u2) {
                            sup.push_back(make_T4(b1, b2, y, u1, u2, {1, 2}));
                            sup.push_back(make_T4(b1, b2, y, u1, u2, {2, 1}));
                        }
                    ok = check_sijection(*c, sup, {}).ok;
                }
        add(r, "double cancellation", ok);
    });

    guarded(r, "recursive cancellation", [&] {
        bool ok = true;
        std::vector<std::tuple<int, int, std::vector<int>, std::vector<int>>> cases{
            {2, 0, {2, 2}, {}},
            {3, 1, {1, 2, 1}, {3}},
            {4, 0, {1, 2, 1, 1}, {}},
        };
        for (auto& [mm, kk, b, x] : cases) {
            auto c = c7_5_cancel(mm, kk, b, x, 1);
            std::vector<Element> sup;
            auto sprime = enum_Sprime(mm + kk);
            for_each_interval_tuple(b, [&](const std::vector<int>& u) {
                for (const Perm& s : sprime) sup.push_back(make_T5(mm, kk, b, x, 1, u, s));
            });
            ok = ok && check_sijection(*c, sup, {}).ok;
        }
        add(r, "recursive cancellation", ok);
    });

    guarded(r, "assembly with slot conditions", [&] {
        bool ok = true;
        for (int m = 1; m <= 3 && ok; ++m) {
            auto a = stair_params(m);
            auto x = iota_params(2 * m);
            auto c = c7_8_assemble(m);
            auto supi = supp_I(a, a);
            auto supj = supp_J(x);
            ok = check_sijection(*c, supi, supj).ok;
            auto abs_eta = [&](const Element& e, int i) -> int64_t {
                if (e.stage == stage_J(x)) return std::abs(eta_J(x, e.val.as_ints(), i));
                return std::abs(eta_I(a, a, e.val.items()[0].as_ints(),
                                      e.val.items()[1].as_ints(), i));
            };
            auto run = [&](const std::vector<Element>& sup, bool at_src) {
                for (const Element& e : sup) {
                    Step s = c->step(e, at_src);
                    int s1 = s.slots.empty() ? 1 : s.slots[0];
                    ok = ok && s1 == 1;
                    for (int i = 1; i <= m; ++i) {
                        int si = s.slots.empty() ? i : s.slots[i - 1];
                        ok = ok && abs_eta(e, i) == abs_eta(s.to, si);
                    }
                    Step back = c->step(s.to, s.crossed ? !at_src : at_src);
                    ok = ok && back.to == e;
                    for (int i = 1; i <= m; ++i) {
                        int si = s.slots.empty() ? i : s.slots[i - 1];
                        int bi = back.slots.empty() ? si : back.slots[si - 1];
                        ok = ok && bi == i;
                    }
                }
            };
            run(supi, true);
            run(supj, false);
        }
        add(r, "assembly with slot conditions", ok);
    });

    guarded(r, "fiber signed counts", [&] {
        bool ok = true;
        for (int m = 1; m <= 4 && ok; ++m) {
            auto a = stair_params(m);
            auto x = iota_params(2 * m);
            using Key = std::pair<int64_t, std::vector<int64_t>>;
            auto key_I = [&](const Element& e) {
                Perm sigma = e.val.items()[0].as_ints();
                auto t = e.val.items()[1].as_ints();
                std::vector<int64_t> rest;
                for (int i = 2; i <= m; ++i)
                    rest.push_back(std::abs(eta_I(a, a, sigma, t, i)));
                std::sort(rest.begin(), rest.end());
                return Key{std::abs(eta_I(a, a, sigma, t, 1)), rest};
            };
            auto key_J = [&](const Element& e) {
                Perm sigma = e.val.as_ints();
                std::vector<int64_t> rest;
                for (int i = 2; i <= m; ++i) rest.push_back(std::abs(eta_J(x, sigma, i)));
                std::sort(rest.begin(), rest.end());
                return Key{std::abs(eta_J(x, sigma, 1)), rest};
            };
            std::map<Key, long long> fi, fj;
            for (const Element& e : supp_I(a, a)) fi[key_I(e)] += e.sign;
            for (const Element& e : supp_J(x)) fj[key_J(e)] += e.sign;
            for (auto& [k, v] : fi) ok = ok && fj[k] == v;
            for (auto& [k, v] : fj) ok = ok && fi[k] == v;
        }
        add(r, "fiber signed counts", ok);
    });

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------------------
// criterion 7: kernel fuzzing

namespace verify_detail {

struct RandomInstance {
    std::vector<Element> a_supp, b_supp;
    SijPtr sij;
};

inline Element rnd_el(const StageId& st, int sign, int id) {
    return {st, sign, Payload(id)};
}

inline RandomInstance random_sijection(std::mt19937& rng, const StageId& a,
                                       const StageId& b, int max_side) {
    auto draw = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    RandomInstance out;
    int ap = draw(0, max_side), am = draw(0, max_side), bp = draw(0, max_side);
    int bm = am + bp - ap;
    if (bm < 0) {
        bp += -bm;
        bm = 0;
    }
    int next = 0;
    std::vector<Element> dom, cod;
    for (int i = 0; i < ap; ++i) out.a_supp.push_back(rnd_el(a, 1, next++)),
                                 dom.push_back(out.a_supp.back());
    for (int i = 0; i < bm; ++i) out.b_supp.push_back(rnd_el(b, -1, next++)),
                                 dom.push_back(out.b_supp.back());
    for (int i = 0; i < am; ++i) out.a_supp.push_back(rnd_el(a, -1, next++)),
                                 cod.push_back(out.a_supp.back());
    for (int i = 0; i < bp; ++i) out.b_supp.push_back(rnd_el(b, 1, next++)),
                                 cod.push_back(out.b_supp.back());
    std::shuffle(cod.begin(), cod.end(), rng);
    std::vector<std::pair<Element, Element>> pairs;
    for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
    out.sij = std::make_shared<MapSijection>(a, b, std::move(pairs));
    return out;
}

}  // namespace verify_detail

inline SuiteResult run_kernel_suite(uint64_t seed = 0xC0FFEE, int rounds = 10000) {
    using namespace verify_detail;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{"sij-kernel"};

    guarded(r, "constructed sijections validate", [&] {
        bool ok = true;
        for (int m = 1; m <= 3 && ok; ++m) {
            auto a = stair_params(m);
            ok = check_sijection(*std::make_shared<Rec76>(a, a), supp_M76(a, a),
                                 supp_I(a, a))
                     .ok;
        }
        add(r, "constructed sijections validate", ok);
    });

    guarded(r, "compose terminates within the hop bound", [&] {
        std::mt19937 rng(seed);
        bool ok = true;
        for (int round = 0; round < rounds && ok; ++round) {
            auto ab = random_sijection(rng, "A", "B", 6);
            std::vector<Element> bplus, bminus;
            for (const Element& e : ab.b_supp) (e.sign > 0 ? bplus : bminus).push_back(e);
            int cp = std::uniform_int_distribution<int>(0, 6)(rng);
            int cm = int(bminus.size()) + cp - int(bplus.size());
            if (cm < 0) {
                cp += -cm;
                cm = 0;
            }
            std::vector<Element> cs, dom = bplus, cod = bminus;
            for (int i = 0; i < cm; ++i)
                cs.push_back(rnd_el("C", -1, 10000 + i)), dom.push_back(cs.back());
            for (int i = 0; i < cp; ++i)
                cs.push_back(rnd_el("C", 1, 20000 + i)), cod.push_back(cs.back());
            std::shuffle(cod.begin(), cod.end(), rng);
            std::vector<std::pair<Element, Element>> pairs;
            for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
            auto bc = std::make_shared<MapSijection>("B", "C", pairs);
            // the zig-zag bound: 2 |supp(middle)| + 1
            long long bound = 2 * (long long)ab.b_supp.size() + 1;
            auto whole = compose({ab.sij, bc}, std::max(bound, 1LL));
            ok = check_sijection(*whole, ab.a_supp, cs).ok;
        }
        add(r, "compose terminates within the hop bound", ok,
            "rounds=" + std::to_string(rounds));
    });

    guarded(r, "compatibility closed under composition", [&] {
        std::mt19937 rng(seed ^ 0x5151);
        auto eta = [](const Element& e) -> int64_t { return e.val.as_int() % 3; };
        auto draw = [&](int lo, int hi) {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        };
        bool ok = true;
        for (int round = 0; round < std::min(rounds, 500) && ok; ++round) {
            // both hops built fiber-wise per eta class, hence compatible
            std::vector<std::pair<Element, Element>> p1, p2;
            std::vector<Element> as, bs, cs;
            int next = 0;
            auto fresh = [&](const StageId& st, int sg, int cls, std::vector<Element>& v) {
                Element e = rnd_el(st, sg, (next++) * 3 + cls);
                v.push_back(e);
                return e;
            };
            for (int cls = 0; cls < 3; ++cls) {
                int ap = draw(0, 3), am = draw(0, 3), bp = draw(0, 3);
                int bm = am + bp - ap;
                if (bm < 0) {
                    bp += -bm;
                    bm = 0;
                }
                std::vector<Element> dom, cod;
                for (int i = 0; i < ap; ++i) dom.push_back(fresh("A", 1, cls, as));
                for (int i = 0; i < bm; ++i) dom.push_back(fresh("B", -1, cls, bs));
                for (int i = 0; i < am; ++i) cod.push_back(fresh("A", -1, cls, as));
                for (int i = 0; i < bp; ++i) cod.push_back(fresh("B", 1, cls, bs));
                std::shuffle(cod.begin(), cod.end(), rng);
                for (size_t i = 0; i < dom.size(); ++i) p1.emplace_back(dom[i], cod[i]);
            }
            for (int cls = 0; cls < 3; ++cls) {
                std::vector<Element> dom2, cod2;
                for (const Element& e : bs)
                    if (eta(e) == cls) (e.sign > 0 ? dom2 : cod2).push_back(e);
                int cp = draw(0, 3);
                int cm = int(cod2.size()) + cp - int(dom2.size());
                if (cm < 0) {
                    cp += -cm;
                    cm = 0;
                }
                for (int i = 0; i < cm; ++i) dom2.push_back(fresh("C", -1, cls, cs));
                for (int i = 0; i < cp; ++i) cod2.push_back(fresh("C", 1, cls, cs));
                std::shuffle(cod2.begin(), cod2.end(), rng);
                for (size_t i = 0; i < dom2.size(); ++i) p2.emplace_back(dom2[i], cod2[i]);
            }
            auto ab = std::make_shared<MapSijection>("A", "B", p1);
            auto bc = std::make_shared<MapSijection>("B", "C", p2);
            ok = ok && check_compatibility(*ab, eta, as, bs).ok;
            ok = ok && check_compatibility(*bc, eta, bs, cs).ok;
            auto whole = compose({SijPtr(ab), SijPtr(bc)});
            ok = ok && check_compatibility(*whole, eta, as, cs).ok;
        }
        add(r, "compatibility closed under composition", ok);
    });

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
    return {"roundtrip", "sij-kernel", "imjm-fibers", "lgv-counts", "examples"};
}

inline SuiteResult run_suite(const std::string& name, int jobs = 1,
                             uint64_t seed = 0xC0FFEE) {
    if (name == "examples") return run_examples_suite();
    if (name == "roundtrip") return run_roundtrip_suite(jobs);
    if (name == "lgv-counts") return run_lgv_suite();
    if (name == "imjm-fibers") return run_imjm_suite();
    if (name == "sij-kernel") return run_kernel_suite(seed);
    throw structural_error("unknown suite: " + name);
}

}  // namespace ppbij
