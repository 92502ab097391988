#include <catch_amalgamated.hpp>

#include <map>

#include "helpers.hpp"
#include "ppbij/tableau.hpp"

using namespace ppbij;

namespace {

PP sh(Rows rows) {
    PP p;
    p.shifted = true;
    p.rows = std::move(rows);
    return p;
}

Tableau tab(int n, Rows rows) {
    Tableau t;
    t.n = n;
    t.rows = std::move(rows);
    return t;
}

}  // namespace

TEST_CASE("conj: worked example and zero case") {
    PP p = sh({{4, 4, 3, 3}, {3, 3, 3}, {3, 1}, {0}});
    Tableau t = conj(p);
    CHECK(t.rows == Rows{{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}});
    CHECK(t.shape() == Row{4, 3, 3, 0});
    CHECK(conj_inverse(t) == p);

    Tableau empty = conj(zero_staircase(3, true));
    CHECK(empty.rows.empty());
    CHECK(empty.shape() == Row{0, 0, 0});
    CHECK(conj_inverse(empty) == zero_staircase(3, true));
}

TEST_CASE("conj: round-trip over all of SPP(3,3)") {
    for (const PP& p : enumerate_class({PPClass::SPP, 3, 3})) {
        Tableau t = conj(p);
        Row diag{p.at(1, 1), p.at(2, 2), p.at(3, 3)};
        CHECK(t.shape() == diag);
        CHECK(conj_inverse(t) == p);
    }
}

TEST_CASE("conj: membership transport") {
    // pi in eSPP iff conj(pi) has even shape
    for (const PP& p : enumerate_class({PPClass::SPP, 3, 4})) {
        bool evens = true;
        for (int v : conj(p).shape()) evens = evens && v % 2 == 0;
        CHECK(evens == validate({PPClass::eSPP, 3, 2}, p));
    }
}

TEST_CASE("row_insert: worked examples") {
    auto r1 = row_insert(tab(4, {{4, 4, 3, 2}, {3, 3, 1}, {2, 1}}), 4);
    CHECK(r1.t.rows == Rows{{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}});
    CHECK(r1.row == 3);
    CHECK(r1.col == 3);

    auto r2 = row_insert(tab(4, {{4, 4, 3, 1}, {3, 3}, {2, 1}}), 2);
    CHECK(r2.t.rows == Rows{{4, 4, 3, 2}, {3, 3, 1}, {2, 1}});
    CHECK(r2.row == 2);
    CHECK(r2.col == 3);

    auto r3 = row_insert(tab(3, {}), 2);
    CHECK(r3.t.rows == Rows{{2}});
    CHECK(r3.row == 1);
    CHECK(r3.col == 1);
}

TEST_CASE("row_extract inverts row_insert") {
    for (const Tableau& t : testing::all_ssyt(4, 4, 6, 4))
        for (int x = 1; x <= 4; ++x) {
            auto ins = row_insert(t, x);
            auto ext = row_extract(ins.t, ins.row, ins.col);
            CHECK(ext.t == t);
            CHECK(ext.x == x);
        }
}

TEST_CASE("row_extract rejects non-corners") {
    Tableau t = tab(3, {{3, 2}, {2, 1}});
    CHECK_THROWS_AS(row_extract(t, 1, 2), structural_error);  // blocked by row 2
    CHECK_THROWS_AS(row_extract(t, 1, 1), structural_error);  // not at row end
    CHECK_NOTHROW(row_extract(t, 2, 2));
}

TEST_CASE("row bumping lemma: x < x' inserts weakly left and strictly below") {
    for (const Tableau& t : testing::all_ssyt(4, 4, 6, 4))
        for (int x = 1; x <= 4; ++x)
            for (int xp = x + 1; xp <= 4; ++xp) {
                auto first = row_insert(t, x);
                auto second = row_insert(first.t, xp);
                CHECK(second.col <= first.col);
                CHECK(second.row > first.row);
            }
}

TEST_CASE("multi_extract: worked example and p=0") {
    Tableau u = tab(4, {{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}});
    auto rec = multi_extract(u, {4, 2, 2, 0});
    CHECK(rec.base.rows == Rows{{4, 4, 3, 1}, {3, 3}, {2, 1}});
    CHECK(rec.letters == std::vector<int>{2, 4});
    CHECK(multi_insert(rec.base, rec.letters) == u);

    auto noop = multi_extract(u, u.shape());
    CHECK(noop.base == u);
    CHECK(noop.letters.empty());
}

TEST_CASE("multi_extract round-trips on all small tableaux") {
    for (const Tableau& u : testing::all_ssyt(4, 4, 6, 4)) {
        Row mu = u.shape();
        // peel the unique even sub-shape, as the odd split does
        Row lambda = mu;
        for (int& v : lambda) v -= v % 2;
        auto rec = multi_extract(u, lambda);
        CHECK(rec.base.shape() == lambda);
        CHECK(std::is_sorted(rec.letters.begin(), rec.letters.end()));
        CHECK(multi_insert(rec.base, rec.letters) == u);
    }
}

TEST_CASE("ssyt_odd_split: worked example, even shapes, bijectivity") {
    Tableau u = tab(4, {{4, 4, 4, 2}, {3, 3, 3}, {2, 1, 1}});
    auto s = ssyt_odd_split(u, 2);
    CHECK(s.t.rows == Rows{{4, 4, 3, 1}, {3, 3}, {2, 1}});
    CHECK(s.t.shape() == Row{4, 2, 2, 0});
    CHECK(s.tmap == std::vector<int>{0, 1, 0, 1});
    CHECK(ssyt_odd_unsplit(s.t, s.tmap, 2) == u);

    Tableau even = tab(3, {{3, 3}, {2, 1}});
    auto s2 = ssyt_odd_split(even, 2);
    CHECK(s2.t == even);
    CHECK(s2.tmap == std::vector<int>{0, 0, 0});

    // full bijectivity over shapes <= (3)^2 with n = 2, m = 1
    std::map<std::pair<Rows, std::vector<int>>, int> hits;
    int domain = 0;
    for (const Tableau& t : testing::all_ssyt(2, 3, 6, 2)) {
        ++domain;
        auto sp = ssyt_odd_split(t, 1);
        CHECK(ssyt_odd_unsplit(sp.t, sp.tmap, 1) == t);
        ++hits[{sp.t.rows, sp.tmap}];
    }
    int codomain = 0;
    for (const Tableau& t : testing::all_ssyt(2, 2, 4, 2)) {
        Row la = t.shape();
        if (la[0] % 2 || la[1] % 2) continue;
        for (int mask = 0; mask < 4; ++mask) {
            ++codomain;
            std::vector<int> tm{mask & 1, (mask >> 1) & 1};
            CHECK(hits[{t.rows, tm}] == 1);
        }
    }
    CHECK(domain == codomain);
}

TEST_CASE("restriction to even mu lands exactly on marks inside S(T)") {
    // both inclusions of the image characterisation, n <= 3, m <= 2
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m) {
            std::set<std::pair<Rows, std::vector<int>>> image, expected;
            for (const Tableau& u : testing::all_ssyt(n, 2 * m, 12, n)) {
                auto sp = ssyt_odd_split(u, m);
                image.insert({sp.t.rows, sp.tmap});
            }
            for (const Tableau& t : testing::all_ssyt(n, 2 * m, 12, n)) {
                Row la = t.shape();
                bool ok = true;
                for (int v : la) ok = ok && v % 2 == 0;
                if (!ok) continue;
                auto s = stat_S_tableau(t, m);
                for (int mask = 0; mask < (1 << n); ++mask) {
                    std::vector<int> tm(n);
                    bool sub = true;
                    for (int i = 0; i < n; ++i) {
                        tm[i] = (mask >> i) & 1;
                        if (tm[i] && !s.count(i + 1)) sub = false;
                    }
                    if (sub) expected.insert({t.rows, tm});
                }
            }
            CHECK(image == expected);
        }
}

TEST_CASE("stat_S_tableau matches stat_S through conjugation") {
    Tableau t = tab(4, {{4, 4, 3, 1}, {3, 3}, {2, 1}});
    CHECK(stat_S_tableau(t, 2) == std::set<int>{2, 3, 4});

    Tableau small = tab(4, {{2, 1}, {1, 1}});
    CHECK(stat_S_tableau(small, 2) == std::set<int>{1, 2, 3, 4});  // lambda_1 < 2m

    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m)
            for (const PP& p : enumerate_class({PPClass::eSPP, n, m}))
                CHECK(stat_S_tableau(conj(p), m) == stat_S({PPClass::eSPP, n, m}, p));
}

TEST_CASE("spp_split: worked example") {
    PP p = sh({{4, 4, 3, 3}, {3, 3, 3}, {3, 1}, {0}});
    auto s = spp_split(p, 4);
    CHECK(s.espp == sh({{4, 3, 3, 2}, {2, 2, 2}, {2, 1}, {0}}));
    CHECK(s.tmap == std::vector<int>{0, 1, 0, 1});
    CHECK(stat_S({PPClass::eSPP, 4, 2}, s.espp) == std::set<int>{2, 3, 4});
    CHECK(spp_unsplit(s.espp, s.tmap, 4) == p);
}

TEST_CASE("spp_split: already-even input is fixed with empty marks") {
    PP p = sh({{4, 2}, {2}});
    auto s = spp_split(p, 4);
    CHECK(s.espp == p);
    CHECK(s.tmap == std::vector<int>{0, 0});
}

TEST_CASE("spp_split: full bijectivity over SPP(3,4) and SPP(3,5)") {
    SECTION("even bound") {
        std::set<std::pair<Rows, std::vector<int>>> seen;
        long long expect = 0;
        for (const PP& q : enumerate_class({PPClass::eSPP, 3, 2}))
            expect += 1LL << stat_S({PPClass::eSPP, 3, 2}, q).size();
        for (const PP& p : enumerate_class({PPClass::SPP, 3, 4})) {
            auto s = spp_split(p, 4);
            CHECK(spp_unsplit(s.espp, s.tmap, 4) == p);
            seen.insert({s.espp.rows, s.tmap});
        }
        CHECK((long long)seen.size() == expect);
        CHECK((long long)enumerate_class({PPClass::SPP, 3, 4}).size() == expect);
    }
    SECTION("odd bound") {
        std::set<std::pair<Rows, std::vector<int>>> seen;
        for (const PP& p : enumerate_class({PPClass::SPP, 3, 5})) {
            auto s = spp_split(p, 5);
            CHECK(spp_unsplit(s.espp, s.tmap, 5) == p);
            seen.insert({s.espp.rows, s.tmap});
        }
        long long espp = enumerate_class({PPClass::eSPP, 3, 2}).size();
        CHECK((long long)seen.size() == espp * 8);
        CHECK((long long)enumerate_class({PPClass::SPP, 3, 5}).size() == espp * 8);
    }
}
