#include "rbd/config.hpp"
#include "rbd/wahl.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace rbd;

namespace {
std::vector<Int> ints(std::vector<int> v) {
    return std::vector<Int>(v.begin(), v.end());
}
} // namespace

TEST_CASE("hj_expand examples") {
    CHECK(hj_expand(4225, 1169) == ints({4, 3, 3, 2, 6, 3, 3, 2, 2}));
    CHECK(hj_expand(6241, 2369) == ints({3, 3, 4, 5, 3, 2, 3, 3, 2}));
    CHECK(hj_expand(4, 1) == ints({4}));
    CHECK(hj_expand(7, 2) == ints({4, 2}));
    CHECK(hj_expand(19, 7) == ints({3, 4, 2}));
    CHECK_THROWS_AS(hj_expand(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(hj_expand(4, 2), std::invalid_argument);
}

TEST_CASE("hj_value is a two-sided inverse of hj_expand") {
    CHECK(hj_value(ints({2, 2})) == Rat(3, 2));
    for (int n = 2; n <= 500; ++n)
        for (int d = 1; d < n; ++d) {
            if (gcd(Int(n), Int(d)) != 1) continue;
            auto a = hj_expand(n, d);
            for (const auto& x : a) CHECK(x >= 2);
            CHECK(hj_value(a) == Rat(n, d));
        }
}

TEST_CASE("recognize_wahl") {
    auto w1 = recognize_wahl(ints({4, 3, 3, 2, 6, 3, 3, 2, 2}));
    REQUIRE(w1.has_value());
    CHECK(w1->p == 65);
    CHECK(w1->q == 18);
    CHECK(w1->lens == std::pair<Int, Int>{4225, 1169});
    CHECK(w1->knot_determinant == 4225);
    CHECK(w1->length == 9);

    auto w2 = recognize_wahl(ints({3, 3, 4, 5, 3, 2, 3, 3, 2}));
    REQUIRE(w2.has_value());
    CHECK(w2->p == 79);
    CHECK(w2->q == 30);
    CHECK(w2->lens == std::pair<Int, Int>{6241, 2369});

    CHECK(recognize_wahl(ints({4}))->p == 2);
    CHECK_FALSE(recognize_wahl(ints({2, 2})).has_value());
    CHECK_FALSE(recognize_wahl(ints({3, 3, 4, 4, 3, 2, 3, 3, 2})).has_value());
    CHECK_FALSE(recognize_wahl(ints({1, 4})).has_value());
    CHECK_FALSE(recognize_wahl({}).has_value());
}

TEST_CASE("generate_wahl small lengths") {
    auto len1 = generate_wahl(1);
    REQUIRE(len1.size() == 1);
    CHECK(len1[0].a == ints({4}));

    auto len2 = generate_wahl(2);
    REQUIRE(len2.size() == 3);
    CHECK(len2[0].a == ints({4}));
    CHECK(len2[1].a == ints({2, 5}));
    CHECK(len2[2].a == ints({5, 2}));

    CHECK(generate_wahl(0).empty());
}

TEST_CASE("generate_wahl properties up to length 7") {
    auto all = generate_wahl(7);
    CHECK(all.size() == 127);  // 2^k chains of length k+1
    std::set<std::vector<Int>> seen;
    for (const auto& w : all) {
        CHECK(seen.insert(w.a).second);  // no duplicates
        IntMatrix m = chain_matrix(w.a);
        CHECK(det(m) == (w.length % 2 ? -1 : 1) * w.p * w.p);
        CHECK(is_negative_definite(m));
        CHECK(gcd(w.p, w.q) == 1);
        CHECK(w.q < w.p);
        // reversal law: reading the chain backwards swaps q for p - q
        std::vector<Int> rev(w.a.rbegin(), w.a.rend());
        auto wr = recognize_wahl(rev);
        REQUIRE(wr.has_value());
        CHECK(wr->p == w.p);
        CHECK(wr->q == w.p - w.q);
    }
    // the fixture's two chains appear at length 9
    auto all9 = generate_wahl(9);
    auto has = [&](std::vector<Int> a) {
        return std::any_of(all9.begin(), all9.end(),
                           [&](const WahlDescriptor& w) { return w.a == a; });
    };
    CHECK(has(ints({4, 3, 3, 2, 6, 3, 3, 2, 2})));
    CHECK(has(ints({3, 3, 4, 5, 3, 2, 3, 3, 2})));
}

TEST_CASE("characteristic sets of the fixture chains") {
    Configuration cfg = load_config(RBD_FIXTURE_PATH).build();
    IntMatrix q1 = intersection_matrix(cfg, cfg.chain("C1"));
    auto cs1 = characteristic_set(q1, "C1");
    CHECK(cs1.unique);
    CHECK(cs1.members == std::vector<std::size_t>{1, 4, 6});

    IntMatrix q2 = intersection_matrix(cfg, cfg.chain("C2"));
    auto cs2 = characteristic_set(q2, "C2");
    CHECK(cs2.unique);
    CHECK(cs2.members == std::vector<std::size_t>{1, 5, 7});
}

TEST_CASE("characteristic set does not restrict from the extended chains") {
    // appending the adjacent (-1)-curve gives an odd-determinant 10x10 lattice
    // whose characteristic set does not restrict to the chain's own
    Configuration cfg = load_config(RBD_FIXTURE_PATH).build();

    auto extended = [&](const char* chain, const char* extra) {
        std::vector<std::string> names = cfg.chain(chain);
        names.push_back(extra);
        return intersection_matrix(cfg, names);
    };

    IntMatrix q1e = extended("C1", "E21");
    CHECK(det(q1e) == 1171);
    auto cs1e = characteristic_set(q1e, "C1'");
    CHECK(cs1e.unique);
    CHECK(cs1e.members == std::vector<std::size_t>{3, 5, 8, 10});

    IntMatrix q2e = extended("C2", "E14");
    CHECK(det(q2e) == 2371);
    auto cs2e = characteristic_set(q2e, "C2'");
    CHECK(cs2e.unique);
    CHECK(cs2e.members == std::vector<std::size_t>{2, 4, 8, 10});
    // restriction to the first 9 positions differs from W(C2) = {1,5,7}
    std::vector<std::size_t> restricted;
    for (auto m : cs2e.members)
        if (m <= 9) restricted.push_back(m);
    CHECK(restricted != std::vector<std::size_t>{1, 5, 7});
}

TEST_CASE("find_wahl_subchains on the fixture") {
    Configuration cfg = load_config(RBD_FIXTURE_PATH).build();
    auto res = find_wahl_subchains(cfg, 50);
    CHECK_FALSE(res.aborted);
    CHECK_FALSE(res.truncated);
    CHECK_FALSE(res.chains.empty());
    CHECK_FALSE(res.pairs.empty());

    auto canon = [](std::vector<std::string> v) {
        std::vector<std::string> r(v.rbegin(), v.rend());
        return std::min(v, r);
    };
    std::vector<std::string> c1 = canon(cfg.chain("C1"));
    std::vector<std::string> c2 = canon(cfg.chain("C2"));
    bool found = false;
    for (const auto& [i, j] : res.pairs) {
        const auto& a = res.chains[i].curves;
        const auto& b = res.chains[j].curves;
        if ((a == c1 && b == c2) || (a == c2 && b == c1)) found = true;
    }
    CHECK(found);

    // truncation: capping below the full count sets the flag
    auto capped = find_wahl_subchains(cfg, 1);
    CHECK(capped.pairs.size() == 1);
    CHECK(capped.truncated);

    // max_pairs 0 skips pair enumeration without flagging truncation
    auto no_pairs = find_wahl_subchains(cfg, 0);
    CHECK(no_pairs.pairs.empty());
    CHECK_FALSE(no_pairs.truncated);
    CHECK(no_pairs.chains.size() == res.chains.size());
}

TEST_CASE("find_wahl_subchains corner cases") {
    // a single (-4)-curve: a line through 5 points is the length-1 Wahl chain
    Configuration cfg;
    cfg.declare_curve("L", 1, true);
    for (int i = 1; i <= 5; ++i) {
        BlowupStep s;
        s.index = i;
        s.through = {{"L", 1}};
        cfg.apply_blowup(s);
    }
    auto res = find_wahl_subchains(cfg, 10);
    REQUIRE(res.chains.size() == 1);
    CHECK(res.chains[0].curves == std::vector<std::string>{"L"});
    CHECK(res.chains[0].descriptor.p == 2);
    CHECK(res.pairs.empty());

    Configuration empty;
    auto res2 = find_wahl_subchains(empty, 10);
    CHECK(res2.chains.empty());
    CHECK_FALSE(res2.aborted);
}
