#include "rbd/config.hpp"
#include "rbd/geometry.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace rbd;

namespace {

Configuration fixture() {
    return load_config(RBD_FIXTURE_PATH).build();
}

DivisorClass cls22(std::vector<int> v) {
    DivisorClass d(22);
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i];
    return d;
}

} // namespace

TEST_CASE("single blow-up of a line") {
    Configuration cfg;
    cfg.declare_curve("L", 1, true);
    BlowupStep s;
    s.index = 1;
    s.through = {{"L", 1}};
    cfg.apply_blowup(s);

    CHECK(cfg.basis_size() == 1);
    CHECK(cfg.curve("L").cls == DivisorClass(1, {Int(1), Int(-1)}));
    CHECK(pair(cfg.curve("L").cls, cfg.curve("L").cls) == 0);
    CHECK(pair(cfg.curve("L").cls, cfg.curve("E1").cls) == 1);
    CHECK(cfg.curve("E1").exceptional);
    CHECK(pair(cfg.canonical(), cfg.canonical()) == 8);
}

TEST_CASE("blow-up bookkeeping rules") {
    Configuration cfg;
    cfg.declare_curve("L", 1, true);
    BlowupStep bad;
    bad.index = 2;  // out of order
    CHECK_THROWS_AS(cfg.apply_blowup(bad), std::invalid_argument);
    BlowupStep unknown;
    unknown.index = 1;
    unknown.through = {{"M", 1}};
    CHECK_THROWS_AS(cfg.apply_blowup(unknown), std::invalid_argument);
    BlowupStep bad_parent;
    bad_parent.index = 1;
    bad_parent.parent = "L";  // not exceptional
    CHECK_THROWS_AS(cfg.apply_blowup(bad_parent), std::invalid_argument);
    CHECK_THROWS_AS(cfg.declare_curve("L", 1, true), std::invalid_argument);
    CHECK_THROWS_AS(cfg.curve("nope"), std::invalid_argument);
}

TEST_CASE("K.K drops by one per blow-up") {
    Configuration cfg;
    cfg.declare_curve("L", 1, true);
    for (int i = 1; i <= 9; ++i) {
        BlowupStep s;
        s.index = i;
        cfg.apply_blowup(s);
        CHECK(pair(cfg.canonical(), cfg.canonical()) == 9 - i);
    }
}

TEST_CASE("pairing change law under blow-up") {
    // pair drops by m_a * m_b when both curves pass through the point
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> mult(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        Configuration cfg;
        cfg.declare_curve("A", 5, false);
        cfg.declare_curve("B", 7, false);
        Int expected = 35;
        const int steps = 1 + static_cast<int>(rng() % 6);
        for (int i = 1; i <= steps; ++i) {
            BlowupStep s;
            s.index = i;
            int ma = 0, mb = 0;
            if (rng() & 1u) {
                ma = mult(rng);
                s.through.emplace_back("A", ma);
            }
            if (rng() & 1u) {
                mb = mult(rng);
                s.through.emplace_back("B", mb);
            }
            cfg.apply_blowup(s);
            expected -= Int(ma) * mb;
            CHECK(pair(cfg.curve("A").cls, cfg.curve("B").cls) == expected);
        }
    }
}

TEST_CASE("fixture: strict transform classes after the 22 blow-ups") {
    Configuration cfg = fixture();
    REQUIRE(cfg.basis_size() == 22);

    const std::map<std::string, std::vector<int>> want = {
        {"H", {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1}},
        {"L", {1, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0}},
        {"F1", {3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, -2}},
        {"E1", {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E3", {0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E4", {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E5", {0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0}},
        {"E6", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0}},
        {"E9", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0}},
        {"E13", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E19", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0}},
        {"E20", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0}},
        {"A", {1, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}},
        {"B", {1, 0, 0, -1, -1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}},
        {"C", {1, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0}},
        {"X", {1, -1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"Y", {1, -1, 0, 0, 0, -1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"Z", {1, 0, 0, -1, 0, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0}},
        {"Q", {2, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E2", {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E7", {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"E8", {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    };
    for (const auto& [name, coeffs] : want) {
        INFO(name);
        CHECK(cfg.curve(name).cls == cls22(coeffs));
    }
    CHECK(pair(cfg.canonical(), cfg.canonical()) == -13);
}

TEST_CASE("fixture: the contracted curves are (-1)-curves") {
    Configuration cfg = fixture();
    const DivisorClass k = cfg.canonical();
    for (const std::string name : {"E11", "E16", "E15", "E10", "E17", "E12", "E18", "E22",
                                   "E21", "E14"}) {
        INFO(name);
        CHECK(pair(cfg.curve(name).cls, cfg.curve(name).cls) == -1);
        CHECK(pair(cfg.curve(name).cls, k) == -1);
    }
}

TEST_CASE("fixture: validation passes") {
    Configuration cfg = fixture();
    ValidationReport rep = validate(cfg);
    CHECK(rep.ok());
    CHECK(rep.chains_disjoint);
    CHECK(rep.fibers_consistent);
    REQUIRE(rep.fiber.has_value());

    // adjunction spot checks: F1 is a rational cubic, -6 + 4 = -2
    const auto& f1 = cfg.curve("F1");
    CHECK(pair(f1.cls, f1.cls) == -6);
    CHECK(pair(f1.cls, cfg.canonical()) == 4);
    // the multisection H misses the nodal fiber entirely
    CHECK(pair(cfg.curve("H").cls, f1.cls) == 0);
}

TEST_CASE("fixture: fiber class is 3h - e1 - ... - e9") {
    Configuration cfg = fixture();
    DivisorClass f = fiber_class(cfg);
    DivisorClass want(22);
    want[0] = 3;
    for (std::size_t i = 1; i <= 9; ++i) want[i] = -1;
    CHECK(f == want);
    CHECK(pair(f, f) == 0);
    CHECK(pair(f, cfg.canonical()) == 0);  // elliptic fibration

    FiberDecl bogus;
    bogus.name = "Ibad";
    bogus.components = {{"H", 1}};
    cfg.add_fiber(bogus);
    CHECK_THROWS_AS(fiber_class(cfg), std::runtime_error);
    ValidationReport rep = validate(cfg);
    CHECK_FALSE(rep.fibers_consistent);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("fixture: intersection matrices of the declared chains") {
    Configuration cfg = fixture();
    IntMatrix q1 = intersection_matrix(cfg, cfg.chain("C1"));
    std::vector<int> d1 = {-4, -3, -3, -2, -6, -3, -3, -2, -2};
    REQUIRE(q1.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(q1(i, i) == d1[i]);
        for (std::size_t j = i + 1; j < 9; ++j) CHECK(q1(i, j) == (j == i + 1 ? 1 : 0));
    }
    IntMatrix q2 = intersection_matrix(cfg, cfg.chain("C2"));
    std::vector<int> d2 = {-3, -3, -4, -5, -3, -2, -3, -3, -2};
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(q2(i, i) == d2[i]);
        for (std::size_t j = i + 1; j < 9; ++j) CHECK(q2(i, j) == (j == i + 1 ? 1 : 0));
    }
    CHECK(det(q1) == -4225);
    CHECK(det(q2) == -6241);
}

TEST_CASE("fixture: the 13 non-base blow-ups are at real points") {
    Configuration cfg = fixture();
    for (const auto& s : cfg.steps()) CHECK(s.real_point);
}
