#include "rbd/config.hpp"
#include "rbd/swcert.hpp"

#include <catch_amalgamated.hpp>

using namespace rbd;

namespace {

ConfigFile file() {
    return load_config(RBD_FIXTURE_PATH);
}

} // namespace

TEST_CASE("the declared certificate class is accepted") {
    ConfigFile cf = file();
    Configuration cfg = cf.build();
    DivisorClass alpha = cf.alpha(cfg.basis_size());
    ChamberCertificate cert = verify_certificate(cfg, alpha);
    CHECK(cert.accepted);
    CHECK(cert.alpha_sq == 10);
    CHECK(cert.k_dot_alpha == -12);
    CHECK(cert.h_dot_alpha == 15);
    for (const auto& [name, v] : cert.orthogonality) {
        INFO(name);
        CHECK(v == 0);
    }
    CHECK(cert.orthogonality.size() == 18);
}

TEST_CASE("certificate scaling invariance") {
    ConfigFile cf = file();
    Configuration cfg = cf.build();
    DivisorClass alpha = cf.alpha(cfg.basis_size());
    for (Int s : {Int(2), Int(3)}) {
        ChamberCertificate cert = verify_certificate(cfg, s * alpha);
        CHECK(cert.accepted);
        CHECK(cert.alpha_sq == s * s * 10);
        CHECK(cert.k_dot_alpha == s * -12);
    }
}

TEST_CASE("classes failing a chamber condition are rejected") {
    Configuration cfg = file().build();
    // h has positive square and h.h > 0 but meets the chains
    ChamberCertificate h = verify_certificate(cfg, DivisorClass::hyperplane(22));
    CHECK_FALSE(h.accepted);
    // zero fails h.alpha > 0
    ChamberCertificate zero = verify_certificate(cfg, DivisorClass(22));
    CHECK_FALSE(zero.accepted);
    CHECK(zero.alpha_sq == 0);
    // wrong lattice size
    CHECK_THROWS_AS(verify_certificate(cfg, DivisorClass(3)), std::invalid_argument);
}

TEST_CASE("chain-orthogonal lattice") {
    Configuration cfg = file().build();
    std::vector<DivisorClass> basis = chain_orthogonal_basis(cfg);
    CHECK(basis.size() == 5);  // 23 - 18 independent constraints
    for (const auto& b : basis)
        for (const auto& [cname, members] : cfg.chains())
            for (const auto& m : members) {
                INFO(cname << "/" << m);
                CHECK(pair(b, cfg.curve(m).cls) == 0);
            }
}

TEST_CASE("search finds a certificate and is deterministic") {
    Configuration cfg = file().build();
    auto first = search_certificate(cfg, 8);
    REQUIRE(first.has_value());
    CHECK(first->accepted);
    CHECK(first->alpha_sq >= 0);
    CHECK(first->h_dot_alpha > 0);
    CHECK(first->k_dot_alpha < 0);

    auto second = search_certificate(cfg, 8);
    REQUIRE(second.has_value());
    CHECK(first->alpha == second->alpha);
}

TEST_CASE("search respects the bound") {
    Configuration cfg = file().build();
    CHECK_FALSE(search_certificate(cfg, 0).has_value());
    CHECK_FALSE(search_certificate(cfg, -3).has_value());
}

TEST_CASE("no certificate when the complement forces K.alpha >= 0") {
    // two generic blow-ups with both exceptional curves declared as chains:
    // the orthogonal complement is spanned by h alone and K.(c h) = 3c
    Configuration cfg;
    cfg.declare_curve("L", 1, true);
    for (int i = 1; i <= 2; ++i) {
        BlowupStep s;
        s.index = i;
        cfg.apply_blowup(s);
    }
    cfg.add_chain("A", {"E1"});
    cfg.add_chain("B", {"E2"});
    std::vector<DivisorClass> basis = chain_orthogonal_basis(cfg);
    REQUIRE(basis.size() == 1);
    CHECK_FALSE(search_certificate(cfg, 10).has_value());
}
