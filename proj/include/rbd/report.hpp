#pragma once

// End-to-end verification pipeline and report emission. Reports are
// deterministic: exact rationals as "num/den" strings, fixed key order.

#include "rbd/ampleness.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/config.hpp"
#include "rbd/swcert.hpp"
#include "rbd/wahl.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace rbd {

using Json = nlohmann::ordered_json;

inline Json rat_json(const Rat& r, bool approx) {
    if (!approx) return rat_to_string(r);
    Json j;
    j["exact"] = rat_to_string(r);
    std::ostringstream os;
    os << num(r).convert_to<double>() / den(r).convert_to<double>();
    j["approx"] = os.str();
    return j;
}

struct VerifyOutcome {
    int exit_code = 0;  // 0 ok, 2 validation failure, 3 check failure
    Json json;
    std::string text;
};

inline Json divisor_json(const DivisorClass& d) {
    Json arr = Json::array();
    for (std::size_t i = 0; i <= d.n(); ++i) arr.push_back(d[i].str());
    return arr;
}

/// Runs the whole pipeline: validate, recognize chains, discrepancies,
/// blow-down invariants, sigma*K, ampleness, chamber certificate, branch
/// locus. Collects a machine-readable report plus a text rendering.
inline VerifyOutcome run_verify(const ConfigFile& cf, bool approx = false) {
    VerifyOutcome out;
    Json& j = out.json;
    std::ostringstream text;
    std::vector<std::string> failures;
    bool validation_failed = false;

    Configuration cfg = cf.build();
    j["surface"] = {{"name", cf.surface_name},
                    {"base", cf.base},
                    {"blowups", cfg.basis_size()},
                    {"b2", cfg.basis_size() + 1}};

    // 1. consistency of the declared configuration
    ValidationReport val = validate(cfg);
    {
        Json jv;
        jv["ok"] = val.ok();
        Json adj = Json::array();
        for (const auto& a : val.adjunction)
            adj.push_back({{"curve", a.curve},
                           {"self_intersection", a.self_intersection.str()},
                           {"k_pairing", a.k_pairing.str()},
                           {"ok", a.ok}});
        jv["adjunction"] = adj;
        Json bez = Json::array();
        for (const auto& b : val.bezout)
            bez.push_back({{"curves", b.a + "." + b.b},
                           {"degree_product", b.degree_product.str()},
                           {"surviving_intersections", b.surviving.str()},
                           {"ok", b.ok}});
        jv["bezout"] = bez;
        jv["chains_disjoint"] = val.chains_disjoint;
        jv["fibers_consistent"] = val.fibers_consistent;
        if (val.fiber) jv["fiber_class"] = divisor_json(*val.fiber);
        jv["violations"] = val.violations;
        j["validation"] = jv;
        text << "validation: " << (val.ok() ? "ok" : "FAILED") << "\n";
        for (const auto& v : val.violations) text << "  ! " << v << "\n";
        if (!val.ok()) validation_failed = true;
    }

    // 2. chain recognition + discrepancies
    DiscrepancyAssignment da;
    bool chains_ok = true;
    try {
        da = discrepancy_assignment(cfg);
        Json jc = Json::array();
        for (const auto& c : da.chains) {
            Json e;
            e["name"] = c.name;
            e["curves"] = c.curves;
            Json a = Json::array();
            for (const auto& x : c.descriptor.a) a.push_back(x.str());
            e["hj"] = a;
            e["p"] = c.descriptor.p.str();
            e["q"] = c.descriptor.q.str();
            e["lens_space"] = {c.descriptor.lens.first.str(), c.descriptor.lens.second.str()};
            e["knot_determinant"] = c.descriptor.knot_determinant.str();
            IntMatrix q = intersection_matrix(cfg, c.curves);
            e["determinant"] = det(q).str();
            e["negative_definite"] = is_negative_definite(q);
            Json dd = Json::array();
            for (const auto& v : c.discrepancies) dd.push_back(rat_json(v, approx));
            e["discrepancies"] = dd;
            CharacteristicSet cs = characteristic_set(q, c.name);
            e["characteristic_set"] = {{"members", cs.members}, {"unique", cs.unique}};
            jc.push_back(std::move(e));
            text << "chain " << c.name << ": Wahl (p,q)=(" << c.descriptor.p << ","
                 << c.descriptor.q << "), lens L(" << c.descriptor.lens.first << ","
                 << c.descriptor.lens.second << ")\n";
        }
        j["chains"] = jc;
    } catch (const std::exception& e) {
        chains_ok = false;
        failures.push_back(std::string("chains: ") + e.what());
        j["chains"] = {{"error", e.what()}};
        text << "chains: FAILED (" << e.what() << ")\n";
    }

    // 3. blow-down invariants
    if (chains_ok) {
        try {
            BlowdownInvariants inv = blowdown_invariants(cfg);
            j["blowdown"] = {{"b2_plus", inv.b2_plus.str()},
                             {"b2_minus", inv.b2_minus.str()},
                             {"euler", inv.euler.str()},
                             {"signature", inv.signature.str()},
                             {"k_squared", rat_json(inv.k_squared_adjunction, approx)},
                             {"pi1_certificate",
                              {{"order_1", inv.pi1.order_1.str()},
                               {"order_2", inv.pi1.order_2.str()},
                               {"gcd", inv.pi1.gcd.str()},
                               {"coprime", inv.pi1.coprime}}}};
            text << "blow-down: b2+=" << inv.b2_plus << " b2-=" << inv.b2_minus
                 << " chi=" << inv.euler << " sigma=" << inv.signature
                 << " K^2=" << rat_to_string(inv.k_squared_adjunction) << "\n";
            if (!inv.pi1.coprime && inv.pi1.order_1 != 0)
                failures.push_back("pi1 certificate: lens space orders not coprime");

            // branch locus of the quotient involution
            BranchLocusInvariants bl =
                branch_locus_from_cover(inv.euler, inv.signature);
            Json eul = Json::array();
            for (const auto& e : bl.standard_euler_set) eul.push_back(e.str());
            j["branch_locus"] = {{"nonorientable_genus", bl.nonorientable_genus.str()},
                                 {"normal_euler", bl.normal_euler.str()},
                                 {"standard_euler_numbers", eul},
                                 {"cop_range_ok", bl.cop_range_ok}};
            text << "branch locus: " << bl.nonorientable_genus << "RP^2, normal Euler number "
                 << bl.normal_euler << (bl.cop_range_ok ? " (within COP range)" : "") << "\n";
        } catch (const std::exception& e) {
            failures.push_back(std::string("blowdown: ") + e.what());
            text << "blow-down: FAILED (" << e.what() << ")\n";
        }
    }

    // 4. sigma*K and ampleness
    if (chains_ok && !cf.kw.empty()) {
        try {
            CurveCombination sk = sigma_star_K(cfg, cf.kw, da);
            Json jsk = Json::array();
            for (const auto& [name, v] : sk)
                jsk.push_back({{"curve", name}, {"coefficient", rat_json(v, approx)}});
            j["sigma_star_k"] = jsk;
            AmplenessReport ar = check_ampleness(cfg, sk);
            Json jp = Json::array();
            for (const auto& [name, v] : ar.pairings)
                jp.push_back({{"curve", name}, {"pairing", rat_json(v, approx)}});
            Json ja;
            ja["k_squared"] = rat_json(ar.k_squared, approx);
            ja["pairings"] = jp;
            ja["support"] = ar.support;
            if (ar.fiber_cover) ja["fiber_cover"] = *ar.fiber_cover;
            ja["verdict"] = ar.verified ? "verified-on-declared-curves"
                                        : ("failed(" + ar.failed_curve + ")");
            j["ampleness"] = ja;
            text << "ampleness: " << std::string(ja["verdict"]) << ", K^2="
                 << rat_to_string(ar.k_squared) << "\n";
            if (!ar.verified) failures.push_back("ampleness failed at " + ar.failed_curve);
        } catch (const std::exception& e) {
            failures.push_back(std::string("ampleness: ") + e.what());
            j["ampleness"] = {{"error", e.what()}};
            text << "ampleness: FAILED (" << e.what() << ")\n";
        }
    }

    // 5. chamber certificate (when [alpha] is present)
    if (cf.has_alpha) {
        try {
            ChamberCertificate cert = verify_certificate(cfg, cf.alpha(cfg.basis_size()));
            Json jo;
            for (const auto& [name, v] : cert.orthogonality) jo[name] = v.str();
            j["certificate"] = {{"alpha", divisor_json(cert.alpha)},
                                {"alpha_squared", cert.alpha_sq.str()},
                                {"k_dot_alpha", cert.k_dot_alpha.str()},
                                {"h_dot_alpha", cert.h_dot_alpha.str()},
                                {"orthogonality", jo},
                                {"accepted", cert.accepted}};
            text << "SW certificate: alpha^2=" << cert.alpha_sq << " K.alpha="
                 << cert.k_dot_alpha << " h.alpha=" << cert.h_dot_alpha << " -> "
                 << (cert.accepted ? "accepted" : "rejected") << "\n";
            if (!cert.accepted) failures.push_back("chamber certificate rejected");
        } catch (const std::exception& e) {
            failures.push_back(std::string("certificate: ") + e.what());
            text << "SW certificate: FAILED (" << e.what() << ")\n";
        }
    }

    bool all_ok = !validation_failed && failures.empty();
    j["checks_failed"] = failures;
    j["exotic_candidate_verified"] = all_ok;
    text << (all_ok ? "all declared checks passed: rational blow-down data is consistent "
                      "with an exotic manifold\n"
                    : "NOT verified\n");

    out.exit_code = validation_failed ? 2 : (failures.empty() ? 0 : 3);
    out.text = text.str();
    return out;
}

} // namespace rbd
