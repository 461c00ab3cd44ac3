#pragma once

// Nakai-Moishezon verifier for K_{W'}: K^2 > 0, positive pairing of sigma*K
// with every declared non-contracted curve, and the fiber-coverage argument
// for curves disjoint from the support. The verdict is explicitly scoped to
// the declared curve list.

#include "rbd/blowdown.hpp"
#include "rbd/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace rbd {

struct AmplenessReport {
    Rat k_squared;
    std::vector<std::pair<std::string, Rat>> pairings;  // non-contracted curves, by name
    std::vector<std::string> support;
    std::optional<std::string> fiber_cover;  // fiber fully contained in the support
    bool verified = false;
    std::string failed_curve;  // set when !verified because of a curve
};

/// True iff every component of the named fiber appears in the support.
inline bool check_fiber_coverage(const Configuration& cfg,
                                 const std::vector<std::string>& support,
                                 const std::string& fiber_name) {
    std::set<std::string> sup(support.begin(), support.end());
    for (const auto& f : cfg.fibers()) {
        if (f.name != fiber_name) continue;
        for (const auto& [name, mult] : f.components)
            if (!sup.count(name)) return false;
        return true;
    }
    throw std::invalid_argument("unknown fiber: " + fiber_name);
}

inline AmplenessReport check_ampleness(const Configuration& cfg,
                                       const CurveCombination& sigma_star) {
    AmplenessReport rep;
    RationalClass sk = combination_class(cfg, sigma_star);
    rep.k_squared = pair(sk, sk);

    for (const auto& [name, coeff] : sigma_star)
        if (coeff > 0) rep.support.push_back(name);
    std::sort(rep.support.begin(), rep.support.end());

    std::set<std::string> contracted;
    for (const auto& [cname, members] : cfg.chains())
        contracted.insert(members.begin(), members.end());

    for (const auto& f : cfg.fibers()) {
        if (check_fiber_coverage(cfg, rep.support, f.name)) {
            rep.fiber_cover = f.name;
            break;
        }
    }

    std::set<std::string> sup(rep.support.begin(), rep.support.end());
    rep.verified = (rep.k_squared > 0);
    for (const auto& rec : cfg.curves()) {
        if (contracted.count(rec.name)) continue;
        Rat v = pair(sk, rec.cls);
        rep.pairings.emplace_back(rec.name, v);
        bool positive = (v > 0);
        bool off_support_excluded = (v == 0) && !sup.count(rec.name) && rep.fiber_cover;
        if (!positive && !off_support_excluded && rep.verified) {
            rep.verified = false;
            rep.failed_curve = rec.name;
        }
    }
    std::sort(rep.pairings.begin(), rep.pairings.end());
    return rep;
}

} // namespace rbd
