#pragma once

// Rational blow-down bookkeeping: discrepancies of the contracted Wahl
// chains, invariants of the blown-down manifold, pi_1 arithmetic
// certificates, and branch-locus invariants of the involution quotient.

#include "rbd/geometry.hpp"
#include "rbd/lattice.hpp"
#include "rbd/wahl.hpp"

#include <map>
#include <string>
#include <vector>

namespace rbd {

struct ChainData {
    std::string name;
    std::vector<std::string> curves;
    WahlDescriptor descriptor;
    RationalVector discrepancies;
};

struct DiscrepancyAssignment {
    std::vector<ChainData> chains;

    const ChainData& chain(const std::string& name) const {
        for (const auto& c : chains)
            if (c.name == name) return c;
        throw std::invalid_argument("unknown chain: " + name);
    }
};

/// Solves the adjunction system -(C_k.C_k) - 2 = sum_i d(C_i) (C_i.C_k) for
/// one chain and checks -1 < d_i < 0. Requires a negative definite chain.
inline RationalVector discrepancies(const Configuration& cfg, const std::string& chain_name) {
    const auto& members = cfg.chain(chain_name);
    IntMatrix q = intersection_matrix(cfg, members);
    if (!is_negative_definite(q))
        throw std::runtime_error("chain " + chain_name + " is not negative definite");
    RationalVector b(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) b[k] = Rat(-q(k, k) - 2);
    RationalVector d = solve_rational(q, b);
    for (const auto& di : d)
        if (di <= -1 || di >= 0)
            throw std::runtime_error("discrepancy out of (-1,0) for chain " + chain_name +
                                     ": " + rat_to_string(di));
    return d;
}

/// Recognizes every declared chain and solves its discrepancy system.
inline DiscrepancyAssignment discrepancy_assignment(const Configuration& cfg) {
    DiscrepancyAssignment out;
    for (const auto& [name, members] : cfg.chains()) {
        IntMatrix q = intersection_matrix(cfg, members);
        std::vector<Int> a;
        a.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) a.push_back(-q(i, i));
        auto w = recognize_wahl(a);
        if (!w) throw std::runtime_error("chain " + name + " is not a Wahl chain");
        out.chains.push_back({name, members, std::move(*w), discrepancies(cfg, name)});
    }
    return out;
}

struct Pi1Certificate {
    Int order_1 = 0;  // |pi_1| of the first lens-space boundary (p_1^2)
    Int order_2 = 0;
    Int gcd = 0;
    bool coprime = false;
};

struct BlowdownInvariants {
    Int b2_plus, b2_minus, b2, euler, signature;
    Rat k_squared_adjunction;  // K_W^2 - sum d_i (C_i . K_W)
    Pi1Certificate pi1;
};

/// Homology bookkeeping for the blow-down: each chain of length k is traded
/// for a rational homology ball, so b_2 drops by k and b_2^+ stays 1.
inline BlowdownInvariants blowdown_invariants(const Configuration& cfg) {
    DiscrepancyAssignment d = discrepancy_assignment(cfg);
    ValidationReport v = validate(cfg);
    if (!v.chains_disjoint) throw std::runtime_error("declared chains are not disjoint");

    BlowdownInvariants inv;
    Int total_len = 0;
    for (const auto& c : d.chains) total_len += Int(c.curves.size());
    inv.b2 = Int(1) + Int(cfg.basis_size()) - total_len;
    inv.b2_plus = 1;
    inv.b2_minus = inv.b2 - 1;
    inv.euler = inv.b2 + 2;
    inv.signature = inv.b2_plus - inv.b2_minus;

    const DivisorClass k = cfg.canonical();
    Rat corr(0);
    for (const auto& c : d.chains)
        for (std::size_t i = 0; i < c.curves.size(); ++i)
            corr += c.discrepancies[i] * Rat(pair(cfg.curve(c.curves[i]).cls, k));
    // K_W = sigma*K + sum d_i C_i, so pairing with K_W gives
    // (sigma*K)^2 = K_W^2 - sum d_i (C_i . K_W).
    inv.k_squared_adjunction = Rat(pair(k, k)) - corr;

    if (d.chains.size() == 2) {
        inv.pi1.order_1 = d.chains[0].descriptor.p * d.chains[0].descriptor.p;
        inv.pi1.order_2 = d.chains[1].descriptor.p * d.chains[1].descriptor.p;
        inv.pi1.gcd = gcd(inv.pi1.order_1, inv.pi1.order_2);
        inv.pi1.coprime = (inv.pi1.gcd == 1);
    }
    return inv;
}

struct BranchLocusInvariants {
    Int nonorientable_genus;        // n: number of RP^2 summands
    Int normal_euler;               // e
    std::vector<Int> standard_euler_set;  // {-2n, -2n+4, ..., 2n}
    bool cop_range_ok = false;      // |e| < 2n
};

/// Invariants of the branch locus of a double branched cover of S^4 along a
/// non-orientable surface: euler(cover) = 4 - chi(F) gives n = euler - 2,
/// and signature(cover) = -e/2 gives e = -2 signature.
inline BranchLocusInvariants branch_locus_from_cover(const Int& euler, const Int& signature) {
    if (euler < 3) throw std::invalid_argument("cover Euler characteristic must be >= 3");
    BranchLocusInvariants b;
    b.nonorientable_genus = euler - 2;
    b.normal_euler = -2 * signature;
    for (Int e = -2 * b.nonorientable_genus; e <= 2 * b.nonorientable_genus; e += 4)
        b.standard_euler_set.push_back(e);
    b.cop_range_ok = (abs(b.normal_euler) < 2 * b.nonorientable_genus);
    return b;
}

/// sigma*K as a rational combination of named curves.
using CurveCombination = std::vector<std::pair<std::string, Rat>>;

inline RationalClass combination_class(const Configuration& cfg, const CurveCombination& comb) {
    RationalClass c(cfg.basis_size());
    for (const auto& [name, coeff] : comb) c.add_scaled(coeff, cfg.curve(name).cls);
    return c;
}

/// Merges a user-supplied K_W curve expression (validated against the
/// lattice class of K) with -d_i C_i per chain, giving the pullback
/// sigma*K_{W'}. Every retained coefficient must be positive and the result
/// must pair to zero with every contracted curve.
inline CurveCombination sigma_star_K(const Configuration& cfg,
                                     const CurveCombination& kw_expression,
                                     const DiscrepancyAssignment& d) {
    RationalClass kw = combination_class(cfg, kw_expression);
    if (!(kw == RationalClass(cfg.canonical())))
        throw std::runtime_error("K_W expression does not represent the canonical class");

    std::map<std::string, Rat> coeff;
    std::vector<std::string> order;  // first-mention order for determinism
    auto bump = [&](const std::string& name, const Rat& v) {
        auto [it, inserted] = coeff.try_emplace(name, Rat(0));
        if (inserted) order.push_back(name);
        it->second += v;
    };
    for (const auto& [name, v] : kw_expression) bump(name, v);
    for (const auto& c : d.chains)
        for (std::size_t i = 0; i < c.curves.size(); ++i)
            bump(c.curves[i], -c.discrepancies[i]);

    CurveCombination out;
    for (const auto& name : order) {
        const Rat& v = coeff.at(name);
        if (v == 0) continue;
        if (v < 0)
            throw std::runtime_error("sigma*K coefficient of " + name +
                                     " is negative: " + rat_to_string(v));
        out.emplace_back(name, v);
    }

    RationalClass sk = combination_class(cfg, out);
    for (const auto& c : d.chains)
        for (const auto& name : c.curves)
            if (pair(sk, cfg.curve(name).cls) != 0)
                throw std::runtime_error("sigma*K not orthogonal to contracted curve " + name);
    return out;
}

} // namespace rbd
