#pragma once

// The blow-up engine: builds W = CP^2 # N CP^2-bar from declared plane curves
// and an ordered list of blow-up steps, maintaining strict-transform classes
// and the canonical class. A blow-up point is identified purely by the curves
// (with multiplicities) passing through it; no coordinates are kept.

#include "rbd/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbd {

struct CurveRecord {
    std::string name;
    int degree = 0;          // degree of the original plane curve; 0 for exceptional curves
    DivisorClass cls;        // current strict transform
    bool rational = false;
    int node_count = 0;      // ordinary nodes of the original plane curve
    bool exceptional = false;
};

struct BlowupStep {
    int index = 0;                                      // creates e_index
    std::vector<std::pair<std::string, int>> through;   // (curve name, multiplicity >= 1)
    std::optional<std::string> parent;                  // infinitely near: previous exceptional curve
    bool real_point = true;                             // equivariance assertion, carried into reports
};

struct FiberDecl {
    std::string name;
    std::vector<std::pair<std::string, int>> components;
};

class Configuration {
public:
    Configuration() = default;

    const std::vector<BlowupStep>& steps() const { return steps_; }
    std::size_t basis_size() const { return steps_.size(); }

    /// Canonical class -3h + sum e_i of the current blow-up.
    DivisorClass canonical() const { return DivisorClass::canonical(basis_size()); }

    bool has_curve(const std::string& name) const { return index_.count(name) != 0; }
    const CurveRecord& curve(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown curve: " + name);
        return curves_[it->second];
    }
    /// Curves in declaration order.
    const std::vector<CurveRecord>& curves() const { return curves_; }

    void declare_curve(const std::string& name, int degree, bool rational, int node_count = 0) {
        if (has_curve(name)) throw std::invalid_argument("duplicate curve: " + name);
        if (degree < 1) throw std::invalid_argument("declared plane curve needs degree >= 1: " + name);
        CurveRecord rec;
        rec.name = name;
        rec.degree = degree;
        rec.rational = rational;
        rec.node_count = node_count;
        DivisorClass cls(basis_size());
        cls[0] = degree;
        rec.cls = std::move(cls);
        index_[name] = curves_.size();
        curves_.push_back(std::move(rec));
    }

    void add_chain(const std::string& name, std::vector<std::string> members) {
        for (const auto& m : members) curve(m);  // existence check
        chains_.push_back({name, std::move(members)});
    }
    const std::vector<std::pair<std::string, std::vector<std::string>>>& chains() const {
        return chains_;
    }
    const std::vector<std::string>& chain(const std::string& name) const {
        for (const auto& [n, members] : chains_)
            if (n == name) return members;
        throw std::invalid_argument("unknown chain: " + name);
    }

    void add_fiber(FiberDecl f) {
        for (const auto& [m, mult] : f.components) {
            curve(m);
            if (mult < 1) throw std::invalid_argument("fiber multiplicity must be >= 1");
        }
        fibers_.push_back(std::move(f));
    }
    const std::vector<FiberDecl>& fibers() const { return fibers_; }

    bool anticanonical_fibered = false;

    /// Blows up one point. The basis gains e_index, every curve through the
    /// point loses m * e_index from its strict transform, and a new
    /// exceptional record E_index with class e_index appears.
    void apply_blowup(const BlowupStep& step) {
        if (step.index != static_cast<int>(basis_size()) + 1)
            throw std::invalid_argument("blow-up index out of order: expected " +
                                        std::to_string(basis_size() + 1) + ", got " +
                                        std::to_string(step.index));
        for (const auto& [name, mult] : step.through) {
            curve(name);
            if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1 at " + name);
        }
        if (step.parent && !curve(*step.parent).exceptional)
            throw std::invalid_argument("parent must be an exceptional curve: " + *step.parent);

        steps_.push_back(step);
        const std::size_t n = basis_size();
        for (auto& rec : curves_) rec.cls.extend();
        for (const auto& [name, mult] : step.through)
            curves_[index_.at(name)].cls[n] -= mult;

        CurveRecord rec;
        rec.name = "E" + std::to_string(step.index);
        if (has_curve(rec.name))
            throw std::invalid_argument("exceptional name already taken: " + rec.name);
        rec.degree = 0;
        rec.rational = true;
        rec.exceptional = true;
        rec.cls = DivisorClass::exceptional(n, n);
        index_[rec.name] = curves_.size();
        curves_.push_back(std::move(rec));
    }

private:
    std::vector<BlowupStep> steps_;
    std::vector<CurveRecord> curves_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::pair<std::string, std::vector<std::string>>> chains_;
    std::vector<FiberDecl> fibers_;
};

inline Configuration apply_blowup(Configuration cfg, const BlowupStep& step) {
    cfg.apply_blowup(step);
    return cfg;
}

/// Pairwise intersection matrix of the named strict transforms.
inline IntMatrix intersection_matrix(const Configuration& cfg,
                                     const std::vector<std::string>& names) {
    IntMatrix m(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < names.size(); ++j)
            m(i, j) = pair(cfg.curve(names[i]).cls, cfg.curve(names[j]).cls);
    return m;
}

struct AdjunctionCheck {
    std::string curve;
    Int self_intersection;
    Int k_pairing;
    bool ok = false;  // cls^2 + cls.K == -2
};

struct BezoutCheck {
    std::string a, b;
    Int degree_product;       // c*d
    Int surviving;            // pair of the strict transforms; must be >= 0
    bool ok = false;
};

struct ValidationReport {
    std::vector<AdjunctionCheck> adjunction;
    std::vector<BezoutCheck> bezout;
    bool chains_disjoint = true;
    std::vector<std::pair<std::string, std::string>> chain_overlaps;  // offending curve pairs
    bool fibers_consistent = true;
    std::optional<DivisorClass> fiber;     // common fiber class, when consistent
    bool anticanonical_ok = true;          // f == -K when declared anticanonical-fibered
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Consistency layer: adjunction for rational curves, Bezout residuals for
/// plane curves, pairwise chain orthogonality, and fiber class agreement.
inline ValidationReport validate(const Configuration& cfg) {
    ValidationReport rep;
    const DivisorClass k = cfg.canonical();

    for (const auto& rec : cfg.curves()) {
        if (!rec.rational) continue;
        AdjunctionCheck c;
        c.curve = rec.name;
        c.self_intersection = pair(rec.cls, rec.cls);
        c.k_pairing = pair(rec.cls, k);
        c.ok = (c.self_intersection + c.k_pairing == -2);
        if (!c.ok)
            rep.violations.push_back("adjunction fails for " + rec.name + ": " +
                                     c.self_intersection.str() + " + " + c.k_pairing.str() +
                                     " != -2");
        rep.adjunction.push_back(std::move(c));
    }

    const auto& curves = cfg.curves();
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].exceptional) continue;
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            if (curves[j].exceptional) continue;
            BezoutCheck c;
            c.a = curves[i].name;
            c.b = curves[j].name;
            c.degree_product = Int(curves[i].degree) * curves[j].degree;
            c.surviving = pair(curves[i].cls, curves[j].cls);
            c.ok = (c.surviving >= 0);
            if (!c.ok)
                rep.violations.push_back("Bezout residual negative for " + c.a + "." + c.b +
                                         ": " + c.surviving.str());
            rep.bezout.push_back(std::move(c));
        }
    }

    const auto& chains = cfg.chains();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = i + 1; j < chains.size(); ++j) {
            for (const auto& a : chains[i].second) {
                for (const auto& b : chains[j].second) {
                    if (pair(cfg.curve(a).cls, cfg.curve(b).cls) != 0) {
                        rep.chains_disjoint = false;
                        rep.chain_overlaps.emplace_back(a, b);
                        rep.violations.push_back("chains " + chains[i].first + ", " +
                                                 chains[j].first + " meet at " + a + "." + b);
                    }
                }
            }
        }
    }

    if (!cfg.fibers().empty()) {
        std::optional<DivisorClass> common;
        for (const auto& f : cfg.fibers()) {
            DivisorClass sum(cfg.basis_size());
            for (const auto& [name, mult] : f.components)
                sum += Int(mult) * cfg.curve(name).cls;
            if (!common) {
                common = sum;
            } else if (*common != sum) {
                rep.fibers_consistent = false;
                rep.violations.push_back("fiber " + f.name + " sums to a different class");
            }
        }
        if (rep.fibers_consistent) rep.fiber = common;
        if (cfg.anticanonical_fibered && common) {
            DivisorClass minus_k(cfg.basis_size());
            minus_k -= k;
            rep.anticanonical_ok = (*common == minus_k);
            if (!rep.anticanonical_ok)
                rep.violations.push_back("declared anticanonical-fibered but f != -K");
        }
    }

    return rep;
}

/// The shared class of every declared fiber. Throws when fibers disagree or
/// none are declared.
inline DivisorClass fiber_class(const Configuration& cfg) {
    if (cfg.fibers().empty()) throw std::invalid_argument("no fibers declared");
    std::optional<DivisorClass> common;
    for (const auto& f : cfg.fibers()) {
        DivisorClass sum(cfg.basis_size());
        for (const auto& [name, mult] : f.components)
            sum += Int(mult) * cfg.curve(name).cls;
        if (!common)
            common = sum;
        else if (*common != sum)
            throw std::runtime_error("inconsistent fiber declarations: " + f.name);
    }
    return *common;
}

} // namespace rbd
