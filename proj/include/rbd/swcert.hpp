#pragma once

// Seiberg-Witten chamber certificates. A certificate is a class alpha with
// alpha^2 >= 0, alpha.h > 0, K.alpha < 0 (K = 3h - sum e_i) and alpha
// orthogonal to every chain curve; such a class pins down the chamber in
// which the wall-crossing formula forces SW != 0 after the blow-down.

#include "rbd/geometry.hpp"
#include "rbd/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rbd {

struct ChamberCertificate {
    DivisorClass alpha;
    Int alpha_sq, k_dot_alpha, h_dot_alpha;
    std::map<std::string, Int> orthogonality;  // chain curve -> pairing (all 0 when accepted)
    bool accepted = false;
};

/// The SW class of the chamber argument: 3h - sum e_i (minus the canonical
/// class of the blow-up).
inline DivisorClass sw_k_class(std::size_t n) {
    DivisorClass k(n);
    k[0] = 3;
    for (std::size_t i = 1; i <= n; ++i) k[i] = -1;
    return k;
}

inline ChamberCertificate verify_certificate(const Configuration& cfg,
                                             const DivisorClass& alpha) {
    if (alpha.n() != cfg.basis_size())
        throw std::invalid_argument("certificate class has wrong basis size");
    ChamberCertificate cert;
    cert.alpha = alpha;
    cert.alpha_sq = pair(alpha, alpha);
    cert.k_dot_alpha = pair(sw_k_class(cfg.basis_size()), alpha);
    cert.h_dot_alpha = pair(DivisorClass::hyperplane(cfg.basis_size()), alpha);
    bool orth = true;
    for (const auto& [cname, members] : cfg.chains()) {
        for (const auto& m : members) {
            Int v = pair(cfg.curve(m).cls, alpha);
            cert.orthogonality[m] = v;
            if (v != 0) orth = false;
        }
    }
    cert.accepted =
        orth && cert.alpha_sq >= 0 && cert.h_dot_alpha > 0 && cert.k_dot_alpha < 0;
    return cert;
}

/// Integer basis of {x : x.C = 0 for every chain curve C}, computed as the
/// saturated kernel lattice of the pairing constraints via a row-style
/// Hermite reduction of the transposed constraint matrix.
inline std::vector<DivisorClass> chain_orthogonal_basis(const Configuration& cfg) {
    const std::size_t dim = cfg.basis_size() + 1;
    std::vector<std::vector<Int>> constraints;  // functional rows: x . C as a dot product
    for (const auto& [cname, members] : cfg.chains()) {
        for (const auto& m : members) {
            const DivisorClass& c = cfg.curve(m).cls;
            std::vector<Int> row(dim);
            row[0] = c[0];
            for (std::size_t i = 1; i < dim; ++i) row[i] = -c[i];
            constraints.push_back(std::move(row));
        }
    }
    const std::size_t k = constraints.size();

    // M = constraints^T (dim x k); unimodular row ops on M tracked in U.
    // Rows of U mapping to zero rows of the reduced M span the kernel lattice.
    std::vector<std::vector<Int>> m(dim, std::vector<Int>(k));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = constraints[j][i];
    std::vector<std::vector<Int>> u(dim, std::vector<Int>(dim));
    for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < dim; ++c) {
        while (true) {
            std::size_t best = dim;
            for (std::size_t i = r; i < dim; ++i)
                if (m[i][c] != 0 && (best == dim || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == dim) break;
            std::swap(m[r], m[best]);
            std::swap(u[r], u[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < dim; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (std::size_t j = 0; j < k; ++j) m[i][j] -= q * m[r][j];
                for (std::size_t j = 0; j < dim; ++j) u[i][j] -= q * u[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][c] != 0) ++r;
    }

    std::vector<DivisorClass> basis;
    for (std::size_t i = r; i < dim; ++i) {
        DivisorClass b(cfg.basis_size());
        bool zero = true;
        for (std::size_t j = 0; j < dim; ++j) {
            b[j] = u[i][j];
            if (b[j] != 0) zero = false;
        }
        if (!zero) basis.push_back(std::move(b));
    }
    return basis;
}

/// Deterministic box search over the chain-orthogonal lattice: coefficient
/// vectors with entries in [-bound, bound], lexicographic order, first
/// accepted certificate wins.
inline std::optional<ChamberCertificate> search_certificate(const Configuration& cfg,
                                                            long bound) {
    if (bound < 1) return std::nullopt;
    std::vector<DivisorClass> basis = chain_orthogonal_basis(cfg);
    if (basis.empty()) return std::nullopt;
    const std::size_t r = basis.size();

    const DivisorClass h = DivisorClass::hyperplane(cfg.basis_size());
    const DivisorClass ksw = sw_k_class(cfg.basis_size());

    // Gram data so the inner loop never touches full classes.
    std::vector<std::vector<Int>> gram(r, std::vector<Int>(r));
    std::vector<Int> h_dot(r), k_dot(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) gram[i][j] = pair(basis[i], basis[j]);
        h_dot[i] = pair(h, basis[i]);
        k_dot[i] = pair(ksw, basis[i]);
    }

    std::vector<long> co(r, -bound);
    while (true) {
        Int sq = 0, hv = 0, kv = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (co[i] == 0) continue;
            hv += co[i] * h_dot[i];
            kv += co[i] * k_dot[i];
            for (std::size_t j = 0; j < r; ++j)
                if (co[j] != 0) sq += Int(co[i]) * co[j] * gram[i][j];
        }
        if (sq >= 0 && hv > 0 && kv < 0) {
            DivisorClass alpha(cfg.basis_size());
            for (std::size_t i = 0; i < r; ++i)
                if (co[i] != 0) alpha += Int(co[i]) * basis[i];
            ChamberCertificate cert = verify_certificate(cfg, alpha);
            if (cert.accepted) return cert;
        }
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (co[i] < bound) {
                ++co[i];
                for (std::size_t j = i + 1; j < r; ++j) co[j] = -bound;
                break;
            }
            if (i == 0) return std::nullopt;
        }
    }
}

} // namespace rbd
