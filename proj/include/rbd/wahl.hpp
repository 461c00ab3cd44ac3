#pragma once

// Wahl-chain combinatorics: Hirzebruch-Jung (minus) continued fractions,
// recognition and generation of Wahl chains, characteristic sets over GF(2),
// and extraction of disjoint Wahl sub-chain pairs from a configuration.

#include "rbd/geometry.hpp"
#include "rbd/lattice.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rbd {

struct WahlDescriptor {
    Int p, q;                 // coprime, p > q > 0
    std::vector<Int> a;       // HJ expansion of p^2/(pq-1)
    std::pair<Int, Int> lens; // (p^2, pq-1): boundary lens space L(p^2, pq-1)
    Int knot_determinant;     // determinant of the 2-bridge knot K_{p^2,pq-1}
    std::size_t length = 0;
};

/// HJ (minus) continued fraction expansion: num/den = a1 - 1/(a2 - 1/...),
/// all entries >= 2. Requires num > den > 0 coprime.
inline std::vector<Int> hj_expand(Int num, Int den) {
    if (num <= den || den <= 0)
        throw std::invalid_argument("hj_expand needs num > den > 0");
    if (gcd(num, den) != 1)
        throw std::invalid_argument("hj_expand needs coprime input");
    std::vector<Int> a;
    while (den > 0) {
        Int q = (num + den - 1) / den;  // ceil
        a.push_back(q);
        Int next_den = q * den - num;
        num = den;
        den = next_den;
    }
    return a;
}

/// Exact value of the HJ continued fraction [a1 ... ak].
inline Rat hj_value(const std::vector<Int>& a) {
    if (a.empty()) throw std::invalid_argument("empty continued fraction");
    Rat v(a.back());
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        if (v == 0) throw std::runtime_error("continued fraction hits a zero tail");
        v = Rat(*it) - 1 / v;
    }
    return v;
}

/// Tridiagonal plumbing matrix with diagonal -a_i and off-diagonal 1.
inline IntMatrix chain_matrix(const std::vector<Int>& a) {
    IntMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m(i, i) = -a[i];
        if (i + 1 < a.size()) {
            m(i, i + 1) = 1;
            m(i + 1, i) = 1;
        }
    }
    return m;
}

/// Returns the (p,q) of the as-given orientation iff the chain is the HJ
/// expansion of p^2/(pq-1) for some coprime p > q > 0.
inline std::optional<WahlDescriptor> recognize_wahl(const std::vector<Int>& a) {
    if (a.empty()) return std::nullopt;
    for (const auto& x : a)
        if (x < 2) return std::nullopt;
    Rat v = hj_value(a);
    Int n = num(v), d = den(v);
    if (n <= d) return std::nullopt;
    Int p = exact_sqrt(n);
    if (p < 2) return std::nullopt;
    if ((d + 1) % p != 0) return std::nullopt;
    Int q = (d + 1) / p;
    if (q <= 0 || q >= p || gcd(p, q) != 1) return std::nullopt;
    if (hj_expand(n, d) != a) return std::nullopt;  // re-expansion cross-check
    WahlDescriptor w;
    w.p = p;
    w.q = q;
    w.a = a;
    w.lens = {n, d};
    w.knot_determinant = n;
    w.length = a.size();
    return w;
}

/// All Wahl chains of length <= max_length. Standard recursion seeded at [4]:
/// [a1..ak] spawns [a1+1,..,ak,2] and [2,a1,..,ak+1].
inline std::vector<WahlDescriptor> generate_wahl(std::size_t max_length) {
    std::vector<WahlDescriptor> out;
    if (max_length < 1) return out;
    std::vector<std::vector<Int>> frontier = {{Int(4)}};
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (auto& a : frontier) {
            auto w = recognize_wahl(a);
            if (!w) throw std::logic_error("generated chain failed recognition");
            out.push_back(std::move(*w));
            if (a.size() < max_length) {
                std::vector<Int> left = a;
                left.front() += 1;
                left.push_back(2);
                std::vector<Int> right;
                right.reserve(a.size() + 1);
                right.push_back(2);
                right.insert(right.end(), a.begin(), a.end());
                right.back() += 1;
                next.push_back(std::move(left));
                next.push_back(std::move(right));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const WahlDescriptor& x, const WahlDescriptor& y) {
        return std::tie(x.length, x.a) < std::tie(y.length, y.a);
    });
    return out;
}

struct CharacteristicSet {
    std::string chain;
    std::vector<std::size_t> members;  // 1-based positions along the chain
    bool unique = true;
    bool consistent = true;
};

/// Solves Q x = diag(Q) over GF(2). Unique iff det(Q) is odd.
inline CharacteristicSet characteristic_set(const IntMatrix& q, std::string chain_name = {}) {
    const std::size_t n = q.size();
    std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n));
    std::vector<std::uint8_t> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<std::uint8_t>(((q(i, j) % 2) + 2) % 2);
        b[i] = a[i][i];
    }
    Gf2Solution sol = solve_gf2(a, b);
    CharacteristicSet cs;
    cs.chain = std::move(chain_name);
    cs.unique = sol.unique;
    cs.consistent = sol.consistent;
    if (sol.consistent)
        for (std::size_t i = 0; i < n; ++i)
            if (sol.x[i]) cs.members.push_back(i + 1);
    return cs;
}

struct ChainCandidate {
    std::vector<std::string> curves;  // canonical orientation
    WahlDescriptor descriptor;        // of the canonical orientation
};

struct SubchainSearchResult {
    std::vector<ChainCandidate> chains;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into chains
    bool truncated = false;
    bool aborted = false;  // candidate-curve count over the search limit
};

namespace detail {
inline std::vector<std::string> canonical_orientation(std::vector<std::string> path) {
    std::vector<std::string> rev(path.rbegin(), path.rend());
    return std::min(path, rev);
}
} // namespace detail

/// Enumerates simple paths in the curve-intersection graph (vertices: curves
/// with self-intersection <= -2, edges: pairing exactly 1, interior pairings
/// 0) whose self-intersection sequences pass recognize_wahl; returns the
/// chains together with the vertex-disjoint, mutually orthogonal pairs.
inline SubchainSearchResult find_wahl_subchains(const Configuration& cfg,
                                                std::size_t max_pairs,
                                                std::size_t max_chain_length = 12,
                                                std::size_t max_candidates = 40) {
    SubchainSearchResult res;
    std::vector<std::string> cand;
    for (const auto& rec : cfg.curves())
        if (pair(rec.cls, rec.cls) <= -2) cand.push_back(rec.name);
    std::sort(cand.begin(), cand.end());
    if (cand.size() > max_candidates) {
        res.aborted = true;
        return res;
    }

    auto pairing = [&](const std::string& a, const std::string& b) {
        return pair(cfg.curve(a).cls, cfg.curve(b).cls);
    };

    std::set<std::vector<std::string>> seen;
    std::vector<std::string> path;

    auto record = [&]() {
        std::vector<Int> a;
        a.reserve(path.size());
        for (const auto& c : path) a.push_back(-pair(cfg.curve(c).cls, cfg.curve(c).cls));
        auto canon = detail::canonical_orientation(path);
        if (seen.count(canon)) return;
        std::vector<Int> ca;
        ca.reserve(canon.size());
        for (const auto& c : canon) ca.push_back(-pair(cfg.curve(c).cls, cfg.curve(c).cls));
        auto w = recognize_wahl(ca);
        if (!w) return;
        seen.insert(canon);
        res.chains.push_back({std::move(canon), std::move(*w)});
    };

    std::function<void()> extend = [&]() {
        record();
        if (path.size() >= max_chain_length) return;
        const std::string last = path.back();  // copied: push_back below may reallocate
        for (const auto& nb : cand) {
            if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
            if (pairing(last, nb) != 1) continue;
            bool clean = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (pairing(path[i], nb) != 0) { clean = false; break; }
            if (!clean) continue;
            path.push_back(nb);
            extend();
            path.pop_back();
        }
    };
    for (const auto& start : cand) {
        path = {start};
        extend();
    }

    std::sort(res.chains.begin(), res.chains.end(),
              [](const ChainCandidate& x, const ChainCandidate& y) {
                  return std::tie(x.curves) < std::tie(y.curves);
              });

    if (max_pairs == 0) return res;  // pair enumeration disabled
    for (std::size_t i = 0; i < res.chains.size(); ++i) {
        for (std::size_t j = i + 1; j < res.chains.size(); ++j) {
            bool ok = true;
            for (const auto& a : res.chains[i].curves) {
                for (const auto& b : res.chains[j].curves) {
                    if (a == b || pairing(a, b) != 0) { ok = false; break; }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            if (res.pairs.size() >= max_pairs) {
                res.truncated = true;  // a further pair exists beyond the cap
                return res;
            }
            res.pairs.emplace_back(i, j);
        }
    }
    return res;
}

} // namespace rbd
