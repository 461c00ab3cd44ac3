#pragma once

// Exact arithmetic in the lattice H_2(CP^2 # N CP^2-bar) with its diagonal
// signature-(1,N) pairing, plus the small exact linear algebra (over Q and
// over GF(2)) the rest of the library is built on.

#include "rbd/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rbd {

/// Integer class in the basis (h; e_1 ... e_n). Entry 0 is the coefficient
/// of h, entry i (1-based) the coefficient of e_i.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::size_t n) : coeffs_(n + 1, 0) {}
    DivisorClass(std::size_t n, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != n + 1) throw std::invalid_argument("coefficient count != n+1");
    }

    static DivisorClass hyperplane(std::size_t n) {
        DivisorClass c(n);
        c.coeffs_[0] = 1;
        return c;
    }
    static DivisorClass exceptional(std::size_t n, std::size_t i) {
        if (i < 1 || i > n) throw std::invalid_argument("exceptional index out of range");
        DivisorClass c(n);
        c.coeffs_[i] = 1;
        return c;
    }
    /// Canonical class -3h + sum e_i.
    static DivisorClass canonical(std::size_t n) {
        DivisorClass c(n);
        c.coeffs_[0] = -3;
        for (std::size_t i = 1; i <= n; ++i) c.coeffs_[i] = 1;
        return c;
    }

    std::size_t n() const { return coeffs_.size() - 1; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    Int& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Appends a zero coefficient for a newly created exceptional class.
    void extend() { coeffs_.push_back(0); }

    bool operator==(const DivisorClass& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DivisorClass& o) const { return coeffs_ != o.coeffs_; }

    DivisorClass& operator+=(const DivisorClass& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Int& k, DivisorClass a) {
        for (auto& c : a.coeffs_) c *= k;
        return a;
    }

    std::string str() const {
        std::string s = "(" + coeffs_[0].str();
        for (std::size_t i = 1; i < coeffs_.size(); ++i) s += "," + coeffs_[i].str();
        return s + ")";
    }

private:
    void check_same(const DivisorClass& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("divisor classes live in different lattices");
    }
    std::vector<Int> coeffs_;
};

/// Intersection pairing a0*b0 - sum_i a_i*b_i.
inline Int pair(const DivisorClass& a, const DivisorClass& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("cannot pair classes of different basis size");
    Int s = a[0] * b[0];
    for (std::size_t i = 1; i <= a.n(); ++i) s -= a[i] * b[i];
    return s;
}

/// Rational class: exact rational coefficients over the same basis.
class RationalClass {
public:
    RationalClass() = default;
    explicit RationalClass(std::size_t n) : coeffs_(n + 1, Rat(0)) {}
    explicit RationalClass(const DivisorClass& d) : coeffs_(d.n() + 1) {
        for (std::size_t i = 0; i <= d.n(); ++i) coeffs_[i] = Rat(d[i]);
    }

    std::size_t n() const { return coeffs_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
    Rat& operator[](std::size_t i) { return coeffs_[i]; }

    RationalClass& add_scaled(const Rat& k, const DivisorClass& d) {
        if (n() != d.n()) throw std::invalid_argument("basis size mismatch");
        for (std::size_t i = 0; i <= n(); ++i) coeffs_[i] += k * Rat(d[i]);
        return *this;
    }
    bool operator==(const RationalClass& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

inline Rat pair(const RationalClass& a, const RationalClass& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("cannot pair classes of different basis size");
    Rat s = a[0] * b[0];
    for (std::size_t i = 1; i <= a.n(); ++i) s -= a[i] * b[i];
    return s;
}

inline Rat pair(const RationalClass& a, const DivisorClass& b) {
    return pair(a, RationalClass(b));
}

using RationalVector = std::vector<Rat>;

/// Dense square integer matrix (chain intersection matrices and the like).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    std::size_t size() const { return n_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    bool symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    IntMatrix leading_minor(std::size_t k) const {
        IntMatrix m(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant via fraction-free Bareiss elimination.
inline Int det(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Solves A x = b exactly over Q. Throws on a singular matrix.
inline RationalVector solve_rational(const IntMatrix& a, const RationalVector& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("right-hand side size mismatch");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("singular matrix in solve_rational");
        std::swap(m[c], m[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

/// Sylvester criterion: leading principal minors alternate in sign starting
/// negative. Exact; requires a symmetric matrix.
inline bool is_negative_definite(const IntMatrix& a) {
    if (!a.symmetric()) throw std::invalid_argument("matrix is not symmetric");
    Int expected_sign = -1;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        Int d = det(a.leading_minor(k));
        if (expected_sign > 0 ? d <= 0 : d >= 0) return false;
        expected_sign = -expected_sign;
    }
    return true;
}

/// Square system over GF(2), rows as bit vectors.
struct Gf2Solution {
    std::vector<std::uint8_t> x;  // one solution (empty when inconsistent)
    bool consistent = true;
    bool unique = true;
};

/// Solves A x = b over GF(2). When the matrix is singular the solution is
/// flagged non-unique (free variables set to 0) or inconsistent.
inline Gf2Solution solve_gf2(const std::vector<std::vector<std::uint8_t>>& a,
                             const std::vector<std::uint8_t>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("right-hand side size mismatch");
    std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j] & 1u;
        m[i][n] = b[i] & 1u;
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t p = row;
        while (p < n && !m[p][c]) ++p;
        if (p == n) continue;
        std::swap(m[row], m[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != row && m[r][c])
                for (std::size_t j = c; j <= n; ++j) m[r][j] ^= m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    Gf2Solution sol;
    for (std::size_t r = row; r < n; ++r) {
        if (m[r][n]) {
            sol.consistent = false;
            sol.unique = false;
            return sol;
        }
    }
    sol.unique = (row == n);
    sol.x.assign(n, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) sol.x[pivot_col[r]] = m[r][n];
    return sol;
}

} // namespace rbd
