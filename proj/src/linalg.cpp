#include "shuffle_forge/linalg.hpp"

#include <stdexcept>

namespace sf {

namespace {

LaurentZ lcm(const LaurentZ& a, const LaurentZ& b) {
    auto q = LaurentZ::divexact(a * b, gcd(a, b));
    if (!q) throw std::logic_error("lcm: gcd does not divide");
    return *q;
}

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

ZMatrix clear_denominators(const std::vector<std::vector<RationalV>>& m) {
    ZMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        LaurentZ l(1);
        for (const auto& x : row)
            if (!x.is_zero()) l = lcm(l, x.den());
        std::vector<LaurentZ> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            if (x.is_zero()) {
                r.emplace_back();
                continue;
            }
            r.push_back(x.num() * *LaurentZ::divexact(l, x.den()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

ZMatrix clear_denominators(const std::vector<std::vector<PolyH>>& m) {
    ZMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row)
            for (const auto& c : x.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<LaurentZ> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            std::vector<std::pair<int, mpz_class>> t;
            const auto& cs = x.coeffs();
            for (std::size_t e = 0; e < cs.size(); ++e) {
                mpq_class s = cs[e] * l;
                if (s != 0) t.emplace_back(static_cast<int>(e), s.get_num());
            }
            r.push_back(LaurentZ::from_terms(t));
        }
        out.push_back(std::move(r));
    }
    return out;
}

int bareiss_rank(ZMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    LaurentZ prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        // prefer the shortest nonzero pivot to limit growth
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero() && (m[piv][c].is_zero() || m[i][c].length() < m[piv][c].length())) piv = i;
        if (m[piv][c].is_zero()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentZ x = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                auto q = LaurentZ::divexact(x, prev);
                if (!q) throw std::logic_error("bareiss: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][c] = LaurentZ();
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int modular_rank(const ZMatrix& m, unsigned long p, unsigned long v0) {
    if (m.empty()) return 0;
    const unsigned long v0inv = pow_mod(v0, p - 2, p);
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<unsigned long>> a(rows, std::vector<unsigned long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].eval_mod(v0, v0inv, p);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const unsigned long inv = pow_mod(a[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const unsigned long f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<mpq_class>> nullspace_q(std::vector<std::vector<mpq_class>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const mpq_class inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace sf
