#pragma once

#include "shuffle_forge/scalars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sf {

using Exp = std::vector<int>;

struct NotDivisible : std::runtime_error {
    NotDivisible(const std::string& what, std::string rem)
        : std::runtime_error(what), remainder(std::move(rem)) {}
    std::string remainder;  // printed nonzero remainder
};

// Multivariate Laurent polynomial in variables 0..nvars-1.  Terms kept in a
// map keyed by the exponent vector (lexicographic, so rbegin() is the lex
// leading term).
template <class S>
class SparsePoly {
public:
    using Terms = std::map<Exp, S>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nv_(nvars) {}

    static SparsePoly constant(int nv, const S& c) {
        SparsePoly p(nv);
        p.add_term(Exp(static_cast<std::size_t>(nv), 0), c);
        return p;
    }
    static SparsePoly monomial(const Exp& e, const S& c) {
        SparsePoly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }
    static SparsePoly var(int nv, int i, int power = 1) {
        Exp e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(i)] = power;
        return monomial(e, S(1));
    }

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    S coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? S() : it->second;
    }
    const std::pair<const Exp, S>& lead() const { return *t_.rbegin(); }

    void add_term(const Exp& e, const S& c) {
        if (sf::is_zero(c)) return;
        auto [it, ins] = t_.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (sf::is_zero(it->second)) t_.erase(it);
        }
    }
    void add_term(Exp&& e, const S& c) {
        if (sf::is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (sf::is_zero(it->second)) t_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        adopt_nv(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        adopt_nv(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r(std::max(a.nv_, b.nv_));
        if (a.is_zero() || b.is_zero()) return r;
        if (a.nv_ != b.nv_) throw std::invalid_argument("SparsePoly: variable count mismatch");
        Exp e(static_cast<std::size_t>(a.nv_));
        for (const auto& [ea, ca] : a.t_) {
            for (const auto& [eb, cb] : b.t_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly scaled(const S& c) const {
        SparsePoly r(nv_);
        if (sf::is_zero(c)) return r;
        for (const auto& [e, a] : t_) r.t_.emplace_hint(r.t_.end(), e, a * c);
        return r;
    }
    // Multiply by the monomial x^shift.
    SparsePoly shifted(const Exp& shift) const {
        SparsePoly r(nv_);
        for (const auto& [e, c] : t_) {
            Exp f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
            r.t_.emplace_hint(r.t_.end(), std::move(f), c);
        }
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // Relabel variable i as perm[i] in a space of new_nv variables.
    SparsePoly relabeled(const std::vector<int>& perm, int new_nv) const {
        SparsePoly r(new_nv);
        Exp f(static_cast<std::size_t>(new_nv));
        for (const auto& [e, c] : t_) {
            std::fill(f.begin(), f.end(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] += e[i];
            r.add_term(f, c);
        }
        return r;
    }
    SparsePoly relabeled(const std::vector<int>& perm) const { return relabeled(perm, nv_); }

    int max_degree(int var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            int x = e[static_cast<std::size_t>(var)];
            if (first || x > m) m = x;
            first = false;
        }
        return m;
    }
    int min_degree(int var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            int x = e[static_cast<std::size_t>(var)];
            if (first || x < m) m = x;
            first = false;
        }
        return m;
    }
    // Common monomial content: componentwise minimum exponent.
    Exp min_exponents() const {
        Exp m(static_cast<std::size_t>(nv_), 0);
        bool first = true;
        for (const auto& [e, c] : t_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }
    bool is_polynomial() const {
        for (const auto& [e, c] : t_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }
    // All terms have total degree `deg` (returns false for zero).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : t_) {
            int s = std::accumulate(e.begin(), e.end(), 0);
            if (d && *d != s) return std::nullopt;
            d = s;
        }
        return d;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << ScalarOps<S>::str(it->second) << ")";
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                int x = it->first[i];
                if (x == 0) continue;
                os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
                if (x != 1) os << "^" << x;
            }
        }
        return os.str();
    }

    Terms& mutable_terms() { return t_; }

private:
    void adopt_nv(const SparsePoly& o) {
        if (t_.empty() && nv_ != o.nv_) nv_ = o.nv_;
        else if (!o.t_.empty() && nv_ != o.nv_) throw std::invalid_argument("SparsePoly: variable count mismatch");
    }
    int nv_ = 0;
    Terms t_;
};

// ---------------------------------------------------------------- division

// Quotient of f by (x_var - root), root free of x_var; Laurent in x_var is
// allowed (x_var is a unit).  nullopt when the remainder is nonzero; the
// remainder is written to *rem if given.
template <class S>
std::optional<SparsePoly<S>> divide_linear(const SparsePoly<S>& f, int var, const SparsePoly<S>& root,
                                           SparsePoly<S>* rem = nullptr) {
    const int nv = f.nvars();
    SparsePoly<S> q(nv);
    if (f.is_zero()) return q;
    const auto uv = static_cast<std::size_t>(var);
    // bucket by exponent of x_var
    std::map<int, SparsePoly<S>> by;
    for (const auto& [e, c] : f.terms()) {
        Exp g = e;
        int k = g[uv];
        g[uv] = 0;
        auto it = by.find(k);
        if (it == by.end()) it = by.emplace(k, SparsePoly<S>(nv)).first;
        it->second.add_term(std::move(g), c);
    }
    const int emin = by.begin()->first;
    const int emax = by.rbegin()->first;
    SparsePoly<S> cur(nv);  // Q_e
    for (int e = emax; e > emin; --e) {
        auto it = by.find(e);
        SparsePoly<S> next = it == by.end() ? SparsePoly<S>(nv) : it->second;  // F_e
        if (e < emax) next += root * cur;
        // Q_{e-1} = F_e + root*Q_e
        cur = std::move(next);
        Exp sh(static_cast<std::size_t>(nv), 0);
        sh[uv] = e - 1;
        q += cur.shifted(sh);
    }
    SparsePoly<S> r = by.begin()->second;
    if (emax > emin) r += root * cur;
    if (!r.is_zero()) {
        if (rem) {
            Exp sh(static_cast<std::size_t>(nv), 0);
            sh[uv] = emin;
            *rem = r.shifted(sh);
        }
        return std::nullopt;
    }
    return q;
}

// Convenience: divide by x_l - c*x_r with scalar c.
template <class S>
std::optional<SparsePoly<S>> divide_binomial(const SparsePoly<S>& f, int l, const S& c, int r,
                                             SparsePoly<S>* rem = nullptr) {
    SparsePoly<S> root = SparsePoly<S>::var(f.nvars(), r).scaled(c);
    return divide_linear(f, l, root, rem);
}

template <class S>
SparsePoly<S> divide_linear_or_throw(const SparsePoly<S>& f, int var, const SparsePoly<S>& root,
                                     const std::string& what) {
    SparsePoly<S> rem;
    auto q = divide_linear(f, var, root, &rem);
    if (!q) throw NotDivisible(what, rem.str());
    return *q;
}

// Exact division f / g.  Both are shifted to polynomials first; g's monomial
// content is handled separately so that ordinary lex division terminates.
template <class S>
struct DivResult {
    bool ok = false;
    SparsePoly<S> quotient;
    SparsePoly<S> remainder;
};

template <class S>
DivResult<S> try_exact_div(const SparsePoly<S>& f, const SparsePoly<S>& g) {
    if (g.is_zero()) throw ArithmeticError("exact_div by zero polynomial");
    const int nv = std::max(f.nvars(), g.nvars());
    DivResult<S> res;
    res.quotient = SparsePoly<S>(nv);
    res.remainder = SparsePoly<S>(nv);
    if (f.is_zero()) {
        res.ok = true;
        return res;
    }
    Exp gm = g.min_exponents();
    Exp fm = f.min_exponents();
    Exp neg_g(gm.size()), neg_f(fm.size());
    for (std::size_t i = 0; i < gm.size(); ++i) {
        neg_g[i] = -gm[i];
        neg_f[i] = -fm[i];
    }
    SparsePoly<S> gg = g.shifted(neg_g);
    SparsePoly<S> r = f.shifted(neg_f);
    const auto& [glead_e, glead_c] = gg.lead();
    SparsePoly<S> q(nv);
    while (!r.is_zero()) {
        const auto& [le, lc] = r.lead();
        Exp d(le.size());
        bool ok = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = le[i] - glead_e[i];
            if (d[i] < 0) ok = false;
        }
        auto c = ok ? ScalarOps<S>::div(lc, glead_c) : std::nullopt;
        if (!c) {
            res.remainder = r;
            return res;
        }
        SparsePoly<S> t = SparsePoly<S>::monomial(d, *c);
        q += t;
        r -= t * gg;
    }
    // f = x^fm * (q * gg) and g = x^gm * gg, so f/g = x^(fm - gm) * q
    Exp sh(fm.size());
    for (std::size_t i = 0; i < sh.size(); ++i) sh[i] = fm[i] - gm[i];
    res.quotient = q.shifted(sh);
    res.ok = true;
    return res;
}

template <class S>
SparsePoly<S> exact_div(const SparsePoly<S>& f, const SparsePoly<S>& g) {
    auto r = try_exact_div(f, g);
    if (!r.ok) throw NotDivisible("exact_div: not divisible", r.remainder.str());
    return r.quotient;
}

// Divide every coefficient by the scalar c; nullopt if some quotient fails.
template <class S>
std::optional<SparsePoly<S>> divide_scalar(const SparsePoly<S>& f, const S& c) {
    SparsePoly<S> r(f.nvars());
    for (const auto& [e, a] : f.terms()) {
        auto q = ScalarOps<S>::div(a, c);
        if (!q) return std::nullopt;
        r.add_term(e, *q);
    }
    return r;
}

// ------------------------------------------------------------ substitution

// Each old variable i becomes scalars[i] * y_{target[i]}.  Handles negative
// exponents provided the scalars are invertible.
template <class S>
SparsePoly<S> substitute_monomial(const SparsePoly<S>& f, const std::vector<int>& target,
                                  const std::vector<S>& scal, int new_nv) {
    SparsePoly<S> r(new_nv);
    Exp g(static_cast<std::size_t>(new_nv));
    // cache scalar powers
    std::vector<std::map<int, S>> cache(target.size());
    auto power = [&](std::size_t i, int k) -> const S& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        S base = scal[i];
        if (k < 0) base = *ScalarOps<S>::div(S(1), base);
        S acc(1);
        for (int j = 0; j < std::abs(k); ++j) acc = acc * base;
        return cache[i].emplace(k, acc).first->second;
    };
    for (const auto& [e, c] : f.terms()) {
        std::fill(g.begin(), g.end(), 0);
        S coef = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] < 0) throw std::invalid_argument("substitute: unassigned variable");
            g[static_cast<std::size_t>(target[i])] += e[i];
            coef = coef * power(i, e[i]);
        }
        r.add_term(g, coef);
    }
    return r;
}

// Each old variable i becomes the polynomial images[i]; nonnegative exponents only.
template <class S>
SparsePoly<S> substitute_poly(const SparsePoly<S>& f, const std::vector<SparsePoly<S>>& images, int new_nv) {
    SparsePoly<S> r(new_nv);
    std::vector<std::vector<SparsePoly<S>>> pw(images.size());
    auto power = [&](std::size_t i, int k) -> const SparsePoly<S>& {
        auto& v = pw[i];
        if (v.empty()) v.push_back(SparsePoly<S>::constant(new_nv, S(1)));
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
        return v[static_cast<std::size_t>(k)];
    };
    for (const auto& [e, c] : f.terms()) {
        SparsePoly<S> term = SparsePoly<S>::constant(new_nv, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) throw std::invalid_argument("substitute_poly: negative exponent");
            if (i >= images.size() || images[i].nvars() != new_nv)
                throw std::invalid_argument("substitute: unassigned variable");
            term = term * power(i, e[i]);
        }
        r += term;
    }
    return r;
}

// ----------------------------------------------------------- symmetrization

// Variables are grouped in consecutive blocks (one per color); blocks[c] is
// the block size.  Permutations act within blocks.
inline std::vector<int> block_offsets(const std::vector<int>& blocks) {
    std::vector<int> off(blocks.size() + 1, 0);
    for (std::size_t c = 0; c < blocks.size(); ++c) off[c + 1] = off[c] + blocks[c];
    return off;
}

// Calls fn(perm, sign) for every element of the product of symmetric groups.
inline void for_each_block_permutation(const std::vector<int>& blocks,
                                       const std::function<void(const std::vector<int>&, int)>& fn) {
    const auto off = block_offsets(blocks);
    const int n = off.back();
    std::vector<std::vector<int>> per(blocks.size());
    for (std::size_t c = 0; c < blocks.size(); ++c) {
        per[c].resize(static_cast<std::size_t>(blocks[c]));
        std::iota(per[c].begin(), per[c].end(), 0);
    }
    auto parity = [](const std::vector<int>& p) {
        int s = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == blocks.size()) {
            int sign = 1;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                for (int i = 0; i < blocks[b]; ++i)
                    perm[static_cast<std::size_t>(off[b] + i)] = off[b] + per[b][static_cast<std::size_t>(i)];
                sign *= parity(per[b]);
            }
            fn(perm, sign);
            return;
        }
        std::sort(per[c].begin(), per[c].end());
        do {
            rec(c + 1);
        } while (std::next_permutation(per[c].begin(), per[c].end()));
    };
    rec(0);
}

template <class S>
SparsePoly<S> symmetrize(const SparsePoly<S>& f, const std::vector<int>& blocks) {
    const int n = block_offsets(blocks).back();
    if (f.nvars() != n) throw std::invalid_argument("symmetrize: variable outside declared range");
    SparsePoly<S> r(n);
    for_each_block_permutation(blocks, [&](const std::vector<int>& p, int) { r += f.relabeled(p); });
    return r;
}

template <class S>
SparsePoly<S> antisymmetrize(const SparsePoly<S>& f, const std::vector<int>& blocks) {
    const int n = block_offsets(blocks).back();
    SparsePoly<S> r(n);
    for_each_block_permutation(blocks, [&](const std::vector<int>& p, int sign) {
        if (sign > 0) r += f.relabeled(p);
        else r -= f.relabeled(p);
    });
    return r;
}

template <class S>
bool is_block_symmetric(const SparsePoly<S>& f, const std::vector<int>& blocks) {
    const auto off = block_offsets(blocks);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
        for (int i = 0; i + 1 < blocks[c]; ++i) {
            std::vector<int> p(static_cast<std::size_t>(off.back()));
            std::iota(p.begin(), p.end(), 0);
            std::swap(p[static_cast<std::size_t>(off[c] + i)], p[static_cast<std::size_t>(off[c] + i + 1)]);
            if (f.relabeled(p) != f) return false;
        }
    }
    return true;
}

// Vandermonde product prod_c prod_{r<s} (x_{c,r} - x_{c,s}).
template <class S>
SparsePoly<S> block_vandermonde(const std::vector<int>& blocks) {
    const auto off = block_offsets(blocks);
    const int n = off.back();
    SparsePoly<S> v = SparsePoly<S>::constant(n, S(1));
    for (std::size_t c = 0; c < blocks.size(); ++c)
        for (int r = 0; r < blocks[c]; ++r)
            for (int s = r + 1; s < blocks[c]; ++s)
                v = v * (SparsePoly<S>::var(n, off[c] + r) - SparsePoly<S>::var(n, off[c] + s));
    return v;
}

// Exact division by the block Vandermonde, factor by factor.
template <class S>
SparsePoly<S> divide_block_vandermonde(SparsePoly<S> f, const std::vector<int>& blocks) {
    const auto off = block_offsets(blocks);
    const int n = off.back();
    for (std::size_t c = 0; c < blocks.size(); ++c)
        for (int r = 0; r < blocks[c]; ++r)
            for (int s = r + 1; s < blocks[c]; ++s)
                f = divide_linear_or_throw(f, off[c] + r, SparsePoly<S>::var(n, off[c] + s),
                                           "antisymmetric part not divisible by Vandermonde factor");
    return f;
}

}  // namespace sf
