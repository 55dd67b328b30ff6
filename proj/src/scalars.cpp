#include "shuffle_forge/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace sf {

// ---------------------------------------------------------------- LaurentZ

LaurentZ::LaurentZ(long c) {
    if (c != 0) c_.emplace_back(c);
}

LaurentZ::LaurentZ(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

LaurentZ LaurentZ::monomial(const mpz_class& c, int e) {
    LaurentZ r;
    if (c != 0) {
        r.lo_ = e;
        r.c_.push_back(c);
    }
    return r;
}

LaurentZ LaurentZ::from_terms(const std::vector<std::pair<int, mpz_class>>& terms) {
    LaurentZ r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
}

void LaurentZ::trim() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == 0) ++a;
    if (a == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t b = c_.size();
    while (c_[b - 1] == 0) --b;
    if (a > 0 || b < c_.size()) {
        c_ = std::vector<mpz_class>(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b));
        lo_ += static_cast<int>(a);
    }
}

mpz_class LaurentZ::coeff(int e) const {
    if (c_.empty() || e < lo_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - lo_)];
}

std::vector<std::pair<int, mpz_class>> LaurentZ::terms() const {
    std::vector<std::pair<int, mpz_class>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
    return out;
}

LaurentZ LaurentZ::bar() const {
    LaurentZ r;
    if (c_.empty()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.lo_ = -high();
    return r;
}

LaurentZ LaurentZ::shifted(int e) const {
    LaurentZ r = *this;
    if (!r.c_.empty()) r.lo_ += e;
    return r;
}

mpz_class LaurentZ::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentZ LaurentZ::divided_by_integer(const mpz_class& d) const {
    LaurentZ r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

LaurentZ LaurentZ::operator-() const {
    LaurentZ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(high(), o.high());
    if (lo < lo_ || hi > high()) {
        std::vector<mpz_class> n(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < c_.size(); ++i) n[static_cast<std::size_t>(lo_ - lo) + i] = c_[i];
        c_.swap(n);
        lo_ = lo;
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& o) { return *this += -o; }

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

std::optional<LaurentZ> LaurentZ::divexact(const LaurentZ& a, const LaurentZ& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentZ();
    if (b.c_.size() > a.c_.size()) return std::nullopt;
    if (b.c_.size() == 1) {
        LaurentZ q;
        q.lo_ = a.lo_ - b.lo_;
        q.c_.resize(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!mpz_divisible_p(a.c_[i].get_mpz_t(), b.c_[0].get_mpz_t())) return std::nullopt;
            mpz_divexact(q.c_[i].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[0].get_mpz_t());
        }
        return q;
    }
    // long division from the top
    std::vector<mpz_class> r = a.c_;
    const std::size_t nb = b.c_.size();
    const std::size_t nq = a.c_.size() - nb + 1;
    std::vector<mpz_class> q(nq);
    for (std::size_t k = nq; k-- > 0;) {
        mpz_class& top = r[k + nb - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.c_.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.c_.back().get_mpz_t());
        for (std::size_t j = 0; j < nb; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    LaurentZ out;
    out.lo_ = a.lo_ - b.lo_;
    out.c_ = std::move(q);
    out.trim();
    return out;
}

unsigned long LaurentZ::eval_mod(unsigned long v0, unsigned long v0inv, unsigned long p) const {
    if (c_.empty()) return 0;
    unsigned long acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * v0) % p);
        acc = (acc + mpz_fdiv_ui(c_[i].get_mpz_t(), p)) % p;
    }
    unsigned long base = lo_ >= 0 ? v0 : v0inv;
    unsigned long e = static_cast<unsigned long>(lo_ >= 0 ? lo_ : -lo_);
    unsigned long pw = 1;
    while (e) {
        if (e & 1) pw = static_cast<unsigned long>((static_cast<unsigned __int128>(pw) * base) % p);
        base = static_cast<unsigned long>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * pw) % p);
}

mpq_class LaurentZ::eval(const mpq_class& v0) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v0 + mpq_class(c_[i]);
    mpq_class pw = 1;
    mpq_class base = lo_ >= 0 ? v0 : mpq_class(1 / v0);
    for (int e = 0; e < std::abs(lo_); ++e) pw *= base;
    return acc * pw;
}

std::string LaurentZ::str(const char* sym) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(i);
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << sym;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

// Dense Z[v] helpers for the gcd.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zprimitive(ZPoly& p) {
    ztrim(p);
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// pseudo-remainder of a by b
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const std::size_t nb = b.size();
    const mpz_class& lb = b.back();
    while (a.size() >= nb && !a.empty()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - nb;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < nb; ++j) a[shift + j] -= la * b[j];
        ztrim(a);
    }
    return a;
}

ZPoly to_zpoly(const LaurentZ& a) {
    ZPoly p;
    for (const auto& [e, c] : a.terms()) {
        std::size_t k = static_cast<std::size_t>(e - a.low());
        if (p.size() <= k) p.resize(k + 1);
        p[k] = c;
    }
    return p;
}

}  // namespace

LaurentZ gcd(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero() && b.is_zero()) return LaurentZ();
    ZPoly p = to_zpoly(a), q = to_zpoly(b);
    zprimitive(p);
    zprimitive(q);
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        if (q.size() == 1) {
            p = ZPoly{1};
            break;
        }
        ZPoly r = zprem(p, q);
        zprimitive(r);
        p = std::move(q);
        q = std::move(r);
    }
    zprimitive(p);
    std::vector<std::pair<int, mpz_class>> t;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) t.emplace_back(static_cast<int>(i), p[i]);
    return LaurentZ::from_terms(t);
}

// --------------------------------------------------------------- RationalV

RationalV::RationalV(const LaurentZ& n, const LaurentZ& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw ArithmeticError("zero denominator in Q(v)");
    canonicalize();
}

RationalV::RationalV(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    num_ = LaurentZ(c.get_num());
    den_ = LaurentZ(c.get_den());
}

void RationalV::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentZ(1);
        return;
    }
    if (!den_.is_monomial()) {
        LaurentZ g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *LaurentZ::divexact(num_, g);
            den_ = *LaurentZ::divexact(den_, g);
        }
    }
    mpz_class c = gcd(num_.content(), den_.content());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        num_ = num_.divided_by_integer(c);
        den_ = den_.divided_by_integer(c);
    }
    int s = den_.low();
    if (s != 0) {
        num_ = num_.shifted(-s);
        den_ = den_.shifted(-s);
    }
}

std::optional<std::pair<mpq_class, int>> RationalV::as_scaled_monomial() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    mpq_class q(num_.lead(), den_.lead());
    q.canonicalize();
    return std::make_pair(q, num_.low() - den_.low());
}

RationalV RationalV::inverse() const {
    if (num_.is_zero()) throw ArithmeticError("inverse of zero in Q(v)");
    return RationalV(den_, num_);
}

RationalV RationalV::operator-() const {
    RationalV r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalV operator+(const RationalV& a, const RationalV& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        RationalV r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    if (a.den_ == b.den_) return RationalV(a.num_ + b.num_, a.den_);
    return RationalV(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalV operator*(const RationalV& a, const RationalV& b) {
    if (a.is_zero() || b.is_zero()) return RationalV();
    if (a.den_.is_one() && b.den_.is_one()) {
        RationalV r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RationalV(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RationalV& a, const RationalV& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalV::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ------------------------------------------------------------------- PolyH

PolyH::PolyH(long c) {
    if (c != 0) c_.emplace_back(c);
}

PolyH::PolyH(const mpq_class& c) {
    if (c != 0) {
        c_.push_back(c);
        c_.back().canonicalize();
    }
}

PolyH PolyH::hpow(int e, const mpq_class& c) {
    PolyH r;
    if (c == 0) return r;
    r.c_.assign(static_cast<std::size_t>(e) + 1, mpq_class(0));
    r.c_.back() = c;
    r.c_.back().canonicalize();
    return r;
}

void PolyH::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int PolyH::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

mpq_class PolyH::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e)];
}

PolyH PolyH::operator-() const {
    PolyH r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyH& PolyH::operator+=(const PolyH& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyH& PolyH::operator-=(const PolyH& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyH operator*(const PolyH& a, const PolyH& b) {
    PolyH r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::optional<PolyH> PolyH::divexact(const PolyH& a, const PolyH& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero in Q[h]");
    if (a.is_zero()) return PolyH();
    if (b.c_.size() > a.c_.size()) return std::nullopt;
    std::vector<mpq_class> r = a.c_;
    const std::size_t nb = b.c_.size();
    const std::size_t nq = a.c_.size() - nb + 1;
    PolyH q;
    q.c_.assign(nq, mpq_class(0));
    for (std::size_t k = nq; k-- > 0;) {
        if (r[k + nb - 1] == 0) continue;
        q.c_[k] = r[k + nb - 1] / b.c_.back();
        for (std::size_t j = 0; j < nb; ++j) r[k + j] -= q.c_[k] * b.c_[j];
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    q.trim();
    return q;
}

PolyH PolyH::divided_by_hpow(int m) const {
    if (is_zero()) return *this;
    if (valuation() < m) throw ArithmeticError("not divisible by the requested power of h");
    PolyH r;
    r.c_.assign(c_.begin() + m, c_.end());
    return r;
}

mpq_class PolyH::eval(const mpq_class& h0) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * h0 + c_[i];
    return acc;
}

std::string PolyH::str(const char* sym) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << sym;
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

// ------------------------------------------------------- quantum integers

LaurentZ quantum_int(int l, int d) {
    if (l < 0 || d < 1) throw ArithmeticError("quantum_int: need l >= 0, d >= 1");
    LaurentZ r;
    for (int k = 0; k < l; ++k) r += LaurentZ::vpow(d * (l - 1 - 2 * k));
    return r;
}

LaurentZ quantum_factorial(int l, int d) {
    LaurentZ r(1);
    for (int k = 2; k <= l; ++k) r = r * quantum_int(k, d);
    return r;
}

LaurentZ quantum_binom(int l, int m, int d) {
    if (m < 0 || m > l) throw ArithmeticError("quantum_binom: need 0 <= m <= l");
    auto q = LaurentZ::divexact(quantum_factorial(l, d), quantum_factorial(l - m, d) * quantum_factorial(m, d));
    if (!q) throw ArithmeticError("quantum_binom: inexact division");
    return *q;
}

LaurentZ angle(int m) { return LaurentZ::vpow(m) - LaurentZ::vpow(-m); }

}  // namespace sf
