#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sf {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[v, v^-1].  Dense coefficient vector starting at exponent lo_;
// both ends nonzero, empty vector means zero.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentZ(const mpz_class& c);

    static LaurentZ monomial(const mpz_class& c, int e);
    static LaurentZ vpow(int e) { return monomial(1, e); }
    static LaurentZ from_terms(const std::vector<std::pair<int, mpz_class>>& terms);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t length() const { return c_.size(); }
    mpz_class coeff(int e) const;
    const mpz_class& lead() const { return c_.back(); }
    const mpz_class& trail() const { return c_.front(); }
    std::vector<std::pair<int, mpz_class>> terms() const;

    LaurentZ bar() const;
    LaurentZ shifted(int e) const;
    mpz_class content() const;  // nonnegative gcd of coefficients
    LaurentZ divided_by_integer(const mpz_class& c) const;  // exact

    LaurentZ operator-() const;
    LaurentZ& operator+=(const LaurentZ& o);
    LaurentZ& operator-=(const LaurentZ& o);
    LaurentZ& operator*=(const LaurentZ& o) { return *this = *this * o; }
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
    friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    friend bool operator==(const LaurentZ& a, const LaurentZ& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }

    // Quotient a/b when it lies in Z[v,v^-1], otherwise nullopt.
    static std::optional<LaurentZ> divexact(const LaurentZ& a, const LaurentZ& b);
    bool divides(const LaurentZ& a) const { return divexact(a, *this).has_value(); }

    // Residue of the value at v = v0 modulo p (v0 invertible mod p).
    unsigned long eval_mod(unsigned long v0, unsigned long v0inv, unsigned long p) const;
    mpq_class eval(const mpq_class& v0) const;

    std::string str(const char* sym = "v") const;

private:
    void trim();
    int lo_ = 0;
    std::vector<mpz_class> c_;
};

// gcd in Z[v], normalized: lowest exponent 0, positive leading coefficient.
LaurentZ gcd(const LaurentZ& a, const LaurentZ& b);

// Element of Q(v).  Canonical: gcd(num, den) = 1, integer content removed,
// den has lowest exponent 0 and positive leading coefficient.
class RationalV {
public:
    RationalV() : den_(1) {}
    RationalV(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalV(const LaurentZ& n) : num_(n), den_(1) {}  // NOLINT
    RationalV(const LaurentZ& n, const LaurentZ& d);
    explicit RationalV(const mpq_class& q);

    static RationalV vpow(int e) { return RationalV(LaurentZ::vpow(e)); }

    const LaurentZ& num() const { return num_; }
    const LaurentZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    // Value is q * v^t with q rational.
    std::optional<std::pair<mpq_class, int>> as_scaled_monomial() const;

    RationalV inverse() const;
    RationalV bar() const { return RationalV(num_.bar(), den_.bar()); }

    RationalV operator-() const;
    friend RationalV operator+(const RationalV& a, const RationalV& b);
    friend RationalV operator-(const RationalV& a, const RationalV& b) { return a + (-b); }
    friend RationalV operator*(const RationalV& a, const RationalV& b);
    friend RationalV operator/(const RationalV& a, const RationalV& b) { return a * b.inverse(); }
    RationalV& operator+=(const RationalV& o) { return *this = *this + o; }
    RationalV& operator-=(const RationalV& o) { return *this = *this - o; }
    RationalV& operator*=(const RationalV& o) { return *this = *this * o; }
    friend bool operator==(const RationalV& a, const RationalV& b);
    friend bool operator!=(const RationalV& a, const RationalV& b) { return !(a == b); }

    // Re-run canonicalization; a no-op on values built through the public API.
    RationalV canonical() const { return RationalV(num_, den_); }
    std::string str() const;

private:
    void canonicalize();
    LaurentZ num_;
    LaurentZ den_;
};

// Element of Q[hbar], dense from exponent 0.
class PolyH {
public:
    PolyH() = default;
    PolyH(long c);  // NOLINT(google-explicit-constructor)
    PolyH(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    static PolyH hpow(int e, const mpq_class& c = 1);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int valuation() const;  // lowest exponent with nonzero coefficient
    mpq_class coeff(int e) const;
    const mpq_class& lead() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    PolyH operator-() const;
    PolyH& operator+=(const PolyH& o);
    PolyH& operator-=(const PolyH& o);
    PolyH& operator*=(const PolyH& o) { return *this = *this * o; }
    friend PolyH operator+(PolyH a, const PolyH& b) { return a += b; }
    friend PolyH operator-(PolyH a, const PolyH& b) { return a -= b; }
    friend PolyH operator*(const PolyH& a, const PolyH& b);
    friend bool operator==(const PolyH& a, const PolyH& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyH& a, const PolyH& b) { return !(a == b); }

    static std::optional<PolyH> divexact(const PolyH& a, const PolyH& b);
    PolyH divided_by_hpow(int m) const;  // requires valuation >= m

    mpq_class eval(const mpq_class& h0) const;
    std::string str(const char* sym = "h") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// [l]_u with u = v^d.
LaurentZ quantum_int(int l, int d = 1);
LaurentZ quantum_factorial(int l, int d = 1);
LaurentZ quantum_binom(int l, int m, int d = 1);
// <m> = v^m - v^-m
LaurentZ angle(int m);

// Uniform scalar interface used by the polynomial kernel.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<LaurentZ> {
    static LaurentZ vpow(int e) { return LaurentZ::vpow(e); }
    static std::optional<LaurentZ> div(const LaurentZ& a, const LaurentZ& b) {
        return LaurentZ::divexact(a, b);
    }
    static std::string str(const LaurentZ& a) { return a.str(); }
};

template <>
struct ScalarOps<RationalV> {
    static RationalV vpow(int e) { return RationalV::vpow(e); }
    static std::optional<RationalV> div(const RationalV& a, const RationalV& b) {
        if (b.is_zero()) return std::nullopt;
        return a / b;
    }
    static std::string str(const RationalV& a) { return a.str(); }
};

template <>
struct ScalarOps<PolyH> {
    static std::optional<PolyH> div(const PolyH& a, const PolyH& b) { return PolyH::divexact(a, b); }
    static std::string str(const PolyH& a) { return a.str(); }
};

template <>
struct ScalarOps<mpq_class> {
    static std::optional<mpq_class> div(const mpq_class& a, const mpq_class& b) {
        if (b == 0) return std::nullopt;
        return mpq_class(a / b);
    }
    static std::string str(const mpq_class& a) { return a.get_str(); }
};

inline bool is_zero(const LaurentZ& a) { return a.is_zero(); }
inline bool is_zero(const RationalV& a) { return a.is_zero(); }
inline bool is_zero(const PolyH& a) { return a.is_zero(); }
inline bool is_zero(const mpq_class& a) { return a == 0; }

}  // namespace sf
