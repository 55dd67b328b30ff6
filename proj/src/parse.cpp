#include "shuffle_forge/parse.hpp"

#include <cctype>
#include <optional>

namespace sf {

namespace {

template <class S>
S sym_power(int e);
template <>
RationalV sym_power<RationalV>(int e) { return RationalV::vpow(e); }
template <>
PolyH sym_power<PolyH>(int e) {
    if (e < 0) throw std::invalid_argument("negative power of h");
    return PolyH::hpow(e);
}

template <class S>
S from_int(const mpz_class& z);
template <>
RationalV from_int<RationalV>(const mpz_class& z) { return RationalV(LaurentZ(z)); }
template <>
PolyH from_int<PolyH>(const mpz_class& z) { return PolyH(mpq_class(z)); }

template <class S>
class Parser {
public:
    using E = FreeExpr<S>;
    Parser(const std::string& t, char leaf, char sym) : t_(t), leaf_(leaf), sym_(sym) {}

    ExprPtr<S> whole_expr() {
        auto e = expr();
        finish();
        return e;
    }
    S whole_scalar() {
        S s = scalar();
        finish();
        return s;
    }

private:
    const std::string& t_;
    char leaf_, sym_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(p_, what); }
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    char peek() {
        skip();
        return p_ < t_.size() ? t_[p_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++p_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void finish() {
        if (peek() != '\0') fail("unexpected trailing input");
    }
    bool at_word(const char* w) {
        skip();
        return t_.compare(p_, std::char_traits<char>::length(w), w) == 0;
    }

    mpz_class natural() {
        skip();
        std::size_t s = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (s == p_) fail("expected integer");
        return mpz_class(t_.substr(s, p_ - s));
    }
    int small_int() {
        bool neg = accept('-');
        std::size_t at = p_;
        mpz_class z = natural();
        if (!z.fits_sint_p()) {
            p_ = at;
            fail("integer out of range");
        }
        int v = static_cast<int>(z.get_si());
        return neg ? -v : v;
    }

    // scalar := ['-'] sterm (('+'|'-') sterm)*
    S scalar() {
        bool neg = accept('-');
        S acc = sterm();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + sterm();
            else if (accept('-')) acc = acc - sterm();
            else return acc;
        }
    }
    S sterm() {
        S acc = satom();
        for (;;) {
            if (accept('*')) {
                acc = acc * satom();
            } else if (peek() == '/') {
                std::size_t at = p_++;
                S d = satom();
                auto q = ScalarOps<S>::div(acc, d);
                if (!q) {
                    p_ = at;
                    fail("division not allowed here");
                }
                acc = *q;
            } else {
                return acc;
            }
        }
    }
    S satom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return from_int<S>(natural());
        if (c == sym_) {
            ++p_;
            if (!accept('^')) return sym_power<S>(1);
            std::size_t at = p_;
            int e = small_int();
            try {
                return sym_power<S>(e);
            } catch (const std::invalid_argument& ex) {
                p_ = at;
                fail(ex.what());
            }
        }
        if (accept('(')) {
            S s = scalar();
            expect(')');
            return s;
        }
        if (c == '-') {
            ++p_;
            return -satom();
        }
        fail(std::string("expected scalar (integer, ") + sym_ + " or '(')");
    }

    ExprPtr<S> expr() {
        std::vector<ExprPtr<S>> xs{term()};
        while (accept('+')) xs.push_back(term());
        return xs.size() == 1 ? xs[0] : E::sum(std::move(xs));
    }
    ExprPtr<S> term() {
        std::vector<ExprPtr<S>> xs{factor()};
        while (accept('*')) xs.push_back(factor());
        return E::prod(std::move(xs));
    }
    ExprPtr<S> factor() {
        char c = peek();
        if (c == leaf_) {
            ++p_;
            expect('(');
            int i = small_int();
            expect(',');
            int r = small_int();
            expect(')');
            return E::gen(i, r);
        }
        if (at_word("comm")) {
            p_ += 4;
            S lambda(1);
            if (accept('[')) {
                lambda = scalar();
                expect(']');
            }
            expect('(');
            auto a = expr();
            expect(',');
            auto b = expr();
            expect(')');
            return E::comm(a, b, lambda);
        }
        if (c == '-') {
            ++p_;
            return E::scale(S(-1), factor());
        }
        if (c == '(') {
            // '(' scalar ')' '*' factor, else '(' expr ')'
            const std::size_t start = p_;
            std::size_t scalar_err = start;
            try {
                ++p_;
                S s = scalar();
                expect(')');
                expect('*');
                return E::scale(s, factor());
            } catch (const ParseError& e) {
                scalar_err = e.offset;
                p_ = start;
            }
            ++p_;
            try {
                auto e = expr();
                expect(')');
                return e;
            } catch (const ParseError& e) {
                // report whichever reading got further
                if (scalar_err > e.offset) throw ParseError(scalar_err, "malformed scalar factor");
                throw;
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == sym_) {
            const std::size_t start = p_;
            S s = satom();
            if (accept('*')) return E::scale(s, factor());
            if (s == S(1)) return E::unit();
            p_ = start;
            fail("scalar must be followed by '*'");
        }
        fail(std::string("expected ") + leaf_ + "(i,r), comm, '(' or a scalar");
    }
};

}  // namespace

TrigExpr parse_expr(const std::string& text) { return Parser<RationalV>(text, 'e', 'v').whole_expr(); }
YangExpr parse_yang_expr(const std::string& text) { return Parser<PolyH>(text, 'y', 'h').whole_expr(); }
RationalV parse_scalar_v(const std::string& text) { return Parser<RationalV>(text, 'e', 'v').whole_scalar(); }
PolyH parse_scalar_h(const std::string& text) { return Parser<PolyH>(text, 'y', 'h').whole_scalar(); }

}  // namespace sf
