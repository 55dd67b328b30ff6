#include "doctest.h"
#include "shuffle_forge/poly.hpp"

#include <random>

using namespace sf;
using P = SparsePoly<RationalV>;

namespace {

P x(int nv, int i, int p = 1) { return P::var(nv, i, p); }
P c(int nv, const RationalV& a) { return P::constant(nv, a); }

P random_poly(std::mt19937_64& rng, int nv, int terms, bool laurent) {
    std::uniform_int_distribution<int> ex(laurent ? -2 : 0, 3), co(-5, 5), vv(-2, 2);
    P p(nv);
    for (int t = 0; t < terms; ++t) {
        Exp e(static_cast<std::size_t>(nv));
        for (auto& k : e) k = ex(rng);
        p.add_term(e, RationalV(LaurentZ::monomial(co(rng), vv(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("symmetrize examples") {
    // f = x_{1,1}, k = (2)
    CHECK(symmetrize(x(2, 0), {2}) == x(2, 0) + x(2, 1));
    // already symmetric
    P f = x(2, 0) * x(2, 1) + x(2, 0) + x(2, 1);
    CHECK(symmetrize(f, {2}) == f.scaled(RationalV(2)));
    // trivial group
    P g = x(2, 0) * x(2, 1);
    CHECK(symmetrize(g, {1, 1}) == g);
    CHECK_THROWS(symmetrize(x(3, 0), {2}));
}

TEST_CASE("symmetrize is idempotent up to the group order") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> blocks = {2, 1, 2};
        P f = random_poly(rng, 5, 6, true);
        P s = symmetrize(f, blocks);
        CHECK(is_block_symmetric(s, blocks));
        CHECK(symmetrize(s, blocks) == s.scaled(RationalV(4)));
    }
}

TEST_CASE("exact_div examples") {
    CHECK(exact_div(x(2, 0, 2) - x(2, 1, 2), x(2, 0) - x(2, 1)) == x(2, 0) + x(2, 1));
    P f = x(2, 0) * x(2, 1) + c(2, RationalV::vpow(3));
    CHECK(exact_div(f, c(2, RationalV(1))) == f);
    P g = (x(2, 0) - x(2, 1).scaled(RationalV::vpow(2))) * (x(2, 0) - x(2, 1));
    CHECK_THROWS_AS(exact_div(g, x(2, 0) - x(2, 1).scaled(RationalV::vpow(1))), NotDivisible);
    auto r = try_exact_div(g, x(2, 0) - x(2, 1).scaled(RationalV::vpow(1)));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.remainder.is_zero());
}

TEST_CASE("linear factor division") {
    P f = (x(3, 0) - x(3, 2).scaled(RationalV::vpow(-2))) * (x(3, 1, 3) + x(3, 0, -1));
    auto q = divide_binomial(f, 0, RationalV::vpow(-2), 2);
    REQUIRE(q.has_value());
    CHECK(*q == x(3, 1, 3) + x(3, 0, -1));
    P rem;
    CHECK_FALSE(divide_binomial(f, 0, RationalV::vpow(2), 2, &rem).has_value());
    CHECK_FALSE(rem.is_zero());
}

TEST_CASE("exact_div round trip on random sparse polynomials") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000; ++t) {
        std::uniform_int_distribution<int> nt(1, 20), nv(1, 3);
        int n = nv(rng);
        P f = random_poly(rng, n, nt(rng), t % 2 == 0);
        P g = random_poly(rng, n, nt(rng) % 6 + 1, t % 3 == 0);
        if (g.is_zero()) continue;
        auto r = try_exact_div(f * g, g);
        REQUIRE(r.ok);
        CHECK(r.quotient == f);
    }
}

TEST_CASE("substitute examples and ring compatibility") {
    // x_{1,1} x_{2,1} with both mapped to w
    P f = x(2, 0) * x(2, 1);
    CHECK(substitute_monomial(f, {0, 0}, {RationalV(1), RationalV(1)}, 1) == P::var(1, 0, 2));
    // x_{1,2} -> v^2 w
    CHECK(substitute_monomial(x(3, 1), {0, 0, 0}, {RationalV(1), RationalV::vpow(2), RationalV(1)}, 1) ==
          P::var(1, 0).scaled(RationalV::vpow(2)));
    // rational: x -> w - h/2, x^2 -> w^2 - h w + h^2/4
    using Q = SparsePoly<PolyH>;
    Q w = Q::var(1, 0);
    Q img = w - Q::constant(1, PolyH::hpow(1, mpq_class(1, 2)));
    Q expect = w * w - w.scaled(PolyH::hpow(1)) + Q::constant(1, PolyH::hpow(2, mpq_class(1, 4)));
    CHECK(substitute_poly(Q::var(1, 0, 2), {img}, 1) == expect);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        P a = random_poly(rng, 3, 5, true), b = random_poly(rng, 3, 5, true);
        std::vector<int> tg = {0, 1, 0};
        std::vector<RationalV> sc = {RationalV::vpow(1), RationalV::vpow(-3), RationalV(2)};
        CHECK(substitute_monomial(a * b, tg, sc, 2) == substitute_monomial(a, tg, sc, 2) * substitute_monomial(b, tg, sc, 2));
        CHECK(substitute_monomial(a + b, tg, sc, 2) == substitute_monomial(a, tg, sc, 2) + substitute_monomial(b, tg, sc, 2));
    }
    CHECK_THROWS(substitute_monomial(x(2, 1), {0, -1}, {RationalV(1), RationalV(1)}, 1));
}

TEST_CASE("antisymmetrization is divisible by the Vandermonde") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        P f = random_poly(rng, 4, 4, false);
        P a = antisymmetrize(f, {3, 1});
        P q = divide_block_vandermonde(a, {3, 1});
        CHECK(q * block_vandermonde<RationalV>({3, 1}) == a);
        CHECK(is_block_symmetric(q, {3, 1}));
    }
}
