#include "doctest.h"
#include "shuffle_forge/shuffle.hpp"

#include <random>

using namespace sf;

namespace {

using TP = SparsePoly<RationalV>;
using RP = SparsePoly<PolyH>;
using TE = FreeExpr<RationalV>;
using YE = FreeExpr<PolyH>;

ShuffleElement random_trig(const TrigShuffle& alg, std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> col(1, alg.rank()), mode(-1, 1);
    ShuffleElement F = alg.unit();
    for (int t = 0; t < len; ++t) F = alg.star(F, alg.generator(col(rng), mode(rng)));
    return F;
}

}  // namespace

TEST_CASE("trig star: spec examples") {
    TrigShuffle C3(RootSystem('C', 3));
    auto e10 = C3.generator(1, 0), e20 = C3.generator(2, 0);
    CHECK(C3.star(C3.unit(), e20) == e20);
    CHECK(C3.star(e20, C3.unit()) == e20);

    auto one = C3.star(e10, e10);
    CHECK(one.k == Grading{2, 0, 0});
    CHECK(one.f == TP::constant(2, RationalV(1) + RationalV::vpow(-2)));
    auto nn = C3.star(C3.generator(3, 0), C3.generator(3, 0));
    CHECK(nn.f == TP::constant(2, RationalV(1) + RationalV::vpow(-4)));

    auto p = C3.star(e10, e20);
    CHECK(p.f == TP::var(2, 0) - TP::var(2, 1).scaled(RationalV::vpow(1)));
    CHECK(C3.denominator({1, 1, 0}) == TP::var(2, 0) - TP::var(2, 1));
    // orthogonal colors: no pole, zeta = 1
    CHECK(C3.star(e10, C3.generator(3, 0)).f == TP::constant(2, RationalV(1)));

    Psi<TrigKernel> psi(C3);
    auto c = psi(TE::comm(TE::gen(1, 0), TE::gen(2, 0), RationalV::vpow(1)));
    CHECK(c.f == TP::var(2, 0).scaled(RationalV(1) - RationalV::vpow(2)));
    CHECK(psi(TE::gen(2, 3)).f == TP::var(1, 0, 3));
    CHECK(psi(TE::gen(2, -2)).f == TP::var(1, 0, -2));
    CHECK(psi(TE::prod(std::vector<TrigExpr>{})) == C3.unit());
}

TEST_CASE("wheel check examples") {
    TrigShuffle C3(RootSystem('C', 3));
    auto r = C3.wheel_check(ShuffleElement{{2, 1, 0}, TP::constant(3, RationalV(1))});
    CHECK_FALSE(r.ok);
    CHECK(r.witness == "x[1][1] = v^2*x[1][2] = v^1*x[2][1]");
    // all k_i <= 1: vacuous
    CHECK(C3.wheel_check(ShuffleElement{{1, 1, 1}, TP::constant(3, RationalV(1))}).ok);
    auto F = C3.star(C3.star(C3.generator(1, 0), C3.generator(1, 0)), C3.generator(2, 0));
    CHECK(C3.wheel_check(F).ok);
    // C_2 at k=(2,1) imposes nothing; (1,3) does (a_21 = -1 on the short side is the other pattern)
    TrigShuffle C2(RootSystem('C', 2));
    CHECK(C2.wheel_check(ShuffleElement{{2, 1}, TP::constant(3, RationalV(1))}).ok);
    CHECK_FALSE(C2.wheel_check(ShuffleElement{{3, 1}, TP::constant(4, RationalV(1))}).ok);
    CHECK_FALSE(C2.wheel_check(ShuffleElement{{1, 2}, TP::constant(3, RationalV(1))}).ok);
}

TEST_CASE("star: coset sum agrees with the full symmetrization") {
    for (char type : {'C', 'D'}) {
        TrigShuffle alg(RootSystem(type, type == 'C' ? 2 : 4));
        std::mt19937 rng(11);
        for (int t = 0; t < 12; ++t) {
            auto F = random_trig(alg, rng, 1 + t % 2);
            auto G = random_trig(alg, rng, 1 + (t / 2) % 3);
            CHECK(alg.star(F, G, StarMode::Cosets) == alg.star(F, G, StarMode::FullGroup));
        }
    }
}

TEST_CASE("star: associativity, symmetry, wheel closure") {
    for (char type : {'C', 'D'}) {
        TrigShuffle alg(RootSystem(type, type == 'C' ? 3 : 4));
        std::mt19937 rng(type == 'C' ? 5 : 6);
        for (int t = 0; t < 8; ++t) {
            auto F = random_trig(alg, rng, 1 + t % 2);
            auto G = random_trig(alg, rng, 1 + (t / 2) % 2);
            auto H = random_trig(alg, rng, 1 + (t / 4) % 2);
            auto L = alg.star(alg.star(F, G), H);
            CHECK(L == alg.star(F, alg.star(G, H)));
            CHECK(alg.symmetric(L));
            CHECK(alg.wheel_check(L).ok);
            CHECK(total(L.k) == total(F.k) + total(G.k) + total(H.k));
        }
    }
}

TEST_CASE("Psi is a homomorphism on random words") {
    TrigShuffle alg(RootSystem('D', 4));
    Psi<TrigKernel> psi(alg);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> col(1, 4), mode(-2, 2), len(1, 3);
    auto word = [&]() {
        std::vector<TrigExpr> xs;
        int l = len(rng);
        for (int t = 0; t < l; ++t) xs.push_back(TE::gen(col(rng), mode(rng)));
        return TE::prod(xs);
    };
    for (int t = 0; t < 10; ++t) {
        auto w1 = word(), w2 = word();
        CHECK(psi(TE::prod(w1, w2)) == alg.star(psi(w1), psi(w2)));
        auto s = TE::scale(RationalV::vpow(2), w1);
        CHECK(psi(s) == psi(w1).scaled(RationalV::vpow(2)));
    }
}

TEST_CASE("defining relations vanish under Psi") {
    TrigShuffle C3(RootSystem('C', 3));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int r = -2; r <= 2; ++r)
                for (int s = -2; s <= 2; ++s) CHECK(check_loop_relation(C3, i, j, r, s) == "");
    // Serre for a_ij = -1 (1,2) and a_ij = -2 (2,3)
    for (int s = -1; s <= 1; ++s)
        for (int r0 = -1; r0 <= 1; ++r0)
            for (int r1 = -1; r1 <= 1; ++r1) {
                CHECK(check_serre_relation(C3, 1, 2, {r0, r1}, s) == "");
                CHECK(check_serre_relation(C3, 3, 2, {r0, r1}, s) == "");
            }
    for (int s = -1; s <= 1; ++s) CHECK(check_serre_relation(C3, 2, 3, {-1, 0, 1}, s) == "");
    CHECK(check_serre_relation(C3, 2, 3, {0, 0, 0}, 0) == "");
    // a relation of wrong shape is detected: e1 e2 - e2 e1 does not vanish
    Psi<TrigKernel> psi(C3);
    CHECK_FALSE(psi(TE::comm(TE::gen(1, 0), TE::gen(2, 0), RationalV(1))).is_zero());
}

TEST_CASE("rational star examples and relations") {
    RatShuffle C3(RootSystem('C', 3));
    auto x10 = C3.generator(1, 0);
    CHECK(C3.star(C3.unit(), x10) == x10);
    CHECK(C3.star(x10, x10).f == RP::constant(2, PolyH(2)));
    auto p = C3.star(x10, C3.generator(2, 0));
    CHECK(p.f == RP::var(2, 0) - RP::var(2, 1) + RP::constant(2, PolyH::hpow(1, mpq_class(-1, 2))));
    CHECK_THROWS_AS(C3.generator(1, -1), ConfigError);

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int r = 0; r <= 2; ++r)
                for (int s = 0; s <= 2; ++s) CHECK(check_yangian_relation(C3, i, j, r, s) == "");
    for (int r0 = 0; r0 <= 1; ++r0)
        for (int r1 = 0; r1 <= 1; ++r1) CHECK(check_yangian_serre(C3, 1, 2, {r0, r1}, 0) == "");
    CHECK(check_yangian_serre(C3, 2, 3, {0, 1, 2}, 1) == "");

    std::mt19937 rng(9);
    std::uniform_int_distribution<int> col(1, 3), mode(0, 2);
    Psi<RatKernel> psi(C3);
    for (int t = 0; t < 6; ++t) {
        auto a = C3.generator(col(rng), mode(rng)), b = C3.generator(col(rng), mode(rng));
        auto c = C3.star(C3.generator(col(rng), mode(rng)), C3.generator(col(rng), mode(rng)));
        auto L = C3.star(C3.star(a, b), c);
        CHECK(L == C3.star(a, C3.star(b, c)));
        CHECK(C3.wheel_check(L).ok);
        CHECK(C3.star(a, c, StarMode::FullGroup) == C3.star(a, c));
    }
    auto r = C3.wheel_check(RationalShuffleElement{{2, 1, 0}, RP::constant(3, PolyH(1))});
    CHECK_FALSE(r.ok);
    CHECK(r.witness == "x[1][1] = x[1][2] + 1*h = x[2][1] + 1/2*h");
}
