#include "doctest.h"
#include "shuffle_forge/specmaps.hpp"
#include "shuffle_forge/yangian.hpp"

#include <random>

using namespace sf;

namespace {

using RP = SparsePoly<PolyH>;
using YE = FreeExpr<PolyH>;

RP h(int nv, int e, const mpq_class& c = 1) { return RP::constant(nv, PolyH::hpow(e, c)); }

KostantPartition single(const Roots& R, const std::string& label) {
    KostantPartition d(R.size(), 0);
    d[static_cast<std::size_t>(R.find_label(label))] = 1;
    return d;
}

}  // namespace

TEST_CASE("hzeta examples") {
    RootSystem C3('C', 3);
    CHECK(hzeta(C3, 1, 3).trivial());
    CHECK(hzeta(C3, 1, 2).c == mpq_class(-1, 2));
    CHECK(hzeta(C3, 1, 2).str() == "1 - 1/2*h/z");
    CHECK(hzeta(C3, 3, 3).c == 2);
    CHECK(hzeta(C3, 3, 3).str() == "1 + 2*h/z");
    CHECK_THROWS_AS(hzeta(C3, 0, 1), ConfigError);
}

TEST_CASE("yangian root vectors: shapes") {
    Roots C3(RootSystem('C', 3));
    RatShuffle alg(C3.sys());
    Psi<RatKernel> psi(alg);
    auto leaf = yangian_root_vector(C3, {C3.find_label("[3]"), {4}});
    CHECK(leaf->kind == YE::Kind::Gen);
    CHECK(psi(leaf).f == RP::var(1, 0, 4));

    // [i,n,i]: [[x1, x2], [[x1, x2], x3_s]]
    const int dbl = C3.find_label("[1,3,1]");
    auto spec = yangian_tilde_spec(C3, dbl, 2);
    CHECK(spec.modes == std::vector<int>{0, 0, 0, 0, 2});
    auto one = YE::comm(YE::gen(1, 0), YE::gen(2, 0), PolyH(1));
    auto hand = YE::comm(one, YE::comm(one, YE::gen(3, 2), PolyH(1)), PolyH(1));
    CHECK(psi(yangian_root_vector(C3, spec)) == psi(hand));
    CHECK(yangian_tilde_spec(C3, C3.find_label("[1,3,2]"), 1).modes.front() == 1);

    CHECK_THROWS_AS(yangian_root_vector(C3, {dbl, {0, 0}}), ConfigError);
    CHECK_THROWS_AS(yangian_root_vector(C3, {0, {-1}}), ConfigError);
    std::mt19937 rng(3);
    CHECK_THROWS_AS(random_yangian_spec(C3, 0, -1, rng), ConfigError);

    // h-divisibility of the images
    for (std::size_t b = 0; b < C3.size(); ++b)
        for (int s = 0; s <= 1; ++s) {
            auto sp = random_yangian_spec(C3, static_cast<int>(b), s, rng);
            CHECK(sp.mode_sum() == s);
            auto x = yangian_root_vector(C3, sp);
            const int ht = C3[b].height;
            CHECK(hbar_valuation(psi(x).f) >= ht - 1);
            CHECK(hbar_valuation(psi(yangian_bar(x)).f) >= ht);
        }
}

TEST_CASE("yangian closed forms") {
    Roots C2(RootSystem('C', 2));
    // C2 [1,2,1]: h^2 x_{2,1}^s (no Qhat factors)
    auto cf = yangian_closed_form(C2, C2.find_label("[1,2,1]"), 3);
    CHECK(cf == RP::monomial({0, 0, 3}, PolyH::hpow(2)));
    auto q = q_hat(4, 0, 1, 2, 3);
    RP x1 = RP::var(4, 0), x2 = RP::var(4, 1), y1 = RP::var(4, 2), y2 = RP::var(4, 3);
    CHECK(q == (x1 * x2 + y1 * y2).scaled(PolyH(4)) - ((x1 + x2) * (y1 + y2)).scaled(PolyH(2)) + h(4, 2));

    CHECK(proportional_q(cf.scaled(PolyH(mpq_class(-3, 2))), cf) == mpq_class(-3, 2));
    CHECK_FALSE(proportional_q(cf.scaled(PolyH::hpow(1)), cf).has_value());
    CHECK_FALSE(proportional_q(RP(3), cf).has_value());

    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'C', 3}, {'D', 4}}) {
        Roots R(RootSystem(t, n));
        RatShuffle alg(R.sys());
        Psi<RatKernel> psi(alg);
        for (std::size_t b = 0; b < R.size(); ++b)
            for (int s = 0; s <= 2; ++s) {
                INFO(R.qualified_name(R[b]) << " s=" << s);
                auto img = psi(yangian_tilde(R, static_cast<int>(b), s)).f;
                CHECK(proportional_q(img, yangian_closed_form(R, static_cast<int>(b), s)).has_value());
            }
    }
}

TEST_CASE("rational specialization") {
    Roots C2(RootSystem('C', 2));
    const auto d = single(C2, "[1,2,1]");
    // x11 -> w, x12 -> w' -> w + h, x21 -> w' - h -> w
    auto img = [&](const Exp& e) {
        return phi_d_rat(C2, RationalShuffleElement{{2, 1}, RP::monomial(e, PolyH(1))}, d).g;
    };
    CHECK(img({1, 0, 0}) == RP::var(1, 0));
    CHECK(img({0, 1, 0}) == RP::var(1, 0) + h(1, 1));
    CHECK(img({0, 0, 1}) == RP::var(1, 0));

    // grading mismatch
    auto mm = phi_d_rat(C2, RationalShuffleElement{{1, 1}, RP::constant(2, PolyH(1))}, d);
    CHECK(mm.grading_mismatch);
    CHECK(mm.g.is_zero());

    // B factors
    CHECK(b_factor_rat(C2, C2.find_label("[1,2,1]")) == RP::constant(2, PolyH(1)));
    Roots C3(RootSystem('C', 3));
    RP w = RP::var(2, 0), wp = RP::var(2, 1);
    CHECK(b_factor_rat(C3, C3.find_label("[1,3,1]")) == (w - wp + h(2, 1)) * (w - wp - h(2, 1)));
    Roots D4(RootSystem('D', 4));
    CHECK(b_factor_rat(D4, D4.find_label("[1,4,2]")) == (w - wp) * (w - wp + h(2, 1, 2)));
    CHECK_THROWS_AS(b_factor_rat(D4, D4.find_label("[1,4,3]")), ConfigError);

    // a step-one image that misses B is rejected
    const auto dd = single(C3, "[1,3,1]");
    CHECK_THROWS_AS(phi_d_rat(C3, RationalShuffleElement{{2, 2, 1}, RP::constant(5, PolyH(1))}, dd),
                    NotDivisible);
}

TEST_CASE("rational leading terms with random decompositions") {
    std::mt19937 rng(11);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'C', 3}, {'D', 4}}) {
        Roots R(RootSystem(t, n));
        RatShuffle alg(R.sys());
        Psi<RatKernel> psi(alg);
        for (std::size_t b = 0; b < R.size(); ++b)
            for (int s = 0; s <= 2; ++s) {
                auto sp = random_yangian_spec(R, static_cast<int>(b), s, rng);
                auto m = verify_yangian_leading(R, psi(yangian_root_vector(R, sp)), static_cast<int>(b), s);
                INFO(m.witness);
                CHECK(m.ok);
            }
    }
    // wrong degree is reported
    Roots C2(RootSystem('C', 2));
    RatShuffle alg(C2.sys());
    Psi<RatKernel> psi(alg);
    const int b = C2.find_label("[1,2]");
    CHECK_FALSE(verify_yangian_leading(C2, psi(yangian_tilde(C2, b, 1)), b, 2).ok);
}

TEST_CASE("good and integral elements") {
    Roots C2(RootSystem('C', 2));
    RatShuffle alg(C2.sys());
    Psi<RatKernel> psi(alg);
    CHECK(hbar_valuation(RP(2)) == -1);
    CHECK(hbar_valuation(RP::constant(1, PolyH::hpow(3) + PolyH::hpow(5))) == 3);
    for (int i = 1; i <= 2; ++i)
        for (int r = 0; r <= 2; ++r) {
            auto x = psi(YE::gen(i, r));
            CHECK(is_good(C2, x).ok);
            CHECK_FALSE(is_integral(C2, x).ok);
            CHECK(is_integral(C2, x.scaled(PolyH::hpow(1))).ok);
        }
    auto m = is_integral(C2, psi(YE::gen(1, 0)));
    CHECK(m.witness.find("h^1") != std::string::npos);

    std::vector<RationalShuffleElement> bars, plain;
    for (std::size_t b = 0; b < C2.size(); ++b)
        for (int s = 0; s <= 1; ++s) {
            auto x = yangian_tilde(C2, static_cast<int>(b), s);
            plain.push_back(psi(x));
            bars.push_back(psi(yangian_bar(x)));
            CHECK(is_good(C2, plain.back()).ok);
            CHECK(is_integral(C2, bars.back()).ok);
        }
    // closure under products
    for (std::size_t a = 0; a < bars.size(); ++a)
        for (std::size_t c = 0; c < bars.size(); ++c) {
            CHECK(is_integral(C2, alg.star(bars[a], bars[c])).ok);
            CHECK(is_good(C2, alg.star(plain[a], plain[c])).ok);
        }
    // [1,2,1] unscaled by h: good but not integral
    CHECK_FALSE(is_integral(C2, plain[2]).ok);
}

TEST_CASE("good and integral: D4 bar vectors") {
    Roots D4(RootSystem('D', 4));
    RatShuffle alg(D4.sys());
    Psi<RatKernel> psi(alg);
    for (std::size_t b = 0; b < D4.size(); ++b) {
        auto m = is_integral(D4, psi(yangian_bar(yangian_tilde(D4, static_cast<int>(b), 1))));
        INFO(D4.qualified_name(D4[b]) << " " << m.witness);
        CHECK(m.ok);
    }
}
