#include "doctest.h"
#include "shuffle_forge/rootvec.hpp"

#include <random>

using namespace sf;

namespace {

using TP = SparsePoly<RationalV>;
using TE = FreeExpr<RationalV>;

// all splits with entries in {0,1} on the colors of the root
std::vector<std::vector<int>> binary_splits(const Roots& R, int b) {
    const int n = R.sys().rank();
    std::vector<int> colors;
    for (int c = 1; c <= n; ++c)
        if (R[static_cast<std::size_t>(b)].nu[static_cast<std::size_t>(c - 1)] > 0) colors.push_back(c);
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << colors.size()); ++mask) {
        std::vector<int> s(static_cast<std::size_t>(n), 0);
        for (std::size_t t = 0; t < colors.size(); ++t)
            if (mask >> t & 1) s[static_cast<std::size_t>(colors[t] - 1)] = 1;
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("root vectors: simple shapes") {
    Roots C3(RootSystem('C', 3));
    TrigShuffle alg(C3.sys());
    Psi<TrigKernel> psi(alg);
    const int last = C3.find_label("[3]");
    auto e = root_vector(C3, {last, {5}, {}});
    CHECK(e->kind == TE::Kind::Gen);
    CHECK(e->color == 3);
    CHECK(e->mode == 5);

    // tilde E+_[1,3] = [[e1, e2]_v, e3]_{v^2}
    const int b = C3.find_label("[1,3]");
    auto spec = tilde_spec(C3, b, {1, 0, 2}, 1);
    CHECK(spec.modes == std::vector<int>{1, 0, 2});
    CHECK(spec.lambdas == std::vector<int>{1, 2});
    CHECK(spec.mode_sum() == 3);
    auto hand = TE::comm(TE::comm(TE::gen(1, 1), TE::gen(2, 0), RationalV::vpow(1)), TE::gen(3, 2),
                         RationalV::vpow(2));
    CHECK(psi(root_vector(C3, spec)) == psi(hand));
    CHECK(tilde_spec(C3, b, {0, 0, 0}, -1).lambdas == std::vector<int>{-1, -2});

    // type D: the last bracket has exponent 1
    Roots D4(RootSystem('D', 4));
    CHECK(tilde_spec(D4, D4.find_label("[1,4]"), {0, 0, 0, 0}, 1).lambdas == std::vector<int>{1, 1});

    // [i,n,i] in type C: two-level bracket
    const int dbl = C3.find_label("[1,3,1]");
    auto ds = tilde_spec(C3, dbl, {0, 0, 0}, 1);
    CHECK(ds.lambdas == std::vector<int>{1, 1, 2, 0});
    auto left = TE::comm(TE::gen(1, 0), TE::gen(2, 0), RationalV::vpow(1));
    auto right = TE::comm(TE::comm(TE::gen(1, 0), TE::gen(2, 0), RationalV::vpow(1)), TE::gen(3, 0),
                          RationalV::vpow(2));
    CHECK(psi(root_vector(C3, ds)) == psi(TE::comm(left, right, RationalV(1))));

    CHECK_THROWS_AS(root_vector(C3, {b, {0, 0}, {1}}), ConfigError);
    CHECK_THROWS_AS(root_vector(C3, {b, {0, 0, 0}, {1}}), ConfigError);
    CHECK_THROWS_AS(tilde_spec(C3, b, {0, 0, 0}, 2), ConfigError);
}

TEST_CASE("root vectors: splits") {
    Roots C3(RootSystem('C', 3));
    const int dbl = C3.find_label("[1,3,1]");
    CHECK(default_split(C3, dbl, 4) == std::vector<int>{0, 0, 4});
    CHECK(split_total(C3, dbl, {1, 1, 0}) == 4);
    CHECK(default_split(C3, C3.find_label("[2,3]"), -1) == std::vector<int>{0, -1, 0});

    std::mt19937 rng(5);
    for (std::size_t b = 0; b < C3.size(); ++b)
        for (int s = -2; s <= 2; ++s) {
            auto sp = random_spec(C3, static_cast<int>(b), s, rng);
            CHECK(sp.mode_sum() == s);
            CHECK_NOTHROW(validate_spec(C3, sp));
            for (int l : sp.lambdas) CHECK((l >= -2 && l <= 2));
            if (s >= 0) {
                auto nn = random_spec(C3, static_cast<int>(b), s, rng, true);
                CHECK(nn.mode_sum() == s);
                for (int m : nn.modes) CHECK(m >= 0);
            }
        }
    CHECK_THROWS_AS(random_spec(C3, 0, -1, rng, true), ConfigError);
}

TEST_CASE("closed forms: examples") {
    Roots C2(RootSystem('C', 2));
    // [1,2,1], s = 0: <2>^2 x11 x12
    auto cf = closed_form(C2, C2.find_label("[1,2,1]"), {0, 0}, 1);
    CHECK(cf.prefactor() == RationalV(angle(2) * angle(2)));
    CHECK(cf.angle1 == 0);
    CHECK(cf.angle2 == 2);
    CHECK(cf.numerator() == TP::monomial({1, 1, 0}, RationalV(angle(2) * angle(2))));

    // C, [i,j], eps=+: <1>^{j-i} x_i^{s_i+1} ... x_j^{s_j}
    Roots C4(RootSystem('C', 4));
    auto c13 = closed_form(C4, C4.find_label("[1,3]"), {1, 0, 2, 0}, 1);
    CHECK(c13.angle1 == 2);
    CHECK(c13.angle2 == 0);
    CHECK(c13.monomial == Exp{2, 1, 2});

    // D, [i,n,n-1], eps=-: <1>^{n-i}, x_i^{s_i} x_{i+1}^{s_{i+1}+1} ... x_n^{s_n+1}
    Roots D4(RootSystem('D', 4));
    auto d = closed_form(D4, D4.find_label("[1,4,3]"), {0, 0, 0, 0}, -1);
    CHECK(d.angle1 == 3);
    CHECK(d.monomial == Exp{0, 1, 1, 1});

    // Q-form
    auto q = q_form(4, 0, 1, 2, 3);
    TP x1 = TP::var(4, 0), x2 = TP::var(4, 1), y1 = TP::var(4, 2), y2 = TP::var(4, 3);
    TP want = (x1 * x2 + y1 * y2).scaled(RationalV(1) + RationalV::vpow(2)) -
              ((x1 + x2) * (y1 + y2)).scaled(RationalV::vpow(1));
    CHECK(q == want);
}

TEST_CASE("closed forms agree with Psi of the tilde presets") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'C', 3}, {'D', 4}}) {
        Roots R(RootSystem(t, n));
        TrigShuffle alg(R.sys());
        Psi<TrigKernel> psi(alg);
        for (std::size_t b = 0; b < R.size(); ++b)
            for (const auto& split : binary_splits(R, static_cast<int>(b)))
                for (int eps : {1, -1}) {
                    auto spec = tilde_spec(R, static_cast<int>(b), split, eps);
                    auto img = psi(root_vector(R, spec));
                    auto cf = closed_form(R, static_cast<int>(b), split, eps).element();
                    INFO(R.qualified_name(R[b]) << " eps=" << eps);
                    CHECK(proportional(img, cf).has_value());
                }
    }
}

TEST_CASE("normalized vectors and divided powers") {
    Roots C2(RootSystem('C', 2));
    TrigShuffle alg(C2.sys());
    Psi<TrigKernel> psi(alg);
    const int last = C2.find_label("[2]"), first = C2.find_label("[1]"), dbl = C2.find_label("[1,2,1]");
    CHECK(psi(rtt_root_vector(C2, last, 1, 1)).f == TP::var(1, 0, 1).scaled(RationalV(angle(2))));
    CHECK(psi(rtt_root_vector(C2, first, 0, 1)).f == TP::constant(1, RationalV(angle(1))));
    Roots D4(RootSystem('D', 4));
    TrigShuffle dalg(D4.sys());
    Psi<TrigKernel> dpsi(dalg);
    const int d14 = D4.find_label("[1,4]");
    CHECK(dpsi(rtt_root_vector(D4, d14, 0, 1)) ==
          dpsi(tilde_root_vector(D4, d14, 0, 1)).scaled(RationalV(angle(1))));

    CHECK(psi(divided_power(C2, first, 0, 0, 1)) == alg.unit());
    CHECK(psi(divided_power(C2, first, 2, 1, 1)) == psi(tilde_root_vector(C2, first, 2, 1)));
    auto e = psi(tilde_root_vector(C2, dbl, 0, 1));
    CHECK(psi(divided_power(C2, dbl, 0, 1, 1)) == e.scaled(RationalV(LaurentZ(1), quantum_int(2))));

    // rank 1 divided power: v_i^{-l(l-1)/2} (x_1 ... x_l)^r
    for (int r = -1; r <= 1; ++r) {
        auto e3 = psi(divided_power(C2, last, r, 3, 1));
        CHECK(e3.f == TP::monomial({r, r, r}, RationalV::vpow(-6)));
        auto e2 = psi(divided_power(C2, first, r, 2, 1));
        CHECK(e2.f == TP::monomial({r, r}, RationalV::vpow(-1)));
    }
    CHECK_THROWS_AS(divided_power(C2, first, 0, -1, 1), ConfigError);
}

TEST_CASE("pbwd monomials") {
    Roots C2(RootSystem('C', 2));
    TrigShuffle alg(C2.sys());
    Psi<TrigKernel> psi(alg);
    auto vec = [&](int b, int s) { return tilde_root_vector(C2, b, s, 1); };
    const int first = C2.find_label("[1]"), last = C2.find_label("[2]");
    PbwdKey h;
    h.h = {{{first, 0}, 1}, {{last, 0}, 1}};
    CHECK(psi(pbwd_monomial(h, vec)) == alg.star(alg.generator(1, 0), alg.generator(2, 0)));
    PbwdKey one;
    one.h = {{{last, 3}, 1}};
    CHECK(psi(pbwd_monomial(one, vec)) == alg.generator(2, 3));
    PbwdKey sq;
    sq.h = {{{first, 0}, 2}};
    CHECK(psi(pbwd_monomial(sq, vec)) == alg.star(alg.generator(1, 0), alg.generator(1, 0)));
}
