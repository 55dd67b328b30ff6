#include "doctest.h"
#include "shuffle_forge/specmaps.hpp"

#include <random>

using namespace sf;

namespace {

using TP = SparsePoly<RationalV>;

KostantPartition single(const Roots& R, const std::string& label, int mult = 1) {
    KostantPartition d(R.size(), 0);
    d[static_cast<std::size_t>(R.find_label(label))] = mult;
    return d;
}

TP lin(int nv, int l, int a, int r) { return TP::var(nv, l) - TP::var(nv, r).scaled(RationalV::vpow(a)); }

}  // namespace

TEST_CASE("B factors") {
    Roots C2(RootSystem('C', 2)), C3(RootSystem('C', 3)), D4(RootSystem('D', 4));
    CHECK(b_factor(C2, C2.find_label("[1,2,1]")) == TP::constant(2, RationalV(1)));
    CHECK(b_factor(D4, D4.find_label("[1,4,2]")) == lin(2, 0, 0, 1) * lin(2, 0, -4, 1));
    CHECK(b_factor(C3, C3.find_label("[1,3,1]")) == lin(2, 0, -2, 1) * lin(2, 0, 2, 1));
    CHECK(two_step(C3, C3.find_label("[1,3,1]")));
    CHECK(two_step(D4, D4.find_label("[1,4,2]")));
    CHECK_FALSE(two_step(D4, D4.find_label("[1,4,3]")));
    CHECK_FALSE(two_step(C3, C3.find_label("[1,3,2]")));
    CHECK_THROWS_AS(b_factors(C3, C3.find_label("[1,3]")), ConfigError);
}

TEST_CASE("tables") {
    Roots C2(RootSystem('C', 2)), C3(RootSystem('C', 3)), D4(RootSystem('D', 4));
    CHECK(kappa(C3, C3.find_label("[1,3,2]")) == 4);
    CHECK(kappa(C3, C3.find_label("[1,3,1]")) == 4);
    CHECK(kappa(C3, C3.find_label("[1,2]")) == 1);
    CHECK(c_factor(C2, C2.find_label("[1,2]")) == angle(2));
    CHECK(c_factor(C2, C2.find_label("[1]")) == LaurentZ(1));
    for (std::size_t b = 0; b < C3.size(); ++b) {
        const int r = static_cast<int>(b);
        if (C3[b].tag == RootTag::Double) CHECK(c_tilde(C3, r) * quantum_int(2) == c_factor(C3, r));
        else CHECK(c_tilde(C3, r) == c_factor(C3, r));
    }
    for (std::size_t b = 0; b < D4.size(); ++b) {
        const int r = static_cast<int>(b);
        CHECK(kappa(D4, r) == D4[b].height - 1);
        LaurentZ c(1);
        for (int t = 0; t < D4[b].height - 1; ++t) c = c * angle(1);
        CHECK(c_factor(D4, r) == c);
        CHECK(c_tilde(D4, r) == c);
    }
    // A_d: [2]^{d_beta} on [i,n,i]
    CHECK(a_factor(C2, single(C2, "[1,2,1]")) == quantum_int(2));
    CHECK(a_factor(D4, single(D4, "[1,4,2]", 2)) == LaurentZ(1));
    CHECK(rtt_prefactor(C2.sys(), {2, 1}) == angle(1) * angle(1) * angle(2));
    CHECK(rtt_prefactor(D4.sys(), {1, 1, 0, 1}) == angle(1) * angle(1) * angle(1));
}

TEST_CASE("G factors") {
    Roots C3(RootSystem('C', 3)), D4(RootSystem('D', 4));
    for (std::size_t b = 0; b < C3.size(); ++b)
        CHECK(g_factor(C3, static_cast<int>(b), 1) == TP::var(1, 0, kappa(C3, static_cast<int>(b))));
    // C, [i,n], d=2: (w1 w2)^kappa prod_{s != s'} (w_s - v^2 w_s')^{n-i-1} (w_s - v^4 w_s')
    const int b13 = C3.find_label("[1,3]");
    const int k13 = kappa(C3, b13);
    TP want = TP::monomial({k13, k13}, RationalV(1));
    for (auto [s, t] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}})
        want = want * lin(2, s, 2, t) * lin(2, s, 4, t);
    CHECK(g_factor(C3, b13, 2) == want);
    // D, [i,j], d=2
    const int d13 = D4.find_label("[1,3]");
    TP wd = TP::monomial({2, 2}, RationalV(1));
    for (int t = 0; t < 2; ++t) wd = wd * lin(2, 0, 2, 1) * lin(2, 1, 2, 0);
    CHECK(g_factor(D4, d13, 2) == wd);
}

TEST_CASE("P_lambda") {
    CHECK(p_lambda({5}, 1) == TP::var(1, 0, 5));
    CHECK(p_lambda({0, 0}, 1) == TP::constant(2, RationalV(1) + RationalV::vpow(-2)));
    // equals the rank 1 shuffle product of monomials
    Roots C2(RootSystem('C', 2));
    TrigShuffle alg(C2.sys());
    for (int color : {1, 2})
        for (const auto& r : std::vector<std::vector<int>>{{0, 1}, {2, -1}, {1, 0, 0}, {-1, 1, 2}}) {
            ShuffleElement F = alg.unit();
            for (int x : r) F = alg.star(F, alg.generator(color, x));
            CHECK(F.f == p_lambda(r, C2.sys().d(color)));
        }
}

TEST_CASE("vertical specialization and compositions") {
    Roots C2(RootSystem('C', 2));
    const int dbl = C2.find_label("[1,2,1]"), last = C2.find_label("[2]");
    CHECK(compositions(3).size() == 4);
    CHECK(compositions(1) == std::vector<std::vector<int>>{{1}});
    // one root, t = (1): w -> v^{-2} z
    auto d1 = single(C2, "[1]");
    std::vector<std::vector<int>> t1(C2.size());
    t1[static_cast<std::size_t>(C2.find_label("[1]"))] = {1};
    CHECK(vertical_specialize(C2, TP::var(1, 0), d1, t1) == TP::var(1, 0).scaled(RationalV::vpow(-2)));
    // t = (2) on a norm 2 root: (w1, w2) -> (v^-4 z, v^-8 z)
    auto d2 = single(C2, "[2]", 2);
    std::vector<std::vector<int>> t2(C2.size());
    t2[static_cast<std::size_t>(last)] = {2};
    CHECK(vertical_specialize(C2, TP::var(2, 0) * TP::var(2, 1, 2), d2, t2) ==
          TP::var(1, 0, 3).scaled(RationalV::vpow(-20)));
    // empty d: constants untouched
    KostantPartition d0(C2.size(), 0);
    std::vector<std::vector<int>> t0(C2.size());
    CHECK(vertical_specialize(C2, TP::constant(0, RationalV(7)), d0, t0) == TP::constant(0, RationalV(7)));
    (void)dbl;
}

TEST_CASE("phi_d") {
    Roots C2(RootSystem('C', 2)), C3(RootSystem('C', 3));
    TrigShuffle a2(C2.sys()), a3(C3.sys());
    Psi<TrigKernel> psi2(a2);

    // leading form of [1,2,1]: <2>^2 w^2 up to a unit
    const int dbl = C2.find_label("[1,2,1]");
    auto F = psi2(tilde_root_vector(C2, dbl, 0, 1));
    auto img = phi_d(C2, F, single(C2, "[1,2,1]"));
    CHECK_FALSE(img.grading_mismatch);
    CHECK(proportional_poly(img.g, TP::var(1, 0, 2).scaled(RationalV(angle(2) * angle(2)))).has_value());

    // wrong grading: zero image
    auto bad = phi_d(C2, F, single(C2, "[1,2]"));
    CHECK(bad.grading_mismatch);
    CHECK(bad.g.is_zero());

    // assignment for [1,3,2]: x11 -> w, x21 -> v^-1 w, x22 -> v^-5 w, x31 -> v^-3 w
    ShuffleElement M{{1, 2, 1}, TP::monomial({1, 1, 2, 3}, RationalV(1))};
    auto m = phi_d(C3, M, single(C3, "[1,3,2]"));
    CHECK(m.g == TP::var(1, 0, 7).scaled(RationalV::vpow(-1 - 10 - 9)));

    // split independence on symmetric inputs
    std::mt19937 rng(11);
    Psi<TrigKernel> psi3(a3);
    auto E = psi3(tilde_root_vector(C3, C3.find_label("[1,2]"), 0, 1));
    auto G = a3.star(E, psi3(tilde_root_vector(C3, C3.find_label("[2,3]"), 1, -1)));
    for (const auto& d : kostant_partitions(C3, G.k)) {
        auto base = phi_d(C3, G, d);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::vector<int>> order;
            for (int c = 0; c < 3; ++c) {
                std::vector<int> o(static_cast<std::size_t>(G.k[static_cast<std::size_t>(c)]));
                std::iota(o.begin(), o.end(), 1);
                std::shuffle(o.begin(), o.end(), rng);
                order.push_back(o);
            }
            CHECK(phi_d(C3, G, d, &order).g == base.g);
        }
    }
}

TEST_CASE("membership: controls") {
    Roots C2(RootSystem('C', 2));
    TrigShuffle alg(C2.sys());
    Psi<TrigKernel> psi(alg);
    const int first = C2.find_label("[1]"), last = C2.find_label("[2]");

    CHECK(lusztig_member(C2, alg.generator(1, 3)).ok);
    CHECK(rtt_member(C2, alg.unit()).ok);
    CHECK(lusztig_member(C2, alg.unit()).ok);

    auto half = alg.generator(1, 0).scaled(RationalV(mpq_class(1, 2)));
    auto lh = lusztig_member(C2, half);
    CHECK_FALSE(lh.ok);
    CHECK_FALSE(lh.witness.empty());

    // <2> missing on [n]
    auto rn = rtt_member(C2, alg.generator(2, 0));
    CHECK_FALSE(rn.ok);
    CHECK_FALSE(rn.witness.empty());
    // <1> missing on [1]
    CHECK_FALSE(rtt_member(C2, psi(tilde_root_vector(C2, first, 0, 1))).ok);

    // cross specialization of the square of a normalized vector is divisible by [2]
    auto R1 = psi(rtt_root_vector(C2, first, 0, 1));
    auto sq = alg.star(R1, R1);
    std::vector<std::vector<int>> t(C2.size());
    t[static_cast<std::size_t>(first)] = {2};
    auto cr = cross_specialize(C2, sq, single(C2, "[1]", 2), t);
    CHECK(cr.prefactor_ok);
    CHECK(cr.divisible);
    CHECK(rtt_member(C2, sq).ok);
    // but not after dividing by [2]
    CHECK_FALSE(rtt_member(C2, sq.scaled(RationalV(LaurentZ(1), quantum_int(2)))).ok);

    for (std::size_t b = 0; b < C2.size(); ++b)
        for (int s = -1; s <= 1; ++s)
            for (int eps : {1, -1}) {
                INFO(C2[b].label << " s=" << s << " eps=" << eps);
                CHECK(lusztig_member(C2, psi(divided_power(C2, static_cast<int>(b), s, 2, eps))).ok);
                CHECK(rtt_member(C2, psi(rtt_root_vector(C2, static_cast<int>(b), s, eps))).ok);
            }
    // divided powers are not in the RTT form
    CHECK_FALSE(rtt_member(C2, psi(divided_power(C2, last, 0, 2, 1))).ok);
}

TEST_CASE("leading terms and vanishing in C2") {
    Roots C2(RootSystem('C', 2));
    auto vec = [&](int b, int s) { return tilde_root_vector(C2, b, s, 1); };
    Grading k{2, 1};
    auto keys = pbwd_keys(C2, k, 0, 1);
    const auto parts = kostant_partitions(C2, k);
    int vanish = 0;
    for (const auto& h : keys) {
        const auto dh = h.deg(C2.size());
        for (const auto& dp : parts)
            if (kp_less(dp, dh)) {
                CHECK(verify_vanishing(C2, h, dp, vec));
                ++vanish;
            }
        for (const auto& h2 : keys)
            if (h2.deg(C2.size()) == dh) CHECK(verify_leading(C2, h, h2, vec).ok);
    }
    CHECK(vanish > 0);
}

TEST_CASE("root leading terms with random lambdas") {
    std::mt19937 rng(23);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'C', 3}, {'D', 4}}) {
        Roots R(RootSystem(t, n));
        TrigShuffle alg(R.sys());
        Psi<TrigKernel> psi(alg);
        for (std::size_t b = 0; b < R.size(); ++b)
            for (int s = -1; s <= 1; ++s) {
                auto spec = random_spec(R, static_cast<int>(b), s, rng);
                auto rep = verify_root_leading(R, psi(root_vector(R, spec)), static_cast<int>(b), s);
                INFO(R.qualified_name(R[b]) << " s=" << s << " " << rep.witness);
                CHECK(rep.ok);
            }
    }
    Roots C2(RootSystem('C', 2));
    TrigShuffle alg(C2.sys());
    Psi<TrigKernel> psi(alg);
    const int b = C2.find_label("[1,2]");
    auto wrong = verify_root_leading(C2, psi(tilde_root_vector(C2, b, 0, 1)), b, 1);
    CHECK_FALSE(wrong.ok);
    CHECK(wrong.witness.find("expected") != std::string::npos);
    CHECK_FALSE(verify_root_leading(C2, alg.generator(1, 0), b, 0).ok);
}
