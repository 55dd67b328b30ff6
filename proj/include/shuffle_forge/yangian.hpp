#pragma once

#include "shuffle_forge/shuffle.hpp"

#include <random>

namespace sf {

// zeta-hat_{ij}(z) = 1 + c h / z with c = (a_i, a_j) / 2
struct HZeta {
    mpq_class c;
    bool trivial() const { return c == 0; }
    std::string str() const;
};
HZeta hzeta(const RootSystem& sys, int i, int j);

// Plain iterated commutators; modes has one entry per letter of the word
// (for [i,n,i] in type C the word splits as [i..n-1][i..n]).
struct YangianSpec {
    int root = 0;
    std::vector<int> modes;
    int mode_sum() const;
};

void validate_yangian_spec(const Roots& roots, const YangianSpec& spec);  // throws ConfigError
YangExpr yangian_root_vector(const Roots& roots, const YangianSpec& spec);
// s on the first letter, or on n for [i,n,i] in type C
YangianSpec yangian_tilde_spec(const Roots& roots, int root, int s);
YangExpr yangian_tilde(const Roots& roots, int root, int s);
// h * X
YangExpr yangian_bar(const YangExpr& x);
YangianSpec random_yangian_spec(const Roots& roots, int root, int s, std::mt19937& rng);

// Closed-form images of the rational tilde vectors.
SparsePoly<PolyH> yangian_closed_form(const Roots& roots, int root, int s);
// Qhat(x1,x2,y1,y2) = 4(x1x2+y1y2) - 2(x1+x2)(y1+y2) + h^2
SparsePoly<PolyH> q_hat(int nv, int x1, int x2, int y1, int y2);
// c with a = c*b, c in Q^x
std::optional<mpq_class> proportional_q(const SparsePoly<PolyH>& a, const SparsePoly<PolyH>& b);

struct RatSpecImage {
    KostantPartition d;
    SparsePoly<PolyH> g;
    bool grading_mismatch = false;
};

// B_beta in w (index 0), w' (index 1) for two-step roots.
SparsePoly<PolyH> b_factor_rat(const Roots& roots, int root);
RatSpecImage phi_d_rat(const Roots& roots, const RationalShuffleElement& F, const KostantPartition& d,
                       const std::vector<std::vector<int>>* copy_order = nullptr);

// Smallest power of h over all coefficients; -1 for zero.
int hbar_valuation(const SparsePoly<PolyH>& f);

struct RatMembership {
    bool ok = true;
    std::string witness;
};
// phi_d(F) divisible by h^{sum d_beta kappa_beta} for all d
RatMembership is_good(const Roots& roots, const RationalShuffleElement& F);
// F divisible by h^{|k|} and phi_d(F) by h^{sum d_beta (kappa_beta + 1)}
RatMembership is_integral(const Roots& roots, const RationalShuffleElement& F);

// phi_beta(Psi(X)) = c h^{kappa} p(w) with p monic of degree s
RatMembership verify_yangian_leading(const Roots& roots, const RationalShuffleElement& F, int root, int s);

}  // namespace sf
