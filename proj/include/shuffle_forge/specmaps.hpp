#pragma once

#include "shuffle_forge/rootvec.hpp"

namespace sf {

// Numbering of the variables w_{beta,s}, 1 <= s <= d_beta: roots in the convex
// order, s ascending.
struct WIndex {
    KostantPartition d;
    std::vector<int> off;
    explicit WIndex(KostantPartition dd);
    int size() const { return off.back(); }
    int var(int root, int s) const { return off[static_cast<std::size_t>(root)] + s - 1; }
    std::vector<std::string> names(const Roots& roots) const;  // "w[<label>][s]"
};

struct SpecImage {
    KostantPartition d;
    SparsePoly<RationalV> g;
    bool grading_mismatch = false;
};

// Product of linear factors: w^monomial * prod (w_l - v^a w_r).
struct LinearFactors {
    Exp monomial;
    struct Binomial {
        int l, a, r;
    };
    std::vector<Binomial> binomials;
    SparsePoly<RationalV> expand(int nv) const;
};

// f / factors, one linear factor at a time; throws NotDivisible naming the
// factor that left a remainder.
SparsePoly<RationalV> divide_factors(const SparsePoly<RationalV>& f, const LinearFactors& fac,
                                     const std::vector<std::string>& names);

bool two_step(const Roots& roots, int root);

// copy_order[c-1], if given, lists the copies of color c in the order they are
// handed out to the groups of the split (default ascending).
SpecImage phi_d(const Roots& roots, const ShuffleElement& F, const KostantPartition& d,
                const std::vector<std::vector<int>>* copy_order = nullptr);

// ------------------------------------------------------------------ tables

int kappa(const Roots& roots, int root);
LaurentZ c_factor(const Roots& roots, int root);
LaurentZ c_tilde(const Roots& roots, int root);
// B_beta in the variables w (index 0) and w' (index 1); ConfigError for one-step roots.
LinearFactors b_factors(const Roots& roots, int root);
SparsePoly<RationalV> b_factor(const Roots& roots, int root);
// G_beta in w_1..w_{d_beta} (indices 0..d_beta-1)
LinearFactors g_factors(const Roots& roots, int root, int dbeta);
SparsePoly<RationalV> g_factor(const Roots& roots, int root, int dbeta);
// A_d (type C) or 1 (type D)
LaurentZ a_factor(const Roots& roots, const KostantPartition& d);
// <1>^{k_1+..+k_{n-1}} <2>^{k_n} (type C), <1>^{|k|} (type D)
LaurentZ rtt_prefactor(const RootSystem& sys, const Grading& k);

// Sym over S_d of prod w_s^{r_s} prod_{i<j} (w_i - u^{-2} w_j)/(w_i - w_j), u = v^norm.
SparsePoly<RationalV> p_lambda(const std::vector<int>& r, int norm);

// ------------------------------------------------------ vertical and cross

// t[root] is a composition of d[root]; z_{beta,r} numbered by root then r.
SparsePoly<RationalV> vertical_specialize(const Roots& roots, const SparsePoly<RationalV>& g,
                                          const KostantPartition& d, const std::vector<std::vector<int>>& t);
std::vector<std::vector<int>> compositions(int m);

struct CrossResult {
    bool prefactor_ok = true;
    bool divisible = true;
    std::string witness;
    SparsePoly<RationalV> value;
};
CrossResult cross_specialize(const Roots& roots, const ShuffleElement& F, const KostantPartition& d,
                             const std::vector<std::vector<int>>& t);

// -------------------------------------------------------------- integrality

bool laurent_integral(const SparsePoly<RationalV>& f);
// f / c when every coefficient of the quotient lies in Z[v,v^-1]
std::optional<SparsePoly<RationalV>> divide_integral(const SparsePoly<RationalV>& f, const LaurentZ& c);

struct Membership {
    bool ok = true;
    std::string witness;
};
Membership lusztig_member(const Roots& roots, const ShuffleElement& F);
Membership rtt_member(const Roots& roots, const ShuffleElement& F);

// ----------------------------------------------------------- verification

using VectorFactory = std::function<TrigExpr(int root, int mode)>;

// phi_{d'}(Psi(E_h)) == 0
bool verify_vanishing(const Roots& roots, const PbwdKey& h, const KostantPartition& dprime, const VectorFactory& vec);

// h-independence of phi_d(Psi(E_h)) / prod P_{lambda_{h,beta}} for deg h1 = deg h2
// plus exact division of both images by prod G_beta.
struct LeadingReport {
    bool ok = true;
    std::string witness;
};
LeadingReport verify_leading(const Roots& roots, const PbwdKey& h1, const PbwdKey& h2, const VectorFactory& vec);

// phi_beta(F) = c * c_beta * w^{s + kappa_beta} for some c in Q^x v^Z
LeadingReport verify_root_leading(const Roots& roots, const ShuffleElement& F, int root, int s);

// c with a = c*b, c in Q^x v^Z
std::optional<RationalV> proportional_poly(const SparsePoly<RationalV>& a, const SparsePoly<RationalV>& b);

}  // namespace sf
