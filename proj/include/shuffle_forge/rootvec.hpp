#pragma once

#include "shuffle_forge/shuffle.hpp"

#include <array>
#include <functional>
#include <random>

namespace sf {

// Iterated-commutator recipe for E_{beta,s}.  modes has one entry per letter
// of the root's word; lambdas holds the v-exponents of the brackets in the
// order they are applied.  For [i,n,i] in type C the word splits as
// [i..n-1][i..n]: the first n-i-1 lambdas build E_{[i,n-1]}, the next n-i
// build E_{[i,n]}, the last one is the outer bracket.
struct RootVectorSpec {
    int root = 0;
    std::vector<int> modes;
    std::vector<int> lambdas;
    int mode_sum() const;
};

void validate_spec(const Roots& roots, const RootVectorSpec& spec);  // throws ConfigError
TrigExpr root_vector(const Roots& roots, const RootVectorSpec& spec);

// Tilde presets.  split[c-1] is the summand s_c attached to color c; entries
// of colors outside the root are ignored.  eps is +1 or -1.
RootVectorSpec tilde_spec(const Roots& roots, int root, const std::vector<int>& split, int eps);
// s = sum over letters of s_{letter}, so doubled letters count twice
int split_total(const Roots& roots, int root, const std::vector<int>& split);
// Puts all of s on a letter occurring once (the first letter, or n for [i,n,i]).
std::vector<int> default_split(const Roots& roots, int root, int s);
TrigExpr tilde_root_vector(const Roots& roots, int root, int s, int eps);

// Random decomposition of s and lambdas drawn from v^{-2..2}.  With nonneg the
// parts are >= 0 (s must be >= 0).
RootVectorSpec random_spec(const Roots& roots, int root, int s, std::mt19937& rng, bool nonneg = false);

// <2> tilde E for [n] in type C, <1> tilde E otherwise.
TrigExpr rtt_root_vector(const Roots& roots, int root, int s, int eps);
// tilde E^p / ([2]^p [p]_{v_beta}!) for C-type [i,n,i], tilde E^p / [p]_{v_beta}! otherwise.
TrigExpr divided_power(const Roots& roots, int root, int s, int p, int eps);

// Product of the root vectors over the support of h in ascending (beta, s) order.
TrigExpr pbwd_monomial(const PbwdKey& h, const std::function<TrigExpr(int root, int mode)>& vec);

// Closed-form image of a tilde vector, numerator over denom_beta:
// <1>^a1 <2>^a2 * monomial * prod Q(...) * extra.
struct ClosedFormImage {
    Grading k;
    int angle1 = 0, angle2 = 0;
    Exp monomial;
    std::vector<std::array<int, 4>> q_factors;  // variable indices x1,x2,y1,y2
    SparsePoly<RationalV> extra;

    RationalV prefactor() const;
    SparsePoly<RationalV> numerator() const;
    ShuffleElement element() const { return {k, numerator()}; }
};

// Q(x1,x2,y1,y2) = (1+v^2)(x1x2+y1y2) - v(x1+x2)(y1+y2) in nv variables.
SparsePoly<RationalV> q_form(int nv, int x1, int x2, int y1, int y2);

ClosedFormImage closed_form(const Roots& roots, int root, const std::vector<int>& split, int eps);

// c with a = c*b and c in Q^x v^Z, if any.
std::optional<RationalV> proportional(const ShuffleElement& a, const ShuffleElement& b);

}  // namespace sf
