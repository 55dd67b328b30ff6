#pragma once

#include "shuffle_forge/poly.hpp"
#include "shuffle_forge/roots.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sf {

// Variable x_{c,r} (color c in 1..n, copy r in 1..k_c) sits at index
// offset(c) + r - 1: colors ascending, copies ascending.
struct Layout {
    Grading k;
    std::vector<int> off;
    explicit Layout(Grading kk);
    int nvars() const { return off.back(); }
    int var(int color, int copy) const { return off[static_cast<std::size_t>(color - 1)] + copy - 1; }
    int color_of(int var) const;
    std::vector<std::string> names() const;  // "x[i][r]"
};

// ----------------------------------------------------------------- kernels

// Trigonometric: zeta_{ij}(z) = (z - v^{-(a_i,a_j)})/(z - 1).
struct TrigKernel {
    using S = RationalV;
    static constexpr bool laurent = true;
    static constexpr const char* leaf = "e";
    // numerator of zeta(x_a / x_b) with the pole (x_a - x_b) cleared
    static SparsePoly<S> zeta_num(int nv, int a, int b, int pairing) {
        return SparsePoly<S>::var(nv, a) - SparsePoly<S>::var(nv, b).scaled(RationalV::vpow(-pairing));
    }
    // Image of f under the wheel alignment of the copies ivars of color i
    // and jvar of color j; the common variable t is appended as index nv.
    static SparsePoly<S> wheel_substitute(const SparsePoly<S>& f, const std::vector<int>& ivars, int jvar,
                                          int di, int aij);
    static std::string wheel_witness(const std::vector<std::string>& ivars, const std::string& jvar, int di,
                                     int aij);
};

// Rational: zeta_{ij}(z) = 1 + (a_i,a_j) h / (2z) evaluated at z = x_a - x_b.
struct RatKernel {
    using S = PolyH;
    static constexpr bool laurent = false;
    static constexpr const char* leaf = "y";
    static SparsePoly<S> zeta_num(int nv, int a, int b, int pairing) {
        return SparsePoly<S>::var(nv, a) - SparsePoly<S>::var(nv, b) +
               SparsePoly<S>::constant(nv, PolyH::hpow(1, mpq_class(pairing, 2)));
    }
    static SparsePoly<S> wheel_substitute(const SparsePoly<S>& f, const std::vector<int>& ivars, int jvar,
                                          int di, int aij);
    static std::string wheel_witness(const std::vector<std::string>& ivars, const std::string& jvar, int di,
                                     int aij);
};

template <class K>
struct Element {
    using S = typename K::S;
    Grading k;
    SparsePoly<S> f;  // numerator over the fixed pole denominator

    bool is_zero() const { return f.is_zero(); }
    Element operator-() const { return {k, -f}; }
    Element scaled(const S& c) const { return {k, f.scaled(c)}; }
    friend Element operator+(const Element& a, const Element& b) {
        if (a.k != b.k) throw std::invalid_argument("adding shuffle elements of different degree");
        return {a.k, a.f + b.f};
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    friend bool operator==(const Element& a, const Element& b) { return a.k == b.k && a.f == b.f; }
};

enum class StarMode { Cosets, FullGroup };

struct WheelReport {
    bool ok = true;
    std::string witness;
};

template <class K>
class ShuffleAlgebraT {
public:
    using S = typename K::S;
    using Elt = Element<K>;

    explicit ShuffleAlgebraT(RootSystem sys) : sys_(std::move(sys)) {}
    const RootSystem& sys() const { return sys_; }
    int rank() const { return sys_.rank(); }

    Elt unit() const;
    Elt zero(const Grading& k) const { return {k, SparsePoly<S>(total(k))}; }
    Elt generator(int color, int mode) const;  // x_{color,1}^mode

    Elt star(const Elt& F, const Elt& G, StarMode mode = StarMode::Cosets) const;

    // Pole denominator prod_{i<j, a_ij != 0} prod (x_{i,r} - x_{j,s}).
    SparsePoly<S> denominator(const Grading& k) const;

    WheelReport wheel_check(const Elt& F) const;
    bool symmetric(const Elt& F) const { return is_block_symmetric(F.f, F.k); }

private:
    RootSystem sys_;
};

using TrigShuffle = ShuffleAlgebraT<TrigKernel>;
using RatShuffle = ShuffleAlgebraT<RatKernel>;
using ShuffleElement = Element<TrigKernel>;
using RationalShuffleElement = Element<RatKernel>;

// ------------------------------------------------------------- expressions

template <class S>
struct FreeExpr;
template <class S>
using ExprPtr = std::shared_ptr<const FreeExpr<S>>;

template <class S>
struct FreeExpr {
    enum class Kind { Unit, Gen, Prod, Sum, Scale, Comm };
    Kind kind = Kind::Unit;
    int color = 0, mode = 0;
    S scalar;  // Scale factor or commutator lambda
    std::vector<ExprPtr<S>> kids;

    static ExprPtr<S> unit() { return std::make_shared<FreeExpr>(); }
    static ExprPtr<S> gen(int i, int r) {
        auto e = std::make_shared<FreeExpr>();
        e->kind = Kind::Gen;
        e->color = i;
        e->mode = r;
        return e;
    }
    static ExprPtr<S> prod(std::vector<ExprPtr<S>> xs) {
        if (xs.empty()) return unit();
        if (xs.size() == 1) return xs[0];
        auto e = std::make_shared<FreeExpr>();
        e->kind = Kind::Prod;
        e->kids = std::move(xs);
        return e;
    }
    static ExprPtr<S> prod(ExprPtr<S> a, ExprPtr<S> b) { return prod(std::vector<ExprPtr<S>>{a, b}); }
    static ExprPtr<S> sum(std::vector<ExprPtr<S>> xs) {
        auto e = std::make_shared<FreeExpr>();
        e->kind = Kind::Sum;
        e->kids = std::move(xs);
        return e;
    }
    static ExprPtr<S> sum(ExprPtr<S> a, ExprPtr<S> b) { return sum(std::vector<ExprPtr<S>>{a, b}); }
    static ExprPtr<S> scale(const S& c, ExprPtr<S> a) {
        auto e = std::make_shared<FreeExpr>();
        e->kind = Kind::Scale;
        e->scalar = c;
        e->kids = {std::move(a)};
        return e;
    }
    // [a, b]_lambda = a b - lambda b a
    static ExprPtr<S> comm(ExprPtr<S> a, ExprPtr<S> b, const S& lambda) {
        auto e = std::make_shared<FreeExpr>();
        e->kind = Kind::Comm;
        e->scalar = lambda;
        e->kids = {std::move(a), std::move(b)};
        return e;
    }
};

using TrigExpr = ExprPtr<RationalV>;
using YangExpr = ExprPtr<PolyH>;

template <class S>
Grading expr_grading(const ExprPtr<S>& e, int rank);

// Printer producing the text DSL accepted by parse_expr.
std::string expr_str(const TrigExpr& e);
std::string expr_str(const YangExpr& e);

// Psi: free expressions to shuffle elements, memoized on node identity.
template <class K>
class Psi {
public:
    using S = typename K::S;
    using Elt = Element<K>;
    explicit Psi(const ShuffleAlgebraT<K>& alg, StarMode mode = StarMode::Cosets) : alg_(alg), mode_(mode) {}
    Elt operator()(const ExprPtr<S>& e);
    Elt product(const std::vector<Elt>& xs) const;

private:
    const ShuffleAlgebraT<K>& alg_;
    StarMode mode_;
    std::unordered_map<const FreeExpr<S>*, Elt> memo_;
    std::vector<ExprPtr<S>> keep_;  // keep memo keys alive
};

// Relation checks: return an empty string when the image vanishes,
// otherwise a description of the first offending instance.
std::string check_loop_relation(const TrigShuffle& alg, int i, int j, int r, int s);
std::string check_serre_relation(const TrigShuffle& alg, int i, int j, const std::vector<int>& modes, int s);
std::string check_yangian_relation(const RatShuffle& alg, int i, int j, int r, int s);
std::string check_yangian_serre(const RatShuffle& alg, int i, int j, const std::vector<int>& modes, int s);

extern template class ShuffleAlgebraT<TrigKernel>;
extern template class ShuffleAlgebraT<RatKernel>;
extern template class Psi<TrigKernel>;
extern template class Psi<RatKernel>;

}  // namespace sf
