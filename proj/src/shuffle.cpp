#include "shuffle_forge/shuffle.hpp"

#include "packed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace sf {

Layout::Layout(Grading kk) : k(std::move(kk)), off(block_offsets(k)) {}

int Layout::color_of(int v) const {
    for (std::size_t c = 0; c < k.size(); ++c)
        if (v < off[c + 1]) return static_cast<int>(c) + 1;
    throw std::out_of_range("Layout::color_of");
}

std::vector<std::string> Layout::names() const {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < k.size(); ++c)
        for (int r = 1; r <= k[c]; ++r) out.push_back("x[" + std::to_string(c + 1) + "][" + std::to_string(r) + "]");
    return out;
}

// ---------------------------------------------------------------- kernels

SparsePoly<RationalV> TrigKernel::wheel_substitute(const SparsePoly<RationalV>& f, const std::vector<int>& ivars,
                                                   int jvar, int di, int aij) {
    const int nv = f.nvars();
    std::vector<int> target(static_cast<std::size_t>(nv));
    std::vector<RationalV> scal(static_cast<std::size_t>(nv), RationalV(1));
    std::iota(target.begin(), target.end(), 0);
    for (std::size_t m = 0; m < ivars.size(); ++m) {
        target[static_cast<std::size_t>(ivars[m])] = nv;
        scal[static_cast<std::size_t>(ivars[m])] = RationalV::vpow(-2 * di * static_cast<int>(m));
    }
    target[static_cast<std::size_t>(jvar)] = nv;
    scal[static_cast<std::size_t>(jvar)] = RationalV::vpow(di * aij);
    return substitute_monomial(f, target, scal, nv + 1);
}

std::string TrigKernel::wheel_witness(const std::vector<std::string>& iv, const std::string& jv, int di, int aij) {
    std::ostringstream os;
    os << iv[0];
    for (std::size_t m = 1; m < iv.size(); ++m) os << " = v^" << 2 * di * static_cast<int>(m) << "*" << iv[m];
    os << " = v^" << -di * aij << "*" << jv;
    return os.str();
}

SparsePoly<PolyH> RatKernel::wheel_substitute(const SparsePoly<PolyH>& f, const std::vector<int>& ivars, int jvar,
                                              int di, int aij) {
    const int nv = f.nvars();
    std::vector<SparsePoly<PolyH>> img;
    for (int i = 0; i < nv; ++i) img.push_back(SparsePoly<PolyH>::var(nv + 1, i));
    auto t = SparsePoly<PolyH>::var(nv + 1, nv);
    for (std::size_t m = 0; m < ivars.size(); ++m)
        img[static_cast<std::size_t>(ivars[m])] =
            t - SparsePoly<PolyH>::constant(nv + 1, PolyH::hpow(1, mpq_class(static_cast<long>(m) * di)));
    img[static_cast<std::size_t>(jvar)] = t + SparsePoly<PolyH>::constant(nv + 1, PolyH::hpow(1, mpq_class(di * aij, 2)));
    return substitute_poly(f, img, nv + 1);
}

std::string RatKernel::wheel_witness(const std::vector<std::string>& iv, const std::string& jv, int di, int aij) {
    std::ostringstream os;
    os << iv[0];
    for (std::size_t m = 1; m < iv.size(); ++m) os << " = " << iv[m] << " + " << di * static_cast<int>(m) << "*h";
    mpq_class c(-di * aij, 2);
    c.canonicalize();
    os << " = " << jv << " + " << c.get_str() << "*h";
    return os.str();
}

// ---------------------------------------------------------------- algebra

template <class K>
Element<K> ShuffleAlgebraT<K>::unit() const {
    return {Grading(static_cast<std::size_t>(rank()), 0), SparsePoly<S>::constant(0, S(1))};
}

template <class K>
Element<K> ShuffleAlgebraT<K>::generator(int color, int mode) const {
    if (color < 1 || color > rank()) throw ConfigError("generator color out of range");
    if (!K::laurent && mode < 0) throw ConfigError("negative mode in the rational algebra");
    Grading k(static_cast<std::size_t>(rank()), 0);
    k[static_cast<std::size_t>(color - 1)] = 1;
    return {k, SparsePoly<S>::var(1, 0, mode)};
}

template <class K>
SparsePoly<typename K::S> ShuffleAlgebraT<K>::denominator(const Grading& k) const {
    Layout L(k);
    const int N = L.nvars();
    auto d = SparsePoly<S>::constant(N, S(1));
    for (int i = 1; i <= rank(); ++i)
        for (int j = i + 1; j <= rank(); ++j) {
            if (sys_.a(i, j) == 0) continue;
            for (int r = 1; r <= k[static_cast<std::size_t>(i - 1)]; ++r)
                for (int s = 1; s <= k[static_cast<std::size_t>(j - 1)]; ++s)
                    d = d * (SparsePoly<S>::var(N, L.var(i, r)) - SparsePoly<S>::var(N, L.var(j, s)));
        }
    return d;
}

namespace {

// Minimal coset representatives of S_m / (S_k x S_l) per color: F's copies
// go to the chosen positions, G's to the rest.  fn(perm, sign).
void for_each_coset(const Grading& k, const Grading& m, const Layout& Lm,
                    const std::function<void(const std::vector<int>&, int)>& fn) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const int mc = m[static_cast<std::size_t>(c)], kc = k[static_cast<std::size_t>(c)];
        std::vector<int> sel(static_cast<std::size_t>(mc), 0);
        std::fill(sel.begin(), sel.begin() + kc, 1);
        do {
            std::vector<int> pos;
            for (int t = 0; t < mc; ++t)
                if (sel[static_cast<std::size_t>(t)]) pos.push_back(t);
            subsets[static_cast<std::size_t>(c)].push_back(pos);
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    std::vector<int> perm(static_cast<std::size_t>(Lm.nvars()));
    std::function<void(int, int)> rec = [&](int c, int sign) {
        if (c == n) {
            fn(perm, sign);
            return;
        }
        const int mc = m[static_cast<std::size_t>(c)], kc = k[static_cast<std::size_t>(c)];
        const int base = Lm.off[static_cast<std::size_t>(c)];
        for (const auto& pos : subsets[static_cast<std::size_t>(c)]) {
            std::vector<char> used(static_cast<std::size_t>(mc), 0);
            int inv = 0;
            for (int t = 0; t < kc; ++t) {
                perm[static_cast<std::size_t>(base + t)] = base + pos[static_cast<std::size_t>(t)];
                used[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])] = 1;
                inv += pos[static_cast<std::size_t>(t)] - t;
            }
            int u = kc;
            for (int t = 0; t < mc; ++t)
                if (!used[static_cast<std::size_t>(t)]) perm[static_cast<std::size_t>(base + u++)] = base + t;
            rec(c + 1, (inv % 2) ? -sign : sign);
        }
    };
    rec(0, 1);
}

// Conversion between SparsePoly<S> and packed integer polynomials, the
// scalar variable (v or h) living in slot N.
using Factor = std::vector<std::pair<std::vector<int>, packed::Coef>>;

template <class S>
struct PackedCodec;

template <>
struct PackedCodec<RationalV> {
    using Den = LaurentZ;
    static Den one() { return LaurentZ(1); }
    static Den common_den(const SparsePoly<RationalV>& f) {
        LaurentZ d(1);
        for (const auto& [e, c] : f.terms()) {
            if (c.den().is_one()) continue;
            d = *LaurentZ::divexact(d * c.den(), gcd(d, c.den()));
        }
        return d;
    }
    static packed::Poly encode(const SparsePoly<RationalV>& f, const Den& D, int N) {
        std::vector<packed::Term> out;
        std::vector<int> e(static_cast<std::size_t>(N) + 1);
        for (const auto& [x, c] : f.terms()) {
            std::copy(x.begin(), x.end(), e.begin());
            auto m = LaurentZ::divexact(D, c.den());
            if (!m) throw std::logic_error("packed star: bad common denominator");
            for (const auto& [ve, z] : (c.num() * *m).terms()) {
                e[static_cast<std::size_t>(N)] = ve;
                out.push_back({packed::encode(e.data(), N + 1), packed::to_coef(z)});
            }
        }
        return packed::from_terms(std::move(out));
    }
    // zeta numerator x_a - v^{-p} x_b times `scale`
    static Factor zeta(int N, int a, int b, int p, int& scale) {
        scale = 1;
        std::vector<int> ea(static_cast<std::size_t>(N) + 1, 0), eb = ea;
        ea[static_cast<std::size_t>(a)] = 1;
        eb[static_cast<std::size_t>(b)] = 1;
        eb[static_cast<std::size_t>(N)] = -p;
        return {{ea, 1}, {eb, -1}};
    }
    static SparsePoly<RationalV> decode(const packed::Poly& p, int N, const Den& D, int scale_pow) {
        if (scale_pow != 0) throw std::logic_error("packed star: unexpected scale");
        std::map<Exp, std::vector<std::pair<int, mpz_class>>> acc;
        std::vector<int> e(packed::kSlots);
        for (const auto& t : p.t) {
            packed::decode(t.k, e.data(), packed::kSlots);
            acc[Exp(e.begin(), e.begin() + N)].emplace_back(e[static_cast<std::size_t>(N)], packed::from_coef(t.c));
        }
        SparsePoly<RationalV> r(N);
        for (auto& [x, ts] : acc) r.add_term(x, RationalV(LaurentZ::from_terms(ts), D));
        return r;
    }
};

template <>
struct PackedCodec<PolyH> {
    using Den = mpz_class;
    static Den one() { return 1; }
    static Den common_den(const SparsePoly<PolyH>& f) {
        mpz_class d = 1;
        for (const auto& [e, c] : f.terms())
            for (const auto& q : c.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
        return d;
    }
    static packed::Poly encode(const SparsePoly<PolyH>& f, const Den& D, int N) {
        std::vector<packed::Term> out;
        std::vector<int> e(static_cast<std::size_t>(N) + 1);
        for (const auto& [x, c] : f.terms()) {
            std::copy(x.begin(), x.end(), e.begin());
            for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
                if (c.coeffs()[j] == 0) continue;
                mpq_class q = c.coeffs()[j] * D;
                q.canonicalize();
                e[static_cast<std::size_t>(N)] = static_cast<int>(j);
                out.push_back({packed::encode(e.data(), N + 1), packed::to_coef(q.get_num())});
            }
        }
        return packed::from_terms(std::move(out));
    }
    // 2 (x_a - x_b + (p/2) h)
    static Factor zeta(int N, int a, int b, int p, int& scale) {
        scale = 2;
        std::vector<int> ea(static_cast<std::size_t>(N) + 1, 0), eb = ea, eh = ea;
        ea[static_cast<std::size_t>(a)] = 1;
        eb[static_cast<std::size_t>(b)] = 1;
        eh[static_cast<std::size_t>(N)] = 1;
        return {{ea, 2}, {eb, -2}, {eh, p}};
    }
    static SparsePoly<PolyH> decode(const packed::Poly& p, int N, const Den& D, int scale_pow) {
        mpz_class den = D;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(scale_pow));
        SparsePoly<PolyH> r(N);
        std::vector<int> e(packed::kSlots);
        for (const auto& t : p.t) {
            packed::decode(t.k, e.data(), packed::kSlots);
            mpq_class q(packed::from_coef(t.c), den);
            q.canonicalize();
            r.add_term(Exp(e.begin(), e.begin() + N), PolyH::hpow(e[static_cast<std::size_t>(N)], q));
        }
        return r;
    }
};

}  // namespace

template <class K>
Element<K> ShuffleAlgebraT<K>::star(const Elt& F, const Elt& G, StarMode mode) const {
    const int n = rank();
    if (static_cast<int>(F.k.size()) != n || static_cast<int>(G.k.size()) != n)
        throw std::invalid_argument("star: grading length mismatch");
    Grading m(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(c)] = F.k[static_cast<std::size_t>(c)] + G.k[static_cast<std::size_t>(c)];
    if (F.f.is_zero() || G.f.is_zero()) return zero(m);
    if (total(F.k) == 0) return {m, G.f.scaled(F.f.lead().second)};
    if (total(G.k) == 0) return {m, F.f.scaled(G.f.lead().second)};

    Layout Lm(m);
    const int N = Lm.nvars();
    std::vector<int> mapF, mapG;  // F uses the first copies, G the remaining ones
    for (int c = 1; c <= n; ++c) {
        const int kc = F.k[static_cast<std::size_t>(c - 1)];
        const int lc = G.k[static_cast<std::size_t>(c - 1)];
        for (int r = 1; r <= kc; ++r) mapF.push_back(Lm.var(c, r));
        for (int r = 1; r <= lc; ++r) mapG.push_back(Lm.var(c, kc + r));
    }
    // cross factors (a in F, b in G) and Vandermonde factors inside each block,
    // which keep the product antisymmetric under the block permutations
    struct Pair {
        int a, b, p;
    };
    std::vector<Pair> cross, vdm;
    bool negate = false;
    for (int a : mapF) {
        const int ca = Lm.color_of(a);
        for (int b : mapG) {
            const int cb = Lm.color_of(b);
            const int p = sys_.pairing(ca, cb);
            if (p == 0) continue;
            cross.push_back({a, b, p});
            if (ca > cb) negate = !negate;
        }
    }
    for (const auto* blk : {&mapF, &mapG})
        for (std::size_t x = 0; x < blk->size(); ++x)
            for (std::size_t y = x + 1; y < blk->size(); ++y)
                if (Lm.color_of((*blk)[x]) == Lm.color_of((*blk)[y])) vdm.push_back({(*blk)[x], (*blk)[y], 0});

    const auto fF = F.f.relabeled(mapF, N), fG = G.f.relabeled(mapG, N);
    if (mode == StarMode::Cosets && N + 1 <= packed::kSlots) {
        using Codec = PackedCodec<S>;
        try {
            const auto dF = Codec::common_den(fF), dG = Codec::common_den(fG);
            // Color by color: multiply in the factors touching the color, sum
            // over its cosets and divide by its Vandermonde.  Factors free of
            // the color are invariant under its permutations.
            struct Pending {
                Factor small;
                const SparsePoly<S>* big = nullptr;
                std::vector<char> colors;
                bool done = false;
            };
            std::vector<Pending> pend;
            auto colors_of = [&](const std::vector<int>& vars) {
                std::vector<char> cs(static_cast<std::size_t>(n) + 1, 0);
                for (int x : vars) cs[static_cast<std::size_t>(Lm.color_of(x))] = 1;
                return cs;
            };
            pend.push_back({{}, &fF, colors_of(mapF)});
            pend.push_back({{}, &fG, colors_of(mapG)});
            int scale_pow = 0;
            for (const auto& c : cross) {
                int sc = 1;
                pend.push_back({Codec::zeta(N, c.a, c.b, c.p, sc), nullptr, colors_of({c.a, c.b})});
                if (sc == 2) ++scale_pow;
            }
            std::vector<char> trivial(static_cast<std::size_t>(n) + 1, 0);
            for (int c = 1; c <= n; ++c)
                trivial[static_cast<std::size_t>(c)] =
                    F.k[static_cast<std::size_t>(c - 1)] == 0 || G.k[static_cast<std::size_t>(c - 1)] == 0;
            for (const auto& c : vdm) {
                if (trivial[static_cast<std::size_t>(Lm.color_of(c.a))]) continue;
                std::vector<int> ea(static_cast<std::size_t>(N) + 1, 0), eb = ea;
                ea[static_cast<std::size_t>(c.a)] = 1;
                eb[static_cast<std::size_t>(c.b)] = 1;
                pend.push_back({{{ea, 1}, {eb, -1}}, nullptr, colors_of({c.a, c.b})});
            }
            packed::Poly P = packed::from_terms({{packed::encode(nullptr, 0), negate ? -1 : 1}});
            auto absorb = [&](Pending& x) {
                if (x.big) {
                    const auto D = x.big == &fF ? dF : dG;
                    P = packed::mul(P, Codec::encode(*x.big, D, N));
                } else {
                    P = packed::mul_small(P, x.small, N + 1);
                }
                x.done = true;
            };
            std::vector<int> order;
            for (int c = 1; c <= n; ++c)
                if (!trivial[static_cast<std::size_t>(c)]) order.push_back(c);
            auto ncos = [&](int c) {
                mpz_class r;
                mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m[static_cast<std::size_t>(c - 1)]),
                             static_cast<unsigned long>(F.k[static_cast<std::size_t>(c - 1)]));
                return r;
            };
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return ncos(x) < ncos(y); });
            for (int c : order) {
                for (auto& x : pend)
                    if (!x.done && x.colors[static_cast<std::size_t>(c)]) absorb(x);
                Grading kc(static_cast<std::size_t>(n), 0), mc(static_cast<std::size_t>(n), 0);
                for (int d = 1; d <= n; ++d) {
                    // other colors take the identity coset
                    kc[static_cast<std::size_t>(d - 1)] = d == c ? F.k[static_cast<std::size_t>(d - 1)] : 0;
                    mc[static_cast<std::size_t>(d - 1)] = m[static_cast<std::size_t>(d - 1)];
                }
                packed::Poly Q;
                for_each_coset(kc, mc, Lm, [&](const std::vector<int>& perm, int sign) {
                    packed::add_into(Q, packed::relabel(P, perm), sign < 0);
                });
                const int base = Lm.off[static_cast<std::size_t>(c - 1)];
                for (int r = 0; r < m[static_cast<std::size_t>(c - 1)]; ++r)
                    for (int s2 = r + 1; s2 < m[static_cast<std::size_t>(c - 1)]; ++s2)
                        if (!packed::divide_difference(Q, base + r, base + s2))
                            throw std::logic_error("antisymmetric part not divisible by Vandermonde factor");
                P = std::move(Q);
            }
            for (auto& x : pend)
                if (!x.done) absorb(x);
            packed::Poly& Q = P;
            return {m, Codec::decode(Q, N, dF * dG, scale_pow)};
        } catch (const packed::Overflow&) {
            // fall back to the generic kernel below
        }
    }

    SparsePoly<S> P = fF * fG;
    for (const auto& c : cross) P = P * K::zeta_num(N, c.a, c.b, c.p);
    for (const auto& c : vdm) P = P * (SparsePoly<S>::var(N, c.a) - SparsePoly<S>::var(N, c.b));
    if (negate) P = -P;

    SparsePoly<S> Q(N);
    if (mode == StarMode::FullGroup) {
        Q = antisymmetrize(P, m);
        mpz_class w = 1;
        for (int c = 0; c < n; ++c) {
            mpz_class f1, f2;
            mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(F.k[static_cast<std::size_t>(c)]));
            mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(G.k[static_cast<std::size_t>(c)]));
            w *= f1 * f2;
        }
        Q = Q.scaled(S(mpq_class(mpz_class(1), w)));
    } else {
        for_each_coset(F.k, m, Lm, [&](const std::vector<int>& perm, int sign) {
            if (sign > 0) Q += P.relabeled(perm);
            else Q -= P.relabeled(perm);
        });
    }
    return {m, divide_block_vandermonde(Q, m)};
}

template <class K>
WheelReport ShuffleAlgebraT<K>::wheel_check(const Elt& F) const {
    WheelReport rep;
    if (F.f.is_zero()) return rep;
    Layout L(F.k);
    const auto names = L.names();
    for (int i = 1; i <= rank(); ++i)
        for (int j = 1; j <= rank(); ++j) {
            if (i == j || sys_.a(i, j) == 0) continue;
            const int m = 1 - sys_.a(i, j);
            const int ki = F.k[static_cast<std::size_t>(i - 1)], kj = F.k[static_cast<std::size_t>(j - 1)];
            if (ki < m || kj < 1) continue;
            // ordered choices of m distinct copies of color i
            std::vector<int> copies(static_cast<std::size_t>(ki));
            std::iota(copies.begin(), copies.end(), 1);
            std::vector<int> chosen;
            std::vector<char> used(static_cast<std::size_t>(ki) + 1, 0);
            std::function<bool()> rec = [&]() -> bool {
                if (static_cast<int>(chosen.size()) == m) {
                    for (int r = 1; r <= kj; ++r) {
                        std::vector<int> iv;
                        std::vector<std::string> in;
                        for (int c : chosen) {
                            iv.push_back(L.var(i, c));
                            in.push_back(names[static_cast<std::size_t>(L.var(i, c))]);
                        }
                        auto img = K::wheel_substitute(F.f, iv, L.var(j, r), sys_.d(i), sys_.a(i, j));
                        if (!img.is_zero()) {
                            rep.ok = false;
                            rep.witness = K::wheel_witness(in, names[static_cast<std::size_t>(L.var(j, r))], sys_.d(i),
                                                           sys_.a(i, j));
                            return true;
                        }
                    }
                    return false;
                }
                for (int c = 1; c <= ki; ++c) {
                    if (used[static_cast<std::size_t>(c)]) continue;
                    used[static_cast<std::size_t>(c)] = 1;
                    chosen.push_back(c);
                    bool stop = rec();
                    chosen.pop_back();
                    used[static_cast<std::size_t>(c)] = 0;
                    if (stop) return true;
                }
                return false;
            };
            if (rec()) return rep;
        }
    return rep;
}

// ------------------------------------------------------------ expressions

template <class S>
Grading expr_grading(const ExprPtr<S>& e, int rank) {
    using Kind = typename FreeExpr<S>::Kind;
    Grading k(static_cast<std::size_t>(rank), 0);
    switch (e->kind) {
        case Kind::Unit: break;
        case Kind::Gen:
            if (e->color < 1 || e->color > rank) throw ConfigError("generator color out of range");
            k[static_cast<std::size_t>(e->color - 1)] = 1;
            break;
        case Kind::Prod:
        case Kind::Comm:
            for (const auto& x : e->kids) {
                auto g = expr_grading(x, rank);
                for (std::size_t c = 0; c < k.size(); ++c) k[c] += g[c];
            }
            break;
        case Kind::Sum: {
            k = expr_grading(e->kids.at(0), rank);
            for (const auto& x : e->kids)
                if (expr_grading(x, rank) != k) throw ConfigError("sum of terms of different degree");
            break;
        }
        case Kind::Scale: k = expr_grading(e->kids.at(0), rank); break;
    }
    return k;
}

template Grading expr_grading<RationalV>(const TrigExpr&, int);
template Grading expr_grading<PolyH>(const YangExpr&, int);

namespace {

std::string lambda_str(const RationalV& l) {
    if (auto m = l.as_scaled_monomial(); m && m->first == 1) return m->second == 0 ? "" : "v^" + std::to_string(m->second);
    return l.str();
}
std::string lambda_str(const PolyH& l) { return l.is_one() ? "" : l.str(); }

template <class S>
std::string expr_str_impl(const ExprPtr<S>& e, const char* leaf) {
    using Kind = typename FreeExpr<S>::Kind;
    switch (e->kind) {
        case Kind::Unit: return "1";
        case Kind::Gen: return std::string(leaf) + "(" + std::to_string(e->color) + "," + std::to_string(e->mode) + ")";
        case Kind::Prod: {
            std::string s = "(";
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                if (i) s += "*";
                s += expr_str_impl(e->kids[i], leaf);
            }
            return s + ")";
        }
        case Kind::Sum: {
            std::string s = "(";
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                if (i) s += "+";
                s += expr_str_impl(e->kids[i], leaf);
            }
            return s + ")";
        }
        case Kind::Scale: return "(" + ScalarOps<S>::str(e->scalar) + ")*" + expr_str_impl(e->kids[0], leaf);
        case Kind::Comm: {
            std::string l = lambda_str(e->scalar);
            std::string head = l.empty() ? "comm" : "comm[" + l + "]";
            return head + "(" + expr_str_impl(e->kids[0], leaf) + "," + expr_str_impl(e->kids[1], leaf) + ")";
        }
    }
    return "";
}

}  // namespace

std::string expr_str(const TrigExpr& e) { return expr_str_impl(e, "e"); }
std::string expr_str(const YangExpr& e) { return expr_str_impl(e, "y"); }

template <class K>
Element<K> Psi<K>::product(const std::vector<Elt>& xs) const {
    Elt acc = alg_.unit();
    for (const auto& x : xs) acc = alg_.star(acc, x, mode_);
    return acc;
}

template <class K>
Element<K> Psi<K>::operator()(const ExprPtr<S>& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    using Kind = typename FreeExpr<S>::Kind;
    Elt r;
    switch (e->kind) {
        case Kind::Unit: r = alg_.unit(); break;
        case Kind::Gen: r = alg_.generator(e->color, e->mode); break;
        case Kind::Prod: {
            r = (*this)(e->kids[0]);
            for (std::size_t i = 1; i < e->kids.size(); ++i) r = alg_.star(r, (*this)(e->kids[i]), mode_);
            break;
        }
        case Kind::Sum: {
            r = (*this)(e->kids.at(0));
            for (std::size_t i = 1; i < e->kids.size(); ++i) r = r + (*this)(e->kids[i]);
            break;
        }
        case Kind::Scale: r = (*this)(e->kids[0]).scaled(e->scalar); break;
        case Kind::Comm: {
            Elt a = (*this)(e->kids[0]), b = (*this)(e->kids[1]);
            r = alg_.star(a, b, mode_) - alg_.star(b, a, mode_).scaled(e->scalar);
            break;
        }
    }
    memo_.emplace(e.get(), r);
    keep_.push_back(e);
    return r;
}

template class ShuffleAlgebraT<TrigKernel>;
template class ShuffleAlgebraT<RatKernel>;
template class Psi<TrigKernel>;
template class Psi<RatKernel>;

// ---------------------------------------------------------------- relations

std::string check_loop_relation(const TrigShuffle& alg, int i, int j, int r, int s) {
    const auto& sys = alg.sys();
    const RationalV va = RationalV::vpow(sys.pairing(i, j));
    using E = FreeExpr<RationalV>;
    auto pr = [](int a, int ra, int b, int rb) { return E::prod(E::gen(a, ra), E::gen(b, rb)); };
    auto expr = E::sum({pr(i, r + 1, j, s), E::scale(-va, pr(i, r, j, s + 1)), E::scale(-va, pr(j, s, i, r + 1)),
                        pr(j, s + 1, i, r)});
    Psi<TrigKernel> psi(alg);
    auto F = psi(expr);
    if (F.is_zero()) return "";
    return "loop relation i=" + std::to_string(i) + " j=" + std::to_string(j) + " r=" + std::to_string(r) +
           " s=" + std::to_string(s) + " leaves " + F.f.str(Layout(F.k).names());
}

std::string check_serre_relation(const TrigShuffle& alg, int i, int j, const std::vector<int>& modes, int s) {
    const auto& sys = alg.sys();
    const int m = 1 - sys.a(i, j);
    if (static_cast<int>(modes.size()) != m) throw std::invalid_argument("serre: wrong number of modes");
    using E = FreeExpr<RationalV>;
    std::vector<ExprPtr<RationalV>> terms;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        for (int k = 0; k <= m; ++k) {
            RationalV c(quantum_binom(m, k, sys.d(i)));
            if (k % 2) c = -c;
            std::vector<ExprPtr<RationalV>> word;
            for (int t = 0; t < k; ++t) word.push_back(E::gen(i, modes[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]));
            word.push_back(E::gen(j, s));
            for (int t = k; t < m; ++t) word.push_back(E::gen(i, modes[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]));
            terms.push_back(E::scale(c, E::prod(word)));
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    Psi<TrigKernel> psi(alg);
    auto F = psi(E::sum(terms));
    if (F.is_zero()) return "";
    std::ostringstream os;
    os << "serre relation i=" << i << " j=" << j << " s=" << s << " modes=";
    for (int x : modes) os << x << ",";
    os << " leaves " << F.f.str(Layout(F.k).names());
    return os.str();
}

std::string check_yangian_relation(const RatShuffle& alg, int i, int j, int r, int s) {
    const auto& sys = alg.sys();
    using E = FreeExpr<PolyH>;
    auto c1 = [](ExprPtr<PolyH> a, ExprPtr<PolyH> b) { return E::comm(a, b, PolyH(1)); };
    auto xi = [&](int rr) { return E::gen(i, rr); };
    auto xj = [&](int ss) { return E::gen(j, ss); };
    PolyH coef = PolyH::hpow(1, mpq_class(-sys.pairing(i, j), 2));
    auto expr = E::sum({c1(xi(r + 1), xj(s)), E::scale(PolyH(-1), c1(xi(r), xj(s + 1))),
                        E::scale(coef, E::prod(xi(r), xj(s))), E::scale(coef, E::prod(xj(s), xi(r)))});
    Psi<RatKernel> psi(alg);
    auto F = psi(expr);
    if (F.is_zero()) return "";
    return "yangian relation i=" + std::to_string(i) + " j=" + std::to_string(j) + " r=" + std::to_string(r) +
           " s=" + std::to_string(s) + " leaves " + F.f.str(Layout(F.k).names());
}

std::string check_yangian_serre(const RatShuffle& alg, int i, int j, const std::vector<int>& modes, int s) {
    const auto& sys = alg.sys();
    const int m = 1 - sys.a(i, j);
    if (static_cast<int>(modes.size()) != m) throw std::invalid_argument("serre: wrong number of modes");
    using E = FreeExpr<PolyH>;
    std::vector<ExprPtr<PolyH>> terms;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        ExprPtr<PolyH> acc = E::gen(j, s);
        for (int t = m; t-- > 0;)
            acc = E::comm(E::gen(i, modes[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]), acc, PolyH(1));
        terms.push_back(acc);
    } while (std::next_permutation(idx.begin(), idx.end()));
    Psi<RatKernel> psi(alg);
    auto F = psi(E::sum(terms));
    if (F.is_zero()) return "";
    std::ostringstream os;
    os << "yangian serre i=" << i << " j=" << j << " s=" << s << " leaves " << F.f.str(Layout(F.k).names());
    return os.str();
}

}  // namespace sf
