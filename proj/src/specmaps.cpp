#include "shuffle_forge/specmaps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sf {

namespace {

using TP = SparsePoly<RationalV>;

LaurentZ lpow(const LaurentZ& a, int e) {
    LaurentZ r(1);
    for (int t = 0; t < e; ++t) r = r * a;
    return r;
}

// v^a - 1
LaurentZ vm1(int a) { return LaurentZ::vpow(a) - LaurentZ(1); }

std::string factor_name(const LinearFactors::Binomial& b, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "(" << names[static_cast<std::size_t>(b.l)] << " - v^" << b.a << "*" << names[static_cast<std::size_t>(b.r)]
       << ")";
    return os.str();
}

LinearFactors relabel(const LinearFactors& f, const std::vector<int>& map, int nv) {
    LinearFactors r;
    r.monomial.assign(static_cast<std::size_t>(nv), 0);
    for (std::size_t i = 0; i < f.monomial.size(); ++i)
        r.monomial[static_cast<std::size_t>(map[i])] += f.monomial[i];
    for (const auto& b : f.binomials)
        r.binomials.push_back({map[static_cast<std::size_t>(b.l)], b.a, map[static_cast<std::size_t>(b.r)]});
    return r;
}

// all G_beta for d, in the w-variables of WIndex(d)
LinearFactors all_g(const Roots& roots, const WIndex& W) {
    LinearFactors r;
    r.monomial.assign(static_cast<std::size_t>(W.size()), 0);
    for (std::size_t b = 0; b < W.d.size(); ++b) {
        const int db = W.d[b];
        if (db == 0) continue;
        std::vector<int> map;
        for (int s = 1; s <= db; ++s) map.push_back(W.var(static_cast<int>(b), s));
        auto g = relabel(g_factors(roots, static_cast<int>(b), db), map, W.size());
        for (std::size_t i = 0; i < g.monomial.size(); ++i) r.monomial[i] += g.monomial[i];
        r.binomials.insert(r.binomials.end(), g.binomials.begin(), g.binomials.end());
    }
    return r;
}

// f with x_i -> v^{vexp[i]} w_{target[i]}.  Coefficients are bucketed by
// target monomial and denominator so that numerators add without gcds.
TP substitute_vmonomial(const TP& f, const std::vector<int>& target, const std::vector<int>& vexp, int nv) {
    std::map<Exp, std::vector<std::pair<LaurentZ, LaurentZ>>> acc;  // (den, num)
    Exp g(static_cast<std::size_t>(nv));
    for (const auto& [e, c] : f.terms()) {
        std::fill(g.begin(), g.end(), 0);
        int t = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] < 0) throw std::invalid_argument("substitute: unassigned variable");
            g[static_cast<std::size_t>(target[i])] += e[i];
            t += e[i] * vexp[i];
        }
        auto& bucket = acc[g];
        auto it = std::find_if(bucket.begin(), bucket.end(), [&](const auto& x) { return x.first == c.den(); });
        if (it == bucket.end()) bucket.emplace_back(c.den(), c.num().shifted(t));
        else it->second += c.num().shifted(t);
    }
    TP r(nv);
    for (const auto& [x, bucket] : acc)
        for (const auto& [den, num] : bucket) r.add_term(x, RationalV(num, den));
    return r;
}

std::string grading_str(const Grading& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

void for_each_t(const KostantPartition& d, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<std::vector<int>>> opts(d.size());
    for (std::size_t b = 0; b < d.size(); ++b)
        opts[b] = d[b] > 0 ? compositions(d[b]) : std::vector<std::vector<int>>{{}};
    std::vector<std::vector<int>> cur(d.size());
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == d.size()) {
            fn(cur);
            return;
        }
        for (const auto& c : opts[b]) {
            cur[b] = c;
            rec(b + 1);
        }
    };
    rec(0);
}

std::string t_str(const std::vector<std::vector<int>>& t) {
    std::string s = "[";
    bool first = true;
    for (const auto& c : t) {
        if (c.empty()) continue;
        s += first ? "" : ";";
        first = false;
        for (std::size_t r = 0; r < c.size(); ++r) s += (r ? "," : "") + std::to_string(c[r]);
    }
    return s + "]";
}

// the steps of the cross specialization after the scalar prefactor is removed
CrossResult cross_tail(const Roots& roots, const TP& phi, const KostantPartition& d,
                       const std::vector<std::vector<int>>& t) {
    CrossResult res;
    WIndex W(d);
    TP g;
    try {
        g = divide_factors(phi, all_g(roots, W), W.names(roots));
    } catch (const NotDivisible& e) {
        res.divisible = false;
        res.witness = std::string("not divisible by G factor ") + e.what();
        return res;
    }
    TP z = vertical_specialize(roots, g, d, t);
    LaurentZ fac(1);
    for (std::size_t b = 0; b < t.size(); ++b)
        for (int tr : t[b]) fac = fac * quantum_factorial(tr, roots[b].norm);
    auto q = divide_integral(z, fac);
    res.value = z;
    if (!q) {
        res.divisible = false;
        res.witness = "cross specialization t=" + t_str(t) + " not divisible by " + fac.str();
    }
    return res;
}

}  // namespace

// ------------------------------------------------------------------ WIndex

WIndex::WIndex(KostantPartition dd) : d(std::move(dd)) {
    off.assign(d.size() + 1, 0);
    for (std::size_t b = 0; b < d.size(); ++b) off[b + 1] = off[b] + d[b];
}

std::vector<std::string> WIndex::names(const Roots& roots) const {
    std::vector<std::string> r;
    for (std::size_t b = 0; b < d.size(); ++b)
        for (int s = 1; s <= d[b]; ++s) r.push_back("w" + roots[b].label + "[" + std::to_string(s) + "]");
    return r;
}

SparsePoly<RationalV> LinearFactors::expand(int nv) const {
    TP r = TP::monomial(monomial, RationalV(1));
    for (const auto& b : binomials) r = r * (TP::var(nv, b.l) - TP::var(nv, b.r).scaled(RationalV::vpow(b.a)));
    return r;
}

SparsePoly<RationalV> divide_factors(const SparsePoly<RationalV>& f, const LinearFactors& fac,
                                     const std::vector<std::string>& names) {
    Exp sh = fac.monomial;
    for (auto& e : sh) e = -e;
    TP g = f.shifted(sh);
    for (const auto& b : fac.binomials) {
        TP rem;
        auto q = divide_binomial(g, b.l, RationalV::vpow(b.a), b.r, &rem);
        if (!q) throw NotDivisible(factor_name(b, names), rem.str(names));
        g = std::move(*q);
    }
    return g;
}

bool two_step(const Roots& roots, int root) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    if (roots.sys().type() == 'C') return b.tag == RootTag::Double;
    return b.tag == RootTag::Turn && b.j <= roots.sys().rank() - 2;
}

// ------------------------------------------------------------------- phi_d

SpecImage phi_d(const Roots& roots, const ShuffleElement& F, const KostantPartition& d,
                const std::vector<std::vector<int>>* copy_order) {
    const auto& sys = roots.sys();
    const int n = sys.rank();
    SpecImage out;
    out.d = d;
    WIndex W(d);
    Grading sum(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < d.size(); ++b)
        for (int c = 0; c < n; ++c) sum[static_cast<std::size_t>(c)] += d[b] * roots[b].nu[static_cast<std::size_t>(c)];
    if (d.size() != roots.size() || sum != F.k) {
        out.grading_mismatch = true;
        out.g = TP(W.size());
        return out;
    }
    int nprime = 0;
    for (std::size_t b = 0; b < d.size(); ++b)
        if (two_step(roots, static_cast<int>(b))) nprime += d[b];
    const int nv = W.size() + nprime;

    Layout L(F.k);
    std::vector<int> target(static_cast<std::size_t>(L.nvars()), -1);
    std::vector<int> vexp(static_cast<std::size_t>(L.nvars()), 0);
    std::vector<int> next(static_cast<std::size_t>(n), 0);
    auto copy_of = [&](int c) {
        const int k = next[static_cast<std::size_t>(c - 1)]++;
        if (copy_order) return (*copy_order)[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(k)];
        return k + 1;
    };
    struct Group {
        int root, w, wp;
    };
    std::vector<Group> groups;
    int pcount = 0;
    for (std::size_t b = 0; b < d.size(); ++b) {
        const bool two = two_step(roots, static_cast<int>(b));
        for (int s = 1; s <= d[b]; ++s) {
            const int w = W.var(static_cast<int>(b), s);
            const int wp = two ? W.size() + pcount++ : -1;
            if (two) groups.push_back({static_cast<int>(b), w, wp});
            for (int l = 1; l <= n; ++l)
                for (int t = 1; t <= roots[b].nu[static_cast<std::size_t>(l - 1)]; ++t) {
                    const int x = L.var(l, copy_of(l));
                    int tv = w, e = 0;
                    if (sys.type() == 'C') {
                        if (l == n) {
                            e = -n;
                            if (two) tv = wp;
                        } else if (t == 1) {
                            e = 1 - l;
                        } else if (two) {
                            e = 1 - l;
                            tv = wp;
                        } else {
                            e = -2 * n + l - 1;
                        }
                    } else {
                        if (l == n) e = 2 - n;
                        else if (t == 1) e = 1 - l;
                        else {
                            e = l + 3 - 2 * n;
                            tv = wp;
                        }
                    }
                    target[static_cast<std::size_t>(x)] = tv;
                    vexp[static_cast<std::size_t>(x)] = e;
                }
        }
    }
    TP g = substitute_vmonomial(F.f, target, vexp, nv);
    if (nprime == 0) {
        out.g = std::move(g);
        return out;
    }
    auto names = W.names(roots);
    for (const auto& gr : groups) names.push_back(names[static_cast<std::size_t>(gr.w)] + "'");
    for (const auto& gr : groups) {
        auto B = relabel(b_factors(roots, gr.root), {gr.w, gr.wp}, nv);
        g = divide_factors(g, B, names);
    }
    // w' -> v^2 w (C) or w (D)
    std::vector<int> tg(static_cast<std::size_t>(nv));
    std::vector<RationalV> sc(static_cast<std::size_t>(nv), RationalV(1));
    for (int i = 0; i < W.size(); ++i) tg[static_cast<std::size_t>(i)] = i;
    for (const auto& gr : groups) {
        tg[static_cast<std::size_t>(gr.wp)] = gr.w;
        if (sys.type() == 'C') sc[static_cast<std::size_t>(gr.wp)] = RationalV::vpow(2);
    }
    out.g = substitute_monomial(g, tg, sc, W.size());
    return out;
}

// ------------------------------------------------------------------ tables

int kappa(const Roots& roots, int root) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    const int n = roots.sys().rank();
    if (roots.sys().type() == 'D') return b.height - 1;
    switch (b.tag) {
        case RootTag::Turn: return 4 * n - b.i - 3 * b.j - 1;
        case RootTag::Double: return 2 * n - 2 * b.i;
        default: return b.height - 1;
    }
}

LaurentZ c_factor(const Roots& roots, int root) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    const int n = roots.sys().rank();
    const int h = b.height;
    if (roots.sys().type() == 'D') return lpow(angle(1), h - 1);
    switch (b.tag) {
        case RootTag::ToEnd: return lpow(angle(1), h - 2) * angle(2);
        case RootTag::Turn: {
            LaurentZ c = lpow(angle(1), h - 3) * angle(2);
            for (int l = b.j; l <= n - 1; ++l) c = c * vm1(2 * n - 2 * l) * vm1(2 * n - 2 * l + 4);
            return c;
        }
        case RootTag::Double: return lpow(angle(1), h - 3) * lpow(angle(2), 2);
        default: return lpow(angle(1), h - 1);
    }
}

LaurentZ c_tilde(const Roots& roots, int root) {
    LaurentZ c = c_factor(roots, root);
    if (roots.sys().type() == 'C' && roots[static_cast<std::size_t>(root)].tag == RootTag::Double)
        return *LaurentZ::divexact(c, quantum_int(2));
    return c;
}

LinearFactors b_factors(const Roots& roots, int root) {
    if (!two_step(roots, root)) throw ConfigError("B factor requested for a one-step root");
    const auto& b = roots[static_cast<std::size_t>(root)];
    const int n = roots.sys().rank();
    LinearFactors f;
    f.monomial.assign(2, 0);
    if (roots.sys().type() == 'C') {
        for (int t = 0; t < n - b.i - 1; ++t) {
            f.binomials.push_back({0, -2, 1});
            f.binomials.push_back({0, 2, 1});
        }
    } else {
        for (int l = b.j; l <= n - 2; ++l) {
            f.binomials.push_back({0, 2 * l + 4 - 2 * n, 1});
            f.binomials.push_back({0, 2 * l - 2 * n, 1});
        }
    }
    return f;
}

SparsePoly<RationalV> b_factor(const Roots& roots, int root) { return b_factors(roots, root).expand(2); }

LinearFactors g_factors(const Roots& roots, int root, int db) {
    if (db < 1) throw ConfigError("G factor needs d_beta >= 1");
    const auto& b = roots[static_cast<std::size_t>(root)];
    const int n = roots.sys().rank();
    const int i = b.i, j = b.j, h = b.height;
    LinearFactors f;
    f.monomial.assign(static_cast<std::size_t>(db), kappa(roots, root));
    auto pairs = [&](int a, int mult) {
        for (int s = 0; s < db; ++s)
            for (int sp = 0; sp < db; ++sp) {
                if (s == sp) continue;
                for (int m = 0; m < mult; ++m) f.binomials.push_back({s, a, sp});
            }
    };
    if (roots.sys().type() == 'D') {
        pairs(2, h - 1);
        if (two_step(roots, root))
            for (int l = j; l <= n - 2; ++l) {
                pairs(2 * n - 2 * l, 1);
                pairs(2 * n - 2 * l - 4, 1);
            }
        return f;
    }
    switch (b.tag) {
        case RootTag::ToEnd:
            pairs(2, n - i - 1);
            pairs(4, 1);
            break;
        case RootTag::Turn:
            pairs(2, 2 * n - i - j - 1);
            pairs(4, 1);
            for (int l = j; l <= n - 2; ++l) pairs(2 * n - 2 * l, 1);
            for (int l = j; l <= n - 1; ++l) pairs(2 * n - 2 * l + 4, 1);
            break;
        case RootTag::Double:
            pairs(2, 2 * n - 2 * i - 1);
            pairs(0, n - i - 1);
            pairs(4, n - i);
            break;
        default: pairs(2, j - i); break;
    }
    return f;
}

SparsePoly<RationalV> g_factor(const Roots& roots, int root, int db) {
    return g_factors(roots, root, db).expand(db);
}

LaurentZ a_factor(const Roots& roots, const KostantPartition& d) {
    LaurentZ a(1);
    if (roots.sys().type() != 'C') return a;
    const int n = roots.sys().rank();
    for (std::size_t b = 0; b < d.size(); ++b) {
        if (d[b] == 0) continue;
        const auto& r = roots[b];
        if (r.tag == RootTag::Double) a = a * lpow(quantum_int(2), d[b]);
        if (r.tag == RootTag::Turn) {
            LaurentZ c = vm1(2 * n - 2 * r.j + 4);
            for (int l = r.j; l <= n - 2; ++l) c = c * vm1(2 * n - 2 * l) * vm1(2 * n - 2 * l + 2);
            a = a * lpow(c, d[b]);
        }
    }
    return a;
}

LaurentZ rtt_prefactor(const RootSystem& sys, const Grading& k) {
    const int n = sys.rank();
    if (sys.type() == 'C') {
        int s = 0;
        for (int c = 0; c < n - 1; ++c) s += k[static_cast<std::size_t>(c)];
        return lpow(angle(1), s) * lpow(angle(2), k[static_cast<std::size_t>(n - 1)]);
    }
    return lpow(angle(1), total(k));
}

SparsePoly<RationalV> p_lambda(const std::vector<int>& r, int norm) {
    const int d = static_cast<int>(r.size());
    if (d == 0) return TP::constant(0, RationalV(1));
    Exp e(r.begin(), r.end());
    TP a = TP::monomial(e, RationalV(1));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) a = a * (TP::var(d, i) - TP::var(d, j).scaled(RationalV::vpow(-2 * norm)));
    std::vector<int> blocks{d};
    return divide_block_vandermonde(antisymmetrize(a, blocks), blocks);
}

// ------------------------------------------------------ vertical and cross

std::vector<std::vector<int>> compositions(int m) {
    std::vector<std::vector<int>> out;
    if (m <= 0) return {{}};
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(m);
    return out;
}

SparsePoly<RationalV> vertical_specialize(const Roots& roots, const SparsePoly<RationalV>& g,
                                          const KostantPartition& d, const std::vector<std::vector<int>>& t) {
    if (t.size() != d.size()) throw ConfigError("composition must list every root");
    WIndex W(d);
    std::vector<int> target(static_cast<std::size_t>(W.size()));
    std::vector<RationalV> scal(static_cast<std::size_t>(W.size()));
    int z = 0;
    for (std::size_t b = 0; b < d.size(); ++b) {
        int sum = 0;
        for (int x : t[b]) {
            if (x < 1) throw ConfigError("composition parts must be positive");
            sum += x;
        }
        if (sum != d[b]) throw ConfigError("composition of " + roots[b].label + " does not sum to d_beta");
        int s = 1;
        for (int x : t[b]) {
            for (int p = 1; p <= x; ++p, ++s) {
                target[static_cast<std::size_t>(W.var(static_cast<int>(b), s))] = z;
                scal[static_cast<std::size_t>(W.var(static_cast<int>(b), s))] =
                    RationalV::vpow(-2 * roots[b].norm * p);
            }
            ++z;
        }
    }
    return substitute_monomial(g, target, scal, z);
}

CrossResult cross_specialize(const Roots& roots, const ShuffleElement& F, const KostantPartition& d,
                             const std::vector<std::vector<int>>& t) {
    auto phi = phi_d(roots, F, d);
    if (phi.grading_mismatch) {
        CrossResult r;
        r.witness = "grading mismatch";
        return r;
    }
    LaurentZ pref = rtt_prefactor(roots.sys(), F.k) * a_factor(roots, d);
    auto q = divide_integral(phi.g, pref);
    if (!q) {
        CrossResult r;
        r.prefactor_ok = false;
        r.divisible = false;
        r.witness = "phi_d not divisible by prefactor " + pref.str();
        return r;
    }
    return cross_tail(roots, *q, d, t);
}

// -------------------------------------------------------------- integrality

bool laurent_integral(const SparsePoly<RationalV>& f) {
    for (const auto& [e, c] : f.terms())
        if (!c.is_laurent()) return false;
    return true;
}

std::optional<SparsePoly<RationalV>> divide_integral(const SparsePoly<RationalV>& f, const LaurentZ& c) {
    if (c.is_zero()) return std::nullopt;
    TP r(f.nvars());
    for (const auto& [e, x] : f.terms()) {
        if (!x.is_laurent()) return std::nullopt;
        auto q = LaurentZ::divexact(x.num(), c);
        if (!q) return std::nullopt;
        r.add_term(e, RationalV(*q));
    }
    return r;
}

Membership lusztig_member(const Roots& roots, const ShuffleElement& F) {
    Membership m;
    if (!laurent_integral(F.f)) {
        m.ok = false;
        m.witness = "numerator coefficient outside Z[v,v^-1]";
        return m;
    }
    for (const auto& d : kostant_partitions(roots, F.k)) {
        LaurentZ c(1);
        for (std::size_t b = 0; b < d.size(); ++b) c = c * lpow(c_tilde(roots, static_cast<int>(b)), d[b]);
        try {
            auto phi = phi_d(roots, F, d);
            if (!divide_integral(phi.g, c)) {
                m.ok = false;
                m.witness = "phi_d for d=" + kp_name(roots, d) + " not divisible by " + c.str();
                return m;
            }
        } catch (const NotDivisible& e) {
            m.ok = false;
            m.witness = "d=" + kp_name(roots, d) + ": not divisible by B factor " + e.what();
            return m;
        }
    }
    return m;
}

Membership rtt_member(const Roots& roots, const ShuffleElement& F) {
    Membership m;
    LaurentZ pref = rtt_prefactor(roots.sys(), F.k);
    auto q = divide_integral(F.f, pref);
    if (!q) {
        m.ok = false;
        m.witness = "numerator not in " + pref.str() + " * Z[v,v^-1][x] for k=" + grading_str(F.k);
        return m;
    }
    ShuffleElement G{F.k, *q};
    for (const auto& d : kostant_partitions(roots, F.k)) {
        try {
            auto phi = phi_d(roots, G, d);
            LaurentZ a = a_factor(roots, d);
            auto pa = divide_integral(phi.g, a);
            if (!pa) {
                m.ok = false;
                m.witness = "phi_d for d=" + kp_name(roots, d) + " not divisible by A_d = " + a.str();
                return m;
            }
            bool fail = false;
            for_each_t(d, [&](const std::vector<std::vector<int>>& t) {
                if (fail) return;
                auto r = cross_tail(roots, *pa, d, t);
                if (!r.divisible) {
                    fail = true;
                    m.ok = false;
                    m.witness = "d=" + kp_name(roots, d) + ": " + r.witness;
                }
            });
            if (fail) return m;
        } catch (const NotDivisible& e) {
            m.ok = false;
            m.witness = "d=" + kp_name(roots, d) + ": not divisible by B factor " + e.what();
            return m;
        }
    }
    return m;
}

// ----------------------------------------------------------- verification

bool verify_vanishing(const Roots& roots, const PbwdKey& h, const KostantPartition& dprime, const VectorFactory& vec) {
    TrigShuffle alg(roots.sys());
    Psi<TrigKernel> psi(alg);
    auto F = psi(pbwd_monomial(h, vec));
    return phi_d(roots, F, dprime).g.is_zero();
}

std::optional<RationalV> proportional_poly(const SparsePoly<RationalV>& a, const SparsePoly<RationalV>& b) {
    if (a.is_zero() || b.is_zero() || a.nvars() != b.nvars()) return std::nullopt;
    const auto& la = a.lead();
    const auto& lb = b.lead();
    if (la.first != lb.first) return std::nullopt;
    RationalV c = la.second / lb.second;
    if (!c.as_scaled_monomial()) return std::nullopt;
    if (!(a == b.scaled(c))) return std::nullopt;
    return c;
}

LeadingReport verify_leading(const Roots& roots, const PbwdKey& h1, const PbwdKey& h2, const VectorFactory& vec) {
    LeadingReport rep;
    const auto d = h1.deg(roots.size());
    if (h2.deg(roots.size()) != d) {
        rep.ok = false;
        rep.witness = "keys of different degree";
        return rep;
    }
    TrigShuffle alg(roots.sys());
    Psi<TrigKernel> psi(alg);
    WIndex W(d);
    auto P = [&](const PbwdKey& h) {
        TP p = TP::constant(W.size(), RationalV(1));
        for (std::size_t b = 0; b < d.size(); ++b) {
            if (d[b] == 0) continue;
            std::vector<int> map;
            for (int s = 1; s <= d[b]; ++s) map.push_back(W.var(static_cast<int>(b), s));
            p = p * p_lambda(h.modes_of(static_cast<int>(b)), roots[b].norm).relabeled(map, W.size());
        }
        return p;
    };
    const auto names = W.names(roots);
    const auto G = all_g(roots, W);
    TP phi[2];
    const PbwdKey* hs[2] = {&h1, &h2};
    for (int t = 0; t < 2; ++t) {
        phi[t] = phi_d(roots, psi(pbwd_monomial(*hs[t], vec)), d).g;
        try {
            divide_factors(phi[t], G, names);
        } catch (const NotDivisible& e) {
            rep.ok = false;
            rep.witness = hs[t]->str(roots) + ": not divisible by G factor " + e.what();
            return rep;
        }
    }
    if (!proportional_poly(phi[0] * P(h2), phi[1] * P(h1))) {
        rep.ok = false;
        rep.witness = "cofactor depends on h: " + h1.str(roots) + " vs " + h2.str(roots);
    }
    return rep;
}

LeadingReport verify_root_leading(const Roots& roots, const ShuffleElement& F, int root, int s) {
    LeadingReport rep;
    KostantPartition d(roots.size(), 0);
    d.at(static_cast<std::size_t>(root)) = 1;
    const auto img = phi_d(roots, F, d);
    if (img.grading_mismatch) {
        rep.ok = false;
        rep.witness = "grading differs from " + roots.qualified_name(roots[static_cast<std::size_t>(root)]);
        return rep;
    }
    const TP expect = TP::monomial({s + kappa(roots, root)}, RationalV(c_factor(roots, root)));
    if (!proportional_poly(img.g, expect)) {
        rep.ok = false;
        rep.witness = "phi = " + img.g.str({"w"}) + ", expected c*(" + expect.str({"w"}) + ")";
    }
    return rep;
}

}  // namespace sf
