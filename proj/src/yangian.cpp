#include "shuffle_forge/yangian.hpp"

#include "shuffle_forge/specmaps.hpp"

#include <sstream>

namespace sf {

namespace {

using RP = SparsePoly<PolyH>;
using YE = FreeExpr<PolyH>;

bool double_root(const Roots& roots, const PositiveRoot& b) {
    return roots.sys().type() == 'C' && b.tag == RootTag::Double;
}

YangExpr chain(const std::vector<int>& word, const std::vector<int>& modes, std::size_t from, std::size_t to) {
    YangExpr e = YE::gen(word[from], modes[from]);
    for (std::size_t p = from + 1; p < to; ++p) e = YE::comm(e, YE::gen(word[p], modes[p]), PolyH(1));
    return e;
}

// w + c h with c = num/2
RP shifted_var(int nv, int w, int num) {
    return RP::var(nv, w) + RP::constant(nv, PolyH::hpow(1, mpq_class(num, 2)));
}

// (w_l - w_r - c h) as a root for division in w_l: w_l = w_r + c h, c = num/2
RP linear_root(int nv, int r, int num) { return shifted_var(nv, r, num); }

struct RatFactor {
    int l, r, num;  // w_l - w_r - (num/2) h
};

std::vector<RatFactor> b_list(const Roots& roots, int root) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    const int n = roots.sys().rank();
    if (!two_step(roots, root)) throw ConfigError("B factor requested for a one-step root " + b.label);
    std::vector<RatFactor> out;
    if (roots.sys().type() == 'C') {
        for (int t = 0; t < n - b.i - 1; ++t) {
            out.push_back({0, 1, -2});
            out.push_back({0, 1, 2});
        }
    } else {
        for (int l = b.j; l <= n - 2; ++l) {
            out.push_back({0, 1, -2 * (n - l - 2)});
            out.push_back({0, 1, -2 * (n - l)});
        }
    }
    return out;
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

std::string factor_str(const RatFactor& f, const std::string& wl, const std::string& wr) {
    std::ostringstream os;
    mpq_class c(-f.num, 2);
    c.canonicalize();
    os << "(" << wl << " - " << wr;
    if (c >= 0) os << " + " << mpq_str(c) << "*h)";
    else os << " - " << mpq_str(mpq_class(-c)) << "*h)";
    return os.str();
}

}  // namespace

std::string HZeta::str() const {
    if (c == 0) return "1";
    std::string r = "1 ";
    r += c > 0 ? "+ " : "- ";
    const mpq_class a = abs(c);
    if (a != 1) r += a.get_str() + "*";
    return r + "h/z";
}

HZeta hzeta(const RootSystem& sys, int i, int j) {
    if (i < 1 || j < 1 || i > sys.rank() || j > sys.rank()) throw ConfigError("color out of range");
    mpq_class c(sys.pairing(i, j), 2);
    c.canonicalize();
    return {c};
}

int YangianSpec::mode_sum() const {
    int s = 0;
    for (int m : modes) s += m;
    return s;
}

void validate_yangian_spec(const Roots& roots, const YangianSpec& spec) {
    if (spec.root < 0 || static_cast<std::size_t>(spec.root) >= roots.size())
        throw ConfigError("root index out of range");
    const auto& b = roots[static_cast<std::size_t>(spec.root)];
    if (spec.modes.size() != b.word.size())
        throw ConfigError("decomposition of " + b.label + " needs " + std::to_string(b.word.size()) + " summands");
    for (int m : spec.modes)
        if (m < 0) throw ConfigError("negative mode in the rational algebra");
}

YangExpr yangian_root_vector(const Roots& roots, const YangianSpec& spec) {
    validate_yangian_spec(roots, spec);
    const auto& b = roots[static_cast<std::size_t>(spec.root)];
    const auto& w = b.word;
    if (!double_root(roots, b)) return chain(w, spec.modes, 0, w.size());
    const std::size_t l1 = static_cast<std::size_t>(roots.sys().rank() - b.i);
    return YE::comm(chain(w, spec.modes, 0, l1), chain(w, spec.modes, l1, w.size()), PolyH(1));
}

YangianSpec yangian_tilde_spec(const Roots& roots, int root, int s) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    YangianSpec spec;
    spec.root = root;
    spec.modes.assign(b.word.size(), 0);
    if (double_root(roots, b)) spec.modes.back() = s;
    else spec.modes.front() = s;
    return spec;
}

YangExpr yangian_tilde(const Roots& roots, int root, int s) {
    return yangian_root_vector(roots, yangian_tilde_spec(roots, root, s));
}

YangExpr yangian_bar(const YangExpr& x) { return YE::scale(PolyH::hpow(1), x); }

YangianSpec random_yangian_spec(const Roots& roots, int root, int s, std::mt19937& rng) {
    if (s < 0) throw ConfigError("negative mode in the rational algebra");
    const auto& b = roots[static_cast<std::size_t>(root)];
    YangianSpec spec;
    spec.root = root;
    spec.modes.assign(b.word.size(), 0);
    std::uniform_int_distribution<std::size_t> pos(0, b.word.size() - 1);
    for (int t = 0; t < s; ++t) spec.modes[pos(rng)] += 1;
    return spec;
}

// ------------------------------------------------------------ closed forms

RP q_hat(int nv, int x1, int x2, int y1, int y2) {
    auto X1 = RP::var(nv, x1), X2 = RP::var(nv, x2), Y1 = RP::var(nv, y1), Y2 = RP::var(nv, y2);
    return (X1 * X2 + Y1 * Y2).scaled(PolyH(4)) - ((X1 + X2) * (Y1 + Y2)).scaled(PolyH(2)) +
           RP::constant(nv, PolyH::hpow(2));
}

RP yangian_closed_form(const Roots& roots, int root, int s) {
    const auto& sys = roots.sys();
    const int n = sys.rank();
    const auto& b = roots[static_cast<std::size_t>(root)];
    Layout L(b.nu);
    const int nv = L.nvars();
    auto X = [&](int c, int t) { return RP::var(nv, L.var(c, t)); };
    auto H = [&](int e) { return RP::constant(nv, PolyH::hpow(e)); };
    const int i = b.i, j = b.j;
    if (sys.type() == 'C') {
        if (b.tag == RootTag::Turn) {
            RP f = H(2 * n - i - j) * RP::var(nv, L.var(i, 1), s) *
                   (X(j - 1, 1).scaled(PolyH(2)) - X(j, 1) - X(j, 2));
            for (int l = j; l <= n - 2; ++l) f = f * q_hat(nv, L.var(l, 1), L.var(l, 2), L.var(l + 1, 1), L.var(l + 1, 2));
            return f;
        }
        if (b.tag == RootTag::Double) {
            RP f = H(2 * n - 2 * i) * RP::var(nv, L.var(n, 1), s);
            for (int l = i; l <= n - 2; ++l) f = f * q_hat(nv, L.var(l, 1), L.var(l, 2), L.var(l + 1, 1), L.var(l + 1, 2));
            return f;
        }
        return H(b.height - 1) * RP::var(nv, L.var(b.word[0], 1), s);
    }
    if (b.tag == RootTag::Turn && j < n - 1) {
        RP f = H(2 * n - i - j - 1) * RP::var(nv, L.var(i, 1), s);
        for (int l = j; l <= n - 2; ++l) {
            RP d = X(l, 1) - X(l, 2);
            f = f * (H(1) + d) * (H(1) - d);
        }
        return f;
    }
    return H(b.height - 1) * RP::var(nv, L.var(b.word[0], 1), s);
}

std::optional<mpq_class> proportional_q(const RP& a, const RP& b) {
    if (a.is_zero() || b.is_zero() || a.nvars() != b.nvars()) return std::nullopt;
    const auto la = a.lead(), lb = b.lead();
    if (la.first != lb.first) return std::nullopt;
    auto c = PolyH::divexact(la.second, lb.second);
    if (!c || c->degree() != 0) return std::nullopt;
    const mpq_class q = c->coeff(0);
    if (!(a == b.scaled(PolyH(q)))) return std::nullopt;
    return q;
}

// ---------------------------------------------------------- specialization

SparsePoly<PolyH> b_factor_rat(const Roots& roots, int root) {
    RP r = RP::constant(2, PolyH(1));
    for (const auto& f : b_list(roots, root)) r = r * (RP::var(2, f.l) - linear_root(2, f.r, f.num));
    return r;
}

RatSpecImage phi_d_rat(const Roots& roots, const RationalShuffleElement& F, const KostantPartition& d,
                       const std::vector<std::vector<int>>* copy_order) {
    const auto& sys = roots.sys();
    const int n = sys.rank();
    RatSpecImage out;
    out.d = d;
    WIndex W(d);
    Grading sum(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < d.size(); ++b)
        for (int c = 0; c < n; ++c) sum[static_cast<std::size_t>(c)] += d[b] * roots[b].nu[static_cast<std::size_t>(c)];
    if (d.size() != roots.size() || sum != F.k) {
        out.grading_mismatch = true;
        out.g = RP(W.size());
        return out;
    }
    int nprime = 0;
    for (std::size_t b = 0; b < d.size(); ++b)
        if (two_step(roots, static_cast<int>(b))) nprime += d[b];
    const int nv = W.size() + nprime;

    Layout L(F.k);
    std::vector<RP> images(static_cast<std::size_t>(L.nvars()));
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
                    // image w - (e/2) h, stored as shift num = -e
                    int tv = w, e = 0;
                    if (sys.type() == 'C') {
                        if (l == n) {
                            e = n;
                            if (two) tv = wp;
                        } else if (t == 1) {
                            e = l - 1;
                        } else if (two) {
                            e = l - 1;
                            tv = wp;
                        } else {
                            e = 2 * n + 1 - l;
                        }
                    } else {
                        if (l == n) e = n - 2;
                        else if (t == 1) e = l - 1;
                        else {
                            e = 2 * n - 3 - l;
                            tv = wp;
                        }
                    }
                    images[static_cast<std::size_t>(L.var(l, copy_of(l)))] = shifted_var(nv, tv, -e);
                }
        }
    }
    RP g = substitute_poly(F.f, images, nv);
    if (nprime == 0) {
        out.g = std::move(g);
        return out;
    }
    auto names = W.names(roots);
    for (const auto& gr : groups) names.push_back(names[static_cast<std::size_t>(gr.w)] + "'");
    for (const auto& gr : groups)
        for (const auto& f : b_list(roots, gr.root)) {
            RP rem;
            auto q = divide_linear(g, gr.w, linear_root(nv, gr.wp, f.num), &rem);
            if (!q)
                throw NotDivisible("step-one image not divisible by " +
                                       factor_str(f, names[static_cast<std::size_t>(gr.w)],
                                                  names[static_cast<std::size_t>(gr.wp)]),
                                   rem.str());
            g = std::move(*q);
        }
    // w' -> w + h (C) or w (D)
    std::vector<RP> tg(static_cast<std::size_t>(nv));
    for (int i = 0; i < W.size(); ++i) tg[static_cast<std::size_t>(i)] = RP::var(W.size(), i);
    for (const auto& gr : groups)
        tg[static_cast<std::size_t>(gr.wp)] = sys.type() == 'C' ? shifted_var(W.size(), gr.w, 2) : RP::var(W.size(), gr.w);
    out.g = substitute_poly(g, tg, W.size());
    return out;
}

int hbar_valuation(const SparsePoly<PolyH>& f) {
    int v = -1;
    for (const auto& [e, c] : f.terms()) {
        const int x = c.valuation();
        if (v < 0 || x < v) v = x;
    }
    return v;
}

namespace {

RatMembership check_phi_powers(const Roots& roots, const RationalShuffleElement& F, int extra_per_root) {
    RatMembership m;
    for (const auto& d : kostant_partitions(roots, F.k)) {
        int need = 0;
        for (std::size_t b = 0; b < d.size(); ++b) need += d[b] * (kappa(roots, static_cast<int>(b)) + extra_per_root);
        RatSpecImage img;
        try {
            img = phi_d_rat(roots, F, d);
        } catch (const NotDivisible& e) {
            m.ok = false;
            m.witness = "d=" + kp_name(roots, d) + ": " + e.what();
            return m;
        }
        const int val = hbar_valuation(img.g);
        if (val >= 0 && val < need) {
            m.ok = false;
            m.witness = "d=" + kp_name(roots, d) + ": phi_d divisible only by h^" + std::to_string(val) +
                        ", need h^" + std::to_string(need);
            return m;
        }
    }
    return m;
}

}  // namespace

RatMembership is_good(const Roots& roots, const RationalShuffleElement& F) { return check_phi_powers(roots, F, 0); }

RatMembership is_integral(const Roots& roots, const RationalShuffleElement& F) {
    const int val = hbar_valuation(F.f);
    const int need = total(F.k);
    if (val >= 0 && val < need) {
        RatMembership m;
        m.ok = false;
        m.witness = "numerator divisible only by h^" + std::to_string(val) + ", need h^" + std::to_string(need);
        return m;
    }
    return check_phi_powers(roots, F, 1);
}

RatMembership verify_yangian_leading(const Roots& roots, const RationalShuffleElement& F, int root, int s) {
    RatMembership m;
    KostantPartition d(roots.size(), 0);
    d[static_cast<std::size_t>(root)] = 1;
    const auto img = phi_d_rat(roots, F, d);
    const int kap = kappa(roots, root);
    auto fail = [&](const std::string& why) {
        m.ok = false;
        m.witness = roots.qualified_name(roots[static_cast<std::size_t>(root)]) + " s=" + std::to_string(s) + ": " + why;
        return m;
    };
    if (img.grading_mismatch) return fail("grading mismatch");
    if (img.g.is_zero()) return fail("phi vanishes");
    int deg = -1;
    for (const auto& [e, c] : img.g.terms()) deg = std::max(deg, e[0]);
    if (deg != s) return fail("degree " + std::to_string(deg) + " in w");
    const PolyH lead = img.g.coeff(Exp{s});
    if (lead.valuation() != kap || lead.degree() != kap)
        return fail("leading coefficient " + lead.str() + " is not a multiple of h^" + std::to_string(kap));
    const int val = hbar_valuation(img.g);
    if (val < kap) return fail("not divisible by h^" + std::to_string(kap));
    return m;
}

}  // namespace sf
