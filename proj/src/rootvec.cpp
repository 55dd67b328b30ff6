#include "shuffle_forge/rootvec.hpp"

namespace sf {

namespace {

using TP = SparsePoly<RationalV>;
using TE = FreeExpr<RationalV>;

bool double_root(const Roots& roots, const PositiveRoot& b) {
    return roots.sys().type() == 'C' && b.tag == RootTag::Double;
}

TrigExpr chain(const std::vector<int>& word, const std::vector<int>& modes, const std::vector<int>& lambdas,
               std::size_t from, std::size_t to, std::size_t lam0) {
    TrigExpr e = TE::gen(word[from], modes[from]);
    for (std::size_t p = from + 1; p < to; ++p)
        e = TE::comm(e, TE::gen(word[p], modes[p]), RationalV::vpow(lambdas[lam0 + (p - from - 1)]));
    return e;
}

}  // namespace

int RootVectorSpec::mode_sum() const {
    int s = 0;
    for (int m : modes) s += m;
    return s;
}

void validate_spec(const Roots& roots, const RootVectorSpec& spec) {
    if (spec.root < 0 || static_cast<std::size_t>(spec.root) >= roots.size())
        throw ConfigError("root index out of range");
    const auto& b = roots[static_cast<std::size_t>(spec.root)];
    if (spec.modes.size() != b.word.size())
        throw ConfigError("decomposition of " + b.label + " needs " + std::to_string(b.word.size()) + " summands");
    if (spec.lambdas.size() + 1 != b.word.size())
        throw ConfigError("root vector " + b.label + " needs " + std::to_string(b.word.size() - 1) + " lambdas");
}

TrigExpr root_vector(const Roots& roots, const RootVectorSpec& spec) {
    validate_spec(roots, spec);
    const auto& b = roots[static_cast<std::size_t>(spec.root)];
    const auto& w = b.word;
    if (!double_root(roots, b)) return chain(w, spec.modes, spec.lambdas, 0, w.size(), 0);
    const std::size_t l1 = static_cast<std::size_t>(roots.sys().rank() - b.i);
    auto left = chain(w, spec.modes, spec.lambdas, 0, l1, 0);
    auto right = chain(w, spec.modes, spec.lambdas, l1, w.size(), l1 - 1);
    return TE::comm(left, right, RationalV::vpow(spec.lambdas.back()));
}

RootVectorSpec tilde_spec(const Roots& roots, int root, const std::vector<int>& split, int eps) {
    const auto& sys = roots.sys();
    if (static_cast<int>(split.size()) != sys.rank()) throw ConfigError("split must have one entry per color");
    if (eps != 1 && eps != -1) throw ConfigError("sign must be + or -");
    const auto& b = roots[static_cast<std::size_t>(root)];
    RootVectorSpec spec;
    spec.root = root;
    for (int x : b.word) spec.modes.push_back(split[static_cast<std::size_t>(x - 1)]);
    auto step = [&](int letter) { return eps * ((sys.type() == 'C' && letter == sys.rank()) ? 2 : 1); };
    if (!double_root(roots, b)) {
        for (std::size_t p = 1; p < b.word.size(); ++p) spec.lambdas.push_back(step(b.word[p]));
    } else {
        const std::size_t l1 = static_cast<std::size_t>(sys.rank() - b.i);
        for (std::size_t p = 1; p < l1; ++p) spec.lambdas.push_back(step(b.word[p]));
        for (std::size_t p = l1 + 1; p < b.word.size(); ++p) spec.lambdas.push_back(step(b.word[p]));
        spec.lambdas.push_back(0);
    }
    return spec;
}

int split_total(const Roots& roots, int root, const std::vector<int>& split) {
    int s = 0;
    for (int x : roots[static_cast<std::size_t>(root)].word) s += split[static_cast<std::size_t>(x - 1)];
    return s;
}

std::vector<int> default_split(const Roots& roots, int root, int s) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    std::vector<int> split(static_cast<std::size_t>(roots.sys().rank()), 0);
    const int letter = double_root(roots, b) ? roots.sys().rank() : b.word[0];
    split[static_cast<std::size_t>(letter - 1)] = s;
    return split;
}

TrigExpr tilde_root_vector(const Roots& roots, int root, int s, int eps) {
    return root_vector(roots, tilde_spec(roots, root, default_split(roots, root, s), eps));
}

RootVectorSpec random_spec(const Roots& roots, int root, int s, std::mt19937& rng, bool nonneg) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    const std::size_t len = b.word.size();
    RootVectorSpec spec;
    spec.root = root;
    spec.modes.assign(len, 0);
    if (nonneg) {
        if (s < 0) throw ConfigError("nonnegative decomposition of a negative mode");
        std::uniform_int_distribution<std::size_t> pos(0, len - 1);
        for (int t = 0; t < s; ++t) spec.modes[pos(rng)] += 1;
    } else {
        std::uniform_int_distribution<int> part(-1, 1);
        int acc = 0;
        for (std::size_t p = 0; p + 1 < len; ++p) acc += spec.modes[p] = part(rng);
        spec.modes[len - 1] = s - acc;
        std::shuffle(spec.modes.begin(), spec.modes.end(), rng);
    }
    std::uniform_int_distribution<int> lam(-2, 2);
    for (std::size_t p = 0; p + 1 < len; ++p) spec.lambdas.push_back(lam(rng));
    return spec;
}

TrigExpr rtt_root_vector(const Roots& roots, int root, int s, int eps) {
    const auto& b = roots[static_cast<std::size_t>(root)];
    const bool last_c = roots.sys().type() == 'C' && b.tag == RootTag::Last;
    return TE::scale(RationalV(angle(last_c ? 2 : 1)), tilde_root_vector(roots, root, s, eps));
}

TrigExpr divided_power(const Roots& roots, int root, int s, int p, int eps) {
    if (p < 0) throw ConfigError("negative divided power");
    if (p == 0) return TE::unit();
    const auto& b = roots[static_cast<std::size_t>(root)];
    auto e = tilde_root_vector(roots, root, s, eps);
    std::vector<TrigExpr> xs(static_cast<std::size_t>(p), e);
    LaurentZ den = quantum_factorial(p, b.norm);
    if (double_root(roots, b))
        for (int t = 0; t < p; ++t) den = den * quantum_int(2);
    return TE::scale(RationalV(LaurentZ(1), den), TE::prod(xs));
}

TrigExpr pbwd_monomial(const PbwdKey& h, const std::function<TrigExpr(int, int)>& vec) {
    std::vector<TrigExpr> xs;
    for (const auto& [bs, m] : h.h) {
        auto e = vec(bs.first, bs.second);
        for (int t = 0; t < m; ++t) xs.push_back(e);
    }
    return TE::prod(xs);
}

// ------------------------------------------------------------- closed forms

RationalV ClosedFormImage::prefactor() const {
    LaurentZ c(1);
    for (int t = 0; t < angle1; ++t) c = c * angle(1);
    for (int t = 0; t < angle2; ++t) c = c * angle(2);
    return RationalV(c);
}

SparsePoly<RationalV> ClosedFormImage::numerator() const {
    const int nv = static_cast<int>(monomial.size());
    TP f = TP::monomial(monomial, prefactor());
    for (const auto& q : q_factors) f = f * q_form(nv, q[0], q[1], q[2], q[3]);
    return f * extra;
}

SparsePoly<RationalV> q_form(int nv, int x1, int x2, int y1, int y2) {
    auto X1 = TP::var(nv, x1), X2 = TP::var(nv, x2), Y1 = TP::var(nv, y1), Y2 = TP::var(nv, y2);
    return (X1 * X2 + Y1 * Y2).scaled(RationalV(1) + RationalV::vpow(2)) -
           ((X1 + X2) * (Y1 + Y2)).scaled(RationalV::vpow(1));
}

ClosedFormImage closed_form(const Roots& roots, int root, const std::vector<int>& split, int eps) {
    const auto& sys = roots.sys();
    const int n = sys.rank();
    const auto& b = roots[static_cast<std::size_t>(root)];
    if (static_cast<int>(split.size()) != n) throw ConfigError("split must have one entry per color");
    ClosedFormImage cf;
    cf.k = b.nu;
    Layout L(b.nu);
    const int nv = L.nvars();
    cf.monomial.assign(static_cast<std::size_t>(nv), 0);
    cf.extra = TP::constant(nv, RationalV(1));
    auto s = [&](int c) { return split[static_cast<std::size_t>(c - 1)]; };
    auto x = [&](int c, int t) { return L.var(c, t); };
    auto bump = [&](int c, int t, int e) { cf.monomial[static_cast<std::size_t>(x(c, t))] += e; };
    auto X = [&](int c, int t) { return TP::var(nv, x(c, t)); };
    const RationalV one(1), v1 = RationalV::vpow(1), v2 = RationalV::vpow(2);
    const int i = b.i, j = b.j;

    // single-copy roots: + puts +1 on every letter but the last, - on every letter but the first
    auto simple_chain = [&]() {
        const auto& w = b.word;
        for (std::size_t p = 0; p < w.size(); ++p) {
            int extra = 0;
            if (eps > 0 && p + 1 < w.size()) extra = 1;
            if (eps < 0 && p > 0) extra = 1;
            bump(w[p], 1, s(w[p]) + extra);
        }
    };

    if (sys.type() == 'C') {
        switch (b.tag) {
            case RootTag::Interval:
            case RootTag::Last:
                cf.angle1 = b.height - 1;
                simple_chain();
                break;
            case RootTag::ToEnd:
                cf.angle1 = n - i - 1;
                cf.angle2 = 1;
                simple_chain();
                break;
            case RootTag::Turn: {
                cf.angle1 = 2 * n - i - j - 1;
                cf.angle2 = 1;
                if (eps > 0) {
                    for (int l = i; l <= j - 1; ++l) bump(l, 1, s(l) + 1);
                    bump(j, 1, s(j));
                    bump(j, 2, s(j));
                    for (int l = j + 1; l <= n - 1; ++l) {
                        bump(l, 1, s(l) + 1);
                        bump(l, 2, s(l) + 1);
                    }
                    bump(n, 1, s(n) + 1);
                    cf.extra = (X(j, 1) * X(j, 2)).scaled(one + v2) - (X(j - 1, 1) * (X(j, 1) + X(j, 2))).scaled(v1);
                } else {
                    bump(i, 1, s(i));
                    for (int l = i + 1; l <= j - 1; ++l) bump(l, 1, s(l) + 1);
                    for (int l = j; l <= n - 1; ++l) {
                        bump(l, 1, s(l) + 1);
                        bump(l, 2, s(l) + 1);
                    }
                    bump(n, 1, s(n) + 1);
                    cf.extra = X(j - 1, 1).scaled(one + v2) - (X(j, 1) + X(j, 2)).scaled(v1);
                }
                for (int l = j; l <= n - 2; ++l) cf.q_factors.push_back({x(l, 1), x(l, 2), x(l + 1, 1), x(l + 1, 2)});
                break;
            }
            case RootTag::Double: {
                cf.angle1 = 2 * n - 2 * i - 2;
                cf.angle2 = 2;
                for (int l = i; l <= n - 1; ++l) {
                    const int e = (eps < 0 && l == i) ? s(l) : s(l) + 1;
                    bump(l, 1, e);
                    bump(l, 2, e);
                }
                bump(n, 1, eps > 0 ? s(n) : s(n) + 2);
                for (int l = i; l <= n - 2; ++l) cf.q_factors.push_back({x(l, 1), x(l, 2), x(l + 1, 1), x(l + 1, 2)});
                break;
            }
        }
        return cf;
    }

    // type D
    if (b.tag == RootTag::Turn && j == n - 1) {
        cf.angle1 = n - i;
        if (eps > 0) {
            for (int l = i; l <= n - 3; ++l) bump(l, 1, s(l) + 1);
            bump(n - 2, 1, s(n - 2) + 2);
            bump(n - 1, 1, s(n - 1));
            bump(n, 1, s(n));
        } else {
            bump(i, 1, s(i));
            for (int l = i + 1; l <= n; ++l) bump(l, 1, s(l) + 1);
        }
        return cf;
    }
    if (b.tag != RootTag::Turn) {
        cf.angle1 = b.height - 1;
        simple_chain();
        return cf;
    }
    cf.angle1 = 2 * n - i - j - 1;
    if (eps > 0) {
        for (int l = i; l <= j - 2; ++l) bump(l, 1, s(l) + 1);
        bump(j - 1, 1, s(j - 1) + 2);
        bump(j, 1, s(j));
        bump(j, 2, s(j));
        for (int l = j + 1; l <= n - 2; ++l) {
            bump(l, 1, s(l) + 1);
            bump(l, 2, s(l) + 1);
        }
    } else {
        bump(i, 1, s(i));
        for (int l = i + 1; l <= j - 1; ++l) bump(l, 1, s(l) + 1);
        for (int l = j; l <= n - 2; ++l) {
            bump(l, 1, s(l) + 1);
            bump(l, 2, s(l) + 1);
        }
    }
    bump(n - 1, 1, s(n - 1) + 1);
    bump(n, 1, s(n) + 1);
    for (int l = j; l <= n - 2; ++l)
        cf.extra = cf.extra * (X(l, 1).scaled(v2) - X(l, 2)) * (X(l, 2).scaled(v2) - X(l, 1));
    return cf;
}

std::optional<RationalV> proportional(const ShuffleElement& a, const ShuffleElement& b) {
    if (a.k != b.k) return std::nullopt;
    if (a.f.is_zero() || b.f.is_zero()) return std::nullopt;
    const auto la = a.f.lead(), lb = b.f.lead();
    if (la.first != lb.first) return std::nullopt;
    RationalV c = la.second / lb.second;
    if (!c.as_scaled_monomial()) return std::nullopt;
    if (!(a.f == b.f.scaled(c))) return std::nullopt;
    return c;
}

}  // namespace sf
