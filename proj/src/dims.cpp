#include "shuffle_forge/dims.hpp"

#include "shuffle_forge/rootvec.hpp"
#include "shuffle_forge/specmaps.hpp"
#include "shuffle_forge/yangian.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sf {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs pole_pairs(const RootSystem& sys, const Grading& k) {
    Layout L(k);
    Pairs out;
    for (int i = 1; i <= sys.rank(); ++i)
        for (int j = i + 1; j <= sys.rank(); ++j) {
            if (sys.a(i, j) == 0) continue;
            for (int r = 1; r <= k[static_cast<std::size_t>(i - 1)]; ++r)
                for (int s = 1; s <= k[static_cast<std::size_t>(j - 1)]; ++s) out.emplace_back(L.var(i, r), L.var(j, s));
        }
    return out;
}

bool support_ok(const Pairs& pairs, int nv, const Exp& e) {
    for (unsigned mask = 1; mask < (1u << nv); ++mask) {
        int deg = 0, poles = 0;
        for (int v = 0; v < nv; ++v)
            if (mask >> v & 1) deg += e[static_cast<std::size_t>(v)];
        for (const auto& [a, b] : pairs)
            if ((mask >> a & 1) && (mask >> b & 1)) ++poles;
        if (deg < poles) return false;
    }
    return true;
}

// nonincreasing sequences of length m summing to e with parts <= cap
void partitions(int e, int m, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        if (e == 0) out.push_back(cur);
        return;
    }
    const int left = m - static_cast<int>(cur.size()) - 1;
    for (int p = std::min(e, cap); p >= 0; --p) {
        if (e - p > p * left) break;
        cur.push_back(p);
        partitions(e - p, m, p, cur, out);
        cur.pop_back();
    }
}

// Representatives (nonincreasing inside each color block) of the symmetric
// monomial orbits of degree D.
std::vector<Exp> orbit_reps(const Grading& k, int D) {
    std::vector<Exp> out;
    Exp cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
        if (c == k.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            std::vector<std::vector<int>> parts;
            std::vector<int> tmp;
            partitions(e, k[c], e, tmp, parts);
            for (const auto& p : parts) {
                const auto n0 = cur.size();
                cur.insert(cur.end(), p.begin(), p.end());
                rec(c + 1, left - e);
                cur.resize(n0);
            }
        }
    };
    rec(0, D);
    return out;
}

template <class S>
SparsePoly<S> orbit_sum(const Exp& rep, const Grading& k, const S& c) {
    const int nv = static_cast<int>(rep.size());
    SparsePoly<S> r(nv);
    std::vector<std::vector<std::vector<int>>> blocks;
    std::size_t off = 0;
    for (int kc : k) {
        std::vector<int> b(rep.begin() + static_cast<long>(off), rep.begin() + static_cast<long>(off) + kc);
        std::sort(b.begin(), b.end());
        std::vector<std::vector<int>> perms;
        do perms.push_back(b);
        while (std::next_permutation(b.begin(), b.end()));
        blocks.push_back(std::move(perms));
        off += static_cast<std::size_t>(kc);
    }
    Exp e;
    std::function<void(std::size_t)> rec = [&](std::size_t blk) {
        if (blk == blocks.size()) {
            r.add_term(e, c);
            return;
        }
        for (const auto& p : blocks[blk]) {
            const auto n0 = e.size();
            e.insert(e.end(), p.begin(), p.end());
            rec(blk + 1);
            e.resize(n0);
        }
    };
    rec(0);
    return r;
}

struct WheelConfig {
    std::vector<int> ivars;
    int jvar, di, aij;
};

std::vector<WheelConfig> wheel_configs(const RootSystem& sys, const Grading& k) {
    Layout L(k);
    std::vector<WheelConfig> out;
    for (int i = 1; i <= sys.rank(); ++i)
        for (int j = 1; j <= sys.rank(); ++j) {
            if (i == j || sys.a(i, j) == 0) continue;
            const int m = 1 - sys.a(i, j);
            if (k[static_cast<std::size_t>(i - 1)] < m || k[static_cast<std::size_t>(j - 1)] < 1) continue;
            WheelConfig w{{}, L.var(j, 1), sys.d(i), sys.a(i, j)};
            for (int c = 1; c <= m; ++c) w.ivars.push_back(L.var(i, c));
            out.push_back(w);
        }
    return out;
}

template <class S>
std::vector<std::vector<S>> to_matrix(std::map<Exp, std::vector<S>>& rows) {
    std::vector<std::vector<S>> m;
    m.reserve(rows.size());
    for (auto& [e, r] : rows) m.push_back(std::move(r));
    return m;
}

// Fills space_dim, psi_rank and method from the two matrices.
void settle_ranks(DimRow& row, const ZMatrix& cons, const ZMatrix& psi, int ncols, const DimOptions& opt) {
    if (!opt.exact) {
        const int wr = modular_rank(cons, opt.prime, opt.point);
        const int pr = modular_rank(psi, opt.prime, opt.point);
        // wr <= true rank, so ncols - wr bounds the dimension from above; pr
        // independent elements in the space bound it from below.
        if (row.psi_in_space && pr == row.pbwd_count && ncols - wr == row.pbwd_count) {
            row.wheel_rank = wr;
            row.space_dim = ncols - wr;
            row.psi_rank = pr;
            row.method = "modular";
            return;
        }
    }
    row.wheel_rank = bareiss_rank(cons);
    row.space_dim = ncols - row.wheel_rank;
    row.psi_rank = bareiss_rank(psi);
    row.method = "bareiss";
}

std::vector<PbwdKey> keys_of_mode(const Roots& roots, const Grading& k, int delta) {
    std::vector<PbwdKey> out;
    if (delta < 0) return out;
    for (auto& h : pbwd_keys(roots, k, 0, delta))
        if (h.total_mode() == delta) out.push_back(std::move(h));
    return out;
}

template <class S>
ExprPtr<S> pbwd_expr(const PbwdKey& h, const std::function<ExprPtr<S>(int, int)>& vec) {
    std::vector<ExprPtr<S>> xs;
    for (const auto& [bs, m] : h.h) {
        auto e = vec(bs.first, bs.second);
        for (int t = 0; t < m; ++t) xs.push_back(e);
    }
    return FreeExpr<S>::prod(xs);
}

}  // namespace

int pole_count(const RootSystem& sys, const Grading& k) { return static_cast<int>(pole_pairs(sys, k).size()); }

bool regular_support(const RootSystem& sys, const Grading& k, const Exp& e) {
    return support_ok(pole_pairs(sys, k), total(k), e);
}

std::vector<DimRow> dim_report(const Roots& roots, const Grading& k, int deg_lo, int deg_hi, const DimOptions& opt) {
    const auto& sys = roots.sys();
    if (k.size() != static_cast<std::size_t>(sys.rank())) throw ConfigError("grading length differs from the rank");
    TrigShuffle alg(sys);
    Psi<TrigKernel> psi(alg);
    const auto pairs = pole_pairs(sys, k);
    const int P = static_cast<int>(pairs.size());
    const int nv = total(k);
    const auto configs = wheel_configs(sys, k);
    std::vector<DimRow> out;
    for (int delta = deg_lo; delta <= deg_hi; ++delta) {
        DimRow row;
        row.degree = delta;
        std::vector<Exp> reps;
        if (delta + P >= 0)
            for (auto& e : orbit_reps(k, delta + P))
                if (support_ok(pairs, nv, e)) reps.push_back(std::move(e));
        const int M = static_cast<int>(reps.size());
        row.orbits = M;

        std::map<Exp, std::vector<RationalV>> cons;
        for (int t = 0; t < M; ++t) {
            const auto f = orbit_sum(reps[static_cast<std::size_t>(t)], k, RationalV(1));
            for (std::size_t w = 0; w < configs.size(); ++w) {
                const auto& cf = configs[w];
                const auto img = TrigKernel::wheel_substitute(f, cf.ivars, cf.jvar, cf.di, cf.aij);
                for (const auto& [e, c] : img.terms()) {
                    Exp key{static_cast<int>(w)};
                    key.insert(key.end(), e.begin(), e.end());
                    auto& r = cons[key];
                    r.resize(static_cast<std::size_t>(M));
                    r[static_cast<std::size_t>(t)] = c;
                }
            }
        }

        const auto keys = keys_of_mode(roots, k, delta);
        row.pbwd_count = static_cast<int>(keys.size());
        std::vector<std::vector<RationalV>> prow;
        std::function<TrigExpr(int, int)> vec = [&](int b, int s) { return tilde_root_vector(roots, b, s, 1); };
        for (const auto& h : keys) {
            const auto F = psi(pbwd_expr<RationalV>(h, vec));
            if (row.psi_in_space) {
                std::string why;
                if (!alg.symmetric(F)) why = "not symmetric";
                else if (auto w = alg.wheel_check(F); !w.ok) why = "wheel: " + w.witness;
                else
                    for (const auto& [e, c] : F.f.terms()) {
                        int deg = 0;
                        bool neg = false;
                        for (int x : e) {
                            deg += x;
                            neg = neg || x < 0;
                        }
                        if (neg || deg != delta + P || !support_ok(pairs, nv, e)) {
                            why = "monomial outside the slice";
                            break;
                        }
                    }
                if (!why.empty()) {
                    row.psi_in_space = false;
                    row.witness = h.str(roots) + ": " + why;
                }
            }
            std::vector<RationalV> r;
            r.reserve(reps.size());
            for (const auto& e : reps) r.push_back(F.f.coeff(e));
            prow.push_back(std::move(r));
        }
        settle_ranks(row, clear_denominators(to_matrix(cons)), clear_denominators(prow), M, opt);
        if (row.witness.empty() && !row.ok())
            row.witness = "space " + std::to_string(row.space_dim) + ", PBWD " + std::to_string(row.pbwd_count) +
                          ", rank " + std::to_string(row.psi_rank);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<DimRow> dim_report_rational(const Roots& roots, const Grading& k, int deg_lo, int deg_hi,
                                        const DimOptions& opt) {
    const auto& sys = roots.sys();
    if (k.size() != static_cast<std::size_t>(sys.rank())) throw ConfigError("grading length differs from the rank");
    RatShuffle alg(sys);
    Psi<RatKernel> psi(alg);
    const int P = pole_count(sys, k);
    const auto configs = wheel_configs(sys, k);
    const auto kps = kostant_partitions(roots, k);
    std::vector<DimRow> out;
    for (int E = deg_lo; E <= deg_hi; ++E) {
        DimRow row;
        row.degree = E;
        // Q-basis: h^b times an x-orbit, b + x-degree = E + P
        std::vector<std::pair<Exp, int>> reps;
        for (int xd = 0; xd <= E + P; ++xd)
            for (auto& e : orbit_reps(k, xd)) reps.emplace_back(std::move(e), E + P - xd);
        const std::size_t M = reps.size();
        row.orbits = static_cast<int>(M);
        std::vector<SparsePoly<PolyH>> basis;
        basis.reserve(M);
        for (const auto& [e, b] : reps) basis.push_back(orbit_sum(e, k, PolyH::hpow(b)));

        // wheel conditions over Q
        std::map<Exp, std::vector<mpq_class>> cons;
        for (std::size_t t = 0; t < M; ++t)
            for (std::size_t w = 0; w < configs.size(); ++w) {
                const auto& cf = configs[w];
                const auto img = RatKernel::wheel_substitute(basis[t], cf.ivars, cf.jvar, cf.di, cf.aij);
                for (const auto& [e, c] : img.terms())
                    for (int j = 0; j <= c.degree(); ++j) {
                        if (c.coeff(j) == 0) continue;
                        Exp key{static_cast<int>(w), j};
                        key.insert(key.end(), e.begin(), e.end());
                        auto& r = cons[key];
                        r.resize(M);
                        r[t] = c.coeff(j);
                    }
            }
        auto wheel_m = to_matrix(cons);
        const auto null = nullspace_q(wheel_m, M);

        // good conditions on the wheel space
        std::map<Exp, std::vector<mpq_class>> good;
        for (std::size_t q = 0; q < null.size(); ++q) {
            SparsePoly<PolyH> g(total(k));
            for (std::size_t t = 0; t < M; ++t)
                if (null[q][t] != 0) g += basis[t].scaled(PolyH(null[q][t]));
            for (std::size_t di = 0; di < kps.size(); ++di) {
                const auto& d = kps[di];
                int need = 0;
                for (std::size_t b = 0; b < d.size(); ++b) need += d[b] * kappa(roots, static_cast<int>(b));
                RatSpecImage img;
                try {
                    img = phi_d_rat(roots, RationalShuffleElement{k, g}, d);
                } catch (const NotDivisible& ex) {
                    row.psi_in_space = false;
                    row.witness = "wheel element fails the B division: " + std::string(ex.what());
                    continue;
                }
                for (const auto& [e, c] : img.g.terms())
                    for (int j = 0; j < need && j <= c.degree(); ++j) {
                        if (c.coeff(j) == 0) continue;
                        Exp key{static_cast<int>(di), j};
                        key.insert(key.end(), e.begin(), e.end());
                        auto& r = good[key];
                        r.resize(null.size());
                        r[q] = c.coeff(j);
                    }
            }
        }

        // h^a Psi(X_h) with total mode E - a
        std::vector<std::vector<mpq_class>> prow;
        std::function<YangExpr(int, int)> vec = [&](int b, int s) { return yangian_tilde(roots, b, s); };
        for (int a = 0; a <= E; ++a)
            for (const auto& h : keys_of_mode(roots, k, E - a)) {
                ++row.pbwd_count;
                const auto F = psi(pbwd_expr<PolyH>(h, vec));
                if (row.psi_in_space) {
                    std::string why;
                    if (auto w = alg.wheel_check(F); !w.ok) why = "wheel: " + w.witness;
                    else if (auto m = is_good(roots, F); !m.ok) why = "not good: " + m.witness;
                    if (!why.empty()) {
                        row.psi_in_space = false;
                        row.witness = h.str(roots) + ": " + why;
                    }
                }
                std::vector<mpq_class> r;
                r.reserve(M);
                for (const auto& [e, b] : reps) r.push_back(b >= a ? F.f.coeff(e).coeff(b - a) : mpq_class(0));
                prow.push_back(std::move(r));
            }

        auto lift = [](const std::vector<std::vector<mpq_class>>& m) {
            std::vector<std::vector<PolyH>> p;
            for (const auto& r : m) p.emplace_back(r.begin(), r.end());
            return clear_denominators(p);
        };
        // space = null space of the good conditions inside the wheel space
        const auto gm = to_matrix(good);
        DimRow tmp = row;
        settle_ranks(tmp, lift(gm), lift(prow), static_cast<int>(null.size()), opt);
        row.wheel_rank = static_cast<int>(M - null.size());
        row.space_dim = tmp.space_dim;
        row.psi_rank = tmp.psi_rank;
        row.method = tmp.method;
        if (row.witness.empty() && !row.ok())
            row.witness = "space " + std::to_string(row.space_dim) + ", PBWD " + std::to_string(row.pbwd_count) +
                          ", rank " + std::to_string(row.psi_rank);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace sf
