#include "packed.hpp"

#include <algorithm>

namespace sf::packed {

namespace {

Coef add_checked(Coef a, Coef b) {
    Coef r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow();
    return r;
}

Coef mul_checked(Coef a, Coef b) {
    Coef r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
    return r;
}

void check_bounds(const Poly& p) {
    for (int s = 0; s < kSlots; ++s)
        if (p.lo[static_cast<std::size_t>(s)] < -kBias || p.hi[static_cast<std::size_t>(s)] > kBias - 1)
            throw Overflow();
}

void recompute_bounds(Poly& p) {
    p.lo.fill(0);
    p.hi.fill(0);
    bool first = true;
    int e[kSlots];
    for (const auto& t : p.t) {
        decode(t.k, e, kSlots);
        for (int s = 0; s < kSlots; ++s) {
            auto& l = p.lo[static_cast<std::size_t>(s)];
            auto& h = p.hi[static_cast<std::size_t>(s)];
            if (first || e[s] < l) l = e[s];
            if (first || e[s] > h) h = e[s];
        }
        first = false;
    }
}

// Sorted merge of two term lists, combining equal keys.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].k < b[j].k)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].k < a[i].k) {
            r.push_back({b[j].k, negate_b ? -b[j].c : b[j].c});
            ++j;
        } else {
            Coef c = negate_b ? add_checked(a[i].c, -b[j].c) : add_checked(a[i].c, b[j].c);
            if (c != 0) r.push_back({a[i].k, c});
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

Key encode(const int* e, int n) {
    Key k = 0;
    for (int s = kSlots - 1; s >= 0; --s) {
        const int x = s < n ? e[s] : 0;
        if (x < -kBias || x > kBias - 1) throw Overflow();
        k = (k << 8) | static_cast<Key>(x + kBias);
    }
    return k;
}

void decode(Key k, int* e, int n) {
    for (int s = 0; s < kSlots; ++s) {
        const int x = static_cast<int>(k & 0xff) - kBias;
        if (s < n) e[s] = x;
        k >>= 8;
    }
}

Key shift_of(int slot, int delta) {
    const Key unit = static_cast<Key>(1) << (8 * slot);
    return delta >= 0 ? unit * static_cast<Key>(delta) : static_cast<Key>(0) - unit * static_cast<Key>(-delta);
}

Coef to_coef(const mpz_class& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) throw Overflow();
    mpz_class a = abs(z);
    mpz_class hi = a >> 64;
    mpz_class lo = a - (hi << 64);
    Coef r = (static_cast<Coef>(mpz_get_ui(hi.get_mpz_t())) << 64) | static_cast<Coef>(mpz_get_ui(lo.get_mpz_t()));
    return z < 0 ? -r : r;
}

mpz_class from_coef(Coef c) {
    const bool neg = c < 0;
    unsigned __int128 a = neg ? static_cast<unsigned __int128>(-c) : static_cast<unsigned __int128>(c);
    mpz_class hi = static_cast<unsigned long>(a >> 64);
    mpz_class lo = static_cast<unsigned long>(a & ~static_cast<std::uint64_t>(0));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

Poly from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    Poly p;
    for (const auto& x : t) {
        if (!p.t.empty() && p.t.back().k == x.k) {
            p.t.back().c = add_checked(p.t.back().c, x.c);
            if (p.t.back().c == 0) p.t.pop_back();
        } else if (x.c != 0) {
            p.t.push_back(x);
        }
    }
    recompute_bounds(p);
    return p;
}

Poly mul_small(const Poly& p, const std::vector<std::pair<std::vector<int>, Coef>>& f, int n) {
    Poly r;
    std::array<int, kSlots> flo{}, fhi{};
    bool first = true;
    for (const auto& [e, c] : f) {
        for (int s = 0; s < n; ++s) {
            auto& l = flo[static_cast<std::size_t>(s)];
            auto& h = fhi[static_cast<std::size_t>(s)];
            if (first || e[static_cast<std::size_t>(s)] < l) l = e[static_cast<std::size_t>(s)];
            if (first || e[static_cast<std::size_t>(s)] > h) h = e[static_cast<std::size_t>(s)];
        }
        first = false;
    }
    for (int s = 0; s < kSlots; ++s) {
        r.lo[static_cast<std::size_t>(s)] = p.lo[static_cast<std::size_t>(s)] + flo[static_cast<std::size_t>(s)];
        r.hi[static_cast<std::size_t>(s)] = p.hi[static_cast<std::size_t>(s)] + fhi[static_cast<std::size_t>(s)];
    }
    check_bounds(r);
    for (const auto& [e, c] : f) {
        Key d = 0;
        for (int s = 0; s < n; ++s) d += shift_of(s, e[static_cast<std::size_t>(s)]);
        std::vector<Term> sh;
        sh.reserve(p.t.size());
        for (const auto& t : p.t) sh.push_back({t.k + d, mul_checked(t.c, c)});
        r.t = merge(r.t, sh, false);
    }
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    const Poly& small = a.t.size() <= b.t.size() ? a : b;
    const Poly& big = a.t.size() <= b.t.size() ? b : a;
    Poly r;
    for (int s = 0; s < kSlots; ++s) {
        r.lo[static_cast<std::size_t>(s)] = a.lo[static_cast<std::size_t>(s)] + b.lo[static_cast<std::size_t>(s)];
        r.hi[static_cast<std::size_t>(s)] = a.hi[static_cast<std::size_t>(s)] + b.hi[static_cast<std::size_t>(s)];
    }
    check_bounds(r);
    const Key zero = encode(nullptr, 0);
    for (const auto& x : small.t) {
        const Key d = x.k - zero;
        std::vector<Term> sh;
        sh.reserve(big.t.size());
        for (const auto& t : big.t) sh.push_back({t.k + d, mul_checked(t.c, x.c)});
        r.t = merge(r.t, sh, false);
    }
    return r;
}

Poly relabel(const Poly& p, const std::vector<int>& perm) {
    Poly r;
    r.t.reserve(p.t.size());
    int e[kSlots], f[kSlots];
    const int n = static_cast<int>(perm.size());
    for (const auto& t : p.t) {
        decode(t.k, e, kSlots);
        std::copy(e, e + kSlots, f);
        for (int s = 0; s < n; ++s) f[perm[static_cast<std::size_t>(s)]] = e[s];
        r.t.push_back({encode(f, kSlots), t.c});
    }
    std::sort(r.t.begin(), r.t.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    r.lo = p.lo;
    r.hi = p.hi;
    for (int s = 0; s < n; ++s) {
        r.lo[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])] = p.lo[static_cast<std::size_t>(s)];
        r.hi[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])] = p.hi[static_cast<std::size_t>(s)];
    }
    return r;
}

void add_into(Poly& acc, const Poly& p, bool negate) {
    if (acc.t.empty() && !negate) {
        acc = p;
        return;
    }
    const bool was_empty = acc.t.empty();
    acc.t = merge(acc.t, p.t, negate);
    for (int s = 0; s < kSlots; ++s) {
        auto i = static_cast<std::size_t>(s);
        acc.lo[i] = was_empty ? p.lo[i] : std::min(acc.lo[i], p.lo[i]);
        acc.hi[i] = was_empty ? p.hi[i] : std::max(acc.hi[i], p.hi[i]);
    }
}

bool divide_difference(Poly& p, int a, int b) {
    // Group by the monomial in the other slots and the total degree D in
    // (a, b); within a group q_{i-1} = c_i + q_i running down in i.
    struct Row {
        Key rest;
        int deg, i;
        Coef c;
    };
    std::vector<Row> rows;
    rows.reserve(p.t.size());
    int e[kSlots];
    for (const auto& t : p.t) {
        decode(t.k, e, kSlots);
        const int ea = e[a], eb = e[b];
        e[a] = 0;
        e[b] = 0;
        rows.push_back({encode(e, kSlots), ea + eb, ea, t.c});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.rest != y.rest) return x.rest < y.rest;
        if (x.deg != y.deg) return x.deg < y.deg;
        return x.i > y.i;
    });
    std::vector<Term> out;
    std::size_t g = 0;
    while (g < rows.size()) {
        std::size_t h = g;
        while (h < rows.size() && rows[h].rest == rows[g].rest && rows[h].deg == rows[g].deg) ++h;
        const int D = rows[g].deg;
        int f[kSlots];
        decode(rows[g].rest, f, kSlots);
        Coef q = 0;
        std::size_t r = g;
        for (int i = rows[g].i; i > rows[h - 1].i; --i) {
            if (r < h && rows[r].i == i) q = add_checked(q, rows[r++].c);
            if (q != 0) {
                f[a] = i - 1;
                f[b] = D - i;
                out.push_back({encode(f, kSlots), q});
            }
        }
        if (add_checked(q, rows[h - 1].c) != 0) return false;
        g = h;
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    p.t = std::move(out);
    return true;
}

}  // namespace sf::packed
