#include "shuffle_forge/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sf {

RootSystem::RootSystem(char type, int rank) : type_(type), n_(rank) {
    if (type == 'C') {
        if (rank < 2) throw ConfigError("type C needs rank >= 2");
    } else if (type == 'D') {
        if (rank < 4) throw ConfigError("type D needs rank >= 4");
    } else if (type == 'A') {
        if (rank < 1) throw ConfigError("type A needs rank >= 1");
    } else {
        throw ConfigError(std::string("unsupported root system type ") + type);
    }
    const auto n = static_cast<std::size_t>(rank);
    a_.assign(n, std::vector<int>(n, 0));
    d_.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) a_[i][i] = 2;
    auto link = [&](int i, int j) {
        a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
        a_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
    };
    if (type == 'A') {
        for (int i = 1; i < rank; ++i) link(i, i + 1);
    } else if (type == 'C') {
        for (int i = 1; i + 1 < rank; ++i) link(i, i + 1);
        a_[n - 2][n - 1] = -2;
        a_[n - 1][n - 2] = -1;
        d_[n - 1] = 2;
    } else {
        for (int i = 1; i + 1 < rank; ++i) link(i, i + 1);
        link(rank - 2, rank);
    }
}

int RootSystem::pairing(const Grading& x, const Grading& y) const {
    int s = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) s += x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)] * pairing(i, j);
    return s;
}

namespace {

std::vector<int> range(int a, int b) {  // a..b inclusive, ascending or descending
    std::vector<int> r;
    if (a <= b)
        for (int x = a; x <= b; ++x) r.push_back(x);
    else
        for (int x = a; x >= b; --x) r.push_back(x);
    return r;
}

void append(std::vector<int>& w, const std::vector<int>& x) { w.insert(w.end(), x.begin(), x.end()); }

std::string label_of(RootTag tag, int i, int j, int n) {
    std::ostringstream os;
    switch (tag) {
        case RootTag::Interval:
            if (i == j) os << "[" << i << "]";
            else os << "[" << i << "," << j << "]";
            break;
        case RootTag::ToEnd: os << "[" << i << "," << n << "]"; break;
        case RootTag::Turn: os << "[" << i << "," << n << "," << j << "]"; break;
        case RootTag::Double: os << "[" << i << "," << n << "," << i << "]"; break;
        case RootTag::Last: os << "[" << n << "]"; break;
    }
    return os.str();
}

}  // namespace

Roots::Roots(const RootSystem& sys) : sys_(sys) {
    const int n = sys.rank();
    auto add = [&](RootTag tag, int i, int j, std::vector<int> word) {
        PositiveRoot b;
        b.tag = tag;
        b.i = i;
        b.j = j;
        b.word = std::move(word);
        b.nu.assign(static_cast<std::size_t>(n), 0);
        for (int x : b.word) b.nu[static_cast<std::size_t>(x - 1)] += 1;
        b.height = static_cast<int>(b.word.size());
        b.norm = sys.pairing(b.nu, b.nu) / 2;
        b.label = label_of(tag, i, j, n);
        roots_.push_back(std::move(b));
    };
    if (sys.type() == 'A') {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) add(RootTag::Interval, i, j, range(i, j));
    } else if (sys.type() == 'C') {
        for (int i = 1; i < n; ++i) {
            for (int j = i; j < n; ++j) add(RootTag::Interval, i, j, range(i, j));
            add(RootTag::ToEnd, i, n, range(i, n));
            for (int j = i + 1; j < n; ++j) {
                auto w = range(i, n);
                append(w, range(n - 1, j));
                add(RootTag::Turn, i, j, w);
            }
            auto w = range(i, n - 1);
            append(w, range(i, n - 1));
            w.push_back(n);
            add(RootTag::Double, i, i, w);
        }
        add(RootTag::Last, n, n, {n});
    } else {
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = i; j <= n - 1; ++j) add(RootTag::Interval, i, j, range(i, j));
            auto w = range(i, n - 2);
            w.push_back(n);
            add(RootTag::ToEnd, i, n, w);
            for (int j = i + 1; j <= n - 1; ++j) {
                auto t = range(i, n - 2);
                t.push_back(n);
                append(t, range(n - 1, j));
                add(RootTag::Turn, i, j, t);
            }
        }
        add(RootTag::Interval, n - 1, n - 1, {n - 1});
        add(RootTag::Last, n, n, {n});
    }
    // the convex order is the lexicographic order of the words
    std::sort(roots_.begin(), roots_.end(),
              [](const PositiveRoot& x, const PositiveRoot& y) { return x.word < y.word; });
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        roots_[k].index = static_cast<int>(k);
        by_nu_[roots_[k].nu] = static_cast<int>(k);
    }
}

int Roots::find(const Grading& nu) const {
    auto it = by_nu_.find(nu);
    return it == by_nu_.end() ? -1 : it->second;
}

int Roots::find_label(const std::string& label) const {
    for (const auto& b : roots_)
        if (b.label == label || qualified_name(b) == label) return b.index;
    return -1;
}

std::vector<Grading> brute_force_roots(const RootSystem& sys) {
    const int n = sys.rank();
    std::set<Grading> found;
    std::vector<Grading> layer;
    for (int i = 1; i <= n; ++i) {
        Grading e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        layer.push_back(e);
        found.insert(e);
    }
    while (!layer.empty()) {
        std::vector<Grading> next;
        for (const auto& b : layer) {
            for (int i = 1; i <= n; ++i) {
                // q = largest q with b - q alpha_i a root
                int q = 0;
                Grading t = b;
                while (true) {
                    t[static_cast<std::size_t>(i - 1)] -= 1;
                    if (found.count(t) == 0) break;
                    ++q;
                }
                int pairing = 0;  // <b, alpha_i^vee>
                for (int j = 1; j <= n; ++j) pairing += b[static_cast<std::size_t>(j - 1)] * sys.a(i, j);
                int p = q - pairing;
                if (p > 0) {
                    Grading c = b;
                    c[static_cast<std::size_t>(i - 1)] += 1;
                    if (found.insert(c).second) next.push_back(c);
                }
            }
        }
        layer = std::move(next);
    }
    return {found.begin(), found.end()};
}

bool is_lyndon(const std::vector<int>& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<int> suffix(w.begin() + static_cast<long>(k), w.end());
        if (!(w < suffix)) return false;
    }
    return !w.empty();
}

int total(const Grading& k) { return std::accumulate(k.begin(), k.end(), 0); }

bool kp_less(const KostantPartition& a, const KostantPartition& b) {
    for (std::size_t g = 0; g < a.size(); ++g)
        if (a[g] != b[g]) return a[g] < b[g];
    return false;
}

std::vector<KostantPartition> kostant_partitions(const Roots& roots, const Grading& k) {
    std::vector<KostantPartition> out;
    const std::size_t m = roots.size();
    KostantPartition d(m, 0);
    Grading rest = k;
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == m) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) out.push_back(d);
            return;
        }
        const auto& nu = roots[b].nu;
        int cap = 1 << 20;
        for (std::size_t i = 0; i < nu.size(); ++i)
            if (nu[i] > 0) cap = std::min(cap, rest[i] / nu[i]);
        for (int c = 0; c <= cap; ++c) {
            d[b] = c;
            for (std::size_t i = 0; i < nu.size(); ++i) rest[i] -= c * nu[i];
            rec(b + 1);
            for (std::size_t i = 0; i < nu.size(); ++i) rest[i] += c * nu[i];
        }
        d[b] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), kp_less);
    return out;
}

std::string kp_name(const Roots& roots, const KostantPartition& d) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::size_t b = 0; b < d.size(); ++b) {
        if (d[b] == 0) continue;
        if (!first) os << ",";
        first = false;
        os << roots[b].label << ":" << d[b];
    }
    os << "}";
    return os.str();
}

KostantPartition PbwdKey::deg(std::size_t nroots) const {
    KostantPartition d(nroots, 0);
    for (const auto& [bs, m] : h) d[static_cast<std::size_t>(bs.first)] += m;
    return d;
}

Grading PbwdKey::gr(const Roots& roots) const {
    Grading k(static_cast<std::size_t>(roots.sys().rank()), 0);
    for (const auto& [bs, m] : h) {
        const auto& nu = roots[static_cast<std::size_t>(bs.first)].nu;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += m * nu[i];
    }
    return k;
}

int PbwdKey::total_mode() const {
    int s = 0;
    for (const auto& [bs, m] : h) s += m * bs.second;
    return s;
}

std::vector<int> PbwdKey::modes_of(int b) const {
    std::vector<int> r;
    for (const auto& [bs, m] : h)
        if (bs.first == b)
            for (int t = 0; t < m; ++t) r.push_back(bs.second);
    return r;
}

std::string PbwdKey::str(const Roots& roots) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [bs, m] : h) {
        if (!first) os << ",";
        first = false;
        os << "(" << roots[static_cast<std::size_t>(bs.first)].label << "," << bs.second << "):" << m;
    }
    os << "}";
    return os.str();
}

std::vector<PbwdKey> pbwd_keys_for(const Roots& roots, const KostantPartition& d, int smin, int smax) {
    // independent multiset choices per root
    std::vector<std::vector<std::vector<std::pair<int, int>>>> choices;  // per root: list of (mode,mult) lists
    std::vector<int> support;
    for (std::size_t b = 0; b < d.size(); ++b) {
        if (d[b] == 0) continue;
        support.push_back(static_cast<int>(b));
        std::vector<std::vector<std::pair<int, int>>> opts;
        std::vector<std::pair<int, int>> cur;
        std::function<void(int, int)> rec = [&](int s, int left) {
            if (left == 0) {
                opts.push_back(cur);
                return;
            }
            if (s > smax) return;
            for (int m = left; m >= 0; --m) {
                if (m > 0) cur.emplace_back(s, m);
                rec(s + 1, left - m);
                if (m > 0) cur.pop_back();
            }
        };
        rec(smin, d[b]);
        std::sort(opts.begin(), opts.end());
        choices.push_back(std::move(opts));
    }
    std::vector<PbwdKey> out;
    PbwdKey key;
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == support.size()) {
            out.push_back(key);
            return;
        }
        for (const auto& opt : choices[t]) {
            std::size_t before = key.h.size();
            for (const auto& [s, m] : opt) key.h.push_back({{support[t], s}, m});
            rec(t + 1);
            key.h.resize(before);
        }
    };
    rec(0);
    return out;
}

std::vector<PbwdKey> pbwd_keys(const Roots& roots, const Grading& k, int smin, int smax) {
    std::vector<PbwdKey> out;
    for (const auto& d : kostant_partitions(roots, k)) {
        auto keys = pbwd_keys_for(roots, d, smin, smax);
        out.insert(out.end(), keys.begin(), keys.end());
    }
    return out;
}

}  // namespace sf
