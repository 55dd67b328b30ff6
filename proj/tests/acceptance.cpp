// Acceptance run: one line per criterion, exit code 0 iff all pass.
#include "shuffle_forge/dims.hpp"
#include "shuffle_forge/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace sf;

namespace {

// All comparisons are exact equalities in Q(v) or Q[h]; no floating tolerance.
constexpr double kTolerance = 0.0;

struct Criterion {
    int number;
    std::string title;
    double budget_s;
    std::function<std::string()> run;  // empty string on success, else a witness
};

using Clock = std::chrono::steady_clock;

std::string run_suites(const std::vector<SuiteConfig>& cfgs, std::string* info) {
    long total = 0;
    for (const auto& c : cfgs) {
        const Report rep = run_suite(c);
        total += static_cast<long>(rep.records.size());
        for (const auto& r : rep.records)
            if (!r.pass) return c.suite + " " + c.type + std::to_string(c.rank) + " " + r.id + ": " + r.witness;
    }
    *info = std::to_string(total) + " checks";
    return "";
}

SuiteConfig cfg(char type, int rank, const std::string& suite, int smin, int smax) {
    SuiteConfig c;
    c.type = type;
    c.rank = rank;
    c.suite = suite;
    c.smin = smin;
    c.smax = smax;
    c.seed = 2024;
    c.timing = false;
    return c;
}

const std::vector<std::pair<char, int>> kSystems{{'C', 2}, {'C', 3}, {'D', 4}};

ShuffleElement random_trig(const TrigShuffle& alg, std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> col(1, alg.rank()), mode(-1, 1);
    ShuffleElement F = alg.unit();
    for (int t = 0; t < len; ++t) F = alg.star(F, alg.generator(col(rng), mode(rng)));
    return F;
}

SparsePoly<RationalV> random_poly(std::mt19937_64& rng, int nv, int terms) {
    std::uniform_int_distribution<int> ex(-2, 3), co(-5, 5), vv(-2, 2);
    SparsePoly<RationalV> p(nv);
    for (int t = 0; t < terms; ++t) {
        Exp e(static_cast<std::size_t>(nv));
        for (auto& k : e) k = ex(rng);
        p.add_term(e, RationalV(LaurentZ::monomial(co(rng), vv(rng))));
    }
    return p;
}

std::string kernel_properties(std::string* info) {
    int assoc = 0, modes = 0;
    for (char type : {'C', 'D'}) {
        TrigShuffle alg(RootSystem(type, type == 'C' ? 3 : 4));
        std::mt19937 rng(type == 'C' ? 91 : 92);
        for (int t = 0; t < 100; ++t, ++assoc) {
            auto F = random_trig(alg, rng, 1 + t % 2);
            auto G = random_trig(alg, rng, 1 + (t / 2) % 2);
            auto H = random_trig(alg, rng, 1 + (t / 4) % 2);
            if (!(alg.star(alg.star(F, G), H) == alg.star(F, alg.star(G, H))))
                return "star not associative on triple " + std::to_string(t) + " of " + alg.sys().name();
        }
        for (int t = 0; t < 20; ++t, ++modes) {
            auto F = random_trig(alg, rng, 1 + t % 2);
            auto G = random_trig(alg, rng, 1 + (t / 2) % 3);
            if (!(alg.star(F, G, StarMode::Cosets) == alg.star(F, G, StarMode::FullGroup)))
                return "coset and full-group symmetrization differ on pair " + std::to_string(t);
        }
    }
    std::mt19937_64 rng(93);
    int divs = 0, syms = 0;
    for (int t = 0; t < 1000; ++t, ++divs) {
        std::uniform_int_distribution<int> nt(1, 20), nv(1, 3);
        const int n = nv(rng);
        auto f = random_poly(rng, n, nt(rng));
        auto g = random_poly(rng, n, nt(rng) % 6 + 1);
        if (g.is_zero()) g = SparsePoly<RationalV>::constant(n, RationalV(1));
        auto r = try_exact_div(f * g, g);
        if (!r.ok || !(r.quotient == f)) return "exact_div round trip failed on case " + std::to_string(t);
    }
    const std::vector<std::vector<int>> shapes{{2, 1}, {3}, {2, 2}, {1, 2, 1}};
    for (int t = 0; t < 1000; ++t, ++syms) {
        const auto& blocks = shapes[static_cast<std::size_t>(t) % shapes.size()];
        int nv = 0, order = 1;
        for (int b : blocks) {
            nv += b;
            for (int i = 2; i <= b; ++i) order *= i;
        }
        auto s = symmetrize(random_poly(rng, nv, 4), blocks);
        if (!is_block_symmetric(s, blocks) || !(symmetrize(s, blocks) == s.scaled(RationalV(order))))
            return "symmetrize round trip failed on case " + std::to_string(t);
    }
    *info = std::to_string(assoc) + " triples, " + std::to_string(modes) + " mode pairs, " + std::to_string(divs) +
            " divisions, " + std::to_string(syms) + " symmetrizations";
    return "";
}

std::string dims_identity(std::string* info) {
    int rows = 0;
    std::vector<std::pair<char, Grading>> cases{{'C', {1, 1}}, {'C', {2, 1}}, {'C', {2, 2}}, {'D', {1, 1, 1, 1}}};
    for (const auto& [type, k] : cases) {
        const Roots R(RootSystem(type, static_cast<int>(k.size())));
        for (const auto& r : dim_report(R, k, 0, 2)) {
            ++rows;
            if (!r.ok())
                return R.sys().name() + " degree " + std::to_string(r.degree) + ": space " +
                       std::to_string(r.space_dim) + " pbwd " + std::to_string(r.pbwd_count) + " rank " +
                       std::to_string(r.psi_rank) + " " + r.witness;
        }
    }
    *info = std::to_string(rows) + " degree slices equal and independent";
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> cs;
    std::vector<std::string> infos(10);

    cs.push_back({1, "defining relations vanish under Psi", 60, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) {
                          v.push_back(cfg(t, n, "relations", -2, 2));
                          v.push_back(cfg(t, n, "yangian-relations", 0, 2));
                      }
                      return run_suites(v, &infos[1]);
                  }});
    cs.push_back({2, "closed forms of tilde root vectors", 120, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) v.push_back(cfg(t, n, "psirv", 0, 1));
                      return run_suites(v, &infos[2]);
                  }});
    cs.push_back({3, "leading terms with 20 random lambda choices", 120, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) {
                          auto c = cfg(t, n, "phirv", -1, 2);
                          c.samples = 20;
                          v.push_back(c);
                      }
                      return run_suites(v, &infos[3]);
                  }});
    cs.push_back({4, "vanishing below the degree, |k| <= 5", 600, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) {
                          auto c = cfg(t, n, "vanish", -1, 1);
                          c.max_k = 5;
                          v.push_back(c);
                      }
                      return run_suites(v, &infos[4]);
                  }});
    cs.push_back({5, "h-independent cofactor and G-divisibility, |k| <= 5", 600, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) {
                          auto c = cfg(t, n, "leading", -1, 1);
                          c.max_k = 5;
                          v.push_back(c);
                      }
                      return run_suites(v, &infos[5]);
                  }});
    cs.push_back({6, "PBWD dimension identity, degrees 0..2", 900, [&] { return dims_identity(&infos[6]); }});
    cs.push_back({7, "integral forms with negative controls", 900, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'D', 4}}) {
                          v.push_back(cfg(t, n, "lusztig", -1, 1));
                          v.push_back(cfg(t, n, "rtt", -1, 1));
                      }
                      return run_suites(v, &infos[7]);
                  }});
    cs.push_back({8, "Yangian leading terms, closed forms, integrality", 600, [&] {
                      std::vector<SuiteConfig> v;
                      for (auto [t, n] : kSystems) {
                          v.push_back(cfg(t, n, "yangian-leading", 0, 2));
                          v.push_back(cfg(t, n, "yangian-psirv", 0, 2));
                          auto c = cfg(t, n, "yangian-integral", 0, 1);
                          c.max_k = 4;
                          v.push_back(c);
                      }
                      return run_suites(v, &infos[8]);
                  }});
    cs.push_back({9, "kernel properties", 120, [&] { return kernel_properties(&infos[9]); }});

    std::printf("tolerance: %g (exact arithmetic)\n", kTolerance);
    int failed = 0;
    double total_s = 0;
    for (auto& c : cs) {
        const auto t0 = Clock::now();
        std::string witness;
        try {
            witness = c.run();
        } catch (const std::exception& e) {
            witness = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        total_s += s;
        const bool in_time = s <= c.budget_s;
        const bool pass = witness.empty() && in_time;
        if (!pass) ++failed;
        std::printf("criterion %d: %s  %s  [%.1fs / budget %.0fs]", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                    s, c.budget_s);
        if (!witness.empty()) std::printf("  witness: %s", witness.c_str());
        else if (!in_time) std::printf("  over budget");
        else std::printf("  (%s)", infos[static_cast<std::size_t>(c.number)].c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu criteria pass, %.1fs total\n", static_cast<int>(cs.size()) - failed, cs.size(),
                total_s);
    return failed == 0 ? 0 : 1;
}
