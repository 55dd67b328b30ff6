#include "shuffle_forge/suites.hpp"

#include "shuffle_forge/dims.hpp"
#include "shuffle_forge/specmaps.hpp"
#include "shuffle_forge/yangian.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <thread>

namespace sf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string witness;
    std::string replay;
};

struct Instance {
    std::string id;
    bool control = false;
    std::function<Outcome(std::mt19937&)> run;
};

std::string gr_str(const Grading& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

std::string ints_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

Outcome from_witness(const std::string& w) { return {w.empty(), w, ""}; }

// ------------------------------------------------------------ relations

std::vector<Instance> relations(const SuiteConfig& cfg, bool rational) {
    std::vector<Instance> out;
    const RootSystem sys(cfg.type, cfg.rank);
    const int n = sys.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = cfg.smin; r <= cfg.smax; ++r)
                for (int s = cfg.smin; s <= cfg.smax; ++s) {
                    std::string id = "loop/i=" + std::to_string(i) + ",j=" + std::to_string(j) + "/r=" +
                                     std::to_string(r) + ",s=" + std::to_string(s);
                    out.push_back({id, false, [=](std::mt19937&) {
                                       if (rational) return from_witness(check_yangian_relation(RatShuffle(sys), i, j, r, s));
                                       return from_witness(check_loop_relation(TrigShuffle(sys), i, j, r, s));
                                   }});
                }
    // Serre: modes of the 1 - a_ij copies of i as a multiset
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || sys.a(i, j) == 0) continue;
            const int m = 1 - sys.a(i, j);
            std::vector<int> modes(static_cast<std::size_t>(m), cfg.smin);
            for (;;) {
                for (int s = cfg.smin; s <= cfg.smax; ++s) {
                    std::string id = "serre/i=" + std::to_string(i) + ",j=" + std::to_string(j) + "/r=" +
                                     ints_str(modes) + ",s=" + std::to_string(s);
                    out.push_back({id, false, [=](std::mt19937&) {
                                       if (rational)
                                           return from_witness(check_yangian_serre(RatShuffle(sys), i, j, modes, s));
                                       return from_witness(check_serre_relation(TrigShuffle(sys), i, j, modes, s));
                                   }});
                }
                // next nondecreasing tuple
                int p = m - 1;
                while (p >= 0 && modes[static_cast<std::size_t>(p)] == cfg.smax) --p;
                if (p < 0) break;
                const int v = modes[static_cast<std::size_t>(p)] + 1;
                for (int q = p; q < m; ++q) modes[static_cast<std::size_t>(q)] = v;
            }
        }
    return out;
}

// --------------------------------------------------------- closed forms

std::vector<Instance> psirv(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    const int n = R.sys().rank();
    for (std::size_t b = 0; b < R.size(); ++b) {
        std::vector<int> colors;
        for (int c = 1; c <= n; ++c)
            if (R[b].nu[static_cast<std::size_t>(c - 1)] > 0) colors.push_back(c);
        std::vector<int> parts(colors.size(), cfg.smin);
        for (;;) {
            std::vector<int> split(static_cast<std::size_t>(n), 0);
            for (std::size_t t = 0; t < colors.size(); ++t) split[static_cast<std::size_t>(colors[t] - 1)] = parts[t];
            for (int eps : {1, -1}) {
                std::string id = R.qualified_name(R[b]) + "/split=" + ints_str(split) + "/eps=" + (eps > 0 ? "+" : "-");
                const int root = static_cast<int>(b);
                out.push_back({id, false, [&R, root, split, eps](std::mt19937&) {
                                   TrigShuffle alg(R.sys());
                                   Psi<TrigKernel> psi(alg);
                                   auto spec = tilde_spec(R, root, split, eps);
                                   auto x = root_vector(R, spec);
                                   auto cf = closed_form(R, root, split, eps).element();
                                   Outcome o;
                                   o.replay = expr_str(x);
                                   if (!proportional(psi(x), cf)) {
                                       o.pass = false;
                                       o.witness = "image not proportional to the closed form over Q^x v^Z";
                                   }
                                   return o;
                               }});
            }
            std::size_t p = 0;
            while (p < parts.size() && parts[p] == cfg.smax) parts[p++] = cfg.smin;
            if (p == parts.size()) break;
            ++parts[p];
        }
    }
    return out;
}

std::vector<Instance> phirv(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    for (std::size_t b = 0; b < R.size(); ++b)
        for (int s = cfg.smin; s <= cfg.smax; ++s)
            for (int t = 0; t < cfg.samples; ++t) {
                const int root = static_cast<int>(b);
                std::string id = R.qualified_name(R[b]) + "/s=" + std::to_string(s) + "/sample=" + std::to_string(t);
                out.push_back({id, false, [&R, root, s](std::mt19937& rng) {
                                   TrigShuffle alg(R.sys());
                                   Psi<TrigKernel> psi(alg);
                                   auto x = root_vector(R, random_spec(R, root, s, rng));
                                   auto rep = verify_root_leading(R, psi(x), root, s);
                                   return Outcome{rep.ok, rep.witness, expr_str(x)};
                               }});
            }
    return out;
}

// ------------------------------------------------- vanishing and leading

TrigExpr tilde_plus(const Roots& R, int b, int s) { return tilde_root_vector(R, b, s, 1); }

std::vector<Instance> vanish(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    for (const auto& k : gradings_up_to(R.sys().rank(), cfg.max_k)) {
        const auto parts = kostant_partitions(R, k);
        for (const auto& h : pbwd_keys(R, k, cfg.smin, cfg.smax)) {
            const auto dh = h.deg(R.size());
            std::vector<KostantPartition> lower;
            for (const auto& d : parts)
                if (kp_less(d, dh)) lower.push_back(d);
            if (lower.empty()) continue;
            std::string id = "k=" + gr_str(k) + "/h=" + h.str(R);
            out.push_back({id, false, [&R, h, lower](std::mt19937&) {
                               TrigShuffle alg(R.sys());
                               Psi<TrigKernel> psi(alg);
                               auto F = psi(pbwd_monomial(h, [&](int b, int s) { return tilde_plus(R, b, s); }));
                               Outcome o;
                               for (const auto& d : lower) {
                                   auto g = phi_d(R, F, d).g;
                                   if (!g.is_zero()) {
                                       o.pass = false;
                                       o.witness = "phi_d for d=" + kp_name(R, d) + " is nonzero";
                                       break;
                                   }
                               }
                               o.replay = std::to_string(lower.size()) + " lower partitions";
                               return o;
                           }});
        }
    }
    return out;
}

// Every key of a degree class is compared with the first one; proportionality
// is transitive, so this covers all pairs.
std::vector<Instance> leading(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    for (const auto& k : gradings_up_to(R.sys().rank(), cfg.max_k)) {
        std::map<KostantPartition, std::vector<PbwdKey>> by_deg;
        for (const auto& h : pbwd_keys(R, k, cfg.smin, cfg.smax)) by_deg[h.deg(R.size())].push_back(h);
        for (const auto& [d, keys] : by_deg)
            for (const auto& h : keys) {
                const PbwdKey h0 = keys.front();
                std::string id = "k=" + gr_str(k) + "/h=" + h.str(R) + "/ref=" + h0.str(R);
                out.push_back({id, false, [&R, h0, h](std::mt19937&) {
                                   auto rep = verify_leading(R, h0, h, [&](int b, int s) { return tilde_plus(R, b, s); });
                                   return Outcome{rep.ok, rep.witness, ""};
                               }});
            }
    }
    return out;
}

// ------------------------------------------------------------------ dims

std::vector<Instance> dims(const SuiteConfig& cfg, const Roots& R, bool rational) {
    Grading k = cfg.k.empty() ? Grading(static_cast<std::size_t>(R.sys().rank()), 1) : cfg.k;
    std::vector<Instance> out;
    for (int deg = cfg.deg_lo; deg <= cfg.deg_hi; ++deg) {
        std::string id = "k=" + gr_str(k) + "/degree=" + std::to_string(deg);
        DimOptions opt;
        opt.exact = cfg.exact;
        out.push_back({id, false, [&R, k, deg, opt, rational](std::mt19937&) {
                           auto rows = rational ? dim_report_rational(R, k, deg, deg, opt) : dim_report(R, k, deg, deg, opt);
                           const auto& r = rows.at(0);
                           Outcome o;
                           o.pass = r.ok();
                           o.replay = "space=" + std::to_string(r.space_dim) + " pbwd=" + std::to_string(r.pbwd_count) +
                                      " rank=" + std::to_string(r.psi_rank) + " wheel_rank=" +
                                      std::to_string(r.wheel_rank) + " method=" + r.method;
                           o.witness = r.witness;
                           if (!o.pass && o.witness.empty()) o.witness = o.replay;
                           return o;
                       }});
    }
    return out;
}

// ------------------------------------------------------- integral forms

struct Item {
    std::string name;
    int height;
    std::function<TrigExpr()> make;
};

Outcome member(const Roots& R, bool lusztig, const std::vector<const Item*>& xs, const RationalV& scale) {
    TrigShuffle alg(R.sys());
    Psi<TrigKernel> psi(alg);
    std::vector<ShuffleElement> parts;
    std::string replay;
    for (const auto* x : xs) {
        auto e = x->make();
        replay += (replay.empty() ? "" : " * ") + expr_str(e);
        parts.push_back(psi(e));
    }
    auto F = psi.product(parts).scaled(scale);
    if (!scale.is_one()) replay = "(" + scale.str() + ")*[" + replay + "]";
    auto m = lusztig ? lusztig_member(R, F) : rtt_member(R, F);
    return {m.ok, m.witness, replay};
}

std::vector<Instance> integral(const SuiteConfig& cfg, const Roots& R, bool lusztig) {
    auto items = std::make_shared<std::vector<Item>>();
    for (std::size_t b = 0; b < R.size(); ++b)
        for (int s = cfg.smin; s <= cfg.smax; ++s) {
            const int root = static_cast<int>(b);
            const std::string base = R.qualified_name(R[b]) + ",s=" + std::to_string(s);
            if (lusztig) {
                for (int p = 1; p <= 2; ++p)
                    items->push_back({base + ",p=" + std::to_string(p), p * R[b].height,
                                      [&R, root, s, p] { return divided_power(R, root, s, p, 1); }});
            } else {
                items->push_back({base, R[b].height, [&R, root, s] { return rtt_root_vector(R, root, s, 1); }});
            }
        }
    std::vector<Instance> out;
    for (std::size_t a = 0; a < items->size(); ++a) {
        const Item* x = &(*items)[a];
        out.push_back({"single/" + x->name, false,
                       [&R, lusztig, x, items](std::mt19937&) { return member(R, lusztig, {x}, RationalV(1)); }});
    }
    for (std::size_t a = 0; a < items->size(); ++a)
        for (std::size_t c = 0; c < items->size(); ++c) {
            const Item* x = &(*items)[a];
            const Item* y = &(*items)[c];
            if (x->height + y->height > cfg.max_k) continue;
            out.push_back({"pair/" + x->name + "*" + y->name, false, [&R, lusztig, x, y, items](std::mt19937&) {
                               return member(R, lusztig, {x, y}, RationalV(1));
                           }});
        }
    // negative controls: drop one normalization and expect rejection
    for (std::size_t b = 0; b < R.size(); ++b) {
        const int root = static_cast<int>(b);
        const auto& beta = R[b];
        const std::string name = R.qualified_name(beta);
        if (lusztig) {
            // one more [2]_{v_beta} than the divided power E^2 / [2]!
            out.push_back({"control/" + name + "/extra [2]", true, [&R, root](std::mt19937&) {
                               Item it{"", 0, [&R, root] { return divided_power(R, root, 0, 2, 1); }};
                               const RationalV q(LaurentZ(1), quantum_int(2, R[static_cast<std::size_t>(root)].norm));
                               return member(R, true, {&it}, q);
                           }});
        } else {
            const bool last = beta.tag == RootTag::Last && R.sys().type() == 'C';
            out.push_back({"control/" + name + (last ? "/missing <2>" : "/missing <1>"), true,
                           [&R, root](std::mt19937&) {
                               Item it{"", 0, [&R, root] { return tilde_root_vector(R, root, 0, 1); }};
                               return member(R, false, {&it}, RationalV(1));
                           }});
            out.push_back({"control/" + name + "/square over [2]", true, [&R, root](std::mt19937&) {
                               Item it{"", 0, [&R, root] { return rtt_root_vector(R, root, 0, 1); }};
                               return member(R, false, {&it, &it}, RationalV(LaurentZ(1), quantum_int(2)));
                           }});
        }
    }
    return out;
}

// -------------------------------------------------------------- yangian

std::vector<Instance> yangian_closed(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    for (std::size_t b = 0; b < R.size(); ++b)
        for (int s = cfg.smin; s <= cfg.smax; ++s) {
            const int root = static_cast<int>(b);
            out.push_back({R.qualified_name(R[b]) + "/s=" + std::to_string(s), false, [&R, root, s](std::mt19937&) {
                               RatShuffle alg(R.sys());
                               Psi<RatKernel> psi(alg);
                               auto x = yangian_tilde(R, root, s);
                               Outcome o;
                               o.replay = expr_str(x);
                               if (!proportional_q(psi(x).f, yangian_closed_form(R, root, s))) {
                                   o.pass = false;
                                   o.witness = "image not proportional to the closed form over Q^x";
                               }
                               return o;
                           }});
        }
    return out;
}

std::vector<Instance> yangian_leading(const SuiteConfig& cfg, const Roots& R) {
    std::vector<Instance> out;
    for (std::size_t b = 0; b < R.size(); ++b)
        for (int s = cfg.smin; s <= cfg.smax; ++s)
            for (int t = 0; t < cfg.samples; ++t) {
                const int root = static_cast<int>(b);
                std::string id = R.qualified_name(R[b]) + "/s=" + std::to_string(s) + "/sample=" + std::to_string(t);
                out.push_back({id, false, [&R, root, s](std::mt19937& rng) {
                                   RatShuffle alg(R.sys());
                                   Psi<RatKernel> psi(alg);
                                   auto x = yangian_root_vector(R, random_yangian_spec(R, root, s, rng));
                                   auto m = verify_yangian_leading(R, psi(x), root, s);
                                   return Outcome{m.ok, m.witness, expr_str(x)};
                               }});
            }
    return out;
}

std::vector<Instance> yangian_integral(const SuiteConfig& cfg, const Roots& R) {
    struct YItem {
        std::string name;
        int height;
        YangExpr plain;
    };
    auto items = std::make_shared<std::vector<YItem>>();
    for (std::size_t b = 0; b < R.size(); ++b)
        for (int s = cfg.smin; s <= cfg.smax; ++s)
            items->push_back({R.qualified_name(R[b]) + ",s=" + std::to_string(s), R[b].height,
                              yangian_tilde(R, static_cast<int>(b), s)});
    // bar: scale each factor by h; integral: is_integral instead of is_good
    auto check = [&R](std::vector<YangExpr> xs, bool bar, bool integral) {
        RatShuffle alg(R.sys());
        Psi<RatKernel> psi(alg);
        std::vector<RationalShuffleElement> parts;
        std::string replay;
        for (auto& x : xs) {
            if (bar) x = yangian_bar(x);
            replay += (replay.empty() ? "" : " * ") + expr_str(x);
            parts.push_back(psi(x));
        }
        auto F = psi.product(parts);
        auto m = integral ? is_integral(R, F) : is_good(R, F);
        return Outcome{m.ok, m.witness, replay};
    };
    std::vector<Instance> out;
    for (std::size_t a = 0; a < items->size(); ++a) {
        const YItem* x = &(*items)[a];
        out.push_back({"good/" + x->name, false, [check, x, items](std::mt19937&) { return check({x->plain}, false, false); }});
        out.push_back({"integral/" + x->name, false, [check, x, items](std::mt19937&) { return check({x->plain}, true, true); }});
    }
    for (std::size_t a = 0; a < items->size(); ++a)
        for (std::size_t c = 0; c < items->size(); ++c) {
            const YItem* x = &(*items)[a];
            const YItem* y = &(*items)[c];
            if (x->height + y->height > cfg.max_k) continue;
            const std::string nm = x->name + "*" + y->name;
            out.push_back({"good/" + nm, false, [check, x, y, items](std::mt19937&) { return check({x->plain, y->plain}, false, false); }});
            out.push_back({"integral/" + nm, false, [check, x, y, items](std::mt19937&) { return check({x->plain, y->plain}, true, true); }});
        }
    // unscaled generators are good but not integral
    for (int i = 1; i <= R.sys().rank(); ++i)
        out.push_back({"control/y(" + std::to_string(i) + ",0) without h", true,
                       [check, i](std::mt19937&) { return check({FreeExpr<PolyH>::gen(i, 0)}, false, true); }});
    return out;
}

std::vector<Instance> build(const SuiteConfig& cfg, const Roots& R) {
    const auto& s = cfg.suite;
    if (s == "relations") return relations(cfg, false);
    if (s == "psirv") return psirv(cfg, R);
    if (s == "phirv") return phirv(cfg, R);
    if (s == "vanish") return vanish(cfg, R);
    if (s == "leading") return leading(cfg, R);
    if (s == "dims") return dims(cfg, R, false);
    if (s == "lusztig") return integral(cfg, R, true);
    if (s == "rtt") return integral(cfg, R, false);
    if (s == "yangian-relations") return relations(cfg, true);
    if (s == "yangian-psirv") return yangian_closed(cfg, R);
    if (s == "yangian-leading") return yangian_leading(cfg, R);
    if (s == "yangian-integral") return yangian_integral(cfg, R);
    if (s == "yangian-dims") return dims(cfg, R, true);
    throw ConfigError("unknown suite '" + s + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "relations", "psirv",          "phirv",         "vanish",          "leading",          "dims",
        "lusztig",   "rtt",            "yangian-relations", "yangian-psirv", "yangian-leading", "yangian-integral",
        "yangian-dims"};
    return names;
}

bool rational_suite(const std::string& name) { return name.rfind("yangian-", 0) == 0; }

int max_k_cap() {
    const char* env = std::getenv("SHUFFLE_FORGE_MAX_K");
    if (!env || !*env) return 6;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 64) throw ConfigError(std::string("bad SHUFFLE_FORGE_MAX_K '") + env + "'");
    return static_cast<int>(v);
}

void validate_config(const SuiteConfig& cfg) {
    const RootSystem sys(cfg.type, cfg.rank);  // validates type and rank
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw ConfigError("unknown suite '" + cfg.suite + "'");
    if (cfg.smin > cfg.smax) throw ConfigError("empty mode window");
    if (cfg.smin < -20 || cfg.smax > 20) throw ConfigError("mode window must lie in [-20, 20]");
    if (rational_suite(cfg.suite) && cfg.smin < 0) throw ConfigError("rational suites take modes >= 0");
    if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
    if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
    const int cap = max_k_cap();
    if (cfg.max_k < 1 || cfg.max_k > cap)
        throw ConfigError("max |k| " + std::to_string(cfg.max_k) + " outside [1, " + std::to_string(cap) + "]");
    if (!cfg.k.empty()) {
        if (static_cast<int>(cfg.k.size()) != cfg.rank) throw ConfigError("k must have one entry per color");
        for (int x : cfg.k)
            if (x < 0) throw ConfigError("k entries must be >= 0");
        if (total(cfg.k) == 0) throw ConfigError("k must be nonzero");
        if (total(cfg.k) > cap)
            throw ConfigError("|k| = " + std::to_string(total(cfg.k)) + " exceeds the cap " + std::to_string(cap));
    } else if (cfg.rank > cap && (cfg.suite == "dims" || cfg.suite == "yangian-dims")) {
        throw ConfigError("default k = (1,...,1) exceeds the cap " + std::to_string(cap));
    }
    if (cfg.deg_lo < 0 || cfg.deg_lo > cfg.deg_hi) throw ConfigError("bad degree range");
}

std::vector<Grading> gradings_up_to(int rank, int maxk) {
    std::vector<Grading> out;
    for (int t = 1; t <= maxk; ++t) {
        Grading k(static_cast<std::size_t>(rank), 0);
        std::function<void(int, int)> rec = [&](int c, int left) {
            if (c == rank - 1) {
                k[static_cast<std::size_t>(c)] = left;
                out.push_back(k);
                return;
            }
            for (int x = left; x >= 0; --x) {
                k[static_cast<std::size_t>(c)] = x;
                rec(c + 1, left - x);
            }
        };
        rec(0, t);
    }
    return out;
}

int Report::failed() const {
    int f = 0;
    for (const auto& r : records) f += r.pass ? 0 : 1;
    return f;
}

void Report::write_jsonl(std::ostream& os) const {
    using nlohmann::ordered_json;
    for (const auto& r : records) {
        ordered_json j;
        j["suite"] = r.suite;
        j["type"] = std::string(1, cfg.type);
        j["rank"] = cfg.rank;
        j["tag"] = r.tag;
        j["id"] = r.id;
        j["status"] = r.pass ? "pass" : "fail";
        if (r.control) j["control"] = true;
        j["witness"] = r.witness;
        if (!r.replay.empty()) j["replay"] = r.replay;
        if (cfg.timing) j["wall_ms"] = std::round(r.wall_ms * 1000) / 1000;
        os << j.dump() << '\n';
    }
    ordered_json s;
    s["summary"] = true;
    s["suite"] = cfg.suite;
    s["type"] = std::string(1, cfg.type);
    s["rank"] = cfg.rank;
    s["tag"] = rational_suite(cfg.suite) ? "rational" : "trigonometric";
    s["seed"] = cfg.seed;
    s["window"] = {cfg.smin, cfg.smax};
    s["max_k"] = cfg.max_k;
    s["samples"] = cfg.samples;
    s["total"] = records.size();
    s["passed"] = static_cast<int>(records.size()) - failed();
    s["failed"] = failed();
    s["status"] = all_pass() ? "pass" : "fail";
    if (cfg.timing) s["wall_ms"] = std::round(wall_ms * 1000) / 1000;
    os << s.dump() << '\n';
}

Report run_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    const auto t0 = Clock::now();
    const Roots R(RootSystem(cfg.type, cfg.rank));
    const auto insts = build(cfg, R);
    Report rep;
    rep.cfg = cfg;
    rep.records.resize(insts.size());
    const std::string tag = rational_suite(cfg.suite) ? "rational" : "trigonometric";
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < insts.size();) {
            const auto& in = insts[i];
            // per-instance stream: independent of scheduling
            std::seed_seq sq{static_cast<unsigned>(cfg.seed), static_cast<unsigned>(cfg.seed >> 32),
                             static_cast<unsigned>(i)};
            std::mt19937 rng(sq);
            auto& rec = rep.records[i];
            rec.suite = cfg.suite;
            rec.type = std::string(1, cfg.type);
            rec.tag = tag;
            rec.id = in.id;
            rec.control = in.control;
            const auto t1 = Clock::now();
            Outcome o;
            try {
                o = in.run(rng);
            } catch (const std::exception& e) {
                o.pass = false;
                o.witness = std::string("exception: ") + e.what();
            }
            rec.wall_ms = ms_since(t1);
            rec.replay = o.replay;
            if (in.control) {
                rec.pass = !o.pass;
                rec.witness = o.pass ? "control was accepted" : o.witness;
            } else {
                rec.pass = o.pass;
                rec.witness = o.witness;
            }
        }
    };
    const int nj = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(insts.size(), 1)));
    std::vector<std::thread> pool;
    for (int j = 1; j < nj; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    rep.wall_ms = ms_since(t0);
    return rep;
}

}  // namespace sf
