#include "shuffle_forge/dims.hpp"
#include "shuffle_forge/parse.hpp"
#include "shuffle_forge/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    const auto colon = s.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
        int lo = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        int hi = std::stoi(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ConfigError(std::string("bad ") + what + " '" + s + "', expected lo:hi");
    }
}

Grading parse_grading(const std::string& s) {
    Grading k;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            k.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ConfigError("bad k '" + s + "', expected comma-separated integers");
        }
    }
    return k;
}

char parse_type(const std::string& t) {
    if (t == "C" || t == "c") return 'C';
    if (t == "D" || t == "d") return 'D';
    throw ConfigError("type must be C or D, got '" + t + "'");
}

template <class E>
int max_color(const E& e) {
    int m = e->color;
    for (const auto& kid : e->kids) m = std::max(m, max_color(kid));
    return m;
}

template <class K>
int show(const ShuffleAlgebraT<K>& alg, const Element<K>& F, const std::string& tree, const std::string& what) {
    const auto names = Layout(F.k).names();
    auto grading = [&] {
        std::string s;
        for (std::size_t i = 0; i < F.k.size(); ++i) s += (i ? "," : "") + std::to_string(F.k[i]);
        return s;
    };
    if (what == "numerator") {
        std::cout << F.f.str(names) << '\n';
    } else if (what == "denominator") {
        std::cout << alg.denominator(F.k).str(names) << '\n';
    } else if (what == "grading") {
        std::cout << grading() << '\n';
    } else if (what == "tree") {
        std::cout << tree << '\n';
    } else if (what == "wheel") {
        auto w = alg.wheel_check(F);
        std::cout << (w.ok ? "ok" : "violated: " + w.witness) << '\n';
        return w.ok ? 0 : kExitFail;
    } else {  // json
        nlohmann::ordered_json j;
        j["expr"] = tree;
        j["type"] = alg.sys().name();
        j["grading"] = F.k;
        j["numerator"] = F.f.str(names);
        j["denominator"] = alg.denominator(F.k).str(names);
        j["terms"] = F.f.size();
        std::cout << j.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact shuffle-algebra checks for quantum loop algebras and Yangians of types C and D"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string type = "C", window, out_path, k_str, deg = "0:2";
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON-lines report");
    verify->add_option("--type", type, "C or D")->default_val("C");
    verify->add_option("--rank", cfg.rank, "rank n")->default_val(2);
    verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--window", window, "mode window lo:hi (default -1:1, rational 0:2)");
    verify->add_option("--max-k", cfg.max_k, "bound on |k| for enumerated gradings and products")->default_val(4);
    verify->add_option("--seed", cfg.seed, "random seed")->default_val(7);
    verify->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1);
    verify->add_option("--samples", cfg.samples, "random choices per root and mode")->default_val(20);
    verify->add_option("--k", k_str, "grading for the dims suites, e.g. 2,1");
    verify->add_option("--deg", deg, "degree range lo:hi for the dims suites")->default_val("0:2");
    verify->add_flag("--exact", cfg.exact, "dims: fraction-free elimination for every rank");
    verify->add_flag("--no-timing", no_timing, "omit wall times so reports compare byte for byte");
    verify->add_option("--out", out_path, "report path (default stdout)");

    std::string dtype = "C", dk, ddeg = "0:2";
    int drank = 2;
    bool dexact = false, drational = false, djson = false;
    auto* dimc = app.add_subcommand("dims", "wheel-space dimension against PBWD count per degree");
    dimc->add_option("--type", dtype, "C or D")->default_val("C");
    dimc->add_option("--rank", drank, "rank n")->default_val(2);
    dimc->add_option("--k", dk, "grading, e.g. 2,1")->required();
    dimc->add_option("--deg", ddeg, "degree range lo:hi")->default_val("0:2");
    dimc->add_flag("--exact", dexact, "fraction-free elimination for every rank");
    dimc->add_flag("--rational", drational, "rational (Yangian) algebra");
    dimc->add_flag("--json", djson, "JSON lines instead of a table");

    std::string expr, etype = "C", what = "numerator";
    int erank = 0;
    auto* evalc = app.add_subcommand("eval", "evaluate a DSL expression in the shuffle algebra");
    evalc->add_option("--expr", expr, "e.g. comm[v](e(1,0),e(2,0)); y(i,r) leaves for the rational algebra")->required();
    evalc->add_option("--type", etype, "C or D")->default_val("C");
    evalc->add_option("--rank", erank, "rank n (default: smallest valid rank covering the colors)");
    evalc->add_option("--show", what, "numerator, denominator, grading, wheel, tree or json")
        ->default_val("numerator")
        ->check(CLI::IsMember({"numerator", "denominator", "grading", "wheel", "tree", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (*verify) {
            cfg.type = parse_type(type);
            if (window.empty()) window = rational_suite(cfg.suite) ? "0:2" : "-1:1";
            std::tie(cfg.smin, cfg.smax) = parse_range(window, "window");
            std::tie(cfg.deg_lo, cfg.deg_hi) = parse_range(deg, "degree range");
            if (!k_str.empty()) cfg.k = parse_grading(k_str);
            cfg.timing = !no_timing;
            validate_config(cfg);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw ConfigError("cannot open '" + out_path + "' for writing");
            }
            const Report rep = run_suite(cfg);
            rep.write_jsonl(out_path.empty() ? std::cout : file);
            std::cerr << cfg.suite << " " << cfg.type << cfg.rank << ": " << rep.records.size() - rep.failed() << "/"
                      << rep.records.size() << " pass\n";
            return rep.all_pass() ? 0 : kExitFail;
        }
        if (*dimc) {
            const Roots R(RootSystem(parse_type(dtype), drank));
            const Grading k = parse_grading(dk);
            const auto [lo, hi] = parse_range(ddeg, "degree range");
            if (lo < 0 || lo > hi) throw ConfigError("bad degree range");
            if (static_cast<int>(k.size()) != drank) throw ConfigError("k must have one entry per color");
            for (int x : k)
                if (x < 0) throw ConfigError("k entries must be >= 0");
            if (total(k) == 0) throw ConfigError("k must be nonzero");
            if (total(k) > max_k_cap())
                throw ConfigError("|k| = " + std::to_string(total(k)) + " exceeds SHUFFLE_FORGE_MAX_K = " +
                                  std::to_string(max_k_cap()));
            DimOptions opt;
            opt.exact = dexact;
            const auto rows = drational ? dim_report_rational(R, k, lo, hi, opt) : dim_report(R, k, lo, hi, opt);
            bool ok = true;
            if (!djson)
                std::cout << "degree  orbits  wheel_rank  space_dim  pbwd_count  psi_rank  method    verdict\n";
            for (const auto& r : rows) {
                ok = ok && r.ok();
                if (djson) {
                    nlohmann::ordered_json j;
                    j["type"] = R.sys().name();
                    j["k"] = k;
                    j["tag"] = drational ? "rational" : "trigonometric";
                    j["degree"] = r.degree;
                    j["orbits"] = r.orbits;
                    j["wheel_rank"] = r.wheel_rank;
                    j["space_dim"] = r.space_dim;
                    j["pbwd_count"] = r.pbwd_count;
                    j["psi_rank"] = r.psi_rank;
                    j["method"] = r.method;
                    j["status"] = r.ok() ? "pass" : "fail";
                    j["witness"] = r.witness;
                    std::cout << j.dump() << '\n';
                } else {
                    std::printf("%6d  %6d  %10d  %9d  %10d  %8d  %-8s  %s\n", r.degree, r.orbits, r.wheel_rank,
                                r.space_dim, r.pbwd_count, r.psi_rank, r.method.c_str(),
                                r.ok() ? "equal, independent" : ("FAIL " + r.witness).c_str());
                }
            }
            return ok ? 0 : kExitFail;
        }
        // eval
        const char t = parse_type(etype);
        const bool rational = expr.find("y(") != std::string::npos;
        auto run = [&](auto e, auto tag) {
            using K = decltype(tag);
            int n = erank;
            if (n == 0) n = std::max(max_color(e), t == 'C' ? 2 : 4);
            ShuffleAlgebraT<K> alg{RootSystem(t, n)};
            if (max_color(e) > n) throw ConfigError("color " + std::to_string(max_color(e)) + " exceeds rank");
            Psi<K> psi(alg);
            auto F = psi(e);
            if (total(F.k) > max_k_cap()) throw ConfigError("|k| exceeds SHUFFLE_FORGE_MAX_K");
            return show(alg, F, expr_str(e), what);
        };
        if (rational) return run(parse_yang_expr(expr), RatKernel{});
        return run(parse_expr(expr), TrigKernel{});
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
