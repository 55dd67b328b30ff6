#pragma once

#include "shuffle_forge/roots.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sf {

struct SuiteConfig {
    char type = 'C';
    int rank = 2;
    std::string suite;
    int smin = -1, smax = 1;  // mode window
    int max_k = 4;            // |k| bound for suites that enumerate gradings or products
    unsigned long seed = 7;
    int jobs = 1;
    int samples = 20;         // random lambda / decomposition choices per (root, s)
    Grading k;                // dims suites; empty means (1,...,1)
    int deg_lo = 0, deg_hi = 2;
    bool exact = false;       // dims: Bareiss for every rank
    bool timing = true;       // wall times in the records
};

struct CheckRecord {
    std::string suite, type, tag, id;
    bool pass = true;
    bool control = false;  // negative control: passes when the input is rejected
    std::string witness;
    std::string replay;    // expression or random choices needed to rerun the instance
    double wall_ms = 0;
};

struct Report {
    SuiteConfig cfg;
    std::vector<CheckRecord> records;
    double wall_ms = 0;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    // JSON lines, one per record, summary record last
    void write_jsonl(std::ostream& os) const;
};

const std::vector<std::string>& suite_names();
bool rational_suite(const std::string& name);
// Environment cap on |k| (SHUFFLE_FORGE_MAX_K, default 6).
int max_k_cap();
void validate_config(const SuiteConfig& cfg);  // throws ConfigError
Report run_suite(const SuiteConfig& cfg);

// All nonzero gradings with |k| <= maxk, by |k| then lexicographically.
std::vector<Grading> gradings_up_to(int rank, int maxk);

}  // namespace sf
