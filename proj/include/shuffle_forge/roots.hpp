#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sf {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree vector: k[c-1] is the multiplicity of color c.
using Grading = std::vector<int>;

class RootSystem {
public:
    RootSystem(char type, int rank);

    char type() const { return type_; }
    int rank() const { return n_; }
    // colors are 1..n
    int a(int i, int j) const { return a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    int d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
    // (alpha_i, alpha_j) = d_i a_ij
    int pairing(int i, int j) const { return d(i) * a(i, j); }
    int pairing(const Grading& x, const Grading& y) const;
    std::string name() const { return std::string(1, type_) + std::to_string(n_); }

private:
    char type_;
    int n_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;
};

enum class RootTag {
    Interval,   // [i,j] with j below the branch letter, including simple [i]
    ToEnd,      // [i,n]
    Turn,       // [i,n,j]
    Double,     // [i,n,i], type C only
    Last        // [n]
};

struct PositiveRoot {
    int index = 0;  // position in the convex order
    RootTag tag = RootTag::Interval;
    int i = 0, j = 0;
    std::vector<int> word;
    Grading nu;
    int height = 0;
    int norm = 1;  // (beta,beta)/2, so v_beta = v^norm
    std::string label;  // "[1,3,2]"
};

class Roots {
public:
    explicit Roots(const RootSystem& sys);

    const RootSystem& sys() const { return sys_; }
    const std::vector<PositiveRoot>& all() const { return roots_; }
    const PositiveRoot& operator[](std::size_t k) const { return roots_[k]; }
    std::size_t size() const { return roots_.size(); }
    // Index of the root with the given coefficient vector, or -1.
    int find(const Grading& nu) const;
    int find_label(const std::string& label) const;
    std::string qualified_name(const PositiveRoot& b) const { return sys_.name() + ":" + b.label; }

private:
    RootSystem sys_;
    std::vector<PositiveRoot> roots_;
    std::map<Grading, int> by_nu_;
};

// Positive roots generated from the Cartan matrix alone (root strings),
// used as an independent check of the Lyndon-word listing.
std::vector<Grading> brute_force_roots(const RootSystem& sys);

bool is_lyndon(const std::vector<int>& w);

// d[b] = multiplicity of root index b.
using KostantPartition = std::vector<int>;

// All partitions of k, ascending in the order comparing d_gamma at the first
// root where two partitions differ.
std::vector<KostantPartition> kostant_partitions(const Roots& roots, const Grading& k);
bool kp_less(const KostantPartition& a, const KostantPartition& b);
std::string kp_name(const Roots& roots, const KostantPartition& d);

// A PBWD key: sorted list of ((root index, mode), multiplicity).
struct PbwdKey {
    std::vector<std::pair<std::pair<int, int>, int>> h;
    KostantPartition deg(std::size_t nroots) const;
    Grading gr(const Roots& roots) const;
    int total_mode() const;
    // modes of root b, with repetition, ascending
    std::vector<int> modes_of(int b) const;
    std::string str(const Roots& roots) const;
};

std::vector<PbwdKey> pbwd_keys_for(const Roots& roots, const KostantPartition& d, int smin, int smax);
std::vector<PbwdKey> pbwd_keys(const Roots& roots, const Grading& k, int smin, int smax);

int total(const Grading& k);

}  // namespace sf
