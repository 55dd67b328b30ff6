#pragma once

#include "shuffle_forge/linalg.hpp"
#include "shuffle_forge/shuffle.hpp"

namespace sf {

// Degree slice of the subalgebra generated by modes >= 0.  Its shuffle image
// in total degree delta consists of symmetric polynomial numerators of degree
// delta + #poles whose monomials have, on every subset T of the variables,
// degree >= the number of pole pairs inside T (F stays regular when the
// variables of T go to 0 together), and which satisfy the wheel conditions.

// Support condition above for one exponent vector.
bool regular_support(const RootSystem& sys, const Grading& k, const Exp& e);
int pole_count(const RootSystem& sys, const Grading& k);

struct DimOptions {
    bool exact = false;  // Bareiss for every rank instead of the modular certificate
    unsigned long prime = kRankPrime;
    unsigned long point = kRankPoint;
};

struct DimRow {
    int degree = 0;
    int orbits = 0;       // symmetric monomial orbits passing the support condition
    int wheel_rank = 0;   // rank of the wheel constraints on them
    int space_dim = 0;    // orbits - wheel_rank
    int pbwd_count = 0;   // PBWD keys with modes >= 0 and total mode = degree
    int psi_rank = 0;     // rank of the Psi(E_h)
    bool psi_in_space = true;
    std::string method;   // "modular" (certified bound) or "bareiss"
    std::string witness;
    bool independent() const { return psi_rank == pbwd_count; }
    bool ok() const { return psi_in_space && independent() && space_dim == pbwd_count; }
};

// Trigonometric algebra, tilde root vectors with eps = +.
std::vector<DimRow> dim_report(const Roots& roots, const Grading& k, int deg_lo, int deg_hi,
                               const DimOptions& opt = {});
// Rational algebra, plain commutator root vectors.
std::vector<DimRow> dim_report_rational(const Roots& roots, const Grading& k, int deg_lo, int deg_hi,
                                        const DimOptions& opt = {});

}  // namespace sf
