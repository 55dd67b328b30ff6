#pragma once

// Packed integer polynomials used by the coset star product.  A monomial in
// up to 16 slots (exponents biased into one byte each) is a 128-bit key, so
// that shifting by a monomial is integer addition and preserves key order.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sf::packed {

using Key = unsigned __int128;
using Coef = __int128;

constexpr int kSlots = 16;
constexpr int kBias = 128;

// Thrown when an exponent leaves its byte or a coefficient leaves 128 bits;
// callers fall back to the generic kernel.
struct Overflow : std::runtime_error {
    Overflow() : std::runtime_error("packed kernel overflow") {}
};

struct Term {
    Key k;
    Coef c;
};

struct Poly {
    std::vector<Term> t;  // sorted by key, coefficients nonzero
    std::array<int, kSlots> lo{}, hi{};  // conservative exponent bounds
};

Key encode(const int* e, int n);  // slots n.. get exponent 0
void decode(Key k, int* e, int n);
Key shift_of(int slot, int delta);  // additive key for multiplying by slot^delta

Coef to_coef(const mpz_class& z);
mpz_class from_coef(Coef c);

// Builds a poly from unsorted terms, combining duplicates.
Poly from_terms(std::vector<Term> t);

// p * sum_j c_j m_j for a short list of monomials m_j (given as exponent
// vectors over n slots).
Poly mul_small(const Poly& p, const std::vector<std::pair<std::vector<int>, Coef>>& f, int n);
Poly mul(const Poly& a, const Poly& b);
Poly relabel(const Poly& p, const std::vector<int>& perm);  // slot s -> perm[s]
void add_into(Poly& acc, const Poly& p, bool negate);
// Exact division by (x_a - x_b); returns false when not divisible.
bool divide_difference(Poly& p, int a, int b);

}  // namespace sf::packed
