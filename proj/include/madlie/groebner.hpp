#pragma once

#include <optional>
#include <vector>

#include "madlie/ring.hpp"

namespace madlie {

// All functions here operate on polynomial-kind elements (no negative
// exponents, no relations); quotient-ring callers lift to the twin first.

struct DivisionResult {
    RingElement remainder;
    std::vector<RingElement> quotients;  // input = sum quotients[i]*divisors[i] + remainder
};

// Multivariate division: no remainder term is divisible by any divisor's
// leading monomial.
DivisionResult divide(const RingElement& f, const std::vector<RingElement>& divisors);

// Remainder only (cheaper).
RingElement reduce(const RingElement& f, const std::vector<RingElement>& divisors);

// Reduced Groebner basis, monic, sorted by leading monomial ascending.
// Deterministic for fixed input and order.  Empty input (or all-zero) gives
// the empty basis.
std::vector<RingElement> groebner_basis(const std::vector<RingElement>& gens);

// --- Free-module layer -------------------------------------------------
//
// Vectors over a polynomial ring, with position-over-term order (position 0
// dominant).  Used for syzygies, module membership and kernels over
// quotient rings.

using VecPoly = std::vector<RingElement>;  // fixed length = #positions

struct ModuleLead {
    int pos = -1;  // -1 for the zero vector
    Mono m;
    Rational c;
};

ModuleLead module_lead(const VecPoly& v);

bool vec_is_zero(const VecPoly& v);
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_scale(const VecPoly& a, const Rational& c);
// a - (c * x^m) * b
VecPoly vec_sub_mul(const VecPoly& a, const Rational& c, const Mono& m, const VecPoly& b);

// Full normal form of v against basis (every position, every term).
VecPoly module_reduce(const VecPoly& v, const std::vector<VecPoly>& basis);

// Buchberger for submodules of a free module, position-over-term order.
// Output is inter-reduced, monic, deterministically sorted.
std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens, const Limits& limits);

// Membership of v in the submodule spanned by gens (+ ideal multiples of
// the unit vectors when the ambient ring is a quotient: callers append
// those to gens themselves).  When inside, coeffs[i] gives the combination
// v = sum coeffs[i] * gens[i]  (modulo the appended ideal part).
struct MembershipResult {
    bool inside = false;
    std::vector<RingElement> coeffs;
};

// Syzygy/membership workspace: Groebner basis of the graph module
// {(g_i, e_i)} + {(extra_j, 0)}, position-over-term with the first block
// dominant.  'extras' typically holds relation multiples g*e_k.
class ModuleWorkspace {
  public:
    ModuleWorkspace(std::vector<VecPoly> gens, std::vector<VecPoly> extras, int ambient_rank,
                    const Limits& limits);

    MembershipResult member(const VecPoly& v) const;

    // Generators of the syzygy module of 'gens' modulo the extras: vectors
    // s with sum s_i gens_i in span(extras).
    std::vector<VecPoly> syzygies() const;

    int ambient_rank() const { return rank_; }
    int ngens() const { return ngens_; }

  private:
    int rank_;
    int ngens_;
    std::vector<VecPoly> basis_;  // augmented: length rank_ + ngens_
};

}  // namespace madlie
