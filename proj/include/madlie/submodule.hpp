#pragma once

#include <optional>
#include <vector>

#include "madlie/matrix.hpp"

namespace madlie {

// Finitely generated submodule of R^ambient_rank, presented by generators.
// Generators produced by module_kernel are irredundant: none lies in the
// span of the others.
struct Submodule {
    RingSpec::Ptr spec;
    int ambient_rank = 0;
    std::vector<std::vector<RingElement>> generators;
};

// Kernel of m acting on column vectors: {v : m v = 0}.
//  - univariate laurent: Smith normal form path; the result is free and the
//    generators are a basis.
//  - polynomial/quotient: syzygy path through module Groebner bases.
//  - multivariate laurent: substitution t_i -> pair (t_i, s_i), t_i s_i = 1,
//    then the quotient path.
// 'free_basis' is set on the PID path.
struct KernelResult {
    Submodule module;
    bool free_basis = false;
};

KernelResult module_kernel(const RingMatrix& m);

// Is v in the span of gens over the ring (relations included)?  When yes,
// combination[i] gives v = sum combination[i]*gens[i] modulo relations.
struct SpanMembership {
    bool inside = false;
    std::vector<RingElement> combination;
};

SpanMembership in_span(const std::vector<std::vector<RingElement>>& gens,
                       const std::vector<RingElement>& v, const RingSpec::Ptr& spec,
                       int ambient_rank);

// Minimal number of generators among subsets of s.generators, certified:
// every discarded generator is exhibited as a combination of the kept ones,
// and each kept generator fails membership in the span of the other kept
// ones.
struct MinGenCertificate {
    int min_count = 0;
    std::vector<int> kept;  // indices into s.generators
    struct Discarded {
        int index;
        std::vector<RingElement> combination;  // over kept, in order
    };
    std::vector<Discarded> discarded;
};

MinGenCertificate min_generators(const Submodule& s);

// Q-dimension of the span of the generators evaluated at the designated
// rational point (the fibre dimension; equals the rank for a projective
// module over a connected reduced base).
int fibre_rank(const Submodule& s, const std::map<std::string, Rational>& point);

}  // namespace madlie
