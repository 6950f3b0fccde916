#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madlie/chevalley.hpp"

namespace madlie {

// Element of the adjoint group over R.  The adjoint matrix is the ground
// truth for the action; the defining matrix (single type-A component only)
// rides along with determinant exactly 1; the word is display metadata and
// may be empty.
struct GroupElement {
  ChevalleyBasis::Ptr basis;
  RingSpec::Ptr spec;
  RingMatrix adjoint;
  std::optional<RingMatrix> defining;
  std::vector<std::string> word;
};

GroupElement identity_element(ChevalleyBasis::Ptr basis, RingSpec::Ptr spec);

// exp(v_alpha tensor t): unipotent one-parameter element.
GroupElement root_elt(const ChevalleyBasis::Ptr& basis, int root_idx,
                      const RingElement& t);

// h_i(u) for a unit u: fixes the Cartan part, scales v_beta by
// u^<beta, alpha_i^vee>.
GroupElement torus_elt(const ChevalleyBasis::Ptr& basis, int simple_i,
                       const RingElement& u);

// exp(ad x) for x with nilpotent ad, wrapped as a group element.
GroupElement exp_element(const LieElement& x);

GroupElement mul(const GroupElement& a, const GroupElement& b);
LieElement group_act(const GroupElement& g, const LieElement& x);

// Type A bridges between g(R) and traceless (l+1) x (l+1) matrices.
RingMatrix defining_matrix_of(const LieElement& x);
LieElement lie_from_defining(const ChevalleyBasis::Ptr& basis, const RingMatrix& m);

// The group element conjugating by a determinant-1 matrix in the defining
// representation.
GroupElement from_defining(const ChevalleyBasis::Ptr& basis, RingMatrix m);

}  // namespace madlie
