#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madlie/cartan.hpp"
#include "madlie/qlinalg.hpp"
#include "madlie/rational.hpp"
#include "madlie/ring.hpp"

namespace madlie {

// Integer coordinates of a root in the simple-root basis.
using RootCoords = std::vector<int>;

// All roots of the finite system attached to a Cartan matrix.  Indices
// [0, num_positive) are the positive roots, sorted by height and then by
// descending coordinate order (so the simple roots come first, in order);
// index num_positive + k is the negative of index k.
//
// Elements of the Cartan subalgebra appear in two coordinate systems:
//   coroot coords c: h = sum_i c_i alpha_i^vee (the Chevalley h-basis);
//   coweight coords w: w_i = <alpha_i, h>, so pairing(root, w) = m . w.
// They are related by w = A^T c.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }

  const RootCoords& root(int idx) const { return roots_.at(idx); }
  int root_index(const RootCoords& m) const;  // -1 when m is not a root
  bool is_positive(int idx) const { return idx < num_positive(); }
  int negative_of(int idx) const;
  int height(int idx) const;  // signed coordinate sum
  int simple_root_index(int i) const { return simple_index_.at(i); }
  std::optional<int> sum_index(int i, int j) const;

  // <root, alpha_i^vee> for each i; row i of the Cartan matrix dotted with m.
  std::vector<int> coroot_pairings(int idx) const;
  int reflect(int idx, int i) const;  // index of s_{alpha_i}(root)

  Integer d_of_root(int idx) const;  // (alpha, alpha)/2, symmetrizer scale
  // alpha^vee in the simple-coroot basis; entries m_i d_i / d_alpha.
  std::vector<Integer> coroot_coords(int idx) const;

  std::vector<Rational> coweight_coords(const std::vector<Rational>& coroot_coords) const;
  std::vector<RingElement> coweight_coords(const std::vector<RingElement>& coroot_coords) const;
  // omega_i^vee in coroot coordinates: row i of the inverse Cartan matrix.
  // Its coweight coordinates are the i-th unit vector.
  std::vector<Rational> fundamental_coweight(int i) const;

  Rational pairing(int idx, const std::vector<Rational>& coweight) const;
  RingElement pairing(int idx, const std::vector<RingElement>& coweight) const;

  // "alpha1", "alpha1+2*alpha2", "-alpha1-alpha2".
  std::string root_label(int idx) const;
  int parse_root_label(const std::string& label) const;

 private:
  CartanMatrix cartan_;
  std::vector<RootCoords> roots_;
  std::map<RootCoords, int> index_;
  std::vector<int> simple_index_;
  QMat cartan_inverse_;
};

// Levi-type data attached to a semisimple element: the roots vanishing on
// it, and a base of that subsystem.
struct SubsystemData {
  std::vector<int> zero_set;  // root indices, ascending; closed under negation
  std::vector<int> base;      // indices of the indecomposable positive elements
  bool base_is_simple = true; // every base element is a simple root
  std::vector<int> I;         // 1-based simple indices, filled when base_is_simple
};

// zero_set = { alpha : <alpha, w> = 0 } for w in coweight coordinates;
// base is its set of indecomposable positive elements.  Every element of
// zero_set is a nonnegative or nonpositive integer combination of base.
SubsystemData subsystem_base(const RootSystem& rs, const std::vector<Rational>& coweight);

}  // namespace madlie
