#pragma once

#include <string>
#include <vector>

#include "madlie/rational.hpp"

namespace madlie {

// One irreducible factor of a Cartan matrix.  vertices[k] is the input index
// of the k-th node in the standard (Bourbaki) numbering for that letter, so
// a[vertices[i]][vertices[j]] equals the canonical matrix entry (i, j).
struct CartanComponent {
  char letter = '?';
  int rank = 0;
  std::vector<int> vertices;
};

// Integer Cartan matrix of finite type, a[i][j] = <alpha_j, alpha_i^vee>.
// Construction validates the axioms (diagonal 2, off-diagonal <= 0, zero
// symmetry) and finite type: a symmetrizer d with d_i a_ij = d_j a_ji must
// exist and make diag(d) * a positive definite.
class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  // Supported: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
  static CartanMatrix of_type(char letter, int rank);

  int rank() const { return static_cast<int>(a_.size()); }
  int at(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }

  // Positive integers, coprime within each component; d_i is (alpha_i,
  // alpha_i)/2 in the normalization that makes short roots length sqrt(2).
  const std::vector<Integer>& symmetrizer() const { return d_; }

  // Irreducible factors, sorted by smallest input index.
  const std::vector<CartanComponent>& components() const { return comps_; }

  // "A2", "B3xA1", ...; the B2 = C2 coincidence is reported as "B2".
  std::string type_name() const;

 private:
  void classify();

  std::vector<std::vector<int>> a_;
  std::vector<Integer> d_;
  std::vector<CartanComponent> comps_;
};

}  // namespace madlie
