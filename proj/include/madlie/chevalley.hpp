#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "madlie/matrix.hpp"
#include "madlie/rootsystem.hpp"

namespace madlie {

// Basis of the split semisimple Lie algebra attached to a Cartan matrix:
// the simple coroots h_1..h_l, then one vector v_alpha per root in root
// index order.  Structure constants are integers, fixed by N = p+1 > 0 on
// extraspecial pairs; the whole table is certified by an exhaustive Jacobi
// check at construction, and for a single type-A component the defining
// (l+1)-dimensional representation is built and certified as well.
class ChevalleyBasis {
 public:
  using Ptr = std::shared_ptr<const ChevalleyBasis>;

  // rank_limit guards the cost of the construction-time certification.
  static Ptr build(CartanMatrix cartan, int rank_limit = 4);

  const RootSystem& roots() const { return rs_; }
  const CartanMatrix& cartan() const { return rs_.cartan(); }
  int rank() const { return rs_.rank(); }
  int dim() const { return rank() + rs_.num_roots(); }

  int h_index(int i) const { return i; }
  int v_index(int root_idx) const { return rank() + root_idx; }
  bool is_root_vector(int bi) const { return bi >= rank(); }
  int root_of(int bi) const { return bi - rank(); }

  // N_{a,b}; requires that the coordinate sum of the two roots is a root.
  Integer structure_n(int root_a, int root_b) const;

  // [b_i, b_j] as a sparse list of (basis index, coefficient).
  const std::vector<std::pair<int, Rational>>& bracket_table(int bi, int bj) const;

  // "h1", "e(alpha1)", "f(alpha1+alpha2)".
  std::string basis_label(int bi) const;

  // Defining representation for a single A_l component: matrices of each
  // basis element on the (l+1)-dimensional column space.  Empty otherwise.
  bool has_defining_rep() const { return !rho_.empty(); }
  int defining_dim() const { return static_cast<int>(rho_.empty() ? 0 : rho_[0].size()); }
  const std::vector<QMat>& defining_rep() const;
  // Position and value of the single nonzero entry of rho(v_alpha).
  struct EntrySlot {
    int row, col;
    Rational value;
  };
  const EntrySlot& defining_slot(int root_idx) const;

 private:
  explicit ChevalleyBasis(CartanMatrix cartan) : rs_(std::move(cartan)) {}
  void fill_structure_constants();
  void fill_bracket_table();
  void verify_jacobi() const;
  void build_defining_rep();

  RootSystem rs_;
  std::map<std::pair<int, int>, Integer> n_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table_;
  std::vector<QMat> rho_;
  std::vector<EntrySlot> slots_;
};

// Element of g(R) in a fixed Chevalley basis; the h-part is stored in the
// simple-coroot basis.
class LieElement {
 public:
  LieElement(ChevalleyBasis::Ptr basis, RingSpec::Ptr spec);

  const ChevalleyBasis::Ptr& basis() const { return basis_; }
  const RingSpec::Ptr& spec() const { return spec_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  const RingElement& coeff(int bi) const { return coords_.at(bi); }
  void set_coeff(int bi, RingElement c);
  const RingElement& h_coeff(int i) const { return coords_.at(i); }
  const RingElement& root_coeff(int root_idx) const;

  bool is_zero() const;
  bool operator==(const LieElement& o) const;
  bool operator!=(const LieElement& o) const { return !(*this == o); }

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  LieElement scaled(const RingElement& c) const;
  LieElement scaled(const Rational& c) const;

  std::string to_string() const;

 private:
  void check_compatible(const LieElement& o) const;

  ChevalleyBasis::Ptr basis_;
  RingSpec::Ptr spec_;
  std::vector<RingElement> coords_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

// Matrix of ad(x) on the Chevalley basis, acting on coordinate columns.
RingMatrix ad_matrix(const LieElement& x);

// Trace form of the adjoint representation.
RingElement killing_form(const LieElement& x, const LieElement& y);

// exp(ad x) for nilpotent ad x; throws InputError otherwise.
RingMatrix exp_ad(const LieElement& x);

}  // namespace madlie
