#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madlie/chevalley.hpp"

namespace madlie {

enum class DiagFailure {
  nonconstant_charpoly,
  nonsplit_over_Q,
  minpoly_not_squarefree_witness,
};

std::string to_string(DiagFailure f);

// Outcome of the exact diagonalizability test.  When is_diagonalizable is
// true, min_poly is monic, squarefree, splits over Q, and annihilates ad p
// exactly; eigenvalues are its roots, sorted ascending.
struct DiagReport {
  bool is_diagonalizable = false;
  std::vector<Rational> eigenvalues;
  std::vector<Rational> min_poly;  // ascending coefficients
  std::optional<DiagFailure> failure_reason;
};

// f_reg is the coefficient of T^rank in char_poly(ad p), sign-normalized so
// split regular Cartan elements come out positive.
struct RegularityReport {
  RingElement f_reg_value;
  bool is_regular = false;
};

struct TraceReport {
  std::vector<RingElement> traces;  // Tr((ad p)^m) for m = 1..m_max
  bool constant = false;
};

// Commuting family of diagonalizable elements, claimed by the caller and
// re-verified inside mad_check.
struct MadCandidate {
  std::vector<LieElement> elements;
};

struct MadReport {
  int dim = 0;
  bool within_bound = false;
  bool maximal_by_dimension = false;
};

DiagReport is_k_diagonalizable(const LieElement& p);

RegularityReport regularity(const LieElement& p);

TraceReport trace_invariants(const LieElement& p, int m_max);

// Evaluates p at the point and checks that vanishing there forces vanishing
// globally.  Requires a diagonalizable element over a reduced spec; a global
// nonzero element vanishing at the point is reported as an internal error.
bool vanishing_test(const LieElement& p, const std::map<std::string, Rational>& point);

LieElement evaluate_element(const LieElement& p,
                            const std::map<std::string, Rational>& point);

// True iff ad p(x) has the same power traces (m <= m_max) and the same
// characteristic polynomial as ad p(x0) at every listed point.
bool residue_conjugacy_check(const LieElement& p,
                             const std::map<std::string, Rational>& x0,
                             const std::vector<std::map<std::string, Rational>>& points,
                             int m_max);

MadReport mad_check(const MadCandidate& c);

// Diagonalizability of h_1 (x) r, asserted to agree with r being rational.
bool cartan_uniqueness_probe(const ChevalleyBasis::Ptr& basis, const RingElement& r);

// All rational roots of a monic polynomial over Q (ascending coefficients),
// with multiplicity, or nullopt when it does not split over Q.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& monic);

}  // namespace madlie
