#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madlie/diagnostics.hpp"
#include "madlie/group.hpp"
#include "madlie/submodule.hpp"

namespace madlie {

// Solution module of [p,v] = lambda*v.  free_basis marks the PID path, where
// the generators form a basis.
struct Eigenmodule {
  Rational eigenvalue;
  Submodule module;
  bool free_basis = false;
};

enum class FreenessVerdict { free_basis_found, nonfree_rank1 };

std::string to_string(FreenessVerdict v);

// Audit record for one eigenvalue module.  nonfree_rank1 implies rank == 1
// and min_gens >= 2.  rank_point is set when the rank came from evaluating
// generators at a rational point (non-PID path).
struct FreenessCertificate {
  Rational eigenvalue;
  int rank = 0;
  int min_gens = 0;
  FreenessVerdict verdict = FreenessVerdict::free_basis_found;
  Submodule module;
  std::optional<std::map<std::string, Rational>> rank_point;
};

enum class ConjugationStatus { solved, obstructed, unsupported };

std::string to_string(ConjugationStatus s);

// solved carries a witness with group_act(witness, p) == target exactly;
// obstructed carries the certificate that blocks freeness; unsupported
// explains itself in detail.
struct ConjugationResult {
  ConjugationStatus status = ConjugationStatus::unsupported;
  std::optional<GroupElement> witness;
  std::optional<FreenessCertificate> obstruction;
  std::string detail;
  std::vector<std::string> notes;
};

std::vector<Eigenmodule> eigenmodules(const LieElement& p);

FreenessCertificate freeness_certificate(const LieElement& p, const Rational& lambda);

// Conjugates a regular diagonalizable p over a univariate laurent ring (type
// A) onto the constant target p0, which must have the same defining spectrum
// (evaluations of p at rational points always do).  Over quotient rings only
// the obstruction path runs.
ConjugationResult conjugate_regular(const LieElement& p, const LieElement& p0);

// Levi induction: conjugates every element of a valid candidate into the
// split Cartan simultaneously.  Univariate laurent, type A.
ConjugationResult mad_conjugate(const MadCandidate& c);

// Lifts a witness over R/J to one over R along J > J^2 > J^4 > ..., where J
// is the ideal of the truncated spec's variables.  p0 must lie in the split
// Cartan over Q and pbar must conjugate the reduction of p onto p0.  rounds,
// when given, receives the number of squaring stages.
GroupElement nilpotent_lift(const LieElement& p, const LieElement& p0,
                            const GroupElement& pbar, int* rounds = nullptr);

}  // namespace madlie
