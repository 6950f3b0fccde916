#include "madlie/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "madlie/errors.hpp"
#include "madlie/matrix.hpp"
#include "madlie/qlinalg.hpp"

namespace madlie {

namespace {

// Truncated specs have every variable nilpotent, so reduction modulo the
// nilradical keeps exactly the constant term.
RingElement reduce_nilradical(const RingElement& e) {
  if (e.spec()->kind() != RingKind::truncated) return e;
  return RingElement::constant(e.spec(), e.constant_coefficient());
}

std::vector<Integer> divisors_both_signs(const Integer& m) {
  Integer a = abs(m);
  if (a > Integer(1000000000000L))
    throw ResourceLimitError("rational root search: constant term too large");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    Integer q = a / d;
    out.push_back(d);
    out.push_back(-d);
    if (q != d) {
      out.push_back(q);
      out.push_back(-q);
    }
  }
  std::sort(out.begin(), out.end(), [](const Integer& x, const Integer& y) {
    Integer ax = abs(x), ay = abs(y);
    return ax != ay ? ax < ay : x < y;
  });
  return out;
}

Integer eval_int_poly(const std::vector<Integer>& q, const Integer& s) {
  Integer acc = 0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * s + *it;
  return acc;
}

// Exact division of a monic integer polynomial by (S - s); caller guarantees
// s is a root.
std::vector<Integer> deflate(const std::vector<Integer>& q, const Integer& s) {
  int n = static_cast<int>(q.size()) - 1;
  std::vector<Integer> b(n);
  b[n - 1] = q[n];
  for (int i = n - 1; i >= 1; --i) b[i - 1] = q[i] + s * b[i];
  if (q[0] + s * b[0] != 0) throw InternalError("deflation by a non-root");
  return b;
}

RingMatrix eval_matrix_poly(const std::vector<Rational>& coeffs, const RingMatrix& m) {
  auto spec = m.spec();
  int n = m.rows();
  RingMatrix acc(spec, n, n);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < n; ++i)
      acc.at(i, i) = acc.at(i, i) + RingElement::constant(spec, coeffs[k]);
  }
  return acc;
}

bool is_zero_matrix(const RingMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

std::string to_string(DiagFailure f) {
  switch (f) {
    case DiagFailure::nonconstant_charpoly: return "nonconstant_charpoly";
    case DiagFailure::nonsplit_over_Q: return "nonsplit_over_Q";
    case DiagFailure::minpoly_not_squarefree_witness:
      return "minpoly_not_squarefree_witness";
  }
  throw InternalError("unknown failure reason");
}

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& monic) {
  if (monic.empty() || monic.back() != 1)
    throw InputError("rational_roots expects a monic polynomial");
  std::vector<Rational> roots;
  std::vector<Rational> c = monic;
  while (c.size() > 1 && c.front() == 0) {
    roots.push_back(0);
    c.erase(c.begin());
  }
  int n = static_cast<int>(c.size()) - 1;
  if (n > 0) {
    // Substitute T = S/L to land on a monic integer polynomial in S.
    Integer lcm_den = 1;
    for (const auto& x : c) lcm_den = lcm(lcm_den, x.get_den());
    std::vector<Integer> q(n + 1);
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
      Rational scaled = c[i] * Rational(pw);
      if (scaled.get_den() != 1) throw InternalError("monic integer transform failed");
      q[i] = scaled.get_num();
      pw *= lcm_den;
    }
    for (const Integer& s : divisors_both_signs(q[0])) {
      while (q.size() > 1 && eval_int_poly(q, s) == 0) {
        roots.push_back(Rational(s, lcm_den));
        q = deflate(q, s);
      }
      if (q.size() == 1) break;
    }
    if (q.size() > 1) return std::nullopt;
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  return roots;
}

DiagReport is_k_diagonalizable(const LieElement& p) {
  DiagReport out;
  RingMatrix adp = ad_matrix(p);
  std::vector<RingElement> chi = char_poly(adp);

  std::vector<Rational> reduced(chi.size());
  for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
    RingElement ci = reduce_nilradical(chi[i]);
    if (!ci.is_constant()) {
      out.failure_reason = DiagFailure::nonconstant_charpoly;
      return out;
    }
    reduced[i] = ci.constant_value();
  }
  reduced.back() = 1;

  auto roots = rational_roots(reduced);
  if (!roots) {
    out.failure_reason = DiagFailure::nonsplit_over_Q;
    return out;
  }

  std::vector<Rational> distinct = *roots;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Rational> m = {1};
  for (const auto& lam : distinct) {
    // multiply by (T - lam)
    std::vector<Rational> next(m.size() + 1, Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
      next[i + 1] += m[i];
      next[i] -= lam * m[i];
    }
    m = std::move(next);
  }

  if (!is_zero_matrix(eval_matrix_poly(m, adp))) {
    out.failure_reason = DiagFailure::minpoly_not_squarefree_witness;
    return out;
  }

  out.is_diagonalizable = true;
  out.eigenvalues = std::move(distinct);
  out.min_poly = std::move(m);
  return out;
}

RegularityReport regularity(const LieElement& p) {
  const auto& rs = p.basis()->roots();
  std::vector<RingElement> chi = char_poly(ad_matrix(p));
  RingElement f = chi[rs.rank()];
  if (rs.num_positive() % 2 == 1) f = f.scaled(Rational(-1));
  RegularityReport out{f, is_unit(f).is_unit};
  return out;
}

TraceReport trace_invariants(const LieElement& p, int m_max) {
  if (m_max < 1) throw InputError("trace_invariants needs m_max >= 1");
  RingMatrix m = ad_matrix(p);
  RingMatrix pw = m;
  TraceReport out;
  out.constant = true;
  for (int k = 1; k <= m_max; ++k) {
    out.traces.push_back(pw.trace());
    if (!reduce_nilradical(out.traces.back()).is_constant()) out.constant = false;
    if (k < m_max) pw = pw * m;
  }
  return out;
}

bool vanishing_test(const LieElement& p, const std::map<std::string, Rational>& point) {
  if (!p.spec()->connected_reduced())
    throw InputError("vanishing test needs a reduced connected coordinate ring");
  if (!is_k_diagonalizable(p).is_diagonalizable)
    throw InputError("vanishing test needs a k-diagonalizable element");
  validate_point(*p.spec(), point);
  bool vanishes = true;
  for (int i = 0; i < p.dim(); ++i)
    if (p.coeff(i).eval(point) != 0) vanishes = false;
  if (vanishes && !p.is_zero())
    throw InternalError("nonzero diagonalizable element vanishes at a rational point");
  return vanishes;
}

LieElement evaluate_element(const LieElement& p,
                            const std::map<std::string, Rational>& point) {
  validate_point(*p.spec(), point);
  auto q = RingSpec::rationals();
  LieElement out(p.basis(), q);
  for (int i = 0; i < p.dim(); ++i)
    out.set_coeff(i, RingElement::constant(q, p.coeff(i).eval(point)));
  return out;
}

bool residue_conjugacy_check(const LieElement& p,
                             const std::map<std::string, Rational>& x0,
                             const std::vector<std::map<std::string, Rational>>& points,
                             int m_max) {
  if (!is_k_diagonalizable(p).is_diagonalizable)
    throw InputError("residue check needs a k-diagonalizable element");
  LieElement p0 = evaluate_element(p, x0);
  auto chi0 = char_poly(ad_matrix(p0));
  auto tr0 = trace_invariants(p0, m_max);
  for (const auto& x : points) {
    LieElement px = evaluate_element(p, x);
    if (char_poly(ad_matrix(px)) != chi0) return false;
    if (trace_invariants(px, m_max).traces != tr0.traces) return false;
  }
  return true;
}

MadReport mad_check(const MadCandidate& c) {
  if (c.elements.empty()) throw InputError("candidate needs at least one element");
  const auto& first = c.elements.front();
  for (const auto& e : c.elements) {
    if (e.basis().get() != first.basis().get() || !e.spec()->same_ring(*first.spec()))
      throw InputError("candidate elements live in different algebras");
  }
  int k = static_cast<int>(c.elements.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!bracket(c.elements[i], c.elements[j]).is_zero())
        throw InputError("candidate elements " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " do not commute");
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!is_k_diagonalizable(c.elements[i]).is_diagonalizable)
      throw InputError("candidate element " + std::to_string(i + 1) +
                       " is not k-diagonalizable");
  }

  auto spec = first.spec();
  int n = first.dim();
  QMat rows;
  if (spec->connected_reduced()) {
    // Q-independence transfers through one rational point on a reduced
    // connected spec.
    auto pt = designated_point(*spec);
    for (const auto& e : c.elements) {
      QVec row(n);
      for (int q = 0; q < n; ++q) row[q] = e.coeff(q).eval(pt);
      rows.push_back(std::move(row));
    }
  } else {
    // Exact coefficient matrix over Q, one column per (slot, monomial).
    using Key = std::pair<int, std::array<int16_t, kMaxVars>>;
    std::map<Key, int> col;
    for (const auto& e : c.elements)
      for (int q = 0; q < n; ++q)
        for (const auto& t : e.coeff(q).terms()) col.emplace(Key{q, t.m.e}, 0);
    int width = 0;
    for (auto& [key, idx] : col) idx = width++;
    for (const auto& e : c.elements) {
      QVec row(width, Rational(0));
      for (int q = 0; q < n; ++q)
        for (const auto& t : e.coeff(q).terms()) row[col[Key{q, t.m.e}]] = t.c;
      rows.push_back(std::move(row));
    }
  }

  MadReport out;
  out.dim = q_rank(rows);
  int rank = first.basis()->rank();
  out.within_bound = out.dim <= rank;
  out.maximal_by_dimension = out.dim == rank;
  return out;
}

bool cartan_uniqueness_probe(const ChevalleyBasis::Ptr& basis, const RingElement& r) {
  if (!r.spec()->connected_reduced())
    throw InputError("probe needs a connected reduced coordinate ring");
  LieElement x(basis, r.spec());
  x.set_coeff(0, r);
  bool verdict = is_k_diagonalizable(x).is_diagonalizable;
  if (verdict != r.is_constant())
    throw InternalError("diagonalizable Cartan coefficient outside Q");
  return verdict;
}

}  // namespace madlie
