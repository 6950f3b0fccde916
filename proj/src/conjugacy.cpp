#include "madlie/conjugacy.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "madlie/errors.hpp"
#include "madlie/rootsystem.hpp"

namespace madlie {

namespace {

struct DefiningDiagonalization {
  RingMatrix m;                    // det 1; columns are kernel bases by eigenvalue
  std::vector<Rational> spectrum;  // ascending, with multiplicity
};

// Diagonalizes the defining matrix of p over a univariate laurent ring.
// nullopt when the defining characteristic polynomial is nonconstant or does
// not split over Q; the kernel-rank and determinant-unit conditions hold for
// every diagonalizable element, so their failure is an internal error.
std::optional<DefiningDiagonalization> diagonalize_defining(const LieElement& p) {
  auto spec = p.spec();
  RingMatrix d = defining_matrix_of(p);
  int n = d.rows();

  auto chi = char_poly(d);
  std::vector<Rational> c(chi.size());
  for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
    if (!chi[i].is_constant()) return std::nullopt;
    c[i] = chi[i].constant_value();
  }
  c.back() = 1;
  auto roots = rational_roots(c);
  if (!roots) return std::nullopt;

  RingMatrix m(spec, n, n);
  int col = 0;
  for (std::size_t i = 0; i < roots->size();) {
    std::size_t j = i;
    while (j < roots->size() && (*roots)[j] == (*roots)[i]) ++j;
    int mult = static_cast<int>(j - i);
    RingMatrix shifted = d;
    for (int r = 0; r < n; ++r)
      shifted.at(r, r) = shifted.at(r, r) - RingElement::constant(spec, (*roots)[i]);
    KernelResult k = module_kernel(shifted);
    if (!k.free_basis || static_cast<int>(k.module.generators.size()) != mult)
      throw InternalError("eigenvector module is not free of the expected rank");
    for (const auto& g : k.module.generators) {
      for (int r = 0; r < n; ++r) m.at(r, col) = g[r];
      ++col;
    }
    i = j;
  }
  if (col != n) throw InternalError("eigenvector matrix is not square");

  RingElement det = m.det();
  UnitResult u = is_unit(det);
  if (!u.is_unit) throw InternalError("eigenvector matrix determinant is not a unit");
  for (int r = 0; r < n; ++r) m.at(r, 0) = m.at(r, 0) * (*u.inverse);
  return DefiningDiagonalization{std::move(m), std::move(*roots)};
}

std::string q_str(const Rational& x) { return x.get_str(); }

}  // namespace

std::string to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::free_basis_found: return "free_basis_found";
    case FreenessVerdict::nonfree_rank1: return "nonfree_rank1";
  }
  throw InternalError("unknown freeness verdict");
}

std::string to_string(ConjugationStatus s) {
  switch (s) {
    case ConjugationStatus::solved: return "solved";
    case ConjugationStatus::obstructed: return "obstructed";
    case ConjugationStatus::unsupported: return "unsupported";
  }
  throw InternalError("unknown conjugation status");
}

std::vector<Eigenmodule> eigenmodules(const LieElement& p) {
  auto rep = is_k_diagonalizable(p);
  if (!rep.is_diagonalizable)
    throw InputError("eigenmodules need a k-diagonalizable element");
  RingMatrix ad = ad_matrix(p);
  auto spec = p.spec();
  std::vector<Eigenmodule> out;
  bool all_free = true;
  int total = 0;
  for (const auto& lam : rep.eigenvalues) {
    RingMatrix shifted = ad;
    for (int i = 0; i < shifted.rows(); ++i)
      shifted.at(i, i) = shifted.at(i, i) - RingElement::constant(spec, lam);
    KernelResult k = module_kernel(shifted);
    all_free = all_free && k.free_basis;
    total += static_cast<int>(k.module.generators.size());
    out.push_back({lam, std::move(k.module), k.free_basis});
  }
  if (all_free && total != p.dim())
    throw InternalError("eigenmodule ranks do not sum to the dimension");
  return out;
}

FreenessCertificate freeness_certificate(const LieElement& p, const Rational& lambda) {
  if (!is_k_diagonalizable(p).is_diagonalizable)
    throw InputError("freeness certificate needs a k-diagonalizable element");
  RingMatrix shifted = ad_matrix(p);
  auto spec = p.spec();
  for (int i = 0; i < shifted.rows(); ++i)
    shifted.at(i, i) = shifted.at(i, i) - RingElement::constant(spec, lambda);
  KernelResult k = module_kernel(shifted);

  FreenessCertificate cert;
  cert.eigenvalue = lambda;
  cert.module = std::move(k.module);
  if (k.free_basis) {
    cert.rank = static_cast<int>(cert.module.generators.size());
    cert.min_gens = cert.rank;
    cert.verdict = FreenessVerdict::free_basis_found;
    return cert;
  }

  auto pt = designated_point(*spec);
  cert.rank = fibre_rank(cert.module, pt);
  cert.rank_point = pt;
  MinGenCertificate mg = min_generators(cert.module);
  cert.min_gens = mg.min_count;
  if (cert.rank == 1 && cert.min_gens >= 2) {
    cert.verdict = FreenessVerdict::nonfree_rank1;
    return cert;
  }
  if (cert.min_gens == cert.rank) {
    // As many generators as the rank: the kept subset is a basis.
    std::vector<std::vector<RingElement>> basis;
    for (int idx : mg.kept) basis.push_back(cert.module.generators[idx]);
    cert.module.generators = std::move(basis);
    cert.verdict = FreenessVerdict::free_basis_found;
    return cert;
  }
  throw InputError("freeness undecided: rank " + std::to_string(cert.rank) + " module with " +
                   std::to_string(cert.min_gens) + " minimal generators over this ring");
}

ConjugationResult conjugate_regular(const LieElement& p, const LieElement& p0) {
  auto spec = p.spec();
  auto basis = p.basis();
  ConjugationResult out;

  if (spec->kind() == RingKind::quotient) {
    if (!is_k_diagonalizable(p).is_diagonalizable)
      throw InputError("conjugate_regular needs a k-diagonalizable element");
    if (!regularity(p).is_regular)
      throw InputError("conjugate_regular needs a regular element");
    auto ems = eigenmodules(p);
    // Largest eigenvalue first, so the reported certificate is deterministic.
    for (auto it = ems.rbegin(); it != ems.rend(); ++it) {
      const Eigenmodule& em = *it;
      if (em.free_basis) continue;
      auto pt = designated_point(*spec);
      int rank = fibre_rank(em.module, pt);
      int mgens = min_generators(em.module).min_count;
      if (rank == 1 && mgens >= 2) {
        FreenessCertificate cert;
        cert.eigenvalue = em.eigenvalue;
        cert.rank = rank;
        cert.min_gens = mgens;
        cert.verdict = FreenessVerdict::nonfree_rank1;
        cert.module = em.module;
        cert.rank_point = pt;
        out.status = ConjugationStatus::obstructed;
        out.detail = "eigenmodule at " + q_str(em.eigenvalue) +
                     " is rank one but needs " + std::to_string(mgens) + " generators";
        out.obstruction = std::move(cert);
        return out;
      }
    }
    out.detail = "no rank-one nonfree obstruction found over this quotient ring";
    return out;
  }

  if (spec->kind() != RingKind::laurent || spec->nvars() != 1) {
    out.detail = "solver runs over univariate laurent rings; obstruction detection over quotients";
    return out;
  }
  if (!basis->has_defining_rep()) {
    out.detail = "witness assembly needs the defining representation (type A)";
    return out;
  }
  if (!is_k_diagonalizable(p).is_diagonalizable)
    throw InputError("conjugate_regular needs a k-diagonalizable element");
  if (!regularity(p).is_regular)
    throw InputError("conjugate_regular needs a regular element");
  if (p0.basis().get() != basis.get())
    throw InputError("target element uses a different algebra");
  for (int i = 0; i < p0.dim(); ++i)
    if (!p0.coeff(i).is_constant())
      throw InputError("target element must have constant coefficients");

  auto dd = diagonalize_defining(p);
  if (!dd) throw InternalError("certified diagonalizable element without a defining spectrum");

  LieElement p0r(basis, spec);
  for (int i = 0; i < p0.dim(); ++i)
    p0r.set_coeff(i, RingElement::constant(spec, p0.coeff(i).constant_value()));
  auto d0 = diagonalize_defining(p0r);
  if (!d0 || d0->spectrum != dd->spectrum)
    throw InputError("target element is not pointwise conjugate to p");

  GroupElement witness = from_defining(basis, d0->m * dd->m.adjugate());
  if (!(group_act(witness, p) == p0r))
    throw InternalError("witness action does not reproduce the target");
  out.status = ConjugationStatus::solved;
  out.witness = std::move(witness);
  return out;
}

namespace {

// One Levi-induction level: conjugate the first element showing a root
// coordinate onto its sorted constant diagonal, then recurse on the traceless
// parts of the equal-eigenvalue blocks.
GroupElement mad_solve(const ChevalleyBasis::Ptr& basis, const RingSpec::Ptr& spec,
                       std::vector<LieElement> elems, std::vector<std::string>& notes,
                       int depth) {
  const auto& rs = basis->roots();
  int pick = -1;
  for (std::size_t i = 0; i < elems.size() && pick < 0; ++i)
    for (int a = 0; a < rs.num_roots(); ++a)
      if (!elems[i].root_coeff(a).is_zero()) {
        pick = static_cast<int>(i);
        break;
      }
  if (pick < 0) return identity_element(basis, spec);

  auto dd = diagonalize_defining(elems[pick]);
  if (!dd) throw InternalError("candidate element lost its defining spectrum");
  GroupElement w1 = from_defining(basis, dd->m.adjugate());
  std::vector<LieElement> moved;
  moved.reserve(elems.size());
  for (const auto& x : elems) moved.push_back(group_act(w1, x));

  int n = basis->defining_dim();
  RingMatrix diag(spec, n, n);
  for (int i = 0; i < n; ++i)
    diag.at(i, i) = RingElement::constant(spec, dd->spectrum[i]);
  LieElement p0 = lie_from_defining(basis, diag);
  if (!(moved[pick] == p0)) throw InternalError("diagonalization missed its own target");

  // Cross-check the zero set against the root system view.
  std::vector<Rational> hc(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) hc[i] = p0.coeff(i).constant_value();
  SubsystemData sd = subsystem_base(rs, rs.coweight_coords(hc));
  if (!sd.base_is_simple)
    throw InternalError("sorted spectrum produced a non-simple zero-set base");
  std::size_t in_block = 0;
  for (std::size_t i = 0; i < dd->spectrum.size();) {
    std::size_t j = i;
    while (j < dd->spectrum.size() && dd->spectrum[j] == dd->spectrum[i]) ++j;
    in_block += (j - i) * (j - i - 1);
    i = j;
  }
  if (in_block != sd.zero_set.size())
    throw InternalError("block structure disagrees with the subsystem zero set");
  {
    std::string note = "level " + std::to_string(depth) + ": spectrum";
    for (const auto& mu : dd->spectrum) note += " " + q_str(mu);
    note += "; zero-set simple indices";
    if (sd.I.empty()) note += " (none)";
    for (int i : sd.I) note += " " + std::to_string(i);
    notes.push_back(std::move(note));
  }

  // Everything now commutes with p0, hence is block diagonal; recurse on the
  // traceless part of each block of size >= 2.
  RingMatrix wblock = RingMatrix::identity(spec, n);
  bool any_block = false;
  std::vector<RingMatrix> defs;
  defs.reserve(moved.size());
  for (const auto& x : moved) {
    RingMatrix xd = defining_matrix_of(x);
    for (int r = 0; r < n; ++r)
      for (int cidx = 0; cidx < n; ++cidx)
        if (dd->spectrum[r] != dd->spectrum[cidx] && !xd.at(r, cidx).is_zero())
          throw InternalError("conjugated candidate is not block diagonal");
    defs.push_back(std::move(xd));
  }
  for (int start = 0; start < n;) {
    int len = 1;
    while (start + len < n && dd->spectrum[start + len] == dd->spectrum[start]) ++len;
    if (len >= 2) {
      auto sub_basis =
          ChevalleyBasis::build(CartanMatrix::of_type('A', len - 1), len - 1);
      std::vector<LieElement> sub;
      sub.reserve(moved.size());
      for (const auto& xd : defs) {
        RingMatrix xb(spec, len, len);
        for (int r = 0; r < len; ++r)
          for (int cidx = 0; cidx < len; ++cidx)
            xb.at(r, cidx) = xd.at(start + r, start + cidx);
        RingElement shift = xb.trace() * RingElement::constant(spec, Rational(1, len));
        for (int r = 0; r < len; ++r) xb.at(r, r) = xb.at(r, r) - shift;
        sub.push_back(lie_from_defining(sub_basis, xb));
      }
      GroupElement swit = mad_solve(sub_basis, spec, std::move(sub), notes, depth + 1);
      if (!swit.defining) throw InternalError("sub-witness lacks a defining matrix");
      for (int r = 0; r < len; ++r)
        for (int cidx = 0; cidx < len; ++cidx)
          wblock.at(start + r, start + cidx) = swit.defining->at(r, cidx);
      any_block = true;
    }
    start += len;
  }
  if (!any_block) return w1;
  return mul(from_defining(basis, wblock), w1);
}

}  // namespace

ConjugationResult mad_conjugate(const MadCandidate& c) {
  mad_check(c);  // re-verifies commutativity and diagonalizability
  const auto& first = c.elements.front();
  auto spec = first.spec();
  auto basis = first.basis();
  ConjugationResult out;
  if (spec->kind() != RingKind::laurent || spec->nvars() != 1) {
    out.detail = "solver runs over univariate laurent rings";
    return out;
  }
  if (!basis->has_defining_rep()) {
    out.detail = "solver needs the defining representation (type A)";
    return out;
  }

  GroupElement w = mad_solve(basis, spec, c.elements, out.notes, 0);
  for (const auto& x : c.elements) {
    LieElement y = group_act(w, x);
    for (int a = 0; a < basis->roots().num_roots(); ++a)
      if (!y.root_coeff(a).is_zero())
        throw InternalError("mad witness failed to reach the Cartan");
    for (int i = 0; i < basis->rank(); ++i)
      if (!y.coeff(i).is_constant())
        throw InternalError("conjugated Cartan coefficient is not rational");
  }
  out.status = ConjugationStatus::solved;
  out.witness = std::move(w);
  return out;
}

namespace {

// Smallest N with J^N = 0, J the ideal of the truncated spec's variables.
int nilpotency_degree(const RingSpec::Ptr& spec) {
  int v = spec->nvars();
  if (v == 0) return 1;
  std::vector<int> bound(v);
  for (int i = 0; i < v; ++i) {
    int k = 1;
    while (k <= 64 && !RingElement::variable(spec, i, k).is_zero()) ++k;
    if (k > 64) throw ResourceLimitError("variable nilpotency exceeds the supported bound");
    bound[i] = k;
  }
  long box = 1;
  for (int i = 0; i < v; ++i) {
    box *= bound[i];
    if (box > 200000) throw ResourceLimitError("nilpotency degree search exceeded its budget");
  }
  int maxdeg = 0;
  std::vector<int> e(v, 0);
  for (;;) {
    Mono m;
    int deg = 0;
    for (int i = 0; i < v; ++i) {
      m.e[i] = static_cast<int16_t>(e[i]);
      deg += e[i];
    }
    if (deg > maxdeg && !RingElement::monomial(spec, m, Rational(1)).is_zero())
      maxdeg = deg;
    int i = 0;
    while (i < v) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == v) break;
  }
  return maxdeg + 1;
}

void monomials_of_degree(int total, int nvars, int idx, std::vector<int>& e,
                         const std::vector<std::string>& vars,
                         std::vector<std::string>& out) {
  if (idx == nvars - 1) {
    e[idx] = total;
    std::string s;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    out.push_back(std::move(s));
    return;
  }
  for (int k = 0; k <= total; ++k) {
    e[idx] = k;
    monomials_of_degree(total - k, nvars, idx + 1, e, vars, out);
  }
}

// R/J^m as a truncated spec: original relations plus all degree-m monomials.
RingSpec::Ptr stage_spec(const RingSpec::Ptr& spec, int m, int full_n) {
  if (m >= full_n) return spec;
  std::vector<std::string> rels = spec->relation_strings();
  std::vector<int> e(spec->nvars(), 0);
  monomials_of_degree(m, spec->nvars(), 0, e, spec->vars(), rels);
  return RingSpec::make(RingKind::truncated, spec->vars(), rels, spec->order(),
                        spec->limits());
}

RingElement to_spec(const RingSpec::Ptr& target, const RingElement& x) {
  return RingElement::from_terms(target, x.terms());
}

LieElement lie_to_spec(const RingSpec::Ptr& target, const LieElement& x) {
  LieElement out(x.basis(), target);
  for (int i = 0; i < x.dim(); ++i) out.set_coeff(i, to_spec(target, x.coeff(i)));
  return out;
}

}  // namespace

GroupElement nilpotent_lift(const LieElement& p, const LieElement& p0,
                            const GroupElement& pbar, int* rounds) {
  auto spec = p.spec();
  auto basis = p.basis();
  if (rounds) *rounds = 0;
  if (spec->kind() != RingKind::truncated)
    throw InputError("nilpotent lift expects a truncated coordinate ring");
  if (!basis->has_defining_rep())
    throw InputError("nilpotent lift needs the defining representation (type A)");
  if (p0.basis().get() != basis.get() || pbar.basis.get() != basis.get())
    throw InputError("element, target, and witness must share one algebra");
  for (int i = 0; i < p0.dim(); ++i)
    if (!p0.coeff(i).is_constant())
      throw InputError("target element must have constant coefficients");
  const auto& rs = basis->roots();
  for (int a = 0; a < rs.num_roots(); ++a)
    if (!p0.root_coeff(a).is_zero())
      throw InputError("target element must lie in the split Cartan");
  if (!pbar.defining)
    throw InputError("reduced witness needs a defining matrix");
  if (pbar.spec->nvars() != 0)
    throw InputError("reduced witness must live over Q");
  if (!is_k_diagonalizable(p).is_diagonalizable)
    throw InputError("nilpotent lift needs a k-diagonalizable element");

  // Reduced-level precondition: pbar conjugates p mod J onto p0.
  auto rq = pbar.spec;
  LieElement pred(basis, rq), p0red(basis, rq);
  for (int i = 0; i < p.dim(); ++i) {
    pred.set_coeff(i, RingElement::constant(rq, p.coeff(i).constant_coefficient()));
    p0red.set_coeff(i, RingElement::constant(rq, p0.coeff(i).constant_value()));
  }
  if (!(group_act(pbar, pred) == p0red))
    throw InputError("reduced witness does not conjugate the reduction of p onto the target");

  int full_n = nilpotency_degree(spec);
  int n = basis->defining_dim();

  std::vector<Rational> hc(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) hc[i] = p0.coeff(i).constant_value();
  std::vector<Rational> cw = rs.coweight_coords(hc);

  RingMatrix wdef = *pbar.defining;
  std::optional<GroupElement> final_witness;
  int m = 1;
  while (m < full_n) {
    int m2 = std::min(2 * m, full_n);
    auto st = stage_spec(spec, m2, full_n);

    RingMatrix w2(st, n, n);
    for (int r = 0; r < n; ++r)
      for (int cidx = 0; cidx < n; ++cidx) w2.at(r, cidx) = to_spec(st, wdef.at(r, cidx));
    UnitResult u = is_unit(w2.det());
    if (!u.is_unit) throw InternalError("lifted determinant is not a unit");
    for (int r = 0; r < n; ++r) w2.at(r, 0) = w2.at(r, 0) * (*u.inverse);

    GroupElement g = from_defining(basis, w2);
    LieElement pst = lie_to_spec(st, p);
    LieElement p0st = lie_to_spec(st, p0);
    LieElement cur = group_act(g, pst);
    for (int a = 0; a < rs.num_roots(); ++a) {
      Rational pairing = rs.pairing(a, cw);
      if (pairing == 0) continue;
      RingElement eps = cur.root_coeff(a);
      if (eps.is_zero()) continue;
      GroupElement theta = root_elt(basis, a, eps.scaled(Rational(1) / pairing));
      g = mul(theta, g);
      cur = group_act(theta, cur);
    }
    if (!(cur == p0st))
      throw InputError("nonzero residual after a lifting stage: p is not k-diagonalizable as claimed");
    wdef = *g.defining;
    final_witness = std::move(g);
    m = m2;
    if (rounds) ++*rounds;
  }

  if (!final_witness) {  // J = 0 already: transport pbar
    RingMatrix w0(spec, n, n);
    for (int r = 0; r < n; ++r)
      for (int cidx = 0; cidx < n; ++cidx) w0.at(r, cidx) = to_spec(spec, pbar.defining->at(r, cidx));
    final_witness = from_defining(basis, w0);
  }
  if (!(group_act(*final_witness, p) == lie_to_spec(spec, p0)))
    throw InternalError("lifted witness does not conjugate p onto the target");
  return *final_witness;
}

}  // namespace madlie
