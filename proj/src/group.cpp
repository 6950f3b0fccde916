#include "madlie/group.hpp"

#include "madlie/errors.hpp"

namespace madlie {

namespace {

RingMatrix exp_nilpotent(const RingMatrix& a) {
  const int n = a.rows();
  int nil = -1;
  RingMatrix power = a;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) {
      nil = k;
      break;
    }
    power = power * a;
  }
  if (nil < 0) throw InputError("matrix exponential needs a nilpotent argument");
  RingMatrix out = RingMatrix::identity(a.spec(), n);
  RingMatrix term = RingMatrix::identity(a.spec(), n);
  Rational factorial(1);
  for (int k = 1; k < nil; ++k) {
    term = term * a;
    factorial *= k;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.at(i, j) = out.at(i, j) + term.at(i, j).scaled(Rational(1) / factorial);
      }
    }
  }
  return out;
}

void check_pair(const GroupElement& a, const GroupElement& b) {
  if (a.basis.get() != b.basis.get() || !a.spec->same_ring(*b.spec)) {
    throw InputError("group elements are incompatible");
  }
}

}  // namespace

GroupElement identity_element(ChevalleyBasis::Ptr basis, RingSpec::Ptr spec) {
  GroupElement g;
  g.adjoint = RingMatrix::identity(spec, basis->dim());
  if (basis->has_defining_rep()) {
    g.defining = RingMatrix::identity(spec, basis->defining_dim());
  }
  g.basis = std::move(basis);
  g.spec = std::move(spec);
  return g;
}

GroupElement root_elt(const ChevalleyBasis::Ptr& basis, int root_idx,
                      const RingElement& t) {
  LieElement x(basis, t.spec());
  x.set_coeff(basis->v_index(root_idx), t);
  GroupElement g;
  g.basis = basis;
  g.spec = t.spec();
  g.adjoint = exp_ad(x);
  if (basis->has_defining_rep()) {
    g.defining = exp_nilpotent(defining_matrix_of(x));
  }
  g.word = {"x[" + basis->roots().root_label(root_idx) + "](" + t.to_string() +
            ")"};
  return g;
}

GroupElement torus_elt(const ChevalleyBasis::Ptr& basis, int simple_i,
                       const RingElement& u) {
  if (simple_i < 0 || simple_i >= basis->rank()) {
    throw InputError("torus index out of range");
  }
  auto unit = is_unit(u);
  if (!unit.is_unit) throw InputError("torus parameter must be a unit");
  const RingElement& uinv = *unit.inverse;

  const auto& rs = basis->roots();
  GroupElement g;
  g.basis = basis;
  g.spec = u.spec();
  g.adjoint = RingMatrix::identity(u.spec(), basis->dim());
  for (int k = 0; k < rs.num_roots(); ++k) {
    int c = rs.coroot_pairings(k)[simple_i];
    RingElement scale = c >= 0 ? u.pow(c) : uinv.pow(-c);
    g.adjoint.at(basis->v_index(k), basis->v_index(k)) = scale;
  }
  if (basis->has_defining_rep()) {
    const auto& vert = basis->cartan().components()[0].vertices;
    int pos = -1;
    for (std::size_t k = 0; k < vert.size(); ++k) {
      if (vert[k] == simple_i) pos = static_cast<int>(k);
    }
    RingMatrix d = RingMatrix::identity(u.spec(), basis->defining_dim());
    d.at(pos, pos) = u;
    d.at(pos + 1, pos + 1) = uinv;
    g.defining = d;
  }
  g.word = {"h[" + std::to_string(simple_i + 1) + "](" + u.to_string() + ")"};
  return g;
}

GroupElement exp_element(const LieElement& x) {
  GroupElement g;
  g.basis = x.basis();
  g.spec = x.spec();
  g.adjoint = exp_ad(x);
  if (x.basis()->has_defining_rep()) {
    g.defining = exp_nilpotent(defining_matrix_of(x));
  }
  g.word = {"exp(" + x.to_string() + ")"};
  return g;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  check_pair(a, b);
  GroupElement g;
  g.basis = a.basis;
  g.spec = a.spec;
  g.adjoint = a.adjoint * b.adjoint;
  if (a.defining && b.defining) g.defining = *a.defining * *b.defining;
  g.word = a.word;
  g.word.insert(g.word.end(), b.word.begin(), b.word.end());
  return g;
}

LieElement group_act(const GroupElement& g, const LieElement& x) {
  if (g.basis.get() != x.basis().get() || !g.spec->same_ring(*x.spec())) {
    throw InputError("group element and Lie element are incompatible");
  }
  std::vector<RingElement> coords;
  coords.reserve(x.dim());
  for (int i = 0; i < x.dim(); ++i) coords.push_back(x.coeff(i));
  auto image = g.adjoint.apply(coords);
  LieElement out(x.basis(), x.spec());
  for (int i = 0; i < x.dim(); ++i) out.set_coeff(i, image[i]);
  return out;
}

RingMatrix defining_matrix_of(const LieElement& x) {
  const auto& basis = *x.basis();
  const auto& rho = basis.defining_rep();
  const int nn = basis.defining_dim();
  RingMatrix m(x.spec(), nn, nn);
  for (int i = 0; i < basis.dim(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int r = 0; r < nn; ++r) {
      for (int c = 0; c < nn; ++c) {
        if (rho[i][r][c] == 0) continue;
        m.at(r, c) = m.at(r, c) + x.coeff(i).scaled(rho[i][r][c]);
      }
    }
  }
  return m;
}

LieElement lie_from_defining(const ChevalleyBasis::Ptr& basis, const RingMatrix& m) {
  const int nn = basis->defining_dim();
  if (nn == 0) {
    throw InputError("defining representation requires a single type-A component");
  }
  if (m.rows() != nn || m.cols() != nn) {
    throw InputError("matrix size does not match the defining representation");
  }
  if (!m.trace().is_zero()) throw InputError("matrix is not traceless");

  const auto& rs = basis->roots();
  LieElement out(basis, m.spec());
  for (int k = 0; k < rs.num_roots(); ++k) {
    const auto& slot = basis->defining_slot(k);
    out.set_coeff(basis->v_index(k),
                  m.at(slot.row, slot.col).scaled(Rational(1) / slot.value));
  }
  const auto& vert = basis->cartan().components()[0].vertices;
  RingElement partial = RingElement::zero(m.spec());
  for (int k = 0; k + 1 < nn; ++k) {
    partial = partial + m.at(k, k);
    out.set_coeff(basis->h_index(vert[k]), partial);
  }
  if (defining_matrix_of(out) != m) {
    throw InternalError("defining-matrix decomposition failed to reconstruct");
  }
  return out;
}

GroupElement from_defining(const ChevalleyBasis::Ptr& basis, RingMatrix m) {
  const int nn = basis->defining_dim();
  if (nn == 0) {
    throw InputError("defining representation requires a single type-A component");
  }
  if (m.rows() != nn || m.cols() != nn) {
    throw InputError("matrix size does not match the defining representation");
  }
  if (m.det() != RingElement::one(m.spec())) {
    throw InputError("defining matrix must have determinant 1");
  }
  RingMatrix minv = m.adjugate();

  GroupElement g;
  g.basis = basis;
  g.spec = m.spec();
  g.adjoint = RingMatrix(m.spec(), basis->dim(), basis->dim());
  for (int i = 0; i < basis->dim(); ++i) {
    LieElement b(basis, m.spec());
    b.set_coeff(i, RingElement::one(m.spec()));
    LieElement image = lie_from_defining(basis, m * defining_matrix_of(b) * minv);
    for (int q = 0; q < basis->dim(); ++q) g.adjoint.at(q, i) = image.coeff(q);
  }
  g.defining = std::move(m);
  return g;
}

}  // namespace madlie
