#include "madlie/chevalley.hpp"

#include <algorithm>

#include "madlie/errors.hpp"
#include "madlie/qlinalg.hpp"

namespace madlie {

namespace {

RootCoords coords_sum(const RootCoords& a, const RootCoords& b) {
  RootCoords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

RootCoords coords_diff(const RootCoords& a, const RootCoords& b) {
  RootCoords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

QMat q_commutator(const QMat& a, const QMat& b) {
  QMat ab = q_mul(a, b);
  QMat ba = q_mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i) {
    for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
  }
  return ab;
}

}  // namespace

ChevalleyBasis::Ptr ChevalleyBasis::build(CartanMatrix cartan, int rank_limit) {
  if (cartan.rank() > rank_limit) {
    throw InputError("rank " + std::to_string(cartan.rank()) +
                     " exceeds the configured bound " +
                     std::to_string(rank_limit));
  }
  auto basis = std::shared_ptr<ChevalleyBasis>(new ChevalleyBasis(std::move(cartan)));
  basis->fill_structure_constants();
  basis->fill_bracket_table();
  basis->verify_jacobi();
  basis->build_defining_rep();
  return basis;
}

// N_{a,b} for arbitrary sign patterns, reduced to the positive-pair table.
// Uses antisymmetry, N_{-a,-b} = -N_{a,b}, and the three-root identity
// N_{a,b}(c,c) stays proportional across a+b+c = 0.
namespace {

Integer n_lookup(const RootSystem& rs,
                 std::map<std::pair<int, int>, Integer>& table, int a, int b) {
  auto it = table.find({a, b});
  if (it != table.end()) return it->second;
  const int np = rs.num_positive();
  Integer val;
  if (a < np && b < np) {
    throw InternalError("positive structure constant requested out of order");
  } else if (a >= np && b >= np) {
    val = -n_lookup(rs, table, rs.negative_of(a), rs.negative_of(b));
  } else if (a < np) {  // N_{xi, -mu} with xi = a, mu = -b
    int mu = rs.negative_of(b);
    RootCoords zeta = coords_diff(rs.root(a), rs.root(mu));
    int z = rs.root_index(zeta);
    if (z < 0) throw InternalError("structure constant for a non-root sum");
    if (rs.is_positive(z)) {
      Rational ratio = Rational(rs.d_of_root(z)) / Rational(rs.d_of_root(a));
      Rational v = -ratio * Rational(n_lookup(rs, table, mu, z));
      if (!is_integer(v)) throw InternalError("non-integral structure constant");
      val = v.get_num();
    } else {
      val = n_lookup(rs, table, mu, rs.negative_of(a));
    }
  } else {
    val = -n_lookup(rs, table, b, a);
  }
  table[{a, b}] = val;
  return val;
}

}  // namespace

void ChevalleyBasis::fill_structure_constants() {
  const int np = rs_.num_positive();
  // Positive pairs, by increasing height of the sum (= index order).
  for (int g = 0; g < np; ++g) {
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < np; ++a) {
      for (int b = a + 1; b < np; ++b) {
        if (coords_sum(rs_.root(a), rs_.root(b)) == rs_.root(g)) {
          special.push_back({a, b});
        }
      }
    }
    if (special.empty()) continue;
    std::sort(special.begin(), special.end());
    auto [eps, del] = special.front();
    // Extraspecial pair: N = p + 1 from the root string delta - k*eps.
    int p = 0;
    for (;;) {
      RootCoords m = rs_.root(del);
      for (int i = 0; i < rs_.rank(); ++i) m[i] -= (p + 1) * rs_.root(eps)[i];
      if (rs_.root_index(m) < 0) break;
      ++p;
    }
    n_[{eps, del}] = p + 1;
    n_[{del, eps}] = -(p + 1);
    for (std::size_t s = 1; s < special.size(); ++s) {
      auto [a, b] = special[s];
      // Jacobi on (eps, del, -a) expressed through smaller-height constants.
      Rational acc(0);
      RootCoords da = coords_diff(rs_.root(del), rs_.root(a));
      int da_idx = rs_.root_index(da);
      if (da_idx >= 0) {
        acc += Rational(n_lookup(rs_, n_, del, rs_.negative_of(a))) *
               Rational(n_lookup(rs_, n_, da_idx, eps));
      }
      RootCoords ea = coords_diff(rs_.root(eps), rs_.root(a));
      int ea_idx = rs_.root_index(ea);
      if (ea_idx >= 0) {
        acc += Rational(n_lookup(rs_, n_, rs_.negative_of(a), eps)) *
               Rational(n_lookup(rs_, n_, ea_idx, del));
      }
      Rational v = Rational(rs_.d_of_root(g)) / Rational(rs_.d_of_root(b)) *
                   acc / Rational(Integer(p + 1));
      if (!is_integer(v) || v == 0) {
        throw InternalError("special-pair reduction failed");
      }
      n_[{a, b}] = v.get_num();
      n_[{b, a}] = -v.get_num();
    }
  }
  // Everything else by reduction.
  for (int a = 0; a < rs_.num_roots(); ++a) {
    for (int b = 0; b < rs_.num_roots(); ++b) {
      if (b == a || b == rs_.negative_of(a)) continue;
      if (rs_.root_index(coords_sum(rs_.root(a), rs_.root(b))) < 0) continue;
      n_lookup(rs_, n_, a, b);
    }
  }
}

Integer ChevalleyBasis::structure_n(int root_a, int root_b) const {
  auto it = n_.find({root_a, root_b});
  if (it == n_.end()) {
    throw InputError("structure constant requires the sum to be a root");
  }
  return it->second;
}

void ChevalleyBasis::fill_bracket_table() {
  const int l = rank();
  const int n = dim();
  table_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < rs_.num_roots(); ++k) {
      int pairing = rs_.coroot_pairings(k)[i];
      if (pairing == 0) continue;
      table_[i][l + k] = {{l + k, Rational(pairing)}};
      table_[l + k][i] = {{l + k, Rational(-pairing)}};
    }
  }
  for (int a = 0; a < rs_.num_roots(); ++a) {
    for (int b = 0; b < rs_.num_roots(); ++b) {
      if (b == a) continue;
      if (b == rs_.negative_of(a)) {
        auto c = rs_.coroot_coords(a);
        for (int j = 0; j < l; ++j) {
          if (c[j] != 0) table_[l + a][l + b].push_back({j, Rational(c[j])});
        }
        continue;
      }
      int s = rs_.root_index(coords_sum(rs_.root(a), rs_.root(b)));
      if (s >= 0) table_[l + a][l + b] = {{l + s, Rational(n_.at({a, b}))}};
    }
  }
}

const std::vector<std::pair<int, Rational>>& ChevalleyBasis::bracket_table(
    int bi, int bj) const {
  return table_.at(bi).at(bj);
}

void ChevalleyBasis::verify_jacobi() const {
  const int n = dim();
  std::vector<Rational> acc(n);
  auto add_nested = [&](int i, int j, int k, int sign) {
    for (const auto& [m, c] : table_[i][j]) {
      for (const auto& [q, c2] : table_[m][k]) acc[q] += Rational(sign) * c * c2;
    }
  };
  // Antisymmetry of the table itself.
  for (int i = 0; i < n; ++i) {
    if (!table_[i][i].empty()) throw InternalError("nonzero self-bracket");
    for (int j = 0; j < n; ++j) {
      std::fill(acc.begin(), acc.end(), Rational(0));
      for (const auto& [m, c] : table_[i][j]) acc[m] += c;
      for (const auto& [m, c] : table_[j][i]) acc[m] += c;
      for (const auto& v : acc) {
        if (v != 0) throw InternalError("bracket table is not antisymmetric");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        add_nested(i, j, k, 1);
        add_nested(j, k, i, 1);
        add_nested(k, i, j, 1);
        for (const auto& v : acc) {
          if (v != 0) throw InternalError("Jacobi identity fails");
        }
      }
    }
  }
}

void ChevalleyBasis::build_defining_rep() {
  const auto& comps = cartan().components();
  if (comps.size() != 1 || comps[0].letter != 'A') return;
  const int l = rank();
  const int nn = l + 1;
  const auto& vert = comps[0].vertices;

  auto zero = QMat(nn, QVec(nn, Rational(0)));
  rho_.assign(dim(), zero);
  for (int k = 0; k < l; ++k) {
    int i = vert[k];
    rho_[h_index(i)][k][k] = 1;
    rho_[h_index(i)][k + 1][k + 1] = -1;
    int s = rs_.simple_root_index(i);
    rho_[v_index(s)][k][k + 1] = 1;
    rho_[v_index(rs_.negative_of(s))][k + 1][k] = 1;
  }
  const int np = rs_.num_positive();
  for (int g = 0; g < np; ++g) {
    if (rs_.height(g) < 2) continue;
    // The first special pair in index order is the extraspecial one.
    int eps = -1, del = -1;
    for (int a = 0; a < np && eps < 0; ++a) {
      for (int b = a + 1; b < np; ++b) {
        if (coords_sum(rs_.root(a), rs_.root(b)) == rs_.root(g)) {
          eps = a;
          del = b;
          break;
        }
      }
    }
    if (eps < 0) throw InternalError("composite positive root with no special pair");
    Rational n_pos(n_.at({eps, del}));
    QMat com = q_commutator(rho_[v_index(eps)], rho_[v_index(del)]);
    for (auto& row : com) {
      for (auto& x : row) x /= n_pos;
    }
    rho_[v_index(g)] = com;

    int ge = rs_.negative_of(g);
    QMat comn = q_commutator(rho_[v_index(rs_.negative_of(eps))],
                             rho_[v_index(rs_.negative_of(del))]);
    for (auto& row : comn) {
      for (auto& x : row) x /= -n_pos;
    }
    rho_[v_index(ge)] = comn;
  }

  // Certify the representation on all basis pairs.
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      QMat lhs = q_commutator(rho_[i], rho_[j]);
      for (const auto& [m, c] : table_[i][j]) {
        for (int r = 0; r < nn; ++r) {
          for (int col = 0; col < nn; ++col) lhs[r][col] -= c * rho_[m][r][col];
        }
      }
      for (const auto& row : lhs) {
        for (const auto& x : row) {
          if (x != 0) throw InternalError("defining representation is not a homomorphism");
        }
      }
    }
  }

  slots_.assign(rs_.num_roots(), EntrySlot{-1, -1, Rational(0)});
  for (int k = 0; k < rs_.num_roots(); ++k) {
    const QMat& m = rho_[v_index(k)];
    for (int r = 0; r < nn; ++r) {
      for (int c = 0; c < nn; ++c) {
        if (m[r][c] == 0) continue;
        if (slots_[k].row >= 0) throw InternalError("root image is not a single entry");
        slots_[k] = EntrySlot{r, c, m[r][c]};
      }
    }
    if (slots_[k].row < 0) throw InternalError("root image vanished");
  }
}

const std::vector<QMat>& ChevalleyBasis::defining_rep() const {
  if (rho_.empty()) {
    throw InputError("defining representation requires a single type-A component");
  }
  return rho_;
}

const ChevalleyBasis::EntrySlot& ChevalleyBasis::defining_slot(int root_idx) const {
  if (slots_.empty()) {
    throw InputError("defining representation requires a single type-A component");
  }
  return slots_.at(root_idx);
}

std::string ChevalleyBasis::basis_label(int bi) const {
  if (bi < rank()) return "h" + std::to_string(bi + 1);
  int r = root_of(bi);
  if (rs_.is_positive(r)) return "e(" + rs_.root_label(r) + ")";
  return "f(" + rs_.root_label(rs_.negative_of(r)) + ")";
}

LieElement::LieElement(ChevalleyBasis::Ptr basis, RingSpec::Ptr spec)
    : basis_(std::move(basis)), spec_(std::move(spec)),
      coords_(basis_->dim(), RingElement::zero(spec_)) {}

void LieElement::set_coeff(int bi, RingElement c) {
  if (!c.spec()->same_ring(*spec_)) {
    throw InputError("coefficient belongs to a different ring");
  }
  coords_.at(bi) = std::move(c);
}

const RingElement& LieElement::root_coeff(int root_idx) const {
  return coords_.at(basis_->v_index(root_idx));
}

bool LieElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void LieElement::check_compatible(const LieElement& o) const {
  if (basis_.get() != o.basis_.get()) {
    throw InputError("elements live in different algebras");
  }
  if (!spec_->same_ring(*o.spec_)) {
    throw InputError("elements live over different rings");
  }
}

bool LieElement::operator==(const LieElement& o) const {
  check_compatible(o);
  return coords_ == o.coords_;
}

LieElement LieElement::operator+(const LieElement& o) const {
  check_compatible(o);
  LieElement out(basis_, spec_);
  for (int i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] + o.coords_[i];
  return out;
}

LieElement LieElement::operator-(const LieElement& o) const {
  check_compatible(o);
  LieElement out(basis_, spec_);
  for (int i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] - o.coords_[i];
  return out;
}

LieElement LieElement::operator-() const { return scaled(Rational(-1)); }

LieElement LieElement::scaled(const RingElement& c) const {
  LieElement out(basis_, spec_);
  for (int i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] * c;
  return out;
}

LieElement LieElement::scaled(const Rational& c) const {
  LieElement out(basis_, spec_);
  for (int i = 0; i < dim(); ++i) out.coords_[i] = coords_[i].scaled(c);
  return out;
}

std::string LieElement::to_string() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coords_[i].to_string() + ")*" + basis_->basis_label(i);
  }
  return out.empty() ? "0" : out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.basis().get() != y.basis().get() || !x.spec()->same_ring(*y.spec())) {
    throw InputError("bracket arguments are incompatible");
  }
  const auto& basis = *x.basis();
  LieElement out(x.basis(), x.spec());
  std::vector<RingElement> acc(basis.dim(), RingElement::zero(x.spec()));
  for (int i = 0; i < basis.dim(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int j = 0; j < basis.dim(); ++j) {
      if (y.coeff(j).is_zero()) continue;
      const auto& entries = basis.bracket_table(i, j);
      if (entries.empty()) continue;
      RingElement prod = x.coeff(i) * y.coeff(j);
      for (const auto& [q, c] : entries) acc[q] = acc[q] + prod.scaled(c);
    }
  }
  for (int q = 0; q < basis.dim(); ++q) out.set_coeff(q, acc[q]);
  return out;
}

RingMatrix ad_matrix(const LieElement& x) {
  const auto& basis = *x.basis();
  const int n = basis.dim();
  RingMatrix m(x.spec(), n, n);
  for (int i = 0; i < n; ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      for (const auto& [q, c] : basis.bracket_table(i, j)) {
        m.at(q, j) = m.at(q, j) + x.coeff(i).scaled(c);
      }
    }
  }
  return m;
}

RingElement killing_form(const LieElement& x, const LieElement& y) {
  RingMatrix ax = ad_matrix(x);
  RingMatrix ay = ad_matrix(y);
  RingElement tr = RingElement::zero(x.spec());
  for (int i = 0; i < ax.rows(); ++i) {
    for (int j = 0; j < ax.cols(); ++j) tr = tr + ax.at(i, j) * ay.at(j, i);
  }
  return tr;
}

RingMatrix exp_ad(const LieElement& x) {
  RingMatrix a = ad_matrix(x);
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
  if (nil < 0) throw InputError("ad of the element is not nilpotent");
  RingMatrix out = RingMatrix::identity(x.spec(), n);
  RingMatrix term = RingMatrix::identity(x.spec(), n);
  Rational factorial(1);
  for (int k = 1; k < nil; ++k) {
    term = term * a;
    factorial *= k;
    RingMatrix scaled = term;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        scaled.at(i, j) = term.at(i, j).scaled(Rational(1) / factorial);
      }
    }
    out = out + scaled;
  }
  return out;
}

}  // namespace madlie
