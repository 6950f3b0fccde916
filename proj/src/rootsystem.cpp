#include "madlie/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "madlie/errors.hpp"

namespace madlie {

namespace {

int coords_height(const RootCoords& m) {
  int h = 0;
  for (int x : m) h += x;
  return h;
}

bool coords_nonnegative(const RootCoords& m) {
  for (int x : m) {
    if (x < 0) return false;
  }
  return true;
}

}  // namespace

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  const int n = rank();
  auto reflect_coords = [&](const RootCoords& m, int i) {
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += cartan_.at(i, j) * m[j];
    RootCoords r = m;
    r[i] -= pairing;
    return r;
  };

  // Closure of the simple roots under the simple reflections is the whole
  // finite system.
  std::set<RootCoords> seen;
  std::deque<RootCoords> queue;
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords m = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootCoords r = reflect_coords(m, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  std::vector<RootCoords> positives;
  for (const auto& m : seen) {
    if (coords_nonnegative(m)) positives.push_back(m);
  }
  if (2 * positives.size() != seen.size()) {
    throw InternalError("root enumeration produced a sign-unbalanced set");
  }
  std::sort(positives.begin(), positives.end(),
            [](const RootCoords& x, const RootCoords& y) {
              int hx = coords_height(x), hy = coords_height(y);
              return hx != hy ? hx < hy : x > y;
            });

  roots_ = positives;
  for (const auto& m : positives) {
    RootCoords neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    roots_.push_back(neg);
  }
  for (int k = 0; k < num_roots(); ++k) index_[roots_[k]] = k;

  simple_index_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    simple_index_[i] = index_.at(e);
  }

  QMat a(n, QVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(cartan_.at(i, j));
  }
  auto inv = q_inverse(a);
  if (!inv) throw InternalError("finite-type Cartan matrix must be invertible");
  cartan_inverse_ = *inv;
}

int RootSystem::root_index(const RootCoords& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  const int np = num_positive();
  return idx < np ? idx + np : idx - np;
}

int RootSystem::height(int idx) const { return coords_height(root(idx)); }

std::optional<int> RootSystem::sum_index(int i, int j) const {
  const RootCoords& a = root(i);
  const RootCoords& b = root(j);
  RootCoords s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
  int idx = root_index(s);
  if (idx < 0) return std::nullopt;
  return idx;
}

std::vector<int> RootSystem::coroot_pairings(int idx) const {
  const RootCoords& m = root(idx);
  std::vector<int> p(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) p[i] += cartan_.at(i, j) * m[j];
  }
  return p;
}

int RootSystem::reflect(int idx, int i) const {
  RootCoords m = root(idx);
  m[i] -= coroot_pairings(idx)[i];
  int r = root_index(m);
  if (r < 0) throw InternalError("reflection left the root set");
  return r;
}

Integer RootSystem::d_of_root(int idx) const {
  const RootCoords& m = root(idx);
  const auto& d = cartan_.symmetrizer();
  Rational q(0);
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      q += Rational(m[i]) * Rational(m[j]) * Rational(d[i]) *
           Rational(cartan_.at(i, j));
    }
  }
  q /= 2;
  if (!is_integer(q) || q <= 0) throw InternalError("root length is not a positive integer");
  return q.get_num();
}

std::vector<Integer> RootSystem::coroot_coords(int idx) const {
  const RootCoords& m = root(idx);
  const auto& d = cartan_.symmetrizer();
  Rational dm(d_of_root(idx));
  std::vector<Integer> c(rank());
  for (int j = 0; j < rank(); ++j) {
    Rational q = Rational(m[j]) * Rational(d[j]) / dm;
    if (!is_integer(q)) throw InternalError("coroot coordinates must be integral");
    c[j] = q.get_num();
  }
  return c;
}

std::vector<Rational> RootSystem::coweight_coords(
    const std::vector<Rational>& c) const {
  if (static_cast<int>(c.size()) != rank()) {
    throw InputError("coroot vector has the wrong length");
  }
  std::vector<Rational> w(rank(), Rational(0));
  for (int j = 0; j < rank(); ++j) {
    for (int i = 0; i < rank(); ++i) w[j] += Rational(cartan_.at(i, j)) * c[i];
  }
  return w;
}

std::vector<RingElement> RootSystem::coweight_coords(
    const std::vector<RingElement>& c) const {
  if (static_cast<int>(c.size()) != rank()) {
    throw InputError("coroot vector has the wrong length");
  }
  std::vector<RingElement> w;
  w.reserve(rank());
  for (int j = 0; j < rank(); ++j) {
    RingElement s = RingElement::zero(c[0].spec());
    for (int i = 0; i < rank(); ++i) s = s + c[i].scaled(Rational(cartan_.at(i, j)));
    w.push_back(s);
  }
  return w;
}

std::vector<Rational> RootSystem::fundamental_coweight(int i) const {
  return cartan_inverse_.at(i);
}

Rational RootSystem::pairing(int idx, const std::vector<Rational>& w) const {
  if (static_cast<int>(w.size()) != rank()) {
    throw InputError("coweight vector has the wrong length");
  }
  const RootCoords& m = root(idx);
  Rational s(0);
  for (int i = 0; i < rank(); ++i) s += Rational(m[i]) * w[i];
  return s;
}

RingElement RootSystem::pairing(int idx, const std::vector<RingElement>& w) const {
  if (static_cast<int>(w.size()) != rank()) {
    throw InputError("coweight vector has the wrong length");
  }
  const RootCoords& m = root(idx);
  RingElement s = RingElement::zero(w[0].spec());
  for (int i = 0; i < rank(); ++i) s = s + w[i].scaled(Rational(m[i]));
  return s;
}

std::string RootSystem::root_label(int idx) const {
  const RootCoords& m = root(idx);
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (m[i] == 0) continue;
    if (m[i] < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    int k = std::abs(m[i]);
    if (k != 1) out += std::to_string(k) + "*";
    out += "alpha" + std::to_string(i + 1);
  }
  return out;
}

int RootSystem::parse_root_label(const std::string& label) const {
  RootCoords m(rank(), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("bad root label '" + label + "': " + what);
  };
  if (label.empty()) fail("empty");
  bool first = true;
  while (pos < label.size()) {
    int sign = 1;
    if (label[pos] == '+' || label[pos] == '-') {
      sign = label[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("terms must be separated by + or -");
    }
    first = false;
    int coeff = 1;
    if (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
      std::size_t start = pos;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
      coeff = std::stoi(label.substr(start, pos - start));
      if (pos >= label.size() || label[pos] != '*') fail("coefficient must be followed by *");
      ++pos;
    }
    if (label.compare(pos, 5, "alpha") != 0) fail("expected 'alpha'");
    pos += 5;
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) fail("missing simple-root index");
    int i = std::stoi(label.substr(start, pos - start));
    if (i < 1 || i > rank()) fail("simple-root index out of range");
    m[i - 1] += sign * coeff;
  }
  int idx = root_index(m);
  if (idx < 0) fail("not a root of this system");
  return idx;
}

SubsystemData subsystem_base(const RootSystem& rs, const std::vector<Rational>& w) {
  SubsystemData out;
  std::vector<int> zero_pos;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.pairing(k, w) == 0) zero_pos.push_back(k);
  }
  for (int k : zero_pos) out.zero_set.push_back(k);
  for (int k : zero_pos) out.zero_set.push_back(rs.negative_of(k));
  std::sort(out.zero_set.begin(), out.zero_set.end());

  // Indecomposables of the positive part: alpha with no beta, gamma in the
  // positive part summing to it.
  std::set<int> pos_set(zero_pos.begin(), zero_pos.end());
  for (int k : zero_pos) {
    bool decomposable = false;
    for (int b : zero_pos) {
      if (b == k) continue;
      RootCoords diff = rs.root(k);
      const RootCoords& mb = rs.root(b);
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mb[i];
      int d = rs.root_index(diff);
      if (d >= 0 && pos_set.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.base.push_back(k);
  }

  for (int k : out.base) {
    if (rs.height(k) != 1) out.base_is_simple = false;
  }
  if (out.base_is_simple) {
    for (int k : out.base) {
      const RootCoords& m = rs.root(k);
      for (int i = 0; i < rs.rank(); ++i) {
        if (m[i] == 1) out.I.push_back(i + 1);
      }
    }
    std::sort(out.I.begin(), out.I.end());
  }
  return out;
}

}  // namespace madlie
