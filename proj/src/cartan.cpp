#include "madlie/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "madlie/errors.hpp"
#include "madlie/qlinalg.hpp"

namespace madlie {

namespace {

std::vector<std::vector<int>> component_partition(
    const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && a[u][v] != 0) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries)
    : a_(std::move(entries)) {
  const int n = static_cast<int>(a_.size());
  if (n == 0) throw InputError("Cartan matrix is empty");
  for (const auto& row : a_) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("Cartan matrix is not square");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (a_[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) {
        throw InputError("Cartan matrix off-diagonal entries must be <= 0");
      }
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) {
        throw InputError("Cartan matrix zero pattern must be symmetric");
      }
    }
  }

  // Symmetrizer by propagation along edges; a failure to propagate
  // consistently means the matrix is not symmetrizable.
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : component_partition(a_)) {
    d[comp[0]] = 1;
    std::deque<int> queue{comp[0]};
    std::vector<bool> fixed(n, false);
    fixed[comp[0]] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : comp) {
        if (v == u || a_[u][v] == 0) continue;
        Rational expected = d[u] * Rational(a_[u][v]) / Rational(a_[v][u]);
        if (!fixed[v]) {
          d[v] = expected;
          fixed[v] = true;
          queue.push_back(v);
        } else if (d[v] != expected) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    // Rescale the component to coprime positive integers.
    Integer lcm = 1;
    for (int v : comp) {
      Integer den = d[v].get_den();
      Integer g = gcd(lcm, den);
      lcm = lcm / g * den;
    }
    Integer g = 0;
    for (int v : comp) {
      d[v] *= Rational(lcm);
      g = gcd(g, d[v].get_num());
    }
    for (int v : comp) d[v] /= Rational(g);
  }
  d_.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integer(d[i]) || d[i] <= 0) {
      throw InternalError("symmetrizer normalization failed");
    }
    d_.push_back(d[i].get_num());
  }

  // Finite type: diag(d) * a is symmetric; require it positive definite.
  QMat s(n, QVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s[i][j] = Rational(d_[i]) * Rational(a_[i][j]);
  }
  for (int k = 1; k <= n; ++k) {
    QMat minor(k, QVec(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) minor[i][j] = s[i][j];
    }
    if (q_det(minor) <= 0) throw InputError("Cartan matrix is not of finite type");
  }

  classify();
}

void CartanMatrix::classify() {
  for (const auto& comp : component_partition(a_)) {
    const int n = static_cast<int>(comp.size());
    CartanComponent out;
    out.rank = n;
    if (n == 1) {
      out.letter = 'A';
      out.vertices = comp;
      comps_.push_back(std::move(out));
      continue;
    }

    auto neighbors = [&](int u) {
      std::vector<int> res;
      for (int v : comp) {
        if (v != u && a_[u][v] != 0) res.push_back(v);
      }
      return res;
    };
    auto mult = [&](int u, int v) { return a_[u][v] * a_[v][u]; };

    int max_mult = 1;
    int mu = -1, mv = -1;  // the unique edge of multiplicity > 1, if any
    int branch_vertex = -1;
    for (int u : comp) {
      if (static_cast<int>(neighbors(u).size()) > 2) branch_vertex = u;
      for (int v : comp) {
        if (v <= u || a_[u][v] == 0) continue;
        if (mult(u, v) > max_mult) {
          max_mult = mult(u, v);
          mu = u;
          mv = v;
        }
      }
    }

    // Walks from an endpoint; positive definiteness rules out cycles, so
    // every component is a tree and these traversals are well defined.
    auto walk_from = [&](int start, int avoid) {
      std::vector<int> path{start};
      int prev = avoid, cur = start;
      for (;;) {
        int next = -1;
        for (int v : neighbors(cur)) {
          if (v != prev) next = v;
        }
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      return path;
    };

    if (max_mult == 3) {
      if (n != 2) throw InternalError("triple edge in a rank > 2 component");
      out.letter = 'G';
      // Canonical G2 has the short root first: its row carries the -3.
      out.vertices = (a_[mu][mv] == -3) ? std::vector<int>{mu, mv}
                                        : std::vector<int>{mv, mu};
    } else if (max_mult == 2) {
      // The short vertex of the double edge is the one whose row holds -2.
      int shrt = (a_[mu][mv] == -2) ? mu : mv;
      int lng = (shrt == mu) ? mv : mu;
      if (n == 2) {
        out.letter = 'B';
        out.vertices = {lng, shrt};
      } else {
        bool shrt_terminal = neighbors(shrt).size() == 1;
        bool lng_terminal = neighbors(lng).size() == 1;
        if (shrt_terminal) {
          out.letter = 'B';
          auto tail = walk_from(lng, shrt);  // lng first, far endpoint last
          std::reverse(tail.begin(), tail.end());
          tail.push_back(shrt);
          out.vertices = tail;
        } else if (lng_terminal) {
          out.letter = 'C';
          auto tail = walk_from(shrt, lng);
          std::reverse(tail.begin(), tail.end());
          tail.push_back(lng);
          out.vertices = tail;
        } else {
          if (n != 4) throw InternalError("interior double edge outside F4");
          out.letter = 'F';
          auto left = walk_from(lng, shrt);   // lng, then the long endpoint
          auto right = walk_from(shrt, lng);  // shrt, then the short endpoint
          out.vertices = {left[1], left[0], right[0], right[1]};
        }
      }
    } else if (branch_vertex >= 0) {
      std::vector<std::vector<int>> branches;
      for (int v : neighbors(branch_vertex)) {
        branches.push_back(walk_from(v, branch_vertex));
      }
      if (branches.size() != 3) {
        throw InternalError("branch vertex of degree != 3 in finite type");
      }
      std::sort(branches.begin(), branches.end(),
                [](const auto& x, const auto& y) {
                  return x.size() != y.size() ? x.size() < y.size()
                                              : x[0] < y[0];
                });
      const auto l1 = branches[0].size(), l2 = branches[1].size(),
                 l3 = branches[2].size();
      if (l1 != 1) throw InternalError("star with no length-1 branch");
      if (l2 == 1) {
        out.letter = 'D';
        // Long branch from its tip down to the center, then the two tips.
        auto& lb = branches[2];
        out.vertices.assign(lb.rbegin(), lb.rend());
        out.vertices.push_back(branch_vertex);
        out.vertices.push_back(branches[0][0]);
        out.vertices.push_back(branches[1][0]);
      } else if (l2 == 2 && l3 >= 2 && l3 <= 4) {
        out.letter = 'E';
        auto& mid = branches[1];
        out.vertices = {mid[1], branches[0][0], mid[0], branch_vertex};
        for (int v : branches[2]) out.vertices.push_back(v);
      } else {
        throw InternalError("star branch profile outside D/E");
      }
    } else {
      out.letter = 'A';
      int endpoint = -1;
      for (int u : comp) {
        if (neighbors(u).size() == 1 && (endpoint < 0 || u < endpoint)) {
          endpoint = u;
        }
      }
      out.vertices = walk_from(endpoint, -1);
    }
    comps_.push_back(std::move(out));
  }

  std::sort(comps_.begin(), comps_.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
}

std::string CartanMatrix::type_name() const {
  std::string name;
  for (const auto& c : comps_) {
    if (!name.empty()) name += "x";
    name += c.letter;
    name += std::to_string(c.rank);
  }
  return name;
}

CartanMatrix CartanMatrix::of_type(char letter, int rank) {
  auto chain = [](int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (letter) {
    case 'A': {
      if (rank < 1) throw InputError("type A needs rank >= 1");
      return CartanMatrix(chain(rank));
    }
    case 'B': {
      if (rank < 2) throw InputError("type B needs rank >= 2");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;
      return CartanMatrix(a);
    }
    case 'C': {
      if (rank < 2) throw InputError("type C needs rank >= 2");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;
      return CartanMatrix(a);
    }
    case 'D': {
      if (rank < 4) throw InputError("type D needs rank >= 4");
      auto a = chain(rank - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(std::vector<int>(rank, 0));
      a[rank - 1][rank - 1] = 2;
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      return CartanMatrix(a);
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw InputError("type E needs rank 6..8");
      std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto join = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      join(0, 2);
      join(1, 3);
      join(2, 3);
      for (int i = 3; i + 1 < rank; ++i) join(i, i + 1);
      return CartanMatrix(a);
    }
    case 'F': {
      if (rank != 4) throw InputError("type F needs rank 4");
      auto a = chain(4);
      a[2][1] = -2;
      return CartanMatrix(a);
    }
    case 'G': {
      if (rank != 2) throw InputError("type G needs rank 2");
      return CartanMatrix({{2, -3}, {-1, 2}});
    }
    default:
      throw InputError("unknown Cartan type letter");
  }
}

}  // namespace madlie
