#pragma once

// Slow, independent reference computations used to check the library.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "geodouble/doubling.hpp"
#include "geodouble/freegroups.hpp"
#include "geodouble/isometries.hpp"
#include "geodouble/presentations.hpp"
#include "geodouble/triangulation.hpp"

namespace oracle {

using namespace geodouble;
using BigInt = boost::multiprecision::cpp_int;

// Orientability by trying every assignment of signs to tetrahedra.
inline bool orientable_brute_force(const GluingScheme& s) {
  const int n = s.tet_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& p : s.pairings()) {
      const int sa = (mask >> p.side_a.tet) & 1 ? 1 : -1;
      const int sb = (mask >> p.side_b.tet) & 1 ? 1 : -1;
      if ((p.odd() ? sa : -sa) != sb) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Edge classes as a partition of the 6n tetrahedron edges, found by flooding
// across pairings with vertex maps (no union-find).
inline std::vector<std::set<int>> edge_partition(const GluingScheme& s) {
  const int n = s.tet_count();
  std::vector<std::vector<int>> adj(6 * n);
  for (const auto& p : s.pairings()) {
    const auto vm = p.vertex_map();
    for (int label = 1; label <= 6; ++label) {
      const auto e = tetra::kEdges[label - 1];
      if (e.tail == p.side_a.face_index() || e.head == p.side_a.face_index()) continue;
      const int image = tetra::edge_between(vm[e.tail], vm[e.head]);
      adj[6 * p.side_a.tet + label - 1].push_back(6 * p.side_b.tet + image - 1);
      adj[6 * p.side_b.tet + image - 1].push_back(6 * p.side_a.tet + label - 1);
    }
  }
  std::vector<bool> seen(6 * n, false);
  std::vector<std::set<int>> out;
  for (int i = 0; i < 6 * n; ++i) {
    if (seen[i]) continue;
    std::set<int> cls;
    std::vector<int> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      cls.insert(u);
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    out.push_back(cls);
  }
  return out;
}

// Closed scheme on `tets` tetrahedra: faces paired at random, each face
// listed in a random edge order, random cyclic edge_map.
template <class Rng>
GluingScheme random_closed_scheme(int tets, Rng& rng) {
  std::vector<std::pair<int, int>> slots;
  for (int t = 0; t < tets; ++t)
    for (int f = 0; f < 4; ++f) slots.emplace_back(t, f);
  std::shuffle(slots.begin(), slots.end(), rng);
  auto label = [&](int f) {
    auto e = tetra::kFaces[f];
    std::shuffle(e.begin(), e.end(), rng);
    return FaceLabel{e};
  };
  const std::array<std::array<int, 3>, 3> rotations{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  std::uniform_int_distribution<int> rot(0, 2);
  std::vector<FacePairing> pairings;
  for (std::size_t i = 0; i < slots.size(); i += 2)
    pairings.push_back({{slots[i].first, label(slots[i].second)},
                        {slots[i + 1].first, label(slots[i + 1].second)},
                        rotations[rot(rng)]});
  return GluingScheme(tets, std::move(pairings));
}

// Free reduction by repeatedly scanning for a cancelling pair.
inline std::vector<int> naive_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

// All reduced products of at most max_factors generators or their inverses.
inline std::set<Word> bounded_subgroup_ball(const std::vector<Word>& gens, int max_factors) {
  std::vector<Word> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  std::set<Word> ball{Word{}};
  std::vector<Word> frontier{Word{}};
  for (int step = 0; step < max_factors; ++step) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& x : letters) {
        Word y = w * x;
        if (ball.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return ball;
}

// A transitive action of F_k on {0..n-1} by random permutations; H is the
// stabiliser of 0. Resampled until transitive.
struct PermutationAction {
  int rank = 0;
  int degree = 0;
  std::vector<std::vector<int>> perm;  // perm[x-1][i]

  [[nodiscard]] int act(int point, int letter) const {
    const auto& p = perm[std::abs(letter) - 1];
    if (letter > 0) return p[point];
    return static_cast<int>(std::find(p.begin(), p.end(), point) - p.begin());
  }
  [[nodiscard]] int act(int point, const Word& w) const {
    for (int x : w.letters()) point = act(point, x);
    return point;
  }
  [[nodiscard]] bool stabilises_base(const Word& w) const { return act(0, w) == 0; }

  template <class Rng>
  static PermutationAction random(int rank, int degree, Rng& rng) {
    PermutationAction a{rank, degree, {}};
    while (true) {
      a.perm.assign(rank, std::vector<int>(degree));
      for (auto& p : a.perm) {
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
      }
      if (a.orbit_size() == degree) return a;
    }
  }

  [[nodiscard]] int orbit_size() const {
    std::vector<bool> seen(degree, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      ++count;
      for (int x = 1; x <= rank; ++x)
        for (int l : {x, -x})
          if (!seen[act(u, l)]) {
            seen[act(u, l)] = true;
            q.push(act(u, l));
          }
    }
    return count;
  }

  // Schreier generators of the point stabiliser from a BFS transversal.
  [[nodiscard]] std::vector<Word> stabiliser_generators() const {
    std::vector<std::optional<Word>> tree(degree);
    tree[0] = Word{};
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int x = 1; x <= rank; ++x)
        for (int l : {x, -x}) {
          const int v = act(u, l);
          if (!tree[v]) {
            tree[v] = *tree[u] * Word{l};
            q.push(v);
          }
        }
    }
    std::vector<Word> gens;
    for (int u = 0; u < degree; ++u)
      for (int x = 1; x <= rank; ++x) {
        Word g = *tree[u] * Word{x} * inverse(*tree[act(u, x)]);
        if (!g.empty()) gens.push_back(g);
      }
    return gens;
  }
};

// Normal form computed right to left: H-parts are pushed to the head and the
// syllables are right-coset representatives (H r). w is in H exactly when no
// syllable survives; the head is then the element.
struct LeftwardForm {
  Word head;
  std::vector<Syllable> syllables;
};

inline LeftwardForm leftward_normal_form(const Double& d, const DoubleWord& w) {
  LeftwardForm out;
  std::vector<Syllable> stack;  // rightmost first
  Word carry;
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    Word x = it->word * carry;
    if (!stack.empty() && stack.back().side == it->side) {
      x = x * stack.back().word;
      stack.pop_back();
    }
    if (d.in_h(x)) {
      carry = x;
      continue;
    }
    Word rep = coset_representative(d.amalgamated(), x);
    carry = x * inverse(rep);
    stack.push_back({it->side, std::move(rep)});
  }
  out.head = carry;
  out.syllables.assign(stack.rbegin(), stack.rend());
  return out;
}

// Determinant by fraction-free elimination.
inline BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors.
inline std::vector<BigInt> invariant_factors_by_minors(const IntegerMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        g = boost::multiprecision::gcd(g, abs(determinant(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rank over Q by Gaussian elimination on exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<boost::rational<std::int64_t>>> a) {
  using Q = boost::rational<std::int64_t>;
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == Q(0)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == Q(0)) continue;
      const auto f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// b1 of the glued 2-complex (vertex classes, edge classes, one 2-cell per pairing).
inline std::size_t chain_complex_b1(const GluedComplex& c) {
  using Q = boost::rational<std::int64_t>;
  const std::size_t v = static_cast<std::size_t>(c.vertex_class_count);
  const std::size_t e = c.edge_classes.size();
  const std::size_t f = c.scheme.pairings().size();
  std::vector<std::vector<Q>> d1(v, std::vector<Q>(e));
  for (std::size_t k = 0; k < e; ++k) {
    const auto& m = c.edge_classes[k].members.front();
    const auto& te = tetra::kEdges[m.edge - 1];
    d1[c.vertex_class(m.tet, te.head)][k] += 1;
    d1[c.vertex_class(m.tet, te.tail)][k] -= 1;
  }
  std::vector<std::vector<Q>> d2(e, std::vector<Q>(f));
  for (std::size_t i = 0; i < f; ++i) {
    const auto& p = c.scheme.pairings()[i];
    const int t = p.side_a.tet;
    const auto& es = p.side_a.face.edges;
    for (int j = 0; j < 3; ++j) {
      const int from = tetra::shared_vertex(es[(j + 2) % 3], es[j]);
      const bool forward = (tetra::kEdges[es[j] - 1].tail == from) != c.edge_against_class(t, es[j]);
      d2[c.edge_class(t, es[j])][i] += forward ? 1 : -1;
    }
  }
  return e - rational_rank(d1) - rational_rank(d2);
}

// Fixed points of a Moebius map from eigenvectors (z, 1) of its matrix.
inline std::vector<BoundaryPoint> eigen_fixed_points(const Mat2& m) {
  const Complex t = m.trace();
  const Complex disc = std::sqrt(t * t - Complex(4) * m.det());
  std::vector<BoundaryPoint> out;
  for (const Complex lambda : {(t + disc) / Complex(2), (t - disc) / Complex(2)}) {
    // (a - lambda) z + b = 0 or c z + (d - lambda) = 0; use the better-conditioned row.
    const Complex r1 = m.a - lambda, r2 = m.d - lambda;
    if (std::abs(m.c) >= std::abs(r1) && std::abs(m.c) > 1e-12) out.push_back(-(r2) / m.c);
    else if (std::abs(r1) > 1e-12) out.push_back(-m.b / r1);
    else out.push_back(std::nullopt);
  }
  return out;
}

}  // namespace oracle
