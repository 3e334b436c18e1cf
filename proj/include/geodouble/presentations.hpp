#pragma once

// Finite presentations, integer homology via Smith normal form, and the rank
// arithmetic used to bound surface subgroups fixed by reflections.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "geodouble/freegroups.hpp"
#include "geodouble/triangulation.hpp"
#include "geodouble/union_find.hpp"

namespace geodouble {

using BigInt = boost::multiprecision::cpp_int;

/// <x_1..x_n | relators>, relators freely and cyclically reduced.
struct FinitePresentation {
  int generators = 0;
  std::vector<Word> relators;

  [[nodiscard]] std::string to_string() const {
    std::string out = "<";
    for (int i = 1; i <= generators; ++i) {
      if (i > 1) out += ",";
      out += Word{i}.to_string();
    }
    out += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : " ") + relators[i].to_string();
    return out + " >";
  }

  /// Cyclically reduces every relator and drops the trivial ones.
  [[nodiscard]] FinitePresentation normalized() const {
    FinitePresentation out{generators, {}};
    for (const auto& r : relators)
      if (Word c = cyclic_reduce(r); !c.empty()) out.relators.push_back(std::move(c));
    return out;
  }

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;
};

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Presentation of the fundamental group of the 2-skeleton: vertex classes and
/// edge classes form a graph, a spanning tree is collapsed, and every face
/// pairing contributes the boundary word of its 2-cell.
inline FinitePresentation presentation_from_complex(const GluedComplex& c) {
  if (!c.connected()) throw PresentationError("complex is disconnected");
  const int edge_classes = static_cast<int>(c.edge_classes.size());

  // Endpoints of each edge class in its own direction.
  std::vector<std::pair<int, int>> ends(edge_classes);
  for (int k = 0; k < edge_classes; ++k) {
    const auto& m = c.edge_classes[k].members.front();
    const auto& e = tetra::kEdges[m.edge - 1];
    ends[k] = {c.vertex_class(m.tet, e.tail), c.vertex_class(m.tet, e.head)};
  }
  UnionFind tree(c.vertex_class_count);
  std::vector<int> generator_of(edge_classes, 0);  // 0 = collapsed into the tree
  int generators = 0;
  for (int k = 0; k < edge_classes; ++k) {
    if (tree.unite(ends[k].first, ends[k].second)) continue;
    generator_of[k] = ++generators;
  }

  FinitePresentation p{generators, {}};
  for (const auto& pairing : c.scheme.pairings()) {
    const int t = pairing.side_a.tet;
    const auto& es = pairing.side_a.face.edges;
    std::vector<int> letters;
    for (int i = 0; i < 3; ++i) {
      const int label = es[i];
      const int from = tetra::shared_vertex(es[(i + 2) % 3], label);
      const int gen = generator_of[c.edge_class(t, label)];
      if (gen == 0) continue;
      const bool along_tet_edge = tetra::kEdges[label - 1].tail == from;
      const bool along_class = along_tet_edge != c.edge_against_class(t, label);
      letters.push_back(along_class ? gen : -gen);
    }
    p.relators.push_back(Word(std::move(letters)));
  }
  return p.normalized();
}

/// Presentation of the truncated manifold read off the dual spine: tetrahedra
/// are vertices, face pairings are edges (a spanning tree collapsed), and each
/// edge class bounds a 2-cell whose word lists the pairings crossed while
/// circling that edge.
inline FinitePresentation dual_presentation(const GluedComplex& c) {
  const auto& scheme = c.scheme;
  if (!scheme.closed()) throw PresentationError("dual presentation needs a closed scheme");
  if (!c.connected()) throw PresentationError("complex is disconnected");
  const int n = scheme.tet_count();
  const auto& pairings = scheme.pairings();

  // slot (tet, face) -> (pairing, whether the slot is side_a)
  std::vector<std::pair<int, bool>> at(4 * n);
  for (int p = 0; p < static_cast<int>(pairings.size()); ++p) {
    at[4 * pairings[p].side_a.tet + pairings[p].side_a.face_index()] = {p, true};
    at[4 * pairings[p].side_b.tet + pairings[p].side_b.face_index()] = {p, false};
  }
  UnionFind tree(n);
  std::vector<int> generator_of(pairings.size(), 0);
  int generators = 0;
  for (std::size_t p = 0; p < pairings.size(); ++p)
    if (!tree.unite(pairings[p].side_a.tet, pairings[p].side_b.tet)) generator_of[p] = ++generators;

  FinitePresentation out{generators, {}};
  for (const auto& cls : c.edge_classes) {
    const auto& first = cls.members.front();
    const int tet0 = first.tet;
    const int u0 = tetra::kEdges[first.edge - 1].tail;
    const int v0 = tetra::kEdges[first.edge - 1].head;
    // The two vertices off the edge; leave through the face opposite `exit`.
    int exit0 = -1;
    for (int w = 0; w < 4; ++w)
      if (w != u0 && w != v0) {
        exit0 = w;
        break;
      }
    int tet = tet0, u = u0, v = v0, exit = exit0;
    std::vector<int> letters;
    int crossings = 0;
    do {
      if (++crossings > 12 * n) throw PresentationError("edge cycle did not close");
      const auto [p, from_a] = at[4 * tet + exit];
      const auto& pairing = pairings[p];
      auto map = pairing.vertex_map();
      if (!from_a) {
        std::array<int, 4> inv{};
        for (int i = 0; i < 4; ++i) inv[map[i]] = i;
        map = inv;
      }
      if (generator_of[p] != 0) letters.push_back(from_a ? generator_of[p] : -generator_of[p]);
      const int entered = map[exit];
      tet = from_a ? pairing.side_b.tet : pairing.side_a.tet;
      u = map[u];
      v = map[v];
      for (int w = 0; w < 4; ++w)
        if (w != u && w != v && w != entered) exit = w;
    } while (!(tet == tet0 && exit == exit0 && ((u == u0 && v == v0) || (u == v0 && v == u0))));
    out.relators.push_back(Word(std::move(letters)));
  }
  return out.normalized();
}

namespace detail {

inline int occurrences(const Word& w, int gen) {
  int n = 0;
  for (int x : w.letters())
    if (std::abs(x) == gen) ++n;
  return n;
}

// Replaces generator `gen` by `image` and shifts higher generators down by one.
inline Word substitute(const Word& w, int gen, const Word& image) {
  std::vector<int> out;
  const Word image_inv = inverse(image);
  for (int x : w.letters()) {
    if (std::abs(x) == gen) {
      const auto& src = x > 0 ? image : image_inv;
      for (int y : src.letters()) out.push_back(y);
    } else {
      out.push_back(x);
    }
  }
  for (int& x : out)
    if (std::abs(x) > gen) x += x > 0 ? -1 : 1;
  return free_reduce(Word(std::move(out)));
}

// Smallest cyclic permutation of w or of w^-1; equal keys mean the relators
// define the same normal closure element up to conjugacy and inversion.
inline Word relator_key(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)}) {
    std::vector<int> l = v.letters();
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::rotate(l.begin(), l.begin() + 1, l.end());
      if (Word(l) < best) best = Word(l);
    }
  }
  return best;
}

}  // namespace detail

/// Relators longer than this are never used to eliminate a generator.
inline constexpr std::size_t kTietzeMaxEliminationLength = 16;

/// Reduces relators, drops trivial and duplicate ones, and eliminates a
/// generator whenever a relator (of length <= 16) contains it exactly once.
/// Never increases the generator count; the group is unchanged.
inline FinitePresentation tietze_simplify(const FinitePresentation& input) {
  FinitePresentation p = input.normalized();
  while (true) {
    // Drop duplicates up to cyclic permutation and inversion.
    std::map<Word, Word> unique;
    for (const auto& r : p.relators) unique.emplace(detail::relator_key(r), r);
    p.relators.clear();
    for (auto& [key, r] : unique) p.relators.push_back(r);
    std::stable_sort(p.relators.begin(), p.relators.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });

    std::optional<std::pair<std::size_t, int>> pick;
    for (std::size_t i = 0; i < p.relators.size() && !pick; ++i) {
      const Word& r = p.relators[i];
      if (r.size() > kTietzeMaxEliminationLength) continue;
      for (int g = 1; g <= p.generators; ++g)
        if (detail::occurrences(r, g) == 1) {
          pick = {i, g};
          break;
        }
    }
    if (!pick) return p;

    const auto [ri, gen] = *pick;
    // Rotate so the generator comes first: x^e u = 1, so x = u^-1 (e = 1) or x = u (e = -1).
    std::vector<int> l = p.relators[ri].letters();
    const auto pos = std::find_if(l.begin(), l.end(), [g = gen](int x) { return std::abs(x) == g; });
    std::rotate(l.begin(), pos, l.end());
    const int e = l.front();
    const Word rest(std::vector<int>(l.begin() + 1, l.end()));
    const Word image = e > 0 ? inverse(rest) : rest;

    FinitePresentation next{p.generators - 1, {}};
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (i != ri) next.relators.push_back(detail::substitute(p.relators[i], gen, image));
    p = next.normalized();
  }
}

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<BigInt> factors;

  [[nodiscard]] std::size_t rank() const { return factors.size(); }
  [[nodiscard]] std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& f : factors)
      if (f > 1) out.push_back(f);
    return out;
  }
};

/// Diagonalises with unimodular integer row and column operations.
inline SmithForm smith_normal_form(IntegerMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };

  SmithForm out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) best = {r, c};
      if (!best) return out;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const BigInt q = a(r, t) / a(t, t);
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const BigInt q = a(t, c) / a(t, t);
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; otherwise fold in the offending row.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < rows && !bad_row; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row) {
        for (std::size_t c = t; c < cols; ++c) a(t, c) += a(*bad_row, c);
        continue;
      }
      break;
    }
    out.factors.push_back(abs(a(t, t)));
  }
  return out;
}

/// Exponent-sum matrix: one row per relator, one column per generator.
inline IntegerMatrix relation_matrix(const FinitePresentation& p) {
  IntegerMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r].letters()) {
      if (std::abs(x) > p.generators) throw PresentationError("relator uses an undeclared generator");
      m(r, static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
    }
  return m;
}

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
};

inline Abelianization abelianization(const FinitePresentation& p) {
  const auto snf = smith_normal_form(relation_matrix(p));
  return {static_cast<std::size_t>(p.generators) - snf.rank(), snf.torsion()};
}

/// Rank over Q of the abelianised group.
inline std::size_t abelianization_rank(const FinitePresentation& p) { return abelianization(p).free_rank; }

using BoundRational = boost::rational<std::int64_t>;

class AuditError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subgroup of index n in G with rank rank_h forces rk(G) >= (rank_h + n - 1)/n.
inline BoundRational covering_rank_bound(std::int64_t rank_h, std::int64_t n) {
  if (n <= 0) throw AuditError("covering degree must be positive");
  if (rank_h < 0) throw AuditError("rank must be non-negative");
  return BoundRational(rank_h + n - 1, n);
}

/// Rank of the fundamental group of a compact surface of genus g with k
/// boundary circles (non-orientable genus = number of cross-caps).
inline std::int64_t surface_rank(std::int64_t g, std::int64_t k, bool orientable) {
  if (k < 0 || g < 0 || (!orientable && g < 1)) throw AuditError("invalid surface (g, k)");
  if (orientable) return k > 0 ? 2 * g + k - 1 : 2 * g;
  return k > 0 ? g + k - 1 : g;
}

/// Fixed surface S of an orientation-reversing involution, with k boundary
/// circles: m pairs share a torus cusp, l lie alone on their own cusp.
struct RankAuditCase {
  std::int64_t g = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t l = 0;
  bool orientable = true;
  bool separating = false;
  /// Orientable non-separating case only: both sides of S lie on one boundary
  /// component of the cut-open manifold.
  bool same_component = false;

  static RankAuditCase make(std::int64_t g, std::int64_t m, std::int64_t l, bool orientable, bool separating,
                            bool same_component) {
    return {g, 2 * m + l, m, l, orientable, separating, same_component};
  }

  /// Empty when consistent, otherwise the reason.
  [[nodiscard]] std::optional<std::string> inconsistency() const {
    if (g < 0 || m < 0 || l < 0) return "negative parameter";
    if (k != 2 * m + l) return "k must equal 2m + l";
    if (!orientable && g < 1) return "a non-orientable surface has genus >= 1";
    if (!orientable && separating) return "a non-orientable fixed surface is non-separating";
    if (separating && l != 0) return "a separating surface has l = 0";
    if (orientable && !separating && same_component && k == 0) return "same boundary component needs k > 0";
    if (orientable && !separating && !same_component && l != 0) return "different boundary components force l = 0";
    return std::nullopt;
  }
};

struct AuditStep {
  std::string label;      // short identifier of the step
  std::string statement;  // the inequality or identity, in words
  BoundRational value;    // numeric right-hand side
  bool strict = false;
  bool assumed = false;   // enters as a cited fact rather than computed
  /// For identities computed two ways; always true for inequality steps.
  bool identity_holds = true;
};

struct AuditReport {
  RankAuditCase input;
  std::string case_name;
  std::vector<AuditStep> steps;
  std::int64_t surface_rank = 0;
  /// Derived bound on rk(pi1 M): rk >= lower_bound, or rk > lower_bound if strict.
  BoundRational lower_bound;
  bool lower_bound_strict = false;

  /// 2 * bound > rank(S), accounting for strictness.
  [[nodiscard]] bool final_strict() const {
    const BoundRational twice = lower_bound * 2;
    return lower_bound_strict ? twice >= surface_rank : twice > surface_rank;
  }
  [[nodiscard]] bool identities_hold() const {
    return std::all_of(steps.begin(), steps.end(), [](const AuditStep& s) { return s.identity_holds; });
  }
  [[nodiscard]] bool passed() const { return final_strict() && identities_hold(); }
};

/// Replays the rank chain for one case: orientable or not, separating or not,
/// and (orientable non-separating) whether both copies of S lie on one
/// boundary component of the cut-open manifold M'.
inline AuditReport rank_audit(const RankAuditCase& c) {
  if (auto why = c.inconsistency()) throw AuditError(*why);
  using R = BoundRational;
  AuditReport rep;
  rep.input = c;
  rep.surface_rank = surface_rank(c.g, c.k, c.orientable);
  auto step = [&](std::string label, std::string statement, R value, bool strict = false, bool assumed = false,
                  bool holds = true) {
    rep.steps.push_back({std::move(label), std::move(statement), value, strict, assumed, holds});
  };
  const auto g = c.g, k = c.k, m = c.m, l = c.l;

  {
    const auto formula = c.orientable ? (k > 0 ? 2 * g + k - 1 : 2 * g) : (k > 0 ? g + k - 1 : g);
    step("surface-rank", c.orientable ? "rk pi1(S) = 2g+k-1 (k>0) or 2g (k=0)" : "rk pi1(S) = g+k-1 (k>0) or g (k=0)",
         R(rep.surface_rank), false, false, formula == rep.surface_rank);
  }

  if (c.orientable && c.separating) {
    if (k > 0) {
      rep.case_name = "orientable, separating, k > 0";
      // Each of the m annuli joins S to itself inside M1 and adds a handle.
      const R genus_m1 = R(g) + R(k, 2);
      step("boundary-genus", "g(boundary of M1) = g + k/2", genus_m1, false, false, genus_m1 == R(g + m));
      step("doubling-rank-monotone", "rk pi1(M) >= rk pi1(M1)", genus_m1, false, true);
      step("abelianization", "rk pi1(M1) >= rk H1(M1;Q)", genus_m1);
      step("half-lives-half-dies", "rk H1(M1;Q) >= g(boundary of M1) = g + k/2", genus_m1, false, true);
      rep.lower_bound = genus_m1;
      step("final", "2 rk pi1(M) >= 2g + k > 2g + k - 1 = rk pi1(S)", R(2 * g + k));
    } else {
      rep.case_name = "orientable, separating, closed";
      step("doubling-rank-monotone", "rk pi1(M) >= rk pi1(M1)", R(g), false, true);
      step("incompressible-boundary-rank", "rk pi1(M1) >= g + (m'-1)/n' > g for some cover with m' > 1 lifts",
           R(g), true, true);
      rep.lower_bound = R(g);
      rep.lower_bound_strict = true;
      step("final", "2 rk pi1(M) > 2g = rk pi1(S)", R(2 * g), true);
    }
  } else if (c.orientable && c.same_component) {
    rep.case_name = "orientable, non-separating, one boundary component";
    const auto genus_parts = 2 * g + 2 * m + l - 1;
    step("cut-surface-genus", "g(S') = 2g + 2m + l - 1 = 2g + k - 1", R(genus_parts), false, false,
         genus_parts == 2 * g + k - 1);
    step("abelianization", "rk pi1(M') >= rk H1(M';Q)", R(genus_parts));
    step("half-lives-half-dies", "rk H1(M';Q) >= rk H1(S';Q)/2 = 2g + k - 1", R(genus_parts), false, true);
    step("doubling-rank-monotone", "rk pi1(double cover) >= rk pi1(M')", R(genus_parts), false, true);
    const R bound = covering_rank_bound(genus_parts, 2);
    step("covering-bound n=2", "rk pi1(M) >= (rk pi1(double cover) + 1)/2", bound);
    rep.lower_bound = bound;
    step("final", "2 rk pi1(M) >= 2g + k > 2g + k - 1 = rk pi1(S)", bound * 2);
  } else if (c.orientable) {
    rep.case_name = "orientable, non-separating, two boundary components";
    const auto genus_parts = g + m + g + m;
    step("cut-boundary-genus", "g(S1) + m + g(S2) + m = 2g + k", R(genus_parts), false, false,
         genus_parts == 2 * g + k);
    step("abelianization", "rk pi1(M') >= rk H1(M';Q)", R(genus_parts));
    step("half-lives-half-dies", "rk H1(M';Q) >= g(boundary of M') >= 2g + k", R(genus_parts), false, true);
    step("doubling-rank-monotone", "rk pi1(double cover) >= rk pi1(M')", R(genus_parts), false, true);
    const R bound = covering_rank_bound(genus_parts, 2);
    step("covering-bound n=2", "rk pi1(M) >= (rk pi1(double cover) + 1)/2", bound);
    rep.lower_bound = bound;
    step("final", "2 rk pi1(M) >= 2g + k + 1 > rk pi1(S)", bound * 2);
  } else {
    const auto genus_parts = g - 1 + 2 * m + l;
    step("cut-surface-genus", "g(S') = g - 1 + 2m + l = k + g - 1", R(genus_parts), false, false,
         genus_parts == k + g - 1);
    if (k > 0) {
      rep.case_name = "non-orientable, k > 0";
      step("half-lives-half-dies", "rk H1(M';Q) >= g(S') = k + g - 1", R(genus_parts), false, true);
      step("abelianization", "rk pi1(M') >= rk H1(M';Q)", R(genus_parts));
      step("doubling-rank-monotone", "rk pi1(double cover) >= rk pi1(M')", R(genus_parts), false, true);
      const R bound = covering_rank_bound(genus_parts, 2);
      step("covering-bound n=2", "rk pi1(M) >= (rk pi1(double cover) + 1)/2", bound);
      rep.lower_bound = bound;
      step("final", "2 rk pi1(M) >= k + g > g + k - 1 = rk pi1(S)", bound * 2);
    } else {
      rep.case_name = "non-orientable, closed";
      step("incompressible-boundary-rank", "rk pi1(M') > g(S') = g - 1", R(genus_parts), true, true);
      step("doubling-rank-monotone", "rk pi1(double cover) >= rk pi1(M')", R(genus_parts), true, true);
      const R bound = covering_rank_bound(genus_parts, 2);
      step("covering-bound n=2", "rk pi1(M) >= (rk pi1(double cover) + 1)/2", bound, true);
      rep.lower_bound = bound;
      rep.lower_bound_strict = true;
      step("final", "2 rk pi1(M) > g - 1 + 1 = g = rk pi1(S)", bound * 2, true);
    }
  }
  return rep;
}

}  // namespace geodouble
