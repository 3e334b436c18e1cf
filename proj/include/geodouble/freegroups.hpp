#pragma once

// Words in free groups and Stallings subgroup graphs.
//
// Letters are nonzero ints: +i is the i-th generator (1-based), -i its inverse.
// Text syntax: lowercase letter = generator, uppercase = inverse, so "abA" is
// a b a^-1. The empty word is written "" or "1".

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geodouble/union_find.hpp"

namespace geodouble {

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) : letters_(letters) {}

  static Word parse(std::string_view text, int rank = 26) {
    Word w;
    if (text == "1" || text == "e") return w;
    for (char ch : text) {
      int letter = 0;
      if (ch >= 'a' && ch <= 'z') letter = ch - 'a' + 1;
      else if (ch >= 'A' && ch <= 'Z') letter = -(ch - 'A' + 1);
      else throw WordError("invalid letter '" + std::string(1, ch) + "' in word '" + std::string(text) + "'");
      if (std::abs(letter) > rank)
        throw WordError("letter '" + std::string(1, ch) + "' exceeds rank " + std::to_string(rank));
      w.letters_.push_back(letter);
    }
    return w;
  }

  [[nodiscard]] std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int x : letters_) s += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
    return s;
  }

  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] int operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] bool is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i] == -letters_[i - 1]) return false;
    return true;
  }

  [[nodiscard]] int max_generator() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, std::abs(x));
    return m;
  }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// Free reduction with a stack; the result is the unique reduced word.
[[nodiscard]] inline Word free_reduce(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w.letters()) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return Word(std::move(out));
}

[[nodiscard]] inline Word inverse(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& x : out) x = -x;
  return Word(std::move(out));
}

/// Reduced product.
[[nodiscard]] inline Word operator*(const Word& a, const Word& b) {
  std::vector<int> out = a.letters();
  for (int x : b.letters()) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return Word(std::move(out));
}

/// Cyclic reduction of a reduced word (strips x ... x^-1 from both ends).
[[nodiscard]] inline Word cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  const auto& l = r.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(j)));
}

inline std::vector<Word> parse_word_list(std::string_view text, int rank) {
  std::vector<Word> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(free_reduce(Word::parse(cur, rank)));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == ';') flush();
    else cur += ch;
  }
  flush();
  return out;
}

/// Uniformly random reduced word of the given length.
template <class Rng>
Word random_reduced_word(int rank, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  std::vector<int> out;
  while (out.size() < length) {
    const int v = pick(rng);
    const int x = v < rank ? v + 1 : -(v - rank + 1);
    if (!out.empty() && out.back() == -x) continue;
    out.push_back(x);
  }
  return Word(std::move(out));
}

/// Folded core graph of a finitely generated subgroup of F_rank.
///
/// Vertex 0 is the base. Vertices are numbered breadth-first from the base,
/// following directions in the order a, A, b, B, ...; with that numbering two
/// graphs of the same subgroup compare equal.
class SubgroupGraph {
 public:
  struct Edge {
    int from;
    int label;  // positive generator
    int to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  /// Wedge of loops spelling `gens`, folded to completion.
  static SubgroupGraph from_generators(int rank, const std::vector<Word>& gens) {
    auto [count, edges] = wedge(rank, gens);
    return fold(rank, count, edges);
  }

  /// Same, but edges are inserted in a random order, which changes the order in
  /// which folds happen.
  template <class Rng>
  static SubgroupGraph from_generators_shuffled(int rank, const std::vector<Word>& gens, Rng& rng) {
    auto [count, edges] = wedge(rank, gens);
    std::shuffle(edges.begin(), edges.end(), rng);
    return fold(rank, count, edges);
  }

  /// Folds an arbitrary labelled graph (e.g. a complete Schreier graph).
  static SubgroupGraph from_edges(int rank, int vertex_count, std::vector<Edge> edges) {
    return fold(rank, vertex_count, edges);
  }

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] int vertex_count() const { return static_cast<int>(next_.size() / (2 * rank_)); }
  [[nodiscard]] int edge_count() const {
    int e = 0;
    for (int v = 0; v < vertex_count(); ++v)
      for (int x = 1; x <= rank_; ++x)
        if (step(v, x) >= 0) ++e;
    return e;
  }

  /// Target of the edge leaving v with signed label x, or -1.
  [[nodiscard]] int step(int v, int x) const { return next_[static_cast<std::size_t>(v) * 2 * rank_ + slot(x)]; }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < vertex_count(); ++v)
      for (int x = 1; x <= rank_; ++x)
        if (const int w = step(v, x); w >= 0) out.push_back({v, x, w});
    return out;
  }

  /// Follows the reduced form of w from the base as far as it goes.
  /// Returns (vertex reached, number of letters consumed).
  [[nodiscard]] std::pair<int, std::size_t> trace(const Word& w, int from = 0) const {
    int v = from;
    std::size_t i = 0;
    for (; i < w.size(); ++i) {
      const int x = w[i];
      if (std::abs(x) > rank_) break;
      const int nv = step(v, x);
      if (nv < 0) break;
      v = nv;
    }
    return {v, i};
  }

  /// Word spelled by the breadth-first spanning tree path from the base to v.
  [[nodiscard]] const Word& tree_word(int v) const { return tree_words_[v]; }

  /// Edges outside the spanning tree; each gives one free generator of H.
  [[nodiscard]] std::vector<Edge> non_tree_edges() const {
    std::vector<Edge> tree(tree_parent_edge_.begin() + 1, tree_parent_edge_.end());
    std::sort(tree.begin(), tree.end());
    std::vector<Edge> out;
    for (const auto& e : edges())
      if (!std::binary_search(tree.begin(), tree.end(), e)) out.push_back(e);
    return out;
  }

  [[nodiscard]] std::string to_text() const {
    std::string out;
    for (const auto& e : edges())
      out += std::to_string(e.from) + " --" + Word{e.label}.to_string() + "--> " + std::to_string(e.to) + "\n";
    return out;
  }

  friend bool operator==(const SubgroupGraph& a, const SubgroupGraph& b) {
    return a.rank_ == b.rank_ && a.next_ == b.next_;
  }

 private:
  SubgroupGraph(int rank, std::vector<int> next) : rank_(rank), next_(std::move(next)) { build_tree(); }

  static int slot(int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

  static std::pair<int, std::vector<Edge>> wedge(int rank, const std::vector<Word>& gens) {
    if (rank <= 0) throw WordError("free group rank must be positive");
    int count = 1;
    std::vector<Edge> edges;
    for (const auto& g0 : gens) {
      const Word g = free_reduce(g0);
      if (g.max_generator() > rank) throw WordError("generator " + g.to_string() + " exceeds rank");
      if (g.empty()) continue;
      int prev = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int next = (i + 1 == g.size()) ? 0 : count++;
        const int x = g[i];
        if (x > 0) edges.push_back({prev, x, next});
        else edges.push_back({next, -x, prev});
        prev = next;
      }
    }
    return {count, edges};
  }

  static SubgroupGraph fold(int rank, int count, const std::vector<Edge>& input) {
    const int dirs = 2 * rank;
    std::vector<int> adj(static_cast<std::size_t>(count) * dirs, -1);
    UnionFind uf(count);
    std::queue<std::pair<int, int>> merges;
    auto at = [&](int v, int x) -> int& { return adj[static_cast<std::size_t>(v) * dirs + slot(x)]; };

    // Invariant once the queue drains: at(u, x) == v iff at(v, -x) == u, up to find().
    auto add = [&](int u, int x, int v) {
      u = uf.find(u);
      v = uf.find(v);
      int& out = at(u, x);
      int& back = at(v, -x);
      if (out >= 0 && uf.find(out) != v) merges.emplace(out, v);
      if (back >= 0 && uf.find(back) != u) merges.emplace(back, u);
      if (out < 0) out = v;
      if (back < 0) back = u;
    };
    auto drain = [&] {
      while (!merges.empty()) {
        auto [a, b] = merges.front();
        merges.pop();
        a = uf.find(a);
        b = uf.find(b);
        if (a == b) continue;
        uf.unite(a, b);
        const int keep = uf.find(a);
        const int gone = keep == a ? b : a;
        for (int s = 0; s < dirs; ++s) {
          int& moved = adj[static_cast<std::size_t>(gone) * dirs + s];
          if (moved < 0) continue;
          const int t = moved;
          moved = -1;
          int& kept = adj[static_cast<std::size_t>(keep) * dirs + s];
          if (kept < 0) kept = t;
          else if (uf.find(kept) != uf.find(t)) merges.emplace(kept, t);
        }
      }
    };
    for (const auto& e : input) {
      if (e.label <= 0 || e.label > rank) throw WordError("edge label outside the alphabet");
      add(e.from, e.label, e.to);
      drain();
    }

    // Collect the folded graph on root vertices.
    std::vector<std::vector<int>> out(count, std::vector<int>(dirs, -1));
    std::vector<bool> alive(count, false);
    for (int v = 0; v < count; ++v) {
      if (uf.find(v) != v) continue;
      alive[v] = true;
      for (int s = 0; s < dirs; ++s)
        if (adj[static_cast<std::size_t>(v) * dirs + s] >= 0)
          out[v][s] = uf.find(adj[static_cast<std::size_t>(v) * dirs + s]);
    }
    const int base = uf.find(0);
    prune_to_core(out, alive, base);
    return canonical(rank, out, alive, base);
  }

  // Repeatedly removes non-base vertices of degree one (loops count twice).
  static void prune_to_core(std::vector<std::vector<int>>& out, std::vector<bool>& alive, int base) {
    const int dirs = out.empty() ? 0 : static_cast<int>(out[0].size());
    auto degree = [&](int v) {
      int d = 0;
      for (int s = 0; s < dirs; ++s)
        if (out[v][s] >= 0) ++d;
      return d;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < static_cast<int>(out.size()); ++v) {
        if (!alive[v] || v == base || degree(v) != 1) continue;
        for (int s = 0; s < dirs; ++s) {
          const int w = out[v][s];
          if (w < 0) continue;
          out[w][s ^ 1] = -1;
          out[v][s] = -1;
        }
        alive[v] = false;
        changed = true;
      }
    }
  }

  static SubgroupGraph canonical(int rank, const std::vector<std::vector<int>>& out,
                                 const std::vector<bool>& alive, int base) {
    const int dirs = 2 * rank;
    std::vector<int> label(out.size(), -1);
    std::vector<int> order{base};
    label[base] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int v = order[i];
      for (int s = 0; s < dirs; ++s) {
        const int w = out[v][s];
        if (w >= 0 && alive[w] && label[w] < 0) {
          label[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
    std::vector<int> next(order.size() * dirs, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int s = 0; s < dirs; ++s)
        if (const int w = out[order[i]][s]; w >= 0) next[i * dirs + s] = label[w];
    return SubgroupGraph(rank, std::move(next));
  }

  void build_tree() {
    const int n = vertex_count();
    tree_words_.assign(n, Word{});
    tree_parent_edge_.assign(n, Edge{-1, 0, -1});
    std::vector<bool> seen(n, false);
    std::vector<int> order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int v = order[i];
      for (int s = 0; s < 2 * rank_; ++s) {
        const int x = s % 2 == 0 ? s / 2 + 1 : -(s / 2 + 1);
        const int w = step(v, x);
        if (w < 0 || seen[w]) continue;
        seen[w] = true;
        tree_words_[w] = tree_words_[v] * Word{x};
        tree_parent_edge_[w] = x > 0 ? Edge{v, x, w} : Edge{w, -x, v};
        order.push_back(w);
      }
    }
  }

  int rank_;
  std::vector<int> next_;
  std::vector<Word> tree_words_;
  std::vector<Edge> tree_parent_edge_;
};

inline SubgroupGraph stallings_graph(int rank, const std::vector<Word>& gens) {
  return SubgroupGraph::from_generators(rank, gens);
}

/// w is in H iff its reduced form traces a closed path at the base.
[[nodiscard]] inline bool contains(const SubgroupGraph& g, const Word& w) {
  const Word r = free_reduce(w);
  const auto [v, used] = g.trace(r);
  return used == r.size() && v == 0;
}

/// Rank of H = first Betti number of the core graph.
[[nodiscard]] inline int subgroup_rank(const SubgroupGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

/// Index of H, or nullopt when infinite (some vertex misses a direction).
[[nodiscard]] inline std::optional<int> index(const SubgroupGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int x = 1; x <= g.rank(); ++x)
      if (g.step(v, x) < 0 || g.step(v, -x) < 0) return std::nullopt;
  return g.vertex_count();
}

/// Canonical representative r of the right coset H*w, so that w * r^-1 is in H.
///
/// The reduced w is traced from the base until it reaches vertex v with an
/// untraceable suffix s; the representative is tree_word(v) * s. Elements of H
/// give the empty word.
[[nodiscard]] inline Word coset_representative(const SubgroupGraph& g, const Word& w) {
  const Word r = free_reduce(w);
  const auto [v, used] = g.trace(r);
  std::vector<int> suffix(r.letters().begin() + static_cast<std::ptrdiff_t>(used), r.letters().end());
  return g.tree_word(v) * Word(std::move(suffix));
}

/// Free basis of H read off the spanning tree: tree(u) x tree(v)^-1 for every
/// non-tree edge u --x--> v.
[[nodiscard]] inline std::vector<Word> schreier_generators(const SubgroupGraph& g) {
  std::vector<Word> out;
  for (const auto& e : g.non_tree_edges())
    out.push_back(g.tree_word(e.from) * Word{e.label} * inverse(g.tree_word(e.to)));
  return out;
}

class IndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// For H of finite index n in F_k: rank(H) == n(k-1)+1, so that
/// k == (rank(H) + n - 1)/n exactly.
[[nodiscard]] inline bool schreier_rank_check(const SubgroupGraph& g) {
  const auto n = index(g);
  if (!n) throw IndexError("subgroup has infinite index");
  const std::int64_t k = g.rank();
  const std::int64_t rk = subgroup_rank(g);
  return rk == *n * (k - 1) + 1 && (rk + *n - 1) == k * *n;
}

}  // namespace geodouble
