#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace geodouble {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Keeps the smaller index as the root.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int components() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++count;
    return count;
  }

  /// Dense class labels, numbered in order of first appearance.
  std::vector<int> labels() {
    std::vector<int> root_label(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      const int r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      out[i] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

/// Union-find where each element carries a parity relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, false), broken_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  /// (root, parity of x relative to root)
  std::pair<int, bool> find(int x) {
    bool p = false;
    int r = x;
    while (parent_[r] != r) {
      p = p != parity_[r];
      r = parent_[r];
    }
    // Path compression with parity fix-up.
    bool q = p;
    while (parent_[x] != x) {
      const int next = parent_[x];
      const bool px = parity_[x];
      parent_[x] = r;
      parity_[x] = q;
      q = q != px;
      x = next;
    }
    return {r, p};
  }

  /// Records parity(a) xor parity(b) == rel. Returns false if that contradicts
  /// an earlier relation (the class is then marked broken).
  bool unite(int a, int b, bool rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa != pb) != rel) {
        broken_[ra] = true;
        return false;
      }
      return true;
    }
    if (rb < ra) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = (pa != pb) != rel;
    broken_[ra] = broken_[ra] || broken_[rb];
    return true;
  }

  bool contradicted(int x) { return broken_[find(x).first]; }

 private:
  std::vector<int> parent_;
  std::vector<bool> parity_;
  std::vector<bool> broken_;
};

}  // namespace geodouble
