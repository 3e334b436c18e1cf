#pragma once

// The amalgamated double G *_H G' of a free group G = F_k along a finitely
// generated subgroup H, and the swap automorphism g <-> g'.
//
// The topological double of a manifold along its boundary has this shape with
// G the manifold group and H the boundary subgroup. G is not computable in
// general, so this module works with free G, where membership in H and coset
// representatives come from the Stallings graph of H. The normal-form argument
// only uses those two operations.

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geodouble/freegroups.hpp"

namespace geodouble {

enum class Side { unprimed, primed };

[[nodiscard]] constexpr Side other(Side s) { return s == Side::unprimed ? Side::primed : Side::unprimed; }

struct Syllable {
  Side side = Side::unprimed;
  Word word;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A product of syllables, each a word in one copy of G. Adjacent syllables may
/// share a side; normal_form merges them.
struct DoubleWord {
  std::vector<Syllable> syllables;

  /// Parses "u:abA p:bb u:a" (u = unprimed copy, p = primed copy).
  static DoubleWord parse(std::string_view text, int rank) {
    DoubleWord w;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      if (tok.size() < 2 || tok[1] != ':' || (tok[0] != 'u' && tok[0] != 'p'))
        throw WordError("syllable '" + tok + "' must look like u:<word> or p:<word>");
      w.syllables.push_back({tok[0] == 'u' ? Side::unprimed : Side::primed, Word::parse(tok.substr(2), rank)});
      tok.clear();
    };
    for (char ch : text) {
      if (ch == ' ' || ch == ',') flush();
      else tok += ch;
    }
    flush();
    return w;
  }

  [[nodiscard]] std::string to_string() const {
    if (syllables.empty()) return "1";
    std::string out;
    for (const auto& s : syllables) {
      if (!out.empty()) out += ' ';
      out += (s.side == Side::unprimed ? "u:" : "p:") + s.word.to_string();
    }
    return out;
  }

  friend bool operator==(const DoubleWord&, const DoubleWord&) = default;
};

[[nodiscard]] inline DoubleWord operator*(const DoubleWord& a, const DoubleWord& b) {
  DoubleWord out = a;
  out.syllables.insert(out.syllables.end(), b.syllables.begin(), b.syllables.end());
  return out;
}

[[nodiscard]] inline DoubleWord inverse(const DoubleWord& w) {
  DoubleWord out;
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) out.syllables.push_back({it->side, inverse(it->word)});
  return out;
}

/// a_1 b_1' a_2 b_2' ... followed by a tail h in H. Syllables alternate sides,
/// each is a canonical left-coset representative of a nontrivial coset gH, and
/// the first syllable may be on either side.
struct NormalForm {
  std::vector<Syllable> syllables;
  Word tail;

  [[nodiscard]] DoubleWord to_double_word() const {
    DoubleWord w{syllables};
    if (!tail.empty()) w.syllables.push_back({Side::unprimed, tail});
    return w;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& s : syllables) {
      out += (s.side == Side::unprimed ? "u:" : "p:") + s.word.to_string();
      out += ' ';
    }
    return out + "h:" + tail.to_string();
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class Double {
 public:
  Double(int rank, const std::vector<Word>& h_generators)
      : rank_(rank), h_(stallings_graph(rank, h_generators)) {}
  Double(int rank, SubgroupGraph h) : rank_(rank), h_(std::move(h)) {
    if (h_.rank() != rank_) throw WordError("amalgamating subgroup lives in a free group of another rank");
  }

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const SubgroupGraph& amalgamated() const { return h_; }

  [[nodiscard]] bool in_h(const Word& w) const { return contains(h_, w); }

  /// Canonical r with gH == rH: the inverse of the right-coset representative
  /// of g^-1. Elements of H give the empty word.
  [[nodiscard]] Word left_representative(const Word& g) const {
    return inverse(coset_representative(h_, inverse(g)));
  }

 private:
  int rank_;
  SubgroupGraph h_;
};

/// Left-to-right rewriting: each syllable, with the H-part carried in from its
/// left, is split as (representative) * (H-part) and the H-part moves on to
/// the next syllable, ending in the tail. A syllable that lands in H vanishes
/// and its neighbours on the other side merge.
[[nodiscard]] inline NormalForm normal_form(const Double& d, const DoubleWord& w) {
  NormalForm nf;
  auto& stack = nf.syllables;
  Word carry;
  for (const auto& syl : w.syllables) {
    Word x = carry * syl.word;
    if (!stack.empty() && stack.back().side == syl.side) {
      x = stack.back().word * x;
      stack.pop_back();
    }
    if (d.in_h(x)) {
      carry = x;
      continue;
    }
    Word rep = d.left_representative(x);
    carry = inverse(rep) * x;
    stack.push_back({syl.side, std::move(rep)});
  }
  nf.tail = carry;
  return nf;
}

/// Exchanges the two copies of G; fixes H pointwise.
[[nodiscard]] inline DoubleWord swap(const DoubleWord& w) {
  DoubleWord out = w;
  for (auto& s : out.syllables) s.side = other(s.side);
  return out;
}

[[nodiscard]] inline NormalForm swap(const NormalForm& nf) {
  NormalForm out = nf;
  for (auto& s : out.syllables) s.side = other(s.side);
  return out;
}

/// w is fixed by the swap iff its normal form is unchanged by it.
[[nodiscard]] inline bool is_fixed(const Double& d, const DoubleWord& w) {
  return normal_form(d, w) == normal_form(d, swap(w));
}

/// Equality of group elements in the double.
[[nodiscard]] inline bool same_element(const Double& d, const DoubleWord& a, const DoubleWord& b) {
  return normal_form(d, a) == normal_form(d, b);
}

/// Random test word. Syllables land on random sides; each is either a short
/// random reduced word or a product of H generators, so H-transfers, merges and
/// elements of H all occur with useful frequency. One word in four is built
/// from H generators only.
template <class Rng>
DoubleWord random_double_word(int rank, const std::vector<Word>& h_generators, Rng& rng, int max_syllables = 6,
                              int max_length = 4) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> count(0, max_syllables);
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> quarter(0, 3);
  const bool only_h = !h_generators.empty() && quarter(rng) == 0;
  auto h_element = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, h_generators.size() - 1);
    Word w;
    for (int i = 1 + coin(rng); i > 0; --i) {
      const Word& g = h_generators[pick(rng)];
      w = w * (coin(rng) ? g : inverse(g));
    }
    return w;
  };
  DoubleWord out;
  for (int i = count(rng); i > 0; --i) {
    const Side side = coin(rng) ? Side::primed : Side::unprimed;
    const bool from_h = only_h || (!h_generators.empty() && coin(rng));
    out.syllables.push_back({side, from_h ? h_element() : random_reduced_word(rank, length(rng), rng)});
  }
  return out;
}

}  // namespace geodouble
