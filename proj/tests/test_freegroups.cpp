#include <catch_amalgamated.hpp>

#include <random>

#include "geodouble/freegroups.hpp"
#include "geodouble/presentations.hpp"
#include "oracles.hpp"

using namespace geodouble;

namespace {

Word w(const char* s) { return Word::parse(s); }

template <class Rng>
std::vector<Word> random_generators(int rank, int count, int max_len, Rng& rng) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) out.push_back(random_reduced_word(rank, len(rng), rng));
  return out;
}

}  // namespace

TEST_CASE("word syntax") {
  CHECK(w("abA").letters() == std::vector<int>{1, 2, -1});
  CHECK(w("abA").to_string() == "abA");
  CHECK(Word{}.to_string() == "1");
  CHECK(w("1").empty());
  CHECK_THROWS_AS(Word::parse("ac", 2), WordError);
  CHECK_THROWS_AS(Word::parse("a1"), WordError);
  CHECK(parse_word_list("aa, b,abA", 2).size() == 3);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("aA")).empty());
  CHECK(free_reduce(w("abBa")) == w("aa"));
  CHECK(cyclic_reduce(w("abA")) == w("b"));
  CHECK(cyclic_reduce(w("abaA")) == w("ab"));
  CHECK(inverse(w("abC")) == w("cBA"));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(-3, 3), len(0, 20);
  for (int i = 0; i < 2000; ++i) {
    std::vector<int> raw;
    for (int j = len(rng); j > 0; --j)
      if (int x = letter(rng)) raw.push_back(x);
    const Word r = free_reduce(Word(raw));
    CHECK(r.letters() == oracle::naive_reduce(raw));
    CHECK(free_reduce(r) == r);
    CHECK(r.is_reduced());
  }
}

TEST_CASE("Stallings graphs of small subgroups") {
  const auto cyclic = stallings_graph(2, {w("a")});
  CHECK(cyclic.vertex_count() == 1);
  CHECK(cyclic.edge_count() == 1);
  CHECK(cyclic.step(0, 1) == 0);

  const auto idx2 = stallings_graph(2, {w("aa"), w("b"), w("abA")});
  CHECK(idx2.vertex_count() == 2);
  CHECK(idx2.edge_count() == 4);
  CHECK(index(idx2) == std::optional<int>{2});

  const auto trivial = stallings_graph(2, {});
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edge_count() == 0);
  CHECK(subgroup_rank(trivial) == 0);

  CHECK(stallings_graph(2, {w("a"), w("b")}).vertex_count() == 1);
  CHECK(stallings_graph(2, {w("ab"), w("aB")}).to_text() == stallings_graph(2, {w("aB"), w("ab")}).to_text());
}

TEST_CASE("index-2 subgroup matches brute-force coset enumeration") {
  // Cosets of <a^2, b, aba^-1>: a word lies in H iff it has even a-exponent.
  const auto g = stallings_graph(2, {w("aa"), w("b"), w("abA")});
  std::mt19937 rng(9);
  for (int i = 0; i < 500; ++i) {
    const Word x = random_reduced_word(2, 1 + i % 6, rng);
    int a_exp = 0;
    for (int l : x.letters())
      if (std::abs(l) == 1) a_exp += l > 0 ? 1 : -1;
    CHECK(contains(g, x) == (a_exp % 2 == 0));
  }
}

TEST_CASE("membership") {
  const auto a = stallings_graph(2, {w("a")});
  CHECK(contains(a, w("aaa")));
  CHECK_FALSE(contains(a, w("b")));
  CHECK(contains(a, w("abBA")));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int rank = 2 + trial % 2;
    const auto gens = random_generators(rank, 1 + trial % 3, 4, rng);
    const auto g = stallings_graph(rank, gens);
    const auto ball = oracle::bounded_subgroup_ball(gens, 4);
    for (const auto& x : ball) CHECK(contains(g, x));
    for (int i = 0; i < 200; ++i) {
      const Word x = random_reduced_word(rank, 1 + i % 8, rng);
      if (ball.count(x)) CHECK(contains(g, x));
    }
    // Closure under products and inverses.
    std::vector<Word> members(ball.begin(), ball.end());
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int i = 0; i < 50; ++i) {
      const Word& x = members[pick(rng)];
      const Word& y = members[pick(rng)];
      CHECK(contains(g, x * y));
      CHECK(contains(g, inverse(x)));
    }
  }
}

TEST_CASE("subgroup rank and index") {
  CHECK(subgroup_rank(stallings_graph(2, {w("aa"), w("b"), w("abA")})) == 3);
  CHECK(subgroup_rank(stallings_graph(2, {w("a")})) == 1);
  CHECK_FALSE(index(stallings_graph(2, {w("a")})).has_value());
  CHECK(index(stallings_graph(2, {w("a"), w("b")})) == std::optional<int>{1});
  CHECK(subgroup_rank(stallings_graph(2, {w("ab"), w("ab"), w("abab")})) == 1);
}

TEST_CASE("coset representatives") {
  const auto g = stallings_graph(2, {w("aa"), w("b"), w("abA")});
  CHECK(coset_representative(g, w("aab")).empty());
  CHECK(coset_representative(g, w("aaa")) == w("a"));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto gens = random_generators(2, 2, 4, rng);
    const auto h = stallings_graph(2, gens);
    const auto ball = oracle::bounded_subgroup_ball(gens, 3);
    std::vector<Word> members(ball.begin(), ball.end());
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int i = 0; i < 50; ++i) {
      const Word x = random_reduced_word(2, 1 + i % 7, rng);
      const Word r = coset_representative(h, x);
      CHECK(contains(h, x * inverse(r)));
      CHECK(coset_representative(h, r) == r);
      CHECK(coset_representative(h, members[pick(rng)] * x) == r);
    }
  }
}

TEST_CASE("fold order does not matter") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 2 + trial % 2;
    const auto gens = random_generators(rank, 1 + trial % 4, 6, rng);
    const auto ref = stallings_graph(rank, gens);
    for (int k = 0; k < 5; ++k) CHECK(SubgroupGraph::from_generators_shuffled(rank, gens, rng) == ref);
    auto permuted = gens;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    CHECK(stallings_graph(rank, permuted) == ref);
  }
}

TEST_CASE("Schreier generators span the same subgroup") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int rank = 2 + trial % 2;
    const auto g = stallings_graph(rank, random_generators(rank, 1 + trial % 3, 5, rng));
    const auto basis = schreier_generators(g);
    CHECK(static_cast<int>(basis.size()) == subgroup_rank(g));
    CHECK(stallings_graph(rank, basis) == g);
  }
}

TEST_CASE("Nielsen-Schreier on permutation actions") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 80; ++trial) {
    const int rank = 2 + trial % 2;
    const int degree = 1 + trial % 6;
    const auto action = oracle::PermutationAction::random(rank, degree, rng);
    const auto g = stallings_graph(rank, action.stabiliser_generators());
    CHECK(index(g) == std::optional<int>{degree});
    CHECK(subgroup_rank(g) == degree * (rank - 1) + 1);
    CHECK(schreier_rank_check(g));
    CHECK(covering_rank_bound(subgroup_rank(g), degree) == BoundRational(rank));
    for (int i = 0; i < 100; ++i) {
      const Word x = random_reduced_word(rank, 1 + i % 10, rng);
      CHECK(contains(g, x) == action.stabilises_base(x));
    }
  }
}

TEST_CASE("explicit finite-index examples") {
  // Complete 3-vertex graph: a cycles 0->1->2, b fixes 0 and swaps 1, 2.
  const auto g3 = SubgroupGraph::from_edges(2, 3, {{0, 1, 1}, {1, 1, 2}, {2, 1, 0}, {0, 2, 0}, {1, 2, 2}, {2, 2, 1}});
  CHECK(index(g3) == std::optional<int>{3});
  CHECK(subgroup_rank(g3) == 4);
  CHECK(covering_rank_bound(4, 3) == BoundRational(2));
  CHECK(schreier_rank_check(g3));

  for (int k = 1; k <= 4; ++k) {
    std::vector<Word> all;
    for (int x = 1; x <= k; ++x) all.push_back(Word{x});
    const auto whole = stallings_graph(k, all);
    CHECK(subgroup_rank(whole) == k);
    CHECK(covering_rank_bound(k, 1) == BoundRational(k));
    CHECK(schreier_rank_check(whole));
  }
  CHECK_THROWS_AS(schreier_rank_check(stallings_graph(2, {w("a")})), IndexError);
}
