#include <catch_amalgamated.hpp>

#include <random>

#include "geodouble/construction.hpp"
#include "geodouble/presentations.hpp"
#include "oracles.hpp"

using namespace geodouble;

namespace {

FinitePresentation pres(int gens, const char* rels) { return {gens, parse_word_list(rels, gens)}; }

std::vector<BigInt> big(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

template <class Rng>
IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, Rng& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

template <class Rng>
FinitePresentation random_presentation(Rng& rng) {
  std::uniform_int_distribution<int> gens(1, 4), rels(0, 4), len(1, 8);
  FinitePresentation p{gens(rng), {}};
  for (int i = rels(rng); i > 0; --i) p.relators.push_back(random_reduced_word(p.generators, len(rng), rng));
  return p;
}

}  // namespace

TEST_CASE("presentation of the n = 4 family member") {
  const auto c = glue(generate_paper_scheme(FamilyParams::make(4)));
  const auto p = presentation_from_complex(c);
  CHECK(p.generators == 2);
  REQUIRE(p.relators.size() == 8);
  for (const auto& r : p.relators) CHECK(r.size() == 3);
  CHECK(abelianization_rank(p) == oracle::chain_complex_b1(c));
  CHECK(abelianization_rank(p) == 0);
  CHECK(smith_normal_form(relation_matrix(p)).factors == oracle::invariant_factors_by_minors(relation_matrix(p)));
}

TEST_CASE("presentation of a bare tetrahedron is free") {
  const auto c = glue(parse_scheme("tets 1\n"), GlueOptions{true});
  const auto p = presentation_from_complex(c);
  CHECK(p.relators.empty());
  CHECK(p.generators == 3);  // six edges minus a spanning tree on four vertices
}

TEST_CASE("complex presentations agree with the chain-complex oracle") {
  std::mt19937 rng(101);
  for (int i = 0; i < 200; ++i) {
    const auto c = glue(oracle::random_closed_scheme(1 + i % 4, rng));
    if (!c.connected()) continue;
    const auto p = presentation_from_complex(c);
    for (const auto& r : p.relators) {
      CHECK(r.is_reduced());
      CHECK(cyclic_reduce(r) == r);
    }
    CHECK(abelianization_rank(p) == oracle::chain_complex_b1(c));
  }
  for (int n : {4, 5, 7, 8}) {
    const auto c = glue(generate_paper_scheme(FamilyParams::make(n)));
    CHECK(abelianization_rank(presentation_from_complex(c)) == oracle::chain_complex_b1(c));
  }
}

TEST_CASE("dual presentations of the family follow the handle structure") {
  for (int n : {4, 5, 7, 8, 10}) {
    const auto c = glue(generate_paper_scheme(FamilyParams::make(n)));
    const auto p = dual_presentation(c);
    CHECK(p.generators == n + 1);
    CHECK(p.relators.size() == 2);
    // Half of the boundary homology survives: rank >= genus of the boundary.
    CHECK(abelianization_rank(p) >= static_cast<std::size_t>(n - 1));
    const auto q = tietze_simplify(p);
    CHECK(abelianization(q).free_rank == abelianization(p).free_rank);
    CHECK(abelianization(q).torsion == abelianization(p).torsion);
  }
}

TEST_CASE("dual presentation of one tetrahedron") {
  // No tree edges: both pairings are generators and every edge class
  // contributes a word of length at most its valence.
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto c = glue(oracle::random_closed_scheme(1, rng));
    const auto p = dual_presentation(c);
    CHECK(p.generators == 2);
    CHECK(p.relators.size() <= c.edge_classes.size());
    std::size_t total = 0;
    for (const auto& r : p.relators) total += r.size();
    CHECK(total <= 6);
  }
}

TEST_CASE("Tietze simplification") {
  CHECK(tietze_simplify(pres(2, "b")) == FinitePresentation{1, {}});
  const auto q = tietze_simplify(pres(2, "ab, aabb"));
  CHECK(q.generators == 1);
  CHECK(tietze_simplify(pres(1, "aaa")) == pres(1, "aaa"));
  CHECK(tietze_simplify(pres(2, "aA, bB")) == FinitePresentation{2, {}});
  // Duplicates up to rotation and inversion collapse.
  CHECK(tietze_simplify(pres(2, "abAB, BAba, baBA")).relators.size() == 1);
  // A relator longer than the limit is never used for elimination.
  Word longer;
  for (int i = 0; i < 17; ++i) longer = longer * Word{2};
  longer = Word{1} * longer;  // a b^17: a occurs once
  const auto kept = tietze_simplify({2, {longer}});
  CHECK(kept.generators == 2);
  const auto cut = tietze_simplify({2, {Word{1} * Word{2} * Word{2}}});
  CHECK(cut.generators == 1);
}

TEST_CASE("Tietze moves preserve the abelianisation") {
  std::mt19937 rng(77);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_presentation(rng);
    const auto q = tietze_simplify(p);
    CHECK(q.generators <= p.generators);
    const auto ap = abelianization(p);
    const auto aq = abelianization(q);
    CHECK(ap.free_rank == aq.free_rank);
    CHECK(ap.torsion == aq.torsion);
  }
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix{{1, 0}, {0, 1}}).factors == big({1, 1}));
  const auto f = smith_normal_form(IntegerMatrix{{2, 0}, {0, 0}});
  CHECK(f.factors == big({2}));
  CHECK(f.rank() == 1);
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors == big({2, 6, 12}));
  CHECK(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).factors == big({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).factors.empty());
  CHECK(smith_normal_form(IntegerMatrix(2, 2)).factors.empty());
}

TEST_CASE("Smith normal form agrees with the minors oracle") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto m = random_matrix(4, 4, 5, rng);
    CHECK(smith_normal_form(m).factors == oracle::invariant_factors_by_minors(m));
  }
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const auto m = random_matrix(dim(rng), dim(rng), 9, rng);
    const auto f = smith_normal_form(m).factors;
    CHECK(f == oracle::invariant_factors_by_minors(m));
    for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK(f[k + 1] % f[k] == 0);
  }
}

TEST_CASE("Smith normal form is invariant under unimodular changes") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = 1 + i % 4, c = 1 + (i / 4) % 4;
    IntegerMatrix m = random_matrix(r, c, 6, rng);
    const auto base = smith_normal_form(m).factors;
    for (int step = 0; step < 12; ++step) {
      std::uniform_int_distribution<std::size_t> row(0, r - 1), col(0, c - 1);
      const int k = coef(rng);
      if (step % 2 == 0 && r > 1) {
        const auto a = row(rng), b = row(rng);
        if (a == b) continue;
        for (std::size_t j = 0; j < c; ++j) m(a, j) += k * m(b, j);
      } else if (c > 1) {
        const auto a = col(rng), b = col(rng);
        if (a == b) continue;
        for (std::size_t j = 0; j < r; ++j) m(j, a) += k * m(j, b);
      }
    }
    CHECK(smith_normal_form(m).factors == base);
  }
}

TEST_CASE("abelianisation rank") {
  for (int g = 1; g <= 5; ++g) {
    // [a1,b1]...[ag,bg]
    std::vector<int> rel;
    for (int i = 0; i < g; ++i) {
      const int a = 2 * i + 1, b = 2 * i + 2;
      rel.insert(rel.end(), {a, b, -a, -b});
    }
    CHECK(abelianization_rank({2 * g, {Word(rel)}}) == static_cast<std::size_t>(2 * g));
  }
  const auto cyclic = abelianization(pres(1, "aaa"));
  CHECK(cyclic.free_rank == 0);
  CHECK(cyclic.torsion == big({3}));
  CHECK(abelianization_rank(pres(3, "")) == 3);
  CHECK_THROWS_AS(relation_matrix({1, {Word{2}}}), PresentationError);
}

TEST_CASE("covering rank bound") {
  CHECK(covering_rank_bound(3, 2) == BoundRational(2));
  for (int k = 0; k <= 6; ++k) CHECK(covering_rank_bound(k, 1) == BoundRational(k));
  for (int n = 1; n <= 20; ++n) CHECK(covering_rank_bound(2 * n - 2, 2) == BoundRational(2 * n - 1, 2));
  CHECK_THROWS_AS(covering_rank_bound(3, 0), AuditError);
  for (int rank = 1; rank <= 30; ++rank)
    for (int n = 1; n < 30; ++n) CHECK(covering_rank_bound(rank, n + 1) <= covering_rank_bound(rank, n));
}

TEST_CASE("surface group ranks") {
  CHECK(surface_rank(3, 0, true) == 6);
  CHECK(surface_rank(2, 2, true) == 5);
  CHECK(surface_rank(3, 0, false) == 3);
  CHECK(surface_rank(1, 3, false) == 3);
  CHECK(surface_rank(0, 0, true) == 0);
  CHECK_THROWS_AS(surface_rank(0, 1, false), AuditError);
  CHECK_THROWS_AS(surface_rank(-1, 0, true), AuditError);
}

TEST_CASE("rank audit examples") {
  const auto sep = rank_audit(RankAuditCase::make(3, 2, 0, true, true, false));
  CHECK(sep.lower_bound == BoundRational(3) + BoundRational(4, 2));
  CHECK(sep.surface_rank == 2 * 3 + 4 - 1);
  CHECK(sep.passed());

  const auto same = rank_audit(RankAuditCase::make(2, 1, 1, true, false, true));
  CHECK(same.lower_bound * 2 == BoundRational(2 * 2 + 3));
  CHECK(same.surface_rank == 2 * 2 + 3 - 1);
  CHECK(same.passed());

  const auto nonor = rank_audit(RankAuditCase::make(4, 0, 0, false, false, false));
  CHECK(nonor.lower_bound * 2 == BoundRational(4));
  CHECK(nonor.lower_bound_strict);
  CHECK(nonor.surface_rank == 4);
  CHECK(nonor.passed());
  bool strict_step = false;
  for (const auto& s : nonor.steps)
    if (s.label == "incompressible-boundary-rank") strict_step = s.strict && s.assumed;
  CHECK(strict_step);

  const auto closed_sep = rank_audit(RankAuditCase::make(2, 0, 0, true, true, false));
  CHECK(closed_sep.lower_bound_strict);
  CHECK(closed_sep.passed());
}

TEST_CASE("inconsistent audit cases are rejected") {
  RankAuditCase bad = RankAuditCase::make(1, 1, 0, true, false, true);
  bad.k = 3;
  CHECK_THROWS_AS(rank_audit(bad), AuditError);
  CHECK_THROWS_AS(rank_audit(RankAuditCase::make(1, 1, 1, true, true, false)), AuditError);
  CHECK_THROWS_AS(rank_audit(RankAuditCase::make(1, 1, 0, false, true, false)), AuditError);
  CHECK_THROWS_AS(rank_audit(RankAuditCase::make(0, 1, 0, false, false, false)), AuditError);
  CHECK_THROWS_AS(rank_audit(RankAuditCase::make(2, 0, 0, true, false, true)), AuditError);
  CHECK_THROWS_AS(rank_audit(RankAuditCase::make(2, 0, 1, true, false, false)), AuditError);
}

TEST_CASE("rank audit sweep is strict everywhere") {
  int audited = 0;
  for (int g = 0; g <= 10; ++g)
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= 5; ++l)
        for (bool orientable : {true, false})
          for (bool separating : {true, false})
            for (bool same : {true, false}) {
              const auto c = RankAuditCase::make(g, m, l, orientable, separating, same);
              if (c.inconsistency()) continue;
              const auto r = rank_audit(c);
              CHECK(r.identities_hold());
              CHECK(r.final_strict());
              ++audited;
            }
  CHECK(audited > 500);
}
