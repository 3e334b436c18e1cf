#pragma once

// The cyclic n-tetrahedron family: n copies of the labelled tetrahedron with
// pairings 132_i ~ 453_{i+1} and 264_i ~ 516_{i+1} (indices mod n). For n > 3
// with 3 not dividing n the result has two edge classes of valence 3n and a
// single vertex whose link is a closed orientable surface of genus n - 1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>

#include "geodouble/triangulation.hpp"

namespace geodouble {

using Rational = boost::rational<std::int64_t>;

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

[[nodiscard]] constexpr bool admissible_family_size(std::int64_t n) { return n > 3 && n % 3 != 0; }

struct FamilyParams {
  std::int64_t n;

  static FamilyParams make(std::int64_t n) {
    if (!admissible_family_size(n))
      throw FamilyError("n = " + std::to_string(n) + " is not admissible (need n > 3 and 3 not dividing n)");
    return FamilyParams{n};
  }
};

inline GluingScheme generate_paper_scheme(FamilyParams params) {
  const int n = static_cast<int>(FamilyParams::make(params.n).n);
  const FaceLabel f132{{1, 3, 2}}, f453{{4, 5, 3}}, f264{{2, 6, 4}}, f516{{5, 1, 6}};
  std::vector<FacePairing> pairings;
  pairings.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    pairings.push_back({{i, f132}, {j, f453}});
    pairings.push_back({{i, f264}, {j, f516}});
  }
  return GluingScheme(n, std::move(pairings));
}

struct Check {
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::int64_t n = 0;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

/// Glues the family member and checks every combinatorial claim about it.
inline VerificationReport verify_paper_invariants(FamilyParams params) {
  const auto n = params.n;
  VerificationReport report{n, {}};
  auto check = [&](std::string claim, auto expected, auto actual) {
    const bool ok = expected == actual;
    auto str = [](const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, bool>) return std::string(v ? "true" : "false");
      else return std::to_string(v);
    };
    report.checks.push_back({std::move(claim), str(expected), str(actual), ok});
  };

  const auto complex = glue(generate_paper_scheme(params));
  check("edge class count", 2, static_cast<int>(complex.edge_classes.size()));
  for (std::size_t i = 0; i < complex.edge_classes.size(); ++i)
    check("valence of edge class " + std::to_string(i), 3 * n,
          static_cast<std::int64_t>(complex.edge_classes[i].valence()));
  check("vertex class count", 1, complex.vertex_class_count);
  check("orientable", true, complex.orientable);

  const auto boundary = boundary_surfaces(complex);
  check("boundary component count", 1, static_cast<int>(boundary.components.size()));
  if (!boundary.components.empty()) {
    const auto& b = boundary.components.front();
    check("boundary orientable", true, b.orientable);
    check("boundary genus", n - 1, static_cast<std::int64_t>(b.genus()));
  }
  check("boundary triangle count", 4 * n, static_cast<std::int64_t>(boundary.total_triangles()));

  const auto handles = handle_structure(complex);
  check("handlebody genus", n + 1, static_cast<std::int64_t>(handles.handlebody_genus));
  check("two-handle count", 2, handles.two_handles);

  for (const auto& e : dihedral_admissibility(complex)) {
    check("edge class " + std::to_string(e.edge_class) + " angle 2pi/" + std::to_string(e.valence) +
              " inside (0, 60) degrees",
          true, e.admissible && e.angle_degrees > 0.0 && e.angle_degrees < 60.0);
  }
  return report;
}

/// Rank bookkeeping for the closed double and for its one-cusped variant
/// (a boundary geodesic removed before doubling).
struct FamilyStats {
  std::int64_t n = 0;
  std::int64_t handlebody_genus = 0;
  std::int64_t boundary_genus = 0;
  std::int64_t rank_upper_closed = 0;
  std::int64_t fix_rank_closed = 0;
  Rational ratio_closed;
  /// The cusped bound is strict: rank < n + 4, stored as rank <= n + 3.
  std::int64_t rank_upper_cusped = 0;
  bool rank_upper_cusped_strict = true;
  std::int64_t fix_rank_cusped = 0;
  Rational ratio_cusped;
};

inline FamilyStats family_stats(FamilyParams params) {
  const auto n = FamilyParams::make(params.n).n;
  FamilyStats s;
  s.n = n;
  s.handlebody_genus = n + 1;
  s.boundary_genus = n - 1;
  // Doubling a genus-(n+1) handlebody with 2 two-handles: rank <= genus + handles.
  s.rank_upper_closed = s.handlebody_genus + 2;
  // Closed orientable genus-g surface group has rank 2g.
  s.fix_rank_closed = 2 * s.boundary_genus;
  s.ratio_closed = Rational(s.fix_rank_closed, s.rank_upper_closed);
  s.rank_upper_cusped = n + 3;
  // Twice-punctured genus-(n-2) surface: free of rank 2(n-2)+1.
  s.fix_rank_cusped = 2 * (n - 2) + 1;
  s.ratio_cusped = Rational(s.fix_rank_cusped, (s.rank_upper_cusped + 1));
  return s;
}

/// Smallest admissible n with (2n-2)/(n+3) > 2 - eps, for 0 < eps < 2.
inline std::int64_t min_n_for_ratio(Rational eps) {
  if (eps <= 0 || eps >= 2) throw FamilyError("epsilon must lie in (0, 2)");
  // (2n-2)/(n+3) > 2 - eps  <=>  eps*n > 8 - 3*eps  <=>  n > 8/eps - 3
  const Rational threshold = Rational(8) / eps - 3;
  std::int64_t n = boost::rational_cast<std::int64_t>(threshold);  // truncates toward zero
  if (Rational(n) <= threshold) ++n;
  if (n < 4) n = 4;
  while (!admissible_family_size(n)) ++n;
  const Rational two_minus_eps = Rational(2) - eps;
  if (Rational(2 * n - 2, n + 3) <= two_minus_eps)
    throw std::logic_error("min_n_for_ratio: closed form disagrees with the ratio");
  return n;
}

/// Parses a decimal ("0.1", "1.25") or fraction ("1/10") into an exact rational.
inline Rational parse_rational(const std::string& text) {
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      const auto num = std::stoll(text.substr(0, slash), &p1);
      const auto den = std::stoll(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1 || den == 0) throw std::invalid_argument(text);
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    std::string digits = text;
    std::int64_t den = 1;
    if (dot != std::string::npos) {
      digits = text.substr(0, dot) + text.substr(dot + 1);
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    }
    if (digits.empty() || digits == "-") throw std::invalid_argument(text);
    std::size_t pos = 0;
    const auto num = std::stoll(digits, &pos);
    if (pos != digits.size()) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw FamilyError("cannot parse '" + text + "' as a rational number");
  }
}

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace geodouble
