#pragma once

// Isometries of hyperbolic 3-space acting on the sphere at infinity C u {inf}:
// z -> (az + b)/(cz + d) when orientation preserving, z -> (a conj(z) + b)/(c conj(z) + d)
// when reversing. Matrices are normalised to determinant 1 and compared up to
// sign, all with an absolute tolerance.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace geodouble {

using Complex = std::complex<double>;

struct ToleranceConfig {
  double tol = 1e-9;

  static ToleranceConfig make(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return {tol};
  }
};

struct Mat2 {
  Complex a{1}, b{0}, c{0}, d{1};

  [[nodiscard]] Complex det() const { return a * d - b * c; }
  [[nodiscard]] Complex trace() const { return a + d; }
  [[nodiscard]] Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
  [[nodiscard]] Mat2 operator-() const { return {-a, -b, -c, -d}; }
  [[nodiscard]] Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
  [[nodiscard]] double max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
};

class IsometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Isometry {
  Mat2 m;
  bool reversing = false;

  /// Scales m to determinant 1. Throws on a singular matrix.
  static Isometry make(Mat2 m, bool reversing = false) {
    const Complex det = m.det();
    if (std::abs(det) < 1e-300) throw IsometryError("matrix is not invertible");
    return {m * (Complex(1) / std::sqrt(det)), reversing};
  }

  [[nodiscard]] Isometry inverse() const {
    const Mat2 inv{m.d, -m.b, -m.c, m.a};  // det 1
    // (M, rev)^-1: for reversing maps z -> M conj(z), the inverse is conj(M^-1) conj(z).
    return reversing ? Isometry{inv.conj(), true} : Isometry{inv, false};
  }

  /// Action on a boundary point; nullopt stands for infinity.
  [[nodiscard]] std::optional<Complex> apply(std::optional<Complex> z) const {
    if (reversing && z) z = std::conj(*z);
    if (!z) {
      if (m.c == Complex(0)) return std::nullopt;
      return m.a / m.c;
    }
    const Complex den = m.c * *z + m.d;
    if (den == Complex(0)) return std::nullopt;
    return (m.a * *z + m.b) / den;
  }
};

/// (M, r)∘(N, s): apply (N, s) first. A reversing left factor conjugates the
/// right factor's matrix entrywise.
[[nodiscard]] inline Isometry compose(const Isometry& left, const Isometry& right) {
  const Mat2 rhs = left.reversing ? right.m.conj() : right.m;
  return {left.m * rhs, left.reversing != right.reversing};
}

[[nodiscard]] inline Isometry operator*(const Isometry& left, const Isometry& right) { return compose(left, right); }

/// Entrywise equality up to sign.
[[nodiscard]] inline bool equal_up_to_sign(const Mat2& x, const Mat2& y, double tol) {
  return (x - y).max_abs() <= tol || (x + y).max_abs() <= tol;
}

[[nodiscard]] inline bool is_identity(const Isometry& g, ToleranceConfig cfg = {}) {
  return !g.reversing && equal_up_to_sign(g.m, Mat2{}, cfg.tol);
}

enum class ElementClass { identity, elliptic, parabolic, loxodromic };

inline std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::identity: return "identity";
    case ElementClass::elliptic: return "elliptic";
    case ElementClass::parabolic: return "parabolic";
    case ElementClass::loxodromic: return "loxodromic";
  }
  return "?";
}

/// Trace classification of an orientation-preserving isometry.
[[nodiscard]] inline ElementClass classify(const Isometry& g0, ToleranceConfig cfg = {}) {
  if (g0.reversing) throw IsometryError("classify expects an orientation-preserving isometry");
  const Isometry g = Isometry::make(g0.m);
  if (is_identity(g, cfg)) return ElementClass::identity;
  const Complex t2 = g.m.trace() * g.m.trace();
  if (std::abs(t2 - Complex(4)) <= cfg.tol) return ElementClass::parabolic;
  if (std::abs(t2.imag()) <= cfg.tol && t2.real() >= -cfg.tol && t2.real() < 4.0) return ElementClass::elliptic;
  return ElementClass::loxodromic;
}

/// A point of C u {inf}; nullopt is infinity.
using BoundaryPoint = std::optional<Complex>;

/// Chordal distance on the Riemann sphere (diameter 2).
[[nodiscard]] inline double chordal(const BoundaryPoint& z, const BoundaryPoint& w) {
  if (!z && !w) return 0.0;
  if (!z) return 2.0 / std::sqrt(1.0 + std::norm(*w));
  if (!w) return 2.0 / std::sqrt(1.0 + std::norm(*z));
  return 2.0 * std::abs(*z - *w) / std::sqrt((1.0 + std::norm(*z)) * (1.0 + std::norm(*w)));
}

inline std::string to_string(const BoundaryPoint& p) {
  if (!p) return "inf";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", p->real() + 0.0, p->imag() + 0.0);
  return buf;
}

struct FixedAll {};
/// No fixed point on the sphere at infinity: the reflection in an interior point.
struct FixedNone {};
struct FixedPoints {
  std::vector<BoundaryPoint> points;
};
/// |z - center| = radius
struct FixedCircle {
  Complex center;
  double radius;
};
/// point + t * direction, t real (a circle through infinity)
struct FixedLine {
  Complex point;
  Complex direction;
};

using FixedSet = std::variant<FixedAll, FixedNone, FixedPoints, FixedCircle, FixedLine>;

namespace detail {

// Fixed points of z -> (az+b)/(cz+d): c z^2 + (d - a) z - b = 0.
inline std::vector<BoundaryPoint> mobius_fixed_points(const Mat2& m, double tol) {
  const double scale = std::max(1.0, m.max_abs());
  const Complex t = m.trace();
  const bool parabolic = std::abs(t * t - Complex(4)) <= tol;
  if (std::abs(m.c) <= tol * scale) {
    // infinity is fixed; the other root solves (d - a) z = b
    if (std::abs(m.d - m.a) <= tol * scale) return {std::nullopt};
    return {std::nullopt, BoundaryPoint{m.b / (m.d - m.a)}};
  }
  if (parabolic) return {BoundaryPoint{(m.a - m.d) / (Complex(2) * m.c)}};
  // Pick the sign that avoids cancellation; the roots multiply to -b/c.
  const Complex disc = std::sqrt(t * t - Complex(4));
  const Complex q = std::abs(m.a - m.d + disc) >= std::abs(m.a - m.d - disc) ? m.a - m.d + disc : m.a - m.d - disc;
  return {BoundaryPoint{q / (Complex(2) * m.c)}, BoundaryPoint{Complex(-2) * m.b / q}};
}

}  // namespace detail

[[nodiscard]] inline bool is_involution(const Isometry& g, ToleranceConfig cfg = {}) {
  const Isometry sq = compose(g, g);
  return is_identity(Isometry::make(sq.m, sq.reversing), cfg);
}

enum class ReflectionKind { point, plane };

/// A reversing involution is either the reflection in an interior point
/// (M conj(M) = -I) or in a plane (M conj(M) = +I). nullopt otherwise.
[[nodiscard]] inline std::optional<ReflectionKind> reflection_kind(const Isometry& g0, ToleranceConfig cfg = {}) {
  if (!g0.reversing) return std::nullopt;
  const Isometry g = Isometry::make(g0.m, true);
  const Mat2 sq = g.m * g.m.conj();
  if ((sq - Mat2{}).max_abs() <= cfg.tol) return ReflectionKind::plane;
  if ((sq + Mat2{}).max_abs() <= cfg.tol) return ReflectionKind::point;
  return std::nullopt;
}

[[nodiscard]] inline FixedSet fixed_points(const Isometry& g0, ToleranceConfig cfg = {}) {
  const Isometry g = Isometry::make(g0.m, g0.reversing);
  if (!g.reversing) {
    if (is_identity(g, cfg)) return FixedAll{};
    return FixedPoints{detail::mobius_fixed_points(g.m, cfg.tol)};
  }
  if (const auto kind = reflection_kind(g, cfg)) {
    if (*kind == ReflectionKind::point) return FixedNone{};
    // Fixed set of z -> M conj(z) with M conj(M) = I: c|z|^2 + d z - a conj(z) - b = 0.
    const Mat2& m = g.m;
    if (std::abs(m.c) <= cfg.tol * std::max(1.0, m.max_abs())) {
      // z -> alpha conj(z) + beta, a reflection in a line with direction sqrt(alpha).
      const Complex alpha = m.a / m.d;
      const Complex beta = m.b / m.d;
      return FixedLine{beta / Complex(2), std::sqrt(alpha)};
    }
    // Multiply by conj(c)/|c| to make the equation Hermitian:
    // A|z|^2 + B z + conj(B) conj(z) + C = 0 with A > 0, C real.
    const Complex mu = std::conj(m.c) / std::abs(m.c);
    const double big_a = std::abs(m.c);
    const Complex big_b = mu * m.d;
    const double big_c = (-mu * m.b).real();
    const Complex center = -std::conj(big_b) / big_a;
    const double r2 = std::norm(big_b) / (big_a * big_a) - big_c / big_a;
    return FixedCircle{center, std::sqrt(std::max(0.0, r2))};
  }
  // A reversing non-involution: its fixed points are among those of g^2.
  const Isometry sq = compose(g, g);
  std::vector<BoundaryPoint> out;
  for (const auto& p : detail::mobius_fixed_points(Isometry::make(sq.m).m, cfg.tol))
    if (chordal(g.apply(p), p) <= std::sqrt(cfg.tol)) out.push_back(p);
  if (out.empty()) return FixedNone{};
  return FixedPoints{out};
}

/// True iff a b a^-1 b^-1 is the identity up to sign.
[[nodiscard]] inline bool commute(const Isometry& a, const Isometry& b, ToleranceConfig cfg = {}) {
  const Isometry x = Isometry::make(a.m, a.reversing);
  const Isometry y = Isometry::make(b.m, b.reversing);
  const Isometry comm = compose(compose(x, y), compose(x.inverse(), y.inverse()));
  return is_identity(comm, cfg);
}

enum class CommutingCase { shared_parabolic_point, shared_axis, perpendicular_pi_rotations, none };

inline std::string to_string(CommutingCase c) {
  switch (c) {
    case CommutingCase::shared_parabolic_point: return "shared_parabolic_point";
    case CommutingCase::shared_axis: return "shared_axis";
    case CommutingCase::perpendicular_pi_rotations: return "perpendicular_pi_rotations";
    case CommutingCase::none: return "none";
  }
  return "?";
}

/// Cross ratio (p1, p2; q1, q2) = (p1 - q1)(p2 - q2) / ((p1 - q2)(p2 - q1)),
/// with infinity handled by dropping its factors. nullopt if degenerate.
[[nodiscard]] inline std::optional<Complex> cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                                                        const BoundaryPoint& q1, const BoundaryPoint& q2) {
  auto diff = [](const BoundaryPoint& x, const BoundaryPoint& y) -> std::optional<Complex> {
    if (!x || !y) return std::nullopt;  // factor containing infinity
    return *x - *y;
  };
  Complex num(1), den(1);
  if (auto v = diff(p1, q1)) num *= *v;
  if (auto v = diff(p2, q2)) num *= *v;
  if (auto v = diff(p1, q2)) den *= *v;
  if (auto v = diff(p2, q1)) den *= *v;
  if (std::abs(den) == 0.0) return std::nullopt;
  return num / den;
}

namespace detail {

// Distance between two fixed-point pairs as unordered sets.
inline double pair_distance(const std::vector<BoundaryPoint>& x, const std::vector<BoundaryPoint>& y) {
  if (x.size() != 2 || y.size() != 2) return 2.0;
  return std::min(std::max(chordal(x[0], y[0]), chordal(x[1], y[1])),
                  std::max(chordal(x[0], y[1]), chordal(x[1], y[0])));
}

}  // namespace detail

/// How two nontrivial orientation-preserving isometries commute:
/// parabolics with a common fixed point, non-parabolics with a common axis, or
/// two half-turns about perpendicular axes.
[[nodiscard]] inline CommutingCase commuting_criterion(const Isometry& a, const Isometry& b, ToleranceConfig cfg = {}) {
  if (a.reversing || b.reversing) throw IsometryError("commuting_criterion expects orientation-preserving isometries");
  const auto ca = classify(a, cfg);
  const auto cb = classify(b, cfg);
  if (ca == ElementClass::identity || cb == ElementClass::identity)
    throw IsometryError("commuting_criterion expects nontrivial isometries");
  const auto fa = std::get<FixedPoints>(fixed_points(a, cfg)).points;
  const auto fb = std::get<FixedPoints>(fixed_points(b, cfg)).points;

  if (ca == ElementClass::parabolic && cb == ElementClass::parabolic) {
    return chordal(fa[0], fb[0]) <= cfg.tol ? CommutingCase::shared_parabolic_point : CommutingCase::none;
  }
  if (ca == ElementClass::parabolic || cb == ElementClass::parabolic) return CommutingCase::none;
  if (detail::pair_distance(fa, fb) <= cfg.tol) return CommutingCase::shared_axis;

  auto half_turn = [&](const Isometry& g) { return std::abs(Isometry::make(g.m).m.trace()) <= cfg.tol; };
  if (ca == ElementClass::elliptic && cb == ElementClass::elliptic && half_turn(a) && half_turn(b)) {
    // Perpendicular intersecting axes <=> the endpoints are harmonic.
    if (const auto cr = cross_ratio(fa[0], fa[1], fb[0], fb[1]); cr && std::abs(*cr + Complex(1)) <= cfg.tol)
      return CommutingCase::perpendicular_pi_rotations;
  }
  return CommutingCase::none;
}

enum class FixType { trivial, infinite_cyclic, free_abelian_rank2, whole_group, surface_group };

inline std::string to_string(FixType t) {
  switch (t) {
    case FixType::trivial: return "{e}";
    case FixType::infinite_cyclic: return "Z";
    case FixType::free_abelian_rank2: return "Z+Z";
    case FixType::whole_group: return "G";
    case FixType::surface_group: return "pi1(S)";
  }
  return "?";
}

/// Possible fixed subgroups of an automorphism of a hyperbolic 3-manifold group,
/// by the type of the inducing isometry. `manifold_closed` only matters for
/// orientation-preserving isometries, `phi_squared_identity` only for reversing ones.
[[nodiscard]] inline std::set<FixType> fix_type_table(bool orientation_preserving, bool phi_squared_identity,
                                                      bool manifold_closed) {
  using enum FixType;
  if (orientation_preserving) {
    if (manifold_closed) return {infinite_cyclic, whole_group};
    return {trivial, infinite_cyclic, free_abelian_rank2, whole_group};
  }
  if (!phi_squared_identity) return {trivial, infinite_cyclic};
  return {trivial, surface_group};
}

/// Parses "a,b;c,d" with entries such as 1, -2.5, i, 3-4i, 0.5+2i.
inline Mat2 parse_matrix(const std::string& text);

namespace detail {

inline Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  auto parse_real = [](const std::string& t) {
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad number '" + t + "'");
    return v;
  };
  auto parse_imag = [&](const std::string& t) {  // t ends with 'i'
    const std::string coef = t.substr(0, t.size() - 1);
    if (coef.empty() || coef == "+") return 1.0;
    if (coef == "-") return -1.0;
    return parse_real(coef);
  };
  if (s.back() != 'i') return {parse_real(s), 0.0};
  // Split at the last sign that is not part of an exponent and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag(s)};
  return {parse_real(s.substr(0, split)), parse_imag(s.substr(split))};
}

}  // namespace detail

inline Mat2 parse_matrix(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("matrix must look like \"a,b;c,d\"");
  try {
    return {detail::parse_complex(parts[0]), detail::parse_complex(parts[1]), detail::parse_complex(parts[2]),
            detail::parse_complex(parts[3])};
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("cannot parse matrix: ") + e.what());
  }
}

}  // namespace geodouble
