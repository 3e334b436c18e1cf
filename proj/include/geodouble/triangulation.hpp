#pragma once

// Face-pairing schemes on tetrahedra and their identification combinatorics.
//
// Every tetrahedron carries the same fixed labelling. Vertices v0..v3; each of
// the six edges has a label 1..6 and a direction; each face is named by the
// triple of edge labels around it:
//
//   edge 1: v1 -> v2     face 132 (opposite v0)
//   edge 2: v3 -> v1     face 453 (opposite v1)
//   edge 3: v2 -> v3     face 264 (opposite v2)
//   edge 4: v3 -> v0     face 516 (opposite v3)
//   edge 5: v0 -> v2
//   edge 6: v0 -> v1
//
// A pairing matches the listed edge triples of its two faces position by
// position (optionally rotated by `edgeorder`). Consecutive edges of a triple
// share a vertex, so the edge correspondence fixes the vertex map.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "geodouble/union_find.hpp"

namespace geodouble {

class SchemeError : public std::runtime_error {
 public:
  explicit SchemeError(const std::string& what) : std::runtime_error(what) {}
  SchemeError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

namespace tetra {

struct DirectedEdge {
  int tail;
  int head;
};

// Indexed by edge label - 1.
inline constexpr std::array<DirectedEdge, 6> kEdges{{
    {1, 2}, {3, 1}, {2, 3}, {3, 0}, {0, 2}, {0, 1}}};

// Indexed by the opposite vertex.
inline constexpr std::array<std::array<int, 3>, 4> kFaces{{
    {1, 3, 2}, {4, 5, 3}, {2, 6, 4}, {5, 1, 6}}};

[[nodiscard]] constexpr bool edge_has_vertex(int label, int v) {
  return kEdges[label - 1].tail == v || kEdges[label - 1].head == v;
}

[[nodiscard]] constexpr int shared_vertex(int label_a, int label_b) {
  const auto& a = kEdges[label_a - 1];
  if (edge_has_vertex(label_b, a.tail)) return a.tail;
  if (edge_has_vertex(label_b, a.head)) return a.head;
  return -1;
}

[[nodiscard]] constexpr int edge_between(int u, int v) {
  for (int i = 0; i < 6; ++i) {
    const auto& e = kEdges[i];
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) return i + 1;
  }
  return -1;
}

}  // namespace tetra

/// A face named by an ordering of its three edge labels, e.g. {1,3,2}.
struct FaceLabel {
  std::array<int, 3> edges{};

  /// Index of the face (= its opposite vertex), or nullopt if the three labels
  /// are not the edges of a single face.
  [[nodiscard]] std::optional<int> face_index() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (int f = 0; f < 4; ++f) {
      auto face = tetra::kFaces[f];
      std::sort(face.begin(), face.end());
      if (face == sorted) return f;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (int e : edges) s += static_cast<char>('0' + e);
    return s;
  }

  static FaceLabel parse(std::string_view text) {
    if (text.size() != 3) throw SchemeError("face label '" + std::string(text) + "' must have 3 digits");
    FaceLabel f;
    for (int i = 0; i < 3; ++i) {
      if (text[i] < '1' || text[i] > '6')
        throw SchemeError("face label '" + std::string(text) + "' uses an edge outside 1..6");
      f.edges[i] = text[i] - '0';
    }
    if (!f.face_index()) throw SchemeError("edges '" + std::string(text) + "' do not bound a face");
    return f;
  }

  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

struct FaceSlot {
  int tet = 0;
  FaceLabel face;

  [[nodiscard]] int face_index() const { return *face.face_index(); }
  [[nodiscard]] std::pair<int, int> key() const { return {tet, face_index()}; }

  friend bool operator==(const FaceSlot&, const FaceSlot&) = default;
};

struct FacePairing {
  FaceSlot side_a;
  FaceSlot side_b;
  /// Position i of side_a's triple is glued to position edge_map[i] of side_b's.
  std::array<int, 3> edge_map{0, 1, 2};

  /// side_b's edge labels reordered to line up with side_a's.
  [[nodiscard]] std::array<int, 3> matched_b_edges() const {
    return {side_b.face.edges[edge_map[0]], side_b.face.edges[edge_map[1]],
            side_b.face.edges[edge_map[2]]};
  }

  /// Vertex map from side_a's tetrahedron to side_b's (all four vertices; the
  /// opposite vertex goes to the opposite vertex).
  [[nodiscard]] std::array<int, 4> vertex_map() const {
    std::array<int, 4> map{};
    const auto& ea = side_a.face.edges;
    const auto eb = matched_b_edges();
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      map[tetra::shared_vertex(ea[i], ea[j])] = tetra::shared_vertex(eb[i], eb[j]);
    }
    map[side_a.face_index()] = side_b.face_index();
    return map;
  }

  /// True when the vertex map is an odd permutation of {0,1,2,3}.
  [[nodiscard]] bool odd() const {
    const auto m = vertex_map();
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (m[i] > m[j]) ++inversions;
    return inversions % 2 == 1;
  }

  friend bool operator==(const FacePairing&, const FacePairing&) = default;
};

namespace detail {

inline bool is_rotation(const std::array<int, 3>& p) {
  return p == std::array<int, 3>{0, 1, 2} || p == std::array<int, 3>{1, 2, 0} ||
         p == std::array<int, 3>{2, 0, 1};
}

inline std::array<int, 3> invert(const std::array<int, 3>& p) {
  std::array<int, 3> q{};
  for (int i = 0; i < 3; ++i) q[p[i]] = i;
  return q;
}

}  // namespace detail

/// A set of face pairings over `tet_count` tetrahedra. Pairings are kept in a
/// canonical order with side_a's slot before side_b's.
class GluingScheme {
 public:
  GluingScheme(int tet_count, std::vector<FacePairing> pairings)
      : tet_count_(tet_count), pairings_(std::move(pairings)) {
    if (tet_count_ <= 0) throw SchemeError("scheme needs at least one tetrahedron");
    std::vector<std::pair<int, int>> used;
    for (auto& p : pairings_) {
      for (const FaceSlot* s : {&p.side_a, &p.side_b}) {
        if (s->tet < 0 || s->tet >= tet_count_)
          throw SchemeError("tetrahedron " + std::to_string(s->tet + 1) + " out of range");
        if (!s->face.face_index())
          throw SchemeError("edges " + s->face.to_string() + " do not bound a face");
      }
      if (!detail::is_rotation(p.edge_map))
        throw SchemeError("edge_map must preserve cyclic order");
      if (p.side_a.key() == p.side_b.key())
        throw SchemeError("face " + describe(p.side_a) + " is paired with itself");
      for (const FaceSlot* s : {&p.side_a, &p.side_b}) {
        if (std::find(used.begin(), used.end(), s->key()) != used.end())
          throw SchemeError("face slot " + describe(*s) + " appears in two pairings");
        used.push_back(s->key());
      }
      if (p.side_b.key() < p.side_a.key()) {
        std::swap(p.side_a, p.side_b);
        p.edge_map = detail::invert(p.edge_map);
      }
    }
    std::sort(pairings_.begin(), pairings_.end(), [](const FacePairing& x, const FacePairing& y) {
      return x.side_a.key() < y.side_a.key();
    });
  }

  [[nodiscard]] int tet_count() const { return tet_count_; }
  [[nodiscard]] const std::vector<FacePairing>& pairings() const { return pairings_; }
  [[nodiscard]] bool closed() const {
    return pairings_.size() * 2 == static_cast<std::size_t>(tet_count_) * 4;
  }

  friend bool operator==(const GluingScheme&, const GluingScheme&) = default;

  static std::string describe(const FaceSlot& s) {
    return std::to_string(s.tet + 1) + "." + s.face.to_string();
  }

 private:
  int tet_count_;
  std::vector<FacePairing> pairings_;
};

/// Parses the line-oriented scheme format:
///
///   # comment
///   tets N
///   pair <i>.<face> <j>.<face> [edgeorder p q r]
///
/// Tetrahedra are numbered from 1 in the file.
inline GluingScheme parse_scheme(std::string_view text) {
  std::optional<int> tets;
  std::vector<FacePairing> pairings;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> seen;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto parse_int = [&](const std::string& tok) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::logic_error&) {
      throw SchemeError(lineno, "expected an integer, got '" + tok + "'");
    }
  };
  auto parse_slot = [&](const std::string& tok) {
    const auto dot = tok.find('.');
    if (dot == std::string::npos) throw SchemeError(lineno, "expected <tet>.<face>, got '" + tok + "'");
    FaceSlot slot;
    slot.tet = parse_int(tok.substr(0, dot)) - 1;
    if (slot.tet < 0 || slot.tet >= *tets)
      throw SchemeError(lineno, "tetrahedron " + tok.substr(0, dot) + " out of range");
    try {
      slot.face = FaceLabel::parse(tok.substr(dot + 1));
    } catch (const SchemeError& e) {
      throw SchemeError(lineno, e.what());
    }
    return slot;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].starts_with('#')) continue;

    if (tok[0] == "tets") {
      if (tets) throw SchemeError(lineno, "duplicate 'tets' header");
      if (tok.size() != 2) throw SchemeError(lineno, "expected 'tets N'");
      tets = parse_int(tok[1]);
      if (*tets <= 0) throw SchemeError(lineno, "tetrahedron count must be positive");
    } else if (tok[0] == "pair") {
      if (!tets) throw SchemeError(lineno, "'pair' before 'tets' header");
      if (tok.size() != 3 && tok.size() != 7) throw SchemeError(lineno, "malformed pair line");
      FacePairing p;
      p.side_a = parse_slot(tok[1]);
      p.side_b = parse_slot(tok[2]);
      if (tok.size() == 7) {
        if (tok[3] != "edgeorder") throw SchemeError(lineno, "expected 'edgeorder'");
        for (int i = 0; i < 3; ++i) {
          const int v = parse_int(tok[4 + i]);
          if (v < 1 || v > 3) throw SchemeError(lineno, "edgeorder entries must be 1..3");
          p.edge_map[i] = v - 1;
        }
        if (!detail::is_rotation(p.edge_map))
          throw SchemeError(lineno, "edgeorder must be a cyclic rotation");
      }
      if (p.side_a.key() == p.side_b.key())
        throw SchemeError(lineno, "face " + GluingScheme::describe(p.side_a) + " is paired with itself");
      for (const FaceSlot* s : {&p.side_a, &p.side_b}) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& x) { return x.first == s->key(); });
        if (it != seen.end())
          throw SchemeError(lineno, "face slot " + GluingScheme::describe(*s) +
                                        " already paired on line " + std::to_string(it->second));
        seen.emplace_back(s->key(), lineno);
      }
      pairings.push_back(p);
    } else {
      throw SchemeError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!tets) throw SchemeError("missing 'tets N' header");
  return GluingScheme(*tets, std::move(pairings));
}

/// Canonical text form; parse_scheme(render_scheme(s)) == s.
inline std::string render_scheme(const GluingScheme& s) {
  std::string out = "tets " + std::to_string(s.tet_count()) + "\n";
  for (const auto& p : s.pairings()) {
    out += "pair " + GluingScheme::describe(p.side_a) + " " + GluingScheme::describe(p.side_b);
    if (p.edge_map != std::array<int, 3>{0, 1, 2}) {
      out += " edgeorder";
      for (int v : p.edge_map) out += " " + std::to_string(v + 1);
    }
    out += "\n";
  }
  return out;
}

struct EdgeMember {
  int tet;
  int edge;       // label 1..6
  bool reversed;  // direction relative to the class's first member

  friend auto operator<=>(const EdgeMember&, const EdgeMember&) = default;
};

/// An orbit of tetrahedron edges. The dihedral angle is 2*pi/valence, kept
/// symbolically.
struct EdgeClass {
  std::vector<EdgeMember> members;
  /// Some member is identified with its own reverse.
  bool self_reversed = false;

  [[nodiscard]] int valence() const { return static_cast<int>(members.size()); }
  [[nodiscard]] double angle_radians() const { return 2.0 * std::numbers::pi / valence(); }
  [[nodiscard]] double angle_degrees() const { return 360.0 / valence(); }
};

struct GlueOptions {
  bool allow_open = false;
};

struct GluedComplex {
  GluingScheme scheme;
  std::vector<EdgeClass> edge_classes;
  int vertex_class_count = 0;
  bool orientable = false;

  /// edge_class_of[6*tet + label-1] and whether that edge runs against the class direction.
  std::vector<int> edge_class_of;
  std::vector<bool> edge_reversed;
  /// vertex_class_of[4*tet + v]
  std::vector<int> vertex_class_of;

  [[nodiscard]] int edge_class(int tet, int label) const { return edge_class_of[6 * tet + label - 1]; }
  [[nodiscard]] bool edge_against_class(int tet, int label) const { return edge_reversed[6 * tet + label - 1]; }
  [[nodiscard]] int vertex_class(int tet, int v) const { return vertex_class_of[4 * tet + v]; }

  [[nodiscard]] bool connected() const {
    UnionFind uf(scheme.tet_count());
    for (const auto& p : scheme.pairings()) uf.unite(p.side_a.tet, p.side_b.tet);
    return uf.components() == 1;
  }
};

namespace detail {

// Signs per node so that every constraint (a, b, odd) holds with
// sign[b] == (odd ? sign[a] : -sign[a]). Returns nullopt on contradiction.
inline std::optional<std::vector<int>> propagate_signs(
    int nodes, const std::vector<std::tuple<int, int, bool>>& constraints) {
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);
  for (const auto& [a, b, odd] : constraints) {
    const int rel = odd ? 1 : -1;
    adj[a].emplace_back(b, rel);
    adj[b].emplace_back(a, rel);
  }
  std::vector<int> sign(nodes, 0);
  for (int start = 0; start < nodes; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [v, rel] : adj[u]) {
        const int want = sign[u] * rel;
        if (sign[v] == 0) {
          sign[v] = want;
          stack.push_back(v);
        } else if (sign[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

}  // namespace detail

/// Computes edge classes, vertex classes and orientability.
inline GluedComplex glue(const GluingScheme& scheme, GlueOptions opts = {}) {
  if (!scheme.closed() && !opts.allow_open)
    throw SchemeError("scheme is not closed: " + std::to_string(scheme.pairings().size() * 2) + " of " +
                      std::to_string(scheme.tet_count() * 4) + " faces paired");
  const int n = scheme.tet_count();

  ParityUnionFind edges(6 * n);
  UnionFind verts(4 * n);
  bool self_reversed_any = false;
  std::vector<std::tuple<int, int, bool>> constraints;

  for (const auto& p : scheme.pairings()) {
    const auto vmap = p.vertex_map();
    const int ta = p.side_a.tet;
    const int tb = p.side_b.tet;
    const auto eb = p.matched_b_edges();
    for (int i = 0; i < 3; ++i) {
      const int la = p.side_a.face.edges[i];
      const int lb = eb[i];
      const bool flip = vmap[tetra::kEdges[la - 1].tail] != tetra::kEdges[lb - 1].tail;
      if (!edges.unite(6 * ta + la - 1, 6 * tb + lb - 1, flip)) self_reversed_any = true;
    }
    for (int v = 0; v < 4; ++v) {
      if (v == p.side_a.face_index()) continue;
      verts.unite(4 * ta + v, 4 * tb + vmap[v]);
    }
    constraints.emplace_back(ta, tb, p.odd());
  }

  GluedComplex c{scheme, {}, 0, false, {}, {}, {}};
  c.edge_class_of.assign(6 * n, -1);
  c.edge_reversed.assign(6 * n, false);
  std::vector<int> root_to_class(6 * n, -1);
  for (int i = 0; i < 6 * n; ++i) {
    const auto [root, parity] = edges.find(i);
    if (root_to_class[root] < 0) {
      root_to_class[root] = static_cast<int>(c.edge_classes.size());
      c.edge_classes.emplace_back();
    }
    const int cls = root_to_class[root];
    c.edge_class_of[i] = cls;
    c.edge_classes[cls].members.push_back({i / 6, i % 6 + 1, parity});
  }
  // Re-express member directions relative to the first (smallest) member.
  for (int i = 0; i < 6 * n; ++i) {
    auto& cls = c.edge_classes[c.edge_class_of[i]];
    const bool base = cls.members.front().reversed;
    c.edge_reversed[i] = edges.find(i).second != base;
  }
  for (auto& cls : c.edge_classes) {
    const bool base = cls.members.front().reversed;
    for (auto& m : cls.members) m.reversed = m.reversed != base;
  }
  if (self_reversed_any) {
    for (int i = 0; i < 6 * n; ++i)
      if (edges.contradicted(i)) c.edge_classes[c.edge_class_of[i]].self_reversed = true;
  }

  c.vertex_class_of = verts.labels();
  c.vertex_class_count = verts.components();
  c.orientable = detail::propagate_signs(n, constraints).has_value();
  return c;
}

struct BoundaryComponent {
  int vertex_class = 0;
  int triangles = 0;  // F
  int edges = 0;      // E
  int vertices = 0;   // V
  bool orientable = false;

  [[nodiscard]] int euler_characteristic() const { return vertices - edges + triangles; }
  /// Orientable genus, or number of cross-caps for a non-orientable surface.
  [[nodiscard]] int genus() const {
    const int chi = euler_characteristic();
    return orientable ? (2 - chi) / 2 : 2 - chi;
  }
};

struct BoundarySurfaceStats {
  std::vector<BoundaryComponent> components;

  [[nodiscard]] int total_triangles() const {
    int f = 0;
    for (const auto& c : components) f += c.triangles;
    return f;
  }
};

/// Vertex links of a closed complex: one surface per vertex class, built from
/// the 4n corner triangles.
inline BoundarySurfaceStats boundary_surfaces(const GluedComplex& c) {
  if (!c.scheme.closed()) throw SchemeError("boundary surfaces need a closed scheme");
  const int n = c.scheme.tet_count();
  // Link vertex: corner v of tet t towards w, index 16t + 4v + w.
  UnionFind link_verts(16 * n);
  // Link edge: corner v of tet t along face f (f != v), index 16t + 4v + f.
  UnionFind link_edges(16 * n);
  std::vector<std::tuple<int, int, bool>> corner_constraints;

  for (const auto& p : c.scheme.pairings()) {
    const auto vmap = p.vertex_map();
    const int ta = p.side_a.tet;
    const int tb = p.side_b.tet;
    const int fa = p.side_a.face_index();
    const int fb = p.side_b.face_index();
    for (int v = 0; v < 4; ++v) {
      if (v == fa) continue;
      link_edges.unite(16 * ta + 4 * v + fa, 16 * tb + 4 * vmap[v] + fb);
      corner_constraints.emplace_back(4 * ta + v, 4 * tb + vmap[v], p.odd());
      for (int w = 0; w < 4; ++w) {
        if (w == fa || w == v) continue;
        link_verts.unite(16 * ta + 4 * v + w, 16 * tb + 4 * vmap[v] + vmap[w]);
      }
    }
  }

  BoundarySurfaceStats stats;
  stats.components.resize(c.vertex_class_count);
  for (int k = 0; k < c.vertex_class_count; ++k) stats.components[k].vertex_class = k;

  std::vector<std::vector<int>> vert_roots(c.vertex_class_count);
  std::vector<std::vector<int>> edge_roots(c.vertex_class_count);
  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) {
      const int k = c.vertex_class(t, v);
      ++stats.components[k].triangles;
      for (int w = 0; w < 4; ++w) {
        if (w == v) continue;
        vert_roots[k].push_back(link_verts.find(16 * t + 4 * v + w));
        edge_roots[k].push_back(link_edges.find(16 * t + 4 * v + w));
      }
    }
  }
  auto distinct = [](std::vector<int>& xs) {
    std::sort(xs.begin(), xs.end());
    return static_cast<int>(std::unique(xs.begin(), xs.end()) - xs.begin());
  };

  // Orientability per link: sign propagation restricted to each class's corners.
  std::vector<std::vector<std::tuple<int, int, bool>>> per_class(c.vertex_class_count);
  for (const auto& [a, b, odd] : corner_constraints) per_class[c.vertex_class_of[a]].emplace_back(a, b, odd);

  for (int k = 0; k < c.vertex_class_count; ++k) {
    auto& comp = stats.components[k];
    comp.vertices = distinct(vert_roots[k]);
    comp.edges = distinct(edge_roots[k]);
    comp.orientable = detail::propagate_signs(4 * n, per_class[k]).has_value();
  }
  return stats;
}

struct EdgeAdmissibility {
  int edge_class = 0;
  int valence = 0;
  double angle_degrees = 0.0;
  /// valence > 6, i.e. the angle 2*pi/valence lies strictly inside (0, 60 degrees).
  bool admissible = false;
};

inline std::vector<EdgeAdmissibility> dihedral_admissibility(const GluedComplex& c) {
  std::vector<EdgeAdmissibility> out;
  for (std::size_t i = 0; i < c.edge_classes.size(); ++i) {
    const auto& e = c.edge_classes[i];
    out.push_back({static_cast<int>(i), e.valence(), e.angle_degrees(), e.valence() > 6});
  }
  return out;
}

struct HandleStructure {
  int handlebody_genus = 0;
  int two_handles = 0;
};

/// Removing the inner edges leaves a handlebody (balls glued along disks); each
/// edge class then contributes a 2-handle.
inline HandleStructure handle_structure(const GluedComplex& c) {
  if (!c.connected()) throw SchemeError("complex is disconnected");
  const int pairings = static_cast<int>(c.scheme.pairings().size());
  return {pairings - c.scheme.tet_count() + 1, static_cast<int>(c.edge_classes.size())};
}

}  // namespace geodouble
