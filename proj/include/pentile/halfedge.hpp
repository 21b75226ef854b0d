#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentile/avc.hpp"
#include "pentile/pentagon.hpp"

namespace pentile {

enum class EdgeLabel : int { A = 0, B = 1 };

inline const char* edge_name(EdgeLabel e) { return e == EdgeLabel::A ? "a" : "b"; }

// Face readings, counterclockwise: corner k, then the edge from corner k to
// corner k+1. Congruence admits reflections, so a tile appears either in the
// canonical reading or in the mirrored one; the edge cycle is the same.
inline constexpr std::array<AngleLabel, 5> kCanonicalCorners = {
    AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Delta, AngleLabel::Epsilon, AngleLabel::Gamma};
inline constexpr std::array<AngleLabel, 5> kMirroredCorners = {
    AngleLabel::Alpha, AngleLabel::Gamma, AngleLabel::Epsilon, AngleLabel::Delta, AngleLabel::Beta};
inline constexpr std::array<EdgeLabel, 5> kCanonicalEdges = {
    EdgeLabel::B, EdgeLabel::A, EdgeLabel::A, EdgeLabel::A, EdgeLabel::B};

// Half-edge map over pentagonal faces. Half-edge h = 5*face + slot runs from
// the face's corner `slot` to corner `slot+1`; corner[h] is the angle at its
// source, elabel[h] the length label of the edge it lies on.
struct HalfEdgeMap {
  std::vector<int> twin;
  std::vector<AngleLabel> corner;
  std::vector<EdgeLabel> elabel;

  int faces() const { return static_cast<int>(twin.size()) / 5; }
  int half_edges() const { return static_cast<int>(twin.size()); }
  static int face_of(int h) { return h / 5; }
  static int slot_of(int h) { return h % 5; }
  static int next(int h) { return h - h % 5 + (h % 5 + 1) % 5; }
  static int prev(int h) { return h - h % 5 + (h % 5 + 4) % 5; }

  int add_face(bool mirrored = false) {
    int f = faces();
    for (int s = 0; s < 5; ++s) {
      twin.push_back(-1);
      corner.push_back(mirrored ? kMirroredCorners[s] : kCanonicalCorners[s]);
      elabel.push_back(kCanonicalEdges[s]);
    }
    return f;
  }

  // dir -1: canonical reading, +1: mirrored, 0: corrupt. rot is the slot
  // holding the pattern's alpha.
  struct FaceReading {
    int dir = 0;
    int rot = 0;
  };
  FaceReading face_reading(int f) const {
    auto match = [&](const std::array<AngleLabel, 5>& pattern) {
      for (int rot = 0; rot < 5; ++rot) {
        bool ok = true;
        for (int k = 0; k < 5 && ok; ++k) {
          int h = 5 * f + (rot + k) % 5;
          if (corner[h] != pattern[k] || elabel[h] != kCanonicalEdges[k]) ok = false;
        }
        if (ok) return rot;
      }
      return -1;
    };
    int r = match(kCanonicalCorners);
    if (r >= 0) return {-1, r};
    r = match(kMirroredCorners);
    if (r >= 0) return {+1, r};
    return {0, 0};
  }

  // Next half-edge out of the same source vertex (rotating through the
  // neighbouring face). Requires a closed map.
  int around_vertex(int h) const { return twin[prev(h)]; }

  // Orbits of half-edges by source vertex, each sorted by smallest member.
  std::vector<std::vector<int>> vertex_orbits() const {
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(twin.size(), 0);
    for (int h = 0; h < half_edges(); ++h) {
      if (seen[h]) continue;
      std::vector<int> orbit;
      int cur = h;
      do {
        seen[cur] = 1;
        orbit.push_back(cur);
        cur = around_vertex(cur);
      } while (cur != h && !seen[cur]);
      orbits.push_back(std::move(orbit));
    }
    return orbits;
  }
};

// ---------------------------------------------------------------------------
// Census.

struct Census {
  std::map<VertexType, int> counts;
  int vertices = 0, edges = 0, faces = 0;

  int degree_gt3_total() const {
    int t = 0;
    for (const auto& [type, c] : counts)
      if (type.degree() > 3) t += c;
    return t;
  }
  // T-notation over the degree>3 part, types in display order.
  std::string t_notation(bool ascii = false) const {
    std::string s = "T(";
    bool first = true;
    for (const auto& [type, c] : counts) {
      if (type.degree() <= 3) continue;
      if (!first) s += ",";
      first = false;
      s += std::to_string(c) + type.str(ascii);
    }
    s += ")";
    return s;
  }
  bool handshake_ok() const {
    long deg = 0, cnt = 0;
    for (const auto& [type, c] : counts) {
      deg += static_cast<long>(type.degree()) * c;
      cnt += c;
    }
    return deg == 2L * edges && cnt == vertices;
  }
};

inline Census census(const HalfEdgeMap& m) {
  Census c;
  c.faces = m.faces();
  c.edges = m.half_edges() / 2;
  for (const auto& orbit : m.vertex_orbits()) {
    VertexType v;
    for (int h : orbit) v.n[static_cast<int>(m.corner[h])]++;
    c.counts[v]++;
    c.vertices++;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Structural verification.

struct VerifyReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  std::string census_notation;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

// Every face must read the pentagon's (corner, edge) cycle up to rotation
// and reflection.
inline bool face_pattern_ok(const HalfEdgeMap& m, std::string& detail_out) {
  for (int f = 0; f < m.faces(); ++f)
    if (m.face_reading(f).dir == 0) {
      detail_out = "face " + std::to_string(f) + " does not match the pentagon pattern";
      return false;
    }
  return true;
}

}  // namespace detail

// Full structural check of a closed map against a pentagon: twin/label
// consistency, face pattern, per-vertex angle sums (numeric, and exact via
// the angle forms where available), parity, Euler counts, balance, census.
inline VerifyReport verify(const HalfEdgeMap& m, const PentagonSpec& p, double tol = 1e-8) {
  VerifyReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  bool twins_ok = true;
  std::string twin_detail;
  for (int h = 0; h < m.half_edges() && twins_ok; ++h) {
    if (m.twin[h] < 0 || m.twin[h] >= m.half_edges() || m.twin[h] == h ||
        m.twin[m.twin[h]] != h) {
      twins_ok = false;
      twin_detail = "half-edge " + std::to_string(h) + " has no valid twin";
    }
  }
  add("twin_involution", twins_ok, twin_detail);

  bool labels_ok = twins_ok;
  std::string label_detail;
  if (twins_ok)
    for (int h = 0; h < m.half_edges(); ++h)
      if (m.elabel[h] != m.elabel[m.twin[h]]) {
        labels_ok = false;
        label_detail = "edge label mismatch across twin of " + std::to_string(h);
        break;
      }
  add("twin_edge_labels", labels_ok, label_detail);

  std::string pattern_detail;
  add("face_pattern", detail::face_pattern_ok(m, pattern_detail), pattern_detail);

  if (!twins_ok) return rep;  // vertex orbits undefined

  Census c = census(m);
  rep.census_notation = c.t_notation();
  long V = c.vertices, E = c.edges, F = c.faces;
  add("euler", V - E + F == 2 && 2 * E == 5 * F,
      "V=" + std::to_string(V) + " E=" + std::to_string(E) + " F=" + std::to_string(F));

  auto angles = p.angles();
  bool sums_ok = true, parity_ok = true, degree_ok = true;
  std::string sum_detail, parity_detail, degree_detail;
  for (const auto& [type, count] : c.counts) {
    double s = 0;
    for (int i = 0; i < 5; ++i) s += type.n[i] * angles[i];
    if (std::abs(s - 2 * kPi) > tol) {
      sums_ok = false;
      sum_detail = "vertex " + type.str() + " sums to " + std::to_string(s / kPi) + "pi";
    }
    // Exact check through the angle forms whenever the type carries
    // beta,gamma in equal numbers (all legitimate types do).
    if (p.f && p.alpha.has_form() && p.delta.has_form() && p.epsilon.has_form() &&
        p.beta_gamma_sum_q && type.n[1] == type.n[2]) {
      Rational sum = Rational(type.n[0]) * p.alpha.over_pi(*p.f) +
                     Rational(type.n[1]) * (*p.beta_gamma_sum_q + *p.beta_gamma_sum_r / Rational(*p.f)) +
                     Rational(type.n[3]) * p.delta.over_pi(*p.f) +
                     Rational(type.n[4]) * p.epsilon.over_pi(*p.f);
      if (!(sum == Rational(2))) {
        sums_ok = false;
        sum_detail = "vertex " + type.str() + " has exact sum " + sum.str() + " pi";
      }
    }
    if (!type.parity_ok()) {
      parity_ok = false;
      parity_detail = "vertex " + type.str() + " has odd ab-angle count";
    }
    if (type.degree() < 3) {
      degree_ok = false;
      degree_detail = "vertex " + type.str() + " has degree < 3";
    }
  }
  add("vertex_sums", sums_ok, sum_detail);
  add("vertex_parity", parity_ok, parity_detail);
  add("vertex_degree", degree_ok, degree_detail);
  add("balance", p.f ? check_balance(c.counts, *p.f) : false,
      p.f ? "" : "pentagon has no f");
  add("handshake", c.handshake_ok());
  return rep;
}

// ---------------------------------------------------------------------------
// Canonical form and isomorphism.

namespace detail {

// Breadth-first canonical signature rooted at a half-edge. Faces are numbered
// in discovery order; each face contributes its five (corner, edge, twin
// face, twin slot-offset) records starting from its entry slot. Mirrored
// traversal walks slots backwards and pairs corners with incoming edges.
inline std::vector<int> bfs_signature(const HalfEdgeMap& m, int root, bool mirrored) {
  int F = m.faces();
  std::vector<int> face_index(F, -1), entry_slot(F, -1);
  std::vector<int> order;
  order.reserve(F);
  face_index[HalfEdgeMap::face_of(root)] = 0;
  entry_slot[HalfEdgeMap::face_of(root)] = HalfEdgeMap::slot_of(root);
  order.push_back(HalfEdgeMap::face_of(root));
  std::vector<int> sig;
  sig.reserve(F * 20);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int f = order[qi];
    int s0 = entry_slot[f];
    for (int k = 0; k < 5; ++k) {
      int slot = mirrored ? (s0 - k + 10) % 5 : (s0 + k) % 5;
      int h = 5 * f + slot;
      int edge_h = mirrored ? HalfEdgeMap::prev(h) : h;
      sig.push_back(static_cast<int>(m.corner[h]));
      sig.push_back(static_cast<int>(m.elabel[edge_h]));
      int t = m.twin[edge_h];
      int tf = HalfEdgeMap::face_of(t);
      if (face_index[tf] < 0) {
        face_index[tf] = static_cast<int>(order.size());
        // Enter the twin face so the traversal direction stays consistent:
        // at the twin's slot for forward reading, one past it for mirrored
        // reading (which pairs a corner with its incoming edge).
        entry_slot[tf] = mirrored ? (HalfEdgeMap::slot_of(t) + 1) % 5 : HalfEdgeMap::slot_of(t);
        order.push_back(tf);
      }
      sig.push_back(face_index[tf]);
      int rel = mirrored ? (entry_slot[tf] - HalfEdgeMap::slot_of(t) - 1 + 10) % 5
                         : (HalfEdgeMap::slot_of(t) - entry_slot[tf] + 10) % 5;
      sig.push_back(rel);
    }
  }
  return sig;
}

}  // namespace detail

// Minimal BFS signature over all roots; reflections included when
// `with_mirror` (the spec's isomorphism is label-preserving and considers
// both orientations).
inline std::vector<int> canonical_signature(const HalfEdgeMap& m, bool with_mirror = true) {
  std::vector<int> best;
  for (int root = 0; root < m.half_edges(); ++root) {
    for (int mir = 0; mir < (with_mirror ? 2 : 1); ++mir) {
      std::vector<int> sig = detail::bfs_signature(m, root, mir == 1);
      if (best.empty() || sig < best) best = std::move(sig);
    }
  }
  return best;
}

inline bool isomorphic(const HalfEdgeMap& a, const HalfEdgeMap& b) {
  if (a.faces() != b.faces()) return false;
  return canonical_signature(a) == canonical_signature(b);
}

// The reflected map: every face cycle reversed, twins rewired to match.
// Canonical faces become mirrored ones and vice versa.
inline HalfEdgeMap mirror_map(const HalfEdgeMap& m) {
  HalfEdgeMap out;
  out.twin.resize(m.twin.size());
  out.corner.resize(m.corner.size());
  out.elabel.resize(m.elabel.size());
  for (int f = 0; f < m.faces(); ++f)
    for (int s = 0; s < 5; ++s) {
      int corner_src = 5 * f + (5 - s) % 5;
      int edge_src = 5 * f + (4 - s + 5) % 5;
      out.corner[5 * f + s] = m.corner[corner_src];
      out.elabel[5 * f + s] = m.elabel[edge_src];
      int t = m.twin[edge_src];
      out.twin[5 * f + s] =
          5 * HalfEdgeMap::face_of(t) + (4 - HalfEdgeMap::slot_of(t) + 5) % 5;
    }
  return out;
}

// Relabels the map into its canonical (orientation-preserving) rooting, so
// isomorphic maps serialize to identical bytes.
inline HalfEdgeMap canonicalize(const HalfEdgeMap& m) {
  int best_root = 0;
  std::vector<int> best;
  for (int root = 0; root < m.half_edges(); ++root) {
    std::vector<int> sig = detail::bfs_signature(m, root, false);
    if (best.empty() || sig < best) {
      best = std::move(sig);
      best_root = root;
    }
  }
  int F = m.faces();
  std::vector<int> face_index(F, -1), entry_slot(F, -1);
  std::vector<int> order;
  face_index[HalfEdgeMap::face_of(best_root)] = 0;
  entry_slot[HalfEdgeMap::face_of(best_root)] = HalfEdgeMap::slot_of(best_root);
  order.push_back(HalfEdgeMap::face_of(best_root));
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int f = order[qi];
    for (int k = 0; k < 5; ++k) {
      int h = 5 * f + (entry_slot[f] + k) % 5;
      int tf = HalfEdgeMap::face_of(m.twin[h]);
      if (face_index[tf] < 0) {
        face_index[tf] = static_cast<int>(order.size());
        entry_slot[tf] = HalfEdgeMap::slot_of(m.twin[h]);
        order.push_back(tf);
      }
    }
  }
  HalfEdgeMap out;
  out.twin.assign(m.twin.size(), -1);
  out.corner.resize(m.corner.size(), AngleLabel::Alpha);
  out.elabel.resize(m.elabel.size(), EdgeLabel::A);
  auto remap = [&](int h) {
    int f = HalfEdgeMap::face_of(h);
    int rel = (HalfEdgeMap::slot_of(h) - entry_slot[f] + 10) % 5;
    return 5 * face_index[f] + rel;
  };
  for (int h = 0; h < m.half_edges(); ++h) {
    int nh = remap(h);
    out.twin[nh] = remap(m.twin[h]);
    out.corner[nh] = m.corner[h];
    out.elabel[nh] = m.elabel[h];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixture serialization: faces as ordered corner records.

inline nlohmann::json to_json(const HalfEdgeMap& m) {
  nlohmann::json faces = nlohmann::json::array();
  for (int f = 0; f < m.faces(); ++f) {
    nlohmann::json face = nlohmann::json::array();
    for (int s = 0; s < 5; ++s) {
      int h = 5 * f + s;
      face.push_back(
          {{"angle", label_name(m.corner[h])},
           {"edge_label", edge_name(m.elabel[h])},
           {"twin_ref", {HalfEdgeMap::face_of(m.twin[h]), HalfEdgeMap::slot_of(m.twin[h])}}});
    }
    faces.push_back(std::move(face));
  }
  return nlohmann::json{{"schema", "pentile/halfedge/v1"}, {"f", m.faces()}, {"faces", faces}};
}

inline HalfEdgeMap halfedge_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != "pentile/halfedge/v1")
    throw domain_error("unknown fixture schema");
  HalfEdgeMap m;
  const auto& faces = j.at("faces");
  auto parse_angle = [](const std::string& s) {
    for (int i = 0; i < 5; ++i)
      if (s == label_name(static_cast<AngleLabel>(i))) return static_cast<AngleLabel>(i);
    throw domain_error("bad angle label: " + s);
  };
  for (const auto& face : faces) {
    if (face.size() != 5) throw domain_error("fixture face is not a pentagon");
    for (const auto& rec : face) {
      m.corner.push_back(parse_angle(rec.at("angle").get<std::string>()));
      std::string e = rec.at("edge_label").get<std::string>();
      m.elabel.push_back(e == "a" ? EdgeLabel::A : EdgeLabel::B);
      m.twin.push_back(5 * rec.at("twin_ref").at(0).get<int>() +
                       rec.at("twin_ref").at(1).get<int>());
    }
  }
  return m;
}

// Deterministic bytes: canonical rooting, 2-space indent, fixed key order is
// nlohmann's (alphabetical), trailing newline.
inline std::string canonical_fixture_bytes(const HalfEdgeMap& m) {
  return to_json(canonicalize(m)).dump(2) + "\n";
}

}  // namespace pentile
