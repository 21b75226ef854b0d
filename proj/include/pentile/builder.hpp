#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "pentile/halfedge.hpp"
#include "pentile/realize.hpp"

namespace pentile {

// ---------------------------------------------------------------------------
// Platonic triangle complexes (combinatorial, consistently oriented).

struct TriangleComplex {
  int vertex_count = 0;
  std::vector<std::array<int, 3>> faces;  // ccw vertex triples
};

inline TriangleComplex platonic_triangles(int n) {
  TriangleComplex c;
  switch (n) {
    case 3:
      c.vertex_count = 4;
      c.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
      break;
    case 4:
      c.vertex_count = 6;
      c.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                 {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
      break;
    case 5: {
      c.vertex_count = 12;
      auto u = [](int k) { return 1 + (k % 5); };
      auto l = [](int k) { return 6 + (k % 5); };
      for (int k = 0; k < 5; ++k) {
        c.faces.push_back({0, u(k), u(k + 1)});
        c.faces.push_back({u(k), l(k), u(k + 1)});
        c.faces.push_back({l(k), l(k + 1), u(k + 1)});
        c.faces.push_back({11, l(k + 1), l(k)});
      }
      break;
    }
    default:
      throw domain_error("platonic_triangles: n must be 3, 4 or 5");
  }
  return c;
}

// One subdivided triangle: three pentagons around the face center, the
// center connected to the first trisection point of each side in the cell's
// orientation. Flipping the orientation mirrors all three pentagons.
struct TriangleSubdivisionCell {
  enum class Orientation { CCW, CW };
  Orientation orientation = Orientation::CCW;
};

// Pentagonal subdivision of the platonic solid with n triangles around a
// vertex: every triangle carries the same cell, so each edge is trisected
// into a-edges and every side point becomes a beta-gamma-delta vertex.
// f = 12 / 24 / 60. The CW cell gives the mirror tiling.
inline HalfEdgeMap build_pentagonal_subdivision(
    int n, TriangleSubdivisionCell cell = TriangleSubdivisionCell{}) {
  TriangleComplex tc = platonic_triangles(n);
  int T = static_cast<int>(tc.faces.size());
  HalfEdgeMap m;
  for (int i = 0; i < 3 * T; ++i) m.add_face();

  // Pentagon 3t+k of triangle t: [center, first(e_k), second(e_k), V_{k+1},
  // first(e_{k+1})] with slots (alpha, beta, delta, epsilon, gamma).
  // Interior twins: slot 0 (center->first) pairs with slot 4 of the previous
  // pentagon in the same triangle.
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      int h0 = 5 * (3 * t + k) + 0;
      int h4 = 5 * (3 * t + (k + 2) % 3) + 4;
      m.twin[h0] = h4;
      m.twin[h4] = h0;
    }

  // Cross-triangle twins along each platonic edge. On the directed edge
  // (u -> v) of triangle t (as side k), pentagon (t,k) carries slots 1
  // (first->second) and 2 (second->v), pentagon (t,k-1) carries slot 3
  // (u->first). The neighbour traverses v -> u.
  std::map<std::pair<int, int>, std::pair<int, int>> directed;  // (u,v) -> (t,k)
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k)
      directed[{tc.faces[t][k], tc.faces[t][(k + 1) % 3]}] = {t, k};
  for (const auto& [uv, tk] : directed) {
    auto [u, v] = uv;
    if (u > v) continue;
    auto [t, k] = tk;
    auto it = directed.find({v, u});
    if (it == directed.end()) throw domain_error("triangle complex is not closed");
    auto [t2, k2] = it->second;
    auto link = [&](int a, int b) {
      m.twin[a] = b;
      m.twin[b] = a;
    };
    int p = 5 * (3 * t + k), pprev = 5 * (3 * t + (k + 2) % 3);
    int q = 5 * (3 * t2 + k2), qprev = 5 * (3 * t2 + (k2 + 2) % 3);
    link(pprev + 3, q + 2);  // u -> first(e)  ==  second(e') -> u
    link(p + 1, q + 1);      // first -> second, both middles
    link(p + 2, qprev + 3);  // second -> v  ==  v -> first(e')
  }
  if (cell.orientation == TriangleSubdivisionCell::Orientation::CW) return mirror_map(m);
  return m;
}

// ---------------------------------------------------------------------------
// The fourteen named variants.

struct TilingVariant {
  std::string name;   // ascii transliteration, e.g. "T4bge2_2e4"
  int family = 0;     // 1 or 2
  int f = 0;
  std::map<VertexType, int> census;  // full census, degree-3 types included
};

namespace detail {

inline std::map<VertexType, int> full_census(int family, int f,
                                             std::vector<std::pair<VertexType, int>> high) {
  std::map<VertexType, int> census;
  long beta_high = 0, delta_high = 0, eps_high = 0;
  for (auto& [t, c] : high) {
    census[t] = c;
    beta_high += static_cast<long>(c) * t.n[1];
    delta_high += static_cast<long>(c) * t.n[3];
    eps_high += static_cast<long>(c) * t.n[4];
  }
  VertexType alpha3 = VertexType::of(3, 0, 0, 0, 0);
  VertexType bgd = VertexType::of(0, 1, 1, 1, 0);
  census[alpha3] = f / 3;
  int n_bgd = static_cast<int>(f - beta_high);
  census[bgd] = n_bgd;
  if (family == 1) {
    VertexType de2 = VertexType::of(0, 0, 0, 1, 2);
    int n_de2 = static_cast<int>(f - delta_high) - n_bgd;
    if (n_de2 > 0) census[de2] = n_de2;
    if (eps_high + 2L * std::max(0, n_de2) != f) throw domain_error("census does not balance");
  } else {
    VertexType d2e = VertexType::of(0, 0, 0, 2, 1);
    int n_d2e = static_cast<int>(f - delta_high - n_bgd) / 2;
    if (n_d2e > 0) census[d2e] = n_d2e;
    if (eps_high + std::max(0, n_d2e) != f) throw domain_error("census does not balance");
  }
  long V = 0;
  for (auto& [t, c] : census) V += c;
  if (V != 2 + 3L * f / 2) throw domain_error("census has wrong vertex total");
  return census;
}

}  // namespace detail

inline const std::vector<TilingVariant>& tiling_variants() {
  static const std::vector<TilingVariant> kVariants = [] {
    using V = VertexType;
    std::vector<TilingVariant> out;
    auto add = [&](std::string name, int family, int f,
                   std::vector<std::pair<VertexType, int>> high) {
      out.push_back({std::move(name), family, f, detail::full_census(family, f, std::move(high))});
    };
    V e4 = V::of(0, 0, 0, 0, 4), e5 = V::of(0, 0, 0, 0, 5);
    V bge2 = V::of(0, 1, 1, 0, 2), b2g2 = V::of(0, 2, 2, 0, 0);
    V bge3 = V::of(0, 1, 1, 0, 3), b2g2e = V::of(0, 2, 2, 0, 1);
    V de3 = V::of(0, 0, 0, 1, 3);
    // family 1
    add("T6e4", 1, 24, {{e4, 6}});
    add("T4bge2_2e4", 1, 24, {{bge2, 4}, {e4, 2}});
    add("T4b2g2_2e4", 1, 24, {{b2g2, 4}, {e4, 2}});
    add("T12e5", 1, 60, {{e5, 12}});
    add("T5bge3_7e5", 1, 60, {{bge3, 5}, {e5, 7}});
    add("T10bge3_2e5", 1, 60, {{bge3, 10}, {e5, 2}});
    add("T2b2g2e_6bge3_4e5", 1, 60, {{b2g2e, 2}, {bge3, 6}, {e5, 4}});
    add("T6b2g2e_3bge3_3e5", 1, 60, {{b2g2e, 6}, {bge3, 3}, {e5, 3}});
    // family 2
    add("T6e4", 2, 24, {{e4, 6}});
    add("T12e5", 2, 60, {{e5, 12}});
    add("T5bge2_5de3_7e5", 2, 60, {{bge2, 5}, {de3, 5}, {e5, 7}});
    add("T10bge2_10de3_2e5", 2, 60, {{bge2, 10}, {de3, 10}, {e5, 2}});
    add("T10bge2_6de3_4e5", 2, 60, {{bge2, 10}, {de3, 6}, {e5, 4}});
    add("T15bge2_3de3_3e5", 2, 60, {{bge2, 15}, {de3, 3}, {e5, 3}});
    return out;
  }();
  return kVariants;
}

inline const TilingVariant& find_variant(int family, const std::string& name) {
  for (const auto& v : tiling_variants()) {
    if (v.family != family) continue;
    std::string lower = v.name, want = name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
    for (auto& ch : want) ch = static_cast<char>(std::tolower(ch));
    if (lower == want) return v;
  }
  throw domain_error("unknown variant " + name + " for family " + std::to_string(family));
}

// ---------------------------------------------------------------------------
// Census-directed completion search. Grows a disk of canonical pentagons by
// gluing faces onto boundary edges and zipping boundary corners shut; every
// closed vertex must hit one of the census types with remaining capacity, so
// a completed sphere matches the target census exactly.

namespace detail {

class TilingSearch {
 public:
  TilingSearch(const TilingVariant& variant, const std::array<Vec3, 5>& tmpl)
      : target_(variant), tmpl_(tmpl) {
    for (int s = 0; s < 5; ++s) {
      Vec3 v = tmpl[(5 - s) % 5];
      mirror_tmpl_[s] = Vec3{v.x, -v.y, v.z};
    }
    for (const auto& [t, c] : variant.census) {
      allowed_.push_back(t);
      cap_.push_back(c);
    }
    used_.assign(allowed_.size(), 0);
  }

  HalfEdgeMap run() {
    map_.add_face(false);
    xform_.push_back(Mat3::identity());
    init_new_corners(0);
    nodes_ = 0;
    if (!dfs()) throw domain_error("tiling search failed for " + target_.name);
    return map_;
  }

  long nodes() const { return nodes_; }

 private:
  struct VInfo {
    std::array<int, 5> cnt{0, 0, 0, 0, 0};
    int open_ends = 0;
  };
  enum class OpKind { Twin, Merge, Shrink, Close };
  struct Op {
    OpKind kind;
    int a = 0, b = 0;
    VInfo saved;
    int closed_idx = -1;
  };

  const TilingVariant& target_;
  std::array<Vec3, 5> tmpl_, mirror_tmpl_;
  std::vector<VertexType> allowed_;
  std::vector<int> cap_, used_;
  HalfEdgeMap map_;
  std::vector<Mat3> xform_;
  std::vector<int> parent_;
  std::vector<VInfo> vinfo_;
  std::vector<Op> trail_;
  long nodes_ = 0;

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  const std::array<Vec3, 5>& local(int face) const {
    return map_.corner[5 * face + 1] == AngleLabel::Beta ? tmpl_ : mirror_tmpl_;
  }
  Vec3 source_pos(int h) const { return xform_[h / 5] * local(h / 5)[h % 5]; }
  Vec3 target_pos(int h) const { return xform_[h / 5] * local(h / 5)[(h % 5 + 1) % 5]; }

  void init_new_corners(int face) {
    for (int s = 0; s < 5; ++s) {
      int h = 5 * face + s;
      parent_.push_back(h);
      VInfo vi;
      vi.cnt[static_cast<int>(map_.corner[h])] = 1;
      vi.open_ends = 2;
      vinfo_.push_back(vi);
    }
  }

  bool fits_partial(const VInfo& vi) const {
    for (std::size_t i = 0; i < allowed_.size(); ++i) {
      if (used_[i] >= cap_[i]) continue;
      bool ok = true;
      for (int k = 0; k < 5 && ok; ++k)
        if (vi.cnt[k] > allowed_[i].n[k]) ok = false;
      if (ok) return true;
    }
    return false;
  }
  int exact_type(const VInfo& vi) const {
    for (std::size_t i = 0; i < allowed_.size(); ++i) {
      if (used_[i] >= cap_[i]) continue;
      if (vi.cnt == allowed_[i].n) return static_cast<int>(i);
    }
    return -1;
  }

  // Merge the vertices holding corners x and y after a gluing consumed one
  // open end at each. Returns false (leaving the trail to be unwound by the
  // caller) when the merged vertex cannot belong to any census type.
  bool merge_after_glue(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) {
      trail_.push_back({OpKind::Shrink, rx, 0, vinfo_[rx], -1});
      vinfo_[rx].open_ends -= 2;
    } else {
      trail_.push_back({OpKind::Merge, ry, rx, vinfo_[rx], -1});
      parent_[ry] = rx;
      for (int k = 0; k < 5; ++k) vinfo_[rx].cnt[k] += vinfo_[ry].cnt[k];
      vinfo_[rx].open_ends += vinfo_[ry].open_ends - 2;
    }
    VInfo& vi = vinfo_[rx];
    if (vi.open_ends < 0) return false;
    if (vi.open_ends == 0) {
      int t = exact_type(vi);
      if (t < 0) return false;
      used_[t]++;
      trail_.push_back({OpKind::Close, t, 0, VInfo{}, t});
      return true;
    }
    return fits_partial(vi);
  }

  bool glue(int h, int g) {
    trail_.push_back({OpKind::Twin, h, g, VInfo{}, -1});
    map_.twin[h] = g;
    map_.twin[g] = h;
    if (!merge_after_glue(h, HalfEdgeMap::next(g))) return false;
    return merge_after_glue(HalfEdgeMap::next(h), g);
  }

  // Zipping two already-placed edges is only admissible when their realized
  // arcs coincide; this is what keeps the search on geometrically realizable
  // maps and rejects combinatorial ghosts.
  bool zip_geometry_ok(int h, int g) const {
    return max_component_distance(source_pos(h), target_pos(g)) < 1e-6 &&
           max_component_distance(target_pos(h), source_pos(g)) < 1e-6;
  }

  std::size_t mark() const { return trail_.size(); }
  void unwind(std::size_t to, int faces_to_keep) {
    while (trail_.size() > to) {
      Op op = trail_.back();
      trail_.pop_back();
      switch (op.kind) {
        case OpKind::Twin:
          map_.twin[op.a] = -1;
          map_.twin[op.b] = -1;
          break;
        case OpKind::Merge:
          parent_[op.a] = op.a;
          vinfo_[op.b] = op.saved;
          break;
        case OpKind::Shrink:
          vinfo_[op.a] = op.saved;
          break;
        case OpKind::Close:
          used_[op.closed_idx]--;
          break;
      }
    }
    while (map_.faces() > faces_to_keep) {
      for (int i = 0; i < 5; ++i) {
        map_.twin.pop_back();
        map_.corner.pop_back();
        map_.elabel.pop_back();
        parent_.pop_back();
        vinfo_.pop_back();
      }
      xform_.pop_back();
    }
  }

  struct Move {
    bool zip = false;
    int arg = -1;        // slot for face additions, partner boundary edge for zips
    bool mirrored = false;
  };

  // Every way the twin of boundary edge h can arise: a new face glued along
  // one of its matching slots, or a zip with the adjacent boundary edge at
  // either endpoint (legal once that endpoint's fan is complete). In any
  // completion the face across h realizes exactly one of these, so an edge
  // with no moves kills the branch.
  std::vector<Move> edge_moves(int h, const std::vector<int>& boundary) const {
    std::vector<Move> moves;
    int v = find(h), w = find(HalfEdgeMap::next(h));
    int into_v = -1, out_of_w = -1;
    for (int e : boundary) {
      if (e == h) continue;
      if (find(HalfEdgeMap::next(e)) == v) into_v = e;
      if (find(e) == w) out_of_w = e;
    }
    if (into_v >= 0 && into_v == out_of_w) {
      // Two-edge boundary: the final zip closes both endpoints at once.
      if (map_.elabel[into_v] == map_.elabel[h] && exact_type(vinfo_[v]) >= 0 &&
          exact_type(vinfo_[w]) >= 0 && zip_geometry_ok(h, into_v))
        moves.push_back({true, into_v, false});
    } else {
      if (into_v >= 0 && map_.elabel[into_v] == map_.elabel[h] && exact_type(vinfo_[v]) >= 0 &&
          zip_geometry_ok(h, into_v))
        moves.push_back({true, into_v, false});
      if (out_of_w >= 0 && map_.elabel[out_of_w] == map_.elabel[h] && exact_type(vinfo_[w]) >= 0 &&
          zip_geometry_ok(h, out_of_w))
        moves.push_back({true, out_of_w, false});
    }
    if (map_.faces() < target_.f) {
      for (int mir = 0; mir < 2; ++mir) {
        const auto& pattern = mir ? kMirroredCorners : kCanonicalCorners;
        for (int j = 0; j < 5; ++j) {
          if (kCanonicalEdges[j] != map_.elabel[h]) continue;
          // Corner j of the new face lands on w, corner j+1 on v.
          VInfo trial = vinfo_[v];
          trial.cnt[static_cast<int>(pattern[(j + 1) % 5])]++;
          if (!fits_partial(trial)) continue;
          VInfo wtrial = vinfo_[w];
          wtrial.cnt[static_cast<int>(pattern[j])]++;
          if (!fits_partial(wtrial)) continue;
          moves.push_back({false, j, mir == 1});
        }
      }
    }
    return moves;
  }

  bool dfs() {
    if (++nodes_ > 200000000L) throw domain_error("tiling search exceeded node budget");
    std::vector<int> boundary;
    for (int h = 0; h < map_.half_edges(); ++h)
      if (map_.twin[h] < 0) boundary.push_back(h);
    if (boundary.empty()) {
      if (map_.faces() != target_.f) return false;
      for (std::size_t i = 0; i < used_.size(); ++i)
        if (used_[i] != cap_[i]) return false;
      return true;
    }

    // Anchor on the most constrained boundary edge.
    int best_h = -1;
    std::vector<Move> best_moves;
    for (int h : boundary) {
      std::vector<Move> moves = edge_moves(h, boundary);
      if (moves.empty()) return false;
      if (best_h < 0 || moves.size() < best_moves.size()) {
        best_h = h;
        best_moves = std::move(moves);
        if (best_moves.size() == 1) break;
      }
    }

    for (const Move& mv : best_moves) {
      std::size_t t0 = mark();
      int faces0 = map_.faces();
      bool ok;
      if (mv.zip) {
        ok = glue(best_h, mv.arg);
      } else {
        int nf = map_.add_face(mv.mirrored);
        init_new_corners(nf);
        int j = mv.arg;
        // Place the new face so its edge j coincides with best_h reversed.
        const auto& loc = local(nf);
        xform_.push_back(frame_from(target_pos(best_h), source_pos(best_h)) *
                         frame_from(loc[j], loc[(j + 1) % 5]).transposed());
        ok = glue(5 * nf + j, best_h);
      }
      if (ok && dfs()) return true;
      unwind(t0, faces0);
    }
    return false;
  }
};

}  // namespace detail

// Builds a named variant. The two pentagonal subdivisions are built directly;
// the twisted variants are found by the census-directed geometric search,
// seeded with the matching solved pentagon.
inline const HalfEdgeMap& build_variant(int family, const std::string& name) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, HalfEdgeMap> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family, name);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TilingVariant& v = find_variant(family, name);
  HalfEdgeMap m;
  if (v.name == "T6e4") {
    m = build_pentagonal_subdivision(4);
  } else if (v.name == "T12e5") {
    m = build_pentagonal_subdivision(5);
  } else {
    PentagonSpec p = family == 1 ? solve_family1(v.f) : solve_family2(v.f);
    m = detail::TilingSearch(v, pentagon_template(p)).run();
  }
  return cache.emplace(key, std::move(m)).first->second;
}

inline const HalfEdgeMap& build_family1_tiling(const std::string& name) {
  return build_variant(1, name);
}
inline const HalfEdgeMap& build_family2_tiling(const std::string& name) {
  return build_variant(2, name);
}

}  // namespace pentile
