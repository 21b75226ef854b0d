#pragma once

#include <queue>
#include <vector>

#include "pentile/halfedge.hpp"
#include "pentile/vec3.hpp"

namespace pentile {

struct non_simple_boundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical placement of the pentagon on the unit sphere: the alpha corner at
// the north pole, the b-edge toward beta along the +x meridian, boundary
// counterclockwise seen from outside. Returns the five corners in canonical
// slot order (alpha, beta, delta, epsilon, gamma).
inline std::array<Vec3, 5> pentagon_template(const PentagonSpec& p) {
  auto ang = p.angles();
  double alpha = ang[0], beta = ang[1], gamma = ang[2], delta = ang[3], eps = ang[4];
  // Walk the boundary with left turns of (pi - interior angle); reflex
  // corners turn right.
  Vec3 pos{0, 0, 1}, tan{1, 0, 0};
  std::array<Vec3, 5> v;
  v[0] = pos;
  const double steps[5] = {p.b, p.a, p.a, p.a, p.b};
  const double turns[5] = {beta, delta, eps, gamma, alpha};
  for (int k = 0; k < 5; ++k) {
    geodesic_step(pos, tan, steps[k]);
    if (k < 4) v[k + 1] = pos;
    tan = rotate_about(pos, kPi - turns[k], tan);
  }
  if (max_component_distance(pos, v[0]) > 1e-8)
    throw domain_error("pentagon does not close; boundary walk misses by " +
                       std::to_string(max_component_distance(pos, v[0])));
  Vec3 arr[5] = {v[0], v[1], v[2], v[3], v[4]};
  if (!detail::boundary_simple(arr, 5)) throw non_simple_boundary("pentagon boundary self-intersects");
  return v;
}

// Per-face local template: the canonical template re-rotated to the face's
// storage rotation, reflected about the xz-plane for mirrored faces. Slot
// order stays counterclockwise.
inline std::array<Vec3, 5> face_local_template(const std::array<Vec3, 5>& tmpl,
                                               HalfEdgeMap::FaceReading rd) {
  if (rd.dir == 0) throw domain_error("face does not match the pentagon pattern");
  std::array<Vec3, 5> out;
  for (int s = 0; s < 5; ++s) {
    int k = (s - rd.rot + 10) % 5;
    if (rd.dir < 0) {
      out[s] = tmpl[k];
    } else {
      Vec3 v = tmpl[(5 - k) % 5];
      out[s] = {v.x, -v.y, v.z};
    }
  }
  return out;
}

// Interior angle at slot s of a realized face (signed, so straight and
// reflex corners are measured correctly).
inline double measured_angle(const std::array<Vec3, 5>& v, int s) {
  return interior_angle(v[s], v[(s + 4) % 5], v[(s + 1) % 5]);
}

struct RealizedTiling {
  std::vector<Mat3> face_xf;                     // rotation per face
  std::vector<std::array<Vec3, 5>> face_local;   // local template per face
  std::vector<int> face_dir;                     // -1 canonical, +1 mirrored
  std::vector<int> corner_vertex;                // half-edge/corner -> vertex index
  std::vector<Vec3> vertex_pos;                  // unit vectors
  double max_closure_error = 0;

  Vec3 corner_pos(int h) const { return face_xf[h / 5] * face_local[h / 5][h % 5]; }
  std::array<Vec3, 5> face_corners(int f) const {
    std::array<Vec3, 5> out;
    for (int s = 0; s < 5; ++s) out[s] = face_xf[f] * face_local[f][s];
    return out;
  }
  // The full isometry of a face: det +1 for canonical tiles, -1 for mirrored.
  double face_det(int f) const { return face_xf[f].det() * (face_dir[f] < 0 ? 1.0 : -1.0); }
};

// Geometric realization by isometry propagation: the seed face is the
// template, crossing a shared edge composes the transform that matches the
// edge arc. Re-reaching a face measures the holonomy defect; anything past
// diverge_tol means the combinatorics and the pentagon do not fit together.
inline RealizedTiling realize(const HalfEdgeMap& m, const PentagonSpec& p,
                              double diverge_tol = 1e-3) {
  RealizedTiling r;
  std::array<Vec3, 5> tmpl = pentagon_template(p);
  int F = m.faces();
  r.face_xf.assign(F, Mat3::identity());
  r.face_local.resize(F);
  r.face_dir.assign(F, 0);
  for (int f = 0; f < F; ++f) {
    auto rd = m.face_reading(f);
    r.face_local[f] = face_local_template(tmpl, rd);
    r.face_dir[f] = rd.dir;
  }
  std::vector<char> visited(F, 0);
  std::queue<int> q;
  visited[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int s = 0; s < 5; ++s) {
      int h = 5 * f + s;
      int t = m.twin[h];
      int g = HalfEdgeMap::face_of(t);
      int gs = HalfEdgeMap::slot_of(t);
      // Shared edge seen from f runs corner s -> s+1; g traverses it
      // backwards.
      Vec3 p1 = r.face_xf[f] * r.face_local[f][s];
      Vec3 p2 = r.face_xf[f] * r.face_local[f][(s + 1) % 5];
      Mat3 xf = frame_from(p2, p1) *
                frame_from(r.face_local[g][gs], r.face_local[g][(gs + 1) % 5]).transposed();
      if (!visited[g]) {
        visited[g] = 1;
        r.face_xf[g] = xf;
        q.push(g);
      } else {
        double err = 0;
        for (int k = 0; k < 5; ++k)
          err = std::max(err,
                         max_component_distance(xf * r.face_local[g][k],
                                                r.face_xf[g] * r.face_local[g][k]));
        r.max_closure_error = std::max(r.max_closure_error, err);
        if (err > diverge_tol)
          throw divergence_error("holonomy defect " + std::to_string(err) +
                                 " while realizing the tiling");
      }
    }
  }

  // Vertex positions: average of the incident corner predictions, with the
  // spread folded into the closure error.
  auto orbits = m.vertex_orbits();
  r.corner_vertex.assign(m.half_edges(), -1);
  for (const auto& orbit : orbits) {
    Vec3 sum{0, 0, 0};
    for (int h : orbit) sum = sum + r.corner_pos(h);
    Vec3 avg = normalized(sum);
    for (int h : orbit) {
      r.corner_vertex[h] = static_cast<int>(r.vertex_pos.size());
      r.max_closure_error = std::max(r.max_closure_error, max_component_distance(avg, r.corner_pos(h)));
    }
    r.vertex_pos.push_back(avg);
  }
  return r;
}

// Holonomy around each vertex: propagate a face transform once around the
// vertex through the edge-matching transitions; it must come back to itself.
// Reports the worst deviation over all vertices.
inline double max_vertex_holonomy(const HalfEdgeMap& m, const RealizedTiling& r) {
  double worst = 0;
  for (const auto& orbit : m.vertex_orbits()) {
    int h0 = orbit.front();
    int f0 = HalfEdgeMap::face_of(h0);
    Mat3 x = r.face_xf[f0];
    int h = h0;
    do {
      int hp = HalfEdgeMap::prev(h);
      int t = m.twin[hp];
      int f = HalfEdgeMap::face_of(hp), g = HalfEdgeMap::face_of(t);
      Vec3 p1 = x * r.face_local[f][HalfEdgeMap::slot_of(hp)];
      Vec3 p2 = x * r.face_local[f][(HalfEdgeMap::slot_of(hp) + 1) % 5];
      x = frame_from(p2, p1) * frame_from(r.face_local[g][HalfEdgeMap::slot_of(t)],
                                          r.face_local[g][(HalfEdgeMap::slot_of(t) + 1) % 5])
                                   .transposed();
      h = t;
    } while (h != h0);
    double defect = 0;
    for (int k = 0; k < 5; ++k)
      defect = std::max(defect, max_component_distance(x * r.face_local[f0][k],
                                                       r.face_xf[f0] * r.face_local[f0][k]));
    worst = std::max(worst, defect);
  }
  return worst;
}

// Spherical excess area of a realized face: angle sum minus 3 pi.
inline double face_area(const RealizedTiling& r, int f) {
  auto v = r.face_corners(f);
  double s = 0;
  for (int k = 0; k < 5; ++k) s += measured_angle(v, k);
  return s - 3 * kPi;
}

}  // namespace pentile
