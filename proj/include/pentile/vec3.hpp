#pragma once

#include <array>
#include <cmath>

#include "pentile/angle.hpp"

namespace pentile {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(Vec3 v) {
  double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

// Rodrigues rotation of v about a unit axis.
inline Vec3 rotate_about(Vec3 axis, double angle, Vec3 v) {
  double c = std::cos(angle), s = std::sin(angle);
  return c * v + s * cross(axis, v) + ((1 - c) * dot(axis, v)) * axis;
}

// Great-circle step: from point p with unit tangent t, advance arc length s.
// Returns the new point and the transported tangent.
inline void geodesic_step(Vec3& p, Vec3& t, double s) {
  Vec3 np = std::cos(s) * p + std::sin(s) * t;
  Vec3 nt = std::cos(s) * t - std::sin(s) * p;
  p = np;
  t = nt;
}

// Unit tangent at p pointing along the great circle toward q.
inline Vec3 tangent_toward(Vec3 p, Vec3 q) {
  Vec3 t = q - dot(p, q) * p;
  return normalized(t);
}

inline double arc_length(Vec3 p, Vec3 q) { return acos_clamped(dot(p, q), 1e-9); }

// Interior angle at vertex v of a ccw-oriented spherical polygon with
// neighbours prev and next, measured by the signed rotation about v that
// carries the outgoing tangent (toward next) onto the incoming one (toward
// prev). Range (0, 2pi); reflex corners come out > pi.
inline double interior_angle(Vec3 v, Vec3 prev, Vec3 next) {
  Vec3 tn = tangent_toward(v, next);
  Vec3 tp = tangent_toward(v, prev);
  double ang = std::atan2(dot(cross(tn, tp), v), dot(tn, tp));
  if (ang <= 0) ang += 2 * kPi;
  return ang;
}

// Proper intersection test for two great-circle arcs (each < pi). Shared
// endpoints do not count as intersections when allow_shared is set.
inline bool arcs_cross(Vec3 a, Vec3 b, Vec3 c, Vec3 d, bool allow_shared, double tol = 1e-9) {
  auto on_arc = [&](Vec3 p, Vec3 u, Vec3 v) {
    double len = arc_length(u, v);
    return arc_length(u, p) <= len + tol && arc_length(v, p) <= len + tol;
  };
  auto same_point = [&](Vec3 p, Vec3 q) { return arc_length(p, q) < 1e-7; };
  Vec3 n1 = cross(a, b), n2 = cross(c, d);
  Vec3 line = cross(n1, n2);
  double ln = norm(line);
  if (ln < 1e-12) {
    // Coplanar arcs: they overlap iff an interior endpoint of one lies on the other.
    for (Vec3 p : {c, d})
      if (on_arc(p, a, b) && !(same_point(p, a) || same_point(p, b))) return true;
    for (Vec3 p : {a, b})
      if (on_arc(p, c, d) && !(same_point(p, a) || same_point(p, b))) return true;
    return false;
  }
  line = {line.x / ln, line.y / ln, line.z / ln};
  for (Vec3 p : {line, Vec3{-line.x, -line.y, -line.z}}) {
    if (on_arc(p, a, b) && on_arc(p, c, d)) {
      if (allow_shared && (same_point(p, a) || same_point(p, b) || same_point(p, c) || same_point(p, d)))
        continue;
      return true;
    }
  }
  return false;
}

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Mat3 identity() { return Mat3{}; }
  static Mat3 from_columns(Vec3 a, Vec3 b, Vec3 c) {
    Mat3 r;
    r.m = {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
    return r;
  }
  Vec3 operator*(Vec3 v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  // Max abs deviation of M^T M from the identity.
  double orthogonality_error() const {
    Mat3 g = transposed() * (*this);
    double e = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e = std::max(e, std::abs(g.m[i][j] - (i == j ? 1.0 : 0.0)));
    return e;
  }
};

// Orthonormal frame with first column u (unit) and second column the
// component of v orthogonal to u.
inline Mat3 frame_from(Vec3 u, Vec3 v) {
  Vec3 e1 = normalized(u);
  Vec3 e2 = normalized(v - dot(e1, v) * e1);
  return Mat3::from_columns(e1, e2, cross(e1, e2));
}

inline double max_component_distance(Vec3 a, Vec3 b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace pentile
