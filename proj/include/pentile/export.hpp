#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pentile/realize.hpp"

namespace pentile {

struct pole_collision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Realized tiling as JSON (schema pentile/realized/v1): vertices, faces with
// corner vertex ids and labels, and the closure diagnostic. Lossless for the
// double coordinates.
inline nlohmann::json export_json(const HalfEdgeMap& m, const RealizedTiling& r) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec3& v : r.vertex_pos) verts.push_back({v.x, v.y, v.z});
  nlohmann::json faces = nlohmann::json::array();
  for (int f = 0; f < m.faces(); ++f) {
    nlohmann::json corners = nlohmann::json::array(), angles = nlohmann::json::array(),
                   edges = nlohmann::json::array();
    for (int s = 0; s < 5; ++s) {
      corners.push_back(r.corner_vertex[5 * f + s]);
      angles.push_back(label_name(m.corner[5 * f + s]));
      edges.push_back(edge_name(m.elabel[5 * f + s]));
    }
    faces.push_back({{"corners", corners}, {"angles", angles}, {"edges", edges}});
  }
  return nlohmann::json{{"schema", "pentile/realized/v1"},
                        {"vertices", verts},
                        {"faces", faces},
                        {"max_closure_error", r.max_closure_error}};
}

// Wavefront OBJ: fan-triangulated faces, one group per tile.
inline std::string export_obj(const HalfEdgeMap& m, const RealizedTiling& r) {
  std::ostringstream os;
  os.precision(17);
  for (const Vec3& v : r.vertex_pos) os << "v " << v.x << " " << v.y << " " << v.z << "\n";
  for (int f = 0; f < m.faces(); ++f) {
    os << "g tile_" << f << "\n";
    int c0 = r.corner_vertex[5 * f + 0];
    for (int k = 1; k + 1 < 5; ++k) {
      os << "f " << c0 + 1 << " " << r.corner_vertex[5 * f + k] + 1 << " "
         << r.corner_vertex[5 * f + k + 1] + 1 << "\n";
    }
  }
  return os.str();
}

namespace detail {

struct Planar {
  double x = 0, y = 0;
};

// Stereographic projection from the given pole onto the opposite tangent
// plane, after rotating the pole to +z.
struct Stereo {
  Mat3 rot;  // sends pole to +z
  explicit Stereo(Vec3 pole) {
    Vec3 z = normalized(pole);
    Vec3 seed = std::abs(z.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 x = normalized(seed - dot(z, seed) * z);
    rot = Mat3::from_columns(x, cross(z, x), z).transposed();
  }
  Planar project(Vec3 p) const {
    Vec3 q = rot * p;
    double d = 1 - q.z;
    return {q.x / d, q.y / d};
  }
};

}  // namespace detail

// SVG with circular-arc boundaries (great circles project to circles), in a
// 1000x1000 viewport. The projection pole is the north pole unless it sits
// within 1e-3 of a tiling vertex, in which case a deterministic perturbation
// sequence is tried.
inline std::string export_svg(const HalfEdgeMap& m, const RealizedTiling& r) {
  Vec3 pole{0, 0, 1};
  bool found = false;
  for (int attempt = 0; attempt < 32 && !found; ++attempt) {
    found = true;
    for (const Vec3& v : r.vertex_pos)
      if (arc_length(v, pole) < 1e-3) {
        found = false;
        break;
      }
    if (!found) {
      double t = 0.05 * (attempt + 1);
      pole = normalized(Vec3{std::sin(t), std::sin(1.7 * t) * 0.5, std::cos(t)});
    }
  }
  if (!found) throw pole_collision("no projection pole clear of the vertices");

  detail::Stereo st(pole);
  // Scale: fit every vertex image (the pole is off the vertex set so images
  // are finite).
  double radius = 1;
  for (const Vec3& v : r.vertex_pos) {
    auto pl = st.project(v);
    radius = std::max(radius, std::hypot(pl.x, pl.y));
  }
  double scale = 470.0 / radius;
  auto X = [&](detail::Planar p) { return 500.0 + scale * p.x; };
  auto Y = [&](detail::Planar p) { return 500.0 - scale * p.y; };

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" "
        "width=\"1000\" height=\"1000\">\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (int f = 0; f < m.faces(); ++f) {
    auto corners = r.face_corners(f);
    std::ostringstream path;
    path.precision(8);
    for (int s = 0; s < 5; ++s) {
      Vec3 pcur = corners[s], pnext = corners[(s + 1) % 5];
      auto a = st.project(pcur), b = st.project(pnext);
      if (s == 0) path << "M " << X(a) << " " << Y(a) << " ";
      // Circle through the projected endpoints and arc midpoint.
      Vec3 midv = normalized(pcur + pnext);
      auto c = st.project(midv);
      double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
      if (std::abs(d) < 1e-9) {
        path << "L " << X(b) << " " << Y(b) << " ";
        continue;
      }
      double ux = ((a.x * a.x + a.y * a.y) * (b.y - c.y) + (b.x * b.x + b.y * b.y) * (c.y - a.y) +
                   (c.x * c.x + c.y * c.y) * (a.y - b.y)) /
                  d;
      double uy = ((a.x * a.x + a.y * a.y) * (c.x - b.x) + (b.x * b.x + b.y * b.y) * (a.x - c.x) +
                   (c.x * c.x + c.y * c.y) * (b.x - a.x)) /
                  d;
      double rad = std::hypot(a.x - ux, a.y - uy) * scale;
      // Sweep/large-arc flags from the midpoint's position along the arc.
      double a1 = std::atan2(a.y - uy, a.x - ux);
      double a2 = std::atan2(b.y - uy, b.x - ux);
      double am = std::atan2(c.y - uy, c.x - ux);
      auto wrap = [](double t) {
        while (t < 0) t += 2 * kPi;
        while (t >= 2 * kPi) t -= 2 * kPi;
        return t;
      };
      double fwd = wrap(a2 - a1), mid = wrap(am - a1);
      bool ccw_math = mid < fwd;  // midpoint lies on the ccw sweep a1 -> a2
      double span = ccw_math ? fwd : 2 * kPi - fwd;
      int large = span > kPi ? 1 : 0;
      int sweep = ccw_math ? 0 : 1;  // svg y axis points down
      path << "A " << rad << " " << rad << " 0 " << large << " " << sweep << " " << X(b) << " "
           << Y(b) << " ";
    }
    path << "Z";
    os << "<path class=\"tile\" d=\"" << path.str()
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pentile
