#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "pentile/angle.hpp"

namespace pentile {

// Spherical law of cosines for sides: given two sides p,q and the included
// angle C, the opposite side c with cos c = cos p cos q + sin p sin q cos C.
inline Radians side_from_two_sides_angle(Radians p, Radians q, Radians C) {
  if (!(p > 0 && p < kPi) || !(q > 0 && q < kPi)) throw domain_error("side arguments outside (0,pi)");
  if (!(C > 0 && C < 2 * kPi)) throw domain_error("angle argument outside (0,2pi)");
  double cc = std::cos(p) * std::cos(q) + std::sin(p) * std::sin(q) * std::cos(C);
  return acos_clamped(cc);
}

// Inverse of the above: the angle C opposite side c in a triangle with sides
// a,b,c. Fails when the triangle inequality is violated beyond the clamping
// window.
inline Radians angle_from_three_sides(Radians a, Radians b, Radians c) {
  if (!(a > 0 && a < kPi) || !(b > 0 && b < kPi)) throw domain_error("side arguments outside (0,pi)");
  double denom = std::sin(a) * std::sin(b);
  if (denom <= 0) throw domain_error("degenerate triangle sides");
  double cC = (std::cos(c) - std::cos(a) * std::cos(b)) / denom;
  return acos_clamped(cC);
}

// Endpoint distance of three equal arcs of length a whose two interior joints
// turn by the same interior angle delta on alternating sides (a zigzag).
// Returns cos of the endpoint distance.
inline double chain3_endpoint(Radians a, Radians delta) {
  double ca = std::cos(a), cd = std::cos(delta), sd2 = 1.0 - cd * cd;
  return (1 - cd) * (1 - cd) * ca * ca * ca + sd2 * ca * ca + (2 * cd - cd * cd) * ca - sd2;
}

// Endpoint distance of three equal arcs of length a whose joints turn by
// interior angles delta then epsilon on the same side (a convex bend, the
// B..C diagonal of the pentagon). Returns the cosine.
inline double diagonal3_endpoint(Radians a, Radians delta, Radians epsilon) {
  double ca = std::cos(a), cd = std::cos(delta), ce = std::cos(epsilon);
  double sd = std::sin(delta), se = std::sin(epsilon);
  return ca * ca * ca * (1 - cd) * (1 - ce) - ca * ca * sd * se +
         ca * (cd + ce - cd * ce) + sd * se;
}

struct Cubic {
  double c3 = 0, c2 = 0, c1 = 0, c0 = 0;  // c3*x^3 + c2*x^2 + c1*x + c0

  double eval(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
  double deriv(double x) const { return (3 * c3 * x + 2 * c2) * x + c1; }
  double max_coeff() const {
    return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  }
};

// All real roots, ascending, deduplicated at 1e-10. Closed-form seeds
// (trigonometric for three real roots, Cardano otherwise) polished by Newton
// so the residual is below 1e-13 * max|c_i|.
inline std::vector<double> cubic_real_roots(const Cubic& c) {
  if (c.c3 == 0) throw domain_error("cubic_real_roots: leading coefficient is zero");
  double a = c.c2 / c.c3, b = c.c1 / c.c3, d = c.c0 / c.c3;
  // depressed: t^3 + p t + q with x = t - a/3
  double p = b - a * a / 3;
  double q = 2 * a * a * a / 27 - a * b / 3 + d;
  std::vector<double> roots;
  double disc = q * q / 4 + p * p * p / 27;
  if (disc <= 0) {
    double m = 2 * std::sqrt(std::max(0.0, -p / 3));
    double arg = (m == 0) ? 0.0 : std::clamp(3 * q / (p * m), -1.0, 1.0);
    double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2 * kPi * k / 3) - a / 3);
  } else {
    double s = std::sqrt(disc);
    double u = std::cbrt(-q / 2 + s), v = std::cbrt(-q / 2 - s);
    roots.push_back(u + v - a / 3);
  }
  double tol = 1e-13 * std::max(1.0, c.max_coeff());
  for (double& x : roots) {
    for (int it = 0; it < 60 && std::abs(c.eval(x)) > tol; ++it) {
      double dfdx = c.deriv(x);
      if (dfdx == 0) break;
      x -= c.eval(x) / dfdx;
    }
    // Newton stalls between a near-double pair; recover through a bracketed
    // bisection around the estimate.
    if (std::abs(c.eval(x)) > tol) {
      double s0 = c.eval(x) > 0 ? 1.0 : -1.0;
      for (double hstep = 1e-12; hstep < 0.3; hstep *= 4) {
        for (double dir : {1.0, -1.0}) {
          double y = x + dir * hstep;
          if (c.eval(y) * s0 < 0) {
            double lo = std::min(x, y), hi = std::max(x, y);
            for (int it = 0; it < 200 && hi - lo > 0; ++it) {
              double m = (lo + hi) / 2;
              if (m == lo || m == hi) break;
              (c.eval(m) * c.eval(lo) <= 0 ? hi : lo) = m;
            }
            x = std::abs(c.eval(lo)) < std::abs(c.eval(hi)) ? lo : hi;
            hstep = 1.0;
            break;
          }
        }
        if (std::abs(c.eval(x)) <= tol) break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double x : roots)
    if (out.empty() || std::abs(x - out.back()) > 1e-10) out.push_back(x);
  return out;
}

// Inverts chain3_endpoint in a: returns every a = arccos x with x a real root
// of the induced cubic inside [-1,1], ascending in a, each refined so the
// chain residual is below 1e-12. Root selection policy is the caller's.
inline std::vector<Radians> solve_chain3_for_a(double cos_l, Radians delta) {
  if (std::abs(cos_l) > 1) throw domain_error("solve_chain3_for_a: |cos_l| > 1");
  double cd = std::cos(delta), sd2 = 1.0 - cd * cd;
  double c3 = (1 - cd) * (1 - cd);
  std::vector<double> xs;
  if (std::abs(c3) < 1e-14) {
    // delta ~ 0 or 2pi: the cubic degenerates to a quadratic in cos a.
    double A = sd2, B = 2 * cd - cd * cd, C = -sd2 - cos_l;
    if (std::abs(A) < 1e-14) {
      if (B != 0) xs.push_back(-C / B);
    } else {
      double disc = B * B - 4 * A * C;
      if (disc >= 0) {
        xs.push_back((-B + std::sqrt(disc)) / (2 * A));
        xs.push_back((-B - std::sqrt(disc)) / (2 * A));
      }
    }
  } else {
    xs = cubic_real_roots(Cubic{c3, sd2, 2 * cd - cd * cd, -sd2 - cos_l});
  }
  std::vector<Radians> out;
  for (double x : xs) {
    if (x < -1 - 1e-12 || x > 1 + 1e-12) continue;
    double av = std::acos(std::clamp(x, -1.0, 1.0));
    for (int it = 0; it < 60 && std::abs(chain3_endpoint(av, delta) - cos_l) > 1e-12; ++it) {
      double h = 1e-7;
      double g = (chain3_endpoint(av + h, delta) - chain3_endpoint(av - h, delta)) / (2 * h);
      if (g == 0) break;
      av -= (chain3_endpoint(av, delta) - cos_l) / g;
    }
    out.push_back(av);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Solves cos^2 b + sin^2 b cos alpha = cos_bc for b in (0, pi/2].
inline Radians solve_b_from_diagonal(Radians alpha, double cos_bc) {
  double ca = std::cos(alpha);
  if (std::abs(1 - ca) < 1e-14) throw domain_error("solve_b_from_diagonal: cos alpha = 1");
  double cb2 = (cos_bc - ca) / (1 - ca);
  if (cb2 < -1e-12 || cb2 > 1 + 1e-12) throw domain_error("solve_b_from_diagonal: cos^2 b out of [0,1]");
  cb2 = std::clamp(cb2, 0.0, 1.0);
  return std::acos(std::sqrt(cb2));
}

// Side and center-to-vertex distance of the equilateral spherical triangle
// with angles 2pi/n (the face triangle of the platonic solid with n faces
// around a vertex). n=3,4,5 give tetrahedron, octahedron, icosahedron.
inline double platonic_triangle_cos_side(int n) {
  double A = 2 * kPi / n;
  return (std::cos(A) + std::cos(A) * std::cos(A)) / (std::sin(A) * std::sin(A));
}
inline double platonic_triangle_cos_circumradius(int n) {
  return std::sqrt((2 * platonic_triangle_cos_side(n) + 1) / 3);
}

}  // namespace pentile
