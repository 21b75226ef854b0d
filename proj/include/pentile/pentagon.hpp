#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentile/sphtrig.hpp"
#include "pentile/vec3.hpp"

namespace pentile {

enum class AngleLabel : int { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3, Epsilon = 4 };

inline const char* label_name(AngleLabel l) {
  switch (l) {
    case AngleLabel::Alpha: return "alpha";
    case AngleLabel::Beta: return "beta";
    case AngleLabel::Gamma: return "gamma";
    case AngleLabel::Delta: return "delta";
    case AngleLabel::Epsilon: return "epsilon";
  }
  return "?";
}
inline const char* label_glyph(AngleLabel l) {
  switch (l) {
    case AngleLabel::Alpha: return "α";
    case AngleLabel::Beta: return "β";
    case AngleLabel::Gamma: return "γ";
    case AngleLabel::Delta: return "δ";
    case AngleLabel::Epsilon: return "ε";
  }
  return "?";
}
inline const char* label_ascii(AngleLabel l) {
  switch (l) {
    case AngleLabel::Alpha: return "a";
    case AngleLabel::Beta: return "b";
    case AngleLabel::Gamma: return "g";
    case AngleLabel::Delta: return "d";
    case AngleLabel::Epsilon: return "e";
  }
  return "?";
}

// The a3b2 pentagon: alpha between the two b-edges, beta/gamma the mixed
// corners, delta/epsilon the a2 corners. Boundary cycle, counterclockwise:
// alpha -b- beta -a- delta -a- epsilon -a- gamma -b- alpha.
struct PentagonSpec {
  AngleForm alpha, beta, gamma, delta, epsilon;
  Radians a = 0, b = 0;
  std::optional<int> f;
  // Exact beta+gamma (over pi) when the split is free but the sum is pinned.
  std::optional<Rational> beta_gamma_sum_q, beta_gamma_sum_r;

  double angle(AngleLabel l) const {
    const AngleForm* forms[5] = {&alpha, &beta, &gamma, &delta, &epsilon};
    return forms[static_cast<int>(l)]->value_or_resolve(f);
  }
  std::array<double, 5> angles() const {
    return {angle(AngleLabel::Alpha), angle(AngleLabel::Beta), angle(AngleLabel::Gamma),
            angle(AngleLabel::Delta), angle(AngleLabel::Epsilon)};
  }
  double angle_sum() const {
    auto v = angles();
    return v[0] + v[1] + v[2] + v[3] + v[4];
  }
};

enum class SymmetryClass { Symmetric, BetaGreater, GammaGreater };

inline SymmetryClass classify_symmetry(const PentagonSpec& p, double tol = 1e-10) {
  double beta = p.angle(AngleLabel::Beta), gamma = p.angle(AngleLabel::Gamma);
  double delta = p.angle(AngleLabel::Delta), eps = p.angle(AngleLabel::Epsilon);
  bool bg_eq = std::abs(beta - gamma) <= tol, de_eq = std::abs(delta - eps) <= tol;
  if (bg_eq && de_eq) return SymmetryClass::Symmetric;
  if (bg_eq != de_eq)
    throw lemma_violation("one of beta=gamma, delta=epsilon holds without the other");
  if (beta > gamma && delta < eps) return SymmetryClass::BetaGreater;
  if (beta < gamma && delta > eps) return SymmetryClass::GammaGreater;
  throw lemma_violation("beta/gamma and delta/epsilon orderings are not opposite");
}

namespace detail {

// Shared tail of the family solvers: from the resolved delta/epsilon and the
// platonic anchors, recover a (chain), b (diagonal) and gamma (circumradius
// triangle). The chain root must be the unique one with cos a in (0,1) and
// a < l/2.
inline void solve_edges_and_split(int n, double delta, double eps, double bg_sum,
                                  double& a, double& b, double& beta, double& gamma) {
  double cos_l = platonic_triangle_cos_side(n);
  double l = std::acos(cos_l);
  std::vector<double> roots = solve_chain3_for_a(cos_l, delta);
  std::vector<double> suitable;
  for (double cand : roots) {
    double x = std::cos(cand);
    if (x > 0 && x < 1 && cand < l / 2) suitable.push_back(cand);
  }
  if (suitable.empty()) throw infeasible_parameter("no geometrically suitable chain root");
  if (suitable.size() > 1) throw infeasible_parameter("chain root not unique");
  a = suitable.front();
  double cos_bc = diagonal3_endpoint(a, delta, eps);
  b = solve_b_from_diagonal(2 * kPi / 3, cos_bc);
  if (!(b > 0)) throw infeasible_parameter("degenerate edge b");
  double cos_rho = platonic_triangle_cos_circumradius(n);
  gamma = angle_from_three_sides(a, b, std::acos(cos_rho));
  beta = bg_sum - gamma;
  if (!(beta > 0 && beta < 2 * kPi)) throw infeasible_parameter("beta outside (0,2pi)");
}

inline PentagonSpec make_family_spec(int family, int f) {
  if (f != 24 && f != 60) throw domain_error("family solver: f must be 24 or 60");
  int n = (f == 24) ? 4 : 5;
  PentagonSpec p;
  p.f = f;
  p.alpha = AngleForm::form_with_value(Rational(2, 3), Rational(0), f);
  p.epsilon = AngleForm::form_with_value(Rational(1, 3), Rational(4), f);
  if (family == 1) {
    // delta + 2 epsilon = 2 pi
    p.delta = AngleForm::form_with_value(Rational(4, 3), Rational(-8), f);
    p.beta_gamma_sum_q = Rational(2, 3);
    p.beta_gamma_sum_r = Rational(8);
  } else {
    // 2 delta + epsilon = 2 pi
    p.delta = AngleForm::form_with_value(Rational(5, 6), Rational(-2), f);
    p.beta_gamma_sum_q = Rational(7, 6);
    p.beta_gamma_sum_r = Rational(2);
  }
  double bg = (p.beta_gamma_sum_q->to_double() + p.beta_gamma_sum_r->to_double() / f) * kPi;
  double a, b, beta, gamma;
  solve_edges_and_split(n, *p.delta.numeric, *p.epsilon.numeric, bg, a, b, beta, gamma);
  p.a = a;
  p.b = b;
  p.beta = AngleForm::value(beta);
  p.gamma = AngleForm::value(gamma);
  return p;
}

}  // namespace detail

// Pentagon with vertices alpha^3, beta gamma delta and the relation
// delta + 2 epsilon = 2 pi.
inline PentagonSpec solve_family1(int f) { return detail::make_family_spec(1, f); }

// Pentagon with vertices alpha^3, beta gamma delta and the relation
// 2 delta + epsilon = 2 pi.
inline PentagonSpec solve_family2(int f) { return detail::make_family_spec(2, f); }

enum class Reduction { CEqualsA, CEqualsB };

namespace detail {

// Walks the c=a pentagon for a trial edge a: chain of three a-arcs with
// same-side interior angles (2pi/3 at the face center, theta at the joint),
// apex placed at leg distance b from both chain endpoints with opening angle
// 2pi/n. Returns measured beta+gamma, or NaN when infeasible.
struct CEqASample {
  double b = 0, beta = 0, gamma = 0;
  bool ok = false;
};
inline CEqASample c_eq_a_probe(int n, double theta, double a) {
  CEqASample s;
  double alpha = 2 * kPi / n, delta = 2 * kPi / 3;
  double cos_chord = diagonal3_endpoint(a, delta, theta);
  double cb2 = (cos_chord - std::cos(alpha)) / (1 - std::cos(alpha));
  if (!(cb2 > 0 && cb2 < 1)) return s;
  s.b = std::acos(std::sqrt(cb2));
  // Assemble the chain w -> c -> fpt -> spt; interior turns on the same side.
  Vec3 p{0, 0, 1}, t{1, 0, 0};
  Vec3 w = p;
  geodesic_step(p, t, a);
  t = rotate_about(p, kPi - delta, t);
  Vec3 c = p;
  geodesic_step(p, t, a);
  t = rotate_about(p, kPi - theta, t);
  Vec3 fpt = p;
  geodesic_step(p, t, a);
  Vec3 spt = p;
  // Apex on the perpendicular bisector of the chord w..spt, at leg length b,
  // on the far side from the chain.
  Vec3 mid = normalized(w + spt);
  Vec3 axis = normalized(cross(w, spt));
  double half_chord = arc_length(w, spt) / 2;
  double cos_h = std::cos(s.b) / std::cos(half_chord);
  if (std::abs(cos_h) > 1) return s;
  double h = std::acos(cos_h);
  Vec3 apex1 = std::cos(h) * mid + std::sin(h) * axis;
  Vec3 apex2 = std::cos(h) * mid - std::sin(h) * axis;
  Vec3 apex = (dot(c, apex1) < dot(c, apex2)) ? apex1 : apex2;
  // Pentagon cycle: apex(alpha) - w(beta) - c(delta) - fpt(epsilon=theta) - spt(gamma).
  s.beta = interior_angle(w, apex, c);
  s.gamma = interior_angle(spt, fpt, apex);
  s.ok = true;
  return s;
}

inline PentagonSpec solve_subdivision_c_eq_a(int n, double theta) {
  // 1D solve in a: measured beta+gamma must equal 2pi - theta.
  auto residual = [&](double a) -> double {
    CEqASample s = c_eq_a_probe(n, theta, a);
    if (!s.ok) return std::nan("");
    return s.beta + s.gamma - (2 * kPi - theta);
  };
  double lo = 0.02, hi = std::acos(platonic_triangle_cos_side(n)) / 2;
  // Bracket a sign change on a grid, then bisect.
  const int kGrid = 256;
  double prev_a = std::nan(""), prev_r = std::nan("");
  double root = std::nan("");
  for (int i = 0; i <= kGrid; ++i) {
    double a = lo + (hi - lo) * i / kGrid;
    double r = residual(a);
    if (!std::isnan(prev_r) && !std::isnan(r) && prev_r * r <= 0) {
      double x0 = prev_a, x1 = a, r0 = prev_r;
      for (int it = 0; it < 200; ++it) {
        double xm = (x0 + x1) / 2, rm = residual(xm);
        if (std::isnan(rm)) break;
        if (r0 * rm <= 0)
          x1 = xm;
        else {
          x0 = xm;
          r0 = rm;
        }
      }
      root = (x0 + x1) / 2;
      break;
    }
    if (!std::isnan(r)) {
      prev_a = a;
      prev_r = r;
    } else {
      prev_a = prev_r = std::nan("");
    }
  }
  if (std::isnan(root)) throw infeasible_parameter("c=a reduction: no feasible edge length");
  CEqASample s = c_eq_a_probe(n, theta, root);
  if (!s.ok || !(s.beta > 0) || !(s.gamma > 0)) throw infeasible_parameter("c=a reduction: invalid pentagon");
  PentagonSpec p;
  p.alpha = AngleForm::value(2 * kPi / n);
  p.beta = AngleForm::value(s.beta);
  p.gamma = AngleForm::value(s.gamma);
  p.delta = AngleForm::value(2 * kPi / 3);
  p.epsilon = AngleForm::value(theta);
  p.a = root;
  p.b = s.b;
  switch (n) {
    case 3: p.f = 12; break;
    case 4: p.f = 24; break;
    case 5: p.f = 60; break;
  }
  return p;
}

}  // namespace detail

// One-parameter pentagon families behind the subdivision tilings. For the
// c=b reduction the triangle sides are trisected into a-edges and the free
// parameter is the pentagon's delta (the alternating chain angle); alpha is
// 2pi/3 at the face center and epsilon = 2pi/n at the platonic corner. For
// the c=a reduction the corner carries alpha = 2pi/n, delta = 2pi/3 sits at
// the face center and the parameter is the remaining a2-angle epsilon.
inline PentagonSpec solve_subdivision_family(int n, Reduction reduction, Radians param) {
  if (n != 3 && n != 4 && n != 5) throw domain_error("subdivision family: n must be 3, 4 or 5");
  if (!(param > 0 && param < 2 * kPi)) throw infeasible_parameter("parameter outside (0,2pi)");
  if (reduction == Reduction::CEqualsA) return detail::solve_subdivision_c_eq_a(n, param);
  PentagonSpec p;
  switch (n) {
    case 3: p.f = 12; break;
    case 4: p.f = 24; break;
    case 5: p.f = 60; break;
  }
  double eps = 2 * kPi / n;
  double bg = 2 * kPi - param;  // beta + gamma + delta = 2 pi at trisection vertices
  double a, b, beta, gamma;
  detail::solve_edges_and_split(n, param, eps, bg, a, b, beta, gamma);
  if (!(gamma > 0)) throw infeasible_parameter("gamma outside (0,2pi)");
  if (std::abs(a - b) < 1e-12) throw infeasible_parameter("a = b (regular point excluded)");
  p.alpha = AngleForm::value(2 * kPi / 3);
  p.beta = AngleForm::value(beta);
  p.gamma = AngleForm::value(gamma);
  p.delta = AngleForm::value(param);
  p.epsilon = AngleForm::value(eps);
  p.a = a;
  p.b = b;
  return p;
}

struct ExclusionCase {
  std::string name;
  AngleLabel which;
  double computed;               // radians
  Rational excluded_over_pi;     // the rational multiple of pi ruled out
  double gap;                    // |computed - excluded|, radians

  double gap_over_pi() const { return gap / kPi; }
};

// The icosahedral candidate with the corner/chain roles mirrored: alpha=2pi/3
// at the center, delta=2pi/5 at the corners, chain turns at epsilon=3pi/5.
// Its cubic has a single real root; the computed beta misses 4pi/5.
struct MirrorIcosaCandidate {
  double cos_a = 0, a = 0, b = 0, beta = 0;
  int real_root_count = 0;
};
inline MirrorIcosaCandidate solve_mirror_icosa_candidate() {
  MirrorIcosaCandidate r;
  double eps = 3 * kPi / 5;
  double cos_l = platonic_triangle_cos_side(5);
  std::vector<double> roots = solve_chain3_for_a(cos_l, eps);
  std::vector<double> cubic_roots = cubic_real_roots(Cubic{
      std::pow(1 - std::cos(eps), 2), 1 - std::cos(eps) * std::cos(eps),
      2 * std::cos(eps) - std::cos(eps) * std::cos(eps),
      -(1 - std::cos(eps) * std::cos(eps)) - cos_l});
  r.real_root_count = static_cast<int>(cubic_roots.size());
  if (roots.empty()) throw domain_error("mirror icosa candidate: no chain root");
  r.a = roots.front();
  for (double cand : roots)
    if (std::cos(cand) > 0) r.a = cand;
  r.cos_a = std::cos(r.a);
  double cos_bc = diagonal3_endpoint(r.a, eps, 2 * kPi / 5);
  r.b = solve_b_from_diagonal(2 * kPi / 3, cos_bc);
  r.beta = angle_from_three_sides(r.a, r.b, std::acos(platonic_triangle_cos_circumradius(5)));
  return r;
}

// The five numeric exclusions that pin down which rational-angle candidates
// survive: each reports the computed angle, the ruled-out rational multiple
// of pi, and their gap. All gaps exceed 1e-3*pi.
inline std::vector<ExclusionCase> exclusion_checks() {
  std::vector<ExclusionCase> out;
  auto add = [&](std::string name, AngleLabel which, double computed, Rational excluded) {
    ExclusionCase c;
    c.name = std::move(name);
    c.which = which;
    c.computed = computed;
    c.excluded_over_pi = excluded;
    c.gap = std::abs(computed - excluded.to_double() * kPi);
    out.push_back(c);
  };
  add("family1 f=24: beta vs pi/4", AngleLabel::Beta, solve_family1(24).angle(AngleLabel::Beta),
      Rational(1, 4));
  add("family1 f=60: gamma vs 3pi/5", AngleLabel::Gamma, solve_family1(60).angle(AngleLabel::Gamma),
      Rational(3, 5));
  add("family2 f=24: gamma vs 3pi/4", AngleLabel::Gamma, solve_family2(24).angle(AngleLabel::Gamma),
      Rational(3, 4));
  add("family2 f=60: gamma vs 4pi/5", AngleLabel::Gamma, solve_family2(60).angle(AngleLabel::Gamma),
      Rational(4, 5));
  add("mirror icosa candidate: beta vs 4pi/5", AngleLabel::Beta, solve_mirror_icosa_candidate().beta,
      Rational(4, 5));
  return out;
}

// ---------------------------------------------------------------------------
// Random simple pentagons and quadrilaterals for the geometric lemma checks.

struct SampledPentagon {
  // Vertex order follows the boundary: apex, then the b-a-?-a-b cycle.
  std::array<Vec3, 5> vertex;  // A(alpha), B(beta), D(delta), E(epsilon), C(gamma)
  PentagonSpec spec;           // measured angles; a,b the generating edges
};

struct SampledQuadrilateral {
  std::array<Vec3, 4> vertex;  // B, D, E, C
  double beta = 0, gamma = 0, delta = 0, epsilon = 0;
};

namespace detail {

inline bool boundary_simple(const Vec3* v, int k) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (arcs_cross(v[i], v[(i + 1) % k], v[j], v[(j + 1) % k], adjacent)) return false;
    }
  return true;
}

}  // namespace detail

// Rejection-samples a simple spherical pentagon with two b-edges at the apex
// and two a-edges flanking the free bottom edge; delta and epsilon are
// measured from the construction. Throws retry_exhausted after a bounded
// number of attempts.
inline SampledPentagon sample_simple_pentagon(std::uint64_t seed, int max_attempts = 512) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> edge(0.08 * kPi, 0.55 * kPi);
  std::uniform_real_distribution<double> ang(0.15 * kPi, 1.55 * kPi);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    double a = edge(rng), b = edge(rng);
    double alpha = ang(rng), beta = ang(rng), gamma = ang(rng);
    Vec3 A{0, 0, 1};
    Vec3 tAB{1, 0, 0};
    Vec3 B = std::cos(b) * A + std::sin(b) * tAB;
    Vec3 tAC = rotate_about(A, alpha, tAB);
    Vec3 C = std::cos(b) * A + std::sin(b) * tAC;
    Vec3 tBD = rotate_about(B, -beta, tangent_toward(B, A));
    Vec3 D = std::cos(a) * B + std::sin(a) * tBD;
    Vec3 tCE = rotate_about(C, gamma, tangent_toward(C, A));
    Vec3 E = std::cos(a) * C + std::sin(a) * tCE;
    double de = arc_length(D, E);
    if (de < 0.05 || de > 0.95 * kPi) continue;
    Vec3 v[5] = {A, B, D, E, C};
    if (!detail::boundary_simple(v, 5)) continue;
    double delta = interior_angle(D, B, E);
    double eps = interior_angle(E, D, C);
    if (delta < 0.02 || delta > 2 * kPi - 0.02 || eps < 0.02 || eps > 2 * kPi - 0.02) continue;
    SampledPentagon s;
    s.vertex = {A, B, D, E, C};
    s.spec.alpha = AngleForm::value(alpha);
    s.spec.beta = AngleForm::value(beta);
    s.spec.gamma = AngleForm::value(gamma);
    s.spec.delta = AngleForm::value(delta);
    s.spec.epsilon = AngleForm::value(eps);
    s.spec.a = a;
    s.spec.b = b;
    return s;
  }
  throw retry_exhausted("sample_simple_pentagon: rejection budget exhausted");
}

// Quadrilateral variant: drop the apex, keep the pair of a-edges.
inline SampledQuadrilateral sample_simple_quadrilateral(std::uint64_t seed, int max_attempts = 512) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> edge(0.08 * kPi, 0.55 * kPi);
  std::uniform_real_distribution<double> top(0.15 * kPi, 0.8 * kPi);
  std::uniform_real_distribution<double> ang(0.15 * kPi, 1.55 * kPi);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    double a = edge(rng), m = top(rng);
    double beta = ang(rng), gamma = ang(rng);
    Vec3 B{0, 0, 1};
    Vec3 tBC{1, 0, 0};
    Vec3 C = std::cos(m) * B + std::sin(m) * tBC;
    Vec3 tBD = rotate_about(B, -beta, tBC);
    Vec3 D = std::cos(a) * B + std::sin(a) * tBD;
    Vec3 tCE = rotate_about(C, gamma, tangent_toward(C, B));
    Vec3 E = std::cos(a) * C + std::sin(a) * tCE;
    double de = arc_length(D, E);
    if (de < 0.05 || de > 0.95 * kPi) continue;
    Vec3 v[4] = {B, D, E, C};
    if (!detail::boundary_simple(v, 4)) continue;
    SampledQuadrilateral q;
    q.vertex = {B, D, E, C};
    q.beta = beta;
    q.gamma = gamma;
    q.delta = interior_angle(D, B, E);
    q.epsilon = interior_angle(E, D, C);
    if (q.delta < 0.02 || q.delta > 2 * kPi - 0.02 || q.epsilon < 0.02 ||
        q.epsilon > 2 * kPi - 0.02)
      continue;
    return q;
  }
  throw retry_exhausted("sample_simple_quadrilateral: rejection budget exhausted");
}

// ---------------------------------------------------------------------------
// JSON serialization. Round-trip preserves numerics exactly (nlohmann prints
// shortest round-trip doubles).

inline nlohmann::json to_json(const AngleForm& a) {
  nlohmann::json j;
  j["q"] = a.q ? nlohmann::json(a.q->str()) : nlohmann::json(nullptr);
  j["r"] = a.r ? nlohmann::json(a.r->str()) : nlohmann::json(nullptr);
  j["numeric"] = a.numeric ? nlohmann::json(*a.numeric) : nlohmann::json(nullptr);
  return j;
}
inline AngleForm angle_form_from_json(const nlohmann::json& j) {
  AngleForm a;
  if (!j.at("q").is_null()) a.q = Rational::parse(j.at("q").get<std::string>());
  if (!j.at("r").is_null()) a.r = Rational::parse(j.at("r").get<std::string>());
  if (!j.at("numeric").is_null()) a.numeric = j.at("numeric").get<double>();
  return a;
}

inline nlohmann::json to_json(const PentagonSpec& p) {
  nlohmann::json j;
  j["f"] = p.f ? nlohmann::json(*p.f) : nlohmann::json(nullptr);
  j["angles"] = {{"alpha", to_json(p.alpha)},
                 {"beta", to_json(p.beta)},
                 {"gamma", to_json(p.gamma)},
                 {"delta", to_json(p.delta)},
                 {"epsilon", to_json(p.epsilon)}};
  j["edges"] = {{"a", p.a}, {"b", p.b}};
  if (p.beta_gamma_sum_q)
    j["beta_gamma_sum"] = {{"q", p.beta_gamma_sum_q->str()}, {"r", p.beta_gamma_sum_r->str()}};
  return j;
}
inline PentagonSpec pentagon_from_json(const nlohmann::json& j) {
  PentagonSpec p;
  if (!j.at("f").is_null()) p.f = j.at("f").get<int>();
  const auto& a = j.at("angles");
  p.alpha = angle_form_from_json(a.at("alpha"));
  p.beta = angle_form_from_json(a.at("beta"));
  p.gamma = angle_form_from_json(a.at("gamma"));
  p.delta = angle_form_from_json(a.at("delta"));
  p.epsilon = angle_form_from_json(a.at("epsilon"));
  p.a = j.at("edges").at("a").get<double>();
  p.b = j.at("edges").at("b").get<double>();
  if (j.contains("beta_gamma_sum")) {
    p.beta_gamma_sum_q = Rational::parse(j["beta_gamma_sum"]["q"].get<std::string>());
    p.beta_gamma_sum_r = Rational::parse(j["beta_gamma_sum"]["r"].get<std::string>());
  }
  return p;
}

}  // namespace pentile
