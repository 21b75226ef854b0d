#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pentile/pentagon.hpp"

using namespace pentile;
using Catch::Approx;

namespace {
// Golden values, frozen from a 40-digit recomputation of the closed forms.
constexpr double kF1a24_a = 0.5235987755982988731;  // pi/6
constexpr double kF1a24_b = 0.6621452356455522740;
constexpr double kF1a24_beta = 1.2199169159226388841;
constexpr double kF1a24_gamma = 1.9216757376671543544;
constexpr double kF1a60_a = 0.3862003568102967381;
constexpr double kF1a60_b = 0.4778778754985257439;
constexpr double kF1a60_gamma = 1.7326553529995703182;
constexpr double kF2a24_a = 0.5634345205827740605;
constexpr double kF2a24_b = 0.5155224215118266184;
constexpr double kF2a24_gamma = 2.2153358600466514137;
constexpr double kF2a60_b = 0.3312184104263347878;
constexpr double kF2a60_gamma = 2.2970395917966742513;
}  // namespace

TEST_CASE("family 1 pentagons") {
  PentagonSpec p24 = solve_family1(24);
  CHECK(p24.a == Approx(kF1a24_a).margin(1e-12));
  CHECK(p24.a == Approx(kPi / 6).margin(1e-12));  // exact in the f=24 geometry
  CHECK(p24.b == Approx(kF1a24_b).margin(1e-12));
  CHECK(std::cos(p24.b) == Approx((3 + std::sqrt(3.0)) / 6).margin(1e-12));
  CHECK(p24.angle(AngleLabel::Beta) == Approx(kF1a24_beta).margin(1e-12));
  double closed_beta = (std::sqrt(3.0) - 1) / std::sqrt(2 * (4 - std::sqrt(3.0)));
  CHECK(std::cos(p24.angle(AngleLabel::Beta)) == Approx(closed_beta).margin(1e-12));
  CHECK(p24.angle(AngleLabel::Delta) == Approx(kPi).margin(1e-12));
  CHECK(p24.angle(AngleLabel::Epsilon) == Approx(kPi / 2).margin(1e-12));
  // beta + gamma = pi for f=24.
  CHECK(p24.angle(AngleLabel::Beta) + p24.angle(AngleLabel::Gamma) == Approx(kPi).margin(1e-10));

  PentagonSpec p60 = solve_family1(60);
  CHECK(p60.a == Approx(kF1a60_a).margin(1e-12));
  double s5 = std::sqrt(5.0);
  CHECK(std::cos(p60.a) == Approx((3 - s5 + std::sqrt(2 * (3 * s5 - 1))) / (2 * s5)).margin(1e-12));
  CHECK(p60.b == Approx(kF1a60_b).margin(1e-12));
  double closed_b60 =
      std::sqrt((3 * s5 - 4 + 3 * std::sqrt(2 * (3 * s5 - 1)) - std::sqrt(10 * (3 * s5 - 1))) /
                (3 * s5));
  CHECK(std::cos(p60.b) == Approx(closed_b60).margin(1e-12));
  CHECK(p60.angle(AngleLabel::Gamma) == Approx(kF1a60_gamma).margin(1e-12));
  CHECK(p60.angle(AngleLabel::Gamma) / kPi == Approx(0.5515).margin(1e-4));
}

TEST_CASE("family 2 pentagons") {
  PentagonSpec p24 = solve_family2(24);
  CHECK(p24.a == Approx(kF2a24_a).margin(1e-12));
  CHECK(p24.a / kPi == Approx(0.17935).margin(1e-4));
  CHECK(p24.b == Approx(kF2a24_b).margin(1e-12));
  CHECK(p24.b / kPi == Approx(0.1640).margin(1e-4));
  double closed_b =
      std::sqrt(-2.0 / 3 * std::pow(std::cos(p24.a), 2) +
                2.0 / 3 * (std::sqrt(2.0) - 1) * std::cos(p24.a) + 1);
  CHECK(std::cos(p24.b) == Approx(closed_b).margin(1e-12));
  CHECK(p24.angle(AngleLabel::Gamma) == Approx(kF2a24_gamma).margin(1e-12));
  CHECK(p24.angle(AngleLabel::Gamma) / kPi == Approx(0.7051).margin(1e-4));
  CHECK(p24.angle(AngleLabel::Delta) == Approx(3 * kPi / 4).margin(1e-12));

  PentagonSpec p60 = solve_family2(60);
  CHECK(p60.b == Approx(kF2a60_b).margin(1e-12));
  CHECK(p60.b / kPi == Approx(0.1054).margin(1e-4));
  double s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
  double closed_b60 = std::sqrt(
      (3 * s10 - 2 * std::sqrt(2.0) + 3 * std::sqrt(3 * s5 - 1) - std::sqrt(5 * (3 * s5 - 1))) /
      (3 * s10));
  CHECK(std::cos(p60.b) == Approx(closed_b60).margin(1e-12));
  CHECK(p60.angle(AngleLabel::Gamma) == Approx(kF2a60_gamma).margin(1e-12));
  CHECK(p60.angle(AngleLabel::Gamma) / kPi == Approx(0.7311).margin(1e-4));
  // a agrees between the two f=60 families.
  CHECK(p60.a == Approx(solve_family1(60).a).margin(1e-10));
}

TEST_CASE("solved pentagons satisfy the angle sum and the defining equations") {
  for (int fam : {1, 2})
    for (int f : {24, 60}) {
      PentagonSpec p = fam == 1 ? solve_family1(f) : solve_family2(f);
      CHECK(p.angle_sum() == Approx((3.0 + 4.0 / f) * kPi).margin(1e-10));
      int n = f == 24 ? 4 : 5;
      // Chain equation reproduces the platonic side.
      CHECK(chain3_endpoint(p.a, p.angle(AngleLabel::Delta)) ==
            Approx(platonic_triangle_cos_side(n)).margin(1e-10));
      // Diagonal equations reproduce b.
      double cos_bc = diagonal3_endpoint(p.a, p.angle(AngleLabel::Delta), p.angle(AngleLabel::Epsilon));
      CHECK(solve_b_from_diagonal(p.angle(AngleLabel::Alpha), cos_bc) == Approx(p.b).margin(1e-10));
      // The family relation.
      if (fam == 1)
        CHECK(p.angle(AngleLabel::Delta) + 2 * p.angle(AngleLabel::Epsilon) ==
              Approx(2 * kPi).margin(1e-12));
      else
        CHECK(2 * p.angle(AngleLabel::Delta) + p.angle(AngleLabel::Epsilon) ==
              Approx(2 * kPi).margin(1e-12));
    }
}

TEST_CASE("subdivision family cross-checks") {
  auto matches = [](const PentagonSpec& x, const PentagonSpec& y) {
    CHECK(x.a == Approx(y.a).margin(1e-10));
    CHECK(x.b == Approx(y.b).margin(1e-10));
    for (AngleLabel l : {AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma, AngleLabel::Delta,
                         AngleLabel::Epsilon})
      CHECK(x.angle(l) == Approx(y.angle(l)).margin(1e-10));
  };
  matches(solve_subdivision_family(5, Reduction::CEqualsB, 6 * kPi / 5), solve_family1(60));
  matches(solve_subdivision_family(4, Reduction::CEqualsB, 3 * kPi / 4), solve_family2(24));
  matches(solve_subdivision_family(4, Reduction::CEqualsB, kPi), solve_family1(24));
  // delta and 2pi - delta give the two orientations with the same a.
  PentagonSpec q1 = solve_subdivision_family(5, Reduction::CEqualsB, 4 * kPi / 5);
  matches(q1, solve_family2(60));
}

TEST_CASE("subdivision family is continuous in the parameter") {
  for (int n : {4, 5}) {
    double base = (n == 4) ? 0.9 * kPi : 1.15 * kPi;
    for (int i = 0; i < 5; ++i) {
      double d = base + 0.01 * i;
      PentagonSpec p1 = solve_subdivision_family(n, Reduction::CEqualsB, d);
      PentagonSpec p2 = solve_subdivision_family(n, Reduction::CEqualsB, d + 1e-6);
      CHECK(std::abs(p1.a - p2.a) < 1e-4);
      CHECK(std::abs(p1.b - p2.b) < 1e-4);
      CHECK(std::abs(p1.angle(AngleLabel::Beta) - p2.angle(AngleLabel::Beta)) < 1e-4);
      CHECK(std::abs(p1.angle(AngleLabel::Gamma) - p2.angle(AngleLabel::Gamma)) < 1e-4);
    }
  }
}

TEST_CASE("subdivision family rejects infeasible parameters") {
  CHECK_THROWS_AS(solve_subdivision_family(4, Reduction::CEqualsB, 0.05), infeasible_parameter);
  CHECK_THROWS_AS(solve_subdivision_family(5, Reduction::CEqualsB, 2 * kPi - 1e-6),
                  infeasible_parameter);
  CHECK_THROWS_AS(solve_subdivision_family(2, Reduction::CEqualsB, kPi), domain_error);
}

TEST_CASE("c=a reduction produces valid pentagons with the corner alpha") {
  // alpha = 2pi/n at the platonic corner, delta = 2pi/3 at the face center.
  for (int n : {3, 4, 5}) {
    PentagonSpec p = solve_subdivision_family(n, Reduction::CEqualsA, 0.55 * kPi);
    CHECK(p.angle(AngleLabel::Alpha) == Approx(2 * kPi / n).margin(1e-9));
    CHECK(p.angle(AngleLabel::Delta) == Approx(2 * kPi / 3).margin(1e-9));
    CHECK(p.angle(AngleLabel::Epsilon) == Approx(0.55 * kPi).margin(1e-9));
    int f = n == 3 ? 12 : (n == 4 ? 24 : 60);
    CHECK(p.angle_sum() == Approx((3.0 + 4.0 / f) * kPi).margin(1e-8));
  }
  // For n=3 the two reductions coincide up to the mirror relabeling
  // (beta <-> gamma, delta <-> epsilon).
  PentagonSpec a = solve_subdivision_family(3, Reduction::CEqualsA, 0.62 * kPi);
  PentagonSpec b = solve_subdivision_family(3, Reduction::CEqualsB, 0.62 * kPi);
  CHECK(a.a == Approx(b.a).margin(1e-8));
  CHECK(a.b == Approx(b.b).margin(1e-8));
  CHECK(a.angle(AngleLabel::Beta) == Approx(b.angle(AngleLabel::Gamma)).margin(1e-8));
  CHECK(a.angle(AngleLabel::Gamma) == Approx(b.angle(AngleLabel::Beta)).margin(1e-8));
}

TEST_CASE("exclusion_checks rules out all five rational candidates") {
  auto cases = exclusion_checks();
  REQUIRE(cases.size() == 5);
  for (const auto& c : cases) CHECK(c.gap_over_pi() > 1e-3);
  CHECK(cases[0].gap_over_pi() == Approx(0.1383).margin(1e-4));   // f1 f24 beta vs pi/4
  CHECK(cases[1].gap_over_pi() == Approx(0.0485).margin(1e-4));   // f1 f60 gamma vs 3pi/5
  CHECK(cases[4].gap_over_pi() == Approx(0.0100).margin(1e-4));   // mirror icosa beta vs 4pi/5
  MirrorIcosaCandidate mc = solve_mirror_icosa_candidate();
  CHECK(mc.real_root_count == 1);
  CHECK(mc.cos_a == Approx(0.9023).margin(1e-4));
  CHECK(mc.beta / kPi == Approx(0.8100).margin(1e-4));
}

TEST_CASE("classify_symmetry") {
  CHECK(classify_symmetry(solve_family1(60)) == SymmetryClass::GammaGreater);
  PentagonSpec f1_60 = solve_family1(60);
  CHECK(f1_60.angle(AngleLabel::Beta) / kPi == Approx(0.2485).margin(1e-4));
  CHECK(classify_symmetry(solve_family2(24)) == SymmetryClass::GammaGreater);
  PentagonSpec f2_24 = solve_family2(24);
  CHECK(f2_24.angle(AngleLabel::Beta) / kPi == Approx(0.5449).margin(1e-4));

  PentagonSpec sym;
  sym.alpha = AngleForm::value(0.6 * kPi);
  sym.beta = AngleForm::value(0.7 * kPi);
  sym.gamma = AngleForm::value(0.7 * kPi);
  sym.delta = AngleForm::value(0.8 * kPi);
  sym.epsilon = AngleForm::value(0.8 * kPi);
  CHECK(classify_symmetry(sym) == SymmetryClass::Symmetric);

  PentagonSpec bad = sym;
  bad.delta = AngleForm::value(0.9 * kPi);  // beta=gamma but delta!=epsilon
  CHECK_THROWS_AS(classify_symmetry(bad), lemma_violation);
  PentagonSpec bad2 = sym;
  bad2.beta = AngleForm::value(0.9 * kPi);   // beta>gamma ...
  bad2.delta = AngleForm::value(0.9 * kPi);  // ... and delta>epsilon
  CHECK_THROWS_AS(classify_symmetry(bad2), lemma_violation);
}

TEST_CASE("sampled pentagons satisfy the order lemma") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SampledPentagon s = sample_simple_pentagon(seed);
    double beta = s.spec.angle(AngleLabel::Beta), gamma = s.spec.angle(AngleLabel::Gamma);
    double delta = s.spec.angle(AngleLabel::Delta), eps = s.spec.angle(AngleLabel::Epsilon);
    if (std::abs(beta - gamma) < 1e-9) continue;
    ++used;
    CHECK((beta > gamma) == (delta < eps));
    // Equivalent formulation: classification never sees an inconsistent pair.
    CHECK_NOTHROW(classify_symmetry(s.spec));
  }
  CHECK(used > 900);
}

TEST_CASE("sampled quadrilaterals satisfy the order lemma") {
  int used = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SampledQuadrilateral q = sample_simple_quadrilateral(seed);
    if (std::abs(q.beta - q.gamma) < 1e-9) continue;
    ++used;
    CHECK((q.beta > q.gamma) == (q.delta < q.epsilon));
  }
  CHECK(used > 900);
}

TEST_CASE("pentagon json round trip preserves numerics exactly") {
  for (const PentagonSpec& p : {solve_family1(60), solve_family2(24)}) {
    nlohmann::json j = to_json(p);
    PentagonSpec q = pentagon_from_json(nlohmann::json::parse(j.dump()));
    CHECK(q.a == p.a);
    CHECK(q.b == p.b);
    for (AngleLabel l : {AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma, AngleLabel::Delta,
                         AngleLabel::Epsilon})
      CHECK(q.angle(l) == p.angle(l));
    CHECK(q.f == p.f);
  }
}
