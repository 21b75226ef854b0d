// Acceptance suite: runs every headline requirement end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "pentile/pentile.hpp"

using namespace pentile;

namespace {

int g_failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail = "") {
  std::printf("CRITERION %d %-4s %s%s%s\n", criterion, pass ? "PASS" : "FAIL", title,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1: golden angle values ------------------------------------------------

bool golden_values() {
  auto t0 = std::chrono::steady_clock::now();
  struct Entry {
    int family, f;
    const char* what;
    double value;   // computed, radians
    double golden;  // the 4-digit value, units of pi
  };
  PentagonSpec f1_24 = solve_family1(24), f1_60 = solve_family1(60);
  PentagonSpec f2_24 = solve_family2(24), f2_60 = solve_family2(60);
  std::vector<Entry> entries = {
      {1, 24, "b", f1_24.b, 0.2107},
      {1, 24, "beta", f1_24.angle(AngleLabel::Beta), 0.3883},
      {1, 60, "a", f1_60.a, 0.1229},
      {1, 60, "b", f1_60.b, 0.1521},
      {1, 60, "gamma", f1_60.angle(AngleLabel::Gamma), 0.5515},
      {2, 24, "a", f2_24.a, 0.1973},
      {2, 24, "b", f2_24.b, 0.1640},
      {2, 24, "gamma", f2_24.angle(AngleLabel::Gamma), 0.7051},
      {2, 60, "b", f2_60.b, 0.1054},
      {2, 60, "gamma", f2_60.angle(AngleLabel::Gamma), 0.7311},
  };
  bool all = true;
  for (const auto& e : entries) {
    bool ok = std::abs(e.value - e.golden * kPi) <= 1e-4 * kPi;
    all = all && ok;
    std::printf("  [%s] family %d f=%d %-5s = %.6f pi vs %.4f pi\n", ok ? "ok" : "XX", e.family,
                e.f, e.what, e.value / kPi, e.golden);
    if (!ok && e.family == 2 && e.f == 24) {
      std::printf(
          "       note: the printed value 0.1973 is inconsistent with its own cubic\n"
          "       cos^3 a+(3-2sqrt2)cos^2 a+(5-4sqrt2)cos a-3+2sqrt2=0, whose unique positive\n"
          "       root is cos a = 0.845426 (a = 0.17935 pi); b = 0.1640 pi and gamma = 0.7051 pi\n"
          "       are reproduced from 0.17935 pi only. The implementation keeps the\n"
          "       self-consistent value and this entry fails as stated.\n");
    }
  }
  bool fast = seconds_since(t0) < 1.0;
  if (!fast) std::printf("  [XX] runtime %.3f s exceeds 1 s\n", seconds_since(t0));
  return all && fast;
}

// --- 2: closed-form cross-checks -------------------------------------------

bool closed_forms() {
  double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  bool ok1 = std::abs(std::cos(solve_family1(24).b) - (3 + s3) / 6) < 1e-10;
  bool ok2 =
      std::abs(std::cos(solve_family1(60).a) - (3 - s5 + std::sqrt(2 * (3 * s5 - 1))) / (2 * s5)) <
      1e-10;
  return ok1 && ok2;
}

// --- 3: exclusions ----------------------------------------------------------

bool exclusions() {
  auto cases = exclusion_checks();
  if (cases.size() != 5) return false;
  bool ok = true;
  for (const auto& c : cases) ok = ok && c.gap_over_pi() > 1e-3;
  MirrorIcosaCandidate mc = solve_mirror_icosa_candidate();
  ok = ok && mc.real_root_count == 1;
  ok = ok && std::abs(mc.cos_a - 0.9023) < 1e-4;
  ok = ok && std::abs(mc.beta / kPi - 0.8100) < 1e-4;
  return ok;
}

// --- 4: AVC reproduction ----------------------------------------------------

bool avc_sets() {
  auto eq = [](std::vector<VertexType> got, std::vector<VertexType> want) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
  };
  auto T = [](int a, int b, int g, int d, int e) { return VertexType::of(a, b, g, d, e); };
  bool ok = true;
  ok = ok && eq(enumerate_vertex_types(solve_family1(24).angles()),
                {T(3, 0, 0, 0, 0), T(0, 1, 1, 1, 0), T(0, 0, 0, 1, 2), T(0, 2, 2, 0, 0),
                 T(0, 1, 1, 0, 2), T(0, 0, 0, 0, 4)});
  ok = ok && eq(enumerate_vertex_types(solve_family1(60).angles()),
                {T(3, 0, 0, 0, 0), T(0, 1, 1, 1, 0), T(0, 0, 0, 1, 2), T(0, 2, 2, 0, 1),
                 T(0, 1, 1, 0, 3), T(0, 0, 0, 0, 5)});
  ok = ok && eq(enumerate_vertex_types(solve_family2(24).angles()),
                {T(3, 0, 0, 0, 0), T(0, 1, 1, 1, 0), T(0, 0, 0, 2, 1), T(0, 0, 0, 0, 4)});
  ok = ok && eq(enumerate_vertex_types(solve_family2(60).angles()),
                {T(3, 0, 0, 0, 0), T(0, 1, 1, 1, 0), T(0, 0, 0, 2, 1), T(0, 1, 1, 0, 2),
                 T(0, 0, 0, 1, 3), T(0, 0, 0, 0, 5)});
  auto sol = solve_angles_from_base(
      {VertexEquation::of(3, 0, 0, 0, 0), VertexEquation::of(0, 1, 1, 1, 0),
       VertexEquation::of(0, 0, 0, 1, 2)});
  ok = ok && eq(enumerate_vertex_types_symbolic(sol, 36),
                {T(3, 0, 0, 0, 0), T(0, 1, 1, 1, 0), T(0, 0, 0, 1, 2), T(1, 1, 1, 0, 1)});
  return ok;
}

// --- 5: tiling atlas ----------------------------------------------------------

bool atlas(std::vector<RealizedTiling>& realizations) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& v : tiling_variants()) {
    const HalfEdgeMap& m = build_variant(v.family, v.name);
    PentagonSpec p = v.family == 1 ? solve_family1(v.f) : solve_family2(v.f);
    VerifyReport rep = verify(m, p);
    Census c = census(m);
    bool counts_ok = (v.f == 24) ? (c.vertices == 38 && c.edges == 60)
                                 : (c.vertices == 92 && c.edges == 150);
    std::string want = v.name.substr(1);
    for (auto& ch : want) ch = (ch == '_') ? ',' : ch;
    bool census_ok = c.t_notation(true) == "T(" + want + ")";
    bool this_ok = rep.all_pass() && counts_ok && census_ok;
    if (!this_ok) {
      std::printf("  [XX] %s family %d: verify=%d counts=%d census=%s\n", v.name.c_str(), v.family,
                  rep.all_pass(), counts_ok, c.t_notation(true).c_str());
      ok = false;
    }
    realizations.push_back(realize(m, p));
  }
  double dt = seconds_since(t0);
  if (dt >= 10.0) {
    std::printf("  [XX] atlas runtime %.2f s exceeds 10 s\n", dt);
    ok = false;
  }
  return ok;
}

// --- 6: holonomy --------------------------------------------------------------

bool holonomy(const std::vector<RealizedTiling>& realizations) {
  bool ok = true;
  std::size_t idx = 0;
  for (const auto& v : tiling_variants()) {
    const HalfEdgeMap& m = build_variant(v.family, v.name);
    const RealizedTiling& r = realizations[idx++];
    bool this_ok = r.max_closure_error < 1e-8 && max_vertex_holonomy(m, r) < 1e-8;
    double total = 0;
    for (int f = 0; f < m.faces(); ++f) {
      double area = face_area(r, f);
      this_ok = this_ok && std::abs(area - 4 * kPi / v.f) < 1e-8;
      total += area;
    }
    this_ok = this_ok && std::abs(total - 4 * kPi) < 1e-6;
    if (!this_ok) {
      std::printf("  [XX] %s family %d: closure=%.2e area=%.12f\n", v.name.c_str(), v.family,
                  r.max_closure_error, total);
      ok = false;
    }
  }
  return ok;
}

// --- 7: lemma sampling ----------------------------------------------------------

bool lemma_sampling() {
  int counterexamples = 0, used = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SampledPentagon s = sample_simple_pentagon(seed);
    double beta = s.spec.angle(AngleLabel::Beta), gamma = s.spec.angle(AngleLabel::Gamma);
    double delta = s.spec.angle(AngleLabel::Delta), eps = s.spec.angle(AngleLabel::Epsilon);
    if (std::abs(beta - gamma) < 1e-9) continue;
    ++used;
    if ((beta > gamma) != (delta < eps)) ++counterexamples;
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SampledQuadrilateral q = sample_simple_quadrilateral(seed);
    if (std::abs(q.beta - q.gamma) < 1e-9) continue;
    ++used;
    if ((q.beta > q.gamma) != (q.delta < q.epsilon)) ++counterexamples;
  }
  if (counterexamples) std::printf("  [XX] %d counterexamples\n", counterexamples);
  return counterexamples == 0 && used > 1800;
}

// --- 8: oracle equivalence --------------------------------------------------------

bool oracle_equivalence() {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> arc(0.05, kPi - 0.05), turn(0.05, 2 * kPi - 0.05);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    double a = arc(rng), d = turn(rng), e = turn(rng);
    worst = std::max(worst, std::abs(chain3_endpoint(a, d) - oracle::chain3(a, d)));
    worst = std::max(worst, std::abs(diagonal3_endpoint(a, d, e) - oracle::diagonal3(a, d, e)));
  }
  if (worst >= 1e-10) std::printf("  [XX] worst deviation %.3e\n", worst);
  return worst < 1e-10;
}

// --- 9: fault injection --------------------------------------------------------

bool fault_injection() {
  PentagonSpec p = solve_family1(24);
  bool ok = true;
  {
    HalfEdgeMap m = build_pentagonal_subdivision(4);
    m.elabel[7] = m.elabel[7] == EdgeLabel::A ? EdgeLabel::B : EdgeLabel::A;
    ok = ok && !verify(m, p).all_pass();
  }
  {
    HalfEdgeMap m = build_pentagonal_subdivision(4);
    std::swap(m.corner[11], m.corner[12]);
    VerifyReport rep = verify(m, p);
    ok = ok && !rep.find("face_pattern")->pass;
  }
  {
    // Reverse the equatorial seam identification (a cap glued with the wrong
    // orientation).
    HalfEdgeMap m = build_pentagonal_subdivision(4);
    std::vector<int> seam;
    for (int h = 0; h < m.half_edges(); ++h)
      if (HalfEdgeMap::face_of(h) < 12 && HalfEdgeMap::face_of(m.twin[h]) >= 12) seam.push_back(h);
    std::vector<int> ordered{seam[0]};
    while (ordered.size() < seam.size()) {
      int probe = HalfEdgeMap::next(ordered.back());
      while (HalfEdgeMap::face_of(m.twin[probe]) < 12) probe = HalfEdgeMap::next(m.twin[probe]);
      ordered.push_back(probe);
    }
    std::vector<int> southern;
    for (int h : ordered) southern.push_back(m.twin[h]);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      int g = southern[(ordered.size() - i) % ordered.size()];
      m.twin[ordered[i]] = g;
      m.twin[g] = ordered[i];
    }
    VerifyReport rep = verify(m, p);
    ok = ok && !rep.all_pass();
  }
  return ok;
}

}  // namespace

int main() {
  report(1, "golden angle values (1e-4 pi, under 1 s)", golden_values());
  report(2, "closed-form cross-checks (1e-10)", closed_forms());
  report(3, "exclusion gaps exceed 1e-3 pi", exclusions());
  report(4, "AVC displays reproduced exactly", avc_sets());
  std::vector<RealizedTiling> realizations;
  report(5, "all 14 variants verify (under 10 s)", atlas(realizations));
  report(6, "holonomy closure, areas", holonomy(realizations));
  report(7, "order lemma on 1000 sampled pentagons and quadrilaterals", lemma_sampling());
  report(8, "chain/diagonal formulas match the rotation oracle (1e-10)", oracle_equivalence());
  report(9, "fault injection flagged", fault_injection());
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
