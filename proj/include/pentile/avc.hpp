#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentile/pentagon.hpp"

namespace pentile {

// Multiset of angles meeting at a vertex.
struct VertexType {
  std::array<int, 5> n{0, 0, 0, 0, 0};  // alpha, beta, gamma, delta, epsilon

  int degree() const { return n[0] + n[1] + n[2] + n[3] + n[4]; }
  bool parity_ok() const { return (n[1] + n[2]) % 2 == 0; }
  // The angles admit a cyclic arrangement with consistent edge labels:
  // ab-angles come in even number, and b2-angles can only meet a2-angles
  // through them.
  bool edge_feasible() const {
    if (!parity_ok()) return false;
    return n[0] == 0 || n[3] + n[4] == 0 || n[1] + n[2] > 0;
  }
  int count(AngleLabel l) const { return n[static_cast<int>(l)]; }

  friend bool operator==(const VertexType& a, const VertexType& b) { return a.n == b.n; }
  // Descending lexicographic order matches the usual display order
  // (alpha-heavy first, pure-epsilon last).
  friend bool operator<(const VertexType& a, const VertexType& b) { return a.n > b.n; }

  static VertexType of(int na, int nb, int ng, int nd, int ne) {
    VertexType v;
    v.n = {na, nb, ng, nd, ne};
    return v;
  }

  std::string str(bool ascii = false) const {
    std::string s;
    static const char* sup[10] = {"", "", "²", "³", "⁴", "⁵",
                                  "⁶", "⁷", "⁸", "⁹"};
    for (int i = 0; i < 5; ++i) {
      if (n[i] == 0) continue;
      AngleLabel l = static_cast<AngleLabel>(i);
      if (ascii) {
        s += label_ascii(l);
        if (n[i] > 1) s += std::to_string(n[i]);
      } else {
        s += label_glyph(l);
        s += (n[i] < 10) ? sup[n[i]] : ("^" + std::to_string(n[i]));
      }
    }
    return s;
  }
};

struct AvcSet {
  std::vector<VertexType> items;  // sorted, unique
  int f = 0;
};

// ---------------------------------------------------------------------------
// Linear angle systems. Unknowns are the five angles in units of pi; values
// live in Q + Q*t with t = 1/f, which is closed under the row operations
// because the equation coefficients are integers.

struct VertexEquation {
  std::array<int, 5> counts{0, 0, 0, 0, 0};  // sum counts[i] * angle_i = 2 pi

  static VertexEquation of(int na, int nb, int ng, int nd, int ne) {
    VertexEquation e;
    e.counts = {na, nb, ng, nd, ne};
    return e;
  }
  static VertexEquation from_type(const VertexType& v) {
    VertexEquation e;
    e.counts = v.n;
    return e;
  }
};

struct AngleSystemSolution {
  // Resolved forms (over pi) per label; beta/gamma may instead be pinned only
  // through their sum.
  std::array<std::optional<AngleForm>, 5> forms;
  std::optional<Rational> bg_sum_q, bg_sum_r;  // beta+gamma = (q + r/f) pi
  bool split_free = false;

  bool resolved(AngleLabel l) const { return forms[static_cast<int>(l)].has_value(); }
  const AngleForm& form(AngleLabel l) const { return *forms[static_cast<int>(l)]; }
};

struct inconsistent_system : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct underdetermined_system : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Lin {  // c0 + c1 * t
  Rational c0, c1;
  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend Lin operator+(Lin a, Lin b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Lin operator-(Lin a, Lin b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  Lin scaled(Rational s) const { return {c0 * s, c1 * s}; }
};

}  // namespace detail

// Solves the base-vertex equations together with the pentagon angle sum
// alpha+beta+gamma+delta+epsilon = (3 + 4/f) pi. When f is given, t = 1/f is
// substituted up front. Degrees of freedom beyond the beta/gamma split raise.
inline AngleSystemSolution solve_angles_from_base(const std::vector<VertexEquation>& equations,
                                                  std::optional<int> f = std::nullopt) {
  using detail::Lin;
  const int kBeta = 1, kGamma = 2;
  std::vector<std::array<Rational, 5>> rows;
  std::vector<Lin> rhs;
  for (const auto& e : equations) {
    std::array<Rational, 5> row;
    for (int i = 0; i < 5; ++i) row[i] = Rational(e.counts[i]);
    rows.push_back(row);
    rhs.push_back(Lin{Rational(2), Rational(0)});
  }
  rows.push_back({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  rhs.push_back(Lin{Rational(3), Rational(4)});
  if (f) {
    for (auto& l : rhs) {
      l.c0 = l.c0 + l.c1 / Rational(*f);
      l.c1 = Rational(0);
    }
  }

  int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < 5 && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    std::swap(rhs[rank], rhs[piv]);
    Rational inv = Rational(1) / rows[rank][col];
    for (int c = 0; c < 5; ++c) rows[rank][c] = rows[rank][c] * inv;
    rhs[rank] = rhs[rank].scaled(inv);
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational factor = rows[r][col];
      for (int c = 0; c < 5; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
      rhs[r] = rhs[r] - rhs[rank].scaled(factor);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < m; ++r)
    if (!rhs[r].is_zero()) throw inconsistent_system("base vertex equations are inconsistent");

  AngleSystemSolution sol;
  // Pure pivot rows resolve their angle outright. A residual row reading
  // exactly beta+gamma pins the split-free sum. A residual binding of any
  // other pair is an under-determination the caller cannot express; rows
  // touching three or more unknowns just leave those angles free.
  for (int r = 0; r < rank; ++r) {
    int col = pivot_col[r];
    std::vector<int> support;
    for (int c = 0; c < 5; ++c)
      if (!rows[r][c].is_zero()) support.push_back(c);
    if (support.size() == 1) {
      AngleForm form = AngleForm::form(rhs[r].c0, rhs[r].c1);
      if (f) form.numeric = form.resolve(*f);
      sol.forms[col] = form;
    } else if (support.size() == 2) {
      if (support[0] == kBeta && support[1] == kGamma && rows[r][kGamma] == Rational(1)) {
        sol.bg_sum_q = rhs[r].c0;
        sol.bg_sum_r = rhs[r].c1;
        sol.split_free = true;
      } else {
        throw underdetermined_system("system pins a pair other than beta+gamma");
      }
    }
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Enumeration.

// All multisets with 3 <= degree <= max_degree whose angle sum is within tol
// of 2 pi and whose edge labels can close up around the vertex (parity lemma
// plus b2/a2 separation); the filter can be disabled to probe its effect.
// Deterministic output order (descending lexicographic).
inline std::vector<VertexType> enumerate_vertex_types(const std::array<double, 5>& angles,
                                                      int max_degree = 6, double tol = 1e-6,
                                                      bool parity_filter = true) {
  std::vector<VertexType> out;
  const double target = 2 * kPi;
  std::array<int, 5> n{};
  auto rec = [&](auto&& self, int idx, int degree, double sum) -> void {
    if (sum > target + tol) return;
    if (idx == 5) {
      if (degree < 3 || degree > max_degree) return;
      if (std::abs(sum - target) > tol) return;
      VertexType v;
      v.n = n;
      if (parity_filter && !v.edge_feasible()) return;
      out.push_back(v);
      return;
    }
    for (int k = 0; degree + k <= max_degree; ++k) {
      n[idx] = k;
      self(self, idx + 1, degree + k, sum + k * angles[idx]);
    }
    n[idx] = 0;
  };
  rec(rec, 0, 0, 0.0);
  std::sort(out.begin(), out.end());
  return out;
}

// Symbolic variant for solutions where only beta+gamma is pinned: enumerates
// multisets with equal beta/gamma exponents using exact rational sums.
inline std::vector<VertexType> enumerate_vertex_types_symbolic(const AngleSystemSolution& sol,
                                                               int f, int max_degree = 6) {
  std::vector<VertexType> out;
  auto over_pi = [&](AngleLabel l) { return sol.form(l).over_pi(f); };
  Rational alpha = over_pi(AngleLabel::Alpha);
  Rational delta = over_pi(AngleLabel::Delta);
  Rational eps = over_pi(AngleLabel::Epsilon);
  Rational bg = sol.split_free ? (*sol.bg_sum_q + *sol.bg_sum_r / Rational(f))
                               : (over_pi(AngleLabel::Beta) + over_pi(AngleLabel::Gamma));
  for (int na = 0; na <= max_degree; ++na)
    for (int nb = 0; na + 2 * nb <= max_degree; ++nb)
      for (int nd = 0; na + 2 * nb + nd <= max_degree; ++nd)
        for (int ne = 0; na + 2 * nb + nd + ne <= max_degree; ++ne) {
          int degree = na + 2 * nb + nd + ne;
          if (degree < 3) continue;
          VertexType v = VertexType::of(na, nb, nb, nd, ne);
          if (!v.edge_feasible()) continue;
          Rational sum = Rational(na) * alpha + Rational(nb) * bg + Rational(nd) * delta +
                         Rational(ne) * eps;
          if (sum == Rational(2)) out.push_back(v);
        }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Admissible f search.

struct VertexPattern {
  int max_alpha = 2;
  bool alpha_only = false;          // pattern is exactly alpha^3
  bool include_delta = false;
  int min_degree = 3, max_degree = 12;
  bool alpha_requires_pair = true;  // alpha present => an ab-pair present

  static VertexPattern family1_extras() { return VertexPattern{}; }
  static VertexPattern family2_extras() {
    VertexPattern p;
    p.max_alpha = 0;
    p.include_delta = true;
    p.min_degree = 4;
    p.max_degree = 5;
    return p;
  }
  static VertexPattern alpha_cubed() {
    VertexPattern p;
    p.alpha_only = true;
    return p;
  }
};

// Enumerates the even f in [16, 2000] for which the pattern family has
// integer solutions under the (q + r/f) pi angle forms, and returns the
// (f, vertex) pairs. The ab-angles always appear as beta*gamma pairs.
inline std::vector<std::pair<int, VertexType>> solve_f_candidates(const AngleSystemSolution& sol,
                                                                  const VertexPattern& pat) {
  std::vector<std::pair<int, VertexType>> out;
  for (int f = 16; f <= 2000; f += 2) {
    if (pat.alpha_only) {
      out.emplace_back(f, VertexType::of(3, 0, 0, 0, 0));
      continue;
    }
    Rational alpha = sol.form(AngleLabel::Alpha).over_pi(f);
    Rational eps = sol.form(AngleLabel::Epsilon).over_pi(f);
    Rational delta = sol.resolved(AngleLabel::Delta) ? sol.form(AngleLabel::Delta).over_pi(f)
                                                     : Rational(0);
    Rational bg = sol.split_free ? (*sol.bg_sum_q + *sol.bg_sum_r / Rational(f))
                                 : (sol.form(AngleLabel::Beta).over_pi(f) +
                                    sol.form(AngleLabel::Gamma).over_pi(f));
    for (int na = 0; na <= pat.max_alpha; ++na)
      for (int nb = 0; na + 2 * nb <= pat.max_degree; ++nb)
        for (int nd = 0; nd <= (pat.include_delta ? pat.max_degree : 0); ++nd)
          for (int ne = 0; na + 2 * nb + nd + ne <= pat.max_degree; ++ne) {
            int degree = na + 2 * nb + nd + ne;
            if (degree < pat.min_degree || degree > pat.max_degree) continue;
            if (na == 3 && nb == 0 && nd == 0 && ne == 0) continue;  // base alpha^3
            if (pat.alpha_requires_pair && na > 0 && nb == 0) continue;
            Rational sum = Rational(na) * alpha + Rational(nb) * bg + Rational(nd) * delta +
                           Rational(ne) * eps;
            if (sum == Rational(2)) out.emplace_back(f, VertexType::of(na, nb, nb, nd, ne));
          }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

// ---------------------------------------------------------------------------

// Balance: in a full census every angle totals f.
inline bool check_balance(const std::map<VertexType, int>& census, int f) {
  std::array<long, 5> totals{0, 0, 0, 0, 0};
  for (const auto& [type, count] : census)
    for (int i = 0; i < 5; ++i) totals[i] += static_cast<long>(count) * type.n[i];
  for (int i = 0; i < 5; ++i)
    if (totals[i] != f) return false;
  return true;
}

// The admissible pairs of distinct degree-3 vertices with a single b-edge.
inline bool degree3_pair_compatible(const VertexType& v1, const VertexType& v2) {
  static const std::array<VertexType, 6> kDomain = {
      VertexType::of(0, 1, 1, 1, 0),  // beta gamma delta
      VertexType::of(0, 1, 1, 0, 1),  // beta gamma epsilon
      VertexType::of(0, 2, 0, 1, 0),  // beta^2 delta
      VertexType::of(0, 2, 0, 0, 1),  // beta^2 epsilon
      VertexType::of(0, 0, 2, 1, 0),  // gamma^2 delta
      VertexType::of(0, 0, 2, 0, 1),  // gamma^2 epsilon
  };
  auto in_domain = [&](const VertexType& v) {
    for (const auto& d : kDomain)
      if (v == d) return true;
    return false;
  };
  if (!in_domain(v1) || !in_domain(v2))
    throw domain_error("degree3_pair_compatible: vertex outside the six single-b types");
  if (v1 == v2) return true;
  auto is_pair = [&](const VertexType& a, const VertexType& b) {
    return (v1 == a && v2 == b) || (v1 == b && v2 == a);
  };
  const VertexType bgd = VertexType::of(0, 1, 1, 1, 0), bge = VertexType::of(0, 1, 1, 0, 1);
  const VertexType b2d = VertexType::of(0, 2, 0, 1, 0), g2e = VertexType::of(0, 0, 2, 0, 1);
  return is_pair(bgd, g2e) || is_pair(bge, b2d) || is_pair(b2d, g2e);
}

inline nlohmann::json to_json(const AvcSet& s) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& v : s.items) items.push_back(v.n);
  return nlohmann::json{{"f", s.f}, {"vertices", items}};
}

}  // namespace pentile
