#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "pentile/rational.hpp"

namespace pentile {

using Radians = double;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct infeasible_parameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct lemma_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct retry_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An angle as the linear form (q + r/f)*pi, a resolved numeric value in
// radians, or both. q,r are exact; the numeric mirror is what computations
// consume.
struct AngleForm {
  std::optional<Rational> q;  // coefficient of pi
  std::optional<Rational> r;  // coefficient of pi/f
  std::optional<double> numeric;

  static AngleForm form(Rational q, Rational r) {
    AngleForm a;
    a.q = q;
    a.r = r;
    return a;
  }
  static AngleForm form_with_value(Rational q, Rational r, int f) {
    AngleForm a = form(q, r);
    a.numeric = a.resolve(f);
    return a;
  }
  static AngleForm value(double radians) {
    AngleForm a;
    a.numeric = radians;
    return a;
  }

  bool has_form() const { return q.has_value() && r.has_value(); }

  double resolve(int f) const {
    if (!has_form()) throw domain_error("AngleForm: no symbolic form to resolve");
    return (q->to_double() + r->to_double() / f) * kPi;
  }
  Rational over_pi(int f) const {
    if (!has_form()) throw domain_error("AngleForm: no symbolic form to resolve");
    return *q + *r / Rational(f);
  }
  double value_or_resolve(std::optional<int> f) const {
    if (numeric) return *numeric;
    if (f && has_form()) return resolve(*f);
    throw domain_error("AngleForm: neither numeric nor resolvable");
  }
};

// acos with the spec's clamping window: arguments within `window` of [-1,1]
// are clamped, anything further out is a modeling bug and raises.
inline double acos_clamped(double x, double window = 1e-12) {
  if (x > 1.0) {
    if (x > 1.0 + window) throw domain_error("acos argument " + std::to_string(x) + " out of range");
    x = 1.0;
  } else if (x < -1.0) {
    if (x < -1.0 - window) throw domain_error("acos argument " + std::to_string(x) + " out of range");
    x = -1.0;
  }
  return std::acos(x);
}

}  // namespace pentile
