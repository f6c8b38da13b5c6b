#include "locuskit/scenario.hpp"

#include <cmath>
#include <limits>

#include "locuskit/sysparse.hpp"

namespace locuskit {

Formulation parse_formulation(const std::string& s) {
  if (s == "reduced") return Formulation::kReduced;
  if (s == "full") return Formulation::kFull;
  throw InputError("unknown formulation '" + s + "' (expected reduced|full)");
}

std::string to_string(Formulation f) {
  return f == Formulation::kReduced ? "reduced" : "full";
}

PolySystem euler_system(const EulerScenario& s) {
  if (s.k.sign() <= 0) throw InputError("k must be positive", "E_K_NONPOSITIVE");
  const std::string p = s.k.num().get_str();
  const std::string q = s.k.den().get_str();
  const std::string p4 = Integer(4 * s.k.num() * s.k.num()).get_str();
  const std::string q2 = Integer(s.k.den() * s.k.den()).get_str();
  const std::string lengths =
      "a^2 - (x - 1)^2 - y^2\n"
      "b^2 - x^2 - y^2\n"
      "c - 1\n";
  std::string text;
  if (s.formulation == Formulation::kReduced) {
    text = "vars: a b c r x y\neliminate: a b c r\n" + lengths +
           "b^2*(r^2*(a + b + c)^2 - y^2)\n" +
           p4 + "*r^2*y^2 - " + q2 + "*a^2*b^2*c^2\n";
  } else {
    text = "vars: a b c T r R x y\neliminate: a b c T r R\n" + lengths +
           "2*T - y\n"
           "b^2*(r^2*(a + b + c)^2 - 4*T^2)\n"
           "16*R^2*T^2 - a^2*b^2*c^2\n" +
           q + "*R - " + p + "*r\n";
  }
  return parse_system(text);
}

TriangleMetrics metrics(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw InputError("metrics: non-finite coordinates", "E_DEGENERATE");
  if (x == 0 && y == 0) throw InputError("metrics: C coincides with A", "E_DEGENERATE");
  if (x == 1 && y == 0) throw InputError("metrics: C coincides with B", "E_DEGENERATE");
  if (y == 0) throw InputError("metrics: C lies on line AB (y = 0)", "E_DEGENERATE");
  TriangleMetrics m{};
  m.a = std::hypot(x - 1, y);
  m.b = std::hypot(x, y);
  m.c = 1;
  m.s = (m.a + m.b + m.c) / 2;
  m.T = std::abs(y) / 2;
  m.r = m.T / m.s;
  // s - a etc. without cancellation: hypot(d, y) - |d| = y^2 / (hypot(d, y) + |d|)
  const double y2 = y * y;
  const auto gap = [y2](double h, double d) { return y2 / (h + std::abs(d)); };
  const auto lift = [&](double h, double d) { return d >= 0 ? h + d : gap(h, d); };
  const double sa = lift(m.b, x) / (m.a + m.b + 1);
  const double sb = lift(m.a, 1 - x) / (m.a + m.b + 1);
  const double sc = (gap(m.a, 1 - x) + gap(m.b, x) + (std::abs(1 - x) + std::abs(x) - 1)) / 2;
  m.r_a = m.T / sa;
  m.r_b = m.T / sb;
  m.r_c = m.T / sc;
  m.R = m.a * m.b * m.c / (4 * m.T);
  return m;
}

std::string to_string(Label l) {
  switch (l) {
    case Label::kIncircle: return "incircle";
    case Label::kExA: return "ex_a";
    case Label::kExB: return "ex_b";
    case Label::kExC: return "ex_c";
    case Label::kNone: return "none";
  }
  return "none";
}

Label classify_sample(double x, double y, const Rational& k, double tol) {
  const TriangleMetrics m = metrics(x, y);
  const double kd = k.to_double();
  const std::pair<double, Label> cands[] = {
      {m.r, Label::kIncircle}, {m.r_a, Label::kExA},
      {m.r_b, Label::kExB}, {m.r_c, Label::kExC}};
  double best = std::numeric_limits<double>::infinity();
  Label label = Label::kNone;
  for (const auto& [rho, l] : cands) {
    const double rel = std::abs(m.R - kd * rho) / m.R;
    if (rel < best) {
      best = rel;
      label = l;
    }
  }
  return best < tol ? label : Label::kNone;
}

}  // namespace locuskit
