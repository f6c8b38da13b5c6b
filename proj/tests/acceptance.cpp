// One line per acceptance criterion: PASS, FAIL or DEVIATION (a documented
// divergence from the printed source). Exit status is nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>

#include "locuskit/pipeline.hpp"
#include "property_suites.hpp"
#include "support.hpp"

using namespace locuskit;
using lk_test::P;

namespace {

enum class Verdict { kPass, kFail, kDeviation };

struct Outcome {
  Verdict v;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Verdict::kFail, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char* tag = o.v == Verdict::kPass ? "PASS" : o.v == Verdict::kFail ? "FAIL" : "DEVIATION";
  if (o.v == Verdict::kFail) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", s);
  std::cout << "criterion " << n << " [" << name << "]: " << tag << " (" << time << ") "
            << o.detail << std::endl;
}

Rational coeff(const Polynomial& p, unsigned ex, unsigned ey) {
  for (const auto& t : p.terms())
    if (t.mono.exp[0] == ex && t.mono.exp[1] == ey) return t.coef;
  return Rational(0);
}

ExactPoint rat(long x, long y) { return {QuadExt(Rational(x)), QuadExt(Rational(y))}; }

bool same(const CriticalPoint& c, const ExactPoint& e) {
  return c.exact && c.exact->x == e.x && c.exact->y == e.y;
}

Polynomial euler_locus(const Rational& k, Formulation f) {
  return locus_polynomial(eliminate(euler_system({k, f})));
}

}  // namespace

int main() {
  const Polynomial printed = P(lk_test::slurp(lk_test::data_path("euler_k2_printed.txt")));
  const Polynomial p1 = lk_test::printed_factor(0), p2 = lk_test::printed_factor(1),
                   p3 = lk_test::printed_factor(2);
  Polynomial L = P("1");

  report(1, "locus reproduction", [&]() -> Outcome {
    L = euler_locus(Rational(2), Formulation::kReduced);
    const bool golden = L.str() + "\n" == lk_test::slurp(lk_test::data_path("euler_k2_locus.txt"));
    const bool product = L == p1 * p2 * p3;
    const bool anchors = coeff(L, 0, 18) == -225 && coeff(L, 17, 0) == -504 && coeff(L, 1, 16) == 1256;
    const Polynomial diff = L - printed;
    const bool only_x18 = diff.size() == 1 && diff.lead_mono().exp[0] == 18;
    if (L == printed) return {Verdict::kPass, "byte-exact with the printed polynomial"};
    if (golden && product && anchors && only_x18 && coeff(L, 18, 0) == 63 && coeff(printed, 18, 0) == 1)
      return {Verdict::kDeviation,
              "degree 18, " + std::to_string(L.size()) +
                  " terms, equal to the printed factor product and the golden file; anchors "
                  "y^18=-225, x^17=-504, x*y^16=+1256 match; x^18 is 63 where the printed "
                  "expansion shows 1 (that expansion does not vanish at (1/2, sqrt3/2))"};
    return {Verdict::kFail, "locus differs from the printed factor product"};
  });

  report(2, "factorization reproduction", [&]() -> Outcome {
    const Factorization f = factor_bivariate(L);
    std::vector<std::string> got, want{p1.str(), p2.str(), p3.str()};
    for (const auto& x : f.factors) got.push_back((x.multiplicity == 1 ? "" : "^") + x.poly.str());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got == want) return {Verdict::kPass, "three factors: x^2 + y^2, 7*x^8 + ..., 9*x^8 + ..."};
    return {Verdict::kFail, std::to_string(got.size()) + " factors, not the printed ones"};
  });

  report(3, "membership", [&]() -> Outcome {
    const bool up = lk_test::at(L, lk_test::equilateral(1)).is_zero();
    const bool down = lk_test::at(L, lk_test::equilateral(-1)).is_zero();
    if (up && down) return {Verdict::kPass, "locus(1/2, +-sqrt(3)/2) = 0 exactly"};
    return {Verdict::kFail, "nonzero value at an equilateral point"};
  });

  report(4, "real points of p3", [&]() -> Outcome {
    const auto pts = solve_real_zero_dim(critical_system(p3));
    const std::vector<ExactPoint> want = {rat(0, 0), lk_test::equilateral(-1), lk_test::equilateral(1), rat(1, 0)};
    if (pts.size() != 4) return {Verdict::kFail, std::to_string(pts.size()) + " real points"};
    for (std::size_t i = 0; i < 4; ++i)
      if (!pts[i].on_curve || !same(pts[i], want[i])) return {Verdict::kFail, "point mismatch"};
    const auto iso = acnodes(p3);
    int det0 = 7;
    const PointKind k0 = classify_point(p3, rat(0, 0), &det0);
    const bool kinds = iso.size() == 4 && iso[1].kind == PointKind::kAcnode &&
                       iso[2].kind == PointKind::kAcnode && k0 == PointKind::kDegenerateIsolated &&
                       det0 == 0;
    if (!kinds) return {Verdict::kFail, "classification mismatch"};
    return {Verdict::kPass,
            "{(0,0), (1/2,+-sqrt3/2), (1,0)}; equilateral points acnodes (det H > 0); origin "
            "degenerate_isolated via definite lowest form; (1,0) " + to_string(iso[3].kind)};
  });

  report(5, "acnode demo", [&]() -> Outcome {
    const Polynomial c = P("x^3 - x^2 - y^2");
    const BBox box{-1, -1.5, 2, 1.5};
    TraceOptions o;
    o.resolution = 256;
    const TraceResult plain = trace_curve(c, box, o);
    double nearest = 1e300;
    for (const auto& l : plain.polylines)
      for (const auto& v : l) nearest = std::min(nearest, std::hypot(v.x, v.y));
    const TraceResult fixed = trace_with_isolated(c, box, o);
    const bool has = fixed.isolated_points.size() == 1 && same(fixed.isolated_points[0], rat(0, 0));
    const std::string a = render_svg(fixed), b = render_svg(trace_with_isolated(c, box, o));
    if (nearest > 0.1 && has && a == b)
      return {Verdict::kPass, "tracer alone: nearest vertex to origin " + std::to_string(nearest) +
                                  "; with isolated points: (0,0) present; SVG byte-identical"};
    return {Verdict::kFail, "nearest=" + std::to_string(nearest) + " isolated=" +
                                std::to_string(fixed.isolated_points.size())};
  });

  report(6, "classification", [&]() -> Outcome {
    auto c2 = classify_curve(p2, Rational(2));
    const Rational k19 = Rational::parse("19/10");
    auto c19 = classify_curve(euler_locus(k19, Formulation::kReduced), k19);
    auto c3 = classify_curve(euler_locus(Rational(3), Formulation::kReduced), Rational(3));
    const bool ok2 = c2[Label::kIncircle] == 0 && c2[Label::kExA] > 0 && c2[Label::kExB] > 0 &&
                     c2[Label::kExC] > 0;
    const std::string d = "k=2 on p2: ex_a " + std::to_string(c2[Label::kExA]) + ", ex_b " +
                          std::to_string(c2[Label::kExB]) + ", ex_c " + std::to_string(c2[Label::kExC]) +
                          ", incircle " + std::to_string(c2[Label::kIncircle]) + "; k=19/10 incircle " +
                          std::to_string(c19[Label::kIncircle]) + "; k=3 incircle " +
                          std::to_string(c3[Label::kIncircle]);
    if (ok2 && c19[Label::kIncircle] == 0 && c3[Label::kIncircle] > 0) return {Verdict::kPass, d};
    return {Verdict::kFail, d};
  });

  report(7, "property suites", [&]() -> Outcome {
    const auto g = lk_test::groebner_suite(50, 2024);
    const auto f = lk_test::factorization_suite(100, 7);
    const auto t = lk_test::triangle_suite(100000, 11);
    const std::string d = "groebner " + std::to_string(g.cases) + " systems, factorization " +
                          std::to_string(f.cases) + " polys, triangles " + std::to_string(t.cases);
    if (g.ok && f.ok && t.ok) return {Verdict::kPass, d};
    return {Verdict::kFail, d + ": " + g.detail + f.detail + t.detail};
  });

  report(8, "formulation equivalence", [&]() -> Outcome {
    for (int k : {2, 3})
      if (euler_locus(Rational(k), Formulation::kReduced).str() !=
          euler_locus(Rational(k), Formulation::kFull).str())
        return {Verdict::kFail, "k=" + std::to_string(k) + " differs"};
    return {Verdict::kPass, "reduced == full for k = 2 and k = 3"};
  });

  return failures == 0 ? 0 : 1;
}
