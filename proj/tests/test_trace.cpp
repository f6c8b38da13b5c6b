#include <cmath>
#include <map>
#include <numeric>
#include <regex>

#include "doctest.h"
#include "support.hpp"

using namespace locuskit;
using lk_test::P;

namespace {
const BBox kCubicBox{-1, -1.5, 2, 1.5};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// polylines sharing a vertex belong to one component
std::size_t components(const TraceResult& t) {
  std::vector<std::size_t> par(t.polylines.size());
  std::iota(par.begin(), par.end(), std::size_t{0});
  const auto find = [&](std::size_t i) {
    while (par[i] != i) i = par[i] = par[par[i]];
    return i;
  };
  std::map<std::pair<double, double>, std::size_t> owner;
  for (std::size_t i = 0; i < t.polylines.size(); ++i)
    for (const auto& v : t.polylines[i]) {
      const auto [it, fresh] = owner.emplace(std::pair{v.x, v.y}, i);
      if (!fresh) par[find(i)] = find(it->second);
    }
  std::size_t n = 0;
  for (std::size_t i = 0; i < par.size(); ++i) n += find(i) == i;
  return n;
}

double nearest(const TraceResult& t, double x, double y) {
  double d = 1e300;
  for (const auto& l : t.polylines)
    for (const auto& v : l) d = std::min(d, std::hypot(v.x - x, v.y - y));
  return d;
}
}  // namespace

TEST_CASE("circle") {
  const TraceResult t = trace_curve(P("x^2 + y^2 - 1"), BBox{-2, -2, 2, 2});
  REQUIRE(t.polylines.size() == 1);
  const auto& l = t.polylines[0];
  CHECK(l.front().x == l.back().x);  // closed
  CHECK(l.front().y == l.back().y);
  double worst = 0;
  for (const auto& v : l) worst = std::max(worst, std::abs(std::hypot(v.x, v.y) - 1));
  CHECK(worst < 1e-3);
  CHECK(max_residual(P("x^2 + y^2 - 1"), t) < 1e-6);
  CHECK(trace_with_isolated(P("x^2 + y^2 - 1"), BBox{-2, -2, 2, 2}).isolated_points.empty());
}

TEST_CASE("tracing alone misses the acnode") {
  const Polynomial c = P("x^3 - x^2 - y^2");
  const TraceResult t = trace_curve(c, kCubicBox);
  REQUIRE(t.polylines.size() == 1);
  CHECK(nearest(t, 0, 0) > 0.5);
  CHECK(nearest(t, 1, 0) < 1e-6);
  CHECK(t.isolated_points.empty());
  const TraceResult w = trace_with_isolated(c, kCubicBox);
  REQUIRE(w.isolated_points.size() == 1);
  CHECK(w.isolated_points[0].exact->x == QuadExt(0));
  CHECK(w.isolated_points[0].exact->y == QuadExt(0));
}

TEST_CASE("no real points") {
  const TraceResult t = trace_with_isolated(P("x^2 + y^2 + 1"), BBox{-2, -2, 2, 2});
  CHECK(t.polylines.empty());
  CHECK(t.isolated_points.empty());
  const std::string svg = render_svg(t);
  CHECK(count(svg, "<path") == 0);
  CHECK(count(svg, "<circle") == 0);
  CHECK(count(svg, "<rect") == 1);
}

TEST_CASE("bad arguments") {
  TraceOptions o;
  o.resolution = 8;
  CHECK_THROWS_AS(trace_curve(P("x - y"), BBox{}, o), InputError);
  CHECK_THROWS_AS(trace_curve(P("3"), BBox{}), InputError);
  CHECK_THROWS_AS(trace_curve(P("x - y"), BBox{1, 0, 0, 1}), InputError);
}

TEST_CASE("svg marks the acnode once at the origin") {
  const TraceResult t = trace_with_isolated(P("x^3 - x^2 - y^2"), kCubicBox);
  const std::string svg = render_svg(t);
  CHECK(count(svg, "<circle") == 1);
  // 800 x 800 canvas over [-1, 2] x [-1.5, 1.5]: origin at (266.67, 400.00)
  CHECK(svg.find("<circle cx=\"266.67\" cy=\"400.00\" r=\"3.00\"/>") != std::string::npos);
  CHECK(svg == render_svg(trace_with_isolated(P("x^3 - x^2 - y^2"), kCubicBox)));
  SvgStyle big;
  big.point_radius = 5;
  CHECK(render_svg(t, big).find("r=\"5.00\"") != std::string::npos);
}

TEST_CASE("euler k = 2 plot keeps the equilateral points") {
  const TraceResult t = trace_with_isolated(lk_test::golden_locus(), BBox{});
  REQUIRE(t.isolated_points.size() == 2);
  CHECK(max_residual(lk_test::golden_locus(), t) < 1e-6);
  CHECK(t.warnings.empty());
  CHECK(nearest(t, 0.5, std::sqrt(3.0) / 2) > 0.05);
}

TEST_CASE("labelled rendering on p2") {
  TraceResult t = trace_curve(lk_test::printed_factor(1), BBox{});
  label_vertices(t, [](double x, double y) { return safe_label(x, y, Rational(2)); });
  const std::string svg = render_svg(t);
  for (Label l : {Label::kExA, Label::kExB, Label::kExC})
    CHECK(count(svg, "stroke=\"" + label_color(l) + "\"") > 0);
  CHECK(count(svg, "stroke=\"" + label_color(Label::kIncircle) + "\"") == 0);
  const std::string csv = to_csv(t);
  CHECK(csv.rfind("x,y,label\n", 0) == 0);
  CHECK(csv.find(",ex_a\n") != std::string::npos);
  CHECK(csv.find(",incircle\n") == std::string::npos);
}

TEST_CASE("refinement keeps components") {
  // smooth curves: the count is exact and must not drop as cells shrink
  const std::vector<std::pair<Polynomial, BBox>> corpus = {
      {P("x^3 - x^2 - y^2"), kCubicBox},
      {P("(x^2 + y^2 - 1)*((x - 3/2)^2 + y^2 - 1/16)"), BBox{-2, -2, 3, 2}},
      {P("((x - 1)^2 + y^2)*((x + 1)^2 + y^2) - 9/10"), BBox{-2, -1, 2, 1}},
  };
  const std::vector<std::size_t> want = {1, 2, 2};
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const auto& [p, box] = corpus[c];
    std::size_t prev = 0;
    for (unsigned res : {64u, 128u, 256u}) {
      TraceOptions o;
      o.resolution = res;
      const std::size_t n = components(trace_curve(p, box, o));
      CAPTURE(c);
      CAPTURE(res);
      CHECK(n >= prev);
      CHECK(n == want[c]);
      prev = n;
    }
  }
}

TEST_CASE("refinement near singular points loses nothing") {
  // p2 has singular points where its ovals touch, so counts may merge; every
  // piece found at one resolution must still be traced at the next.
  const Polynomial p2 = lk_test::printed_factor(1);
  const BBox box{};
  TraceResult prev;
  for (unsigned res : {64u, 128u, 256u}) {
    TraceOptions o;
    o.resolution = res;
    TraceResult t = trace_curve(p2, box, o);
    if (!prev.polylines.empty()) {
      const double cell = std::hypot(box.x1 - box.x0, box.y1 - box.y0) / (res / 2);
      double worst = 0;
      for (const auto& line : prev.polylines)
        for (const auto& v : line) worst = std::max(worst, nearest(t, v.x, v.y));
      CAPTURE(res);
      CHECK(worst < cell);
    }
    prev = std::move(t);
  }
}

TEST_CASE("svg file output") {
  const std::string path = "trace_test_out.svg";
  const TraceResult t = trace_with_isolated(P("x^3 - x^2 - y^2"), kCubicBox);
  write_svg(t, path);
  CHECK(lk_test::slurp(path) == render_svg(t));
  CHECK_THROWS_AS(write_svg(t, "/nonexistent-dir/x.svg"), InputError);
}
