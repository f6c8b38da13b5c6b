#pragma once

// Implicit curve tracing p(x, y) = 0 on a box: sign grid, adaptive quadtree,
// marching squares. Isolated points are invisible to any sign-based tracer,
// so trace_with_isolated adds the certified ones from realsolve.

#include <functional>
#include <string>
#include <vector>

#include "locuskit/realsolve.hpp"
#include "locuskit/scenario.hpp"

namespace locuskit {

struct Vertex {
  double x, y;
};

struct TraceResult {
  std::vector<std::vector<Vertex>> polylines;
  /// Certified isolated points (acnodes, degenerate isolated) inside bbox.
  std::vector<CriticalPoint> isolated_points;
  Rational x0, y0, x1, y1;
  unsigned resolution = 0;
  /// Empty, or parallel to polylines (one label per vertex).
  std::vector<std::vector<Label>> labels;
  std::vector<std::string> warnings;
};

struct TraceOptions {
  unsigned resolution = 256;
  /// Quadtree levels below the base grid.
  unsigned max_depth = 8;
};

/// p must live in a two-variable context (x first). Throws InputError for a
/// constant p, an empty box or resolution < 16.
TraceResult trace_curve(const Polynomial& p, const BBox& box,
                        const TraceOptions& opts = {});

/// trace_curve plus acnodes(p) inside the box. realsolve failures become
/// warnings; the traced curve is still returned.
TraceResult trace_with_isolated(const Polynomial& p, const BBox& box,
                                const TraceOptions& opts = {},
                                const SolveOptions& solve = {});

/// Fills t.labels by calling `label` on every vertex.
void label_vertices(TraceResult& t, const std::function<Label(double, double)>& label);

/// max |p(v)| / sum |c_m| |v^m| over all polyline vertices.
double max_residual(const Polynomial& p, const TraceResult& t);

struct SvgStyle {
  double width = 800;  // height follows the box aspect ratio
  double point_radius = 3;
  double stroke_width = 1.2;
  std::string curve_color = "#333333";
  std::string point_color = "#000000";
};

std::string label_color(Label l);

std::string render_svg(const TraceResult& t, const SvgStyle& style = {});
/// Throws InputError (E_IO) when the file cannot be written.
void write_svg(const TraceResult& t, const std::string& path,
               const SvgStyle& style = {});

/// "x,y,label" header, then one line per vertex (label empty when the
/// result is unlabelled) and one per isolated point (label "isolated").
std::string to_csv(const TraceResult& t);

}  // namespace locuskit
