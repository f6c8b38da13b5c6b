#include "locuskit/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <utility>

namespace locuskit {

namespace {

// Double-precision evaluator with the absolute-value scale used for the
// sign decision; near-zero values fall back to exact evaluation.
class Evaluator {
 public:
  explicit Evaluator(const Polynomial& p) : p_(p) {
    for (const auto& t : p.terms()) {
      terms_.push_back({t.coef.to_double(), t.mono.exp[0], t.mono.exp[1]});
      dx_ = std::max<unsigned>(dx_, t.mono.exp[0]);
      dy_ = std::max<unsigned>(dy_, t.mono.exp[1]);
    }
  }

  std::pair<double, double> eval(double x, double y) const {
    std::vector<double> xs(dx_ + 1, 1.0), ys(dy_ + 1, 1.0);
    for (unsigned i = 1; i <= dx_; ++i) xs[i] = xs[i - 1] * x;
    for (unsigned j = 1; j <= dy_; ++j) ys[j] = ys[j - 1] * y;
    double v = 0, s = 0;
    for (const auto& t : terms_) {
      const double m = t.c * xs[t.i] * ys[t.j];
      v += m;
      s += std::abs(m);
    }
    return {v, s};
  }

  double value(double x, double y) const { return eval(x, y).first; }

  /// |p(x, y)| / scale, exact when the double value is in the noise.
  double residual(double x, double y) const {
    const auto [v, s] = eval(x, y);
    if (s == 0) return 0;
    if (std::abs(v) > 1e-9 * s) return std::abs(v) / s;
    const Rational pt[2] = {Rational(mpq_class(x)), Rational(mpq_class(y))};
    return std::abs(p_.eval(std::span<const Rational>(pt, 2)).to_double()) / s;
  }

  int sign(double x, double y) const {
    const auto [v, s] = eval(x, y);
    if (std::abs(v) > 1e-9 * s) return v > 0 ? 1 : -1;
    const Rational pt[2] = {Rational(mpq_class(x)), Rational(mpq_class(y))};
    return p_.eval(std::span<const Rational>(pt, 2)).sign();
  }

 private:
  struct DTerm {
    double c;
    unsigned i, j;
  };
  const Polynomial& p_;
  std::vector<DTerm> terms_;
  unsigned dx_ = 0, dy_ = 0;
};

using Key = std::pair<long long, long long>;

class Tracer {
 public:
  Tracer(const Evaluator& ev, const BBox& box, unsigned max_depth)
      : ev_(ev), box_(box), max_depth_(max_depth),
        qx_((box.x1 - box.x0) * 1e-10), qy_((box.y1 - box.y0) * 1e-10) {}

  void cell(double x0, double y0, double x1, double y1, unsigned depth) {
    const double cx[4] = {x0, x1, x1, x0};
    const double cy[4] = {y0, y0, y1, y1};
    int s[4];
    bool zero = false;
    for (int k = 0; k < 4; ++k) {
      s[k] = ev_.sign(cx[k], cy[k]);
      zero = zero || s[k] == 0;
    }
    const double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
    const bool uniform = s[0] == s[1] && s[1] == s[2] && s[2] == s[3];
    const bool saddle = s[0] == s[2] && s[1] == s[3] && s[0] == -s[1] && s[0] != 0;
    bool split = zero || saddle;
    if (!split && uniform && depth < max_depth_) split = ev_.sign(mx, my) != s[0];
    if (split && depth < max_depth_) {
      cell(x0, y0, mx, my, depth + 1);
      cell(mx, y0, x1, my, depth + 1);
      cell(x0, my, mx, y1, depth + 1);
      cell(mx, my, x1, y1, depth + 1);
      return;
    }
    if (zero) {
      // A zero corner takes the majority sign of the others.
      int sum = 0;
      for (int k = 0; k < 4; ++k) sum += s[k];
      if (sum == 0 && s[0] == 0 && s[1] == 0 && s[2] == 0 && s[3] == 0) return;
      const int fill = sum >= 0 ? 1 : -1;
      for (int k = 0; k < 4; ++k)
        if (s[k] == 0) s[k] = fill;
    }
    // Edge e joins corner e and corner e+1.
    std::size_t v[4];
    bool cross[4];
    int n = 0;
    for (int e = 0; e < 4; ++e) {
      const int f = (e + 1) % 4;
      cross[e] = s[e] != s[f];
      if (cross[e]) {
        v[e] = vertex(root(cx[e], cy[e], cx[f], cy[f]));
        ++n;
      }
    }
    if (n == 2) {
      int a = -1, b = -1;
      for (int e = 0; e < 4; ++e)
        if (cross[e]) (a < 0 ? a : b) = e;
      segment(v[a], v[b]);
    } else if (n == 4) {
      if (ev_.sign(mx, my) == s[0]) {
        segment(v[0], v[1]);  // cuts off corner 1
        segment(v[2], v[3]);  // cuts off corner 3
      } else {
        segment(v[3], v[0]);
        segment(v[1], v[2]);
      }
    }
  }

  // Near a singular point a double root on a cell edge can cut an arc loose.
  // Each loose end inside the box is joined to the nearest vertex of another
  // piece within `reach`, or to the nearest loose end if no other piece is close.
  void bridge(double reach) {
    const std::size_t nv = verts_.size();
    std::vector<std::size_t> deg(nv, 0), par(nv);
    std::iota(par.begin(), par.end(), std::size_t{0});
    const auto find = [&](std::size_t i) {
      while (par[i] != i) i = par[i] = par[par[i]];
      return i;
    };
    for (const auto& [a, b] : segs_) {
      ++deg[a];
      ++deg[b];
      par[find(a)] = find(b);
    }
    const auto inside = [&](const Vertex& v) {
      return v.x > box_.x0 + qx_ && v.x < box_.x1 - qx_ && v.y > box_.y0 + qy_ && v.y < box_.y1 - qy_;
    };
    for (std::size_t d = 0; d < nv; ++d) {
      if (deg[d] != 1 || !inside(verts_[d])) continue;
      std::size_t best = nv, loose = nv;
      double bd = reach, ld = reach;
      for (std::size_t w = 0; w < nv; ++w) {
        if (w == d || deg[w] == 0) continue;
        const double h = std::hypot(verts_[w].x - verts_[d].x, verts_[w].y - verts_[d].y);
        if (find(w) != find(d) && h < bd) bd = h, best = w;
        if (deg[w] == 1 && h < ld) ld = h, loose = w;
      }
      const std::size_t w = best < nv ? best : loose;
      if (w == nv) continue;
      segment(d, w);
      ++deg[d];
      ++deg[w];
      par[find(d)] = find(w);
    }
  }

  std::vector<std::vector<Vertex>> polylines() const {
    const std::size_t nv = verts_.size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t e = 0; e < segs_.size(); ++e) {
      adj[segs_[e].first].push_back(e);
      adj[segs_[e].second].push_back(e);
    }
    std::vector<bool> used(segs_.size(), false);
    std::vector<std::vector<Vertex>> out;
    const auto walk = [&](std::size_t start, std::size_t e) {
      std::vector<Vertex> line{verts_[start]};
      std::size_t at = start;
      while (true) {
        used[e] = true;
        at = segs_[e].first == at ? segs_[e].second : segs_[e].first;
        line.push_back(verts_[at]);
        if (adj[at].size() != 2) break;
        const std::size_t next = adj[at][0] == e ? adj[at][1] : adj[at][0];
        if (used[next]) break;
        e = next;
      }
      out.push_back(std::move(line));
    };
    // Open chains and branches first, then closed loops.
    for (std::size_t i = 0; i < nv; ++i)
      if (adj[i].size() != 2)
        for (std::size_t e : adj[i])
          if (!used[e]) walk(i, e);
    for (std::size_t e = 0; e < segs_.size(); ++e)
      if (!used[e]) walk(segs_[e].first, e);
    return out;
  }

 private:
  // Illinois variant of regula falsi along the edge, bisecting whenever the
  // bracket fails to halve.
  Vertex root(double ax, double ay, double bx, double by) const {
    const auto pt = [&](double t) { return Vertex{ax + t * (bx - ax), ay + t * (by - ay)}; };
    const auto at = [&](double t) {
      const Vertex v = pt(t);
      return ev_.value(v.x, v.y);
    };
    if (ev_.sign(ax, ay) == 0) return {ax, ay};
    if (ev_.sign(bx, by) == 0) return {bx, by};
    double a = 0, b = 1, fa = at(a), fb = at(b);
    if ((fa > 0) == (fb > 0)) return pt(0.5);  // double noise disagrees with the exact signs
    int side = 0;
    for (int it = 0; it < 300; ++it) {
      const double m = a + (b - a) / 2;
      if (!(m > a && m < b)) break;
      const double width = b - a;
      double c = (a * fb - b * fa) / (fb - fa);
      if (!(c > a && c < b)) c = m;
      const double fc = at(c);
      if (fc == 0) return pt(c);
      if ((fc > 0) == (fb > 0)) {
        b = c;
        fb = fc;
        if (side == -1) fa /= 2;
        side = -1;
      } else {
        a = c;
        fa = fc;
        if (side == 1) fb /= 2;
        side = 1;
      }
      if (b - a > width / 2) {
        const double mid = a + (b - a) / 2;
        if (!(mid > a && mid < b)) break;
        const double fm = at(mid);
        if (fm == 0) return pt(mid);
        if ((fm > 0) == (fb > 0)) {
          b = mid;
          fb = fm;
        } else {
          a = mid;
          fa = fm;
        }
        side = 0;
      }
    }
    return pt(std::abs(fa) < std::abs(fb) ? a : b);
  }

  std::size_t vertex(Vertex p) {
    const Key k{std::llround((p.x - box_.x0) / qx_), std::llround((p.y - box_.y0) / qy_)};
    auto [it, fresh] = index_.try_emplace(k, verts_.size());
    if (fresh) verts_.push_back(p);
    return it->second;
  }

  void segment(std::size_t a, std::size_t b) {
    if (a != b) segs_.emplace_back(a, b);
  }

  const Evaluator& ev_;
  BBox box_;
  unsigned max_depth_;
  double qx_, qy_;
  std::map<Key, std::size_t> index_;
  std::vector<Vertex> verts_;
  std::vector<std::pair<std::size_t, std::size_t>> segs_;
};

bool inside(const CriticalPoint& cp, const TraceResult& t) {
  const Rational x = cp.box_x.mid(), y = cp.box_y.mid();
  return t.x0 <= x && x <= t.x1 && t.y0 <= y && y <= t.y1;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

}  // namespace

TraceResult trace_curve(const Polynomial& p, const BBox& box, const TraceOptions& opts) {
  if (p.context()->size() != 2)
    throw InputError("trace: polynomial must be in two variables (x, y)");
  if (p.is_constant()) throw InputError("trace: constant polynomial");
  if (!(box.x0 < box.x1 && box.y0 < box.y1)) throw InputError("trace: empty bbox", "E_BBOX");
  if (opts.resolution < 16) throw InputError("trace: resolution must be >= 16", "E_RESOLUTION");

  TraceResult t;
  t.x0 = Rational(mpq_class(box.x0));
  t.y0 = Rational(mpq_class(box.y0));
  t.x1 = Rational(mpq_class(box.x1));
  t.y1 = Rational(mpq_class(box.y1));
  t.resolution = opts.resolution;

  const Evaluator ev(p);
  Tracer tr(ev, box, opts.max_depth);
  const unsigned n = opts.resolution;
  const auto gx = [&](unsigned i) { return box.x0 + (box.x1 - box.x0) * i / n; };
  const auto gy = [&](unsigned j) { return box.y0 + (box.y1 - box.y0) * j / n; };
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) tr.cell(gx(i), gy(j), gx(i + 1), gy(j + 1), 0);
  tr.bridge(1.5 * std::hypot(gx(1) - gx(0), gy(1) - gy(0)));
  t.polylines = tr.polylines();
  return t;
}

TraceResult trace_with_isolated(const Polynomial& p, const BBox& box,
                                const TraceOptions& opts, const SolveOptions& solve) {
  TraceResult t = trace_curve(p, box, opts);
  try {
    for (auto& cp : acnodes(p, solve)) {
      if (!inside(cp, t)) continue;
      if (cp.kind == PointKind::kUnresolved) {
        t.warnings.push_back("unresolved candidate near (" + std::to_string(cp.x()) + ", " +
                             std::to_string(cp.y()) + ") not drawn");
        continue;
      }
      t.isolated_points.push_back(std::move(cp));
    }
  } catch (const Error& e) {
    t.warnings.push_back(e.code() + ": " + e.what());
  }
  return t;
}

void label_vertices(TraceResult& t, const std::function<Label(double, double)>& label) {
  t.labels.clear();
  for (const auto& line : t.polylines) {
    std::vector<Label> ls;
    ls.reserve(line.size());
    for (const auto& v : line) ls.push_back(label(v.x, v.y));
    t.labels.push_back(std::move(ls));
  }
}

double max_residual(const Polynomial& p, const TraceResult& t) {
  const Evaluator ev(p);
  double worst = 0;
  for (const auto& line : t.polylines)
    for (const auto& v : line) worst = std::max(worst, ev.residual(v.x, v.y));
  return worst;
}

std::string label_color(Label l) {
  switch (l) {
    case Label::kExA: return "#d62728";
    case Label::kExB: return "#2ca02c";
    case Label::kExC: return "#1f77b4";
    case Label::kIncircle: return "#000000";
    case Label::kNone: return "#808080";
  }
  return "#808080";
}

std::string render_svg(const TraceResult& t, const SvgStyle& style) {
  const double x0 = t.x0.to_double(), x1 = t.x1.to_double();
  const double y0 = t.y0.to_double(), y1 = t.y1.to_double();
  const double W = style.width;
  const double H = (x1 > x0 && y1 > y0) ? W * (y1 - y0) / (x1 - x0) : W;
  const auto sx = [&](double x) { return (x - x0) / (x1 - x0) * W; };
  const auto sy = [&](double y) { return H - (y - y0) / (y1 - y0) * H; };

  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(W) +
       "\" height=\"" + fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
  o += "<rect x=\"0\" y=\"0\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
       "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  o += "<g stroke=\"#b0b0b0\" stroke-width=\"0.8\">\n";
  if (x0 < 0 && 0 < x1)
    o += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"0.00\" x2=\"" + fmt(sx(0)) + "\" y2=\"" + fmt(H) + "\"/>\n";
  if (y0 < 0 && 0 < y1)
    o += "<line x1=\"0.00\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(W) + "\" y2=\"" + fmt(sy(0)) + "\"/>\n";
  o += "</g>\n";

  o += "<g fill=\"none\" stroke-width=\"" + fmt(style.stroke_width) +
       "\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
  const bool labelled = t.labels.size() == t.polylines.size() && !t.labels.empty();
  for (std::size_t i = 0; i < t.polylines.size(); ++i) {
    const auto& line = t.polylines[i];
    std::size_t k = 0;
    while (k + 1 < line.size()) {
      // A run of segments whose first vertex carries the same label.
      std::size_t end = k + 1;
      if (labelled)
        while (end + 1 < line.size() && t.labels[i][end] == t.labels[i][k]) ++end;
      else
        end = line.size() - 1;
      const std::string color = labelled ? label_color(t.labels[i][k]) : style.curve_color;
      o += "<path stroke=\"" + color + "\" d=\"M" + fmt(sx(line[k].x)) + " " + fmt(sy(line[k].y));
      for (std::size_t m = k + 1; m <= end; ++m)
        o += " L" + fmt(sx(line[m].x)) + " " + fmt(sy(line[m].y));
      o += "\"/>\n";
      k = end;
    }
  }
  o += "</g>\n";

  o += "<g fill=\"" + style.point_color + "\">\n";
  for (const auto& cp : t.isolated_points)
    o += "<circle cx=\"" + fmt(sx(cp.x())) + "\" cy=\"" + fmt(sy(cp.y())) + "\" r=\"" +
         fmt(style.point_radius) + "\"/>\n";
  o += "</g>\n</svg>\n";
  return o;
}

void write_svg(const TraceResult& t, const std::string& path, const SvgStyle& style) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing", "E_IO");
  out << render_svg(t, style);
  if (!out) throw InputError("write to '" + path + "' failed", "E_IO");
}

std::string to_csv(const TraceResult& t) {
  std::string o = "x,y,label\n";
  char buf[80];
  const bool labelled = t.labels.size() == t.polylines.size() && !t.labels.empty();
  for (std::size_t i = 0; i < t.polylines.size(); ++i)
    for (std::size_t k = 0; k < t.polylines[i].size(); ++k) {
      const auto& v = t.polylines[i][k];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", v.x, v.y);
      o += buf;
      if (labelled) o += to_string(t.labels[i][k]);
      o += "\n";
    }
  for (const auto& cp : t.isolated_points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,isolated\n", cp.x(), cp.y());
    o += buf;
  }
  return o;
}

}  // namespace locuskit
