#include "locuskit/realsolve.hpp"

#include <algorithm>

#include "json.hpp"
#include "locuskit/factorize.hpp"
#include "locuskit/groebner.hpp"

namespace locuskit {

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::kAcnode: return "acnode";
    case PointKind::kCrunode: return "crunode";
    case PointKind::kDegenerateIsolated: return "degenerate_isolated";
    case PointKind::kUnresolved: return "unresolved";
    case PointKind::kNotOnCurve: return "not_on_curve";
  }
  return "unresolved";
}

Interval enclose(const QuadExt& q, unsigned bits) {
  if (q.is_rational()) return Interval::point(q.u());
  // sqrt(n) bracketed by bisection on t^2 - n, then scaled by v.
  const Rational n(q.n());
  const UPoly f({-n, Rational(0), Rational(1)});
  const Rational target =
      Rational::make(1, Integer(1) << bits) / (q.v().abs() + Rational(1));
  RealRoot r{Interval(Rational(1), n)};
  r = refine_root(f, r, target);
  Interval s = Interval::point(q.v()) * r.box;
  return Interval(s.lo + q.u(), s.hi + q.u());
}

namespace {

nlohmann::ordered_json coord_json(const QuadExt& q) {
  if (q.is_rational()) return q.u().str();
  return {{"u", q.u().str()}, {"v", q.v().str()}, {"n", q.n().get_str()}};
}

}  // namespace

double CriticalPoint::x() const {
  return exact ? exact->x.to_double() : box_x.mid().to_double();
}
double CriticalPoint::y() const {
  return exact ? exact->y.to_double() : box_y.mid().to_double();
}

std::string CriticalPoint::to_json() const {
  nlohmann::ordered_json j;
  j["x"] = exact ? coord_json(exact->x) : nlohmann::ordered_json();
  j["y"] = exact ? coord_json(exact->y) : nlohmann::ordered_json();
  j["box"] = nlohmann::ordered_json::array(
      {nlohmann::ordered_json::array({box_x.lo.str(), box_x.hi.str()}),
       nlohmann::ordered_json::array({box_y.lo.str(), box_y.hi.str()})});
  j["approx"] = {x(), y()};
  j["on_curve"] = on_curve;
  j["certified"] = certified;
  j["kind"] = to_string(kind);
  if (hessian_det_sign)
    j["hessian_det_sign"] = *hessian_det_sign > 0 ? "+" : (*hessian_det_sign < 0 ? "-" : "0");
  else
    j["hessian_det_sign"] = nullptr;
  return j.dump();
}

std::string to_json(const std::vector<CriticalPoint>& pts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pts) arr.push_back(nlohmann::ordered_json::parse(p.to_json()));
  return arr.dump();
}

PolySystem critical_system(const Polynomial& p) {
  const auto& ctx = p.context();
  if (ctx->size() != 2)
    throw InputError("critical_system expects a polynomial in two variables",
                     "E_CONTEXT");
  if (p.is_constant())
    throw InputError("critical_system of a constant polynomial", "E_CONSTANT");
  PolySystem sys{ctx, {p, p.derive(std::size_t{0}), p.derive(std::size_t{1})}, {}};
  std::erase_if(sys.generators, [](const Polynomial& g) { return g.is_zero(); });
  return sys;
}

namespace {

// A real root of one coordinate: exact when its factor has degree <= 2.
struct Root1 {
  std::optional<QuadExt> exact;
  Interval box;
  UPoly factor;  // squarefree, vanishes at the root
};

// Real roots of the quadratic a t^2 + b t + c (a != 0).
std::vector<Root1> quadratic_roots(const UPoly& f) {
  const Rational& a = f.coeff(2);
  const Rational& b = f.coeff(1);
  const Rational& c = f.coeff(0);
  const Rational disc = b * b - Rational(4) * a * c;
  std::vector<Root1> out;
  if (disc.sign() < 0) return out;
  // disc = N/D; sqrt(disc) = sqrt(N*D)/D = s*sqrt(m)/D.
  const Integer nd = disc.num() * disc.den();
  Rational root_coef;
  Integer radicand = 0;
  if (nd == 0) {
    root_coef = Rational(0);
  } else {
    auto split = split_square(nd);
    if (!split) return out;  // caller falls back to boxes
    root_coef = Rational::make(split->square_root, disc.den());
    radicand = split->rest;
  }
  const Rational two_a = Rational(2) * a;
  for (int s : {-1, 1}) {
    Rational u = -b / two_a;
    Rational v = Rational(s) * root_coef / two_a;
    QuadExt q = radicand == 1 ? QuadExt(u + v)
                              : (radicand == 0 ? QuadExt(u)
                                               : QuadExt(u, v, radicand));
    out.push_back({q, enclose(q, 80), f});
    if (disc.is_zero()) break;
  }
  return out;
}

std::vector<Root1> univariate_roots(const UPoly& f, const Rational& width) {
  std::vector<Root1> out;
  for (const auto& [g, mult] : factor_upoly(f)) {
    (void)mult;
    if (g.degree() == 1) {
      const Rational r = -g.coeff(0) / g.coeff(1);
      out.push_back({QuadExt(r), Interval::point(r), g});
      continue;
    }
    if (g.degree() == 2) {
      auto q = quadratic_roots(g);
      const Rational disc = g.coeff(1) * g.coeff(1) -
                            Rational(4) * g.coeff(2) * g.coeff(0);
      if (!q.empty() || disc.sign() < 0) {
        out.insert(out.end(), q.begin(), q.end());
        continue;
      }
    }
    for (const auto& r : isolate_real_roots(g, width))
      out.push_back({std::nullopt, r.box, g});
  }
  std::sort(out.begin(), out.end(), [](const Root1& a, const Root1& b) {
    return a.box.lo < b.box.lo;
  });
  return out;
}

void refine(Root1& r, const Rational& width) {
  if (r.exact) {
    if (r.exact->is_rational()) return;
    unsigned bits = 80;
    while (r.box.width() > width) r.box = enclose(*r.exact, bits += 40);
    return;
  }
  r.box = refine_root(r.factor, {r.box}, width).box;
}

// Univariate generator of the elimination ideal for one coordinate.
struct Projection {
  UPoly poly;
  GroebnerBasis basis;  // lex with the other variable first
  ContextPtr basis_context;
};

Projection project(const PolySystem& sys, std::size_t keep) {
  const std::string other = sys.context->name(1 - keep);
  PolySystem s{sys.context, sys.generators, {other}};
  // Lex bases of bivariate critical systems swell badly over Z; the modular
  // path is verified exactly and falls back to the integer engine.
  EliminationOptions eo;
  eo.groebner = GroebnerOptions::from_env();
  eo.groebner.modular = true;
  EliminationResult r = eliminate_full(s, eo);
  Projection out{UPoly(), r.basis, r.basis_context};
  for (const auto& g : r.generators)
    if (!g.is_zero()) {
      out.poly = g.to_upoly(0);
      break;
    }
  if (out.poly.is_zero())
    throw NotZeroDimensional("system is not zero-dimensional: no univariate "
                             "polynomial in " + sys.context->name(keep));
  return out;
}

// For a lex basis (other variable first, kept variable second) of the form
// {h(t), c*s - q(t)} return q/c as a polynomial in t (shape position).
std::optional<UPoly> shape_map(const Projection& pr) {
  const auto& polys = pr.basis.polys;
  std::optional<UPoly> map;
  for (const auto& g : polys) {
    if (!g.involves(0)) continue;
    if (map || g.degree_in(0) != 1) return std::nullopt;
    const auto coeffs = coefficients_in(g, 0);
    if (!coeffs[1].is_constant()) return std::nullopt;
    const Rational c = coeffs[1].is_zero() ? Rational(0) : coeffs[1].lead_coef();
    map = (Rational(-1) / c) * coeffs[0].to_upoly(1);
  }
  return map;
}

enum class Verdict { kYes, kNo, kUnknown };

Verdict exact_check(const PolySystem& sys, const QuadExt& x, const QuadExt& y) {
  try {
    const QuadExt pt[2] = {x, y};
    for (const auto& g : sys.generators)
      if (!g.eval(std::span<const QuadExt>(pt, 2)).is_zero()) return Verdict::kNo;
    return Verdict::kYes;
  } catch (const InputError&) {
    return Verdict::kUnknown;  // radicand mismatch
  }
}

bool excludes(const PolySystem& sys, const Interval& bx, const Interval& by) {
  const Interval pt[2] = {bx, by};
  for (const auto& g : sys.generators)
    if (!g.eval(std::span<const Interval>(pt, 2)).contains_zero()) return true;
  return false;
}

Rational pow2(int e) {
  const Integer m = Integer(1) << static_cast<unsigned>(e >= 0 ? e : -e);
  return e >= 0 ? Rational(m) : Rational::make(1, m);
}

bool boxes_overlap(const CriticalPoint& a, const CriticalPoint& b) {
  return !a.box_x.disjoint(b.box_x) && !a.box_y.disjoint(b.box_y);
}

}  // namespace

std::vector<CriticalPoint> solve_real_zero_dim(const PolySystem& sys_in,
                                               const SolveOptions& opts) {
  sys_in.validate();
  if (sys_in.context->size() != 2 || !sys_in.elim_vars.empty())
    throw InputError("solve_real_zero_dim expects a system in two variables "
                     "without elimination variables", "E_CONTEXT");
  PolySystem sys = sys_in;
  for (const auto& g : sys.generators)
    if (g.is_constant()) return {};

  const Projection px = project(sys, 0);
  const Projection py = project(sys, 1);
  std::vector<Root1> xs = univariate_roots(px.poly, opts.max_width);
  std::vector<Root1> ys = univariate_roots(py.poly, opts.max_width);
  const auto map_y = shape_map(px);  // y = map_y(x)
  const auto map_x = shape_map(py);  // x = map_x(y)

  std::vector<CriticalPoint> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const Root1& rx = xs[i];
      const Root1& ry = ys[j];
      CriticalPoint cp;
      if (rx.exact && ry.exact) {
        const Verdict v = exact_check(sys, *rx.exact, *ry.exact);
        if (v == Verdict::kNo) continue;
        if (v == Verdict::kYes) {
          cp.exact = ExactPoint{*rx.exact, *ry.exact};
          cp.box_x = rx.box;
          cp.box_y = ry.box;
          cp.on_curve = true;
          out.push_back(std::move(cp));
          continue;
        }
      }
      // Interval exclusion under refinement. A surviving pair is certified
      // in shape position: the only solution above a root t of one
      // projection is (t, map(t)), so it is this pair when the enclosure of
      // map(t) meets this partner's box and no other root box.
      std::vector<Root1> X = xs, Y = ys;
      const auto certify = [](const std::optional<UPoly>& map, const Root1& src,
                              std::size_t dst, const std::vector<Root1>& all) {
        if (!map) return false;
        const Interval img = map->eval(src.box);
        for (std::size_t k = 0; k < all.size(); ++k)
          if (img.disjoint(all[k].box) != (k != dst)) return false;
        return true;
      };
      bool excluded = false;
      bool certified = false;
      for (unsigned bits = 30; bits <= opts.max_bits && !excluded && !certified;
           bits *= 2) {
        for (auto& r : X) refine(r, pow2(-static_cast<int>(bits)));
        for (auto& r : Y) refine(r, pow2(-static_cast<int>(bits)));
        excluded = excludes(sys, X[i].box, Y[j].box);
        certified = !excluded && (certify(map_y, X[i], j, Y) ||
                                  certify(map_x, Y[j], i, X));
      }
      if (excluded) continue;
      cp.box_x = X[i].box;
      cp.box_y = Y[j].box;
      if (rx.exact && ry.exact) cp.exact = ExactPoint{*rx.exact, *ry.exact};
      cp.on_curve = certified;
      cp.certified = certified;
      out.push_back(std::move(cp));
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    const Rational ax = a.box_x.mid(), bx = b.box_x.mid();
    if (ax != bx) return ax < bx;
    return a.box_y.mid() < b.box_y.mid();
  });
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (boxes_overlap(out[i], out[i + 1]) && !(out[i].exact && out[i + 1].exact))
      throw InvariantViolation("isolating boxes overlap");
  return out;
}

namespace {

void require_critical(const Polynomial& p, const ExactPoint& pt) {
  const QuadExt v[2] = {pt.x, pt.y};
  std::span<const QuadExt> s(v, 2);
  if (!p.eval(s).is_zero() || !p.derive(std::size_t{0}).eval(s).is_zero() ||
      !p.derive(std::size_t{1}).eval(s).is_zero())
    throw InputError("point is not an exact on-curve critical point",
                     "E_NOT_CRITICAL");
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

// Conjugate-norm polynomial of a Q(sqrt n)-coefficient polynomial: real
// roots of f are among the real roots of f * conj(f), which has rational
// coefficients.
UPoly norm_poly(const std::vector<QuadExt>& f) {
  std::vector<Rational> u, v;
  Integer n = 0;
  for (const auto& c : f) {
    u.push_back(c.u());
    v.push_back(c.v());
    if (!c.is_rational()) n = c.n();
  }
  const UPoly U(u), V(v);
  if (n == 0) return U;
  return U * U - Rational(n) * (V * V);
}

// No real zero of the binary form with coefficients c[i] of u^i v^(d-i).
bool definite(const std::vector<QuadExt>& c) {
  const std::size_t d = c.size() - 1;
  if (d % 2 != 0 || c[d].is_zero() || c[0].is_zero()) return false;
  // phi(1, t): coefficient of t^j is c[d-j]; phi(t, 1): coefficient of t^i is c[i].
  std::vector<QuadExt> a(c.rbegin(), c.rend());
  const UPoly f1 = norm_poly(a);
  const UPoly f2 = norm_poly(c);
  const Rational w = Rational::make(1, 1024);
  return isolate_real_roots(f1, w).empty() && isolate_real_roots(f2, w).empty();
}

// Coefficients c[i] of u^i v^(d-i) in the lowest nonvanishing homogeneous
// form of p translated to the point:
// phi_d(u, v) = sum over i + j = d of d^(i+j)p/dx^i dy^j (P) / (i! j!) u^i v^j.
std::vector<QuadExt> lowest_form(const Polynomial& p, const ExactPoint& pt) {
  const QuadExt v[2] = {pt.x, pt.y};
  std::span<const QuadExt> s(v, 2);
  const unsigned deg = p.total_degree();
  std::vector<Polynomial> dx_pow{p};  // d^i p / dx^i
  for (unsigned i = 1; i <= deg; ++i) dx_pow.push_back(dx_pow.back().derive(std::size_t{0}));
  for (unsigned d = 1; d <= deg; ++d) {
    std::vector<QuadExt> c(d + 1);
    bool any = false;
    for (unsigned i = 0; i <= d; ++i) {
      Polynomial q = dx_pow[i];
      for (unsigned j = 0; j < d - i; ++j) q = q.derive(std::size_t{1});
      c[i] = q.eval(s) * QuadExt(Rational(1) / (factorial(i) * factorial(d - i)));
      any = any || !c[i].is_zero();
    }
    if (any) return c;
  }
  return {};
}

// The form takes both signs: then p does too on every small circle around
// the point, so a real branch passes through it.
bool indefinite(const std::vector<QuadExt>& c) {
  const std::size_t d = c.size() - 1;
  std::vector<QuadExt> a(c.rbegin(), c.rend());  // phi(1, t) ascending in t
  const UPoly n = norm_poly(a);
  std::vector<Rational> probes{Rational(0)};
  if (n.degree() > 0) {
    const auto roots = isolate_real_roots(n, Rational::make(1, 1 << 20));
    Rational prev = -root_bound(n);
    probes.push_back(prev);
    for (const auto& r : roots) {
      probes.push_back((prev + r.box.lo) / Rational(2));
      prev = r.box.hi;
    }
    probes.push_back(prev + Rational(1));
  }
  bool pos = false, neg = false;
  const auto note = [&](int sg) {
    pos = pos || sg > 0;
    neg = neg || sg < 0;
  };
  for (const auto& t : probes) {
    QuadExt acc;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * QuadExt(t) + a[i];
    note(acc.sign());
  }
  note(c[d].sign());  // direction (1, 0)... phi(1, 0) = c[d]
  note(c[0].sign());  // direction (0, 1)
  return pos && neg;
}

}  // namespace

bool is_on_curve(const Polynomial& p, const ExactPoint& pt) {
  const QuadExt v[2] = {pt.x, pt.y};
  return p.eval(std::span<const QuadExt>(v, 2)).is_zero();
}

PointKind classify_point(const Polynomial& p, const ExactPoint& pt,
                         int* det_sign) {
  if (p.context()->size() != 2)
    throw InputError("classify_point expects two variables", "E_CONTEXT");
  require_critical(p, pt);
  const QuadExt v[2] = {pt.x, pt.y};
  std::span<const QuadExt> s(v, 2);
  const Polynomial px = p.derive(std::size_t{0});
  const Polynomial py = p.derive(std::size_t{1});
  const QuadExt hxx = px.derive(std::size_t{0}).eval(s);
  const QuadExt hyy = py.derive(std::size_t{1}).eval(s);
  const QuadExt hxy = px.derive(std::size_t{1}).eval(s);
  const int sign = (hxx * hyy - hxy * hxy).sign();
  if (det_sign) *det_sign = sign;
  if (sign > 0) return PointKind::kAcnode;
  if (sign < 0) return PointKind::kCrunode;

  const auto c = lowest_form(p, pt);
  if (c.empty()) return PointKind::kUnresolved;
  return definite(c) ? PointKind::kDegenerateIsolated : PointKind::kUnresolved;
}

namespace {

void classify_all(const Polynomial& p, std::vector<CriticalPoint>& pts) {
  const Polynomial px = p.derive(std::size_t{0});
  const Polynomial py = p.derive(std::size_t{1});
  const Polynomial hdet = px.derive(std::size_t{0}) * py.derive(std::size_t{1}) -
                          px.derive(std::size_t{1}).pow(2);
  for (auto& cp : pts) {
    if (!cp.on_curve) {
      cp.kind = PointKind::kNotOnCurve;
      continue;
    }
    if (cp.exact) {
      try {
        int sign = 0;
        cp.kind = classify_point(p, *cp.exact, &sign);
        cp.hessian_det_sign = sign;
        continue;
      } catch (const InputError&) {
        // radicand mismatch between coordinates: fall through to boxes
      }
    }
    if (!cp.certified) {
      cp.kind = PointKind::kUnresolved;
      continue;
    }
    const Interval b[2] = {cp.box_x, cp.box_y};
    const Interval h = hdet.eval(std::span<const Interval>(b, 2));
    if (h.lo.sign() > 0) {
      cp.hessian_det_sign = 1;
      cp.kind = PointKind::kAcnode;
    } else if (h.hi.sign() < 0) {
      cp.hessian_det_sign = -1;
      cp.kind = PointKind::kCrunode;
    } else {
      cp.kind = PointKind::kUnresolved;
    }
  }
}

}  // namespace

std::vector<CriticalPoint> critical_points(const Polynomial& p,
                                           const SolveOptions& opts) {
  const PolySystem full = critical_system(p);
  std::vector<CriticalPoint> on = solve_real_zero_dim(full, opts);
  std::vector<CriticalPoint> pts = on;
  PolySystem grad{full.context, {}, {}};
  for (std::size_t i = 1; i < full.generators.size(); ++i)
    grad.generators.push_back(full.generators[i]);
  if (grad.generators.size() == 2) {
    try {
      pts = solve_real_zero_dim(grad, opts);
      for (auto& cp : pts) {
        if (cp.exact) {
          try {
            cp.on_curve = is_on_curve(p, *cp.exact);
            continue;
          } catch (const InputError&) {
          }
        }
        const Interval b[2] = {cp.box_x, cp.box_y};
        if (!p.eval(std::span<const Interval>(b, 2)).contains_zero()) {
          cp.on_curve = false;
          continue;
        }
        // On the curve iff it is one of the certified full-system points.
        bool matched = false;
        for (const auto& o : on)
          if (boxes_overlap(o, cp)) matched = true;
        cp.on_curve = matched;
        if (!matched) cp.certified = false;
      }
    } catch (const NotZeroDimensional&) {
      pts = on;
    }
  }
  classify_all(p, pts);
  return pts;
}

namespace {

enum class Membership { kOn, kOff, kUnknown };

Membership on_factor(const Polynomial& f, const CriticalPoint& cp) {
  if (cp.exact) {
    try {
      return is_on_curve(f, *cp.exact) ? Membership::kOn : Membership::kOff;
    } catch (const InputError&) {
    }
  }
  const Interval b[2] = {cp.box_x, cp.box_y};
  if (!f.eval(std::span<const Interval>(b, 2)).contains_zero()) return Membership::kOff;
  return Membership::kUnknown;
}

bool same_point(const CriticalPoint& a, const CriticalPoint& b) {
  if (a.exact && b.exact) return a.exact->x == b.exact->x && a.exact->y == b.exact->y;
  return boxes_overlap(a, b);
}

}  // namespace

std::vector<CriticalPoint> acnodes(const Polynomial& p_in,
                                   const SolveOptions& opts) {
  const Polynomial p = squarefree_part(p_in);
  if (p.is_constant()) return {};
  // Work factor by factor: a point of the union is isolated iff it is an
  // isolated point of every factor through it.
  std::vector<Polynomial> factors;
  for (const auto& f : factor_bivariate(p).factors) factors.push_back(f.poly);
  std::vector<std::vector<CriticalPoint>> per;
  for (const auto& f : factors) {
    if (f.is_constant()) {
      per.emplace_back();
      continue;
    }
    std::vector<CriticalPoint> pts = solve_real_zero_dim(critical_system(f), opts);
    classify_all(f, pts);
    per.push_back(std::move(pts));
  }
  const auto branch_at = [&](const Polynomial& f, const CriticalPoint& cp) {
    if (!cp.exact) return false;
    try {
      const auto form = lowest_form(f, *cp.exact);
      return !form.empty() && indefinite(form);
    } catch (const InputError&) {
      return false;
    }
  };
  std::vector<CriticalPoint> out, seen;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& cp : per[i]) {
      if (cp.kind != PointKind::kAcnode && cp.kind != PointKind::kDegenerateIsolated &&
          cp.kind != PointKind::kUnresolved)
        continue;
      bool duplicate = false;
      for (const auto& o : seen)
        if (same_point(o, cp)) duplicate = true;
      if (duplicate) continue;
      seen.push_back(cp);
      CriticalPoint merged = cp;
      bool drop = cp.kind == PointKind::kUnresolved && branch_at(factors[i], cp);
      for (std::size_t j = 0; j < factors.size() && !drop; ++j) {
        if (j == i) continue;
        const Membership m = on_factor(factors[j], cp);
        if (m == Membership::kOff) continue;
        if (m == Membership::kUnknown) {
          merged.kind = PointKind::kUnresolved;
          continue;
        }
        // On factor j: isolated there too, or a genuine branch passes.
        const CriticalPoint* twin = nullptr;
        for (const auto& q : per[j])
          if (same_point(q, cp)) twin = &q;
        bool branch = twin == nullptr || twin->kind == PointKind::kCrunode;
        if (!branch && twin->kind == PointKind::kUnresolved)
          branch = branch_at(factors[j], cp);
        if (branch) {
          drop = true;
        } else if (twin->kind == PointKind::kUnresolved) {
          merged.kind = PointKind::kUnresolved;
        } else if (merged.kind != PointKind::kUnresolved) {
          merged.kind = PointKind::kDegenerateIsolated;  // several factors
          merged.hessian_det_sign = 0;
        }
      }
      if (!drop) out.push_back(std::move(merged));
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    const Rational ax = a.box_x.mid(), bx = b.box_x.mid();
    if (ax != bx) return ax < bx;
    return a.box_y.mid() < b.box_y.mid();
  });
  return out;
}

}  // namespace locuskit
