#include "locuskit/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "locuskit/sysparse.hpp"

namespace locuskit {

nlohmann::ordered_json Source::echo() const {
  nlohmann::ordered_json j;
  if (euler) {
    j["scenario"] = "euler";
    j["k"] = euler->k.str();
    j["formulation"] = to_string(euler->formulation);
    j["saturate"] = saturate;
  } else if (!system_path.empty()) {
    j["system"] = system_path;
  } else {
    j["poly"] = poly_text;
  }
  return j;
}

PolySystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read system file '" + path + "'", "E_IO");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

Polynomial parse_xy(const std::string& text) {
  static const ContextPtr ctx = make_context({"x", "y"});
  return parse_poly(text, ctx);
}

Derived derive(const Source& src, const EliminationOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Derived d{parse_xy("1"), {}, 0};
  if (!src.poly_text.empty()) {
    d.locus = parse_xy(src.poly_text).normalize_integer_primitive();
  } else {
    EliminationOptions o = opts;
    PolySystem sys;
    if (src.euler) {
      sys = euler_system(*src.euler);
      if (src.saturate) o.saturate_var = "y";
    } else {
      if (src.saturate)
        throw InputError("--saturate applies to the euler scenario only", "E_USAGE");
      sys = load_system(src.system_path);
    }
    const EliminationResult r = eliminate_full(sys, o);
    d.stats = r.basis.stats;
    d.locus = locus_polynomial(r.generators);
  }
  d.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return d;
}

QuadExt parse_coordinate(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return QuadExt(Rational::parse(text));
  const std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
  if (tail.rfind("sqrt", 0) != 0)
    throw InputError("bad coordinate '" + text + "' (expected c:sqrtN)", "E_PARSE");
  Integer n;
  if (tail.size() <= 4 || n.set_str(tail.substr(4), 10) != 0 || n < 0)
    throw InputError("bad radicand in '" + text + "'", "E_PARSE");
  // "u+c" or "u-c" before the colon: split at the last sign that is not
  // the leading one or part of an exponent.
  Rational u(0);
  std::string coef = head;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
      u = Rational::parse(head.substr(0, i));
      coef = head.substr(head[i] == '+' ? i + 1 : i);
      break;
    }
  }
  const Rational v = Rational::parse(coef);
  // Pull square factors out of n so the radicand is square-free.
  Integer sq = 1, rest = n;
  for (Integer f = 2; f * f <= rest; ++f)
    while (rest % (f * f) == 0) {
      rest /= f * f;
      sq *= f;
    }
  if (rest == 0) return QuadExt(u);
  return QuadExt(u, v * Rational(sq), rest);
}

Label safe_label(double x, double y, const Rational& k) {
  try {
    return classify_sample(x, y, k);
  } catch (const InputError&) {
    return Label::kNone;
  }
}

std::map<Label, std::size_t> classify_curve(const Polynomial& p, const Rational& k,
                                            const BBox& box, unsigned resolution,
                                            unsigned seed) {
  BBox b = box;
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    const double hx = (box.x1 - box.x0) / resolution, hy = (box.y1 - box.y0) / resolution;
    const double dx = jitter(rng) * hx, dy = jitter(rng) * hy;
    b = {box.x0 + dx, box.y0 + dy, box.x1 + dx, box.y1 + dy};
  }
  TraceOptions o;
  o.resolution = resolution;
  const TraceResult t = trace_curve(p, b, o);
  std::map<Label, std::size_t> counts;
  for (const auto& line : t.polylines)
    for (const auto& v : line) ++counts[safe_label(v.x, v.y, k)];
  return counts;
}

}  // namespace locuskit
