// locuskit command line: derive, analyze, plot.
//
// Exit status: 0 success, 1 usage or input error, 2 resource budget,
// 3 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "locuskit/pipeline.hpp"
#include "locuskit/sysparse.hpp"

using namespace locuskit;
using json = nlohmann::ordered_json;

namespace {

struct Args {
  std::string scenario;
  std::string k;
  std::string formulation = "reduced";
  bool saturate = false;
  std::string system;
  std::string poly;
  std::string out;
  std::string format = "text";
  bool lex = false;
  bool modular = false;
  unsigned seed = 0;
  std::vector<std::string> check_points;
  bool classify = false;
  std::vector<double> bbox;
  unsigned resolution = 256;
  std::string csv;
};

int exit_code(const Error& e) {
  if (dynamic_cast<const BudgetExhausted*>(&e)) return 2;
  if (dynamic_cast<const InvariantViolation*>(&e)) return 3;
  return 1;
}

void report_error(const std::string& code, const std::string& what) {
  std::cerr << "locuskit: error [" << code << "]: " << what << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Source make_source(const Args& a, bool allow_poly) {
  const int given = !a.scenario.empty() + !a.system.empty() + !a.poly.empty();
  if (given != 1)
    throw InputError(allow_poly ? "give exactly one of --scenario, --system, --poly"
                                : "give exactly one of --scenario, --system",
                     "E_USAGE");
  if (!a.poly.empty() && !allow_poly) throw InputError("--poly is not accepted here", "E_USAGE");
  Source s;
  s.saturate = a.saturate;
  if (!a.scenario.empty()) {
    if (a.scenario != "euler") throw InputError("unknown scenario '" + a.scenario + "'", "E_USAGE");
    if (a.k.empty()) throw InputError("--k is required with --scenario euler", "E_USAGE");
    s.euler = EulerScenario{Rational::parse(a.k), parse_formulation(a.formulation)};
  } else if (!a.system.empty()) {
    s.system_path = a.system;
  } else {
    s.poly_text = a.poly;
  }
  return s;
}

EliminationOptions elim_options(const Args& a) {
  EliminationOptions o;
  o.groebner = GroebnerOptions::from_env();
  o.groebner.modular = a.modular;
  o.use_lex = a.lex;
  return o;
}

BBox make_bbox(const Args& a) {
  if (a.bbox.empty()) return BBox{};
  return BBox{a.bbox[0], a.bbox[1], a.bbox[2], a.bbox[3]};
}

json base_report(const std::string& command, const Source& src) {
  json r;
  r["schema"] = kReportSchema;
  r["tool"] = "locuskit";
  r["version"] = kVersion;
  r["command"] = command;
  r["input"] = src.echo();
  return r;
}

void emit(const json& report, const std::string& text, const Args& a, bool out_is_report) {
  if (a.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  if (out_is_report && !a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw InputError("cannot open '" + a.out + "' for writing", "E_IO");
    f << report.dump(2) << "\n";
  }
}

json groebner_json(const GroebnerStats& s) {
  return json{{"pairs_reduced", s.pairs_reduced},
              {"zero_reductions", s.zero_reductions},
              {"pairs_skipped", s.pairs_skipped}};
}

int cmd_derive(const Args& a) {
  const Source src = make_source(a, false);
  json r = base_report("derive", src);
  const Derived d = derive(src, elim_options(a));
  r["locus"] = d.locus.str();
  r["degree"] = d.locus.total_degree();
  r["terms"] = d.locus.size();
  r["groebner"] = groebner_json(d.stats);
  r["timings_ms"] = json{{"derive", d.ms}};
  emit(r, d.locus.str() + "\n", a, true);
  return 0;
}

json counts_json(const std::map<Label, std::size_t>& c) {
  json j = json::object();
  for (Label l : {Label::kIncircle, Label::kExA, Label::kExB, Label::kExC, Label::kNone}) {
    const auto it = c.find(l);
    j[to_string(l)] = it == c.end() ? 0 : it->second;
  }
  return j;
}

int cmd_analyze(const Args& a) {
  const Source src = make_source(a, true);
  json r = base_report("analyze", src);
  json timings = json::object();
  json errors = json::array();
  std::string text;
  int code = 0;
  const auto fail = [&](const std::string& stage, const Error& e) {
    errors.push_back(json{{"stage", stage}, {"code", e.code()}, {"message", e.what()}});
    report_error(e.code(), std::string(stage) + ": " + e.what());
    if (code == 0) code = exit_code(e);
  };

  std::optional<Polynomial> locus;
  try {
    const Derived d = derive(src, elim_options(a));
    locus = d.locus;
    r["locus"] = d.locus.str();
    r["degree"] = d.locus.total_degree();
    r["groebner"] = groebner_json(d.stats);
    timings["derive"] = d.ms;
    text += "locus (degree " + std::to_string(d.locus.total_degree()) + "): " + d.locus.str() + "\n";
  } catch (const EmptyEliminationIdeal& e) {
    r["locus"] = nullptr;
    r["status"] = e.kind() == DegenerateLocus::kEmpty ? "empty locus" : "whole plane";
    text += std::string("locus: ") + (e.kind() == DegenerateLocus::kEmpty ? "empty locus" : "whole plane") + "\n";
    fail("derive", e);
  } catch (const Error& e) {
    r["locus"] = nullptr;
    fail("derive", e);
  }

  if (locus && locus->context()->size() != 2) {
    fail("factor", InputError("analysis needs a locus in two variables", "E_NOT_PLANAR"));
    locus.reset();
  }

  std::vector<Polynomial> factors;
  if (locus) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      BivariateOptions bo;
      bo.seed = a.seed;
      const Factorization f = factor_bivariate(*locus, bo);
      json fs = json::array();
      text += "factors: " + std::to_string(f.factors.size()) + "\n";
      for (const auto& fac : f.factors) {
        factors.push_back(fac.poly);
        fs.push_back(json{{"poly", fac.poly.str()},
                          {"multiplicity", fac.multiplicity},
                          {"degree", fac.poly.total_degree()}});
        text += "  [" + std::to_string(fac.poly.total_degree()) + "] " + fac.poly.str() + "\n";
      }
      r["factorization"] = json{{"content", f.content.str()}, {"factors", fs}};
    } catch (const Error& e) {
      fail("factor", e);
    }
    timings["factor"] = ms_since(t0);
  }

  if (locus) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      json per = json::array();
      for (const auto& f : factors)
        per.push_back(json::parse(to_json(acnodes(f))));
      if (!factors.empty()) r["factor_isolated_points"] = per;
      const auto iso = acnodes(*locus);
      r["isolated_points"] = json::parse(to_json(iso));
      text += "isolated points: " + std::to_string(iso.size()) + "\n";
      for (const auto& p : iso) {
        const std::string xs = p.exact ? p.exact->x.str() : std::to_string(p.x());
        const std::string ys = p.exact ? p.exact->y.str() : std::to_string(p.y());
        text += "  (" + xs + ", " + ys + ") " + to_string(p.kind) + "\n";
      }
    } catch (const Error& e) {
      fail("acnodes", e);
    }
    timings["acnodes"] = ms_since(t0);
  }

  if (locus && !a.check_points.empty()) {
    json cps = json::array();
    bool all = true;
    try {
      for (std::size_t i = 0; i + 1 < a.check_points.size(); i += 2) {
        const ExactPoint pt{parse_coordinate(a.check_points[i]), parse_coordinate(a.check_points[i + 1])};
        const QuadExt v[2] = {pt.x, pt.y};
        const QuadExt val = locus->eval(std::span<const QuadExt>(v, 2));
        json on = json::array();
        for (std::size_t j = 0; j < factors.size(); ++j)
          if (factors[j].eval(std::span<const QuadExt>(v, 2)).is_zero()) on.push_back(j);
        cps.push_back(json{{"x", pt.x.str()}, {"y", pt.y.str()}, {"value", val.str()},
                           {"on_locus", val.is_zero()}, {"factors", on}});
        all = all && val.is_zero();
        text += "check (" + pt.x.str() + ", " + pt.y.str() + "): value " + val.str() + "\n";
      }
      r["check_points"] = cps;
      r["membership"] = all;
    } catch (const Error& e) {
      fail("check-point", e);
    }
  }

  if (src.euler && !factors.empty()) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      json per = json::array();
      std::map<Label, std::size_t> total;
      for (const auto& f : factors) {
        const auto c = classify_curve(f, src.euler->k, make_bbox(a), 128, a.seed);
        for (const auto& [l, n] : c) total[l] += n;
        per.push_back(counts_json(c));
      }
      r["classification"] = json{{"per_factor", per}, {"total", counts_json(total)}};
      text += "classification: " + counts_json(total).dump() + "\n";
    } catch (const Error& e) {
      fail("classify", e);
    }
    timings["classify"] = ms_since(t0);
  }

  r["timings_ms"] = timings;
  r["errors"] = errors;
  if (!r.contains("status")) r["status"] = code == 0 ? "ok" : "error";
  emit(r, text, a, true);
  return code;
}

int cmd_plot(const Args& a) {
  const Source src = make_source(a, true);
  if (a.classify && !src.euler) throw InputError("--classify needs --scenario euler", "E_USAGE");
  json r = base_report("plot", src);
  const Derived d = derive(src, elim_options(a));
  TraceOptions to;
  to.resolution = a.resolution;
  const auto t0 = std::chrono::steady_clock::now();
  TraceResult t = trace_with_isolated(d.locus, make_bbox(a), to);
  if (a.classify) {
    const Rational k = src.euler->k;
    label_vertices(t, [&](double x, double y) { return safe_label(x, y, k); });
  }
  const double trace_ms = ms_since(t0);
  const std::string out = a.out.empty() ? "locus.svg" : a.out;
  write_svg(t, out);
  if (!a.csv.empty()) {
    std::ofstream f(a.csv, std::ios::binary);
    if (!f) throw InputError("cannot open '" + a.csv + "' for writing", "E_IO");
    f << to_csv(t);
  }
  for (const auto& w : t.warnings) std::cerr << "locuskit: warning: " << w << "\n";

  std::size_t nv = 0;
  for (const auto& l : t.polylines) nv += l.size();
  r["locus"] = d.locus.str();
  r["svg"] = out;
  r["polylines"] = t.polylines.size();
  r["vertices"] = nv;
  r["isolated_points"] = json::parse(to_json(t.isolated_points));
  r["warnings"] = t.warnings;
  r["timings_ms"] = json{{"derive", d.ms}, {"trace", trace_ms}};
  emit(r,
       "wrote " + out + ": " + std::to_string(t.polylines.size()) + " polylines, " +
           std::to_string(t.isolated_points.size()) + " isolated points\n",
       a, false);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locuskit: implicit locus equations by elimination"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Args a;

  const auto source_opts = [&](CLI::App* s) {
    s->add_option("--scenario", a.scenario, "built-in scenario (euler)");
    s->add_option("--k", a.k, "ratio k in R = k*r (\"2\", \"19/10\", \"2.1\")");
    s->add_option("--formulation", a.formulation, "reduced|full")
        ->check(CLI::IsMember({"reduced", "full"}));
    s->add_flag("--saturate", a.saturate, "adjoin t*y - 1 (drops y = 0 components)");
    s->add_option("--system", a.system, "system file");
    s->add_option("--out", a.out, "output file");
    s->add_option("--format", a.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    s->add_flag("--lex", a.lex, "pure lex elimination (slow)");
    s->add_flag("--modular", a.modular, "modular Groebner path");
    s->add_option("--seed", a.seed, "seed for lucky values and sampling");
  };

  auto* derive_cmd = app.add_subcommand("derive", "print the locus polynomial");
  source_opts(derive_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "factor, find isolated points, classify");
  source_opts(analyze_cmd);
  analyze_cmd->add_option("--poly", a.poly, "polynomial in x, y");
  analyze_cmd->add_option("--check-point", a.check_points, "x y, each rational or c:sqrtN")
      ->expected(2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  analyze_cmd->add_option("--bbox", a.bbox, "x0 y0 x1 y1 for sampling")->expected(4);

  auto* plot_cmd = app.add_subcommand("plot", "trace the curve to SVG");
  source_opts(plot_cmd);
  plot_cmd->add_option("--poly", a.poly, "polynomial in x, y");
  plot_cmd->add_flag("--classify", a.classify, "colour by incircle/excircle label");
  plot_cmd->add_option("--bbox", a.bbox, "x0 y0 x1 y1")->expected(4);
  plot_cmd->add_option("--resolution", a.resolution, "base grid cells per axis")
      ->check(CLI::Range(16u, 4096u));
  plot_cmd->add_option("--csv", a.csv, "vertex dump x,y,label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("E_USAGE", e.what());
    return 1;
  }

  try {
    if (!a.bbox.empty() && !(a.bbox[0] < a.bbox[2] && a.bbox[1] < a.bbox[3]))
      throw InputError("--bbox needs x0 < x1 and y0 < y1", "E_BBOX");
    if (*derive_cmd) return cmd_derive(a);
    if (*analyze_cmd) return cmd_analyze(a);
    return cmd_plot(a);
  } catch (const Error& e) {
    report_error(e.code(), e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    report_error("E_INTERNAL", e.what());
    return 3;
  }
}
