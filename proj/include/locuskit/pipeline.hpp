#pragma once

// Stage wiring shared by the CLI and the acceptance driver:
// scenario/system -> locus -> factors -> isolated points -> labels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "locuskit/factorize.hpp"
#include "locuskit/groebner.hpp"
#include "locuskit/realsolve.hpp"
#include "locuskit/scenario.hpp"
#include "locuskit/trace.hpp"

namespace locuskit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

/// Where the curve comes from: the Euler scenario, a system file, or a
/// polynomial in x, y given directly.
struct Source {
  std::optional<EulerScenario> euler;
  std::string system_path;
  std::string poly_text;
  bool saturate = false;

  nlohmann::ordered_json echo() const;
};

/// Reads and parses a system file; InputError (E_IO) when unreadable.
PolySystem load_system(const std::string& path);

/// Polynomial in the context [x, y].
Polynomial parse_xy(const std::string& text);

struct Derived {
  Polynomial locus;
  GroebnerStats stats;
  double ms = 0;
};

/// The locus polynomial of the source (integer-primitive, squarefree).
/// Throws EmptyEliminationIdeal, BudgetExhausted, InputError.
Derived derive(const Source& src, const EliminationOptions& opts);

/// "1/2", "-3", "2.5", "1/2:sqrt3" (= sqrt(3)/2), "1+2:sqrt5".
QuadExt parse_coordinate(const std::string& text);

/// Label counts of traced samples of p, labelled against R = k * rho.
/// A nonzero seed jitters the sampling grid deterministically.
std::map<Label, std::size_t> classify_curve(const Polynomial& p, const Rational& k,
                                            const BBox& box = {}, unsigned resolution = 128,
                                            unsigned seed = 0);

/// Label of one sample; degenerate triangles give kNone.
Label safe_label(double x, double y, const Rational& k);

}  // namespace locuskit
