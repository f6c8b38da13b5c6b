#pragma once

// Real solutions of zero-dimensional bivariate systems and singular-point
// classification of plane curves p(x, y) = 0.
//
// Coordinates whose isolating univariate factor has degree <= 2 are exact
// (rational or in Q(sqrt n)); the rest are rational boxes.

#include <optional>
#include <string>
#include <vector>

#include "locuskit/errors.hpp"
#include "locuskit/system.hpp"

namespace locuskit {

enum class PointKind {
  kAcnode,
  kCrunode,
  kDegenerateIsolated,
  kUnresolved,
  kNotOnCurve,
};
std::string to_string(PointKind k);

struct ExactPoint {
  QuadExt x;
  QuadExt y;
};

struct CriticalPoint {
  /// Set when both coordinates are exact.
  std::optional<ExactPoint> exact;
  /// Always set; degenerate for rational coordinates.
  Interval box_x;
  Interval box_y;
  bool on_curve = false;
  /// The solver could not certify this candidate (kept, never dropped).
  bool certified = true;
  PointKind kind = PointKind::kUnresolved;
  /// +1, -1, 0; empty when undecided.
  std::optional<int> hessian_det_sign;

  double x() const;
  double y() const;
  /// {"x": ..., "y": ..., "box": [[lo, hi], [lo, hi]], ...}
  std::string to_json() const;
};

class NotZeroDimensional : public InputError {
 public:
  explicit NotZeroDimensional(const std::string& what)
      : InputError(what, "E_NOT_ZERO_DIM") {}
};

/// {p, dp/dx, dp/dy} over p's two-variable context (first variable is x).
PolySystem critical_system(const Polynomial& p);

struct SolveOptions {
  /// Box width target for non-exact coordinates (default 2^-30).
  Rational max_width = Rational::make(1, Integer(1) << 30);
  /// Refinement limit (bits) before a candidate is reported unresolved.
  unsigned max_bits = 200;
};

/// All real solutions of a zero-dimensional system in two variables, sorted
/// by box midpoint. Points carry on_curve = true (every generator vanishes)
/// or certified = false when the decision failed. Kind stays kUnresolved.
std::vector<CriticalPoint> solve_real_zero_dim(const PolySystem& sys,
                                               const SolveOptions& opts = {});

/// Classify an exact on-curve critical point. Throws InputError
/// (E_NOT_CRITICAL) unless p, p_x, p_y vanish exactly there.
PointKind classify_point(const Polynomial& p, const ExactPoint& point,
                         int* det_sign = nullptr);

bool is_on_curve(const Polynomial& p, const ExactPoint& point);

/// Real critical points of p (zeros of the gradient when that system is
/// zero-dimensional, otherwise of the full critical system), each classified;
/// off-curve ones are marked kNotOnCurve.
std::vector<CriticalPoint> critical_points(const Polynomial& p,
                                           const SolveOptions& opts = {});

/// Isolated real points of p = 0 (squarefree part taken first): certified
/// acnodes and degenerate isolated points, plus unresolved candidates.
std::vector<CriticalPoint> acnodes(const Polynomial& p,
                                   const SolveOptions& opts = {});

/// JSON array of points.
std::string to_json(const std::vector<CriticalPoint>& pts);

/// Rational enclosure of u + v*sqrt(n) of width <= 2^-bits.
Interval enclose(const QuadExt& q, unsigned bits = 64);

}  // namespace locuskit
