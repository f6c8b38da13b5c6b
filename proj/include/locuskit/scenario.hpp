#pragma once

// The Euler statement R = k*r for a triangle ABC with A = (0, 0),
// B = (1, 0) fixed and C = (x, y) free, plus numeric triangle metrics for
// labelling curve points by incircle / excircle.

#include <string>

#include "locuskit/errors.hpp"
#include "locuskit/system.hpp"

namespace locuskit {

enum class Formulation { kReduced, kFull };
Formulation parse_formulation(const std::string& s);
std::string to_string(Formulation f);

struct EulerScenario {
  Rational k;
  Formulation formulation = Formulation::kReduced;
};

/// Throws InputError("k must be positive") for k <= 0.
///
/// Side lengths enter only through their squares (unordered geometry), so
/// the locus carries the incircle and all three excircle branches. The
/// inradius is the distance from I = (b*B + c*C)/(a + b + c) to the side AC:
///   b^2 * (r^2 * (a + b + c)^2 - y^2) = 0,
/// the circumradius satisfies 4 R^2 y^2 = a^2 b^2 c^2 and the thesis is
/// R^2 = k^2 r^2. The reduced form eliminates R directly:
///   context [a, b, c, r, x, y], thesis 4 k^2 r^2 y^2 - a^2 b^2 c^2.
/// The full form keeps T (2T = y) and R:
///   context [a, b, c, T, r, R, x, y], thesis q*R - p*r for k = p/q.
PolySystem euler_system(const EulerScenario& s);

struct TriangleMetrics {
  double a, b, c, s, T, r, r_a, r_b, r_c, R;
};

/// Metrics of the triangle A = (0, 0), B = (1, 0), C = (x, y). Throws
/// InputError (E_DEGENERATE) when C coincides with A or B or y = 0.
TriangleMetrics metrics(double x, double y);

enum class Label { kIncircle, kExA, kExB, kExC, kNone };
std::string to_string(Label l);

/// The circle whose radius rho minimizes |R - k*rho| / R, if that minimum
/// is below tol; otherwise kNone.
Label classify_sample(double x, double y, const Rational& k, double tol = 1e-6);

/// Default plotting window [-2, 3] x [-2.5, 2.5].
struct BBox {
  double x0 = -2, y0 = -2.5, x1 = 3, y1 = 2.5;
};

}  // namespace locuskit
