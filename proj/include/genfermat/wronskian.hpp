#pragma once

// Determinant-based decision of classicality and Frobenius classicality,
// independent of the closed-form conditions used by the classifier.
//
// For the basis (1, x, y) of lines resp. (1, x, y, x^2, xy, y^2) of conics,
// the geometric test builds the (M+1)x(M+1) matrix of Hasse derivatives
// D^(0..M) and the Frobenius test the matrix [phi^q; D^(0..M-1)]; the curve
// is (Frobenius) classical iff the determinant is nonzero in the function
// field.
//
// On both curve families y'/y is a rational function of x alone, so
// D^(k)(x^a y^w) = R(x) y^w with R given by a first-order recurrence.  Every
// matrix entry is therefore a univariate polynomial times a pure power of y
// (after clearing row denominators), all minors over the derivative rows are
// univariate, and only the q-power row mixes y-weights; the determinant is
// assembled as a short y-graded sum and tested for zero componentwise.

#include <array>
#include <cstdint>
#include <optional>

#include "genfermat/classifier.hpp"
#include "genfermat/curve.hpp"

namespace genfermat {

struct BasisSystem {
  System system;
  std::vector<Mono> monomials;  // (deg_x, deg_y) generators
  unsigned M;                   // 2 for lines, 5 for conics
};

BasisSystem basis_for(System system);

/// det(D^(i) phi_j), i,j = 0..M, is nonzero.  Requires p > M.
bool is_classical_det(const CurveSpec& spec, System system);

/// det[phi^q; D^(0..M-1) phi] is nonzero.  Requires p > M.
bool is_frobenius_classical_det(const CurveSpec& spec, System system);

struct DetVerdicts {
  bool classical = false;
  bool frobenius_classical = false;
};

/// Both determinant tests sharing one set of derivative rows and minors.
DetVerdicts wronskian_verdicts(const CurveSpec& spec, System system);

/// Coefficients for (X^2, Y^2, Z^2, XY, XZ, YZ); not all zero.
struct Conic {
  std::array<Fel, 6> coef{};
};

Fel conic_eval(const Field& F, const Conic& conic, Fel X, Fel Y, Fel Z);

/// Osculating conic at the affine point (u, v), u v != 0, from the
/// case-specific table.  Throws CaseMismatch / AxisPoint / PointNotOnCurve.
Conic osculating_conic(const CurveSpec& spec, CaseLabel label, Fel u, Fel v);

struct IncidenceReport {
  std::uint64_t hits = 0;
  std::uint64_t points = 0;
  bool all() const { return points > 0 && hits == points; }
};

/// Evaluates the osculating conic at the q-power Frobenius image of every
/// affine rational point with u v != 0 and reports the hit fraction.
IncidenceReport frobenius_incidence_scan(const CurveSpec& spec, CaseLabel label);

namespace testing {
/// Zero-test hooks for sanity properties: optional per-column scales of the
/// basis functions, and an optional row operation D^(1) += lambda D^(0).
struct DetTweaks {
  std::vector<Fel> column_scales;           // empty = all ones
  std::optional<Fel> row_op_lambda;
};
bool classical_det_nonzero(const CurveSpec& spec, System system, const DetTweaks& tweaks);
bool frobenius_det_nonzero(const CurveSpec& spec, System system, const DetTweaks& tweaks);
}  // namespace testing

}  // namespace genfermat
