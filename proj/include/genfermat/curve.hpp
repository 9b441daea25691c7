#pragma once

// Curve specifications for the two families
//
//   TwoTerm:    a x^n + b y^m = 1,               a, b != 0
//   ThreeTerm:  a x^n y^m + b x^n + c y^m = 1,   a, b, c != 0, c != -a/b
//
// with n >= m > 2 and p coprime to n m, plus genus and the geometry of the
// points at infinity (multiplicities and rational branch counts) needed for
// smooth-model point counts.

#include <cstdint>
#include <vector>

#include "genfermat/field.hpp"
#include "genfermat/upoly.hpp"

namespace genfermat {

enum class Family { TwoTerm, ThreeTerm };

struct CurveSpec {
  Family family = Family::TwoTerm;
  Field field;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Fel a = 0;
  Fel b = 0;
  Fel c = 0;  // ThreeTerm only
  /// Cap on x-degrees in function-field reductions; 0 selects the default 10*q.
  std::uint32_t degree_cap = 0;

  std::uint32_t effective_cap() const {
    return degree_cap ? degree_cap : static_cast<std::uint32_t>(10 * field.q());
  }
};

/// Enforces all invariants and normalizes so that n >= m (swapping the axes
/// when needed: TwoTerm swaps (a,n) with (b,m); ThreeTerm swaps b with c and
/// n with m).  Throws CharacteristicDividesExponent, DegenerateCoefficient,
/// ExponentTooSmall.
CurveSpec validate(CurveSpec spec);

/// Genus of the smooth model: (mn - m - n - gcd(m,n) + 2)/2 for TwoTerm,
/// (n-1)(m-1) for ThreeTerm.
std::uint64_t genus(const CurveSpec& spec);

struct SingularPointInfo {
  enum class Location { XAxisAtInfinity, YAxisAtInfinity };  // (1:0:0) resp. (0:1:0)
  Location location;
  std::uint32_t multiplicity;
  std::uint32_t rational_branches;
};

struct InfinityProfile {
  std::vector<SingularPointInfo> singular_points;
  std::uint32_t smooth_infinity_points = 0;
  bool supported = true;
};

/// Points of the smooth model lying over the line at infinity.
///
///  - TwoTerm, m = n: the projective curve is smooth there; the points are
///    (t:1:0) with a t^n = -b.
///  - TwoTerm, m < n, m | n: one singular point (0:1:0) of multiplicity n-m;
///    in the chart u = 1/x, w = y/x^(n/m) the curve becomes a + b w^m = u^n
///    whose branches at u = 0 sit at w^m = -a/b, each smooth, so the
///    rational branch count is root_count(m, -a/b).
///  - TwoTerm, m < n, m does not divide n: unsupported (flagged, not thrown).
///  - ThreeTerm: two ordinary singularities, (1:0:0) of multiplicity m with
///    tangent cone a y^m + b z^m and (0:1:0) of multiplicity n with tangent
///    cone a x^n + c z^n; rational branches are in bijection with rational
///    tangent lines.
InfinityProfile infinity_profile(const CurveSpec& spec);

/// Leading coefficient of the curve polynomial in y (constant b for TwoTerm,
/// a x^n + c for ThreeTerm) and the numerator of y^m: y^m = g_num(x)/lead(x).
UPoly curve_lead_y(const CurveSpec& spec);
UPoly curve_ym_numer(const CurveSpec& spec);

/// True when (u, v) satisfies the affine curve equation.
bool on_curve(const CurveSpec& spec, Fel u, Fel v);

}  // namespace genfermat
