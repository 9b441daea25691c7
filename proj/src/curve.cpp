#include "genfermat/curve.hpp"

#include <numeric>

namespace genfermat {

CurveSpec validate(CurveSpec spec) {
  const Field& F = spec.field;
  if (spec.m > spec.n) {
    if (spec.family == Family::TwoTerm) {
      std::swap(spec.a, spec.b);
      std::swap(spec.n, spec.m);
    } else {
      std::swap(spec.b, spec.c);
      std::swap(spec.n, spec.m);
    }
  }
  if (spec.m <= 2)
    fail(Errc::ExponentTooSmall, "min(n, m) must exceed 2 (got m = " + std::to_string(spec.m) + ")");
  if (spec.n % F.p() == 0 || spec.m % F.p() == 0)
    fail(Errc::CharacteristicDividesExponent,
         "p = " + std::to_string(F.p()) + " divides an exponent");
  if (spec.a == 0 || spec.b == 0)
    fail(Errc::DegenerateCoefficient, "coefficients must be nonzero");
  if (spec.family == Family::ThreeTerm) {
    if (spec.c == 0) fail(Errc::DegenerateCoefficient, "coefficients must be nonzero");
    // c == -a/b collapses the curve to a product with a line pencil
    if (F.mul(spec.c, spec.b) == F.neg(spec.a))
      fail(Errc::DegenerateCoefficient, "c = -a/b is excluded");
  } else {
    spec.c = 0;
  }
  return spec;
}

std::uint64_t genus(const CurveSpec& spec) {
  const std::uint64_t n = spec.n, m = spec.m;
  if (spec.family == Family::TwoTerm) {
    std::uint64_t g2 = m * n - m - n - std::gcd(m, n) + 2;
    return g2 / 2;
  }
  return (n - 1) * (m - 1);
}

InfinityProfile infinity_profile(const CurveSpec& spec) {
  const Field& F = spec.field;
  InfinityProfile prof;
  if (spec.family == Family::TwoTerm) {
    Fel minus_b_over_a = F.neg(F.div(spec.b, spec.a));
    if (spec.n == spec.m) {
      prof.smooth_infinity_points =
          static_cast<std::uint32_t>(F.root_count(spec.n, minus_b_over_a));
      return prof;
    }
    if (spec.n % spec.m != 0) {
      prof.supported = false;
      return prof;
    }
    Fel minus_a_over_b = F.neg(F.div(spec.a, spec.b));
    SingularPointInfo pt;
    pt.location = SingularPointInfo::Location::YAxisAtInfinity;
    pt.multiplicity = spec.n - spec.m;
    pt.rational_branches = static_cast<std::uint32_t>(F.root_count(spec.m, minus_a_over_b));
    prof.singular_points.push_back(pt);
    return prof;
  }
  // ThreeTerm: ordinary singularities at (1:0:0) and (0:1:0)
  SingularPointInfo px;
  px.location = SingularPointInfo::Location::XAxisAtInfinity;
  px.multiplicity = spec.m;
  px.rational_branches =
      static_cast<std::uint32_t>(F.root_count(spec.m, F.neg(F.div(spec.b, spec.a))));
  SingularPointInfo py;
  py.location = SingularPointInfo::Location::YAxisAtInfinity;
  py.multiplicity = spec.n;
  py.rational_branches =
      static_cast<std::uint32_t>(F.root_count(spec.n, F.neg(F.div(spec.c, spec.a))));
  prof.singular_points.push_back(px);
  prof.singular_points.push_back(py);
  return prof;
}

UPoly curve_lead_y(const CurveSpec& spec) {
  const Field& F = spec.field;
  if (spec.family == Family::TwoTerm) return up_const(spec.b);
  UPoly L = up_monomial(spec.a, spec.n);
  return up_add(F, L, up_const(spec.c));
}

UPoly curve_ym_numer(const CurveSpec& spec) {
  const Field& F = spec.field;
  Fel xcoef = spec.family == Family::TwoTerm ? spec.a : spec.b;
  UPoly g = up_const(1);
  return up_sub(F, g, up_monomial(xcoef, spec.n));
}

bool on_curve(const CurveSpec& spec, Fel u, Fel v) {
  const Field& F = spec.field;
  Fel un = F.pow(u, spec.n), vm = F.pow(v, spec.m);
  if (spec.family == Family::TwoTerm)
    return F.add(F.mul(spec.a, un), F.mul(spec.b, vm)) == 1;
  Fel lhs = F.add(F.mul(spec.a, F.mul(un, vm)), F.add(F.mul(spec.b, un), F.mul(spec.c, vm)));
  return lhs == 1;
}

}  // namespace genfermat
