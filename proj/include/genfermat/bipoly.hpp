#pragma once

// Exact bivariate polynomials over GF(q) and arithmetic in the function
// field GF(q)(x)[y]/(curve).  Elements of the function field are kept in
// the canonical shape  numer(x, y) / denom(x)  with deg_y(numer) < m, which
// makes zero-testing a finite reduction: substitute
//
//   y^m = (1 - a x^n)/b            (TwoTerm)
//   y^m = (1 - b x^n)/(a x^n + c)  (ThreeTerm)
//
// until the y-degree drops below m, tracking the univariate denominator.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "genfermat/curve.hpp"
#include "genfermat/upoly.hpp"

namespace genfermat {

using Mono = std::pair<std::uint32_t, std::uint32_t>;  // (deg_x, deg_y)

/// Sparse bivariate polynomial; no explicit zero coefficients are stored.
struct BiPoly {
  std::map<Mono, Fel> terms;

  bool is_zero() const { return terms.empty(); }
  std::uint32_t deg_x() const;
  std::uint32_t deg_y() const;
};

BiPoly bp_term(Fel c, std::uint32_t i, std::uint32_t j);
void bp_add_term(const Field& F, BiPoly& a, Fel c, std::uint32_t i, std::uint32_t j);
BiPoly bp_add(const Field& F, const BiPoly& a, const BiPoly& b);
BiPoly bp_sub(const Field& F, const BiPoly& a, const BiPoly& b);
BiPoly bp_neg(const Field& F, const BiPoly& a);
BiPoly bp_scale(const Field& F, const BiPoly& a, Fel s);
BiPoly bp_mul(const Field& F, const BiPoly& a, const BiPoly& b);
BiPoly bp_pow(const Field& F, const BiPoly& a, std::uint64_t e);
Fel bp_eval(const Field& F, const BiPoly& a, Fel u, Fel v);
bool bp_equal(const BiPoly& a, const BiPoly& b);
/// Debug serialization: sorted "(i,j):coeff" pairs joined by spaces.
std::string bp_to_string(const BiPoly& a);

BiPoly bp_from_upoly(const UPoly& a, std::uint32_t y_deg = 0);
/// The affine curve polynomial itself (a x^n + b y^m - 1 or its three-term
/// analogue).
BiPoly curve_polynomial(const CurveSpec& spec);

/// Element of GF(q)(x)[y]/(curve); deg_y(numer) < m, denom univariate and
/// nonzero, normalized by dividing out gcd(denom, x-content of numer) and
/// forcing denom monic.
struct FFElem {
  CurveSpec curve;
  BiPoly numer;
  UPoly denom = up_const(1);

  bool is_zero() const { return numer.is_zero(); }
};

FFElem ff_zero(const CurveSpec& curve);
FFElem ff_one(const CurveSpec& curve);
FFElem ff_from_bipoly_reduced(const CurveSpec& curve, BiPoly numer, UPoly denom);

/// Canonical representative of a bivariate polynomial in the function field.
FFElem ff_reduce(const BiPoly& g, const CurveSpec& curve);
/// True iff g vanishes identically in the function field.
bool ff_is_zero(const BiPoly& g, const CurveSpec& curve);

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_scale(const FFElem& a, Fel s);
bool ff_equal(const FFElem& a, const FFElem& b);

/// dy/dx = -f_x / f_y in canonical form; requires p coprime to n and m.
FFElem ff_dydx(const CurveSpec& curve);
/// k-th Hasse derivative with respect to x, 0 <= k <= 5 and k < p.
FFElem ff_diff(const FFElem& e, unsigned k);
/// e^q (q-power Frobenius image).
FFElem ff_q_power(const FFElem& e);
/// Evaluation at an affine point; the denominator must not vanish at u.
Fel ff_eval(const FFElem& e, Fel u, Fel v);

}  // namespace genfermat
