#pragma once

// Dense univariate polynomials over GF(q).  Low degree first, trailing
// zeros trimmed; the zero polynomial is the empty vector.

#include <cstdint>
#include <vector>

#include "genfermat/field.hpp"

namespace genfermat {

struct UPoly {
  std::vector<Fel> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  Fel leading() const { return c.empty() ? 0 : c.back(); }
};

UPoly up_const(Fel v);
UPoly up_monomial(Fel v, std::uint32_t e);
void up_trim(UPoly& a);

UPoly up_add(const Field& F, const UPoly& a, const UPoly& b);
UPoly up_sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly up_neg(const Field& F, const UPoly& a);
UPoly up_scale(const Field& F, const UPoly& a, Fel s);
UPoly up_mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly up_pow(const Field& F, const UPoly& a, std::uint64_t e);
UPoly up_shift(const UPoly& a, std::uint32_t k);  // multiply by x^k
UPoly up_derivative(const Field& F, const UPoly& a);
Fel up_eval(const Field& F, const UPoly& a, Fel x);

/// Monic gcd; gcd(0, 0) = 0.
UPoly up_gcd(const Field& F, UPoly a, UPoly b);
/// Quotient and remainder of a by nonzero b.
void up_divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem);
/// Exact quotient a / b; the division must leave no remainder.
UPoly up_divexact(const Field& F, const UPoly& a, const UPoly& b);

bool up_equal(const UPoly& a, const UPoly& b);

}  // namespace genfermat
