#include "genfermat/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace genfermat {

std::uint32_t BiPoly::deg_x() const {
  std::uint32_t d = 0;
  for (auto& [mono, c] : terms) d = std::max(d, mono.first);
  return d;
}

std::uint32_t BiPoly::deg_y() const {
  std::uint32_t d = 0;
  for (auto& [mono, c] : terms) d = std::max(d, mono.second);
  return d;
}

BiPoly bp_term(Fel c, std::uint32_t i, std::uint32_t j) {
  BiPoly r;
  if (c) r.terms[{i, j}] = c;
  return r;
}

void bp_add_term(const Field& F, BiPoly& a, Fel c, std::uint32_t i, std::uint32_t j) {
  if (!c) return;
  auto key = Mono{i, j};
  auto it = a.terms.find(key);
  if (it == a.terms.end()) {
    a.terms.emplace(key, c);
  } else {
    Fel s = F.add(it->second, c);
    if (s)
      it->second = s;
    else
      a.terms.erase(it);
  }
}

BiPoly bp_add(const Field& F, const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (auto& [mono, c] : b.terms) bp_add_term(F, r, c, mono.first, mono.second);
  return r;
}

BiPoly bp_neg(const Field& F, const BiPoly& a) {
  BiPoly r = a;
  for (auto& [mono, c] : r.terms) c = F.neg(c);
  return r;
}

BiPoly bp_sub(const Field& F, const BiPoly& a, const BiPoly& b) { return bp_add(F, a, bp_neg(F, b)); }

BiPoly bp_scale(const Field& F, const BiPoly& a, Fel s) {
  BiPoly r;
  if (!s) return r;
  for (auto& [mono, c] : a.terms) r.terms[mono] = F.mul(c, s);
  return r;
}

BiPoly bp_mul(const Field& F, const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms)
      bp_add_term(F, r, F.mul(ca, cb), ma.first + mb.first, ma.second + mb.second);
  return r;
}

BiPoly bp_pow(const Field& F, const BiPoly& a, std::uint64_t e) {
  BiPoly r = bp_term(1, 0, 0), b = a;
  while (e) {
    if (e & 1) r = bp_mul(F, r, b);
    e >>= 1;
    if (e) b = bp_mul(F, b, b);
  }
  return r;
}

Fel bp_eval(const Field& F, const BiPoly& a, Fel u, Fel v) {
  Fel r = 0;
  for (auto& [mono, c] : a.terms)
    r = F.add(r, F.mul(c, F.mul(F.pow(u, mono.first), F.pow(v, mono.second))));
  return r;
}

bool bp_equal(const BiPoly& a, const BiPoly& b) { return a.terms == b.terms; }

std::string bp_to_string(const BiPoly& a) {
  std::ostringstream os;
  bool first = true;
  for (auto& [mono, c] : a.terms) {
    if (!first) os << ' ';
    first = false;
    os << '(' << mono.first << ',' << mono.second << "):" << c;
  }
  return a.terms.empty() ? "0" : os.str();
}

BiPoly bp_from_upoly(const UPoly& a, std::uint32_t y_deg) {
  BiPoly r;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i]) r.terms[{static_cast<std::uint32_t>(i), y_deg}] = a.c[i];
  return r;
}

BiPoly curve_polynomial(const CurveSpec& spec) {
  const Field& F = spec.field;
  BiPoly f;
  if (spec.family == Family::TwoTerm) {
    bp_add_term(F, f, spec.a, spec.n, 0);
    bp_add_term(F, f, spec.b, 0, spec.m);
  } else {
    bp_add_term(F, f, spec.a, spec.n, spec.m);
    bp_add_term(F, f, spec.b, spec.n, 0);
    bp_add_term(F, f, spec.c, 0, spec.m);
  }
  bp_add_term(F, f, F.neg(1), 0, 0);
  return f;
}

namespace {

// y-degree slices of a BiPoly as univariate polynomials in x
std::map<std::uint32_t, UPoly> slices(const BiPoly& a) {
  std::map<std::uint32_t, UPoly> s;
  for (auto& [mono, c] : a.terms) {
    UPoly& sl = s[mono.second];
    if (sl.c.size() <= mono.first) sl.c.resize(mono.first + 1, 0);
    sl.c[mono.first] = c;
  }
  return s;
}

BiPoly from_slices(const std::map<std::uint32_t, UPoly>& s) {
  BiPoly r;
  for (auto& [j, sl] : s)
    for (std::size_t i = 0; i < sl.c.size(); ++i)
      if (sl.c[i]) r.terms[{static_cast<std::uint32_t>(i), j}] = sl.c[i];
  return r;
}

void check_cap(const CurveSpec& spec, std::uint32_t deg) {
  if (deg > spec.effective_cap())
    fail(Errc::DegreeCapExceeded,
         "x-degree " + std::to_string(deg) + " exceeds cap " + std::to_string(spec.effective_cap()));
}

void normalize(FFElem& e) {
  const Field& F = e.curve.field;
  up_trim(e.denom);
  if (e.numer.is_zero()) {
    e.denom = up_const(1);
    return;
  }
  UPoly content;
  for (auto& [j, sl] : slices(e.numer)) {
    (void)j;
    content = up_gcd(F, content, sl);
    if (content.deg() == 0) break;
  }
  UPoly g = up_gcd(F, e.denom, content);
  if (g.deg() > 0) {
    auto s = slices(e.numer);
    for (auto& [j, sl] : s) sl = up_divexact(F, sl, g);
    e.numer = from_slices(s);
    e.denom = up_divexact(F, e.denom, g);
  }
  Fel lead = e.denom.leading();
  if (lead != 1) {
    Fel li = F.inv(lead);
    e.denom = up_scale(F, e.denom, li);
    auto s = slices(e.numer);
    for (auto& [j, sl] : s) sl = up_scale(F, sl, li);
    e.numer = from_slices(s);
  }
}

// Rewrites y-degrees >= m via y^m = g_num/lead, returning the reduced
// numerator and the power of lead that joined the denominator.
std::pair<BiPoly, std::uint32_t> reduce_y(const BiPoly& g, const CurveSpec& spec) {
  const Field& F = spec.field;
  const std::uint32_t m = spec.m;
  std::uint32_t kmax = 0;
  for (auto& [mono, c] : g.terms) kmax = std::max(kmax, mono.second / m);
  if (kmax == 0) return {g, 0};
  UPoly lead = curve_lead_y(spec);
  UPoly gnum = curve_ym_numer(spec);
  // powers gnum^k and lead^(kmax-k)
  std::vector<UPoly> gp(kmax + 1), lp(kmax + 1);
  gp[0] = up_const(1);
  for (std::uint32_t k = 1; k <= kmax; ++k) {
    gp[k] = up_mul(F, gp[k - 1], gnum);
    check_cap(spec, static_cast<std::uint32_t>(std::max(0, gp[k].deg())));
  }
  lp[0] = up_const(1);
  for (std::uint32_t k = 1; k <= kmax; ++k) lp[k] = up_mul(F, lp[k - 1], lead);
  BiPoly out;
  for (auto& [mono, c] : g.terms) {
    std::uint32_t k = mono.second / m, jr = mono.second % m;
    UPoly t = up_mul(F, gp[k], lp[kmax - k]);
    t = up_scale(F, t, c);
    check_cap(spec, mono.first + static_cast<std::uint32_t>(std::max(0, t.deg())));
    for (std::size_t i = 0; i < t.c.size(); ++i)
      if (t.c[i]) bp_add_term(F, out, t.c[i], mono.first + static_cast<std::uint32_t>(i), jr);
  }
  return {out, kmax};
}

}  // namespace

FFElem ff_zero(const CurveSpec& curve) { return FFElem{curve, {}, up_const(1)}; }

FFElem ff_one(const CurveSpec& curve) { return FFElem{curve, bp_term(1, 0, 0), up_const(1)}; }

FFElem ff_from_bipoly_reduced(const CurveSpec& curve, BiPoly numer, UPoly denom) {
  FFElem e{curve, std::move(numer), std::move(denom)};
  normalize(e);
  return e;
}

FFElem ff_reduce(const BiPoly& g, const CurveSpec& curve) {
  check_cap(curve, g.deg_x());
  auto [red, k] = reduce_y(g, curve);
  UPoly denom = up_pow(curve.field, curve_lead_y(curve), k);
  return ff_from_bipoly_reduced(curve, std::move(red), std::move(denom));
}

bool ff_is_zero(const BiPoly& g, const CurveSpec& curve) { return ff_reduce(g, curve).is_zero(); }

FFElem ff_add(const FFElem& a, const FFElem& b) {
  const Field& F = a.curve.field;
  BiPoly n = bp_add(F, bp_mul(F, a.numer, bp_from_upoly(b.denom)),
                    bp_mul(F, b.numer, bp_from_upoly(a.denom)));
  return ff_from_bipoly_reduced(a.curve, std::move(n), up_mul(F, a.denom, b.denom));
}

FFElem ff_sub(const FFElem& a, const FFElem& b) { return ff_add(a, ff_scale(b, a.curve.field.neg(1))); }

FFElem ff_scale(const FFElem& a, Fel s) {
  FFElem r = a;
  r.numer = bp_scale(a.curve.field, a.numer, s);
  if (r.numer.is_zero()) r.denom = up_const(1);
  return r;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
  const Field& F = a.curve.field;
  BiPoly prod = bp_mul(F, a.numer, b.numer);
  auto [red, k] = reduce_y(prod, a.curve);
  UPoly denom = up_mul(F, a.denom, b.denom);
  if (k) denom = up_mul(F, denom, up_pow(F, curve_lead_y(a.curve), k));
  return ff_from_bipoly_reduced(a.curve, std::move(red), std::move(denom));
}

bool ff_equal(const FFElem& a, const FFElem& b) {
  const Field& F = a.curve.field;
  BiPoly lhs = bp_mul(F, a.numer, bp_from_upoly(b.denom));
  BiPoly rhs = bp_mul(F, b.numer, bp_from_upoly(a.denom));
  return bp_equal(lhs, rhs);
}

FFElem ff_dydx(const CurveSpec& curve) {
  const Field& F = curve.field;
  if (curve.n % F.p() == 0 || curve.m % F.p() == 0)
    fail(Errc::InseparableVariable, "p divides an exponent; x is not separating");
  // y'/y is a rational function of x alone:
  //   TwoTerm:   y' = -n a x^(n-1) y / (m (1 - a x^n))
  //   ThreeTerm: y' = -n (a + b c) x^(n-1) y / (m (1 - b x^n)(a x^n + c))
  Fel nf = F.from_int(static_cast<std::int64_t>(curve.n % F.p()));
  Fel mf = F.from_int(static_cast<std::int64_t>(curve.m % F.p()));
  UPoly denom;
  Fel un;
  if (curve.family == Family::TwoTerm) {
    un = F.neg(F.mul(nf, curve.a));
    denom = up_scale(F, up_sub(F, up_const(1), up_monomial(curve.a, curve.n)), mf);
  } else {
    un = F.neg(F.mul(nf, F.add(curve.a, F.mul(curve.b, curve.c))));
    UPoly d1 = up_sub(F, up_const(1), up_monomial(curve.b, curve.n));
    UPoly d2 = up_add(F, up_monomial(curve.a, curve.n), up_const(curve.c));
    denom = up_scale(F, up_mul(F, d1, d2), mf);
  }
  return ff_from_bipoly_reduced(curve, bp_term(un, curve.n - 1, 1), std::move(denom));
}

namespace {

// single ordinary d/dx on a function-field element
FFElem d1(const FFElem& e) {
  const Field& F = e.curve.field;
  FFElem rho = ff_dydx(e.curve);  // numer = u * x^(n-1) y, denom = v; y' = (u/v) y
  // e = N/D:  e' = (N_x D - N D') / D^2 + (N_y * y) * (u'/v') / D
  BiPoly Nx, Nyy;
  for (auto& [mono, c] : e.numer.terms) {
    if (mono.first)
      bp_add_term(F, Nx, F.mul(c, F.from_int(static_cast<std::int64_t>(mono.first % F.p()))),
                  mono.first - 1, mono.second);
    if (mono.second)
      bp_add_term(F, Nyy, F.mul(c, F.from_int(static_cast<std::int64_t>(mono.second % F.p()))),
                  mono.first, mono.second);
  }
  UPoly Dp = up_derivative(F, e.denom);
  // rho = rho_num / rho_den with rho_num carrying the single y factor
  const BiPoly& rho_num = rho.numer;
  const UPoly& rho_den = rho.denom;
  // numer = (N_x D - N D') * rho_den + N_yy * rho_num_xpart * D ; denom = D^2 rho_den
  BiPoly part1 = bp_sub(F, bp_mul(F, Nx, bp_from_upoly(e.denom)), bp_mul(F, e.numer, bp_from_upoly(Dp)));
  part1 = bp_mul(F, part1, bp_from_upoly(rho_den));
  // N_yy already carries the y-grading of N; multiplying by rho's x-part
  // (u x^(n-1)) keeps y-degrees < m
  BiPoly xpart;
  for (auto& [mono, c] : rho_num.terms) bp_add_term(F, xpart, c, mono.first, mono.second - 1);
  BiPoly part2 = bp_mul(F, bp_mul(F, Nyy, xpart), bp_from_upoly(e.denom));
  BiPoly numer = bp_add(F, part1, part2);
  UPoly denom = up_mul(F, up_mul(F, e.denom, e.denom), rho_den);
  return ff_from_bipoly_reduced(e.curve, std::move(numer), std::move(denom));
}

}  // namespace

FFElem ff_diff(const FFElem& e, unsigned k) {
  const Field& F = e.curve.field;
  if (k > 5 || k >= F.p())
    fail(Errc::OrderTooHigh, "Hasse derivative order " + std::to_string(k) + " not supported");
  FFElem r = e;
  for (unsigned j = 1; j <= k; ++j) {
    r = d1(r);
    r = ff_scale(r, F.inv(F.from_int(static_cast<std::int64_t>(j))));
  }
  return r;
}

FFElem ff_q_power(const FFElem& e) {
  const Field& F = e.curve.field;
  std::uint64_t q = F.q();
  FFElem r = ff_one(e.curve), b = e;
  while (q) {
    if (q & 1) r = ff_mul(r, b);
    q >>= 1;
    if (q) b = ff_mul(b, b);
  }
  return r;
}

Fel ff_eval(const FFElem& e, Fel u, Fel v) {
  const Field& F = e.curve.field;
  Fel dv = up_eval(F, e.denom, u);
  if (!dv) fail(Errc::DivisionByZero, "denominator vanishes at evaluation point");
  return F.div(bp_eval(F, e.numer, u, v), dv);
}

}  // namespace genfermat
