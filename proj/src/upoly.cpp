#include "genfermat/upoly.hpp"

#include <cassert>

namespace genfermat {

UPoly up_const(Fel v) {
  UPoly r;
  if (v) r.c = {v};
  return r;
}

UPoly up_monomial(Fel v, std::uint32_t e) {
  UPoly r;
  if (v) {
    r.c.assign(e + 1, 0);
    r.c[e] = v;
  }
  return r;
}

void up_trim(UPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

UPoly up_add(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Fel va = i < a.c.size() ? a.c[i] : 0;
    Fel vb = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(va, vb);
  }
  up_trim(r);
  return r;
}

UPoly up_neg(const Field& F, const UPoly& a) {
  UPoly r = a;
  for (auto& v : r.c) v = F.neg(v);
  return r;
}

UPoly up_sub(const Field& F, const UPoly& a, const UPoly& b) { return up_add(F, a, up_neg(F, b)); }

UPoly up_scale(const Field& F, const UPoly& a, Fel s) {
  if (!s) return {};
  UPoly r = a;
  for (auto& v : r.c) v = F.mul(v, s);
  up_trim(r);
  return r;
}

UPoly up_mul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  // iterate over the sparser operand on the outside; skip zero coefficients
  const UPoly& s = a.c.size() <= b.c.size() ? a : b;
  const UPoly& d = a.c.size() <= b.c.size() ? b : a;
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < s.c.size(); ++i) {
    Fel si = s.c[i];
    if (!si) continue;
    for (std::size_t j = 0; j < d.c.size(); ++j) {
      Fel dj = d.c[j];
      if (!dj) continue;
      r.c[i + j] = F.add(r.c[i + j], F.mul(si, dj));
    }
  }
  up_trim(r);
  return r;
}

UPoly up_pow(const Field& F, const UPoly& a, std::uint64_t e) {
  UPoly r = up_const(1), b = a;
  while (e) {
    if (e & 1) r = up_mul(F, r, b);
    e >>= 1;
    if (e) b = up_mul(F, b, b);
  }
  return r;
}

UPoly up_shift(const UPoly& a, std::uint32_t k) {
  if (a.c.empty() || k == 0) return a;
  UPoly r;
  r.c.assign(a.c.size() + k, 0);
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
  return r;
}

UPoly up_derivative(const Field& F, const UPoly& a) {
  UPoly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<std::int64_t>(i)));
  up_trim(r);
  return r;
}

Fel up_eval(const Field& F, const UPoly& a, Fel x) {
  Fel r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

void up_divrem(const Field& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
  assert(!b.c.empty());
  rem = a;
  quo = {};
  if (a.c.size() < b.c.size()) return;
  quo.c.assign(a.c.size() - b.c.size() + 1, 0);
  Fel lead_inv = F.inv(b.leading());
  while (rem.c.size() >= b.c.size() && !rem.c.empty()) {
    Fel cf = F.mul(rem.leading(), lead_inv);
    std::size_t shift = rem.c.size() - b.c.size();
    quo.c[shift] = cf;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(b.c[j], cf));
    up_trim(rem);
  }
  up_trim(quo);
}

UPoly up_divexact(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  up_divrem(F, a, b, q, r);
  assert(r.is_zero());
  return q;
}

UPoly up_gcd(const Field& F, UPoly a, UPoly b) {
  up_trim(a);
  up_trim(b);
  while (!b.is_zero()) {
    UPoly q, r;
    up_divrem(F, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() != 1) a = up_scale(F, a, F.inv(a.leading()));
  return a;
}

bool up_equal(const UPoly& a, const UPoly& b) { return a.c == b.c; }

}  // namespace genfermat
