#include "genfermat/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace genfermat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidSubfield: return "InvalidSubfield";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::InseparableVariable: return "InseparableVariable";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::CharacteristicDividesExponent: return "CharacteristicDividesExponent";
    case Errc::DegenerateCoefficient: return "DegenerateCoefficient";
    case Errc::ExponentTooSmall: return "ExponentTooSmall";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::UnsupportedInfinity: return "UnsupportedInfinity";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::AxisPoint: return "AxisPoint";
    case Errc::NoFormula: return "NoFormula";
    case Errc::AmbiguousConvention: return "AmbiguousConvention";
    case Errc::MalformedOrderSequence: return "MalformedOrderSequence";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::MethodDisagreement: return "MethodDisagreement";
  }
  return "UnknownError";
}

std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace {

constexpr std::uint64_t kMaxQ = 1u << 20;
constexpr std::uint64_t kTableLimit = 1024;  // dense add/mul tables up to this q

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- polynomial arithmetic over GF(p), used only during field construction ---

using PPoly = std::vector<std::uint32_t>;  // low degree first, no trailing zeros

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  // reduce by monic f
  const std::size_t df = f.size() - 1;
  for (std::size_t i = r.size(); i-- > df;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < df; ++j)
      r[i - df + j] = static_cast<std::uint32_t>((r[i - df + j] + (p - f[j]) * c) % p);
  }
  r.resize(df);
  ptrim(r);
  return r;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint64_t p) {
  PPoly r = {1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  auto inv_mod_p = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2, b2 = x % p;
    while (e) {
      if (e & 1) r = r * b2 % p;
      b2 = b2 * b2 % p;
      e >>= 1;
    }
    return r;
  };
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a := a mod b
    std::uint64_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = a.back() * lead_inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - b[j]) * c % p) % p);
      ptrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool modulus_irreducible(const PPoly& f, std::uint64_t p, unsigned h) {
  if (h == 1) return true;
  // x^(p^h) == x mod f, and gcd(x^(p^(h/l)) - x, f) == 1 for every prime l | h
  PPoly x = {0, 1};
  std::uint64_t ph = 1;
  for (unsigned i = 0; i < h; ++i) ph *= p;
  PPoly xph = x;
  {
    // iterate Frobenius h times: x^(p^k)
    for (unsigned k = 0; k < h; ++k) xph = ppowmod(xph, p, f, p);
    if (xph != x) return false;
  }
  unsigned rem = h;
  for (unsigned l = 2; l <= rem; ++l) {
    if (rem % l) continue;
    while (rem % l == 0) rem /= l;
    PPoly xe = x;
    for (unsigned k = 0; k < h / l; ++k) xe = ppowmod(xe, p, f, p);
    // xe - x
    PPoly d = xe;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
    ptrim(d);
    PPoly g = pgcd(d, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) { n /= d; ++e; }
    fs.emplace_back(d, e);
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

}  // namespace

struct Field::Impl {
  std::uint64_t p;
  unsigned h;
  std::uint64_t q;
  std::vector<std::uint32_t> mod;  // size h+1
  Fel gen = 0;
  std::vector<Fel> exp;  // size 2(q-1); exp[i] = g^i
  std::vector<std::uint32_t> log;  // size q; log[0] unused
  std::vector<Fel> add_tab, mul_tab;  // q*q when q <= kTableLimit
  bool tables = false;

  // digit arithmetic on encodings (construction + generic path)
  Fel raw_add(Fel a, Fel b) const {
    if (h == 1) return static_cast<Fel>((static_cast<std::uint64_t>(a) + b) % p);
    Fel r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < h; ++i) {
      std::uint64_t da = a % p, db = b % p;
      a = static_cast<Fel>(a / p);
      b = static_cast<Fel>(b / p);
      r += static_cast<Fel>(((da + db) % p) * mult);
      mult *= p;
    }
    return r;
  }
  Fel raw_neg(Fel a) const {
    if (h == 1) return a ? static_cast<Fel>(p - a) : 0;
    Fel r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < h; ++i) {
      std::uint64_t da = a % p;
      a = static_cast<Fel>(a / p);
      r += static_cast<Fel>((da ? p - da : 0) * mult);
      mult *= p;
    }
    return r;
  }
  Fel raw_mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    if (h == 1) return static_cast<Fel>(static_cast<std::uint64_t>(a) * b % p);
    PPoly pa, pb;
    for (Fel x = a; x; x = static_cast<Fel>(x / p)) pa.push_back(static_cast<std::uint32_t>(x % p));
    for (Fel x = b; x; x = static_cast<Fel>(x / p)) pb.push_back(static_cast<std::uint32_t>(x % p));
    PPoly pm = pmulmod(pa, pb, PPoly(mod.begin(), mod.end()), p);
    Fel r = 0;
    std::uint64_t mult = 1;
    for (std::size_t i = 0; i < pm.size(); ++i) {
      r += static_cast<Fel>(pm[i] * mult);
      mult *= p;
    }
    return r;
  }
};

Field Field::make(std::uint64_t p, unsigned h, std::optional<std::vector<std::uint32_t>> modulus) {
  if (h < 1) fail(Errc::WrongDegree, "h must be >= 1");
  long double qe = 1;
  for (unsigned i = 0; i < h; ++i) qe *= static_cast<long double>(p);
  if (qe > static_cast<long double>(kMaxQ)) fail(Errc::FieldTooLarge, "q exceeds 2^20");
  if (!is_prime_u64(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) q *= p;

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->h = h;
  impl->q = q;

  if (modulus) {
    auto& m = *modulus;
    if (m.size() != h + 1) fail(Errc::WrongDegree, "modulus must have degree h");
    if (m.back() != 1) fail(Errc::WrongDegree, "modulus must be monic");
    for (auto c : m)
      if (c >= p) fail(Errc::WrongDegree, "modulus coefficient out of range");
    if (!modulus_irreducible(PPoly(m.begin(), m.end()), p, h))
      fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
    impl->mod = m;
  } else {
    // canonical modulus: first irreducible monic polynomial, enumerated by
    // ascending integer encoding of the non-leading coefficients
    std::uint64_t ph = q;  // p^h
    std::vector<std::uint32_t> m(h + 1, 0);
    m[h] = 1;
    bool found = false;
    for (std::uint64_t v = 0; v < ph; ++v) {
      std::uint64_t x = v;
      for (unsigned i = 0; i < h; ++i) {
        m[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (modulus_irreducible(PPoly(m.begin(), m.end()), p, h)) {
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::ReducibleModulus, "no irreducible modulus found");  // unreachable
    impl->mod = m;
  }

  // generator of GF(q)^*
  auto q1f = factorize(q - 1);
  for (Fel cand = 2; cand < q; ++cand) {
    bool ok = true;
    for (auto& [l, e] : q1f) {
      (void)e;
      // cand^((q-1)/l) via square-and-multiply on raw_mul
      std::uint64_t ex = (q - 1) / l;
      Fel r = 1, b = cand;
      while (ex) {
        if (ex & 1) r = impl->raw_mul(r, b);
        b = impl->raw_mul(b, b);
        ex >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->gen = cand;
      break;
    }
  }
  if (impl->gen == 0 && q > 2) fail(Errc::ReducibleModulus, "no generator found");  // unreachable
  if (q == 2) impl->gen = 1;

  impl->exp.assign(2 * (q - 1), 0);
  impl->log.assign(q, 0);
  Fel cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    impl->exp[i] = cur;
    impl->exp[i + (q - 1)] = cur;
    impl->log[cur] = static_cast<std::uint32_t>(i);
    cur = impl->raw_mul(cur, impl->gen);
  }

  if (q <= kTableLimit) {
    impl->add_tab.assign(q * q, 0);
    impl->mul_tab.assign(q * q, 0);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        impl->add_tab[a * q + b] = impl->raw_add(static_cast<Fel>(a), static_cast<Fel>(b));
        if (a && b)
          impl->mul_tab[a * q + b] =
              impl->exp[impl->log[a] + impl->log[b]];
      }
    impl->tables = true;
  }
  return Field(std::move(impl));
}

std::uint64_t Field::p() const { return impl_->p; }
unsigned Field::h() const { return impl_->h; }
std::uint64_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->mod; }
Fel Field::generator() const { return impl_->gen; }

Fel Field::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(impl_->p);
  if (r < 0) r += static_cast<std::int64_t>(impl_->p);
  return static_cast<Fel>(r);
}

Fel Field::add(Fel a, Fel b) const {
  return impl_->tables ? impl_->add_tab[static_cast<std::size_t>(a) * impl_->q + b]
                       : impl_->raw_add(a, b);
}

Fel Field::neg(Fel a) const { return impl_->raw_neg(a); }

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  if (impl_->tables) return impl_->mul_tab[static_cast<std::size_t>(a) * impl_->q + b];
  if (!a || !b) return 0;
  return impl_->exp[impl_->log[a] + impl_->log[b]];
}

Fel Field::inv(Fel a) const {
  if (!a) fail(Errc::DivisionByZero, "inverse of zero");
  const std::uint64_t q1 = impl_->q - 1;
  return impl_->exp[(q1 - impl_->log[a]) % q1];
}

Fel Field::pow(Fel a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t q1 = impl_->q - 1;
  std::uint64_t le = static_cast<std::uint64_t>(impl_->log[a]) * (e % q1) % q1;
  return impl_->exp[le];
}

std::uint64_t Field::root_count(std::uint64_t k, Fel c) const {
  if (c == 0) return 1;
  const std::uint64_t q1 = impl_->q - 1;
  std::uint64_t g = std::gcd(k, q1);
  return pow(c, q1 / g) == 1 ? g : 0;
}

bool Field::is_square(Fel d) const {
  if (impl_->p == 2) return true;
  return root_count(2, d) > 0;
}

bool Field::in_subfield(Fel d, unsigned r) const {
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= impl_->p;
  return pow(d, pr) == d;
}

bool Field::is_power_of(Fel d, std::uint64_t k) const { return root_count(k, d) > 0; }

bool Field::is_square_in_subfield(Fel d, unsigned r) const {
  if (!in_subfield(d, r)) fail(Errc::InvalidSubfield, "element not in GF(p^r)");
  if (impl_->p == 2) return true;
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= impl_->p;
  return d == 0 || pow(d, (pr - 1) / 2) == 1;
}

Indicators Field::indicators(Fel d, unsigned r, bool psi_in_subfield) const {
  if (d == 0) fail(Errc::DivisionByZero, "indicators of zero");
  if (r < 1 || r > impl_->h || impl_->h % r != 0)
    fail(Errc::InvalidSubfield, "r = " + std::to_string(r) + " does not divide h");
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= impl_->p;
  Indicators ind{};
  ind.gamma_r = (pow(d, pr) == d);
  ind.delta_r = is_power_of(d, pr - 1);
  ind.psi = psi_in_subfield ? is_square_in_subfield(d, r) : is_square(d);
  return ind;
}

std::vector<Fel> Field::subfield_elements(unsigned r) const {
  if (r < 1 || r > impl_->h || impl_->h % r != 0)
    fail(Errc::InvalidSubfield, "r = " + std::to_string(r) + " does not divide h");
  std::vector<Fel> out;
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= impl_->p;
  out.reserve(pr);
  for (std::uint64_t d = 0; d < impl_->q; ++d)
    if (pow(static_cast<Fel>(d), pr) == static_cast<Fel>(d)) out.push_back(static_cast<Fel>(d));
  return out;
}

bool Field::operator==(const Field& other) const {
  return impl_ == other.impl_ ||
         (impl_->p == other.impl_->p && impl_->h == other.impl_->h && impl_->mod == other.impl_->mod);
}

}  // namespace genfermat
