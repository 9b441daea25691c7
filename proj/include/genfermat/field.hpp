#pragma once

// Arithmetic in GF(p^h) with a fixed monic irreducible modulus.
//
// Elements are integer-encoded: the residue polynomial c_0 + c_1 t + ... +
// c_{h-1} t^{h-1} is stored as the integer sum c_i * p^i, a bijection with
// [0, q).  The encoding is canonical given the modulus, and the canonical
// modulus for a given (p, h) is deterministic (first irreducible monic
// polynomial in ascending integer order of its non-leading coefficients),
// so encodings are reproducible across runs and implementations.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "genfermat/error.hpp"

namespace genfermat {

/// Integer-encoded element of GF(p^h); value in [0, q).
using Fel = std::uint32_t;

struct Indicators {
  bool psi;      // square in GF(q) (or in GF(p^r) when the subfield variant is requested)
  bool delta_r;  // (p^r - 1)-th power in GF(q)
  bool gamma_r;  // lies in GF(p^r), i.e. fixed by the p^r-power map
};

class Field {
 public:
  /// Empty handle; must be assigned from Field::make before use.
  Field() = default;

  /// Builds GF(p^h).  When `modulus` is omitted the canonical modulus is
  /// selected.  Throws NotPrime / WrongDegree / ReducibleModulus /
  /// FieldTooLarge (q is capped at 2^20).
  static Field make(std::uint64_t p, unsigned h,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint64_t p() const;
  unsigned h() const;
  std::uint64_t q() const;
  /// Modulus coefficients, low degree first, monic last; size h+1.
  const std::vector<std::uint32_t>& modulus() const;

  Fel zero() const { return 0; }
  Fel one() const { return 1; }
  /// Image of the integer k (reduced mod p) in the prime subfield.
  Fel from_int(std::int64_t k) const;
  /// A fixed generator of the multiplicative group.
  Fel generator() const;

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;  // throws DivisionByZero on 0
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  /// a^e.  Exponents up to 2^63 are accepted; for nonzero bases the exponent
  /// is reduced mod q-1.  0^0 = 1.
  Fel pow(Fel a, std::uint64_t e) const;

  /// #{ t in GF(q) : t^k = c }.  c == 0 gives 1; otherwise the count is
  /// gcd(k, q-1) when c^((q-1)/gcd) = 1 and 0 when not.
  std::uint64_t root_count(std::uint64_t k, Fel c) const;

  bool is_square(Fel d) const;                    // d != 0
  bool in_subfield(Fel d, unsigned r) const;      // d^(p^r) == d
  bool is_power_of(Fel d, std::uint64_t k) const; // root_count(k, d) > 0, d != 0
  /// Square in GF(p^r); requires d in GF(p^r).
  bool is_square_in_subfield(Fel d, unsigned r) const;

  /// psi / delta_r / gamma_r indicator bundle for d != 0 and 1 <= r <= h,
  /// r | h.  With `psi_in_subfield` set, psi is evaluated in GF(p^r)
  /// (requires d in GF(p^r)).  Throws InvalidSubfield.
  Indicators indicators(Fel d, unsigned r, bool psi_in_subfield = false) const;

  /// All elements fixed by the p^r-power map, ascending encoding (r | h).
  std::vector<Fel> subfield_elements(unsigned r) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// floor(sqrt(v)) for 64-bit v.
std::uint64_t isqrt_u64(std::uint64_t v);

}  // namespace genfermat
