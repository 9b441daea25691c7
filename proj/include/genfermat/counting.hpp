#pragma once

// Exact rational-point counts (naive O(q^2) sweep, O(q) value-distribution
// sweep, smooth-model total), the closed-form counts available in the
// Frobenius-nonclassical cases, and the Stohr-Voloch / Hasse-Weil upper
// bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genfermat/classifier.hpp"
#include "genfermat/curve.hpp"

namespace genfermat {

enum class CountMethod { Naive, Fast, Smooth, Formula };

struct CountReport {
  std::uint64_t affine = 0;
  std::uint64_t infinity_branches = 0;
  std::uint64_t total = 0;
  CountMethod method = CountMethod::Fast;
  std::optional<std::string> formula_case;
  std::string note;
};

/// Affine rational points.  Naive iterates all of GF(q)^2; Fast sweeps the
/// value distribution of x^n against the forced value of y^m in O(q).
std::uint64_t count_affine(const CurveSpec& spec, CountMethod method);

/// Affine count plus the rational points of the smooth model over the line
/// at infinity.  Throws UnsupportedInfinity for TwoTerm with m < n, m not
/// dividing n.
CountReport count_smooth_model(const CurveSpec& spec);

/// Closed-form count when the curve matches a Frobenius-nonclassical count
/// case (classification is consulted first); nullopt otherwise.  Where the
/// square-indicator convention is ambiguous, both readings are computed and
/// the exact smooth-model count selects the right one (noted in the report);
/// AmbiguousConvention is thrown if neither reading matches.
std::optional<CountReport> count_formula(const CurveSpec& spec);

struct BoundReport {
  std::uint64_t genus = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::int64_t sv_bound = 0;
  std::uint64_t hasse_weil_upper = 0;
  std::optional<std::int64_t> generic_sv;
  bool frobenius_nonclassical = false;  // w.r.t. conics, when decidable
};

/// Stohr-Voloch bound for conics with the inflection-point corrections,
/// plus the Hasse-Weil bound and the uncorrected generic bound.
BoundReport sv_bound(const CurveSpec& spec);

/// floor(((nu_1+...+nu_{M-1})(2g-2) + (q+M) s deg)/M) for a Frobenius order
/// sequence nu (nu_0 = 0, strictly increasing, length M).
std::int64_t generic_bound(std::uint64_t q, std::uint64_t genus, const std::vector<unsigned>& nu,
                           unsigned s, std::uint64_t degree, unsigned M);

/// floor(q + 1 + 2 g sqrt(q)), exact in integer arithmetic.
std::uint64_t hasse_weil_upper(std::uint64_t q, std::uint64_t genus);

/// Per-field table of root counts t^k = c for every c; entry [0] is 1.
std::vector<std::uint32_t> root_count_table(const Field& F, std::uint64_t k);

const char* count_method_name(CountMethod m);

}  // namespace genfermat
