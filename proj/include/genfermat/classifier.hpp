#pragma once

// Classification of (Frobenius) classicality with respect to the linear
// systems of lines and conics, decided from the closed-form conditions on
// (p, q, n, m) and the coefficients, together with the case-specific
// identity polynomials whose vanishing in the function field certifies
// Frobenius nonclassicality.

#include <cstdint>
#include <optional>
#include <string>

#include "genfermat/bipoly.hpp"
#include "genfermat/curve.hpp"

namespace genfermat {

enum class System { Lines, Conics };

enum class Verdict { Classical, Nonclassical, Undetermined };

enum class Method { Theorem, Determinant, Both };

/// Matched case family.  The residue pattern of (n, m) mod p decides the
/// family; the labels a..e enumerate the Frobenius-nonclassical coefficient
/// cases for the two-term curve, the cl_* families are the patterns that are
/// geometrically nonclassical but always Frobenius classical.
enum class CaseLabel {
  None,
  FermatLines,           // lines: n = m = (q-1)/(p^r-1), a,b in GF(p^r)*; as a
                         // conics pattern: p | (n-1) and p | (m-1)
  FermatConicsA,         // p | (n-2), p | (m-2)
  FermatConicsB,         // p | (2n-1), p | (2m-1)
  FermatConicsC,         // p | (n+1), p | (m+1)  (q = n+1, a+b = 1)
  FermatConicsD,         // p | (n-1), p | (2m-1)
  FermatConicsDTwisted,  // same pattern, twisted coefficient branch b^(p^r) = -b
  FermatConicsE,         // p | (n-2), p | (m-1)
  FermatConicsClN1M2,    // p | (n-1), p | (m-2)   always Frobenius classical
  FermatConicsClN1Mp1,   // p | (n-1), p | (m+1)   always Frobenius classical
  FermatConicsCl2N1M1,   // p | (2n-1), p | (m-1)  always Frobenius classical
  FermatConicsClNp1M1,   // p | (n+1), p | (m-1)   always Frobenius classical
  ThreeTermI,            // p | (n-1), p | (m-1)
  ThreeTermII,           // p | (n-1), p | (m+1)
  ThreeTermIII,          // p | (n+1), p | (m+1)
  ThreeTermClNp1M1,      // p | (n+1), p | (m-1)   always Frobenius classical
};

const char* case_label_name(CaseLabel label);
std::optional<CaseLabel> case_label_from_name(const std::string& name);
/// True for the case families that carry an explicit identity polynomial.
bool has_identity_family(CaseLabel label);

struct ClassificationRecord {
  System system = System::Lines;
  Verdict geometric = Verdict::Undetermined;
  Verdict frobenius = Verdict::Undetermined;
  CaseLabel case_label = CaseLabel::None;
  std::optional<unsigned> r;
  Method method = Method::Theorem;
};

/// Lines (Sigma_1).  Requires p > 2.
ClassificationRecord classify_lines(const CurveSpec& spec);

/// Conics (Sigma_2).  Requires p != 2; p in {3, 5} yields Undetermined
/// verdicts rather than a guess.
ClassificationRecord classify_conics(const CurveSpec& spec);

/// The polynomial whose vanishing in the function field is equivalent to
/// Frobenius nonclassicality in the named case.  Throws CaseMismatch when
/// the label has no identity family or the spec does not satisfy the
/// case's divisibility pattern.
BiPoly identity_polynomial(const CurveSpec& spec, CaseLabel label);

/// ff_is_zero(identity_polynomial(spec, label)) — an oracle for the
/// Frobenius verdict that is independent of the coefficient conditions.
bool identity_check(const CurveSpec& spec, CaseLabel label);

const char* system_name(System s);
const char* verdict_name(Verdict v);

}  // namespace genfermat
