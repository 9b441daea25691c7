#pragma once

// Parameter-grid scan: enumerates curves over (p, h, n, m) ranges with a
// coefficient strategy, classifies and counts each one, and emits CSV rows
// in deterministic lexicographic order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "genfermat/curve.hpp"

namespace genfermat {

struct ScanGrid {
  std::vector<std::uint64_t> ps;
  std::vector<unsigned> hs;
  std::uint32_t n_min = 3, n_max = 3;
  std::uint32_t m_min = 3, m_max = 3;

  enum class Coeffs { All, Subfield, Sample };
  Coeffs strategy = Coeffs::Subfield;
  unsigned subfield_r = 1;
  std::uint64_t sample_k = 20;
  std::uint64_t seed = 1;

  enum class FamilySel { TwoTerm, ThreeTerm, Both };
  FamilySel family = FamilySel::Both;

  enum class SystemSel { Lines, Conics, Both };
  SystemSel system = SystemSel::Conics;

  std::uint64_t budget = 1000000;  // maximum number of curves
};

inline constexpr const char* kScanCsvHeader =
    "p,h,modulus,n,m,a,b,c,system,case_label,geometric,frobenius,N_exact,N_formula,sv_bound,hw_"
    "bound";

struct ScanSummary {
  std::uint64_t curves = 0;
  std::uint64_t rows = 0;
  std::uint64_t frobenius_nonclassical_rows = 0;
  std::uint64_t unsupported_infinity = 0;
  nlohmann::json to_json() const;
};

/// Enumerates the grid (m <= n, p coprime to n m, degenerate coefficient
/// tuples skipped).  Throws BudgetExceeded before any work when the curve
/// count exceeds grid.budget.
ScanSummary run_scan(const ScanGrid& grid, std::ostream& csv, unsigned threads = 0);

/// The curves of the grid in row order (exposed for the verification suites).
std::vector<CurveSpec> grid_curves(const ScanGrid& grid);

}  // namespace genfermat
