#include "genfermat/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "genfermat/counting.hpp"
#include "genfermat/serialization.hpp"

namespace genfermat {

nlohmann::json ScanSummary::to_json() const {
  return nlohmann::json{{"curves", curves},
                        {"rows", rows},
                        {"frobenius_nonclassical_rows", frobenius_nonclassical_rows},
                        {"unsupported_infinity", unsupported_infinity}};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t shape_seed(const ScanGrid& grid, std::uint64_t p, unsigned h, std::uint32_t n,
                         std::uint32_t m, Family fam) {
  std::uint64_t s = grid.seed;
  for (std::uint64_t v : {p, static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(n),
                          static_cast<std::uint64_t>(m),
                          static_cast<std::uint64_t>(fam == Family::TwoTerm ? 1 : 2)})
    s = splitmix64(s ^ v);
  return s;
}

std::vector<Fel> coefficient_pool(const Field& F, const ScanGrid& grid) {
  std::vector<Fel> pool;
  if (grid.strategy == ScanGrid::Coeffs::Subfield && grid.subfield_r <= F.h() &&
      F.h() % grid.subfield_r == 0) {
    for (Fel d : F.subfield_elements(grid.subfield_r))
      if (d) pool.push_back(d);
  } else {
    for (std::uint64_t d = 1; d < F.q(); ++d) pool.push_back(static_cast<Fel>(d));
  }
  return pool;
}

template <typename Emit>
void enumerate_shape_coeffs(const ScanGrid& grid, const Field& F, std::uint64_t p, unsigned h,
                            std::uint32_t n, std::uint32_t m, Family fam, Emit emit) {
  auto degenerate = [&](Fel a, Fel b, Fel c) {
    return fam == Family::ThreeTerm && F.mul(c, b) == F.neg(a);
  };
  if (grid.strategy == ScanGrid::Coeffs::Sample) {
    std::mt19937_64 rng(shape_seed(grid, p, h, n, m, fam));
    auto draw = [&]() { return static_cast<Fel>(1 + rng() % (F.q() - 1)); };
    for (std::uint64_t i = 0; i < grid.sample_k; ++i) {
      Fel a = draw(), b = draw(), c = 0;
      if (fam == Family::ThreeTerm) {
        c = draw();
        while (degenerate(a, b, c)) c = draw();
      }
      emit(a, b, c);
    }
    return;
  }
  std::vector<Fel> pool = coefficient_pool(F, grid);
  for (Fel a : pool)
    for (Fel b : pool) {
      if (fam == Family::TwoTerm) {
        emit(a, b, 0);
        continue;
      }
      for (Fel c : pool)
        if (!degenerate(a, b, c)) emit(a, b, c);
    }
}

}  // namespace

std::vector<CurveSpec> grid_curves(const ScanGrid& grid) {
  std::vector<CurveSpec> curves;
  std::vector<std::uint64_t> ps = grid.ps;
  std::vector<unsigned> hs = grid.hs;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  std::vector<Family> fams;
  if (grid.family != ScanGrid::FamilySel::ThreeTerm) fams.push_back(Family::TwoTerm);
  if (grid.family != ScanGrid::FamilySel::TwoTerm) fams.push_back(Family::ThreeTerm);

  for (std::uint64_t p : ps) {
    for (unsigned h : hs) {
      Field F = Field::make(p, h);
      for (std::uint32_t n = std::max<std::uint32_t>(grid.n_min, 3); n <= grid.n_max; ++n) {
        if (n % p == 0) continue;
        std::uint32_t m_hi = std::min(n, grid.m_max);
        for (std::uint32_t m = std::max<std::uint32_t>(grid.m_min, 3); m <= m_hi; ++m) {
          if (m % p == 0) continue;
          for (Family fam : fams) {
            enumerate_shape_coeffs(grid, F, p, h, n, m, fam, [&](Fel a, Fel b, Fel c) {
              CurveSpec spec;
              spec.family = fam;
              spec.field = F;
              spec.n = n;
              spec.m = m;
              spec.a = a;
              spec.b = b;
              spec.c = c;
              curves.push_back(validate(spec));
            });
          }
        }
      }
    }
  }
  return curves;
}

namespace {

std::string modulus_string(const Field& F) {
  std::string s;
  for (std::size_t i = 0; i < F.modulus().size(); ++i) {
    if (i) s += '.';
    s += std::to_string(F.modulus()[i]);
  }
  return s;
}

struct RowOut {
  std::string text;
  bool frobenius_nonclassical = false;
  bool unsupported_infinity = false;
};

RowOut scan_row(const CurveSpec& spec, System system) {
  const Field& F = spec.field;
  RowOut out;
  std::ostringstream os;
  os << F.p() << ',' << F.h() << ',' << modulus_string(F) << ',' << spec.n << ',' << spec.m << ','
     << spec.a << ',' << spec.b << ',';
  if (spec.family == Family::ThreeTerm) os << spec.c;
  os << ',' << system_name(system) << ',';
  ClassificationRecord rec =
      system == System::Lines ? classify_lines(spec) : classify_conics(spec);
  out.frobenius_nonclassical = rec.frobenius == Verdict::Nonclassical;
  os << case_label_name(rec.case_label) << ',' << verdict_name(rec.geometric) << ','
     << verdict_name(rec.frobenius) << ',';
  InfinityProfile prof = infinity_profile(spec);
  if (prof.supported)
    os << count_smooth_model(spec).total;
  else
    out.unsupported_infinity = true;
  os << ',';
  if (auto formula = count_formula(spec)) os << formula->total;
  os << ',';
  BoundReport bounds = sv_bound(spec);
  os << bounds.sv_bound << ',' << bounds.hasse_weil_upper;
  out.text = os.str();
  return out;
}

}  // namespace

ScanSummary run_scan(const ScanGrid& grid, std::ostream& csv, unsigned threads) {
  std::vector<CurveSpec> curves = grid_curves(grid);
  if (curves.size() > grid.budget)
    fail(Errc::BudgetExceeded, "grid enumerates " + std::to_string(curves.size()) +
                                   " curves, budget is " + std::to_string(grid.budget));
  std::vector<System> systems;
  if (grid.system != ScanGrid::SystemSel::Conics) systems.push_back(System::Lines);
  if (grid.system != ScanGrid::SystemSel::Lines) systems.push_back(System::Conics);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  ScanSummary sum;
  sum.curves = curves.size();
  csv << kScanCsvHeader << '\n';

  const std::size_t chunk = 2048;
  for (std::size_t base = 0; base < curves.size(); base += chunk) {
    std::size_t hi = std::min(base + chunk, curves.size());
    std::vector<std::vector<RowOut>> rows(hi - base);
    std::atomic<std::size_t> next{base};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= hi) break;
        std::vector<RowOut>& out = rows[i - base];
        for (System sys : systems) out.push_back(scan_row(curves[i], sys));
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& rowset : rows)
      for (auto& row : rowset) {
        csv << row.text << '\n';
        ++sum.rows;
        if (row.frobenius_nonclassical) ++sum.frobenius_nonclassical_rows;
        if (row.unsupported_infinity) ++sum.unsupported_infinity;
      }
  }
  return sum;
}

}  // namespace genfermat
