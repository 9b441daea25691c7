// genfermat — classify, count, bound, scan, and verify generalized Fermat
// curves over small finite fields.
//
// Exit codes: 0 success, 1 verification failure, 2 validation/parse failure,
// 3 method disagreement, 4 scan budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genfermat/counting.hpp"
#include "genfermat/scan.hpp"
#include "genfermat/serialization.hpp"
#include "genfermat/verify.hpp"
#include "genfermat/wronskian.hpp"

using namespace genfermat;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitBudget = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::BudgetExceeded: return kExitBudget;
    case Errc::MethodDisagreement: return kExitDisagreement;
    default: return kExitValidation;
  }
}

CurveSpec load_curve(const std::string& arg) {
  std::string text = arg;
  std::string path = arg;
  if (!path.empty() && path[0] == '@') path = path.substr(1);
  std::ifstream in(path);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "curve argument is not valid JSON");
  return curve_from_json(j);
}

System parse_system(const std::string& s) {
  if (s == "lines") return System::Lines;
  if (s == "conics") return System::Conics;
  fail(Errc::ParseError, "system must be lines or conics");
}

int cmd_classify(const std::string& curve_arg, const std::string& system_s,
                 const std::string& method_s) {
  CurveSpec spec = load_curve(curve_arg);
  System system = parse_system(system_s);
  auto theorem_record = [&]() {
    return system == System::Lines ? classify_lines(spec) : classify_conics(spec);
  };
  if (method_s == "theorem") {
    std::cout << record_to_json(theorem_record()).dump() << "\n";
    return 0;
  }
  if (method_s == "determinant") {
    DetVerdicts dv = wronskian_verdicts(spec, system);
    ClassificationRecord rec;
    rec.system = system;
    rec.method = Method::Determinant;
    rec.geometric = dv.classical ? Verdict::Classical : Verdict::Nonclassical;
    rec.frobenius = dv.frobenius_classical ? Verdict::Classical : Verdict::Nonclassical;
    std::cout << record_to_json(rec).dump() << "\n";
    return 0;
  }
  if (method_s != "both") fail(Errc::ParseError, "method must be theorem, determinant or both");
  ClassificationRecord rec = theorem_record();
  DetVerdicts dv = wronskian_verdicts(spec, system);
  bool geo_ok = rec.geometric == (dv.classical ? Verdict::Classical : Verdict::Nonclassical);
  bool frob_ok =
      rec.frobenius == (dv.frobenius_classical ? Verdict::Classical : Verdict::Nonclassical);
  if (rec.geometric == Verdict::Undetermined) geo_ok = frob_ok = true;  // p in {3,5}
  if (!geo_ok || !frob_ok) {
    json diag{{"error", "method disagreement"},
              {"theorem", record_to_json(rec)},
              {"determinant",
               json{{"classical", dv.classical}, {"frobenius_classical", dv.frobenius_classical}}}};
    std::cerr << diag.dump() << "\n";
    return kExitDisagreement;
  }
  rec.method = Method::Both;
  std::cout << record_to_json(rec).dump() << "\n";
  return 0;
}

int cmd_count(const std::string& curve_arg, const std::string& method_s) {
  CurveSpec spec = load_curve(curve_arg);
  auto affine_only_report = [&](CountMethod m) {
    CountReport rep;
    rep.method = m;
    rep.affine = count_affine(spec, m);
    rep.infinity_branches = 0;
    rep.total = rep.affine;
    rep.note = "affine only";
    return rep;
  };
  if (method_s == "naive" || method_s == "fast") {
    CountReport rep =
        affine_only_report(method_s == "naive" ? CountMethod::Naive : CountMethod::Fast);
    std::cout << count_report_to_json(rep).dump() << "\n";
    return 0;
  }
  if (method_s == "smooth") {
    if (!infinity_profile(spec).supported) {
      std::cerr << json{{"warning", "UnsupportedInfinity"},
                        {"detail", "m < n with m not dividing n; emitting affine count only"}}
                       .dump()
                << "\n";
      std::cout << count_report_to_json(affine_only_report(CountMethod::Fast)).dump() << "\n";
      return 0;
    }
    std::cout << count_report_to_json(count_smooth_model(spec)).dump() << "\n";
    return 0;
  }
  if (method_s == "formula") {
    auto rep = count_formula(spec);
    if (!rep) fail(Errc::NoFormula, "curve matches no closed-form count case");
    std::cout << count_report_to_json(*rep).dump() << "\n";
    return 0;
  }
  if (method_s != "all") fail(Errc::ParseError, "method must be naive|fast|smooth|formula|all");

  std::uint64_t naive = count_affine(spec, CountMethod::Naive);
  std::uint64_t fast = count_affine(spec, CountMethod::Fast);
  if (naive != fast) {
    std::cerr << json{{"error", "count method disagreement"},
                      {"naive", naive},
                      {"fast", fast}}
                     .dump()
              << "\n";
    return kExitDisagreement;
  }
  bool supported = infinity_profile(spec).supported;
  if (!supported) {
    std::cerr << json{{"warning", "UnsupportedInfinity"},
                      {"detail", "m < n with m not dividing n; emitting affine count only"}}
                     .dump()
              << "\n";
    std::cout << count_report_to_json(affine_only_report(CountMethod::Fast)).dump() << "\n";
    return 0;
  }
  CountReport smooth = count_smooth_model(spec);
  auto formula = count_formula(spec);
  if (formula && formula->total != smooth.total) {
    std::cerr << json{{"error", "count method disagreement"},
                      {"smooth", smooth.total},
                      {"formula", formula->total}}
                     .dump()
              << "\n";
    return kExitDisagreement;
  }
  CountReport rep = smooth;
  if (formula) {
    rep.formula_case = formula->formula_case;
    rep.note = "naive, fast, smooth and formula agree";
  } else {
    rep.note = "naive, fast and smooth agree; no formula case";
  }
  std::cout << count_report_to_json(rep).dump() << "\n";
  return 0;
}

int cmd_bound(const std::string& curve_arg) {
  CurveSpec spec = load_curve(curve_arg);
  std::cout << bound_report_to_json(sv_bound(spec)).dump() << "\n";
  return 0;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoull(item));
  if (out.empty()) fail(Errc::ParseError, "empty list");
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) {
    std::uint32_t v = static_cast<std::uint32_t>(std::stoul(s));
    return {v, v};
  }
  return {static_cast<std::uint32_t>(std::stoul(s.substr(0, pos))),
          static_cast<std::uint32_t>(std::stoul(s.substr(pos + 1)))};
}

int cmd_scan(const std::string& ps, const std::string& hs, const std::string& nrange,
             const std::string& mrange, const std::string& family, const std::string& coeffs,
             const std::string& system, const std::string& out_path, std::uint64_t budget,
             unsigned threads) {
  ScanGrid grid;
  grid.ps = parse_u64_list(ps);
  for (std::uint64_t h : parse_u64_list(hs)) grid.hs.push_back(static_cast<unsigned>(h));
  std::tie(grid.n_min, grid.n_max) = parse_range(nrange);
  std::tie(grid.m_min, grid.m_max) = parse_range(mrange);
  if (family == "two_term")
    grid.family = ScanGrid::FamilySel::TwoTerm;
  else if (family == "three_term")
    grid.family = ScanGrid::FamilySel::ThreeTerm;
  else if (family == "both")
    grid.family = ScanGrid::FamilySel::Both;
  else
    fail(Errc::ParseError, "family must be two_term|three_term|both");
  if (system == "lines")
    grid.system = ScanGrid::SystemSel::Lines;
  else if (system == "conics")
    grid.system = ScanGrid::SystemSel::Conics;
  else if (system == "both")
    grid.system = ScanGrid::SystemSel::Both;
  else
    fail(Errc::ParseError, "system must be lines|conics|both");

  if (coeffs == "all") {
    grid.strategy = ScanGrid::Coeffs::All;
  } else if (coeffs.rfind("subfield:", 0) == 0) {
    grid.strategy = ScanGrid::Coeffs::Subfield;
    grid.subfield_r = static_cast<unsigned>(std::stoul(coeffs.substr(9)));
  } else if (coeffs.rfind("sample:", 0) == 0) {
    grid.strategy = ScanGrid::Coeffs::Sample;
    std::string rest = coeffs.substr(7);
    auto pos = rest.find(':');
    grid.sample_k = std::stoull(rest.substr(0, pos));
    grid.seed = pos == std::string::npos ? 1 : std::stoull(rest.substr(pos + 1));
  } else {
    fail(Errc::ParseError, "coeffs must be all, subfield:R or sample:K:SEED");
  }

  grid.budget = budget;
  if (const char* env = std::getenv("GENFERMAT_BUDGET")) grid.budget = std::stoull(env);

  std::ofstream out(out_path);
  if (!out.good()) fail(Errc::ParseError, "cannot open output file " + out_path);
  ScanSummary sum = run_scan(grid, out, threads);
  std::cout << sum.to_json().dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, unsigned threads, const std::string& inject) {
  VerifyOptions opts;
  opts.threads = threads;
  if (inject == "formula-constant")
    opts.corrupt_formula_constant = true;
  else if (!inject.empty())
    fail(Errc::ParseError, "unknown fault injection '" + inject + "'");
  std::vector<CheckResult> checks = verify_suite(suite, opts);
  bool all_pass = true;
  json out = json::array();
  for (const CheckResult& c : checks) {
    all_pass = all_pass && c.pass;
    std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    out.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Fermat curves over finite fields: classification, counts, bounds"};
  app.set_help_flag("--help", "print help and exit");  // keep --h free for the scan grid
  app.require_subcommand(1);

  std::string curve_arg, system_s = "conics", method_s = "both";
  auto* classify = app.add_subcommand("classify", "classicality / Frobenius classicality");
  classify->add_option("--curve", curve_arg, "curve JSON (inline or @file)")->required();
  classify->add_option("--system", system_s, "lines|conics");
  classify->add_option("--method", method_s, "theorem|determinant|both");

  std::string count_curve, count_method = "all";
  auto* count = app.add_subcommand("count", "rational-point counts");
  count->add_option("--curve", count_curve, "curve JSON (inline or @file)")->required();
  count->add_option("--method", count_method, "naive|fast|smooth|formula|all");

  std::string bound_curve;
  auto* bound = app.add_subcommand("bound", "Stohr-Voloch and Hasse-Weil bounds");
  bound->add_option("--curve", bound_curve, "curve JSON (inline or @file)")->required();

  std::string ps = "7", hs = "1", nrange = "3:8", mrange = "3:8", family = "both",
              coeffs = "subfield:1", scan_system = "conics", out_path;
  std::uint64_t budget = 1000000;
  unsigned threads = 0;
  auto* scan = app.add_subcommand("scan", "parameter-grid scan to CSV");
  scan->add_option("--p", ps, "comma-separated primes");
  scan->add_option("--h", hs, "comma-separated extension degrees");
  scan->add_option("--n", nrange, "n range LO:HI");
  scan->add_option("--m", mrange, "m range LO:HI (rows keep m <= n)");
  scan->add_option("--family", family, "two_term|three_term|both");
  scan->add_option("--coeffs", coeffs, "all | subfield:R | sample:K:SEED");
  scan->add_option("--system", scan_system, "lines|conics|both");
  scan->add_option("--out", out_path, "output CSV path")->required();
  scan->add_option("--budget", budget, "maximum number of curves");
  scan->add_option("--threads", threads, "worker threads (0 = auto)");

  std::string suite = "all", inject;
  unsigned vthreads = 0;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "formulas|classification|bounds|all");
  verify->add_option("--threads", vthreads, "worker threads (0 = auto)");
  verify->add_option("--inject-fault", inject, "self-test fault injection");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(curve_arg, system_s, method_s);
    if (*count) return cmd_count(count_curve, count_method);
    if (*bound) return cmd_bound(bound_curve);
    if (*scan)
      return cmd_scan(ps, hs, nrange, mrange, family, coeffs, scan_system, out_path, budget,
                      threads);
    if (*verify) return cmd_verify(suite, vthreads, inject);
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", errc_name(e.code())}, {"detail", e.what()}}.dump()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "exception"}, {"detail", e.what()}}.dump() << "\n";
    return kExitValidation;
  }
  return 0;
}
