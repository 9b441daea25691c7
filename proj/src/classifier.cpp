#include "genfermat/classifier.hpp"

#include <cassert>

namespace genfermat {

const char* case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::None: return "none";
    case CaseLabel::FermatLines: return "fermat_lines";
    case CaseLabel::FermatConicsA: return "fermat_conics_a";
    case CaseLabel::FermatConicsB: return "fermat_conics_b";
    case CaseLabel::FermatConicsC: return "fermat_conics_c";
    case CaseLabel::FermatConicsD: return "fermat_conics_d";
    case CaseLabel::FermatConicsDTwisted: return "fermat_conics_d_twisted";
    case CaseLabel::FermatConicsE: return "fermat_conics_e";
    case CaseLabel::FermatConicsClN1M2: return "fermat_conics_cl_n1_m2";
    case CaseLabel::FermatConicsClN1Mp1: return "fermat_conics_cl_n1_mp1";
    case CaseLabel::FermatConicsCl2N1M1: return "fermat_conics_cl_2n1_m1";
    case CaseLabel::FermatConicsClNp1M1: return "fermat_conics_cl_np1_m1";
    case CaseLabel::ThreeTermI: return "threeterm_conics_i";
    case CaseLabel::ThreeTermII: return "threeterm_conics_ii";
    case CaseLabel::ThreeTermIII: return "threeterm_conics_iii";
    case CaseLabel::ThreeTermClNp1M1: return "threeterm_conics_cl_np1_m1";
  }
  return "none";
}

std::optional<CaseLabel> case_label_from_name(const std::string& name) {
  static const CaseLabel all[] = {
      CaseLabel::None, CaseLabel::FermatLines, CaseLabel::FermatConicsA, CaseLabel::FermatConicsB,
      CaseLabel::FermatConicsC, CaseLabel::FermatConicsD, CaseLabel::FermatConicsDTwisted,
      CaseLabel::FermatConicsE, CaseLabel::FermatConicsClN1M2, CaseLabel::FermatConicsClN1Mp1,
      CaseLabel::FermatConicsCl2N1M1, CaseLabel::FermatConicsClNp1M1, CaseLabel::ThreeTermI,
      CaseLabel::ThreeTermII, CaseLabel::ThreeTermIII, CaseLabel::ThreeTermClNp1M1};
  for (CaseLabel l : all)
    if (name == case_label_name(l)) return l;
  if (name == "hermitian_q_eq_n_plus_1") return CaseLabel::FermatConicsC;
  return std::nullopt;
}

bool has_identity_family(CaseLabel label) {
  switch (label) {
    case CaseLabel::FermatConicsA:
    case CaseLabel::FermatConicsB:
    case CaseLabel::FermatConicsC:
    case CaseLabel::FermatConicsD:
    case CaseLabel::FermatConicsDTwisted:
    case CaseLabel::FermatConicsE:
    case CaseLabel::FermatConicsClN1M2:
    case CaseLabel::FermatConicsClN1Mp1:
    case CaseLabel::FermatConicsCl2N1M1:
    case CaseLabel::FermatConicsClNp1M1:
    case CaseLabel::ThreeTermI:
    case CaseLabel::ThreeTermII:
    case CaseLabel::ThreeTermIII:
      return true;
    default:
      return false;
  }
}

const char* system_name(System s) { return s == System::Lines ? "lines" : "conics"; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "classical";
    case Verdict::Nonclassical: return "nonclassical";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

/// Residue pattern of an exponent mod p.  For p > 5 at most one can hold.
enum class Pat { None_, One, Two, MinusOne, Half };  // k=1, k=2, k=-1, 2k=1 (mod p)

Pat pat_of(std::uint64_t p, std::uint32_t k) {
  assert(p > 5);
  int matches = 0;
  Pat r = Pat::None_;
  if ((k + p - 1) % p == 0) { r = Pat::One; ++matches; }
  if ((k + p - 2) % p == 0) { r = Pat::Two; ++matches; }
  if ((k + 1) % p == 0) { r = Pat::MinusOne; ++matches; }
  if ((2ull * k + p - 1) % p == 0) { r = Pat::Half; ++matches; }
  assert(matches <= 1);  // the four patterns are pairwise exclusive for p > 5
  return r;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

struct RSearch {
  const Field& F;
  explicit RSearch(const Field& F_) : F(F_) {}

  /// First r < h with r | h satisfying pred(r, p^r), if any.
  template <typename Pred>
  std::optional<unsigned> divisor_r(Pred pred) const {
    for (unsigned r = 1; r < F.h(); ++r) {
      if (F.h() % r) continue;
      if (pred(r, pow_u64(F.p(), r))) return r;
    }
    return std::nullopt;
  }
  /// First r with 2r | h satisfying pred(r, p^r), if any.
  template <typename Pred>
  std::optional<unsigned> half_r(Pred pred) const {
    for (unsigned r = 1; 2 * r <= F.h(); ++r) {
      if (F.h() % (2 * r)) continue;
      if (pred(r, pow_u64(F.p(), r))) return r;
    }
    return std::nullopt;
  }
};

bool fixed_by(const Field& F, Fel d, std::uint64_t pr) { return F.pow(d, pr) == d; }

}  // namespace

ClassificationRecord classify_lines(const CurveSpec& spec) {
  const Field& F = spec.field;
  if (F.p() == 2) fail(Errc::UnsupportedCharacteristic, "lines classification needs p > 2");
  ClassificationRecord rec;
  rec.system = System::Lines;
  rec.method = Method::Theorem;
  if (spec.family == Family::ThreeTerm) {
    rec.geometric = Verdict::Classical;
    rec.frobenius = Verdict::Classical;
    return rec;
  }
  const std::uint64_t p = F.p(), q = F.q();
  bool geo_nc = (spec.n % p == 1) && (spec.m % p == 1);
  rec.geometric = geo_nc ? Verdict::Nonclassical : Verdict::Classical;
  rec.frobenius = Verdict::Classical;
  if (spec.n == spec.m) {
    RSearch rs(F);
    auto r = rs.divisor_r([&](unsigned r_, std::uint64_t pr) {
      (void)r_;
      return static_cast<std::uint64_t>(spec.n) * (pr - 1) == q - 1 && fixed_by(F, spec.a, pr) &&
             fixed_by(F, spec.b, pr);
    });
    if (r) {
      rec.frobenius = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatLines;
      rec.r = *r;
    }
  }
  return rec;
}

ClassificationRecord classify_conics(const CurveSpec& spec) {
  const Field& F = spec.field;
  const std::uint64_t p = F.p(), q = F.q();
  if (p == 2) fail(Errc::UnsupportedCharacteristic, "conics classification needs odd p");
  ClassificationRecord rec;
  rec.system = System::Conics;
  rec.method = Method::Theorem;
  if (p <= 5) return rec;  // Undetermined for p in {3, 5}

  Pat pn = pat_of(p, spec.n), pm = pat_of(p, spec.m);
  RSearch rs(F);
  const std::uint64_t n = spec.n, m = spec.m;
  const Fel a = spec.a, b = spec.b, c = spec.c;

  rec.geometric = Verdict::Classical;
  rec.frobenius = Verdict::Classical;

  if (spec.family == Family::TwoTerm) {
    if (pn == Pat::Two && pm == Pat::Two) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsA;
      if (n == m) {
        auto r = rs.divisor_r([&](unsigned, std::uint64_t pr) {
          return n * (pr - 1) == 2 * (q - 1) && fixed_by(F, a, pr) && fixed_by(F, b, pr);
        });
        if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
      }
    } else if (pn == Pat::MinusOne && pm == Pat::MinusOne) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsC;
      if (n == m && q == n + 1 && F.add(a, b) == 1) rec.frobenius = Verdict::Nonclassical;
    } else if (pn == Pat::Half && pm == Pat::Half) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsB;
      if (n == m) {
        auto r = rs.divisor_r([&](unsigned, std::uint64_t pr) {
          return 2 * n * (pr - 1) == q - 1 && fixed_by(F, F.mul(a, a), pr) &&
                 fixed_by(F, F.mul(b, b), pr);
        });
        if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
      }
    } else if (pn == Pat::One && pm == Pat::One) {
      // doubly line-nonclassical: Frobenius nonclassical for conics outright
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatLines;
      rec.frobenius = Verdict::Nonclassical;
    } else if (pn == Pat::One && pm == Pat::Half) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsD;
      if (n == 2 * m) {
        auto r = rs.divisor_r([&](unsigned, std::uint64_t pr) {
          return n * (pr - 1) == q - 1 && fixed_by(F, a, pr) && fixed_by(F, b, pr);
        });
        if (r) {
          rec.frobenius = Verdict::Nonclassical;
          rec.r = *r;
        } else {
          auto rt = rs.half_r([&](unsigned, std::uint64_t pr) {
            return n * (pr - 1) == q - 1 && fixed_by(F, a, pr) && F.pow(b, pr) == F.neg(b);
          });
          if (rt) {
            rec.frobenius = Verdict::Nonclassical;
            rec.case_label = CaseLabel::FermatConicsDTwisted;
            rec.r = *rt;
          }
        }
      }
    } else if (pn == Pat::Two && pm == Pat::One) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsE;
      if (n == 2 * m) {
        auto r = rs.divisor_r([&](unsigned, std::uint64_t pr) {
          return n * (pr - 1) == 2 * (q - 1) && fixed_by(F, a, pr) && fixed_by(F, b, pr);
        });
        if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
      }
    } else if (pn == Pat::One && pm == Pat::Two) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsClN1M2;
    } else if (pn == Pat::One && pm == Pat::MinusOne) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsClN1Mp1;
    } else if (pn == Pat::Half && pm == Pat::One) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsCl2N1M1;
    } else if (pn == Pat::MinusOne && pm == Pat::One) {
      rec.geometric = Verdict::Nonclassical;
      rec.case_label = CaseLabel::FermatConicsClNp1M1;
    }
    return rec;
  }

  // ThreeTerm
  if (pn == Pat::One && pm == Pat::One) {
    rec.geometric = Verdict::Nonclassical;
    rec.case_label = CaseLabel::ThreeTermI;
    if (n == m) {
      auto r = rs.divisor_r([&](unsigned, std::uint64_t pr) {
        return n * (pr - 1) == q - 1 && fixed_by(F, a, pr) && fixed_by(F, b, pr) &&
               fixed_by(F, c, pr);
      });
      if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
    }
  } else if (pn == Pat::One && pm == Pat::MinusOne) {
    rec.geometric = Verdict::Nonclassical;
    rec.case_label = CaseLabel::ThreeTermII;
    auto r = rs.half_r([&](unsigned, std::uint64_t pr) {
      return n * (pr - 1) == q - 1 && m * (pr + 1) == q - 1 &&
             F.mul(c, F.pow(a, pr)) == F.neg(b) && F.mul(c, F.pow(b, pr)) == F.neg(a) &&
             F.pow(c, pr + 1) == 1;
    });
    if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
  } else if (pn == Pat::MinusOne && pm == Pat::One) {
    rec.geometric = Verdict::Nonclassical;
    rec.case_label = CaseLabel::ThreeTermClNp1M1;
  } else if (pn == Pat::MinusOne && pm == Pat::MinusOne) {
    rec.geometric = Verdict::Nonclassical;
    rec.case_label = CaseLabel::ThreeTermIII;
    if (n == m) {
      // boundary n = m = q-1: the identity polynomial collapses to
      // (a + b + c - 1) x^q y^q, so the condition is a + b + c = 1
      if (n + 1 == q && F.add(F.add(a, b), c) == 1) {
        rec.frobenius = Verdict::Nonclassical;
      } else {
        auto r = rs.half_r([&](unsigned, std::uint64_t pr) {
          return n * (pr + 1) == q - 1 && F.mul(a, F.pow(c, pr)) == F.neg(b) &&
                 F.pow(a, pr + 1) == 1 && F.mul(a, F.pow(b, pr)) == F.neg(c);
        });
        if (r) { rec.frobenius = Verdict::Nonclassical; rec.r = *r; }
      }
    }
  }
  return rec;
}

namespace {

void require_pattern(const CurveSpec& spec, CaseLabel label) {
  const std::uint64_t p = spec.field.p();
  if (p <= 5) fail(Errc::UnsupportedCharacteristic, "identity families need p > 5");
  Pat pn = pat_of(p, spec.n), pm = pat_of(p, spec.m);
  Family fam = spec.family;
  auto want = [&](Family f, Pat wn, Pat wm) { return fam == f && pn == wn && pm == wm; };
  bool ok = false;
  switch (label) {
    case CaseLabel::FermatConicsA: ok = want(Family::TwoTerm, Pat::Two, Pat::Two); break;
    case CaseLabel::FermatConicsB: ok = want(Family::TwoTerm, Pat::Half, Pat::Half); break;
    case CaseLabel::FermatConicsC: ok = want(Family::TwoTerm, Pat::MinusOne, Pat::MinusOne); break;
    case CaseLabel::FermatConicsD:
    case CaseLabel::FermatConicsDTwisted: ok = want(Family::TwoTerm, Pat::One, Pat::Half); break;
    case CaseLabel::FermatConicsE: ok = want(Family::TwoTerm, Pat::Two, Pat::One); break;
    case CaseLabel::FermatConicsClN1M2: ok = want(Family::TwoTerm, Pat::One, Pat::Two); break;
    case CaseLabel::FermatConicsClN1Mp1: ok = want(Family::TwoTerm, Pat::One, Pat::MinusOne); break;
    case CaseLabel::FermatConicsCl2N1M1: ok = want(Family::TwoTerm, Pat::Half, Pat::One); break;
    case CaseLabel::FermatConicsClNp1M1: ok = want(Family::TwoTerm, Pat::MinusOne, Pat::One); break;
    case CaseLabel::ThreeTermI: ok = want(Family::ThreeTerm, Pat::One, Pat::One); break;
    case CaseLabel::ThreeTermII: ok = want(Family::ThreeTerm, Pat::One, Pat::MinusOne); break;
    case CaseLabel::ThreeTermIII: ok = want(Family::ThreeTerm, Pat::MinusOne, Pat::MinusOne); break;
    default: ok = false; break;
  }
  if (!ok)
    fail(Errc::CaseMismatch,
         std::string("case ") + case_label_name(label) + " does not match this curve");
}

}  // namespace

BiPoly identity_polynomial(const CurveSpec& spec, CaseLabel label) {
  if (!has_identity_family(label))
    fail(Errc::CaseMismatch, std::string("no identity family for ") + case_label_name(label));
  require_pattern(spec, label);
  const Field& F = spec.field;
  const std::uint32_t q = static_cast<std::uint32_t>(F.q());
  const std::uint32_t n = spec.n, m = spec.m;
  const Fel a = spec.a, b = spec.b, c = spec.c;
  const Fel one = 1, neg1 = F.neg(1), two = F.from_int(2);
  BiPoly g;
  auto add = [&](Fel cf, std::uint32_t i, std::uint32_t j) { bp_add_term(F, g, cf, i, j); };
  switch (label) {
    case CaseLabel::FermatConicsA:
      add(a, n - 2 + 2 * q, 0); add(b, 0, m - 2 + 2 * q); add(neg1, 0, 0);
      break;
    case CaseLabel::FermatConicsB: {
      Fel a2 = F.mul(a, a), b2 = F.mul(b, b);
      add(F.mul(a2, a2), 4 * n - 2 + 2 * q, 0);
      add(F.mul(b2, b2), 0, 4 * m - 2 + 2 * q);
      add(one, 0, 0);
      add(F.neg(F.mul(two, F.mul(a2, b2))), 2 * n - 1 + q, 2 * m - 1 + q);
      add(F.neg(F.mul(two, a2)), 2 * n - 1 + q, 0);
      add(F.neg(F.mul(two, b2)), 0, 2 * m - 1 + q);
      break;
    }
    case CaseLabel::FermatConicsC:
      add(a, n + 1, q); add(b, q, m + 1); add(neg1, q, q);
      break;
    case CaseLabel::FermatConicsD:
    case CaseLabel::FermatConicsDTwisted:
      add(F.mul(b, b), 0, 2 * m - 1 + q);
      add(F.neg(F.mul(a, a)), 2 * n - 2 + 2 * q, 0);
      add(F.mul(two, a), n - 1 + q, 0);
      add(neg1, 0, 0);
      break;
    case CaseLabel::FermatConicsE:
      add(a, n - 2 + 2 * q, 0); add(b, 0, m - 1 + q); add(neg1, 0, 0);
      break;
    case CaseLabel::FermatConicsClN1M2:
      add(a, n - 1 + q, 0); add(b, 0, m - 2 + 2 * q); add(neg1, 0, 0);
      break;
    case CaseLabel::FermatConicsClN1Mp1:
      add(a, n - 1 + q, q); add(b, 0, m + 1); add(neg1, 0, q);
      break;
    case CaseLabel::FermatConicsCl2N1M1:
      add(F.mul(a, a), 2 * n - 1 + q, 0);
      add(F.neg(F.mul(b, b)), 0, 2 * m - 2 + 2 * q);
      add(F.mul(two, b), 0, m - 1 + q);
      add(neg1, 0, 0);
      break;
    case CaseLabel::FermatConicsClNp1M1:
      add(b, q, m - 1 + q); add(a, n + 1, 0); add(neg1, q, 0);
      break;
    case CaseLabel::ThreeTermI:
      add(a, n - 1 + q, m - 1 + q); add(b, n - 1 + q, 0); add(c, 0, m - 1 + q); add(neg1, 0, 0);
      break;
    case CaseLabel::ThreeTermII:
      add(a, n - 1 + q, m + 1); add(b, n - 1 + q, q); add(c, 0, m + 1); add(neg1, 0, q);
      break;
    case CaseLabel::ThreeTermIII:
      add(a, n + 1, m + 1); add(b, n + 1, q); add(c, q, m + 1); add(neg1, q, q);
      break;
    default:
      fail(Errc::CaseMismatch, "unreachable");
  }
  return g;
}

bool identity_check(const CurveSpec& spec, CaseLabel label) {
  CurveSpec wide = spec;
  // identity polynomials and their reductions stay well under this bound
  wide.degree_cap = static_cast<std::uint32_t>(16 * spec.field.q() + 64u * (spec.n + spec.m + 8));
  return ff_is_zero(identity_polynomial(wide, label), wide);
}

}  // namespace genfermat
