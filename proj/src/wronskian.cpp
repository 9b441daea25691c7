#include "genfermat/wronskian.hpp"

#include <cassert>

namespace genfermat {

BasisSystem basis_for(System system) {
  BasisSystem b;
  b.system = system;
  if (system == System::Lines) {
    b.monomials = {{0, 0}, {1, 0}, {0, 1}};
    b.M = 2;
  } else {
    b.monomials = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    b.M = 5;
  }
  return b;
}

namespace {

struct DetEngine {
  const CurveSpec& spec;
  const Field& F;
  BasisSystem basis;
  unsigned M;
  unsigned ncols;
  UPoly u, v, vp;   // y' = (u/v) y; vp = v'
  UPoly gnum, lead; // y^m = gnum/lead

  DetEngine(const CurveSpec& s, System system) : spec(s), F(s.field), basis(basis_for(system)) {
    M = basis.M;
    ncols = M + 1;
    if (F.p() <= M)
      fail(Errc::UnsupportedCharacteristic,
           "determinant needs p > M (p = " + std::to_string(F.p()) + ")");
    Fel nf = F.from_int(static_cast<std::int64_t>(spec.n % F.p()));
    Fel mf = F.from_int(static_cast<std::int64_t>(spec.m % F.p()));
    if (nf == 0 || mf == 0)
      fail(Errc::InseparableVariable, "p divides an exponent");
    if (spec.family == Family::TwoTerm) {
      u = up_monomial(F.neg(F.mul(nf, spec.a)), spec.n - 1);
      v = up_scale(F, up_sub(F, up_const(1), up_monomial(spec.a, spec.n)), mf);
    } else {
      u = up_monomial(F.neg(F.mul(nf, F.add(spec.a, F.mul(spec.b, spec.c)))), spec.n - 1);
      UPoly d1 = up_sub(F, up_const(1), up_monomial(spec.b, spec.n));
      UPoly d2 = up_add(F, up_monomial(spec.a, spec.n), up_const(spec.c));
      v = up_scale(F, up_mul(F, d1, d2), mf);
    }
    vp = up_derivative(F, v);
    gnum = curve_ym_numer(spec);
    lead = curve_lead_y(spec);
  }

  // rows[k][c] represents D^(k) phi_c = rows[k][c]/v^k * y^(w_c)
  std::vector<std::vector<UPoly>> derivative_rows(unsigned upto,
                                                  const testing::DetTweaks& tweaks) const {
    std::vector<std::vector<UPoly>> rows(upto + 1, std::vector<UPoly>(ncols));
    for (unsigned c = 0; c < ncols; ++c) {
      Fel scale = tweaks.column_scales.empty() ? 1 : tweaks.column_scales[c];
      rows[0][c] = up_scale(F, up_monomial(1, basis.monomials[c].first), scale);
    }
    for (unsigned k = 0; k + 1 <= upto; ++k) {
      Fel invk = F.inv(F.from_int(static_cast<std::int64_t>(k + 1)));
      for (unsigned c = 0; c < ncols; ++c) {
        const UPoly& P = rows[k][c];
        std::uint32_t w = basis.monomials[c].second;
        // P_{k+1} = (P' v - k P v' + w u P) / (k+1)
        UPoly t = up_mul(F, up_derivative(F, P), v);
        if (k) t = up_sub(F, t, up_scale(F, up_mul(F, P, vp), F.from_int(static_cast<std::int64_t>(k))));
        if (w) t = up_add(F, t, up_scale(F, up_mul(F, u, P), F.from_int(static_cast<std::int64_t>(w))));
        rows[k + 1][c] = up_scale(F, t, invk);
      }
    }
    if (tweaks.row_op_lambda && upto >= 1) {
      // replace D^(1) by D^(1) + lambda D^(0); rows are stored v^k-scaled,
      // so the added multiple carries a factor v
      for (unsigned c = 0; c < ncols; ++c)
        rows[1][c] =
            up_add(F, rows[1][c], up_scale(F, up_mul(F, rows[0][c], v), *tweaks.row_op_lambda));
    }
    return rows;
  }

  // minors over rows 0..M-1 for every column subset of size M
  // mask-indexed DP; minor(mask, k rows) for popcount(mask) == k
  std::vector<UPoly> row_minors(const std::vector<std::vector<UPoly>>& rows) const {
    const unsigned full = (1u << ncols) - 1;
    std::vector<UPoly> minor(full + 1);
    minor[0] = up_const(1);
    // masks in increasing popcount order
    for (unsigned k = 1; k <= M; ++k) {
      for (unsigned mask = 1; mask <= full; ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
        UPoly acc;
        unsigned pos = 0;
        for (unsigned c = 0; c < ncols; ++c) {
          if (!(mask & (1u << c))) continue;
          const UPoly& e = rows[k - 1][c];
          if (!e.is_zero()) {
            const UPoly& sub = minor[mask & ~(1u << c)];
            if (!sub.is_zero()) {
              UPoly t = up_mul(F, e, sub);
              bool negate = ((k - 1) + pos) & 1u;
              acc = negate ? up_sub(F, acc, t) : up_add(F, acc, t);
            }
          }
          ++pos;
        }
        minor[mask] = std::move(acc);
      }
    }
    return minor;
  }

  std::uint32_t weight_total() const {
    std::uint32_t w = 0;
    for (auto& mono : basis.monomials) w += mono.second;
    return w;
  }

  struct Computed {
    std::vector<std::vector<UPoly>> rows;
    std::vector<UPoly> minors;
  };

  Computed build(const testing::DetTweaks& tweaks) const {
    Computed c;
    c.rows = derivative_rows(M, tweaks);
    c.minors = row_minors(c.rows);
    return c;
  }

  bool geometric_nonzero(const testing::DetTweaks& tweaks) const {
    return geometric_nonzero(build(tweaks));
  }

  bool frobenius_nonzero(const testing::DetTweaks& tweaks) const {
    return frobenius_nonzero(build(tweaks), tweaks);
  }

  bool geometric_nonzero(const Computed& comp) const {
    const auto& rows = comp.rows;
    const auto& minor = comp.minors;
    const unsigned full = (1u << ncols) - 1;
    UPoly det;
    for (unsigned c = 0; c < ncols; ++c) {
      const UPoly& e = rows[M][c];
      if (e.is_zero()) continue;
      const UPoly& sub = minor[full & ~(1u << c)];
      if (sub.is_zero()) continue;
      UPoly t = up_mul(F, e, sub);
      bool negate = (M + c) & 1u;
      det = negate ? up_sub(F, det, t) : up_add(F, det, t);
    }
    return !det.is_zero();
  }

  bool frobenius_nonzero(const Computed& comp, const testing::DetTweaks& tweaks) const {
    const auto& minor = comp.minors;
    const unsigned full = (1u << ncols) - 1;
    const std::uint64_t q = F.q();
    const std::uint32_t m = spec.m, wtot = weight_total();

    // q-power row: phi_c^q = x^(q a_c) y^(q w_c) = x^(q a_c) gnum^(k_c) / lead^(k_c) * y^(j_c)
    struct QEntry {
      UPoly poly;
      std::uint32_t ypow;
      std::uint32_t lead_pow;
    };
    std::vector<QEntry> qrow(ncols);
    std::uint32_t kmax = 0;
    for (unsigned c = 0; c < ncols; ++c) {
      std::uint64_t yq = q * basis.monomials[c].second;
      std::uint32_t k = static_cast<std::uint32_t>(yq / m);
      kmax = std::max(kmax, k);
      qrow[c].ypow = static_cast<std::uint32_t>(yq % m);
      qrow[c].lead_pow = k;
      Fel scale = tweaks.column_scales.empty() ? 1 : F.pow(tweaks.column_scales[c], q);
      UPoly base = up_shift(up_pow(F, gnum, k), static_cast<std::uint32_t>(q * basis.monomials[c].first));
      qrow[c].poly = up_scale(F, base, scale);
    }

    // det * lead^kmax = sum_c (-1)^c qrow[c].poly * lead^(kmax - k_c) * minor_c * y^(J_c)
    // with J_c = j_c + (wtot - w_c); reduce the y powers once more and sum
    // per residue with a second common lead denominator.
    std::vector<UPoly> terms(ncols);
    std::vector<std::uint32_t> Jred(ncols, 0), k2(ncols, 0);
    std::uint32_t k2max = 0;
    for (unsigned c = 0; c < ncols; ++c) {
      const UPoly& sub = minor[full & ~(1u << c)];
      if (qrow[c].poly.is_zero() || sub.is_zero()) continue;
      UPoly t = up_mul(F, qrow[c].poly, sub);
      if (kmax > qrow[c].lead_pow) t = up_mul(F, t, up_pow(F, lead, kmax - qrow[c].lead_pow));
      std::uint32_t J = qrow[c].ypow + (wtot - basis.monomials[c].second);
      Jred[c] = J % m;
      k2[c] = J / m;
      k2max = std::max(k2max, k2[c]);
      terms[c] = std::move(t);
    }
    std::vector<UPoly> bucket(m);
    for (unsigned c = 0; c < ncols; ++c) {
      if (terms[c].is_zero()) continue;
      UPoly t = std::move(terms[c]);
      if (k2[c]) t = up_mul(F, t, up_pow(F, gnum, k2[c]));
      if (k2max > k2[c]) t = up_mul(F, t, up_pow(F, lead, k2max - k2[c]));
      bool negate = c & 1u;
      bucket[Jred[c]] = negate ? up_sub(F, bucket[Jred[c]], t) : up_add(F, bucket[Jred[c]], t);
    }
    for (auto& bpoly : bucket)
      if (!bpoly.is_zero()) return true;
    return false;
  }
};

}  // namespace

bool is_classical_det(const CurveSpec& spec, System system) {
  return DetEngine(spec, system).geometric_nonzero(testing::DetTweaks{});
}

bool is_frobenius_classical_det(const CurveSpec& spec, System system) {
  return DetEngine(spec, system).frobenius_nonzero(testing::DetTweaks{});
}

DetVerdicts wronskian_verdicts(const CurveSpec& spec, System system) {
  DetEngine engine(spec, system);
  auto comp = engine.build(testing::DetTweaks{});
  DetVerdicts v;
  v.classical = engine.geometric_nonzero(comp);
  v.frobenius_classical = engine.frobenius_nonzero(comp, testing::DetTweaks{});
  return v;
}

namespace testing {
bool classical_det_nonzero(const CurveSpec& spec, System system, const DetTweaks& tweaks) {
  return DetEngine(spec, system).geometric_nonzero(tweaks);
}
bool frobenius_det_nonzero(const CurveSpec& spec, System system, const DetTweaks& tweaks) {
  return DetEngine(spec, system).frobenius_nonzero(tweaks);
}
}  // namespace testing

Fel conic_eval(const Field& F, const Conic& conic, Fel X, Fel Y, Fel Z) {
  Fel r = 0;
  r = F.add(r, F.mul(conic.coef[0], F.mul(X, X)));
  r = F.add(r, F.mul(conic.coef[1], F.mul(Y, Y)));
  r = F.add(r, F.mul(conic.coef[2], F.mul(Z, Z)));
  r = F.add(r, F.mul(conic.coef[3], F.mul(X, Y)));
  r = F.add(r, F.mul(conic.coef[4], F.mul(X, Z)));
  r = F.add(r, F.mul(conic.coef[5], F.mul(Y, Z)));
  return r;
}

namespace {

Conic table_conic(const CurveSpec& spec, CaseLabel matched, Fel u, Fel v) {
  const Field& F = spec.field;
  const std::uint32_t n = spec.n, m = spec.m;
  const Fel a = spec.a, b = spec.b, c = spec.c;
  const Fel neg1 = F.neg(1), two = F.from_int(2);
  auto up = [&](std::uint32_t e) { return F.pow(u, e); };
  auto vp = [&](std::uint32_t e) { return F.pow(v, e); };
  Conic H;
  auto set = [&](Fel x2, Fel y2, Fel z2, Fel xy, Fel xz, Fel yz) {
    H.coef = {x2, y2, z2, xy, xz, yz};
  };
  switch (matched) {
    case CaseLabel::FermatConicsA:
      set(F.mul(a, up(n - 2)), F.mul(b, vp(m - 2)), neg1, 0, 0, 0);
      break;
    case CaseLabel::FermatConicsC:
      set(0, 0, 0, neg1, F.mul(b, vp(m + 1)), F.mul(a, up(n + 1)));
      break;
    case CaseLabel::FermatConicsB: {
      Fel a2 = F.mul(a, a), b2 = F.mul(b, b);
      set(F.mul(F.mul(a2, a2), up(4 * n - 2)), F.mul(F.mul(b2, b2), vp(4 * m - 2)), 1,
          F.neg(F.mul(two, F.mul(F.mul(a2, b2), F.mul(up(2 * n - 1), vp(2 * m - 1))))),
          F.neg(F.mul(two, F.mul(a2, up(2 * n - 1)))), F.neg(F.mul(two, F.mul(b2, vp(2 * m - 1)))));
      break;
    }
    case CaseLabel::FermatConicsD:
    case CaseLabel::FermatConicsDTwisted: {
      Fel a2 = F.mul(a, a), b2 = F.mul(b, b);
      set(F.neg(F.mul(a2, up(2 * n - 2))), 0, neg1, 0, F.mul(two, F.mul(a, up(n - 1))),
          F.mul(b2, vp(2 * m - 1)));
      break;
    }
    case CaseLabel::FermatConicsClN1Mp1:
      set(0, 0, F.mul(b, vp(m + 1)), F.mul(a, up(n - 1)), 0, neg1);
      break;
    case CaseLabel::FermatConicsClN1M2:
      set(0, F.mul(b, vp(m - 2)), neg1, 0, F.mul(a, up(n - 1)), 0);
      break;
    case CaseLabel::FermatConicsE:
      set(F.mul(a, up(n - 2)), 0, neg1, 0, 0, F.mul(b, vp(m - 1)));
      break;
    case CaseLabel::FermatConicsCl2N1M1: {
      Fel a2 = F.mul(a, a), b2 = F.mul(b, b);
      set(0, F.neg(F.mul(b2, vp(2 * m - 2))), neg1, 0, F.mul(a2, up(2 * n - 1)),
          F.mul(two, F.mul(b, vp(m - 1))));
      break;
    }
    case CaseLabel::FermatConicsClNp1M1:
      set(0, 0, F.mul(a, up(n + 1)), F.mul(b, vp(m - 1)), neg1, 0);
      break;
    case CaseLabel::ThreeTermI:
      set(0, 0, neg1, F.mul(a, F.mul(up(n - 1), vp(m - 1))), F.mul(b, up(n - 1)),
          F.mul(c, vp(m - 1)));
      break;
    case CaseLabel::ThreeTermII:
      set(0, 0, F.mul(c, vp(m + 1)), F.mul(b, up(n - 1)), F.mul(a, F.mul(up(n - 1), vp(m + 1))),
          neg1);
      break;
    case CaseLabel::ThreeTermClNp1M1:
      set(0, 0, F.mul(b, up(n + 1)), F.mul(c, vp(m - 1)), neg1,
          F.mul(a, F.mul(up(n + 1), vp(m - 1))));
      break;
    case CaseLabel::ThreeTermIII:
      set(0, 0, F.mul(a, F.mul(up(n + 1), vp(m + 1))), neg1, F.mul(c, vp(m + 1)),
          F.mul(b, up(n + 1)));
      break;
    default:
      fail(Errc::CaseMismatch, "no osculating table row for this case");
  }
  return H;
}

CaseLabel matched_table_case(const CurveSpec& spec, CaseLabel label) {
  ClassificationRecord rec = classify_conics(spec);
  if (rec.geometric != Verdict::Nonclassical)
    fail(Errc::CaseMismatch, "curve is not geometrically nonclassical for conics");
  CaseLabel matched = rec.case_label;
  bool label_ok = matched == label ||
                  (matched == CaseLabel::FermatConicsD && label == CaseLabel::FermatConicsDTwisted) ||
                  (matched == CaseLabel::FermatConicsDTwisted && label == CaseLabel::FermatConicsD);
  if (!label_ok || matched == CaseLabel::FermatLines)
    fail(Errc::CaseMismatch, std::string("no osculating table row for ") + case_label_name(label) +
                                 " on this curve");
  return matched;
}

}  // namespace

Conic osculating_conic(const CurveSpec& spec, CaseLabel label, Fel u, Fel v) {
  CaseLabel matched = matched_table_case(spec, label);
  if (u == 0 || v == 0) fail(Errc::AxisPoint, "osculating table needs u v != 0");
  if (!on_curve(spec, u, v)) fail(Errc::PointNotOnCurve, "point does not satisfy the curve");
  return table_conic(spec, matched, u, v);
}

IncidenceReport frobenius_incidence_scan(const CurveSpec& spec, CaseLabel label) {
  const Field& F = spec.field;
  CaseLabel matched = matched_table_case(spec, label);
  IncidenceReport rep;
  const std::uint64_t q = F.q();
  std::vector<Fel> xn(q), ym(q), frob(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    xn[i] = F.pow(static_cast<Fel>(i), spec.n);
    ym[i] = F.pow(static_cast<Fel>(i), spec.m);
    frob[i] = F.pow(static_cast<Fel>(i), q);
  }
  for (std::uint64_t ui = 1; ui < q; ++ui) {
    Fel u = static_cast<Fel>(ui);
    for (std::uint64_t vi = 1; vi < q; ++vi) {
      Fel v = static_cast<Fel>(vi);
      Fel lhs = spec.family == Family::TwoTerm
                    ? F.add(F.mul(spec.a, xn[ui]), F.mul(spec.b, ym[vi]))
                    : F.add(F.mul(spec.a, F.mul(xn[ui], ym[vi])),
                            F.add(F.mul(spec.b, xn[ui]), F.mul(spec.c, ym[vi])));
      if (lhs != 1) continue;
      Conic H = table_conic(spec, matched, u, v);
      ++rep.points;
      if (conic_eval(F, H, frob[ui], frob[vi], 1) == 0) ++rep.hits;
    }
  }
  return rep;
}

}  // namespace genfermat
