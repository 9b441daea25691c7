#include <doctest.h>

#include "genfermat/classifier.hpp"

using namespace genfermat;

namespace {

CurveSpec two_term(std::uint64_t p, unsigned h, std::uint32_t n, std::uint32_t m, Fel a, Fel b) {
  CurveSpec s;
  s.family = Family::TwoTerm;
  s.field = Field::make(p, h);
  s.n = n;
  s.m = m;
  s.a = a;
  s.b = b;
  return validate(s);
}

CurveSpec three_term(std::uint64_t p, unsigned h, std::uint32_t n, std::uint32_t m, Fel a, Fel b,
                     Fel c) {
  CurveSpec s;
  s.family = Family::ThreeTerm;
  s.field = Field::make(p, h);
  s.n = n;
  s.m = m;
  s.a = a;
  s.b = b;
  s.c = c;
  return validate(s);
}

}  // namespace

TEST_CASE("lines: Frobenius nonclassical Fermat quartic over GF(9)") {
  CurveSpec spec = two_term(3, 2, 4, 4, 1, 1);  // n = (9-1)/(3-1) = 4
  ClassificationRecord rec = classify_lines(spec);
  CHECK(rec.geometric == Verdict::Nonclassical);  // 4 = 1 mod 3
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::FermatLines);
  REQUIRE(rec.r.has_value());
  CHECK(*rec.r == 1);
}

TEST_CASE("lines: classical cases") {
  ClassificationRecord rec = classify_lines(two_term(7, 1, 3, 3, 1, 1));
  CHECK(rec.geometric == Verdict::Classical);
  CHECK(rec.frobenius == Verdict::Classical);
  // three-term curves are always classical for lines
  ClassificationRecord r3 = classify_lines(three_term(7, 2, 8, 8, 1, 1, 1));
  CHECK(r3.geometric == Verdict::Classical);
  CHECK(r3.frobenius == Verdict::Classical);
  // coefficient outside the subfield breaks Frobenius nonclassicality
  Field F9 = Field::make(3, 2);
  Fel outside = 0;
  for (std::uint64_t d = 2; d < 9; ++d)
    if (F9.pow(static_cast<Fel>(d), 3) != static_cast<Fel>(d)) {
      outside = static_cast<Fel>(d);
      break;
    }
  ClassificationRecord r9 = classify_lines(two_term(3, 2, 4, 4, outside, 1));
  CHECK(r9.geometric == Verdict::Nonclassical);
  CHECK(r9.frobenius == Verdict::Classical);
}

TEST_CASE("conics: case b quartic over GF(49)") {
  ClassificationRecord rec = classify_conics(two_term(7, 2, 4, 4, 1, 1));
  CHECK(rec.geometric == Verdict::Nonclassical);
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::FermatConicsB);
  REQUIRE(rec.r.has_value());
  CHECK(*rec.r == 1);
}

TEST_CASE("conics: three-term case i over GF(49)") {
  ClassificationRecord rec = classify_conics(three_term(7, 2, 8, 8, 1, 1, 1));
  CHECK(rec.geometric == Verdict::Nonclassical);
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::ThreeTermI);
  CHECK(*rec.r == 1);
}

TEST_CASE("conics: fully classical example") {
  ClassificationRecord rec = classify_conics(two_term(7, 2, 5, 5, 1, 1));
  CHECK(rec.geometric == Verdict::Classical);
  CHECK(rec.frobenius == Verdict::Classical);
  CHECK(rec.case_label == CaseLabel::None);
}

TEST_CASE("conics: hermitian-type case over GF(7)") {
  ClassificationRecord rec = classify_conics(two_term(7, 1, 6, 6, 3, 5));  // a + b = 1
  CHECK(rec.geometric == Verdict::Nonclassical);
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::FermatConicsC);
  ClassificationRecord off = classify_conics(two_term(7, 1, 6, 6, 3, 3));  // a + b != 1
  CHECK(off.frobenius == Verdict::Classical);
}

TEST_CASE("conics: doubly-line-nonclassical pattern is Frobenius nonclassical") {
  ClassificationRecord rec = classify_conics(two_term(7, 2, 8, 8, 1, 1));
  CHECK(rec.geometric == Verdict::Nonclassical);
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::FermatLines);
}

TEST_CASE("conics: twisted coefficient branch of case d") {
  Field F49 = Field::make(7, 2);
  Fel btw = 0;
  for (std::uint64_t d = 1; d < 49; ++d)
    if (F49.pow(static_cast<Fel>(d), 7) == F49.neg(static_cast<Fel>(d))) {
      btw = static_cast<Fel>(d);
      break;
    }
  REQUIRE(btw != 0);
  ClassificationRecord rec = classify_conics(two_term(7, 2, 8, 4, 1, btw));
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::FermatConicsDTwisted);
  ClassificationRecord plain = classify_conics(two_term(7, 2, 8, 4, 1, 1));
  CHECK(plain.case_label == CaseLabel::FermatConicsD);
  CHECK(plain.frobenius == Verdict::Nonclassical);
}

TEST_CASE("conics: small characteristics are undetermined, p = 2 rejected") {
  ClassificationRecord rec = classify_conics(two_term(3, 2, 4, 4, 1, 1));
  CHECK(rec.geometric == Verdict::Undetermined);
  CHECK(rec.frobenius == Verdict::Undetermined);
  Field F4 = Field::make(2, 2);
  CurveSpec s;
  s.family = Family::TwoTerm;
  s.field = F4;
  s.n = 3;
  s.m = 3;
  s.a = 1;
  s.b = 1;
  CHECK_THROWS_AS(classify_conics(validate(s)), Error);
}

TEST_CASE("axis-swap invariance of classification") {
  Field F49 = Field::make(7, 2);
  for (std::uint32_t n : {4u, 5u, 8u})
    for (std::uint32_t m : {4u, 6u, 8u}) {
      if (n % 7 == 0 || m % 7 == 0) continue;
      CurveSpec fwd;
      fwd.family = Family::TwoTerm;
      fwd.field = F49;
      fwd.n = n;
      fwd.m = m;
      fwd.a = 2;
      fwd.b = 3;
      CurveSpec swp = fwd;
      std::swap(swp.n, swp.m);
      std::swap(swp.a, swp.b);
      ClassificationRecord r1 = classify_conics(validate(fwd));
      ClassificationRecord r2 = classify_conics(validate(swp));
      CHECK(r1.geometric == r2.geometric);
      CHECK(r1.frobenius == r2.frobenius);
      CHECK(r1.case_label == r2.case_label);
    }
}

TEST_CASE("identity polynomial shapes") {
  // pattern p | (n-2), p | (m-2): a x^(n-2+2q) + b y^(m-2+2q) - 1
  CurveSpec spec = two_term(7, 2, 16, 16, 1, 1);
  BiPoly g = identity_polynomial(spec, CaseLabel::FermatConicsA);
  BiPoly expected;
  const Field& F = spec.field;
  bp_add_term(F, expected, 1, 112, 0);
  bp_add_term(F, expected, 1, 0, 112);
  bp_add_term(F, expected, F.neg(1), 0, 0);
  CHECK(bp_equal(g, expected));

  // three-term case i: exponents n-1+q = 56
  CurveSpec s3 = three_term(7, 2, 8, 8, 2, 3, 3);
  BiPoly g3 = identity_polynomial(s3, CaseLabel::ThreeTermI);
  BiPoly e3;
  bp_add_term(F, e3, 2, 56, 56);
  bp_add_term(F, e3, 3, 56, 0);
  bp_add_term(F, e3, 3, 0, 56);
  bp_add_term(F, e3, F.neg(1), 0, 0);
  CHECK(bp_equal(g3, e3));

  CHECK_THROWS_WITH_AS(identity_polynomial(spec, CaseLabel::FermatConicsB),
                       doctest::Contains("CaseMismatch"), Error);
  CHECK_THROWS_AS(identity_polynomial(spec, CaseLabel::FermatLines), Error);
}

TEST_CASE("hermitian identity collapses when a + b = 1") {
  CurveSpec spec = two_term(7, 1, 6, 6, 3, 5);
  BiPoly g = identity_polynomial(spec, CaseLabel::FermatConicsC);
  // a x^7 y^7 + b x^7 y^7 - x^7 y^7 with a + b = 1 is the zero polynomial
  CHECK(g.is_zero());
  CHECK(identity_check(spec, CaseLabel::FermatConicsC));
  CurveSpec off = two_term(7, 1, 6, 6, 3, 3);
  CHECK_FALSE(identity_check(off, CaseLabel::FermatConicsC));
}

TEST_CASE("identity_check matches the Frobenius verdict on pinned cases") {
  // vanishing: (q-1)/(2(p-1)) = 4 with unit coefficients
  CHECK(identity_check(two_term(7, 2, 4, 4, 1, 1), CaseLabel::FermatConicsB));
  // not vanishing: same pattern, wrong n
  CHECK_FALSE(identity_check(two_term(7, 2, 11, 11, 1, 1), CaseLabel::FermatConicsB));
  CHECK(identity_check(two_term(7, 2, 16, 16, 1, 1), CaseLabel::FermatConicsA));
  CHECK_FALSE(identity_check(two_term(7, 2, 9, 9, 1, 1), CaseLabel::FermatConicsA));
  // twisted coefficient branch of the n = 2m case
  Field Fq = Field::make(7, 2);
  Fel btw = 0;
  for (std::uint64_t d = 1; d < 49; ++d)
    if (Fq.pow(static_cast<Fel>(d), 7) == Fq.neg(static_cast<Fel>(d))) {
      btw = static_cast<Fel>(d);
      break;
    }
  CHECK(identity_check(two_term(7, 2, 8, 4, 1, btw), CaseLabel::FermatConicsDTwisted));
  CHECK(identity_check(two_term(7, 2, 8, 4, 1, 1), CaseLabel::FermatConicsD));
  CHECK_FALSE(identity_check(two_term(7, 2, 8, 4, Fq.generator(), 1), CaseLabel::FermatConicsD));
  // three-term case iii with constructed coefficients: a = 1, c free, b = -c^7
  Field F49 = Field::make(7, 2);
  Fel c = F49.generator();
  Fel b = F49.neg(F49.pow(c, 7));
  CHECK(identity_check(three_term(7, 2, 6, 6, 1, b, c), CaseLabel::ThreeTermIII));
}

TEST_CASE("conics: three-term boundary case n = m = q-1 with a+b+c = 1") {
  // the analogue of the hermitian two-term case: the identity polynomial
  // collapses to (a+b+c-1) x^q y^q
  ClassificationRecord rec = classify_conics(three_term(7, 1, 6, 6, 1, 4, 3));  // 1+4+3 = 1
  CHECK(rec.geometric == Verdict::Nonclassical);
  CHECK(rec.frobenius == Verdict::Nonclassical);
  CHECK(rec.case_label == CaseLabel::ThreeTermIII);
  CHECK_FALSE(rec.r.has_value());
  CHECK(identity_check(three_term(7, 1, 6, 6, 1, 4, 3), CaseLabel::ThreeTermIII));
  // off the coefficient locus: classical
  ClassificationRecord off = classify_conics(three_term(7, 1, 6, 6, 1, 4, 4));
  CHECK(off.frobenius == Verdict::Classical);
  CHECK_FALSE(identity_check(three_term(7, 1, 6, 6, 1, 4, 4), CaseLabel::ThreeTermIII));
}

TEST_CASE("case label strings round-trip") {
  for (CaseLabel l : {CaseLabel::None, CaseLabel::FermatLines, CaseLabel::FermatConicsA,
                      CaseLabel::FermatConicsDTwisted, CaseLabel::ThreeTermIII})
    CHECK(case_label_from_name(case_label_name(l)) == l);
  CHECK(case_label_from_name("hermitian_q_eq_n_plus_1") == CaseLabel::FermatConicsC);
  CHECK_FALSE(case_label_from_name("bogus").has_value());
}
