#include <gtest/gtest.h>

#include "support.hpp"
#include "tpsurf/cases.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/strand.hpp"

using namespace tpsurf;
using namespace tpsurf::testing;

namespace {

// Substitution x_i -> p_i done symbolically, as an independent check of vanishes_on.
bool substitutes_to_zero(const XPoly& F, const GenList& g) {
  BiPoly sum;
  for (const auto& [k, c] : F.terms()) {
    const auto e = XPoly::exponent(k);
    BiPoly t = BiPoly::monomial(Monomial{}, c);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < e[i]; ++j) t = t * g[i];
    sum += t;
  }
  return sum.is_zero();
}

}  // namespace

TEST(Oracle, XMonomials) {
  EXPECT_EQ(x_monomials(1).size(), 4u);
  EXPECT_EQ(x_monomials(2).size(), 10u);
  EXPECT_EQ(x_monomials(10).size(), 286u);
  EXPECT_EQ(x_monomials(2).front(), (XExponent{2, 0, 0, 0}));
  EXPECT_EQ(x_monomials(2).back(), (XExponent{0, 0, 0, 2}));
}

TEST(Oracle, SegreEquation) {
  const auto r = implicit_by_elimination(segre_input());
  EXPECT_EQ(r.e, 2);
  EXPECT_EQ(r.kernel_dim, 1u);
  EXPECT_EQ(r.F, XPoly::monomial({1, 0, 0, 1}) - XPoly::monomial({0, 1, 1, 0}));
}

TEST(Oracle, ExampleDegree) {
  const auto in = example_input();
  const auto r = implicit_by_elimination(in);
  EXPECT_EQ(r.e, 10);
  EXPECT_EQ(r.kernel_dim, 1u);
  EXPECT_TRUE(r.F.is_homogeneous());
  EXPECT_TRUE(vanishes_on(r.F, in.gens, in.a, in.b));
}

TEST(Oracle, GeneratedInstanceSubstitution) {
  GenSpec s{2, 3, 2, 3, {1}};
  s.seed = 77;
  const auto in = generate(s);
  const auto r = implicit_by_elimination(in);
  EXPECT_TRUE(substitutes_to_zero(r.F, in.gens));
  EXPECT_TRUE(vanishes_on(r.F, in.gens, in.a, in.b));
  XPoly wrong = r.F + XPoly::monomial({r.e, 0, 0, 0});
  EXPECT_FALSE(vanishes_on(wrong, in.gens, in.a, in.b));
}

TEST(Oracle, DivisorSearchAgreesWithFullSearch) {
  GenSpec s{2, 3, 2, 2, {}};
  s.seed = 78;
  const auto in = generate(s);
  EliminationOptions all;
  all.divisors_only = false;
  const auto a = implicit_by_elimination(in);
  const auto b = implicit_by_elimination(in, all);
  EXPECT_EQ(a.e, b.e);
  EXPECT_EQ(a.F, b.F);
}

TEST(Oracle, LinearRelation) {
  // dependent generators: the image is the plane x3 = x0 + x1
  SurfaceInput in{1, 2, {parse_poly("s*u^2"), parse_poly("t*v^2"), parse_poly("s*u*v + t*u^2"), parse_poly("s*u^2 + t*v^2")}, {}};
  const auto r = implicit_by_elimination(in);
  EXPECT_EQ(r.e, 1);
  EXPECT_EQ(r.F, XPoly::monomial({1, 0, 0, 0}) + XPoly::monomial({0, 1, 0, 0}) - XPoly::monomial({0, 0, 0, 1}));
}

TEST(Oracle, VerifyExample) {
  const auto in = example_input();
  const auto el = implicit_by_elimination(in);
  const StrandMatrix m = build_d1_strand(run_case(analyze(in), in));
  const VerifyReport rep = verify_implicitization(el.F, m);
  EXPECT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.d, 2);
  EXPECT_EQ(rep.points_checked, 40);
  EXPECT_EQ(rep.points_passed, 40);
  EXPECT_FALSE(rep.c.is_zero());
}

TEST(Oracle, VerifySegre) {
  const auto in = segre_input();
  const auto el = implicit_by_elimination(in);
  const VerifyReport rep = verify_implicitization(el.F, build_d1_strand(run_case(analyze(in), in)));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.d, 1);
}

TEST(Oracle, VerifyRejectsCorruption) {
  const auto in = example_input();
  const auto el = implicit_by_elimination(in);
  const CaseResult r = run_case(analyze(in), in);
  auto cols = r.original;
  const auto key = cols[2].entries[1].terms().begin()->first;
  cols[2].entries[1].add_term(Monomial::from_key(key), Fp(1));
  const VerifyReport rep = verify_implicitization(el.F, build_d1_strand(cols, in.a, in.b));
  EXPECT_FALSE(rep.ok);
  EXPECT_LT(rep.points_passed, rep.points_checked);
}

TEST(Oracle, VerifyRejectsBadDegree) {
  const StrandMatrix m = build_d1_strand(run_case(analyze(example_input()), example_input()));
  const XPoly cubic = XPoly::monomial({3, 0, 0, 0}) + XPoly::monomial({0, 0, 0, 3});
  const VerifyReport rep = verify_implicitization(cubic, m);
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.message.find("does not divide"), std::string::npos);
}

TEST(Basepoint, ExampleFree) {
  const auto rep = basepoint_check(example_input());
  EXPECT_EQ(rep.status, BasepointStatus::Free);
}

TEST(Basepoint, SegreFree) { EXPECT_EQ(basepoint_check(segre_input()).status, BasepointStatus::Free); }

TEST(Basepoint, CommonFactorFound) {
  SurfaceInput in{1, 2, {parse_poly("s*u^2"), parse_poly("t*u*v"), parse_poly("s*u*v + t*u^2"), parse_poly("t*u^2 - s*u*v")}, {}};
  const auto rep = basepoint_check(in);
  EXPECT_EQ(rep.status, BasepointStatus::Found);
  EXPECT_NE(rep.detail.find("common factor u"), std::string::npos) << rep.detail;
}

TEST(Basepoint, RationalPointFound) {
  // all four vanish at (s:t) x (u:v) = (1:1) x (1:1)
  SurfaceInput in{1, 2, {parse_poly("s*u^2 - t*u^2"), parse_poly("s*v^2 - t*v^2"), parse_poly("s*u^2 - s*u*v"), parse_poly("t*u*v - t*v^2")}, {}};
  const auto rep = basepoint_check(in);
  EXPECT_EQ(rep.status, BasepointStatus::Found);
  EXPECT_FALSE(rep.candidates_st.empty());
}

TEST(Basepoint, ConjugatePointsUndetermined) {
  // σ² = r with r a non-residue: the generators vanish at (1:σ) x (1:σ) and its conjugate
  field::ScopedModulus scope(10007);
  Fp r(5);
  while (r.pow((10007 - 1) / 2) == Fp(1)) r += Fp(1);
  const BiPoly q2 = parse_poly("v^2") - r * parse_poly("u^2");
  const BiPoly l = parse_poly("s*v - t*u");                     // vanishes at (1:σ)x(1:σ)
  // combinations of the ideal of the two conjugate points in bidegree (1,2)
  const BiPoly m1 = l * parse_poly("u"), m2 = l * parse_poly("v");
  const BiPoly m3 = parse_poly("s") * q2, m4 = parse_poly("t") * q2;
  SurfaceInput in{1, 2, {m1, m2 + m3, m3 + Fp(2) * m4, m4 - Fp(3) * m1}, {}};
  const auto rep = basepoint_check(in, 7);
  EXPECT_EQ(rep.status, BasepointStatus::Undetermined) << rep.detail;
  EXPECT_FALSE(rep.G_uv.is_unit());
}
