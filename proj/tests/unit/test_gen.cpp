#include <gtest/gtest.h>

#include "support.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/golden.hpp"
#include "tpsurf/pipeline.hpp"

using namespace tpsurf;
using namespace tpsurf::testing;

TEST(Gen, SpecChecks) {
  EXPECT_THROW(check_spec({2, 4, 3, 4, {1, 1}}), InputError);  // b < 2n-1
  EXPECT_THROW(check_spec({2, 5, 3, 3, {2}}), InputError);     // mu > n - mu
  EXPECT_THROW(check_spec({2, 5, 3, 4, {1, 2}}), InputError);  // mu2 > n - mu1 - mu2
  EXPECT_THROW(check_spec({2, 5, 3, 2, {1}}), InputError);
  EXPECT_THROW(check_spec({2, 5, 3, 5, {}}), InputError);
  EXPECT_NO_THROW(check_spec({2, 5, 3, 4, {1, 1}}));
  EXPECT_NO_THROW(check_spec({1, 1, 1, 2, {}}));
}

TEST(Gen, DeterministicPerSeed) {
  GenSpec s{2, 5, 3, 3, {1}};
  s.seed = 314;
  const auto x = generate(s), y = generate(s);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(x.gens[i], y.gens[i]);
  s.seed = 315;
  const auto z = generate(s);
  EXPECT_FALSE(x.gens[0] == z.gens[0]);
}

TEST(Gen, ExampleProfile) {
  GenSpec s{2, 5, 3, 4, {1, 1}};
  s.seed = 1;
  const auto in = generate(s);
  const auto rep = validate_instance(in, s);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.n, 3);
  EXPECT_EQ(rep.dimV, 4);
  EXPECT_EQ(rep.mu, (std::vector<int>{1, 1}));
}

TEST(Gen, SegreLikeToy) {
  GenSpec s{1, 1, 1, 2, {}};
  s.seed = 2;
  const auto in = generate(s);
  const auto rep = validate_instance(in, s);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.degF, 2);
  EXPECT_EQ(rep.d, 1);
}

TEST(Gen, ValidateExample) {
  GenSpec s{2, 5, 3, 4, {1, 1}};
  EXPECT_TRUE(validate_instance(example_input(), s).ok);
  s.n = 2;
  const auto rep = validate_instance(example_input(), s);
  EXPECT_FALSE(rep.ok);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_NE(rep.failures.front().find("minimal n mismatch"), std::string::npos);
}

TEST(Gen, BudgetExhausted) {
  GenSpec s{2, 5, 3, 4, {1, 1}};
  s.max_retries = 0;
  EXPECT_THROW(generate(s), HypothesisError);
}

TEST(Pipeline, ExampleEndToEnd) {
  const ImplicitResult r = implicitize(example_input());
  EXPECT_EQ(r.basepoint.status, BasepointStatus::Free);
  EXPECT_EQ(r.strand.size, 20u);
  EXPECT_EQ(r.F().degree(), 10);
  EXPECT_EQ(r.d(), 2);
  EXPECT_TRUE(r.verify.ok);
}

TEST(Pipeline, InterpolateMode) {
  PipelineOptions po;
  po.det_mode = DetMode::Interpolate;
  const ImplicitResult r = implicitize(example_input(), po);
  ASSERT_TRUE(r.det.has_value());
  EXPECT_EQ(*r.det, r.c() * r.F().pow(2));
}

TEST(Pipeline, MirrorSide) {
  GenSpec s{5, 2, 1, 2, {}};
  s.seed = 6;
  // generated on the (u,v) side with a = 5, b = 2 and mirrored, so only st works
  const auto in = mirror(generate(s));
  PipelineOptions po;
  EXPECT_THROW(implicitize(in, po), HypothesisError);
  po.side = Side::ST;
  const ImplicitResult r = implicitize(in, po);
  EXPECT_TRUE(r.verify.ok);
  EXPECT_EQ(r.analysis.n, 1);
}

TEST(Pipeline, BasepointStops) {
  SurfaceInput in{1, 2, {parse_poly("s*u^2"), parse_poly("t*u*v"), parse_poly("s*u*v + t*u^2"), parse_poly("t*u^2 - s*u*v")}, {}};
  try {
    implicitize(in);
    FAIL() << "expected a basepoint violation";
  } catch (const BasepointViolation& e) {
    EXPECT_EQ(e.report().status, BasepointStatus::Found);
  }
}

TEST(Pipeline, Selftest) {
  for (const auto& c : run_selftest()) EXPECT_TRUE(c.ok) << c.name;
}
