#include <gtest/gtest.h>

#include "support.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/syzygy.hpp"

using namespace tpsurf;
using namespace tpsurf::testing;

TEST(Syzygy, ExampleProfile) {
  const auto in = example_input();
  const VAnalysis v = analyze(in);
  EXPECT_EQ(v.n, 3);
  EXPECT_EQ(v.kernel_dim, 1u);
  EXPECT_EQ(v.dimV, 4);
  ASSERT_EQ(v.g.size(), 4u);
  EXPECT_EQ(v.g[0], form("u^3", 3));
  EXPECT_EQ(v.g[1], form("u^2*v", 3));
  EXPECT_EQ(v.g[2], form("u*v^2", 3));
  EXPECT_EQ(v.g[3], form("v^3", 3));
  // A is the identity, so nothing moves
  EXPECT_EQ(v.A, FieldMatrix::identity(4));
  EXPECT_EQ(v.T, FieldMatrix::identity(4));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(v.new_gens[i], in.gens[i]);
}

TEST(Syzygy, SegreToy) {
  const VAnalysis v = analyze(segre_input());
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.dimV, 2);
  EXPECT_EQ(v.kernel_dim, 2u);
  ASSERT_EQ(v.g.size(), 2u);
  EXPECT_EQ(v.g[0], form("u", 1));
  EXPECT_EQ(v.g[1], form("v", 1));
}

TEST(Syzygy, MinimalSyzygyAnnihilates) {
  const auto in = example_input();
  const auto s = find_minimal_syzygy(in);
  ASSERT_EQ(s.n, 3);
  ASSERT_FALSE(s.kernel.empty());
  const auto& k = s.kernel.front();
  SyzygyColumn c;
  c.bidegree = {0, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= 3; ++j) c.entries[i] += BiPoly::from_uv(UniHomPoly::monomial(3, j, k[i * 4 + j]));
  EXPECT_TRUE(sums_to_zero(c, in.gens));
}

TEST(Syzygy, CapTooSmall) {
  EXPECT_THROW(find_minimal_syzygy(example_input(), 2), HypothesisError);
}

TEST(Syzygy, NoSingleSyzygy) {
  // generic (2,2) forms: 8 unknowns vs 12 conditions at n = 1, 12 vs 15 at n = 2
  std::mt19937_64 rng(3);
  SurfaceInput in{2, 2, {}, {}};
  for (auto& g : in.gens) g = BiPoly::random({2, 2}, rng);
  EXPECT_THROW(analyze(in), HypothesisError);
}

TEST(Syzygy, ValidateInput) {
  auto in = example_input();
  in.gens[1] = parse_poly("s^2*u^5");
  EXPECT_NO_THROW(validate_input(in));
  in.gens[1] = parse_poly("s*u^4");
  EXPECT_THROW(validate_input(in), InputError);
  in = example_input();
  in.gens[3] = in.gens[0] + in.gens[1];
  EXPECT_THROW(validate_input(in), InputError);
}

TEST(Syzygy, MirrorIsInvolution) {
  const auto in = example_input();
  const auto back = mirror(mirror(in));
  EXPECT_EQ(back.a, in.a);
  EXPECT_EQ(back.b, in.b);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(back.gens[i], in.gens[i]);
  const auto m = mirror(in);
  EXPECT_EQ(m.a, 5);
  EXPECT_EQ(m.b, 2);
}

TEST(Syzygy, MirroredAnalysisMatchesSegre) {
  const VAnalysis v = analyze(mirror(mirror(segre_input())));
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.dimV, 2);
}

TEST(Syzygy, ScrambledInstancesConvertBack) {
  for (int dim = 2; dim <= 4; ++dim) {
    GenSpec s{2, 5, 3, dim, {}};
    if (dim == 3) s.mu = {1};
    if (dim == 4) s.mu = {1, 1};
    s.seed = 40 + dim;
    s.scramble = true;
    const auto in = generate(s);
    const VAnalysis v = analyze(in);
    EXPECT_EQ(v.dimV, dim);
    // new_gens = p·T
    for (std::size_t j = 0; j < 4; ++j) {
      BiPoly x;
      for (std::size_t i = 0; i < 4; ++i) x += v.T(i, j) * in.gens[i];
      EXPECT_EQ(x, v.new_gens[j]);
    }
    SyzygyColumn g;
    g.bidegree = {0, v.n};
    for (std::size_t i = 0; i < v.g.size(); ++i) g.entries[i] = BiPoly::from_uv(v.g[i]);
    EXPECT_TRUE(sums_to_zero(g, v.new_gens));
    EXPECT_TRUE(sums_to_zero(to_original(g, v.T), in.gens));
  }
}

TEST(Syzygy, FFamilyIdentity) {
  const auto in = example_input();
  const auto s = find_minimal_syzygy(in);
  const auto f = build_f_family(in, s.kernel.front(), s.n);
  ASSERT_EQ(f.size(), 4u);
  BiPoly sum;
  for (int j = 0; j <= 3; ++j) sum += f[j] * UniHomPoly::monomial(3, j);
  EXPECT_TRUE(sum.is_zero());
}
