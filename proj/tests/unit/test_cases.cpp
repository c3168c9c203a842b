#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "tpsurf/cases.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"

using namespace tpsurf;
using namespace tpsurf::testing;

namespace {

CaseResult example_case() {
  const auto in = example_input();
  return run_case(analyze(in), in);
}

void expect_pair(const CaseResult& r, const std::string& key, const char* q0, const char* q1) {
  ASSERT_TRUE(r.pairs.count(key)) << key;
  const auto& c = r.pairs.at(key);
  EXPECT_EQ(c.q0, parse_poly(q0)) << key << "0 = " << c.q0;
  EXPECT_EQ(c.q1, parse_poly(q1)) << key << "1 = " << c.q1;
}

GenSpec spec(int a, int b, int n, int dim, std::vector<int> mu, std::uint64_t seed) {
  GenSpec s{a, b, n, dim, std::move(mu)};
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Cases, ExampleAlpha) {
  const CaseResult r = example_case();
  EXPECT_EQ(r.tag, CaseTag::Dim4);
  EXPECT_EQ(r.mu, (std::vector<int>{1, 1}));
  ASSERT_EQ(r.alpha.size(), 3u);
  EXPECT_EQ(r.alpha[0], parse_poly("t^2*u^4 + s^2*v^4"));
  EXPECT_EQ(r.alpha[1], parse_poly("2*t^2*v^4"));
  EXPECT_EQ(r.alpha[2], parse_poly("s^2*u^4 + t^2*v^4"));
}

TEST(Cases, ExampleDecompositionPairs) {
  const CaseResult r = example_case();
  expect_pair(r, "a2", "-t^2*u^2", "-s^2*v^2");
  expect_pair(r, "a3", "t^2*u^3", "-s^2*v");
  expect_pair(r, "b3", "0", "-2*t^2*v");
  expect_pair(r, "b1", "2*t^2*v^3", "0");
  expect_pair(r, "c2", "-s^2*u^2", "-t^2*v^2");
  expect_pair(r, "c1", "t^2*v^3", "s^2*u");
}

TEST(Cases, ExampleSyzygies) {
  const CaseResult r = example_case();
  const std::vector<std::vector<std::string>> want{
      {"u^3", "u^2*v", "u*v^2", "v^3"},
      {"t^2*u*v^2 - 2*t^2*u^2*v", "t^2*v^3 - 2*t^2*u*v^2", "-s^2*u^3 - 2*t^2*v^3", "-s^2*u^2*v"},
      {"s^2*u^2*v - t^2*v^3", "s^2*u^3 + s^2*u*v^2", "s^2*u^2*v + s^2*v^3", "s^2*u*v^2 - t^2*u^3"},
      {"2*t^2*v^3 - s^2*u*v^2", "-s^2*v^3", "t^2*u^3", "t^2*u^2*v"}};
  ASSERT_EQ(r.syzygies.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_EQ(r.syzygies[k].entries[i], parse_poly(want[k][i])) << "S" << k << "[" << i << "]";
    EXPECT_EQ(r.original[k].bidegree, (k == 0 ? BiDegree{0, 3} : BiDegree{2, 3}));
  }
  EXPECT_EQ(r.expected_counts, (std::vector<int>{8, 4, 4, 4}));
}

TEST(Cases, ExampleIdentities) {
  const CaseResult r = example_case();
  ASSERT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name;
  // α₁S₁ + α₂S₂ + α₃S₃ + H·S = 0 recomputed here
  for (int i = 0; i < 4; ++i) {
    BiPoly sum = r.H * r.syzygies[0].entries[i];
    for (int k = 0; k < 3; ++k) sum += r.alpha[k] * r.syzygies[k + 1].entries[i];
    EXPECT_TRUE(sum.is_zero()) << i;
  }
}

TEST(Cases, SegreCounts) {
  const auto in = segre_input();
  const CaseResult r = run_case(analyze(in), in);
  EXPECT_EQ(r.tag, CaseTag::Dim2);
  // n = b = 1: S contributes nothing
  EXPECT_EQ(r.expected_counts, (std::vector<int>{0, 1, 1}));
  for (const auto& s : r.original) EXPECT_TRUE(sums_to_zero(s, in.gens));
}

TEST(Cases, ThresholdViolation) {
  // n = 3 needs b >= 5
  GenSpec s = spec(2, 5, 3, 4, {1, 1}, 5);
  auto in = generate(s);
  const VAnalysis v = analyze(in);
  SurfaceInput low = in;
  low.b = 4;
  EXPECT_THROW(run_case(v, low), HypothesisError);
}

class CaseCorpus : public ::testing::TestWithParam<GenSpec> {};

TEST_P(CaseCorpus, IdentitiesAndCounts) {
  const GenSpec base = GetParam();
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    GenSpec s = base;
    s.seed = 100 + seed;
    s.scramble = seed % 2 == 1;
    const auto in = generate(s);
    for (auto conv : {FreeConvention::Zero, FreeConvention::One}) {
      CaseOptions opt;
      opt.conv = conv;
      const CaseResult r = run_case(analyze(in), in, opt);
      for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name << " seed " << s.seed;
      for (const auto& col : r.original) EXPECT_TRUE(sums_to_zero(col, in.gens));
      EXPECT_EQ(std::accumulate(r.expected_counts.begin(), r.expected_counts.end(), 0), 2 * in.a * in.b);
      EXPECT_EQ(r.mu, s.mu);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Profiles, CaseCorpus,
                         ::testing::Values(spec(2, 3, 2, 2, {}, 0), spec(1, 1, 1, 2, {}, 0), spec(2, 5, 3, 2, {}, 0),
                                           spec(2, 5, 3, 3, {1}, 0), spec(2, 5, 3, 4, {1, 1}, 0),
                                           spec(1, 7, 4, 3, {2}, 0), spec(1, 7, 4, 4, {1, 1}, 0)));

TEST(Cases, Dim3KernelVector) {
  const auto in = generate(spec(2, 5, 3, 3, {1}, 9));
  const CaseResult r = run_case(analyze(in), in);
  ASSERT_EQ(r.N.size(), 4u);
  ASSERT_EQ(r.syzygies.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    BiPoly sum;
    for (int k = 0; k < 4; ++k) sum += r.syzygies[k].entries[i] * r.N[k];
    EXPECT_TRUE(sum.is_zero()) << i;
  }
  ASSERT_EQ(r.theta.size(), 3u);
}

TEST(Cases, CoprimeForms) {
  std::mt19937_64 rng(4);
  const BiPoly x = parse_poly("s*u + t*v"), y = parse_poly("s*v - t*u");
  EXPECT_TRUE(coprime_forms(x, y, rng));
  EXPECT_FALSE(coprime_forms(x * parse_poly("s + t"), y * parse_poly("s + t"), rng));
}
