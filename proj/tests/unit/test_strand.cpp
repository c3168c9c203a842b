#include <gtest/gtest.h>

#include "support.hpp"
#include "tpsurf/cases.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/strand.hpp"

using namespace tpsurf;
using namespace tpsurf::testing;

namespace {

StrandMatrix strand_for(const SurfaceInput& in) { return build_d1_strand(run_case(analyze(in), in)); }

}  // namespace

TEST(Strand, ExampleShape) {
  const StrandMatrix m = strand_for(example_input());
  EXPECT_EQ(m.size, 20u);
  EXPECT_EQ(m.rows.size(), 20u);
  EXPECT_EQ(m.cols.size(), 20u);
  for (const auto& r : m.rows) EXPECT_EQ(r.bidegree(), (BiDegree{3, 4}));
}

TEST(Strand, EntriesAreLinearFormsOfTheSyzygies) {
  // entry (row, col) is Σ_i x_i · [coefficient of row in multiplier · S_k[i]]
  const auto in = example_input();
  const CaseResult r = run_case(analyze(in), in);
  const StrandMatrix m = build_d1_strand(r);
  for (std::size_t j = 0; j < m.size; ++j) {
    const auto& col = m.cols[j];
    for (int i = 0; i < 4; ++i) {
      const BiPoly p = BiPoly::monomial(col.multiplier) * r.original[col.syzygy].entries[i];
      for (std::size_t row = 0; row < m.size; ++row) EXPECT_EQ(m(row, j)[i], p.coeff(m.rows[row]));
    }
  }
}

TEST(Strand, SegreDeterminant) {
  const StrandMatrix m = strand_for(segre_input());
  ASSERT_EQ(m.size, 2u);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k) {
    const XPoint x = random_point(rng);
    const Fp F = x[0] * x[3] - x[1] * x[2];
    const Fp det = eval_det(m, x);
    EXPECT_TRUE(det == F || det == -F);
  }
}

TEST(Strand, NonsingularAtRandomPoint) {
  for (int dim = 2; dim <= 4; ++dim) {
    GenSpec s{2, 3, 2, dim, {}};
    if (dim == 3) s.mu = {1};
    if (dim == 4) {
      s = GenSpec{2, 5, 3, 4, {1, 1}};
    }
    s.seed = 11;
    const auto in = generate(s);
    const StrandMatrix m = strand_for(in);
    EXPECT_EQ(m.size, static_cast<std::size_t>(2 * in.a * in.b));
    std::mt19937_64 rng(3);
    EXPECT_FALSE(eval_det(m, random_point(rng)).is_zero());
  }
}

TEST(Strand, NonSquareRejected) {
  const auto in = example_input();
  const CaseResult r = run_case(analyze(in), in);
  std::vector<SyzygyColumn> cols(r.original.begin(), r.original.end() - 1);
  EXPECT_THROW(build_d1_strand(cols, in.a, in.b), HypothesisError);
}

TEST(Strand, ReconstructMatchesEvaluation) {
  const StrandMatrix m = strand_for(example_input());
  ReconstructOptions opt;
  opt.threads = 2;
  const XPoly det = reconstruct_det(m, opt);
  EXPECT_EQ(det.degree(), 20);
  EXPECT_TRUE(det.is_homogeneous());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const XPoint x = random_point(rng);
    EXPECT_EQ(det.eval(x), eval_det(m, x));
  }
}

TEST(Strand, ReconstructCap) {
  const StrandMatrix m = strand_for(example_input());
  ReconstructOptions opt;
  opt.cap = 10;
  EXPECT_THROW(reconstruct_det(m, opt), InputError);
}
