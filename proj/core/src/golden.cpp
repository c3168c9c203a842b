#include "tpsurf/golden.hpp"

#include "tpsurf/pipeline.hpp"

namespace tpsurf {

const GoldenExample& golden_example() {
  static const GoldenExample g = [] {
    GoldenExample e;
    e.input = SurfaceInput{2, 5,
                           {parse_poly("-t^2*u^4*v - s^2*v^5"), parse_poly("t^2*u^5 + s^2*u*v^4 - 2*t^2*v^5"),
                            parse_poly("-s^2*u^4*v + 2*t^2*u*v^4 - t^2*v^5"), parse_poly("s^2*u^5 + t^2*u*v^4")},
                           FieldConfig{}};
    e.alpha = {"t^2*u^4 + s^2*v^4", "2*t^2*v^4", "s^2*u^4 + t^2*v^4"};
    e.S = {{{"t^2*u*v^2 - 2*t^2*u^2*v", "t^2*v^3 - 2*t^2*u*v^2", "-s^2*u^3 - 2*t^2*v^3", "-s^2*u^2*v"},
            {"s^2*u^2*v - t^2*v^3", "s^2*u^3 + s^2*u*v^2", "s^2*u^2*v + s^2*v^3", "s^2*u*v^2 - t^2*u^3"},
            {"2*t^2*v^3 - s^2*u*v^2", "-s^2*v^3", "t^2*u^3", "t^2*u^2*v"}}};
    return e;
  }();
  return g;
}

SurfaceInput segre_toy() {
  return SurfaceInput{1, 1, {parse_poly("s*u"), parse_poly("s*v"), parse_poly("t*u"), parse_poly("t*v")}, FieldConfig{}};
}

std::vector<IdentityCheck> run_selftest(unsigned threads) {
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  const GoldenExample& g = golden_example();
  field::ScopedModulus scope(g.input.field.p);
  try {
    PipelineOptions po;
    po.threads = threads;
    const ImplicitResult r = implicitize(g.input, po);
    add("n = 3", r.analysis.n == g.n);
    add("dim V = 4", r.analysis.dimV == g.dimV);
    add("mu = (1, 1)", r.cases.mu == g.mu);
    for (std::size_t i = 0; i < 3; ++i)
      add("alpha" + std::to_string(i + 1), r.cases.alpha.size() == 3 && r.cases.alpha[i] == parse_poly(g.alpha[i]));
    for (std::size_t k = 0; k < 3; ++k) {
      bool ok = r.cases.syzygies.size() == 4;
      for (std::size_t i = 0; ok && i < 4; ++i) ok = r.cases.syzygies[k + 1].entries[i] == parse_poly(g.S[k][i]);
      add("S" + std::to_string(k + 1) + " entries", ok);
    }
    for (const auto& c : r.cases.checks) add(c.name, c.ok);
    add("strand 20 x 20", r.strand.size == g.strand_size);
    add("deg F = 10", r.oracle.F.degree() == g.degF);
    add("d = 2", r.verify.d == g.d);
    add("det = c F^2 at 40 points", r.verify.ok && r.verify.points_passed >= 40);

    const ImplicitResult t = implicitize(segre_toy(), po);
    add("Segre F = x0 x3 - x1 x2", t.oracle.F == XPoly::monomial({1, 0, 0, 1}) - XPoly::monomial({0, 1, 1, 0}));
    add("Segre d = 1", t.verify.d == 1 && t.verify.ok);
  } catch (const std::exception& e) {
    add(std::string("pipeline: ") + e.what(), false);
  }
  return out;
}

}  // namespace tpsurf
