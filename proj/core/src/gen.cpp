#include "tpsurf/gen.hpp"

#include <numeric>

#include "tpsurf/cases.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/hburch.hpp"
#include "tpsurf/linalg.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"

namespace tpsurf {

void check_spec(const GenSpec& s) {
  if (s.a < 1 || s.b < 1 || s.n < 1) throw InputError("generate: a, b, n must be positive");
  if (s.b < 2 * s.n - 1) throw InputError("generate: need b >= 2n-1");
  switch (s.dimV) {
    case 2:
      if (!s.mu.empty()) throw InputError("generate: dim V = 2 takes no mu");
      break;
    case 3:
      if (s.mu.size() != 1 || s.mu[0] < 1 || s.mu[0] > s.n - s.mu[0])
        throw InputError("generate: dim V = 3 needs 1 <= mu <= n - mu");
      break;
    case 4:
      if (s.mu.size() != 2 || s.mu[0] < 1 || s.mu[0] > s.mu[1] || s.mu[1] > s.n - s.mu[0] - s.mu[1])
        throw InputError("generate: dim V = 4 needs 1 <= mu1 <= mu2 <= n - mu1 - mu2");
      break;
    default:
      throw InputError("generate: dim V must be 2, 3 or 4");
  }
}

namespace {

// Random k x (k-1) matrix of binary forms, column j of degree deg[j], whose
// maximal minors have no common factor.
GradedSyzMatrix random_psi(int k, const std::vector<int>& deg, std::mt19937_64& rng) {
  for (;;) {
    GradedSyzMatrix m;
    m.row_degrees.assign(static_cast<std::size_t>(k), 0);
    m.col_degrees = deg;
    m.entries.assign(static_cast<std::size_t>(k), std::vector<UniHomPoly>(deg.size()));
    for (int i = 0; i < k; ++i)
      for (std::size_t j = 0; j < deg.size(); ++j) m.entries[i][j] = UniHomPoly::random(deg[j], rng);
    const auto minors = signed_minors(m);
    bool any_zero = false;
    for (const auto& g : minors) any_zero |= g.is_zero();
    if (!any_zero && UniHomPoly::gcd(minors).is_unit()) return m;
  }
}

GenList draw(const GenSpec& s, std::mt19937_64& rng) {
  const int a = s.a, b = s.b, n = s.n;
  GenList g;
  if (s.dimV == 2) {
    UniHomPoly g0, g1;
    do {
      g0 = UniHomPoly::random(n, rng);
      g1 = UniHomPoly::random(n, rng);
    } while (g0.is_zero() || g1.is_zero() || !UniHomPoly::gcd(g0, g1).is_unit());
    const BiPoly alpha = BiPoly::random({a, b - n}, rng);
    g = {alpha * g1, Fp(-1) * (alpha * g0), BiPoly::random({a, b}, rng), BiPoly::random({a, b}, rng)};
  } else {
    std::vector<int> deg = s.mu;
    deg.push_back(n - std::accumulate(s.mu.begin(), s.mu.end(), 0));
    const int k = s.dimV;
    const GradedSyzMatrix psi = random_psi(k, deg, rng);
    std::vector<BiPoly> alpha;
    for (int d : deg) alpha.push_back(BiPoly::random({a, b - d}, rng));
    for (int i = 0; i < k; ++i) {
      BiPoly f;
      for (std::size_t j = 0; j < deg.size(); ++j) f += psi.entries[i][j] * alpha[j];
      g[i] = f;
    }
    for (int i = k; i < 4; ++i) g[i] = BiPoly::random({a, b}, rng);
  }
  if (s.scramble) {
    FieldMatrix m(4, 4);
    do {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = Fp::random(rng);
    } while (det_field(m).is_zero());
    GenList h;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 4; ++i) h[j] += m(i, j) * g[i];
    g = h;
  }
  return g;
}

// Cheap profile check used while retrying.
bool profile_matches(const SurfaceInput& in, const GenSpec& s) {
  try {
    validate_input(in);
    if (basepoint_check(in, s.seed).status != BasepointStatus::Free) return false;
    const VAnalysis v = analyze(in);
    if (v.n != s.n || v.dimV != s.dimV) return false;
    CaseOptions co;
    co.seed = s.seed;
    const CaseResult r = run_case(v, in, co);
    for (const auto& c : r.checks)
      if (!c.ok) return false;
    return r.mu == s.mu;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

SurfaceInput generate(const GenSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    SurfaceInput in{spec.a, spec.b, draw(spec, rng), FieldConfig{field::modulus(), spec.seed}};
    if (profile_matches(in, spec)) return in;
  }
  throw HypothesisError("generate: retry budget of " + std::to_string(spec.max_retries) +
                        " exhausted (spec likely infeasible for this field)");
}

InstanceReport validate_instance(const SurfaceInput& in, const GenSpec& spec) {
  InstanceReport rep;
  auto fail = [&](std::string m) { rep.failures.push_back(std::move(m)); };
  try {
    PipelineOptions po;
    po.seed = spec.seed;
    const ImplicitResult r = implicitize(in, po);
    rep.n = r.analysis.n;
    rep.dimV = r.analysis.dimV;
    rep.mu = r.cases.mu;
    rep.degF = r.oracle.F.degree();
    rep.d = r.verify.d;
    if (rep.n != spec.n)
      fail("minimal n mismatch: expected " + std::to_string(spec.n) + ", found " + std::to_string(rep.n));
    if (rep.dimV != spec.dimV)
      fail("dim V mismatch: expected " + std::to_string(spec.dimV) + ", found " + std::to_string(rep.dimV));
    if (rep.mu != spec.mu) fail("mu profile mismatch");
    for (const auto& c : r.cases.checks)
      if (!c.ok) fail("identity failed: " + c.name);
    if (rep.degF * rep.d != 2 * in.a * in.b) fail("d * deg F != 2ab");
  } catch (const std::exception& e) {
    fail(e.what());
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace tpsurf
