#include "tpsurf/cases.hpp"

#include <sstream>

#include "tpsurf/errors.hpp"

namespace tpsurf {

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Dim2: return "dim2";
    case CaseTag::Dim3: return "dim3";
    case CaseTag::Dim4: return "dim4";
  }
  return "?";
}

namespace {

void require_threshold(const VAnalysis& v, const SurfaceInput& in) {
  if (in.b < 2 * v.n - 1) {
    std::ostringstream os;
    os << "b = " << in.b << " < 2n - 1 = " << 2 * v.n - 1;
    throw HypothesisError(os.str());
  }
}

SyzygyColumn column(BiPoly e0, BiPoly e1, BiPoly e2, BiPoly e3, BiDegree bd) {
  return SyzygyColumn{{std::move(e0), std::move(e1), std::move(e2), std::move(e3)}, bd};
}

SyzygyColumn column(const std::vector<BiPoly>& top, BiPoly last, BiDegree bd) {
  SyzygyColumn s;
  s.bidegree = bd;
  for (std::size_t i = 0; i < top.size(); ++i) s.entries[i] = top[i];
  s.entries[top.size()] = std::move(last);
  return s;
}

std::vector<BiPoly> sub(std::vector<BiPoly> x, const std::vector<BiPoly>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

BiPoly det2(const BiPoly& a, const BiPoly& b, const BiPoly& c, const BiPoly& d) { return a * d - b * c; }

TwoGenCertificate solve_pair(const BiPoly& target, BiDegree bd, const std::vector<UniHomPoly>& row,
                             const CaseOptions& opt) {
  if (row.size() != 2) throw CertificateError("expected a 1x2 row product");
  return two_gen_solve(target, bd, row[0], row[1], opt.conv);
}

std::vector<BiPoly> pair_vec(const TwoGenCertificate& c) { return {c.q0, c.q1}; }

// Records the check; throws when it fails and identities are enforced.
void check(CaseResult& r, const CaseOptions& opt, const std::string& name, bool ok) {
  r.checks.push_back({name, ok});
  if (!ok && opt.verify_identities) throw CertificateError("identity failed: " + name);
}

void finish(CaseResult& r, const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt) {
  r.a = in.a;
  r.b = in.b;
  r.n = v.n;
  r.new_gens = v.new_gens;
  for (std::size_t k = 0; k < r.syzygies.size(); ++k) {
    const SyzygyColumn& s = r.syzygies[k];
    bool homog = true;
    for (const auto& e : s.entries) homog = homog && e.is_bihomogeneous(s.bidegree);
    check(r, opt, "S" + std::to_string(k) + " bidegree", homog);
    const bool ok = annihilates(s, v.new_gens);
    r.checks.push_back({"S" + std::to_string(k) + " annihilates generators", ok});
    if (!ok) throw CertificateError("syzygy S" + std::to_string(k) + " does not annihilate the generators");
    r.original.push_back(to_original(s, v.T));
  }
  r.expected_counts = expected_column_counts(r, in.a, in.b);
}

// M·N as a 4-vector, M = [S|S₁|S₂|S₃].
bool kernel_vector_ok(const CaseResult& r) {
  for (std::size_t i = 0; i < 4; ++i) {
    BiPoly acc;
    for (std::size_t k = 0; k < r.syzygies.size(); ++k) acc += r.syzygies[k].entries[i] * r.N[k];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

GradedSyzMatrix multiply(const GradedSyzMatrix& x, const GradedSyzMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  GradedSyzMatrix w;
  w.row_degrees = x.row_degrees;
  w.entries.assign(x.rows(), {});
  for (std::size_t l = 0; l < y.cols(); ++l) {
    const int cd = x.row_degrees[0] + x(0, 0).degree() + y(0, l).degree();
    w.col_degrees.push_back(cd);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      UniHomPoly acc = UniHomPoly::zero(cd - x.row_degrees[i]);
      for (std::size_t k = 0; k < x.cols(); ++k) acc = acc + x(i, k) * y(k, l);
      w.entries[i].push_back(std::move(acc));
    }
  }
  return w;
}

bool coprime_forms(const BiPoly& x, const BiPoly& y, std::mt19937_64& rng) {
  if (x.is_zero() || y.is_zero()) return false;
  const BiDegree dx = x.bidegree(), dy = y.bidegree();
  bool uv_ok = false, st_ok = false;
  for (int attempt = 0; attempt < 6 && !(uv_ok && st_ok); ++attempt) {
    if (!uv_ok) {
      const Fp s0 = Fp::random(rng), t0 = Fp::random(rng);
      uv_ok = UniHomPoly::gcd({x.at_st(s0, t0, dx.duv), y.at_st(s0, t0, dy.duv)}).is_unit();
    }
    if (!st_ok) {
      const Fp u0 = Fp::random(rng), v0 = Fp::random(rng);
      st_ok = UniHomPoly::gcd({x.at_uv(u0, v0, dx.ds), y.at_uv(u0, v0, dy.ds)}).is_unit();
    }
  }
  return uv_ok && st_ok;
}

std::vector<int> expected_column_counts(const CaseResult& r, int a, int b) {
  std::vector<int> counts;
  int sum = 0;
  for (const auto& s : r.syzygies) {
    const int c = std::max(0, 2 * a - 1 - s.bidegree.ds + 1) * std::max(0, b - 1 - s.bidegree.duv + 1);
    counts.push_back(c);
    sum += c;
  }
  if (sum != 2 * a * b) {
    std::ostringstream os;
    os << "strand column counts sum to " << sum << ", expected 2ab = " << 2 * a * b;
    throw HypothesisError(os.str());
  }
  return counts;
}

CaseResult run_dim2(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt) {
  if (v.dimV != 2) throw std::invalid_argument("run_dim2: dim V != 2");
  require_threshold(v, in);
  const int a = in.a, b = in.b, n = v.n;
  const UniHomPoly& g0 = v.g[0];
  const UniHomPoly& g1 = v.g[1];
  CaseResult r;
  r.tag = CaseTag::Dim2;

  // α = f₀' / g₁ slice by slice
  std::vector<UniHomPoly> qs;
  for (const auto& sl : v.new_gens[0].st_slices(a, b)) {
    auto q = UniHomPoly::divide_exact(sl, g1);
    if (!q) throw CertificateError("f0' is not divisible by g1");
    qs.push_back(*q);
  }
  const BiPoly alpha = BiPoly::from_st_slices(qs, a);
  if (!(v.new_gens[1] == -(alpha * g0))) throw CertificateError("f1' != -alpha g0");
  r.alpha = {alpha};

  const UniHomPoly mg0 = -g0;
  const auto q = two_gen_solve(v.new_gens[2], {a, b}, g1, mg0, opt.conv);  // p2 = q1 g1 - q0 g0
  const auto rr = two_gen_solve(v.new_gens[3], {a, b}, g1, mg0, opt.conv);
  r.pairs.emplace("q", q);
  r.pairs.emplace("r", rr);
  // certificate fields hold (coefficient of g1, coefficient of -g0) = (q1, q0)
  r.syzygies.push_back(column(BiPoly::from_uv(g0), BiPoly::from_uv(g1), BiPoly{}, BiPoly{}, {0, n}));
  r.syzygies.push_back(column(q.q0, q.q1, -alpha, BiPoly{}, {a, b - n}));
  r.syzygies.push_back(column(rr.q0, rr.q1, BiPoly{}, -alpha, {a, b - n}));
  finish(r, v, in, opt);
  return r;
}

CaseResult run_dim3(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt) {
  if (v.dimV != 3) throw std::invalid_argument("run_dim3: dim V != 3");
  require_threshold(v, in);
  const int a = in.a, b = in.b, n = v.n;
  CaseResult r;
  r.tag = CaseTag::Dim3;
  std::mt19937_64 rng(opt.seed);

  r.psi = hilbert_burch_psi(v.g);
  const HBData& psi = *r.psi;
  const int mu = psi.matrix.entry_degree(0);
  r.mu = {mu};
  check(r, opt, "psi signed minors", verify_resolution(psi));
  r.phis = column_resolutions(psi);
  for (std::size_t j = 0; j < r.phis.size(); ++j)
    check(r, opt, "phi" + std::to_string(j + 1) + " signed minors", verify_resolution(r.phis[j]));

  const std::vector<BiPoly> fprime{v.new_gens[0], v.new_gens[1], v.new_gens[2]};
  r.alpha = psi_solve(fprime, psi, a, b);
  const BiPoly& a1 = r.alpha[0];
  const BiPoly& a2 = r.alpha[1];
  const BiPoly& p3 = v.new_gens[3];
  check(r, opt, "alpha1, alpha2 coprime", coprime_forms(a1, a2, rng));

  const auto row21 = column_times(psi, 1, r.phis[0]);  // C₂ᵀφ₁
  const auto row12 = column_times(psi, 0, r.phis[1]);  // C₁ᵀφ₂
  const auto q = solve_pair(a1, {a, b - mu}, row21, opt);
  const auto rp = solve_pair(a2, {a, b - (n - mu)}, row12, opt);
  const auto m = solve_pair(p3, {a, b}, row21, opt);
  const auto nn = solve_pair(p3, {a, b}, row12, opt);
  r.pairs.emplace("q", q);
  r.pairs.emplace("r", rp);
  r.pairs.emplace("m", m);
  r.pairs.emplace("n", nn);

  const auto& phi1 = r.phis[0].matrix;
  const auto& phi2 = r.phis[1].matrix;
  const std::vector<BiPoly> theta0 = sub(apply_matrix(phi1, pair_vec(q)), apply_matrix(phi2, pair_vec(rp)));
  r.syzygies.push_back(column(BiPoly::from_uv(v.g[0]), BiPoly::from_uv(v.g[1]), BiPoly::from_uv(v.g[2]), BiPoly{}, {0, n}));
  r.syzygies.push_back(column(theta0, BiPoly{}, {a, b - n}));
  r.syzygies.push_back(column(apply_matrix(phi1, pair_vec(m)), -a2, {a, b - n + mu}));
  r.syzygies.push_back(column(apply_matrix(phi2, pair_vec(nn)), -a1, {a, b - mu}));

  // Θ = [φ₁q − φ₂r | g]; its signed 2x2 minors are f'
  bool theta_ok = true;
  for (std::size_t i = 0; i < 3; ++i) r.theta.emplace_back(theta0[i], BiPoly::from_uv(v.g[i]));
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t x = i == 0 ? 1 : 0, y = i == 2 ? 1 : 2;
    BiPoly minor = det2(r.theta[x].first, r.theta[x].second, r.theta[y].first, r.theta[y].second);
    if (i % 2 == 1) minor = -minor;
    theta_ok = theta_ok && minor == fprime[i];
  }
  check(r, opt, "Theta signed minors equal f'", theta_ok);

  r.N = {det2(q.q0, q.q1, m.q0, m.q1) + det2(rp.q0, rp.q1, nn.q0, nn.q1), p3, -a1, a2};
  check(r, opt, "M N = 0", kernel_vector_ok(r));
  finish(r, v, in, opt);
  return r;
}

CaseResult run_dim4(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt) {
  if (v.dimV != 4) throw std::invalid_argument("run_dim4: dim V != 4");
  require_threshold(v, in);
  const int a = in.a, b = in.b, n = v.n;
  CaseResult r;
  r.tag = CaseTag::Dim4;
  std::mt19937_64 rng(opt.seed);

  r.psi = hilbert_burch_psi(v.g);
  const HBData& psi = *r.psi;
  const int mu1 = psi.matrix.entry_degree(0), mu2 = psi.matrix.entry_degree(1);
  r.mu = {mu1, mu2};
  check(r, opt, "psi signed minors", verify_resolution(psi));
  r.phis = column_resolutions(psi);
  for (std::size_t j = 0; j < r.phis.size(); ++j)
    check(r, opt, "phi" + std::to_string(j + 1) + " signed minors", verify_resolution(r.phis[j]));
  r.gammas = gamma_matrices(psi, r.phis);
  for (const auto& [ij, g] : r.gammas)
    check(r, opt, "gamma" + std::to_string(ij.first) + std::to_string(ij.second) + " signed minors",
          verify_resolution(g));

  const std::vector<BiPoly> fprime(v.new_gens.begin(), v.new_gens.end());
  r.alpha = psi_solve(fprime, psi, a, b);
  const BiPoly& a1 = r.alpha[0];
  const BiPoly& a2 = r.alpha[1];
  const BiPoly& a3 = r.alpha[2];
  check(r, opt, "alpha1, alpha2 coprime", coprime_forms(a1, a2, rng));

  const GradedSyzMatrix W12 = multiply(r.phis[1].matrix, r.gammas.at({1, 2}).matrix);
  const GradedSyzMatrix W13 = multiply(r.phis[2].matrix, r.gammas.at({1, 3}).matrix);
  const GradedSyzMatrix W23 = multiply(r.phis[2].matrix, r.gammas.at({2, 3}).matrix);
  const auto row213 = row_times(psi.matrix.column(1), W13);  // C₂ᵀφ₃γ₁₃
  const auto row312 = row_times(psi.matrix.column(2), W12);  // C₃ᵀφ₂γ₁₂
  const auto row123 = row_times(psi.matrix.column(0), W23);  // C₁ᵀφ₃γ₂₃

  const BiDegree d1{a, b - mu1}, d2{a, b - mu2}, d3{a, b - (n - mu1 - mu2)};
  const auto pa2 = solve_pair(a1, d1, row213, opt);
  const auto pa3 = solve_pair(a1, d1, row312, opt);
  const auto pb3 = solve_pair(a2, d2, row312, opt);
  const auto pb1 = solve_pair(a2, d2, row123, opt);
  const auto pc2 = solve_pair(a3, d3, row213, opt);
  const auto pc1 = solve_pair(a3, d3, row123, opt);
  r.pairs.emplace("a2", pa2);
  r.pairs.emplace("a3", pa3);
  r.pairs.emplace("b3", pb3);
  r.pairs.emplace("b1", pb1);
  r.pairs.emplace("c2", pc2);
  r.pairs.emplace("c1", pc1);

  auto syz = [](const std::vector<BiPoly>& e, BiDegree bd) { return column(e[0], e[1], e[2], e[3], bd); };
  r.syzygies.push_back(syz({BiPoly::from_uv(v.g[0]), BiPoly::from_uv(v.g[1]), BiPoly::from_uv(v.g[2]),
                            BiPoly::from_uv(v.g[3])},
                           {0, n}));
  r.syzygies.push_back(syz(sub(apply_matrix(W12, pair_vec(pb3)), apply_matrix(W13, pair_vec(pc2))), {a, b - n + mu1}));
  r.syzygies.push_back(syz(sub(apply_matrix(W23, pair_vec(pc1)), apply_matrix(W12, pair_vec(pa3))), {a, b - n + mu2}));
  r.syzygies.push_back(syz(sub(apply_matrix(W13, pair_vec(pa2)), apply_matrix(W23, pair_vec(pb1))), {a, b - mu1 - mu2}));

  // Each pairwise term T_ij equals ±(2x2 determinant)·S; the sign depends on the
  // normalization of φ_j and γ_ij, so it is read off the identity itself.
  const BiPoly A = det2(pa2.q0, pa2.q1, pc2.q0, pc2.q1);
  const BiPoly B = det2(pb1.q0, pb1.q1, pc1.q0, pc1.q1);
  const BiPoly C = det2(pa3.q0, pa3.q1, pb3.q0, pb3.q1);
  const std::vector<BiPoly> S0(r.syzygies[0].entries.begin(), r.syzygies[0].entries.end());
  auto scaled = [&](const BiPoly& x) {
    std::vector<BiPoly> out;
    for (const auto& e : S0) out.push_back(x * e);
    return out;
  };
  auto times = [](std::vector<BiPoly> v, const BiPoly& x) {
    for (auto& e : v) e = e * x;
    return v;
  };
  const auto T13 = sub(times(apply_matrix(W13, pair_vec(pa2)), a3), times(apply_matrix(W13, pair_vec(pc2)), a1));
  const auto T23 = sub(times(apply_matrix(W23, pair_vec(pc1)), a2), times(apply_matrix(W23, pair_vec(pb1)), a3));
  const auto T12 = sub(times(apply_matrix(W12, pair_vec(pb3)), a1), times(apply_matrix(W12, pair_vec(pa3)), a2));
  auto sign_of = [&](const std::vector<BiPoly>& T, const BiPoly& det, const std::string& name) {
    const auto plus = scaled(det);
    if (T == plus) return 1;
    if (T == scaled(-det)) return -1;
    check(r, opt, name + " is a multiple of S", false);
    return 1;
  };
  r.h_signs = {sign_of(T13, A, "T13"), sign_of(T23, -B, "T23"), sign_of(T12, C, "T12")};
  r.H = -(Fp(r.h_signs[0]) * A - Fp(r.h_signs[1]) * B + Fp(r.h_signs[2]) * C);
  r.N = {r.H, a1, a2, a3};
  check(r, opt, "alpha1 S1 + alpha2 S2 + alpha3 S3 + H S = 0", kernel_vector_ok(r));
  finish(r, v, in, opt);
  return r;
}

CaseResult run_case(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt) {
  switch (v.dimV) {
    case 2: return run_dim2(v, in, opt);
    case 3: return run_dim3(v, in, opt);
    case 4: return run_dim4(v, in, opt);
    default: throw HypothesisError("dim V = " + std::to_string(v.dimV) + " is not in {2,3,4}");
  }
}

}  // namespace tpsurf
