#include "tpsurf/oracle.hpp"

#include <numeric>
#include <sstream>

#include "tpsurf/errors.hpp"
#include "tpsurf/linalg.hpp"
#include "tpsurf/membership.hpp"
#include "tpsurf/univariate.hpp"

namespace tpsurf {

std::vector<XExponent> x_monomials(int e) {
  std::vector<XExponent> out;
  for (int e0 = e; e0 >= 0; --e0)
    for (int e1 = e - e0; e1 >= 0; --e1)
      for (int e2 = e - e0 - e1; e2 >= 0; --e2) out.push_back({e0, e1, e2, e - e0 - e1 - e2});
  return out;
}

namespace {

// Values of every monomial in `mons` (all of degree e) at the point y.
void monomial_values(const std::vector<XExponent>& mons, int e, const XPoint& y, Fp* out) {
  std::array<std::vector<Fp>, 4> pw;
  for (int i = 0; i < 4; ++i) {
    pw[i].assign(static_cast<std::size_t>(e) + 1, Fp(1));
    for (int j = 1; j <= e; ++j) pw[i][j] = pw[i][j - 1] * y[i];
  }
  for (std::size_t k = 0; k < mons.size(); ++k) {
    const auto& m = mons[k];
    out[k] = pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]] * pw[3][m[3]];
  }
}

XPoint image(const GenList& g, Fp s, Fp t, Fp u, Fp v) {
  return {g[0].eval(s, t, u, v), g[1].eval(s, t, u, v), g[2].eval(s, t, u, v), g[3].eval(s, t, u, v)};
}

struct KernelAt {
  std::vector<FieldVector> basis;
  std::vector<XExponent> mons;
};

KernelAt kernel_at(const GenList& gens, int e, std::mt19937_64& rng) {
  KernelAt k;
  k.mons = x_monomials(e);
  const std::size_t n = k.mons.size();
  FieldMatrix m(n + 8, n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const XPoint y = image(gens, Fp::random(rng), Fp::random(rng), Fp::random(rng), Fp::random(rng));
    monomial_values(k.mons, e, y, m.row(r));
  }
  k.basis = kernel_basis(m);
  return k;
}

XPoly to_xpoly(const std::vector<XExponent>& mons, const FieldVector& v) {
  XPoly f;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!v[i].is_zero()) f.add_term(mons[i], v[i]);
  return f;
}

}  // namespace

bool vanishes_on(const XPoly& F, const GenList& gens, int a, int b) {
  if (F.is_zero()) return true;
  const int e = F.degree();
  // F(p) has bidegree (ea, eb); its dehomogenization s = u = 1 is determined
  // by values on an (ea+1) x (eb+1) grid.
  for (int i = 0; i <= e * a; ++i)
    for (int j = 0; j <= e * b; ++j)
      if (!F.eval(image(gens, Fp(1), Fp(i), Fp(1), Fp(j))).is_zero()) return false;
  return true;
}

EliminationResult implicit_by_elimination(const SurfaceInput& in, const EliminationOptions& opt) {
  const int top = 2 * in.a * in.b;
  const int cap = opt.cap_e < 0 ? top : opt.cap_e;
  std::mt19937_64 rng(opt.seed);

  // Exactly verified kernel at e, or empty.
  auto attempt = [&](int e) -> std::optional<KernelAt> {
    for (int tries = 0; tries < 3; ++tries) {
      KernelAt k = kernel_at(in.gens, e, rng);
      if (k.basis.empty()) return std::nullopt;
      if (vanishes_on(to_xpoly(k.mons, k.basis.front()), in.gens, in.a, in.b)) return k;
    }
    throw CertificateError("implicit_by_elimination: sampled kernel at e = " + std::to_string(e) +
                           " does not vanish on the surface");
  };

  auto finish = [](int e, const KernelAt& k) {
    EliminationResult r;
    r.e = e;
    r.F = to_xpoly(k.mons, k.basis.front()).monic();
    r.kernel_dim = k.basis.size();
    return r;
  };

  std::vector<int> order;
  if (opt.divisors_only) {
    for (int e = 1; e <= cap; ++e)
      if (top % e == 0) order.push_back(e);
  } else {
    for (int e = 1; e <= cap; ++e) order.push_back(e);
  }

  int prev = 0;
  for (int e : order) {
    auto k = attempt(e);
    if (!k) {
      prev = e;
      continue;
    }
    // A smaller-degree relation would show up here as a kernel of dimension > 1.
    if (k->basis.size() > 1 && opt.divisors_only) {
      for (int f = prev + 1; f < e; ++f)
        if (auto kf = attempt(f)) return finish(f, *kf);
    }
    return finish(e, *k);
  }
  if (opt.divisors_only) {
    for (int e = 1; e <= cap; ++e)
      if (top % e != 0)
        if (auto k = attempt(e)) return finish(e, *k);
  }
  throw HypothesisError("implicit_by_elimination: no relation of degree <= " + std::to_string(cap) +
                        " (degenerate input)");
}

VerifyReport verify_implicitization(const XPoly& F, const StrandMatrix& strand, int points, std::uint64_t seed) {
  VerifyReport rep;
  rep.degF = F.degree();
  const int top = 2 * strand.a * strand.b;
  if (rep.degF <= 0 || top % rep.degF != 0) {
    rep.message = "deg F = " + std::to_string(rep.degF) + " does not divide 2ab = " + std::to_string(top);
    return rep;
  }
  rep.d = top / rep.degF;
  std::mt19937_64 rng(seed);

  bool fitted = false;
  for (int tries = 0; tries < 32 && !fitted; ++tries) {
    const XPoint x = random_point(rng);
    const Fp fx = F.eval(x);
    if (fx.is_zero()) continue;
    rep.c = eval_det(strand, x) / fx.pow(static_cast<std::uint64_t>(rep.d));
    fitted = true;
  }
  if (!fitted) {
    rep.message = "could not find a point with F != 0";
    return rep;
  }
  if (rep.c.is_zero()) {
    rep.message = "det vanishes where F does not (c = 0)";
    return rep;
  }

  std::ostringstream fails;
  for (int i = 0; i < points; ++i) {
    const XPoint x = random_point(rng);
    const Fp lhs = eval_det(strand, x);
    const Fp rhs = rep.c * F.eval(x).pow(static_cast<std::uint64_t>(rep.d));
    ++rep.points_checked;
    if (lhs == rhs) {
      ++rep.points_passed;
    } else if (rep.points_checked - rep.points_passed <= 3) {
      fails << " at (" << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << "): det = " << lhs
            << ", c*F^d = " << rhs << ";";
    }
  }
  rep.ok = rep.points_passed == rep.points_checked && points > 0;
  if (!rep.ok)
    rep.message = std::to_string(rep.points_checked - rep.points_passed) + " of " +
                  std::to_string(rep.points_checked) + " point checks failed:" + fails.str();
  return rep;
}

const char* to_string(BasepointStatus s) {
  switch (s) {
    case BasepointStatus::Free: return "Free";
    case BasepointStatus::Undetermined: return "Undetermined";
    case BasepointStatus::Found: return "Found";
  }
  return "?";
}

namespace {

// Resultant w.r.t. (u,v) of two forms of bidegree (c,d): a binary form of degree 2cd in (s,t).
UniHomPoly uv_resultant(const BiPoly& f, const BiPoly& g, int c, int d) {
  const int D = 2 * c * d;
  FieldMatrix vander(static_cast<std::size_t>(D) + 1, static_cast<std::size_t>(D) + 1);
  FieldVector vals(static_cast<std::size_t>(D) + 1);
  for (int k = 0; k <= D; ++k) {
    const Fp tau(k);
    Fp pw(1);
    for (int j = 0; j <= D; ++j, pw *= tau) vander(k, j) = pw;
    const UniHomPoly fs = f.at_st(Fp(1), tau, d), gs = g.at_st(Fp(1), tau, d);
    vals[k] = (fs.is_zero() || gs.is_zero()) ? Fp(0) : sylvester(fs, gs).resultant();
  }
  const auto sol = solve_particular(vander, vals);
  return UniHomPoly(D, *sol);
}

UniHomPoly resultant_gcd(const GenList& g, int c, int d) {
  std::vector<UniHomPoly> rs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rs.push_back(uv_resultant(g[i], g[j], c, d));
  return UniHomPoly::gcd(rs);
}

std::vector<ProjectivePoint> projective_roots(const UniHomPoly& G, std::mt19937_64& rng) {
  std::vector<ProjectivePoint> out;
  if (G.is_zero()) return out;
  // G(1, x) in ascending powers of x.
  const UPoly h(G.coeffs());
  for (Fp r : h.roots(rng)) out.push_back({Fp(1), r});
  if (G.coeff(G.degree()).is_zero()) out.push_back({Fp(0), Fp(1)});
  return out;
}

// gcd over the fiber (s:t) = pt of the four specialized forms of degree d.
UniHomPoly fiber_gcd(const GenList& g, ProjectivePoint pt, int d) {
  std::vector<UniHomPoly> fs;
  for (const auto& p : g) fs.push_back(p.at_st(pt.x, pt.y, d));
  return UniHomPoly::gcd(fs);
}

std::string point_string(ProjectivePoint p) {
  std::ostringstream os;
  os << '(' << p.x << ':' << p.y << ')';
  return os.str();
}

// Looks for a confirmed basepoint over the roots of G (or a generic fiber if G = 0).
std::optional<std::string> confirm(const GenList& g, const UniHomPoly& G, const std::vector<ProjectivePoint>& roots,
                                   int d, bool mirrored, std::mt19937_64& rng) {
  const char* first = mirrored ? "(u:v)" : "(s:t)";
  const char x = mirrored ? 's' : 'u', y = mirrored ? 't' : 'v';
  auto describe = [&](ProjectivePoint pt, const UniHomPoly& h) {
    std::string s = first + std::string(" = ") + point_string(pt);
    if (h.is_zero()) return s + ", every point of the fiber";
    return s + ", common factor " + h.to_string(x, y);
  };
  for (const auto& pt : roots) {
    const UniHomPoly h = fiber_gcd(g, pt, d);
    if (!h.is_unit()) return describe(pt, h);
  }
  if (G.is_zero()) {
    const ProjectivePoint pt{Fp(1), Fp::random(rng)};
    const UniHomPoly h = fiber_gcd(g, pt, d);
    if (!h.is_unit()) return "generic fiber " + describe(pt, h);
  }
  return std::nullopt;
}

}  // namespace

BasepointReport basepoint_check(const SurfaceInput& in, std::uint64_t seed) {
  BasepointReport rep;
  std::mt19937_64 rng(seed);
  const SurfaceInput mir = mirror(in);
  rep.G_uv = resultant_gcd(in.gens, in.a, in.b);
  rep.G_st = resultant_gcd(mir.gens, mir.a, mir.b);
  if (rep.G_uv.is_unit() || rep.G_st.is_unit()) {
    rep.status = BasepointStatus::Free;
    return rep;
  }
  rep.candidates_st = projective_roots(rep.G_uv, rng);
  rep.candidates_uv = projective_roots(rep.G_st, rng);
  auto found = confirm(in.gens, rep.G_uv, rep.candidates_st, in.b, false, rng);
  if (!found) found = confirm(mir.gens, rep.G_st, rep.candidates_uv, mir.b, true, rng);
  if (found) {
    rep.status = BasepointStatus::Found;
    rep.detail = *found;
  } else {
    rep.status = BasepointStatus::Undetermined;
    rep.detail = "G has no base-field root with a common fiber factor";
  }
  return rep;
}

}  // namespace tpsurf
