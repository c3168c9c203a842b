#include "tpsurf/membership.hpp"

#include <sstream>
#include <stdexcept>

#include "tpsurf/errors.hpp"

namespace tpsurf {

SylvesterMatrix sylvester(const UniHomPoly& f, const UniHomPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("sylvester: zero form");
  const int m = f.degree(), n = g.degree();
  SylvesterMatrix s{f, g, FieldMatrix(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n))};
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s.matrix(r, r + k) = f.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s.matrix(n + r, r + k) = g.coeff(k);
  return s;
}

TwoGenCertificate two_gen_solve(const BiPoly& target, BiDegree bd, const UniHomPoly& h0, const UniHomPoly& h1,
                                FreeConvention conv) {
  if (h0.is_zero() || h1.is_zero()) throw HypothesisError("two_gen_solve: a generator vanishes");
  const int d = bd.duv, c = bd.ds;
  const int e0 = d - h0.degree(), e1 = d - h1.degree();
  if (d < h0.degree() + h1.degree() - 1) {
    std::ostringstream os;
    os << "degree " << d << " is below the Sylvester threshold " << h0.degree() + h1.degree() - 1
       << " (b >= 2n-1 fails)";
    throw HypothesisError(os.str());
  }
  if (sylvester(h0, h1).resultant().is_zero()) throw HypothesisError("two_gen_solve: generators are not coprime");

  const std::size_t n0 = e0 >= 0 ? static_cast<std::size_t>(e0) + 1 : 0;
  const std::size_t n1 = e1 >= 0 ? static_cast<std::size_t>(e1) + 1 : 0;
  FieldMatrix m(static_cast<std::size_t>(d) + 1, n0 + n1);
  for (std::size_t k = 0; k < n0; ++k)
    for (int r = 0; r <= h0.degree(); ++r) m(k + r, k) = h0.coeff(r);
  for (std::size_t k = 0; k < n1; ++k)
    for (int r = 0; r <= h1.degree(); ++r) m(k + r, n0 + k) = h1.coeff(r);

  const auto slices = target.st_slices(c, d);
  std::vector<UniHomPoly> q0s, q1s;
  for (const auto& sl : slices) {
    FieldVector rhs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) rhs[k] = sl.coeff(k);
    const auto x = solve_particular(m, rhs, conv);
    if (!x) throw CertificateError("two_gen_solve: inconsistent system above the Sylvester threshold");
    q0s.emplace_back(e0, FieldVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(n0)));
    q1s.emplace_back(e1, FieldVector(x->begin() + static_cast<std::ptrdiff_t>(n0), x->end()));
  }
  TwoGenCertificate cert{target, h0, h1, BiPoly::from_st_slices(q0s, c), BiPoly::from_st_slices(q1s, c)};
  if (!(cert.q0 * h0 + cert.q1 * h1 == target)) throw CertificateError("two_gen_solve: reconstruction failed");
  return cert;
}

std::vector<BiPoly> apply_matrix(const GradedSyzMatrix& m, const std::vector<BiPoly>& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<BiPoly> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !x[j].is_zero()) out[i] += m(i, j) * x[j];
  return out;
}

std::vector<BiPoly> psi_solve(const std::vector<BiPoly>& fprime, const HBData& psi, int a, int b) {
  const GradedSyzMatrix& M = psi.matrix;
  if (fprime.size() != M.rows()) throw std::invalid_argument("psi_solve: dimension mismatch");
  {
    BiPoly check;
    for (std::size_t i = 0; i < fprime.size(); ++i) check += fprime[i] * psi.gens[i];
    if (!check.is_zero()) throw CertificateError("psi_solve: f' is not a syzygy on g");
  }
  // unknown block j: coefficients of a (u,v)-form of degree b - mu_j
  std::vector<int> deg;
  std::vector<std::size_t> off;
  std::size_t cols = 0;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    const int e = b - M.entry_degree(j);
    if (e < 0) throw CertificateError("psi_solve: column degree exceeds b");
    deg.push_back(e);
    off.push_back(cols);
    cols += static_cast<std::size_t>(e) + 1;
  }
  const std::size_t rows_per = static_cast<std::size_t>(b) + 1;
  FieldMatrix m(M.rows() * rows_per, cols);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const UniHomPoly& e = M(i, j);
      if (e.is_zero()) continue;
      for (int k = 0; k <= deg[j]; ++k)
        for (int r = 0; r <= e.degree(); ++r) m(i * rows_per + static_cast<std::size_t>(k + r), off[j] + k) = e.coeff(r);
    }
  if (!kernel_basis(m).empty()) throw CertificateError("psi_solve: psi strand is not injective");

  std::vector<std::vector<UniHomPoly>> slices;  // per i
  for (const auto& f : fprime) slices.push_back(f.st_slices(a, b));
  std::vector<std::vector<UniHomPoly>> alpha_slices(M.cols());
  for (int sidx = 0; sidx <= a; ++sidx) {
    FieldVector rhs(m.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (int k = 0; k <= b; ++k) rhs[i * rows_per + k] = slices[i][sidx].coeff(k);
    const auto x = solve_particular(m, rhs);
    if (!x) throw CertificateError("psi_solve: f' is not in the image of psi");
    for (std::size_t j = 0; j < M.cols(); ++j)
      alpha_slices[j].emplace_back(deg[j], FieldVector(x->begin() + static_cast<std::ptrdiff_t>(off[j]),
                                                       x->begin() + static_cast<std::ptrdiff_t>(off[j] + deg[j] + 1)));
  }
  std::vector<BiPoly> alpha;
  for (auto& sl : alpha_slices) alpha.push_back(BiPoly::from_st_slices(sl, a));
  const auto back = apply_matrix(M, alpha);
  for (std::size_t i = 0; i < back.size(); ++i)
    if (!(back[i] == fprime[i])) throw CertificateError("psi_solve: reconstruction failed");
  return alpha;
}

}  // namespace tpsurf
