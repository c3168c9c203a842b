#include "tpsurf/syzygy.hpp"

#include <sstream>

#include "tpsurf/errors.hpp"

namespace tpsurf {

void validate_input(const SurfaceInput& in) {
  if (in.a < 0 || in.b < 0 || (in.a == 0 && in.b == 0)) throw InputError("bidegree (a,b) must be nonnegative and nonzero");
  std::vector<FieldVector> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!in.gens[i].is_bihomogeneous({in.a, in.b}) || in.gens[i].is_zero()) {
      std::ostringstream os;
      os << "generator p" << i << " is not a nonzero bihomogeneous form of bidegree (" << in.a << ',' << in.b << ')';
      throw InputError(os.str());
    }
    rows.push_back(coeff_vector(in.gens[i], in.a, in.b));
  }
  if (rank(FieldMatrix::from_rows(rows)) != 4) throw InputError("generators are linearly dependent");
}

SurfaceInput mirror(const SurfaceInput& in) {
  SurfaceInput out{in.b, in.a, {}, in.field};
  for (std::size_t i = 0; i < 4; ++i) out.gens[i] = in.gens[i].mirror();
  return out;
}

BiPoly pairing(const SyzygyColumn& s, const GenList& gens) {
  BiPoly acc;
  for (std::size_t i = 0; i < 4; ++i) acc += s.entries[i] * gens[i];
  return acc;
}

bool annihilates(const SyzygyColumn& s, const GenList& gens) { return pairing(s, gens).is_zero(); }

SyzygyColumn mirror(const SyzygyColumn& s) {
  SyzygyColumn out;
  for (std::size_t i = 0; i < 4; ++i) out.entries[i] = s.entries[i].mirror();
  out.bidegree = {s.bidegree.duv, s.bidegree.ds};
  return out;
}

SyzygySearch find_minimal_syzygy(const SurfaceInput& in, int cap) {
  if (cap < 0) cap = in.b;
  for (int n = 1; n <= cap; ++n) {
    const int cols = 4 * (n + 1);
    FieldMatrix m(static_cast<std::size_t>((in.a + 1) * (in.b + n + 1)), cols);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= n; ++j) {
        const BiPoly prod = in.gens[i] * BiPoly::monomial({0, 0, n - j, j});
        for (const auto& [k, c] : prod.terms()) m(basis_index(Monomial::from_key(k), in.a, in.b + n), i * (n + 1) + j) = c;
      }
    auto ker = kernel_basis(m);
    if (!ker.empty()) return {n, std::move(ker)};
  }
  std::ostringstream os;
  os << "no singly graded syzygy of bidegree (0,n) with n <= " << cap;
  throw HypothesisError(os.str());
}

std::vector<BiPoly> build_f_family(const SurfaceInput& in, const FieldVector& column, int n) {
  if (column.size() != static_cast<std::size_t>(4 * (n + 1))) throw std::invalid_argument("build_f_family: bad column length");
  std::vector<BiPoly> f(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < 4; ++i) f[j] += column[i * (n + 1) + j] * in.gens[i];
  BiPoly check;
  for (int j = 0; j <= n; ++j) check += f[j] * BiPoly::monomial({0, 0, n - j, j});
  if (!check.is_zero()) throw CertificateError("syzygy identity Σ f_j u^{n-j} v^j = 0 failed");
  if (f.front().is_zero() || f.back().is_zero())
    throw CertificateError("f_0 or f_n vanishes: the syzygy degree is not minimal");
  return f;
}

VAnalysis analyze_V(const SurfaceInput& in, const FieldVector& column, int n, std::vector<BiPoly> f_family) {
  VAnalysis va;
  va.n = n;
  va.f_family = std::move(f_family);
  va.A = FieldMatrix(4, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= n; ++j) va.A(i, j) = column[i * (n + 1) + j];

  const RrefResult rr = rref(va.A);
  va.dimV = static_cast<int>(rr.rank);
  va.basis_idx = rr.pivots;
  if (va.dimV < 2 || va.dimV > std::min(n + 1, 4))
    throw HypothesisError("dim V = " + std::to_string(va.dimV) + " is outside [2, min(n+1,4)]; retry with another prime");
  va.B = FieldMatrix(rr.rank, va.A.cols());
  for (std::size_t k = 0; k < rr.rank; ++k)
    for (std::size_t j = 0; j < va.A.cols(); ++j) va.B(k, j) = rr.reduced(k, j);

  // Transition: columns are A[:, idx] for f', then unit vectors for appended p_i.
  std::vector<FieldVector> tcols;
  for (const std::size_t c : va.basis_idx) tcols.push_back(va.A.col_vector(c));
  for (std::size_t i = 0; i < 4 && tcols.size() < 4; ++i) {
    FieldVector e(4);
    e[i] = Fp(1);
    tcols.push_back(e);
    if (rank(FieldMatrix::from_rows(tcols)) != tcols.size()) tcols.pop_back();
  }
  va.T = FieldMatrix::from_rows(tcols).transpose();
  for (std::size_t k = 0; k < 4; ++k) {
    BiPoly g;
    for (std::size_t i = 0; i < 4; ++i) g += va.T(i, k) * in.gens[i];
    va.new_gens[k] = std::move(g);
  }
  for (std::size_t k = 0; k < va.basis_idx.size(); ++k)
    if (!(va.new_gens[k] == va.f_family[va.basis_idx[k]])) throw CertificateError("f' does not match the f family");

  for (std::size_t k = 0; k < rr.rank; ++k) va.g.emplace_back(n, va.B.row_vector(k));

  // f = f'·B
  for (int j = 0; j <= n; ++j) {
    BiPoly acc;
    for (std::size_t k = 0; k < rr.rank; ++k) acc += va.B(k, j) * va.new_gens[k];
    if (!(acc == va.f_family[j])) throw CertificateError("identity f = f'·B failed");
  }
  SyzygyColumn s;
  s.bidegree = {0, n};
  for (std::size_t k = 0; k < va.g.size(); ++k) s.entries[k] = BiPoly::from_uv(va.g[k]);
  if (!annihilates(s, va.new_gens)) throw CertificateError("[g; 0] is not a syzygy on the new generators");
  if (!UniHomPoly::gcd(va.g).is_unit()) throw CertificateError("entries of g share a factor: the syzygy is not minimal");
  return va;
}

VAnalysis analyze(const SurfaceInput& in, int cap) {
  validate_input(in);
  const SyzygySearch ss = find_minimal_syzygy(in, cap);
  auto f = build_f_family(in, ss.kernel.front(), ss.n);
  VAnalysis va = analyze_V(in, ss.kernel.front(), ss.n, std::move(f));
  va.kernel_dim = ss.kernel.size();
  return va;
}

SyzygyColumn to_original(const SyzygyColumn& s, const FieldMatrix& T) {
  SyzygyColumn out;
  out.bidegree = s.bidegree;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) out.entries[i] += T(i, k) * s.entries[k];
  return out;
}

}  // namespace tpsurf
