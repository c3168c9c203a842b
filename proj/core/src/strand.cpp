#include "tpsurf/strand.hpp"

#include <sstream>

#include "tpsurf/errors.hpp"
#include "tpsurf/parallel.hpp"

namespace tpsurf {

FieldMatrix StrandMatrix::at(const XPoint& x) const {
  FieldMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const LinearForm& l = entries[i * size + j];
      m(i, j) = l[0] * x[0] + l[1] * x[1] + l[2] * x[2] + l[3] * x[3];
    }
  return m;
}

StrandMatrix build_d1_strand(const std::vector<SyzygyColumn>& syzygies, int a, int b) {
  StrandMatrix m;
  m.a = a;
  m.b = b;
  const int R = 2 * a - 1, Q = b - 1;
  m.rows = monomial_basis(R, Q);
  for (std::size_t k = 0; k < syzygies.size(); ++k) {
    const BiDegree bd = syzygies[k].bidegree;
    for (const auto& e : syzygies[k].entries)
      if (!e.is_bihomogeneous(bd)) throw CertificateError("syzygy entry is not of its declared bidegree");
    for (const Monomial& mu : monomial_basis(R - bd.ds, Q - bd.duv)) m.cols.push_back({k, mu});
  }
  if (m.cols.size() != m.rows.size()) {
    std::ostringstream os;
    os << "strand matrix is " << m.rows.size() << " x " << m.cols.size() << ", not square";
    throw HypothesisError(os.str());
  }
  m.size = m.rows.size();
  m.entries.assign(m.size * m.size, LinearForm{});
  for (std::size_t j = 0; j < m.size; ++j) {
    const SyzygyColumn& s = syzygies[m.cols[j].syzygy];
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& [key, c] : s.entries[i].terms()) {
        const Monomial w = m.cols[j].multiplier * Monomial::from_key(key);
        m.entries[static_cast<std::size_t>(basis_index(w, R, Q)) * m.size + j][i] += c;
      }
  }
  return m;
}

Fp eval_det(const StrandMatrix& m, const XPoint& x) { return det_field(m.at(x)); }

XPoint random_point(std::mt19937_64& rng) {
  return {Fp::random(rng), Fp::random(rng), Fp::random(rng), Fp::random(rng)};
}

XPoly reconstruct_det(const StrandMatrix& m, const ReconstructOptions& opt) {
  const int D = static_cast<int>(m.size);
  if (D > opt.cap) {
    std::ostringstream os;
    os << "reconstruct_det: 2ab = " << D << " exceeds the cap " << opt.cap;
    throw InputError(os.str());
  }
  const std::size_t K = static_cast<std::size_t>(D) + 1;
  std::vector<Fp> nodes(K);
  for (std::size_t k = 0; k < K; ++k) nodes[k] = Fp(static_cast<std::int64_t>(k) + 1);

  // values on the grid (1, z_i, z_j, z_k)
  std::vector<Fp> val(K * K * K);
  parallel_for(K * K, opt.threads, [&](std::size_t ij) {
    const std::size_t i = ij / K, j = ij % K;
    for (std::size_t k = 0; k < K; ++k) val[(i * K + j) * K + k] = eval_det(m, {Fp(1), nodes[i], nodes[j], nodes[k]});
  });

  // inverse Vandermonde: coefficients = Vinv · values
  FieldMatrix aug(K, 2 * K);
  for (std::size_t r = 0; r < K; ++r) {
    Fp p(1);
    for (std::size_t e = 0; e < K; ++e, p *= nodes[r]) aug(r, e) = p;
    aug(r, K + r) = Fp(1);
  }
  const RrefResult rr = rref(aug);
  FieldMatrix vinv(K, K);
  for (std::size_t r = 0; r < K; ++r)
    for (std::size_t c = 0; c < K; ++c) vinv(r, c) = rr.reduced(r, K + c);

  auto transform = [&](std::size_t stride_axis) {
    // apply vinv along one axis of the K^3 tensor
    const std::size_t strides[3] = {K * K, K, 1};
    const std::size_t st = strides[stride_axis];
    std::vector<Fp> out(val.size());
    std::vector<Fp> line(K);
    for (std::size_t base = 0; base < val.size(); ++base) {
      if ((base / st) % K != 0) continue;
      for (std::size_t t = 0; t < K; ++t) line[t] = val[base + t * st];
      for (std::size_t e = 0; e < K; ++e) {
        Fp acc(0);
        for (std::size_t t = 0; t < K; ++t) acc += vinv(e, t) * line[t];
        out[base + e * st] = acc;
      }
    }
    val.swap(out);
  };
  transform(0);
  transform(1);
  transform(2);

  XPoly det;
  for (std::size_t e1 = 0; e1 < K; ++e1)
    for (std::size_t e2 = 0; e2 < K; ++e2)
      for (std::size_t e3 = 0; e3 < K; ++e3) {
        const Fp c = val[(e1 * K + e2) * K + e3];
        if (c.is_zero()) continue;
        const int tot = static_cast<int>(e1 + e2 + e3);
        if (tot > D) throw CertificateError("reconstruct_det: interpolant exceeds total degree 2ab");
        det.add_term({D - tot, static_cast<int>(e1), static_cast<int>(e2), static_cast<int>(e3)}, c);
      }

  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  for (int t = 0; t < opt.spot_checks; ++t) {
    const XPoint x = random_point(rng);
    if (det.eval(x) != eval_det(m, x)) throw CertificateError("reconstruct_det: spot check failed");
  }
  return det;
}

}  // namespace tpsurf
