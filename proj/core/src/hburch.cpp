#include "tpsurf/hburch.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tpsurf/errors.hpp"
#include "tpsurf/linalg.hpp"

namespace tpsurf {

std::vector<UniHomPoly> GradedSyzMatrix::column(std::size_t j) const {
  std::vector<UniHomPoly> c;
  c.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.push_back(entries[i][j]);
  return c;
}

bool GradedSyzMatrix::has_unit_entry() const {
  for (const auto& r : entries)
    for (const auto& e : r)
      if (e.is_unit()) return true;
  return false;
}

UniHomPoly poly_det(const std::vector<std::vector<UniHomPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return UniHomPoly::constant(Fp(1));
  if (n == 1) return m[0][0];
  UniHomPoly acc;
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<UniHomPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<UniHomPoly> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(std::move(r));
    }
    UniHomPoly term = m[0][j] * poly_det(minor);
    if (j % 2 == 1) term = -term;
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

std::vector<UniHomPoly> signed_minors(const GradedSyzMatrix& m) {
  std::vector<UniHomPoly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::vector<UniHomPoly>> sub;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != i) sub.push_back(m.entries[r]);
    UniHomPoly d = poly_det(sub);
    out.push_back(i % 2 == 0 ? d : -d);
  }
  return out;
}

std::vector<UniHomPoly> row_times(const std::vector<UniHomPoly>& row, const GradedSyzMatrix& m) {
  if (row.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
  std::vector<UniHomPoly> out;
  for (std::size_t l = 0; l < m.cols(); ++l) {
    UniHomPoly acc = UniHomPoly::zero(row[0].degree() + m(0, l).degree());
    for (std::size_t r = 0; r < m.rows(); ++r) acc = acc + row[r] * m(r, l);
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

// Incrementally reduced row space used to test membership.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Reduces v in place; true if it was already in the span.
  bool reduce(FieldVector& v) const {
    for (const auto& [p, r] : rows_) {
      const Fp f = v[p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * r[j];
    }
    return std::all_of(v.begin(), v.end(), [](Fp x) { return x.is_zero(); });
  }

  // Adds v if independent; returns whether it was added.
  bool insert(FieldVector v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    const Fp inv = v[p].inv();
    for (auto& x : v) x *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, FieldVector>> rows_;
};

struct Layout {
  std::vector<int> offset;  // start of block i, -1 if the block is empty
  std::size_t size = 0;
};

Layout layout_at(const std::vector<int>& degrees, int delta) {
  Layout l;
  for (const int d : degrees) {
    if (delta - d >= 0) {
      l.offset.push_back(static_cast<int>(l.size));
      l.size += static_cast<std::size_t>(delta - d + 1);
    } else {
      l.offset.push_back(-1);
    }
  }
  return l;
}

// Entries of a syzygy times u^{e-k} v^k, flattened into the degree-delta layout.
FieldVector flatten_multiple(const std::vector<UniHomPoly>& syz, int k, int e, const Layout& l,
                             const std::vector<int>& degrees, int delta) {
  FieldVector v(l.size);
  const UniHomPoly mono = UniHomPoly::monomial(e, k);
  for (std::size_t i = 0; i < syz.size(); ++i) {
    if (l.offset[i] < 0) continue;
    const UniHomPoly prod = syz[i] * mono;
    if (prod.is_zero()) continue;
    for (int c = 0; c <= delta - degrees[i]; ++c) v[l.offset[i] + c] = prod.coeff(c);
  }
  return v;
}

}  // namespace

GradedSyzMatrix min_graded_syzygies(const std::vector<UniHomPoly>& gens, const std::vector<int>& degrees) {
  const std::size_t k = gens.size();
  if (k < 2 || degrees.size() != k) throw std::invalid_argument("min_graded_syzygies: need >= 2 generators with degrees");
  std::vector<UniHomPoly> nonzero;
  for (std::size_t i = 0; i < k; ++i) {
    if (!gens[i].is_zero() && gens[i].degree() != degrees[i])
      throw std::invalid_argument("min_graded_syzygies: generator degree mismatch");
    if (!gens[i].is_zero()) nonzero.push_back(gens[i]);
  }
  if (nonzero.empty()) throw HypothesisError("all generators vanish");
  if (!UniHomPoly::gcd(nonzero).is_unit()) throw HypothesisError("generators share a nonconstant factor (ideal is not Artinian)");

  const int dmin = *std::min_element(degrees.begin(), degrees.end());
  const int dsum = std::accumulate(degrees.begin(), degrees.end(), 0);
  const int dmax_search = dsum + 1;

  std::vector<std::vector<UniHomPoly>> found;  // syzygies as columns
  std::vector<int> found_deg;
  for (int delta = dmin; delta <= dmax_search && found.size() + 1 < k; ++delta) {
    const Layout l = layout_at(degrees, delta);
    if (l.size == 0) continue;
    FieldMatrix m(static_cast<std::size_t>(delta) + 1, l.size);
    for (std::size_t i = 0; i < k; ++i) {
      if (l.offset[i] < 0 || gens[i].is_zero()) continue;
      const int e = delta - degrees[i];
      for (int c = 0; c <= e; ++c)
        for (int r = 0; r <= degrees[i]; ++r) m(static_cast<std::size_t>(c + r), l.offset[i] + c) = gens[i].coeff(r);
    }
    const auto ker = kernel_basis(m);
    if (ker.empty()) continue;
    Echelon span(l.size);
    for (std::size_t s = 0; s < found.size(); ++s) {
      const int e = delta - found_deg[s];
      for (int c = 0; c <= e; ++c) span.insert(flatten_multiple(found[s], c, e, l, degrees, delta));
    }
    for (const auto& v : ker) {
      if (found.size() + 1 >= k) break;
      if (!span.insert(v)) continue;
      std::vector<UniHomPoly> col;
      for (std::size_t i = 0; i < k; ++i) {
        const int e = delta - degrees[i];
        if (l.offset[i] < 0) {
          col.push_back(UniHomPoly::zero(e));
          continue;
        }
        col.emplace_back(e, FieldVector(v.begin() + l.offset[i], v.begin() + l.offset[i] + e + 1));
      }
      found.push_back(std::move(col));
      found_deg.push_back(delta);
    }
  }
  if (found.size() + 1 != k) throw CertificateError("syzygy search did not reach the Hilbert-Burch shape");

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_row = [&](std::size_t s) {
    for (std::size_t i = 0; i < k; ++i)
      if (!found[s][i].is_zero()) return i;
    return k;
  };
  auto support = [&](std::size_t s) {
    return std::count_if(found[s].begin(), found[s].end(), [](const UniHomPoly& e) { return !e.is_zero(); });
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (found_deg[x] != found_deg[y]) return found_deg[x] < found_deg[y];
    if (support(x) != support(y)) return support(x) < support(y);
    return first_row(x) < first_row(y);
  });

  GradedSyzMatrix out;
  out.row_degrees = degrees;
  out.entries.assign(k, {});
  for (const std::size_t s : order) {
    out.col_degrees.push_back(found_deg[s]);
    for (std::size_t i = 0; i < k; ++i) out.entries[i].push_back(found[s][i]);
  }
  const int csum = std::accumulate(out.col_degrees.begin(), out.col_degrees.end(), 0);
  if (csum != dsum) {
    std::ostringstream os;
    os << "degree-sum identity failed: columns " << csum << " vs rows " << dsum;
    throw CertificateError(os.str());
  }
  return out;
}

HBData hilbert_burch(const std::vector<UniHomPoly>& gens, const std::vector<int>& degrees) {
  HBData hb;
  hb.gens.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) hb.gens.push_back(gens[i].with_degree(degrees[i]));
  hb.matrix = min_graded_syzygies(hb.gens, degrees);

  const auto minors = signed_minors(hb.matrix);
  std::size_t i0 = 0;
  while (i0 < minors.size() && minors[i0].is_zero()) ++i0;
  if (i0 == minors.size() || hb.gens[i0].is_zero())
    throw CertificateError("signed minors are not proportional to the generators");
  const int t = minors[i0].first_nonzero();
  const Fp lambda = hb.gens[i0].coeff(t) / minors[i0].coeff(t);
  for (std::size_t r = 0; r < hb.matrix.rows(); ++r) hb.matrix(r, 0) = lambda * hb.matrix(r, 0);
  const auto check = signed_minors(hb.matrix);
  for (std::size_t i = 0; i < check.size(); ++i)
    if (!(check[i] == hb.gens[i])) throw CertificateError("signed minor " + std::to_string(i) + " differs from its generator");
  hb.normalized = true;
  return hb;
}

HBData hilbert_burch_psi(const std::vector<UniHomPoly>& g) {
  if (g.size() < 2 || g.size() > 4) throw std::invalid_argument("hilbert_burch_psi: expects 2, 3 or 4 forms");
  const int n = g.front().degree();
  HBData hb = hilbert_burch(g, std::vector<int>(g.size(), n));
  if (hb.matrix.has_unit_entry()) throw CertificateError("Hilbert-Burch matrix of g is not minimal");
  return hb;
}

std::vector<HBData> column_resolutions(const HBData& psi) {
  std::vector<HBData> out;
  for (std::size_t j = 0; j < psi.matrix.cols(); ++j) {
    const int mu = psi.matrix.entry_degree(j);
    out.push_back(hilbert_burch(psi.matrix.column(j), std::vector<int>(psi.matrix.rows(), mu)));
  }
  return out;
}

std::vector<UniHomPoly> column_times(const HBData& psi, std::size_t i, const HBData& phi_j) {
  return row_times(psi.matrix.column(i), phi_j.matrix);
}

std::map<std::pair<int, int>, HBData> gamma_matrices(const HBData& psi, const std::vector<HBData>& phis) {
  std::map<std::pair<int, int>, HBData> out;
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto row = column_times(psi, i - 1, phis.at(j - 1));
    std::vector<int> deg;
    for (const auto& e : row) deg.push_back(e.degree());
    bool all_zero = std::all_of(row.begin(), row.end(), [](const UniHomPoly& e) { return e.is_zero(); });
    if (all_zero) throw CertificateError("C_i^T phi_j vanishes identically");
    out.emplace(std::pair{i, j}, hilbert_burch(row, deg));
  }
  return out;
}

bool verify_resolution(const HBData& hb) {
  for (const auto& e : row_times(hb.gens, hb.matrix))
    if (!e.is_zero()) return false;
  if (hb.normalized) {
    const auto m = signed_minors(hb.matrix);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!(m[i] == hb.gens[i])) return false;
  }
  int rs = 0, cs = 0;
  for (const int d : hb.matrix.row_degrees) rs += d;
  for (const int d : hb.matrix.col_degrees) cs += d;
  return rs == cs;
}

}  // namespace tpsurf
