#include "tpsurf/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tpsurf {

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp(1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<FieldVector>& rows) {
  if (rows.empty()) return {};
  FieldMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

FieldVector FieldMatrix::col_vector(std::size_t j) const {
  FieldVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Fp x) { return x.is_zero(); });
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  FieldMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fp x = a(i, k);
      if (x.is_zero()) continue;
      const Fp* br = b.row(k);
      Fp* cr = c.row(i);
      for (std::size_t j = 0; j < b.cols_; ++j) cr[j] += x * br[j];
    }
  return c;
}

FieldVector operator*(const FieldMatrix& a, const FieldVector& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  FieldVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const Fp* r = a.row(i);
    Fp acc(0);
    for (std::size_t j = 0; j < a.cols_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

// dst -= f * src over columns [from, cols)
inline void axpy(Fp* dst, const Fp* src, Fp f, std::size_t from, std::size_t cols) {
  const Fp nf = -f;
  if (field::detail::g_mersenne31) {
    // fused multiply-add with a single Mersenne reduction; vectorizes well
    constexpr std::uint64_t M = 2147483647u;
    const std::uint64_t g = nf.value();
    auto* d = reinterpret_cast<std::uint32_t*>(dst);
    const auto* s = reinterpret_cast<const std::uint32_t*>(src);
    for (std::size_t j = from; j < cols; ++j) {
      std::uint64_t x = g * s[j] + d[j];
      x = (x & M) + (x >> 31);
      x = (x & M) + (x >> 31);
      d[j] = static_cast<std::uint32_t>(x >= M ? x - M : x);
    }
    return;
  }
  for (std::size_t j = from; j < cols; ++j) dst[j] += nf * src[j];
}

// Forward elimination to row echelon form with unit pivots; returns pivot columns.
std::vector<std::size_t> echelon(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + C, m.row(r));
    const Fp inv = m(r, c).inv();
    Fp* pr = m.row(r);
    for (std::size_t j = c; j < C; ++j) pr[j] *= inv;
    for (std::size_t i = r + 1; i < R; ++i) {
      const Fp f = m(i, c);
      if (!f.is_zero()) axpy(m.row(i), pr, f, c, C);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(FieldMatrix m) {
  RrefResult res;
  res.pivots = echelon(m);
  const std::size_t r = res.pivots.size(), C = m.cols();
  res.rank = r;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = res.pivots[k];
    const Fp* pr = m.row(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Fp f = m(i, c);
      if (!f.is_zero()) axpy(m.row(i), pr, f, c, C);
    }
  }
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(FieldMatrix m) { return echelon(m).size(); }

std::vector<FieldVector> kernel_basis(const FieldMatrix& m) {
  // Echelon form plus back substitution per free column; equals the RREF basis
  // without paying for full reduction when the kernel is small.
  FieldMatrix e = m;
  const auto pivots = echelon(e);
  const std::size_t C = m.cols(), r = pivots.size();
  std::vector<bool> is_pivot(C, false);
  for (const std::size_t p : pivots) is_pivot[p] = true;
  std::vector<FieldVector> out;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    FieldVector v(C);
    v[f] = Fp(1);
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t pc = pivots[k];
      if (pc > f) continue;
      const Fp* row = e.row(k);
      Fp acc(0);
      for (std::size_t j = pc + 1; j <= f; ++j) acc += row[j] * v[j];
      v[pc] = -acc;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<FieldVector> solve_particular(const FieldMatrix& m, const FieldVector& rhs, FreeConvention conv) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_particular: rhs length mismatch");
  const std::size_t C = m.cols();
  FieldMatrix aug(m.rows(), C + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i), m.row(i) + C, aug.row(i));
    aug(i, C) = rhs[i];
  }
  const RrefResult rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == C) return std::nullopt;
  const Fp fv = conv == FreeConvention::One ? Fp(1) : Fp(0);
  std::vector<bool> is_pivot(C, false);
  for (const std::size_t p : rr.pivots) is_pivot[p] = true;
  FieldVector x(C, fv);
  for (std::size_t k = 0; k < rr.rank; ++k) {
    Fp val = rr.reduced(k, C);
    if (!fv.is_zero())
      for (std::size_t j = rr.pivots[k] + 1; j < C; ++j)
        if (!is_pivot[j]) val -= rr.reduced(k, j) * fv;
    x[rr.pivots[k]] = val;
  }
  return x;
}

Fp det_field(FieldMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_field: matrix is not square");
  const std::size_t n = m.rows();
  Fp det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Fp(0);
    if (piv != c) {
      std::swap_ranges(m.row(piv), m.row(piv) + n, m.row(c));
      det = -det;
    }
    const Fp d = m(c, c);
    det *= d;
    const Fp inv = d.inv();
    const Fp* pr = m.row(c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Fp f = m(i, c);
      if (!f.is_zero()) axpy(m.row(i), pr, f * inv, c, n);
    }
  }
  return det;
}

}  // namespace tpsurf
