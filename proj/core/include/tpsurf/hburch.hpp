#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tpsurf/bipoly.hpp"

namespace tpsurf {

// Matrix of binary forms; entry (i,j) has degree col_degrees[j] - row_degrees[i].
struct GradedSyzMatrix {
  std::vector<std::vector<UniHomPoly>> entries;  // row-major
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;

  std::size_t rows() const noexcept { return row_degrees.size(); }
  std::size_t cols() const noexcept { return col_degrees.size(); }
  const UniHomPoly& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  UniHomPoly& operator()(std::size_t i, std::size_t j) { return entries[i][j]; }
  std::vector<UniHomPoly> column(std::size_t j) const;
  // Degree of the entries of column j (meaningful when all rows share a degree).
  int entry_degree(std::size_t j, std::size_t i = 0) const { return col_degrees[j] - row_degrees[i]; }
  bool has_unit_entry() const;
};

struct HBData {
  std::vector<UniHomPoly> gens;
  GradedSyzMatrix matrix;
  bool normalized = false;
};

// Determinant of a square matrix of binary forms (Laplace expansion).
UniHomPoly poly_det(const std::vector<std::vector<UniHomPoly>>& m);
// (-1)^i det(matrix with row i deleted), for each i.
std::vector<UniHomPoly> signed_minors(const GradedSyzMatrix& m);
// gens · matrix as a row of forms.
std::vector<UniHomPoly> row_times(const std::vector<UniHomPoly>& row, const GradedSyzMatrix& m);

// Minimal graded syzygies of gens (formal degrees given; zero entries allowed),
// sorted by (degree, number of nonzero entries, first nonzero row). Throws HypothesisError if the nonzero
// gens share a factor, CertificateError if the Hilbert-Burch shape is not reached.
GradedSyzMatrix min_graded_syzygies(const std::vector<UniHomPoly>& gens, const std::vector<int>& degrees);

// Resolution normalized so the signed maximal minors equal gens.
HBData hilbert_burch(const std::vector<UniHomPoly>& gens, const std::vector<int>& degrees);

// As hilbert_burch for 2..4 forms of a common degree, and additionally minimal.
HBData hilbert_burch_psi(const std::vector<UniHomPoly>& g);

// φ_j: normalized resolution of the entries of column j of ψ.
std::vector<HBData> column_resolutions(const HBData& psi);

// C_iᵀ φ_j as a row of forms (0-based i, j).
std::vector<UniHomPoly> column_times(const HBData& psi, std::size_t i, const HBData& phi_j);

// γ_ij for the pairs (1,2), (1,3), (2,3), keyed 1-based.
std::map<std::pair<int, int>, HBData> gamma_matrices(const HBData& psi, const std::vector<HBData>& phis);

// Exact check of gens·matrix = 0 and of the signed-minor reconstruction.
bool verify_resolution(const HBData& hb);

}  // namespace tpsurf
