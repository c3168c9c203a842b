#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/cases.hpp"
#include "tpsurf/linalg.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

using LinearForm = std::array<Fp, 4>;  // coefficients of x0..x3

struct StrandColumn {
  std::size_t syzygy = 0;
  Monomial multiplier;
};

// Matrix of (d₁)_{(2a-1,b-1)}: rows monomial_basis(2a-1,b-1), columns (syzygy, multiplier).
struct StrandMatrix {
  int a = 0, b = 0;
  std::size_t size = 0;
  std::vector<Monomial> rows;
  std::vector<StrandColumn> cols;
  std::vector<LinearForm> entries;  // row-major size x size

  const LinearForm& operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  FieldMatrix at(const XPoint& x) const;
};

// Builds from syzygies expressed on the input generators (x_i pairs with p_i).
// Throws HypothesisError if the matrix is not square.
StrandMatrix build_d1_strand(const std::vector<SyzygyColumn>& syzygies, int a, int b);
inline StrandMatrix build_d1_strand(const CaseResult& r) { return build_d1_strand(r.original, r.a, r.b); }

Fp eval_det(const StrandMatrix& m, const XPoint& x);

struct ReconstructOptions {
  int cap = 24;           // maximum 2ab
  unsigned threads = 1;
  std::uint64_t seed = FieldConfig{}.seed;
  int spot_checks = 10;
};

// Exact det as a homogeneous polynomial of degree 2ab, by tensor-grid
// interpolation of the dehomogenization x0 = 1. Throws on cap overflow or
// failed spot checks (CertificateError).
XPoly reconstruct_det(const StrandMatrix& m, const ReconstructOptions& opt = {});

XPoint random_point(std::mt19937_64& rng);

}  // namespace tpsurf
