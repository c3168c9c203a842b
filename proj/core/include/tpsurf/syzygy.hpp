#pragma once

#include <array>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/linalg.hpp"

namespace tpsurf {

using GenList = std::array<BiPoly, 4>;

struct SurfaceInput {
  int a = 0, b = 0;
  GenList gens;
  FieldConfig field;
};

// Throws InputError unless all four generators are bihomogeneous of
// bidegree (a,b) and linearly independent.
void validate_input(const SurfaceInput& in);

// s<->u, t<->v, a<->b.
SurfaceInput mirror(const SurfaceInput& in);

struct SyzygyColumn {
  std::array<BiPoly, 4> entries;
  BiDegree bidegree;
};

// Σ entries[i]·gens[i] == 0.
bool annihilates(const SyzygyColumn& s, const GenList& gens);
BiPoly pairing(const SyzygyColumn& s, const GenList& gens);
SyzygyColumn mirror(const SyzygyColumn& s);

struct SyzygySearch {
  int n = 0;
  // Kernel basis; entry i*(n+1)+j is a_ij, the coefficient of u^{n-j}v^j in S_i.
  std::vector<FieldVector> kernel;
};

// Smallest n in [1, cap] with a syzygy of bidegree (0,n); cap < 0 means b.
// Throws HypothesisError if none exists.
SyzygySearch find_minimal_syzygy(const SurfaceInput& in, int cap = -1);

// f_j = Σ_i a_ij p_i. Throws CertificateError if Σ f_j u^{n-j}v^j != 0,
// f_0 = 0 or f_n = 0.
std::vector<BiPoly> build_f_family(const SurfaceInput& in, const FieldVector& column, int n);

struct VAnalysis {
  int n = 0;
  std::size_t kernel_dim = 0;  // dimension of the (0,n) syzygy space
  FieldMatrix A;               // 4 x (n+1), A(i,j) = a_ij
  std::vector<BiPoly> f_family;
  int dimV = 0;
  std::vector<std::size_t> basis_idx;
  FieldMatrix B;  // dimV x (n+1), f = f'·B
  GenList new_gens;
  FieldMatrix T;  // 4 x 4, new_gens = p·T
  std::vector<UniHomPoly> g;  // degree n, [g; 0] annihilates new_gens
};

VAnalysis analyze_V(const SurfaceInput& in, const FieldVector& column, int n, std::vector<BiPoly> f_family);

// find_minimal_syzygy + build_f_family + analyze_V on the first kernel vector.
VAnalysis analyze(const SurfaceInput& in, int cap = -1);

// A syzygy on new_gens expressed on the original generators: S -> T·S.
SyzygyColumn to_original(const SyzygyColumn& s, const FieldMatrix& T);

}  // namespace tpsurf
