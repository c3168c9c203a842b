#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpsurf/hburch.hpp"
#include "tpsurf/linalg.hpp"
#include "tpsurf/membership.hpp"
#include "tpsurf/syzygy.hpp"

namespace tpsurf {

enum class CaseTag { Dim2, Dim3, Dim4 };
const char* to_string(CaseTag t);

struct CaseOptions {
  FreeConvention conv = FreeConvention::Zero;
  bool verify_identities = true;  // off: only the syzygy property is checked
  std::uint64_t seed = FieldConfig{}.seed;
};

struct IdentityCheck {
  std::string name;
  bool ok = false;
};

struct CaseResult {
  CaseTag tag = CaseTag::Dim2;
  int a = 0, b = 0, n = 0;
  std::vector<int> mu;                    // dim3: {μ}; dim4: {μ₁, μ₂}
  std::vector<SyzygyColumn> syzygies;     // S, S₁, S₂[, S₃] on new_gens
  std::vector<SyzygyColumn> original;     // the same on the input generators
  GenList new_gens;
  std::vector<int> expected_counts;

  std::vector<BiPoly> alpha;              // dim2: {α}
  std::optional<HBData> psi;
  std::vector<HBData> phis;
  std::map<std::pair<int, int>, HBData> gammas;
  // Decomposition pairs keyed "q","r","m","n" (dim2/dim3) or "a2","a3","b3","b1","c2","c1" (dim4).
  std::map<std::string, TwoGenCertificate> pairs;
  std::vector<std::pair<BiPoly, BiPoly>> theta;  // dim3: rows of Θ
  BiPoly H;                                       // dim4
  std::vector<int> h_signs;                       // dim4: signs of the (a,c), (b,c), (a,b) terms of H
  std::vector<BiPoly> N;                          // kernel vector of M = [S|S₁|S₂|S₃]
  std::vector<IdentityCheck> checks;
};

// Throws HypothesisError when b < 2n-1.
CaseResult run_dim2(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt = {});
CaseResult run_dim3(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt = {});
CaseResult run_dim4(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt = {});
// Dispatch on v.dimV.
CaseResult run_case(const VAnalysis& v, const SurfaceInput& in, const CaseOptions& opt = {});

// (2a-1-c+1)(b-1-d+1) clamped at 0 per syzygy of bidegree (c,d).
// Throws HypothesisError if the sum differs from 2ab.
std::vector<int> expected_column_counts(const CaseResult& r, int a, int b);

// Randomized coprimality of two bihomogeneous forms (specializing each factor pair).
bool coprime_forms(const BiPoly& x, const BiPoly& y, std::mt19937_64& rng);

// Graded product of matrices of binary forms.
GradedSyzMatrix multiply(const GradedSyzMatrix& x, const GradedSyzMatrix& y);

}  // namespace tpsurf
