#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/strand.hpp"
#include "tpsurf/syzygy.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

struct EliminationOptions {
  int cap_e = -1;              // < 0: 2ab
  bool divisors_only = true;   // try divisors of 2ab first (exact under the basepoint-free hypothesis)
  std::uint64_t seed = FieldConfig{}.seed;
};

struct EliminationResult {
  int e = 0;
  XPoly F;                     // first canonical kernel vector, made monic
  std::size_t kernel_dim = 0;
};

// Smallest e with a nonzero kernel of x^β ↦ Π p_i^{β_i}. Throws HypothesisError
// if none exists up to the cap.
EliminationResult implicit_by_elimination(const SurfaceInput& in, const EliminationOptions& opt = {});

// Exact test F(p0,p1,p2,p3) = 0 by evaluation on a unisolvent grid of bidegree (e·a, e·b).
bool vanishes_on(const XPoly& F, const GenList& gens, int a, int b);

struct VerifyReport {
  bool ok = false;
  int degF = 0;
  int d = 0;           // det = c·F^d
  Fp c;
  int points_checked = 0;
  int points_passed = 0;
  std::string message;
};

VerifyReport verify_implicitization(const XPoly& F, const StrandMatrix& strand, int points = 40,
                                    std::uint64_t seed = FieldConfig{}.seed);

enum class BasepointStatus { Free, Undetermined, Found };
const char* to_string(BasepointStatus s);

struct ProjectivePoint {
  Fp x, y;  // (x : y)
};

struct BasepointReport {
  BasepointStatus status = BasepointStatus::Undetermined;
  UniHomPoly G_uv;   // gcd of resultants w.r.t. (u,v): a form in (s,t), printed with s,t
  UniHomPoly G_st;   // gcd of resultants w.r.t. (s,t): a form in (u,v)
  std::vector<ProjectivePoint> candidates_st;   // base-field roots of G_uv as (s:t)
  std::vector<ProjectivePoint> candidates_uv;   // base-field roots of G_st as (u:v)
  std::string detail;                           // for Found: where and what was found
};

BasepointReport basepoint_check(const SurfaceInput& in, std::uint64_t seed = FieldConfig{}.seed);

// All monomials of degree e in x0..x3, lex descending.
std::vector<XExponent> x_monomials(int e);

}  // namespace tpsurf
