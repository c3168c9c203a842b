#pragma once

#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/hburch.hpp"
#include "tpsurf/linalg.hpp"

namespace tpsurf {

struct SylvesterMatrix {
  UniHomPoly f, g;
  FieldMatrix matrix;  // n shifted rows of f, then m shifted rows of g
  Fp resultant() const { return det_field(matrix); }
};

// Throws std::invalid_argument on a zero form.
SylvesterMatrix sylvester(const UniHomPoly& f, const UniHomPoly& g);

struct TwoGenCertificate {
  BiPoly target;
  UniHomPoly h0, h1;
  BiPoly q0, q1;  // target = q0·h0 + q1·h1
};

// Solves target (bidegree (c,d)) = q0·h0 + q1·h1 one s,t-monomial at a time.
// Throws HypothesisError if d < deg h0 + deg h1 - 1 or gcd(h0,h1) != 1.
TwoGenCertificate two_gen_solve(const BiPoly& target, BiDegree bd, const UniHomPoly& h0, const UniHomPoly& h1,
                                FreeConvention conv = FreeConvention::Zero);

// Unique α with fprime = ψ·α; fprime has bidegree (a,b), α_j bidegree (a, b - μ_j).
// Throws CertificateError if fprime is not a syzygy on ψ's generators, or the
// system is inconsistent or not uniquely solvable.
std::vector<BiPoly> psi_solve(const std::vector<BiPoly>& fprime, const HBData& psi, int a, int b);

// Matrix of binary forms times a column of BiPoly.
std::vector<BiPoly> apply_matrix(const GradedSyzMatrix& m, const std::vector<BiPoly>& x);

}  // namespace tpsurf
