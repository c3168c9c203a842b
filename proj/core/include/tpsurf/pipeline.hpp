#pragma once

#include <cstdint>
#include <optional>

#include "tpsurf/cases.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/strand.hpp"
#include "tpsurf/syzygy.hpp"

namespace tpsurf {

enum class Side { UV, ST };
enum class DetMode { Eval, Interpolate };

struct PipelineOptions {
  Side side = Side::UV;
  DetMode det_mode = DetMode::Eval;
  bool force = false;         // proceed on an Undetermined basepoint report
  bool cross_check = false;   // exact vanishing test of the oracle F on the surface
  FreeConvention conv = FreeConvention::Zero;
  bool verify_identities = true;
  unsigned threads = 1;
  std::uint64_t seed = FieldConfig{}.seed;
  int points = 40;
  int interpolate_cap = 24;
};

// Basepoint report that stops the pipeline (Found, or Undetermined without force).
class BasepointViolation : public HypothesisError {
 public:
  explicit BasepointViolation(BasepointReport r);
  const BasepointReport& report() const noexcept { return report_; }

 private:
  BasepointReport report_;
};

struct ImplicitResult {
  SurfaceInput input;      // as given
  SurfaceInput working;    // mirrored when side = st
  Side side = Side::UV;
  BasepointReport basepoint;
  VAnalysis analysis;
  CaseResult cases;
  StrandMatrix strand;
  EliminationResult oracle;
  VerifyReport verify;
  std::optional<XPoly> det;       // interpolate mode
  std::optional<bool> vanishes;   // cross_check

  const XPoly& F() const { return oracle.F; }
  int d() const { return verify.d; }
  Fp c() const { return verify.c; }
};

// Analysis and case construction only (no strand, no oracle).
struct AnalysisResult {
  SurfaceInput working;
  VAnalysis analysis;
  CaseResult cases;
};
AnalysisResult analyze_surface(const SurfaceInput& in, const PipelineOptions& opt = {});

// Full pipeline. Throws BasepointViolation / HypothesisError on inputs outside
// the hypotheses and CertificateError when the determinant certificate fails.
ImplicitResult implicitize(const SurfaceInput& in, const PipelineOptions& opt = {});

}  // namespace tpsurf
