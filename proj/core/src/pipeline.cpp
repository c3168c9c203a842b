#include "tpsurf/pipeline.hpp"

#include <string>

namespace tpsurf {

BasepointViolation::BasepointViolation(BasepointReport r)
    : HypothesisError(std::string("basepoint check: ") + to_string(r.status) +
                      (r.detail.empty() ? "" : " (" + r.detail + ")")),
      report_(std::move(r)) {}

namespace {

SurfaceInput working_input(const SurfaceInput& in, Side side) {
  validate_input(in);
  return side == Side::ST ? mirror(in) : in;
}

}  // namespace

AnalysisResult analyze_surface(const SurfaceInput& in, const PipelineOptions& opt) {
  AnalysisResult r;
  r.working = working_input(in, opt.side);
  r.analysis = analyze(r.working);
  CaseOptions co;
  co.conv = opt.conv;
  co.verify_identities = opt.verify_identities;
  co.seed = opt.seed;
  r.cases = run_case(r.analysis, r.working, co);
  return r;
}

ImplicitResult implicitize(const SurfaceInput& in, const PipelineOptions& opt) {
  ImplicitResult r;
  r.input = in;
  r.side = opt.side;
  r.working = working_input(in, opt.side);

  r.basepoint = basepoint_check(r.working, opt.seed);
  if (r.basepoint.status == BasepointStatus::Found ||
      (r.basepoint.status == BasepointStatus::Undetermined && !opt.force))
    throw BasepointViolation(r.basepoint);

  auto ar = analyze_surface(in, opt);
  r.analysis = std::move(ar.analysis);
  r.cases = std::move(ar.cases);
  r.strand = build_d1_strand(r.cases);

  EliminationOptions eo;
  eo.seed = opt.seed;
  r.oracle = implicit_by_elimination(r.working, eo);
  if (opt.cross_check) r.vanishes = vanishes_on(r.oracle.F, r.working.gens, r.working.a, r.working.b);

  r.verify = verify_implicitization(r.oracle.F, r.strand, opt.points, opt.seed);
  if (!r.verify.ok) throw CertificateError("determinant certificate failed: " + r.verify.message);

  if (opt.det_mode == DetMode::Interpolate) {
    ReconstructOptions ro;
    ro.cap = opt.interpolate_cap;
    ro.threads = opt.threads;
    ro.seed = opt.seed;
    r.det = reconstruct_det(r.strand, ro);
    XPoly q = *r.det;
    for (int i = 0; i < r.verify.d; ++i) {
      auto next = XPoly::divide_exact(q, r.oracle.F);
      if (!next) throw CertificateError("det is not divisible by F^" + std::to_string(r.verify.d));
      q = std::move(*next);
    }
    if (!(q == XPoly(r.verify.c)))
      throw CertificateError("det / F^d is not the fitted constant c = " + std::to_string(r.verify.c.value()));
  }
  return r;
}

}  // namespace tpsurf
