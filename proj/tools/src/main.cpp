#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "job.hpp"
#include "report.hpp"
#include "tpsurf/errors.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/golden.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"

using namespace tpsurf;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kHypothesis = 2, kCertificate = 3 };

struct Common {
  std::string job = "-";
  bool json_out = false;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::string side;
  bool force = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("job", c.job, "job file (JSON), - for stdin")->required();
  sub->add_flag("--json", c.json_out, "emit a JSON report");
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  sub->add_option("--seed", c.seed, "seed for randomized checks");
  sub->add_option("--side", c.side, "syzygy side: uv (default) or st")->check(CLI::IsMember({"uv", "st"}));
  sub->add_flag("--force", c.force, "proceed when the basepoint check is inconclusive");
}

void apply_common(const Common& c, cli::Job& job) {
  if (c.seed) job.options.seed = *c.seed;
  if (!c.side.empty()) job.options.side = c.side == "st" ? Side::ST : Side::UV;
  if (c.force) job.options.force = true;
  if (c.threads) job.options.threads = *c.threads;
}

int cmd_analyze(const Common& c) {
  cli::Job job = cli::read_job(c.job);
  apply_common(c, job);
  const SurfaceInput in = cli::load_input(job);
  const AnalysisResult r = analyze_surface(in, job.options);
  if (c.json_out)
    std::cout << cli::to_json(r).dump(2) << "\n";
  else
    cli::print_analysis(std::cout, r);
  return kOk;
}

int cmd_implicitize(const Common& c, const std::string& det_mode, bool oracle) {
  cli::Job job = cli::read_job(c.job);
  apply_common(c, job);
  if (!det_mode.empty()) job.options.det_mode = det_mode == "interpolate" ? DetMode::Interpolate : DetMode::Eval;
  job.oracle = job.oracle || oracle;
  job.options.cross_check = job.oracle;
  const SurfaceInput in = cli::load_input(job);
  const ImplicitResult r = implicitize(in, job.options);
  if (c.json_out)
    std::cout << cli::to_json(r, job.oracle).dump(2) << "\n";
  else
    cli::print_implicit(std::cout, r, job.oracle);
  return kOk;
}

int cmd_verify(const Common& c) {
  cli::Job job = cli::read_job(c.job);
  apply_common(c, job);
  const SurfaceInput in = cli::load_input(job);
  const SurfaceInput w = job.options.side == Side::ST ? mirror(in) : in;

  EliminationOptions eo;
  eo.seed = job.options.seed;
  const EliminationResult el = implicit_by_elimination(w, eo);
  const bool vanishes = vanishes_on(el.F, w.gens, w.a, w.b);

  PipelineOptions po = job.options;
  const AnalysisResult ar = analyze_surface(in, po);
  const StrandMatrix sm = build_d1_strand(ar.cases);
  const VerifyReport rep = verify_implicitization(el.F, sm, po.points, po.seed);
  const bool ok = vanishes && rep.ok;

  if (c.json_out) {
    json j{{"oracle", {{"e", el.e}, {"kernel_dim", el.kernel_dim}, {"vanishes_on_surface", vanishes}}},
           {"F", cli::to_json(el.F)},
           {"strand_size", sm.size},
           {"deg_phi", rep.d},
           {"c", rep.c.signed_value()},
           {"points_checked", rep.points_checked},
           {"points_passed", rep.points_passed},
           {"status", ok ? "PASS" : "FAIL"}};
    if (!rep.message.empty()) j["message"] = rep.message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "oracle: e = " << el.e << ", kernel dim = " << el.kernel_dim
              << ", vanishes on surface = " << (vanishes ? "yes" : "no") << "\n";
    std::cout << "F = " << el.F.to_string() << "\n";
    std::cout << "strand = " << sm.size << " x " << sm.size << "\n";
    std::cout << "deg phi = " << rep.d << ", c = " << rep.c.signed_value() << "\n";
    std::cout << "det = c*F^d at " << rep.points_passed << "/" << rep.points_checked << " points\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (!ok) {
    std::cerr << "verify: " << (rep.message.empty() ? "oracle F does not vanish on the surface" : rep.message) << "\n";
    return kCertificate;
  }
  return kOk;
}

struct GenArgs {
  int a = 0, b = 0, n = 0, dimv = 0;
  std::vector<int> mu;
  std::uint64_t seed = FieldConfig{}.seed;
  std::uint32_t prime = FieldConfig{}.p;
  int retries = 200;
  bool scramble = false;
  std::string out;
};

int cmd_generate(const GenArgs& g) {
  if (!field::is_prime(g.prime) || g.prime < 3) throw InputError("generate: prime must be an odd prime");
  field::set_modulus(g.prime);
  GenSpec spec;
  spec.a = g.a;
  spec.b = g.b;
  spec.n = g.n;
  spec.dimV = g.dimv;
  spec.mu = g.mu;
  spec.seed = g.seed;
  spec.max_retries = g.retries;
  spec.scramble = g.scramble;
  const SurfaceInput in = generate(spec);
  const std::string text = cli::job_json(in, &spec).dump(2) + "\n";
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw InputError("cannot write '" + g.out + "'");
    f << text;
  }
  return kOk;
}

int cmd_selftest(unsigned threads, bool json_out) {
  const auto checks = run_selftest(threads);
  bool ok = true;
  json arr = json::array();
  for (const auto& c : checks) {
    ok = ok && c.ok;
    if (json_out)
      arr.push_back({{"name", c.name}, {"ok", c.ok}});
    else
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
  }
  if (json_out) std::cout << json{{"checks", arr}, {"status", ok ? "PASS" : "FAIL"}}.dump(2) << "\n";
  else std::cout << (ok ? "selftest PASS" : "selftest FAIL") << "\n";
  return ok ? kOk : kCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicitization of tensor product surfaces via singly graded syzygies"};
  app.require_subcommand(1);

  Common ca, ci, cv;
  auto* analyze = app.add_subcommand("analyze", "find n, dim V, case and syzygy bidegrees");
  add_common(analyze, ca);

  auto* impl = app.add_subcommand("implicitize", "full pipeline: syzygies, strand, F and certificate");
  add_common(impl, ci);
  std::string det_mode;
  bool oracle = false;
  impl->add_option("--det-mode", det_mode, "eval (point checks) or interpolate (exact det)")
      ->check(CLI::IsMember({"eval", "interpolate"}));
  impl->add_flag("--oracle", oracle, "report oracle details and check F on the surface exactly");

  auto* verify = app.add_subcommand("verify", "elimination oracle plus strand cross-check");
  add_common(verify, cv);

  GenArgs ga;
  auto* gen = app.add_subcommand("generate", "write a random instance with a prescribed profile");
  gen->add_option("--a", ga.a)->required();
  gen->add_option("--b", ga.b)->required();
  gen->add_option("--n", ga.n)->required();
  gen->add_option("--dimv", ga.dimv)->required();
  gen->add_option("--mu", ga.mu, "mu (dim V = 3) or mu1 mu2 (dim V = 4)")->delimiter(',');
  gen->add_option("--seed", ga.seed);
  gen->add_option("--prime", ga.prime);
  gen->add_option("--retries", ga.retries);
  gen->add_flag("--scramble", ga.scramble, "mix the generators by a random invertible matrix");
  gen->add_option("--out", ga.out, "output file (default stdout)");

  unsigned st_threads = 1;
  bool st_json = false;
  auto* self = app.add_subcommand("selftest", "golden suite on the reference instance");
  self->add_option("--threads", st_threads);
  self->add_flag("--json", st_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(ca);
    if (*impl) return cmd_implicitize(ci, det_mode, oracle);
    if (*verify) return cmd_verify(cv);
    if (*gen) return cmd_generate(ga);
    if (*self) return cmd_selftest(st_threads, st_json);
  } catch (const BasepointViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    cli::print_basepoint(std::cerr, e.report());
    if (ci.json_out)
      std::cout << json{{"status", "HYPOTHESIS_VIOLATION"}, {"basepoint", cli::to_json(e.report())}}.dump(2) << "\n";
    return kHypothesis;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kCertificate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCertificate;
  }
  return kUsage;
}
